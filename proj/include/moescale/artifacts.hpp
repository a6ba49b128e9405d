#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "moescale/paramlaw.hpp"
#include "moescale/surface.hpp"
#include "moescale/synth.hpp"

namespace moescale {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "moescale";
inline constexpr const char* kToolVersion = "0.1.0";

/// Provenance block attached to every artifact: tool version, the command
/// that produced it, and input digests. Digests are stable for identical
/// bytes (FNV-1a 64).
struct ReportMeta {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  ///< (name, digest)
};

Json meta_to_json(const ReportMeta& meta);

std::string fnv1a_digest(const std::string& bytes);
std::string file_digest(const std::filesystem::path& path);

Json surface_fit_to_json(const SurfaceFit& fit);
SurfaceFit surface_fit_from_json(const Json& j);

Json coeffs_to_json(const ScalingLawCoeffs& coeffs);
ScalingLawCoeffs coeffs_from_json(const Json& j);

Json law_fit_to_json(const ScalingLawFit& fit);

/// Accepts a full law artifact, a bare coefficient object, or a surface
/// artifact; used by commands that take a "truth" input.
SynthTruth truth_from_json(const Json& j);

SynthDesign design_from_json(const Json& j);
Json design_to_json(const SynthDesign& design);

Json load_json_file(const std::filesystem::path& path);

/// Write-then-rename so readers never see a partial file.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);
void write_json_atomic(const std::filesystem::path& path, const Json& j);

}  // namespace moescale
