#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hamming/construction.hpp"
#include "hamming/verifier.hpp"

namespace hamming {

std::string to_string(VerifyMode mode);      // exhaustive | sampled | counts-only
std::string to_string(CheckState state);     // pass | fail | skipped

// The certificate as bit-exact key=value text (UTF-8, LF, trailing newline).
// Identical certificates serialize to identical bytes on every platform.
std::string certificate_text(const WitnessCertificate& cert);

// The witness induced subgraph as an undirected DOT graph: one node per
// member labeled by its digit string (coordinate 1 first; digits joined with
// '.' when k > 10), side=X/Y as a node attribute, each edge once (emitted
// from its X-side endpoint). Nodes in rank order. Refuses when k^n > limit.
std::string export_dot(const WitnessSpec& w, std::uint64_t limit = 1000);

// Write via temp file + rename so readers never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace hamming
