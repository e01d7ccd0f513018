// CSV emission helpers. Doubles are rendered with std::to_chars (shortest
// round-trip form), so identical numbers always serialize to identical
// bytes; files are written through a temp-and-rename step so readers never
// observe a partially written table.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "entdyn/concentration.hpp"

namespace entdyn::cli {

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

/// Writes `content` to `path` via a sibling temp file and an atomic rename.
/// Throws Error on any I/O failure; the destination is never left partial.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Raw per-sample table. Header: sample_index,negativity,normalized_negativity
std::string records_csv(const std::vector<SampleRecord>& records);

struct SweepRow {
    int n_qubits;
    double p;
    double mean;
    double std_dev;
    int n_samples;
};

/// Aggregated table. Header: N,p,mean,std,n_samples
std::string sweep_csv(const std::vector<SweepRow>& rows);

} // namespace entdyn::cli
