#include "cli/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <system_error>

#include "entdyn/errors.hpp"

namespace entdyn::cli {

std::string format_double(double value) {
    std::array<char, 32> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (result.ec != std::errc{}) {
        throw Error("format_double: conversion failed");
    }
    return std::string(buf.data(), result.ptr);
}

void write_text_file_atomic(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot open " + tmp.string() + " for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw Error("write to " + tmp.string() + " failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error("rename to " + path.string() + " failed");
    }
}

std::string records_csv(const std::vector<SampleRecord>& records) {
    std::string out = "sample_index,negativity,normalized_negativity\n";
    for (const SampleRecord& r : records) {
        out += std::to_string(r.sample_index);
        out += ',';
        out += format_double(r.negativity);
        out += ',';
        out += format_double(r.normalized_negativity);
        out += '\n';
    }
    return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "N,p,mean,std,n_samples\n";
    for (const SweepRow& r : rows) {
        out += std::to_string(r.n_qubits);
        out += ',';
        out += format_double(r.p);
        out += ',';
        out += format_double(r.mean);
        out += ',';
        out += format_double(r.std_dev);
        out += ',';
        out += std::to_string(r.n_samples);
        out += '\n';
    }
    return out;
}

} // namespace entdyn::cli
