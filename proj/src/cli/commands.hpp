// Subcommand implementations. Each cmd_* resolves its options (flag wins
// over config file wins over default), runs, and returns the process exit
// code: 0 success, 1 failed property or runtime fault, 2 usage error.
//
// Unset optionals mean "not given on the command line"; the default output
// directory honors the ENTDYN_OUT environment variable.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace entdyn::cli {

inline constexpr const char* kOutDirEnvVar = "ENTDYN_OUT";

struct SampleOptions {
    std::optional<int> qubits;
    std::optional<std::string> p_list; // comma separated decoherence probabilities
    std::optional<double> gamma;       // alternative time parametrization:
    std::optional<std::string> t_list; // p = 1 - exp(-gamma t) per listed t
    std::optional<int> samples;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> split; // "1-vs-rest" or comma-separated qubit indices
    std::optional<int> bins;
    std::optional<std::string> out_dir;
    std::optional<std::string> config_path;
};

struct SweepOptions {
    std::optional<int> qubits_from;
    std::optional<int> qubits_to;
    std::optional<std::string> p_list;
    std::optional<double> gamma;
    std::optional<std::string> t_list;
    std::optional<int> samples;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> synthetic; // "exp-decay" injects std = exp(-N)
    std::optional<std::string> out_dir;
    std::optional<std::string> config_path;
};

struct BoundOptions {
    std::optional<int> dim_a;
    std::optional<int> dim_b;
    std::optional<double> epsilon;
    std::optional<double> eta_channel;
    std::optional<std::string> format; // "text" (default) or "csv"
    bool cross_check = false;
};

struct VerifyOptions {
    std::optional<std::string> suite;
    std::optional<int> trials;
    std::optional<std::uint64_t> seed;
};

struct ReproduceOptions {
    bool fast = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::optional<std::string> config_path;
};

int cmd_sample(const SampleOptions& options);
int cmd_sweep(const SweepOptions& options);
int cmd_bound(const BoundOptions& options);
int cmd_verify(const VerifyOptions& options);
int cmd_reproduce_fig2(const ReproduceOptions& options);

} // namespace entdyn::cli
