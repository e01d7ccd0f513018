// Command-line front end: deterministic negativity ensembles, concentration
// bound evaluation, property verification, and figure reproduction.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "entdyn/version.hpp"

namespace {

using entdyn::cli::BoundOptions;
using entdyn::cli::cmd_bound;
using entdyn::cli::cmd_reproduce_fig2;
using entdyn::cli::cmd_sample;
using entdyn::cli::cmd_sweep;
using entdyn::cli::cmd_verify;
using entdyn::cli::ReproduceOptions;
using entdyn::cli::SampleOptions;
using entdyn::cli::SweepOptions;
using entdyn::cli::VerifyOptions;

struct FlagBuffer {
    int qubits = 0;
    int qubits_from = 0;
    int qubits_to = 0;
    std::string p_list;
    double gamma = 0.0;
    std::string t_list;
    int samples = 0;
    std::uint64_t seed = 0;
    std::string split;
    int bins = 0;
    std::string out_dir;
    std::string config_path;
    std::string synthetic;
    int dim_a = 0;
    int dim_b = 0;
    double epsilon = 0.0;
    double eta_channel = 0.0;
    std::string format;
    std::string suite;
    int trials = 0;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"negativity ensembles, decoherence channels, and concentration bounds"};
    app.set_version_flag("--version", std::string(entdyn::kVersion));
    app.require_subcommand(1);

    FlagBuffer f;
    int exit_code = 0;

    // ---- sample ------------------------------------------------------------
    auto* sample = app.add_subcommand(
        "sample", "draw random states, dephase them, and histogram the negativity");
    auto* sa_qubits = sample->add_option("--qubits", f.qubits, "register size N");
    auto* sa_p = sample->add_option("--p", f.p_list, "comma-separated decoherence probabilities");
    auto* sa_gamma = sample->add_option("--gamma", f.gamma, "decoherence rate (with --t)");
    auto* sa_t = sample->add_option("--t", f.t_list, "comma-separated times (with --gamma)");
    auto* sa_samples = sample->add_option("--samples", f.samples, "ensemble size [1000]");
    auto* sa_seed = sample->add_option("--seed", f.seed, "master seed [42]");
    auto* sa_split =
        sample->add_option("--split", f.split, "\"1-vs-rest\" or comma-separated side-A qubits");
    auto* sa_bins = sample->add_option("--bins", f.bins, "histogram bins [50]");
    auto* sa_out = sample->add_option("--out", f.out_dir, "output directory [$ENTDYN_OUT or .]");
    auto* sa_config = sample->add_option("--config", f.config_path,
                                         "JSON config or manifest; flags win over file values");
    sample->callback([&] {
        SampleOptions o;
        if (sa_qubits->count() > 0) o.qubits = f.qubits;
        if (sa_p->count() > 0) o.p_list = f.p_list;
        if (sa_gamma->count() > 0) o.gamma = f.gamma;
        if (sa_t->count() > 0) o.t_list = f.t_list;
        if (sa_samples->count() > 0) o.samples = f.samples;
        if (sa_seed->count() > 0) o.seed = f.seed;
        if (sa_split->count() > 0) o.split = f.split;
        if (sa_bins->count() > 0) o.bins = f.bins;
        if (sa_out->count() > 0) o.out_dir = f.out_dir;
        if (sa_config->count() > 0) o.config_path = f.config_path;
        exit_code = cmd_sample(o);
    });

    // ---- sweep -------------------------------------------------------------
    auto* sweep = app.add_subcommand(
        "sweep", "scan register sizes and fit the decay of the negativity spread");
    auto* sw_from = sweep->add_option("--qubits-from", f.qubits_from, "smallest N [2]");
    auto* sw_to = sweep->add_option("--qubits-to", f.qubits_to, "largest N [6]");
    auto* sw_p = sweep->add_option("--p", f.p_list, "comma-separated probabilities [0,0.3,0.5]");
    auto* sw_gamma = sweep->add_option("--gamma", f.gamma, "decoherence rate (with --t)");
    auto* sw_t = sweep->add_option("--t", f.t_list, "comma-separated times (with --gamma)");
    auto* sw_samples = sweep->add_option("--samples", f.samples, "ensemble size per N [1000]");
    auto* sw_seed = sweep->add_option("--seed", f.seed, "master seed [42]");
    auto* sw_synth = sweep->add_option("--synthetic", f.synthetic,
                                       "inject synthetic data instead of sampling (exp-decay)");
    auto* sw_out = sweep->add_option("--out", f.out_dir, "output directory [$ENTDYN_OUT or .]");
    auto* sw_config = sweep->add_option("--config", f.config_path,
                                        "JSON config or manifest; flags win over file values");
    sweep->callback([&] {
        SweepOptions o;
        if (sw_from->count() > 0) o.qubits_from = f.qubits_from;
        if (sw_to->count() > 0) o.qubits_to = f.qubits_to;
        if (sw_p->count() > 0) o.p_list = f.p_list;
        if (sw_gamma->count() > 0) o.gamma = f.gamma;
        if (sw_t->count() > 0) o.t_list = f.t_list;
        if (sw_samples->count() > 0) o.samples = f.samples;
        if (sw_seed->count() > 0) o.seed = f.seed;
        if (sw_synth->count() > 0) o.synthetic = f.synthetic;
        if (sw_out->count() > 0) o.out_dir = f.out_dir;
        if (sw_config->count() > 0) o.config_path = f.config_path;
        exit_code = cmd_sweep(o);
    });

    // ---- bound -------------------------------------------------------------
    auto* bound =
        app.add_subcommand("bound", "evaluate the concentration tail bound for a bipartition");
    auto* bo_da = bound->add_option("--dA", f.dim_a, "dimension of the smaller side");
    auto* bo_db = bound->add_option("--dB", f.dim_b, "dimension of the larger side");
    auto* bo_eps = bound->add_option("--epsilon", f.epsilon, "deviation from the mean");
    auto* bo_eta = bound->add_option("--eta-channel", f.eta_channel,
                                     "channel contraction coefficient in (0,1] [1]");
    auto* bo_format = bound->add_option("--format", f.format, "text or csv [text]");
    auto* bo_check = bound->add_flag("--cross-check",
                                     "assert the two algebraic forms of the bound agree");
    bound->callback([&] {
        BoundOptions o;
        if (bo_da->count() > 0) o.dim_a = f.dim_a;
        if (bo_db->count() > 0) o.dim_b = f.dim_b;
        if (bo_eps->count() > 0) o.epsilon = f.epsilon;
        if (bo_eta->count() > 0) o.eta_channel = f.eta_channel;
        if (bo_format->count() > 0) o.format = f.format;
        o.cross_check = bo_check->count() > 0;
        exit_code = cmd_bound(o);
    });

    // ---- verify ------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run the property suites");
    auto* ve_suite = verify->add_option(
        "--suite", f.suite, "contraction, lipschitz, chain, haar, or all [all]");
    auto* ve_trials = verify->add_option("--trials", f.trials, "trials per configuration [100]");
    auto* ve_seed = verify->add_option("--seed", f.seed, "seed [7]");
    verify->callback([&] {
        VerifyOptions o;
        if (ve_suite->count() > 0) o.suite = f.suite;
        if (ve_trials->count() > 0) o.trials = f.trials;
        if (ve_seed->count() > 0) o.seed = f.seed;
        exit_code = cmd_verify(o);
    });

    // ---- reproduce-fig2 ----------------------------------------------------
    auto* reproduce = app.add_subcommand(
        "reproduce-fig2", "emit the histogram panels and the spread-scaling panel");
    auto* re_fast =
        reproduce->add_flag("--fast", "1000 samples and N capped at 6 (minutes, not hours)");
    auto* re_seed = reproduce->add_option("--seed", f.seed, "master seed [42]");
    auto* re_out =
        reproduce->add_option("--out", f.out_dir, "output directory [$ENTDYN_OUT or .]");
    auto* re_config = reproduce->add_option("--config", f.config_path,
                                            "JSON config or manifest; flags win over file values");
    reproduce->callback([&] {
        ReproduceOptions o;
        o.fast = re_fast->count() > 0;
        if (re_seed->count() > 0) o.seed = f.seed;
        if (re_out->count() > 0) o.out_dir = f.out_dir;
        if (re_config->count() > 0) o.config_path = f.config_path;
        exit_code = cmd_reproduce_fig2(o);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message
        return 2;
    }
    return exit_code;
}
