#include "entdyn/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

namespace entdyn {

const double kLevyConstant = 1.0 / (24.0 * std::numbers::pi * std::numbers::pi);

namespace {

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.n_qubits < 2) {
        throw OutOfRange("run_ensemble: need at least 2 qubits");
    }
    if (cfg.split.n_qubits() != cfg.n_qubits) {
        throw DimensionMismatch("run_ensemble: split is for " +
                                std::to_string(cfg.split.n_qubits()) + " qubits, config has " +
                                std::to_string(cfg.n_qubits));
    }
    if (cfg.n_samples < 1) {
        throw OutOfRange("run_ensemble: n_samples must be >= 1");
    }
    if (cfg.histogram_bins < 2) {
        throw OutOfRange("run_ensemble: histogram_bins must be >= 2");
    }
    for (const double p : cfg.p_values) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw OutOfRange("run_ensemble: p " + std::to_string(p) + " outside [0, 1]");
        }
    }
}

Histogram build_histogram(const std::vector<SampleRecord>& records, int bins, double upper) {
    Histogram h;
    h.edges.resize(static_cast<size_t>(bins) + 1);
    h.counts.assign(static_cast<size_t>(bins), 0);
    for (int i = 0; i <= bins; ++i) {
        h.edges[static_cast<size_t>(i)] = upper * i / bins;
    }
    for (const SampleRecord& r : records) {
        int bin = static_cast<int>(r.negativity / upper * bins);
        bin = std::clamp(bin, 0, bins - 1); // the maximal value lands in the last bin
        ++h.counts[static_cast<size_t>(bin)];
    }
    return h;
}

} // namespace

std::vector<EnsembleStatistics> run_ensemble(const ExperimentConfig& cfg, int n_workers) {
    validate_config(cfg);

    if (n_workers <= 0) {
        n_workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }
    n_workers = std::min(n_workers, cfg.n_samples);

    const int dim = 1 << cfg.n_qubits;
    const double neg_max = max_negativity(cfg.split.dim_a());

    std::vector<EnsembleStatistics> results;
    results.reserve(cfg.p_values.size());

    for (const double p : cfg.p_values) {
        const std::vector<QuantumChannel> local(static_cast<size_t>(cfg.n_qubits),
                                                dephasing_qubit(p));
        std::vector<SampleRecord> records(static_cast<size_t>(cfg.n_samples));

        // Workers fill disjoint index ranges; sample `i` always uses stream
        // (master_seed, i), so the outcome is independent of the worker count.
        auto worker = [&](int lo, int hi) {
            for (int i = lo; i < hi; ++i) {
                RngStream rng(cfg.master_seed, static_cast<std::uint64_t>(i));
                const PureState psi = sample_haar_pure(dim, rng);
                const DensityMatrix evolved = apply_local_channels(local, projector(psi));
                const double neg = negativity(evolved, cfg.split);
                records[static_cast<size_t>(i)] =
                    SampleRecord{i, neg, neg / neg_max};
            }
        };

        if (n_workers == 1) {
            worker(0, cfg.n_samples);
        } else {
            std::vector<std::thread> threads;
            std::vector<std::exception_ptr> failures(static_cast<size_t>(n_workers));
            const int chunk = (cfg.n_samples + n_workers - 1) / n_workers;
            for (int w = 0; w < n_workers; ++w) {
                const int lo = w * chunk;
                const int hi = std::min(cfg.n_samples, lo + chunk);
                threads.emplace_back([&, w, lo, hi] {
                    try {
                        worker(lo, hi);
                    } catch (...) {
                        failures[static_cast<size_t>(w)] = std::current_exception();
                    }
                });
            }
            for (std::thread& t : threads) {
                t.join();
            }
            for (const std::exception_ptr& failure : failures) {
                if (failure) {
                    std::rethrow_exception(failure);
                }
            }
        }

        // Ordered reduction by sample index.
        double sum = 0.0;
        for (const SampleRecord& r : records) {
            sum += r.negativity;
        }
        const double mean = sum / cfg.n_samples;
        double sq = 0.0;
        for (const SampleRecord& r : records) {
            const double dev = r.negativity - mean;
            sq += dev * dev;
        }
        const double std_dev = cfg.n_samples > 1 ? std::sqrt(sq / (cfg.n_samples - 1)) : 0.0;

        EnsembleStatistics stats;
        stats.n_qubits = cfg.n_qubits;
        stats.p = p;
        stats.n_samples = cfg.n_samples;
        stats.mean = mean;
        stats.std_dev = std_dev;
        stats.histogram = build_histogram(records, cfg.histogram_bins, neg_max);
        stats.records = std::move(records);
        results.push_back(std::move(stats));
    }
    return results;
}

double levy_bound(const BoundInputs& b) {
    const double c = b.levy_c > 0.0 ? b.levy_c : kLevyConstant;
    if (!(b.epsilon > 0.0)) {
        throw OutOfRange("levy_bound: epsilon must be > 0");
    }
    if (!(b.d >= 1.0)) {
        throw OutOfRange("levy_bound: dimension must be >= 1");
    }
    if (!(b.eta_measure > 0.0)) {
        throw OutOfRange("levy_bound: eta_measure must be > 0");
    }
    if (!(b.eta_channel > 0.0 && b.eta_channel <= 1.0)) {
        throw OutOfRange("levy_bound: eta_channel must be in (0, 1]");
    }
    const double exponent = -c * (2.0 * b.d - 1.0) * b.epsilon * b.epsilon /
                            (4.0 * b.eta_measure * b.eta_measure * b.eta_channel * b.eta_channel);
    return 4.0 * std::exp(exponent);
}

double negativity_bound(double epsilon, int dim_a, int dim_b, double eta_channel) {
    if (dim_a < 2) {
        throw OutOfRange("negativity_bound: dim_a must be >= 2");
    }
    if (dim_b < dim_a) {
        throw OutOfRange("negativity_bound: dim_b must be >= dim_a");
    }
    if (!(epsilon > 0.0)) {
        throw OutOfRange("negativity_bound: epsilon must be > 0");
    }
    if (!(eta_channel > 0.0 && eta_channel <= 1.0)) {
        throw OutOfRange("negativity_bound: eta_channel must be in (0, 1]");
    }
    const double da = dim_a;
    const double db = dim_b;
    const double exponent = -kLevyConstant * (2.0 * da * db - 1.0) * (da - 1.0) * (da - 1.0) *
                            epsilon * epsilon / (4.0 * da * da * eta_channel * eta_channel);
    return 4.0 * std::exp(exponent);
}

double bound_inferred_variance(int dim_a, int dim_b, double eta_channel) {
    if (dim_a < 2 || dim_b < dim_a) {
        throw OutOfRange("bound_inferred_variance: invalid dimensions");
    }
    if (!(eta_channel > 0.0 && eta_channel <= 1.0)) {
        throw OutOfRange("bound_inferred_variance: eta_channel must be in (0, 1]");
    }
    const double eta = lipschitz_normalized_negativity(dim_a);
    const double d = static_cast<double>(dim_a) * dim_b;
    return 2.0 * eta * eta * eta_channel * eta_channel / (kLevyConstant * (2.0 * d - 1.0));
}

double empirical_tail(const EnsembleStatistics& stats, double epsilon) {
    if (stats.records.empty()) {
        return 0.0;
    }
    long outside = 0;
    for (const SampleRecord& r : stats.records) {
        if (std::abs(r.negativity - stats.mean) > epsilon) {
            ++outside;
        }
    }
    return static_cast<double>(outside) / static_cast<double>(stats.records.size());
}

double empirical_tail_normalized(const EnsembleStatistics& stats, double epsilon) {
    if (stats.records.empty()) {
        return 0.0;
    }
    double mean = 0.0;
    for (const SampleRecord& r : stats.records) {
        mean += r.normalized_negativity;
    }
    mean /= static_cast<double>(stats.records.size());
    long outside = 0;
    for (const SampleRecord& r : stats.records) {
        if (std::abs(r.normalized_negativity - mean) > epsilon) {
            ++outside;
        }
    }
    return static_cast<double>(outside) / static_cast<double>(stats.records.size());
}

LinearFit fit_log_std(const std::vector<EnsembleStatistics>& stats_by_n) {
    if (stats_by_n.size() < 3) {
        throw DegenerateData("fit_log_std: need at least 3 points, got " +
                             std::to_string(stats_by_n.size()));
    }
    const size_t count = stats_by_n.size();
    std::vector<double> x(count);
    std::vector<double> y(count);
    for (size_t i = 0; i < count; ++i) {
        if (!(stats_by_n[i].std_dev > 0.0)) {
            throw DegenerateData("fit_log_std: std_dev must be positive at every point");
        }
        x[i] = stats_by_n[i].n_qubits;
        y[i] = std::log(stats_by_n[i].std_dev);
    }

    double mean_x = 0.0;
    double mean_y = 0.0;
    for (size_t i = 0; i < count; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= static_cast<double>(count);
    mean_y /= static_cast<double>(count);

    double sxx = 0.0;
    double sxy = 0.0;
    for (size_t i = 0; i < count; ++i) {
        sxx += (x[i] - mean_x) * (x[i] - mean_x);
        sxy += (x[i] - mean_x) * (y[i] - mean_y);
    }
    if (sxx == 0.0) {
        throw DegenerateData("fit_log_std: all points share one abscissa");
    }

    LinearFit fit{};
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;

    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (size_t i = 0; i < count; ++i) {
        const double predicted = fit.slope * x[i] + fit.intercept;
        ss_res += (y[i] - predicted) * (y[i] - predicted);
        ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
    }
    fit.r_squared = ss_tot > 1e-30 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

} // namespace entdyn
