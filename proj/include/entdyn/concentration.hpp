// Ensemble Monte Carlo over uniformly random initial states, empirical
// statistics of the resulting negativity distributions, and the
// concentration bound evaluators. Ensembles are deterministic for a fixed
// master seed: every sample owns the stream (master_seed, sample_index)
// and aggregation is an ordered reduction, so results do not depend on the
// worker count.

#pragma once

#include <cstdint>
#include <vector>

#include "entdyn/entanglement.hpp"

namespace entdyn {

/// Levy constant 1 / (24 pi^2) used in the concentration bounds.
extern const double kLevyConstant;

struct ExperimentConfig {
    int n_qubits;
    std::vector<double> p_values;
    int n_samples;
    std::uint64_t master_seed;
    BipartiteSplit split;
    int histogram_bins = 50;
};

struct SampleRecord {
    int sample_index;
    double negativity;
    double normalized_negativity;
};

/// Fixed-width bins over [0, max_negativity(dim_a)], so histograms at
/// different p are directly comparable. edges has counts.size() + 1 entries.
struct Histogram {
    std::vector<double> edges;
    std::vector<long> counts;
};

struct EnsembleStatistics {
    int n_qubits;
    double p;
    int n_samples;
    double mean;
    double std_dev; // unbiased, divisor n - 1
    Histogram histogram;
    std::vector<SampleRecord> records;
};

/// One EnsembleStatistics per entry of cfg.p_values. For each p, samples
/// cfg.n_samples uniform pure states, evolves each under per-qubit
/// dephasing(p), and evaluates negativity across cfg.split.
/// n_workers = 0 means one worker per hardware thread.
std::vector<EnsembleStatistics> run_ensemble(const ExperimentConfig& cfg, int n_workers = 0);

struct BoundInputs {
    double epsilon;           // deviation from the mean, > 0
    double d;                 // total dimension
    double eta_measure;       // Lipschitz constant of the quantifier
    double eta_channel = 1.0; // channel contraction coefficient, in (0, 1]
    double levy_c = 0.0;      // 0 selects kLevyConstant
};

/// 4 exp(-C (2d - 1) eps^2 / (4 eta_measure^2 eta_channel^2)).
double levy_bound(const BoundInputs& b);

/// The negativity-specific tail bound for a d_a x d_b bipartition,
/// 4 exp(-C (2 d_a d_b - 1)(d_a - 1)^2 eps^2 / (4 d_a^2 eta_channel^2)).
/// Algebraically equal to levy_bound with d = d_a d_b and
/// eta_measure = d_a / (d_a - 1).
double negativity_bound(double epsilon, int dim_a, int dim_b, double eta_channel = 1.0);

/// Variance of the sub-Gaussian envelope matching the negativity bound:
/// sigma^2 = 2 eta^2 eta_channel^2 / (C (2 d_a d_b - 1)) with
/// eta = d_a / (d_a - 1). Used to compare measured ensemble variances
/// against what the tail bound alone would suggest.
double bound_inferred_variance(int dim_a, int dim_b, double eta_channel = 1.0);

/// Fraction of records whose negativity deviates from the ensemble mean by
/// more than epsilon.
double empirical_tail(const EnsembleStatistics& stats, double epsilon);

/// Same tail for the normalized negativity, the quantity the negativity
/// bound speaks about.
double empirical_tail_normalized(const EnsembleStatistics& stats, double epsilon);

struct LinearFit {
    double slope;
    double intercept;
    double r_squared;
};

/// Ordinary least squares of ln(std_dev) against n_qubits across the given
/// ensembles. Requires at least 3 points with strictly positive std_dev;
/// throws DegenerateData otherwise.
LinearFit fit_log_std(const std::vector<EnsembleStatistics>& stats_by_n);

} // namespace entdyn
