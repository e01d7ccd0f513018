#include "cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "entdyn/channels.hpp"
#include "entdyn/entanglement.hpp"
#include "entdyn/errors.hpp"
#include "entdyn/rng.hpp"
#include "entdyn/states.hpp"

namespace entdyn::cli {

namespace {

constexpr double kSlack = 1e-9;

PropertyResult contraction_suite(int trials, std::uint64_t seed) {
    RngStream rng(seed, 0);
    double worst = -1.0;
    long checked = 0;
    for (const double p : {0.2, 0.5, 0.9}) {
        for (int n = 1; n <= 4; ++n) {
            const std::vector<QuantumChannel> local(static_cast<size_t>(n), dephasing_qubit(p));
            const int dim = 1 << n;
            for (int trial = 0; trial < trials; ++trial) {
                const DensityMatrix rho = projector(sample_haar_pure(dim, rng));
                const DensityMatrix omega = projector(sample_haar_pure(dim, rng));
                const double before = trace_distance(rho, omega);
                const double after = trace_distance(apply_local_channels(local, rho),
                                                    apply_local_channels(local, omega));
                worst = std::max(worst, after - before);
                ++checked;
            }
        }
    }
    return PropertyResult{"contraction", worst <= kSlack, worst,
                          std::to_string(checked) + " pairs, dephasing p in {0.2,0.5,0.9}, N <= 4"};
}

PropertyResult lipschitz_suite(int trials, std::uint64_t seed) {
    RngStream rng(seed, 1);
    double worst = -1.0;
    long checked = 0;
    for (int n = 2; n <= 5; ++n) {
        const BipartiteSplit split = BipartiteSplit::one_vs_rest(n);
        const double eta = lipschitz_negativity(split.dim_a());
        const std::vector<QuantumChannel> local(static_cast<size_t>(n), dephasing_qubit(0.3));
        const int dim = 1 << n;
        for (int trial = 0; trial < trials; ++trial) {
            DensityMatrix rho = projector(sample_haar_pure(dim, rng));
            DensityMatrix omega = projector(sample_haar_pure(dim, rng));
            if (trial % 2 == 1) { // alternate pure and channel-evolved pairs
                rho = apply_local_channels(local, rho);
                omega = apply_local_channels(local, omega);
            }
            const double lhs = std::abs(negativity(rho, split) - negativity(omega, split));
            worst = std::max(worst, lhs - eta * trace_distance(rho, omega));
            ++checked;
        }
    }
    return PropertyResult{"lipschitz", worst <= kSlack, worst,
                          std::to_string(checked) + " pairs, dims 4..32, pure and evolved"};
}

PropertyResult chain_suite(int trials, std::uint64_t seed) {
    RngStream rng(seed, 2);
    const int n = 3;
    const BipartiteSplit split = BipartiteSplit::one_vs_rest(n);
    const QuantumChannel ch =
        tensor_local_channels(std::vector<QuantumChannel>(n, dephasing_qubit(0.3)));
    double worst = -1.0;
    for (int trial = 0; trial < trials; ++trial) {
        const PureState chi = sample_haar_pure(1 << n, rng);
        const PureState psi = sample_haar_pure(1 << n, rng);
        const ChainReport r = check_entanglement_difference_chain(chi, psi, ch, split);
        worst = std::max({worst, r.difference - r.lipschitz_bound,
                          r.lipschitz_bound - r.contraction_bound,
                          r.contraction_bound - r.euclidean_bound});
    }
    return PropertyResult{"chain", worst <= kSlack, worst,
                          std::to_string(trials) + " pairs, dephasing(0.3) on 3 qubits"};
}

double ks_against_sphere_law(int dim, int draws, RngStream& rng) {
    std::vector<double> xs;
    xs.reserve(static_cast<size_t>(draws));
    for (int i = 0; i < draws; ++i) {
        xs.push_back(std::norm(sample_haar_pure(dim, rng).amplitude(0)));
    }
    std::sort(xs.begin(), xs.end());
    double ks = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        const double cdf = 1.0 - std::pow(1.0 - xs[i], dim - 1);
        const double hi = static_cast<double>(i + 1) / static_cast<double>(xs.size());
        const double lo = static_cast<double>(i) / static_cast<double>(xs.size());
        ks = std::max({ks, std::abs(cdf - hi), std::abs(cdf - lo)});
    }
    return ks;
}

PropertyResult haar_suite(int trials, std::uint64_t seed) {
    RngStream rng(seed, 3);
    const int draws = std::max(trials, 1000);
    // 1% two-sided critical value of the one-sample KS statistic
    const double critical = std::sqrt(-0.5 * std::log(0.005)) / std::sqrt(draws);
    double worst = -1.0;
    for (const int dim : {4, 8}) {
        worst = std::max(worst, ks_against_sphere_law(dim, draws, rng) - critical);
    }
    return PropertyResult{"haar", worst <= 0.0, worst,
                          std::to_string(draws) + " draws per dim in {4,8}, KS at 1%"};
}

} // namespace

std::vector<PropertyResult> run_suite(const std::string& suite, int trials, std::uint64_t seed) {
    if (trials < 1) {
        throw OutOfRange("run_suite: trials must be >= 1");
    }
    std::vector<PropertyResult> results;
    const bool all = suite == "all";
    if (all || suite == "contraction") {
        results.push_back(contraction_suite(trials, seed));
    }
    if (all || suite == "lipschitz") {
        results.push_back(lipschitz_suite(trials, seed));
    }
    if (all || suite == "chain") {
        results.push_back(chain_suite(trials, seed));
    }
    if (all || suite == "haar") {
        results.push_back(haar_suite(trials, seed));
    }
    if (results.empty()) {
        throw OutOfRange("run_suite: unknown suite '" + suite + "'");
    }
    return results;
}

} // namespace entdyn::cli
