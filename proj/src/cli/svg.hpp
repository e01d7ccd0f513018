// Self-contained SVG 1.1 plot writers: negativity histograms and the
// log-scale standard-deviation-vs-size chart with fitted lines. No plotting
// library; the CSV next to each plot carries the raw numbers.

#pragma once

#include <string>
#include <vector>

#include "cli/csv.hpp"
#include "entdyn/concentration.hpp"

namespace entdyn::cli {

/// Bar chart of a negativity histogram.
std::string histogram_svg(const Histogram& histogram, const std::string& title);

struct ScalingSeries {
    double p;
    std::vector<int> n_qubits;
    std::vector<double> std_dev; // strictly positive (log scale)
    LinearFit fit;               // ln(std) = slope * N + intercept
};

/// Scatter of std against qubit count on a logarithmic y axis, one color
/// per series, each with its fitted exponential-decay line.
std::string scaling_svg(const std::vector<ScalingSeries>& series, const std::string& title);

} // namespace entdyn::cli
