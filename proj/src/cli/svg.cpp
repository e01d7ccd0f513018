#include "cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "entdyn/errors.hpp"

namespace entdyn::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 610.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 390.0;

const char* const kPalette[] = {"#1f6fb4", "#d95f02", "#2ca02c", "#7b3294", "#b2880d"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

void open_svg(std::string& out, const std::string& title) {
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(kWidth) +
           "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " +
           num(kHeight) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
           "\" fill=\"white\"/>\n";
    out += "<text x=\"" + num(kWidth / 2) + "\" y=\"28\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" + title + "</text>\n";
}

void axes(std::string& out) {
    out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(kRight) +
           "\" y2=\"" + num(kBottom) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(kBottom) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
}

void x_tick(std::string& out, double x, const std::string& label) {
    out += "<line x1=\"" + num(x) + "\" y1=\"" + num(kBottom) + "\" x2=\"" + num(x) +
           "\" y2=\"" + num(kBottom + 5) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + num(x) + "\" y=\"" + num(kBottom + 20) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + label +
           "</text>\n";
}

void y_tick(std::string& out, double y, const std::string& label) {
    out += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(y) + "\" x2=\"" + num(kLeft) +
           "\" y2=\"" + num(y) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + num(kLeft - 9) + "\" y=\"" + num(y + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + label +
           "</text>\n";
}

void axis_labels(std::string& out, const std::string& x_label, const std::string& y_label) {
    out += "<text x=\"" + num((kLeft + kRight) / 2) + "\" y=\"" + num(kHeight - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + x_label +
           "</text>\n";
    out += "<text x=\"18\" y=\"" + num((kTop + kBottom) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 18 " + num((kTop + kBottom) / 2) + ")\">" + y_label +
           "</text>\n";
}

} // namespace

std::string histogram_svg(const Histogram& histogram, const std::string& title) {
    if (histogram.counts.empty() || histogram.edges.size() != histogram.counts.size() + 1) {
        throw Error("histogram_svg: malformed histogram");
    }
    const long peak = std::max(1L, *std::max_element(histogram.counts.begin(),
                                                     histogram.counts.end()));
    const double x_min = histogram.edges.front();
    const double x_max = histogram.edges.back();
    const double x_span = x_max > x_min ? x_max - x_min : 1.0;

    std::string out;
    open_svg(out, title);
    axes(out);

    const auto to_x = [&](double v) {
        return kLeft + (v - x_min) / x_span * (kRight - kLeft);
    };
    const auto to_y = [&](double count) {
        return kBottom - count / static_cast<double>(peak) * (kBottom - kTop);
    };

    for (size_t bin = 0; bin < histogram.counts.size(); ++bin) {
        const long count = histogram.counts[bin];
        if (count == 0) {
            continue;
        }
        const double x0 = to_x(histogram.edges[bin]);
        const double x1 = to_x(histogram.edges[bin + 1]);
        const double y = to_y(static_cast<double>(count));
        out += "<rect x=\"" + num(x0) + "\" y=\"" + num(y) + "\" width=\"" +
               num(std::max(0.5, x1 - x0)) + "\" height=\"" + num(kBottom - y) +
               "\" fill=\"#1f6fb4\" stroke=\"white\" stroke-width=\"0.5\"/>\n";
    }

    for (int t = 0; t <= 5; ++t) {
        const double v = x_min + x_span * t / 5.0;
        x_tick(out, to_x(v), format_double(std::round(v * 1000.0) / 1000.0));
        const long c = peak * t / 5;
        y_tick(out, to_y(static_cast<double>(c)), std::to_string(c));
    }
    axis_labels(out, "negativity", "count");

    out += "</svg>\n";
    return out;
}

std::string scaling_svg(const std::vector<ScalingSeries>& series, const std::string& title) {
    if (series.empty()) {
        throw Error("scaling_svg: no series");
    }
    int n_min = series[0].n_qubits.front();
    int n_max = n_min;
    double s_min = series[0].std_dev.front();
    double s_max = s_min;
    for (const ScalingSeries& s : series) {
        if (s.n_qubits.size() != s.std_dev.size() || s.n_qubits.empty()) {
            throw Error("scaling_svg: malformed series");
        }
        for (const int n : s.n_qubits) {
            n_min = std::min(n_min, n);
            n_max = std::max(n_max, n);
        }
        for (const double v : s.std_dev) {
            if (!(v > 0.0)) {
                throw Error("scaling_svg: std values must be positive on a log axis");
            }
            s_min = std::min(s_min, v);
            s_max = std::max(s_max, v);
        }
    }
    const double log_lo = std::floor(std::log10(s_min));
    const double log_hi = std::ceil(std::log10(s_max));
    const double log_span = log_hi > log_lo ? log_hi - log_lo : 1.0;
    const double n_span = n_max > n_min ? static_cast<double>(n_max - n_min) : 1.0;

    std::string out;
    open_svg(out, title);
    axes(out);

    const auto to_x = [&](double n) {
        return kLeft + (n - n_min) / n_span * (kRight - kLeft);
    };
    const auto to_y = [&](double v) {
        return kBottom - (std::log10(v) - log_lo) / log_span * (kBottom - kTop);
    };

    for (int n = n_min; n <= n_max; ++n) {
        x_tick(out, to_x(n), std::to_string(n));
    }
    for (int dec = static_cast<int>(log_lo); dec <= static_cast<int>(log_hi); ++dec) {
        y_tick(out, to_y(std::pow(10.0, dec)), "1e" + std::to_string(dec));
    }
    axis_labels(out, "qubits N", "std of negativity");

    for (size_t k = 0; k < series.size(); ++k) {
        const ScalingSeries& s = series[k];
        const char* color = kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))];

        // fitted line ln(std) = slope * N + intercept, clipped to the frame
        const double y_at_min = std::exp(s.fit.slope * n_min + s.fit.intercept);
        const double y_at_max = std::exp(s.fit.slope * n_max + s.fit.intercept);
        out += "<line x1=\"" + num(to_x(n_min)) + "\" y1=\"" + num(to_y(y_at_min)) +
               "\" x2=\"" + num(to_x(n_max)) + "\" y2=\"" + num(to_y(y_at_max)) +
               "\" stroke=\"" + color + "\" stroke-width=\"1\" stroke-dasharray=\"5,3\"/>\n";

        for (size_t i = 0; i < s.n_qubits.size(); ++i) {
            out += "<circle cx=\"" + num(to_x(s.n_qubits[i])) + "\" cy=\"" +
                   num(to_y(s.std_dev[i])) + "\" r=\"3.5\" fill=\"" + color + "\"/>\n";
        }

        const double legend_y = kTop + 8.0 + 18.0 * static_cast<double>(k);
        out += "<circle cx=\"" + num(kRight - 120.0) + "\" cy=\"" + num(legend_y) +
               "\" r=\"3.5\" fill=\"" + std::string(color) + "\"/>\n";
        out += "<text x=\"" + num(kRight - 110.0) + "\" y=\"" + num(legend_y + 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"11\">p = " + format_double(s.p) +
               " (slope " + num(s.fit.slope) + ")</text>\n";
    }

    out += "</svg>\n";
    return out;
}

} // namespace entdyn::cli
