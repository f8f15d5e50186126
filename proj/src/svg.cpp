#include "dcsim/results_io.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include <fmt/format.h>

namespace dcsim {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

constexpr std::string_view kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                         "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

struct Series {
    std::string label;
    std::vector<double> y;
};

// Maps data coordinates to the plot rectangle.
struct Frame {
    double x_min, x_max, y_min, y_max;

    double px(double x) const {
        const double span = x_max > x_min ? x_max - x_min : 1.0;
        return kLeft + (x - x_min) / span * (kWidth - kLeft - kRight);
    }
    double py(double y) const {
        const double span = y_max > y_min ? y_max - y_min : 1.0;
        return kHeight - kBottom - (y - y_min) / span * (kHeight - kTop - kBottom);
    }
};

std::string open_svg(std::string_view title, const Frame& f, std::string_view x_label, std::string_view y_label) {
    std::string out = fmt::format(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n"
        "<rect x=\"0\" y=\"0\" width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n"
        "<text x=\"{2}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">{3}</text>\n",
        kWidth, kHeight, kLeft, escape(title));
    out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n", kLeft,
                       kHeight - kBottom, kWidth - kRight);
    out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n", kLeft, kTop,
                       kHeight - kBottom);
    for (int i = 0; i <= 4; ++i) {
        const double y = f.y_min + (f.y_max - f.y_min) * i / 4.0;
        out += fmt::format(
            "<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"10\" "
            "text-anchor=\"end\">{:.3g}</text>\n",
            kLeft - 4, f.py(y) + 3, y);
        const double x = f.x_min + (f.x_max - f.x_min) * i / 4.0;
        out += fmt::format(
            "<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"10\" "
            "text-anchor=\"middle\">{:.3g}</text>\n",
            f.px(x), kHeight - kBottom + 14, x);
    }
    out += fmt::format(
        "<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"12\" "
        "text-anchor=\"middle\">{}</text>\n",
        (kLeft + kWidth - kRight) / 2, kHeight - 12, escape(x_label));
    out += fmt::format(
        "<text x=\"14\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"12\" "
        "transform=\"rotate(-90 14 {:.1f})\" text-anchor=\"middle\">{}</text>\n",
        (kTop + kHeight - kBottom) / 2, (kTop + kHeight - kBottom) / 2, escape(y_label));
    return out;
}

std::string legend(const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const double y = kTop + 16.0 * static_cast<double>(i);
        out += fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"10\" height=\"10\" fill=\"{}\"/>\n",
                           kWidth - kRight + 12, y, kPalette[i % std::size(kPalette)]);
        out += fmt::format(
            "<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
            kWidth - kRight + 26, y + 9, escape(labels[i]));
    }
    return out;
}

std::string line_chart(std::string_view title, std::string_view x_label, std::string_view y_label,
                       const std::vector<double>& x, const std::vector<Series>& series) {
    Frame f{0.0, 1.0, 0.0, 1.0};
    if (!x.empty()) {
        f.x_min = *std::min_element(x.begin(), x.end());
        f.x_max = *std::max_element(x.begin(), x.end());
    }
    double y_max = 0.0;
    for (const auto& s : series) {
        for (double v : s.y) y_max = std::max(y_max, v);
    }
    f.y_max = y_max > 0.0 ? y_max * 1.05 : 1.0;

    std::string out = open_svg(title, f, x_label, y_label);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < series.size(); ++k) {
        std::string points;
        for (std::size_t i = 0; i < x.size() && i < series[k].y.size(); ++i) {
            points += fmt::format("{:.2f},{:.2f} ", f.px(x[i]), f.py(series[k].y[i]));
        }
        out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
                           kPalette[k % std::size(kPalette)], points);
        labels.push_back(series[k].label);
    }
    out += legend(labels);
    out += "</svg>\n";
    return out;
}

}  // namespace

std::string results_svg(const SimulationResult& result) {
    const std::size_t n = result.steps.size();
    Frame f{0.0, n > 1 ? static_cast<double>(n - 1) : 1.0, 0.0, 1.0};
    double y_max = 0.0;
    for (const auto& s : result.steps) y_max = std::max(y_max, s.power.total_w);
    f.y_max = y_max > 0.0 ? y_max * 1.05 : 1.0;

    std::string out = open_svg("Power breakdown", f, "hour", "power (W)");
    std::vector<double> lower(n, 0.0);
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < kComponentCount; ++c) {
        std::vector<double> upper(n);
        for (std::size_t i = 0; i < n; ++i) {
            upper[i] = lower[i] + result.steps[i].power.components()[c];
        }
        std::string points;
        for (std::size_t i = 0; i < n; ++i) {
            points += fmt::format("{:.2f},{:.2f} ", f.px(static_cast<double>(i)), f.py(upper[i]));
        }
        for (std::size_t i = n; i-- > 0;) {
            points += fmt::format("{:.2f},{:.2f} ", f.px(static_cast<double>(i)), f.py(lower[i]));
        }
        out += fmt::format("<polygon fill=\"{}\" fill-opacity=\"0.85\" stroke=\"none\" points=\"{}\"/>\n",
                           kPalette[c % std::size(kPalette)], points);
        labels.emplace_back(to_string(static_cast<Component>(c)));
        lower = std::move(upper);
    }
    out += legend(labels);
    out += "</svg>\n";
    return out;
}

std::string curves_svg(const std::vector<PowerCurve>& curves) {
    std::vector<double> x;
    if (!curves.empty()) {
        for (const auto& p : curves.front().points) x.push_back(p.utilisation);
    }
    std::vector<Series> series;
    for (const auto& c : curves) {
        Series s{fmt::format("{} C", c.temperature_c), {}};
        for (const auto& p : c.points) s.y.push_back(p.total_w);
        series.push_back(std::move(s));
    }
    return line_chart("Total power vs utilisation", "utilisation", "power (W)", x, series);
}

std::string comparison_svg(const ArchitectureComparison& cmp) {
    std::vector<double> x(cmp.times.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<double>(i);
    std::vector<Series> series{{std::string{to_string(cmp.baseline)}, cmp.baseline_cooling_w},
                               {std::string{to_string(cmp.alternative)}, cmp.alternative_cooling_w}};
    return line_chart("Cooling power by architecture", "hour", "power (W)", x, series);
}

}  // namespace dcsim
