#include "netrust/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace netrust {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kMarginLeft = 60.0;
constexpr double kMarginRight = 160.0;  // legend column
constexpr double kMarginTop = 30.0;
constexpr double kMarginBottom = 70.0;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

void open_svg(std::ostringstream& svg) {
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
        << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void draw_frame(std::ostringstream& svg) {
    svg << "<rect x=\"" << fmt(kMarginLeft) << "\" y=\"" << fmt(kMarginTop) << "\" width=\""
        << fmt(kWidth - kMarginLeft - kMarginRight) << "\" height=\""
        << fmt(kHeight - kMarginTop - kMarginBottom)
        << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
}

void draw_y_axis(std::ostringstream& svg, double y_max) {
    for (int i = 0; i <= 4; ++i) {
        double frac = i / 4.0;
        double y = kHeight - kMarginBottom - frac * (kHeight - kMarginTop - kMarginBottom);
        svg << "<line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(y) << "\" x2=\""
            << fmt(kWidth - kMarginRight) << "\" y2=\"" << fmt(y)
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << fmt(kMarginLeft - 8) << "\" y=\"" << fmt(y + 4)
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
            << fmt(frac * y_max) << "</text>\n";
    }
}

void draw_legend(std::ostringstream& svg, const std::vector<std::string>& labels) {
    double x = kWidth - kMarginRight + 14.0;
    double y = kMarginTop + 10.0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const char* color = kPalette[i % kPaletteSize];
        svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(x + 22)
            << "\" y2=\"" << fmt(y) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << fmt(x + 28) << "\" y=\"" << fmt(y + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << xml_escape(labels[i])
            << "</text>\n";
        y += 18.0;
    }
}

double x_plot(double frac) {
    return kMarginLeft + frac * (kWidth - kMarginLeft - kMarginRight);
}

double y_plot(double value, double y_max) {
    double frac = y_max > 0.0 ? value / y_max : 0.0;
    return kHeight - kMarginBottom - frac * (kHeight - kMarginTop - kMarginBottom);
}

}  // namespace

std::string render_spectrum_plot(std::span<const TrustSpectrum> spectra,
                                 ScenarioOrdering ordering) {
    if (spectra.empty()) throw std::invalid_argument("no spectra to plot");

    // scenario axis: union across models
    std::set<std::string> union_labels;
    for (const auto& s : spectra)
        for (const auto& [label, e] : s.coefficients) union_labels.insert(label);
    std::vector<std::string> axis(union_labels.begin(), union_labels.end());

    if (ordering == ScenarioOrdering::by_first_model) {
        const auto& first = spectra.front().coefficients;
        std::stable_sort(axis.begin(), axis.end(),
                         [&](const std::string& a, const std::string& b) {
                             auto ia = first.find(a), ib = first.find(b);
                             // scenarios unknown to the first model sort last
                             if (ia == first.end()) return false;
                             if (ib == first.end()) return true;
                             return ia->second.coefficient < ib->second.coefficient;
                         });
    }

    std::map<std::string, std::size_t> position;
    for (std::size_t i = 0; i < axis.size(); ++i) position[axis[i]] = i;
    const double denom = axis.size() > 1 ? static_cast<double>(axis.size() - 1) : 1.0;

    std::ostringstream svg;
    open_svg(svg);
    draw_y_axis(svg, 1.0);
    draw_frame(svg);

    // scenario tick labels, skipped when the axis is crowded
    if (axis.size() <= 40) {
        for (std::size_t i = 0; i < axis.size(); ++i) {
            double x = x_plot(axis.size() == 1 ? 0.5 : i / denom);
            double y = kHeight - kMarginBottom + 12.0;
            svg << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y)
                << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\" "
                << "transform=\"rotate(-45 " << fmt(x) << ' ' << fmt(y) << ")\">"
                << xml_escape(axis[i]) << "</text>\n";
        }
    }

    std::vector<std::string> legend;
    for (std::size_t m = 0; m < spectra.size(); ++m) {
        const auto& s = spectra[m];
        const char* color = kPalette[m % kPaletteSize];
        std::vector<std::pair<double, double>> pts;
        for (const auto& label : axis) {
            auto it = s.coefficients.find(label);
            if (it == s.coefficients.end()) continue;  // missing scenarios skipped
            double xf = axis.size() == 1 ? 0.5 : position[label] / denom;
            pts.emplace_back(x_plot(xf), y_plot(it->second.coefficient, 1.0));
        }
        if (pts.size() == 1) {
            svg << "<circle cx=\"" << fmt(pts[0].first) << "\" cy=\"" << fmt(pts[0].second)
                << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        } else if (!pts.empty()) {
            svg << "<polyline fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < pts.size(); ++i) {
                if (i) svg << ' ';
                svg << fmt(pts[i].first) << ',' << fmt(pts[i].second);
            }
            svg << "\"/>\n";
        }
        legend.push_back(s.model_name.empty() ? "model " + std::to_string(m + 1)
                                              : s.model_name);
    }
    draw_legend(svg, legend);
    svg << "<text x=\"" << fmt((kMarginLeft + kWidth - kMarginRight) / 2) << "\" y=\"18\" "
        << "font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
        << "Trust spectrum</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::string render_density_plot(std::span<const TrustDensity> densities) {
    if (densities.empty()) throw std::invalid_argument("no densities to plot");

    double y_max = 0.0;
    for (const auto& d : densities)
        for (double v : d.values) y_max = std::max(y_max, v);
    if (y_max <= 0.0) y_max = 1.0;

    std::ostringstream svg;
    open_svg(svg);
    draw_y_axis(svg, y_max);
    draw_frame(svg);

    // x ticks over [0,1]
    for (int i = 0; i <= 5; ++i) {
        double frac = i / 5.0;
        double x = x_plot(frac);
        svg << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(kHeight - kMarginBottom + 16)
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
            << fmt(frac) << "</text>\n";
    }

    std::vector<std::string> legend;
    for (std::size_t m = 0; m < densities.size(); ++m) {
        const auto& d = densities[m];
        const char* color = kPalette[m % kPaletteSize];
        svg << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < d.grid.size(); ++i) {
            if (i) svg << ' ';
            svg << fmt(x_plot(d.grid[i])) << ',' << fmt(y_plot(d.values[i], y_max));
        }
        svg << "\"/>\n";
        legend.push_back(d.scenario_label.empty() ? "density " + std::to_string(m + 1)
                                                  : d.scenario_label);
    }
    draw_legend(svg, legend);
    svg << "<text x=\"" << fmt((kMarginLeft + kWidth - kMarginRight) / 2) << "\" y=\"18\" "
        << "font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
        << "Trust density</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace netrust
