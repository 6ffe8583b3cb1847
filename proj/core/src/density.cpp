#include "netrust/density.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "netrust/detail/numfmt.hpp"

namespace netrust {

namespace {

inline double gaussian_kernel(double u) {
    constexpr double inv_sqrt_2pi = 0.3989422804014326779;
    return inv_sqrt_2pi * std::exp(-0.5 * u * u);
}

}  // namespace

double kde_bandwidth(std::size_t n, double gamma) {
    if (n == 0) throw std::invalid_argument("sample count must be >= 1");
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
    return gamma / std::sqrt(static_cast<double>(n));
}

double reflected_kde_at(double t, std::span<const double> samples, double bandwidth) {
    if (samples.empty()) throw std::invalid_argument("no samples");
    if (!(bandwidth > 0.0)) throw std::invalid_argument("bandwidth must be > 0");
    const double h = bandwidth;
    double sum = 0.0;
    // one image per boundary: sample q reflected to -q about 0 and to 2-q about 1
    for (double q : samples) {
        sum += gaussian_kernel((t - q) / h);
        sum += gaussian_kernel((t + q) / h);
        sum += gaussian_kernel((t - (2.0 - q)) / h);
    }
    return sum / (static_cast<double>(samples.size()) * h);
}

TrustDensity estimate_density(std::span<const double> samples, double gamma,
                              std::size_t grid_points, std::string scenario_label) {
    if (samples.empty()) throw std::invalid_argument("no samples for density estimation");
    if (grid_points < 2) throw std::invalid_argument("grid_points must be >= 2");
    for (double q : samples)
        if (!(q >= 0.0 && q <= 1.0))
            throw std::invalid_argument("trust sample outside [0,1]");

    TrustDensity d;
    d.scenario_label = std::move(scenario_label);
    d.sample_count = samples.size();
    d.bandwidth = kde_bandwidth(samples.size(), gamma);
    d.grid.resize(grid_points);
    d.values.resize(grid_points);
    const double step = 1.0 / static_cast<double>(grid_points - 1);
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double t = (i + 1 == grid_points) ? 1.0 : static_cast<double>(i) * step;
        d.grid[i] = t;
        d.values[i] = reflected_kde_at(t, samples, d.bandwidth);
    }
    return d;
}

double integrate_density(const TrustDensity& d) {
    if (d.grid.size() != d.values.size() || d.grid.size() < 2)
        throw std::invalid_argument("malformed density");
    double sum = 0.0;
    for (std::size_t i = 1; i < d.grid.size(); ++i)
        sum += 0.5 * (d.values[i] + d.values[i - 1]) * (d.grid[i] - d.grid[i - 1]);
    return sum;
}

void write_density_csv(const TrustDensity& d, std::ostream& out) {
    out << "t,f\n";
    for (std::size_t i = 0; i < d.grid.size(); ++i)
        out << detail::format_double(d.grid[i]) << ','
            << detail::format_double(d.values[i]) << '\n';
}

nlohmann::json density_to_json(const TrustDensity& d) {
    nlohmann::json j;
    j["scenario_label"] = d.scenario_label;
    j["grid"] = d.grid;
    j["values"] = d.values;
    j["bandwidth"] = d.bandwidth;
    j["sample_count"] = d.sample_count;
    return j;
}

}  // namespace netrust
