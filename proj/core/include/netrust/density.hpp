#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "netrust/record.hpp"

namespace netrust {

inline constexpr std::size_t kDefaultGridPoints = 512;

/// Estimated trust density for one answer scenario, evaluated on a
/// uniform grid spanning [0,1] inclusive.
struct TrustDensity {
    std::string scenario_label;
    std::vector<double> grid;
    std::vector<double> values;
    double bandwidth = 0.0;      // gamma / sqrt(sample_count)
    std::size_t sample_count = 0;
};

/// h = gamma / sqrt(n).
double kde_bandwidth(std::size_t n, double gamma);

/// Closed-form density at one point: Gaussian kernel sum with each sample
/// reflected about 0 and about 1, so boundary mass re-enters [0,1].
double reflected_kde_at(double t, std::span<const double> samples, double bandwidth);

/// Evaluate the reflected-Gaussian KDE on a uniform grid over [0,1].
TrustDensity estimate_density(std::span<const double> samples, double gamma,
                              std::size_t grid_points = kDefaultGridPoints,
                              std::string scenario_label = "");

/// Trapezoidal integral of the density over its grid. Close to 1 for any
/// grid of 512+ points.
double integrate_density(const TrustDensity& d);

void write_density_csv(const TrustDensity& d, std::ostream& out);
nlohmann::json density_to_json(const TrustDensity& d);

}  // namespace netrust
