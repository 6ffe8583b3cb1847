#pragma once

#include <span>
#include <string>

#include "netrust/density.hpp"
#include "netrust/spectrum.hpp"

namespace netrust {

enum class ScenarioOrdering { by_first_model, lexicographic };

/// Render trust spectra as a standalone SVG document: one polyline per
/// model over a shared scenario axis, y in [0,1]. Byte-deterministic for
/// identical inputs.
std::string render_spectrum_plot(std::span<const TrustSpectrum> spectra,
                                 ScenarioOrdering ordering = ScenarioOrdering::by_first_model);

/// Render trust densities as a standalone SVG document, one curve per
/// density with a legend. Byte-deterministic for identical inputs.
std::string render_density_plot(std::span<const TrustDensity> densities);

}  // namespace netrust
