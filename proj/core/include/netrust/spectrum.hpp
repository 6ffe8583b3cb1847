#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "netrust/trust.hpp"

namespace netrust {

/// All scored records mapped to one answer scenario.
struct ScenarioGroup {
    std::string scenario_label;
    std::vector<ScoredRecord> members;
};

struct SpectrumEntry {
    double coefficient = 0.0;       // mean qa_trust of the scenario, in [0,1]
    std::size_t member_count = 0;
};

/// Per-scenario trust coefficients for one model. Keys sort
/// lexicographically, which fixes the serialization order.
struct TrustSpectrum {
    std::string model_name;
    std::map<std::string, SpectrumEntry> coefficients;

    std::size_t total_count() const;
};

/// Partition scored records by scenario label. Group order is lexicographic,
/// member order preserves input order.
std::vector<ScenarioGroup> group_by_scenario(std::span<const ScoredRecord> scored,
                                             Grouping grouping);

/// Mean qa_trust over the group.
double spectrum_coefficient(const ScenarioGroup& g);

TrustSpectrum trust_spectrum(std::span<const ScoredRecord> scored, Grouping grouping,
                             std::string model_name = "");

/// Expectation of the spectrum coefficients under P(z): empirical scenario
/// frequency or uniform over observed scenarios.
double net_trust_score(const TrustSpectrum& s, Weighting weighting);

void write_spectrum_csv(const TrustSpectrum& s, std::ostream& out);
nlohmann::json spectrum_to_json(const TrustSpectrum& s);

}  // namespace netrust
