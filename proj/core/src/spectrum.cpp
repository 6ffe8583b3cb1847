#include "netrust/spectrum.hpp"

#include <map>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "netrust/detail/numfmt.hpp"

namespace netrust {

std::size_t TrustSpectrum::total_count() const {
    std::size_t n = 0;
    for (const auto& [label, entry] : coefficients) n += entry.member_count;
    return n;
}

std::vector<ScenarioGroup> group_by_scenario(std::span<const ScoredRecord> scored,
                                             Grouping grouping) {
    if (scored.empty()) throw std::invalid_argument("no scored records to group");
    std::map<std::string, std::vector<ScoredRecord>> buckets;
    for (const auto& s : scored) {
        const std::string& key = grouping == Grouping::predicted
                                     ? s.record.predicted_label
                                     : s.record.oracle_label;
        buckets[key].push_back(s);
    }
    std::vector<ScenarioGroup> groups;
    groups.reserve(buckets.size());
    for (auto& [label, members] : buckets)
        groups.push_back({label, std::move(members)});
    return groups;
}

double spectrum_coefficient(const ScenarioGroup& g) {
    if (g.members.empty()) throw std::invalid_argument("scenario group is empty");
    double sum = 0.0;
    for (const auto& m : g.members) sum += m.qa_trust;
    return sum / static_cast<double>(g.members.size());
}

TrustSpectrum trust_spectrum(std::span<const ScoredRecord> scored, Grouping grouping,
                             std::string model_name) {
    TrustSpectrum s;
    s.model_name = std::move(model_name);
    for (const auto& g : group_by_scenario(scored, grouping))
        s.coefficients[g.scenario_label] = {spectrum_coefficient(g), g.members.size()};
    return s;
}

double net_trust_score(const TrustSpectrum& s, Weighting weighting) {
    if (s.coefficients.empty()) throw std::invalid_argument("empty trust spectrum");
    double score = 0.0;
    if (weighting == Weighting::empirical) {
        const double total = static_cast<double>(s.total_count());
        for (const auto& [label, e] : s.coefficients)
            score += (static_cast<double>(e.member_count) / total) * e.coefficient;
    } else {
        const double w = 1.0 / static_cast<double>(s.coefficients.size());
        for (const auto& [label, e] : s.coefficients) score += w * e.coefficient;
    }
    return score;
}

void write_spectrum_csv(const TrustSpectrum& s, std::ostream& out) {
    out << "scenario,coefficient,count\n";
    for (const auto& [label, e] : s.coefficients) {
        std::string escaped = label;
        if (label.find_first_of(",\"\r\n") != std::string::npos) {
            escaped = "\"";
            for (char c : label) {
                if (c == '"') escaped += "\"\"";
                else escaped.push_back(c);
            }
            escaped.push_back('"');
        }
        out << escaped << ',' << detail::format_double(e.coefficient) << ','
            << e.member_count << '\n';
    }
}

nlohmann::json spectrum_to_json(const TrustSpectrum& s) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [label, e] : s.coefficients)
        coeffs[label] = {{"coefficient", e.coefficient}, {"count", e.member_count}};
    return {{"model_name", s.model_name}, {"coefficients", coeffs}};
}

}  // namespace netrust
