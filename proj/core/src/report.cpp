#include "netrust/report.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>

#include <nlohmann/json.hpp>

#include "netrust/detail/numfmt.hpp"
#include "netrust/spectrum.hpp"

namespace netrust {

using nlohmann::json;
using detail::format_double;
using detail::format_fixed3;
using detail::format_percent1;

ModelTrustSummary model_summary(const RecordSet& rs, const TrustParams& p) {
    p.validate();
    auto scored = score_all(rs, p);
    auto spectrum = trust_spectrum(scored, p.grouping, rs.model_name);
    auto frac = accuracy_fractions(rs);

    ModelTrustSummary s;
    s.model_name = rs.model_name;
    s.net_trust_score = net_trust_score(spectrum, p.weighting);
    s.n_correct_frac = frac.correct_frac;
    s.expected_confidence_correct = expected_confidence_correct(rs);
    s.n_incorrect_frac = frac.incorrect_frac;
    s.expected_confidence_incorrect = expected_confidence_incorrect(rs);
    s.record_count = rs.records.size();
    s.params = p;
    return s;
}

json summary_to_json(const ModelTrustSummary& s) {
    json j;
    j["model_name"] = s.model_name;
    j["net_trust_score"] = s.net_trust_score;
    j["n_correct_frac"] = s.n_correct_frac;
    j["expected_confidence_correct"] =
        s.expected_confidence_correct ? json(*s.expected_confidence_correct) : json(nullptr);
    j["n_incorrect_frac"] = s.n_incorrect_frac;
    j["expected_confidence_incorrect"] =
        s.expected_confidence_incorrect ? json(*s.expected_confidence_incorrect) : json(nullptr);
    j["record_count"] = s.record_count;
    j["params"] = {{"alpha", s.params.alpha},
                   {"beta", s.params.beta},
                   {"gamma", s.params.gamma},
                   {"grouping", to_string(s.params.grouping)},
                   {"weighting", to_string(s.params.weighting)}};
    return j;
}

ModelTrustSummary summary_from_json(const json& j) {
    ModelTrustSummary s;
    s.model_name = j.at("model_name").get<std::string>();
    s.net_trust_score = j.at("net_trust_score").get<double>();
    s.n_correct_frac = j.at("n_correct_frac").get<double>();
    if (!j.at("expected_confidence_correct").is_null())
        s.expected_confidence_correct = j["expected_confidence_correct"].get<double>();
    s.n_incorrect_frac = j.at("n_incorrect_frac").get<double>();
    if (!j.at("expected_confidence_incorrect").is_null())
        s.expected_confidence_incorrect = j["expected_confidence_incorrect"].get<double>();
    s.record_count = j.at("record_count").get<std::size_t>();
    const auto& p = j.at("params");
    s.params.alpha = p.at("alpha").get<double>();
    s.params.beta = p.at("beta").get<double>();
    s.params.gamma = p.at("gamma").get<double>();
    s.params.grouping = grouping_from_string(p.at("grouping").get<std::string>());
    s.params.weighting = weighting_from_string(p.at("weighting").get<std::string>());
    return s;
}

ComparisonTable compare_models(std::vector<ModelTrustSummary> summaries) {
    if (summaries.empty()) throw std::invalid_argument("no summaries to compare");
    const TrustParams& ref = summaries.front().params;
    for (const auto& s : summaries) {
        if (s.params.alpha != ref.alpha)
            throw std::invalid_argument("mismatched alpha across summaries");
        if (s.params.beta != ref.beta)
            throw std::invalid_argument("mismatched beta across summaries");
        if (s.params.gamma != ref.gamma)
            throw std::invalid_argument("mismatched gamma across summaries");
        if (s.params.grouping != ref.grouping)
            throw std::invalid_argument("mismatched grouping across summaries");
        if (s.params.weighting != ref.weighting)
            throw std::invalid_argument("mismatched weighting across summaries");
    }
    std::stable_sort(summaries.begin(), summaries.end(),
                     [](const ModelTrustSummary& a, const ModelTrustSummary& b) {
                         return a.net_trust_score > b.net_trust_score;
                     });
    return {std::move(summaries)};
}

std::string params_hash(const TrustParams& p) {
    // FNV-1a over the canonical textual form
    std::string canon = format_double(p.alpha) + '|' + format_double(p.beta) + '|' +
                        format_double(p.gamma) + '|' + to_string(p.grouping) + '|' +
                        to_string(p.weighting);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string comparison_to_csv(const ComparisonTable& t) {
    std::ostringstream out;
    out << "model,net_trust_score,n_correct,ec_correct,n_incorrect,ec_incorrect,params_hash\n";
    for (const auto& s : t.rows) {
        out << s.model_name << ',' << format_double(s.net_trust_score) << ','
            << format_double(s.n_correct_frac) << ','
            << (s.expected_confidence_correct ? format_double(*s.expected_confidence_correct) : "")
            << ',' << format_double(s.n_incorrect_frac) << ','
            << (s.expected_confidence_incorrect ? format_double(*s.expected_confidence_incorrect)
                                                : "")
            << ',' << params_hash(s.params) << '\n';
    }
    return out.str();
}

json comparison_to_json(const ComparisonTable& t) {
    json rows = json::array();
    for (const auto& s : t.rows) rows.push_back(summary_to_json(s));
    return rows;
}

std::string comparison_to_text(const ComparisonTable& t) {
    std::vector<std::array<std::string, 6>> cells;
    cells.push_back({"model", "net_trust_score", "n_correct", "ec_correct",
                     "n_incorrect", "ec_incorrect"});
    for (const auto& s : t.rows) {
        cells.push_back({s.model_name, format_fixed3(s.net_trust_score),
                         format_percent1(s.n_correct_frac),
                         s.expected_confidence_correct
                             ? format_fixed3(*s.expected_confidence_correct)
                             : std::string("-"),
                         format_percent1(s.n_incorrect_frac),
                         s.expected_confidence_incorrect
                             ? format_fixed3(*s.expected_confidence_incorrect)
                             : std::string("-")});
    }
    std::array<std::size_t, 6> width{};
    for (const auto& row : cells)
        for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < 6; ++c) {
            out << row[c];
            if (c + 1 < 6) out << std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace netrust
