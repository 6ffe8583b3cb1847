#include "netrust/trust.hpp"

#include <cmath>
#include <stdexcept>

namespace netrust {

namespace {

void require_nonempty(const RecordSet& rs) {
    if (rs.records.empty()) throw std::invalid_argument("record set is empty");
}

double mean_confidence(const std::vector<PredictionRecord>& records) {
    double sum = 0.0;
    for (const auto& r : records) sum += r.confidence;
    return sum / static_cast<double>(records.size());
}

}  // namespace

CorrectnessPartition partition(const RecordSet& rs) {
    require_nonempty(rs);
    CorrectnessPartition p;
    for (const auto& r : rs.records)
        (r.correct() ? p.correct : p.incorrect).push_back(r);
    return p;
}

double question_answer_trust(const PredictionRecord& r, const TrustParams& p) {
    p.validate();
    return r.correct() ? std::pow(r.confidence, p.alpha)
                       : std::pow(1.0 - r.confidence, p.beta);
}

std::vector<ScoredRecord> score_all(const RecordSet& rs, const TrustParams& p) {
    require_nonempty(rs);
    p.validate();
    std::vector<ScoredRecord> out;
    out.reserve(rs.records.size());
    for (const auto& r : rs.records)
        out.push_back({r, r.correct(), question_answer_trust(r, p)});
    return out;
}

std::optional<double> expected_confidence_correct(const RecordSet& rs) {
    auto part = partition(rs);
    if (part.correct.empty()) return std::nullopt;
    return mean_confidence(part.correct);
}

std::optional<double> expected_confidence_incorrect(const RecordSet& rs) {
    auto part = partition(rs);
    if (part.incorrect.empty()) return std::nullopt;
    return mean_confidence(part.incorrect);
}

AccuracyFractions accuracy_fractions(const RecordSet& rs) {
    require_nonempty(rs);
    std::size_t n_correct = 0;
    for (const auto& r : rs.records)
        if (r.correct()) ++n_correct;
    const double total = static_cast<double>(rs.records.size());
    return {static_cast<double>(n_correct) / total,
            static_cast<double>(rs.records.size() - n_correct) / total};
}

}  // namespace netrust
