#pragma once

#include <optional>
#include <span>
#include <vector>

#include "netrust/record.hpp"

namespace netrust {

/// A prediction record together with its question-answer trust value.
struct ScoredRecord {
    PredictionRecord record;
    bool correct = false;
    double qa_trust = 0.0;  // in [0,1]
};

struct CorrectnessPartition {
    std::vector<PredictionRecord> correct;
    std::vector<PredictionRecord> incorrect;
};

/// Split a record set by predicted_label == oracle_label, preserving order.
CorrectnessPartition partition(const RecordSet& rs);

/// Per-record trust: C^alpha when correct, (1-C)^beta when incorrect.
double question_answer_trust(const PredictionRecord& r, const TrustParams& p);

/// Score every record, preserving input order.
std::vector<ScoredRecord> score_all(const RecordSet& rs, const TrustParams& p);

/// Mean confidence over the correct subset; nullopt when there are no
/// correct answers (reported as absent, never as 0).
std::optional<double> expected_confidence_correct(const RecordSet& rs);

/// Mean confidence over the incorrect subset; nullopt when empty.
std::optional<double> expected_confidence_incorrect(const RecordSet& rs);

struct AccuracyFractions {
    double correct_frac;
    double incorrect_frac;
};

/// Fractions of correct/incorrect records; sums to 1 by construction.
AccuracyFractions accuracy_fractions(const RecordSet& rs);

}  // namespace netrust
