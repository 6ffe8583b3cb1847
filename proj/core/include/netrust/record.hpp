#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace netrust {

/// One question/answer event exported from a classifier run.
struct PredictionRecord {
    std::string question_id;
    std::string predicted_label;
    std::string oracle_label;
    double confidence = 0.0;  // softmax probability of the predicted label, in [0,1]

    bool correct() const { return predicted_label == oracle_label; }
    bool operator==(const PredictionRecord&) const = default;
};

/// All records of one model run. Immutable after construction.
struct RecordSet {
    std::string model_name;
    std::vector<PredictionRecord> records;

    bool operator==(const RecordSet&) const = default;
};

/// Which label defines scenario membership when grouping records.
enum class Grouping { predicted, oracle };

/// Scenario-occurrence distribution P(z) used by the net trust score.
enum class Weighting { empirical, uniform };

struct TrustParams {
    double alpha = 1.0;   // reward exponent on confidence for correct answers
    double beta = 1.0;    // penalty exponent on (1 - confidence) for incorrect answers
    double gamma = 0.5;   // kernel constant; KDE bandwidth is gamma / sqrt(N)
    Grouping grouping = Grouping::predicted;
    Weighting weighting = Weighting::empirical;

    void validate() const {
        if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
        if (!(beta > 0.0)) throw std::invalid_argument("beta must be > 0");
        if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
    }

    bool operator==(const TrustParams&) const = default;
};

const char* to_string(Grouping g);
const char* to_string(Weighting w);
Grouping grouping_from_string(const std::string& s);
Weighting weighting_from_string(const std::string& s);

}  // namespace netrust
