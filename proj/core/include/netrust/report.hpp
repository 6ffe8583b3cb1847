#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "netrust/record.hpp"
#include "netrust/trust.hpp"

namespace netrust {

/// Scalar summary of one model run: net trust score, accuracy fractions,
/// and expected confidences for the correct/incorrect subsets.
struct ModelTrustSummary {
    std::string model_name;
    double net_trust_score = 0.0;
    double n_correct_frac = 0.0;
    std::optional<double> expected_confidence_correct;
    double n_incorrect_frac = 0.0;
    std::optional<double> expected_confidence_incorrect;
    std::size_t record_count = 0;
    TrustParams params;
};

ModelTrustSummary model_summary(const RecordSet& rs, const TrustParams& p);

/// Lossless at full float precision; display rounding happens only in the
/// text layer.
nlohmann::json summary_to_json(const ModelTrustSummary& s);
ModelTrustSummary summary_from_json(const nlohmann::json& j);

struct ComparisonTable {
    std::vector<ModelTrustSummary> rows;  // sorted by net_trust_score descending
};

/// Assemble a comparison. All summaries must share identical TrustParams;
/// a mismatch is a hard error naming the parameter.
ComparisonTable compare_models(std::vector<ModelTrustSummary> summaries);

std::string comparison_to_csv(const ComparisonTable& t);
nlohmann::json comparison_to_json(const ComparisonTable& t);
std::string comparison_to_text(const ComparisonTable& t);

/// Stable hex digest of the params, so comparison rows carry provenance.
std::string params_hash(const TrustParams& p);

}  // namespace netrust
