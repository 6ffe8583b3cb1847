#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "netrust/record.hpp"

namespace netrust {

enum class InputFormat { csv, jsonl };

InputFormat input_format_from_string(const std::string& s);

/// Parse failure with the offending line/row named in what().
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Parse a prediction dump into a RecordSet, preserving input order.
///
/// JSONL: one object per line with question_id, predicted_label, oracle_label
/// and exactly one of confidence (number) or probabilities (array).
/// CSV: header `question_id,predicted_label,oracle_label,confidence`,
/// RFC-4180 quoting.
///
/// Throws ParseError naming the first offending row or field. Confidence
/// outside [0,1] is a hard error, never a clamp.
RecordSet parse_records(std::istream& source, InputFormat format,
                        std::string model_name = "");

RecordSet parse_records_file(const std::filesystem::path& path, InputFormat format,
                             std::string model_name = "");

/// Serialize back to the canonical schema (round-trips with parse_records).
void write_records_csv(const RecordSet& rs, std::ostream& out);
void write_records_jsonl(const RecordSet& rs, std::ostream& out);

struct DerivedConfidence {
    std::size_t predicted_index;
    double confidence;
};

/// Argmax over a full probability vector; ties break to the lowest index.
/// The vector must be non-empty, non-negative, and sum to 1 within 1e-6.
DerivedConfidence derive_confidence(std::span<const double> probabilities);

struct RunManifestEntry {
    std::string model_name;
    std::filesystem::path path;
};

/// Load a compare manifest: JSON array of {"model_name": ..., "path": ...}.
/// Relative paths resolve against the manifest's directory.
std::vector<RunManifestEntry> load_run_manifest(const std::filesystem::path& path);

}  // namespace netrust
