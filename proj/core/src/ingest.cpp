#include "netrust/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "netrust/detail/numfmt.hpp"

namespace netrust {

using nlohmann::json;

const char* to_string(Grouping g) {
    return g == Grouping::predicted ? "predicted" : "oracle";
}

const char* to_string(Weighting w) {
    return w == Weighting::empirical ? "empirical" : "uniform";
}

Grouping grouping_from_string(const std::string& s) {
    if (s == "predicted") return Grouping::predicted;
    if (s == "oracle") return Grouping::oracle;
    throw std::invalid_argument("unknown grouping '" + s + "' (expected predicted|oracle)");
}

Weighting weighting_from_string(const std::string& s) {
    if (s == "empirical") return Weighting::empirical;
    if (s == "uniform") return Weighting::uniform;
    throw std::invalid_argument("unknown weighting '" + s + "' (expected empirical|uniform)");
}

InputFormat input_format_from_string(const std::string& s) {
    if (s == "csv") return InputFormat::csv;
    if (s == "jsonl") return InputFormat::jsonl;
    throw std::invalid_argument("unknown input format '" + s + "' (expected csv|jsonl)");
}

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

double parse_confidence(const std::string& text, std::size_t line) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        fail(line, "confidence '" + text + "' is not a number");
    }
    if (pos != text.size()) fail(line, "confidence '" + text + "' is not a number");
    if (!(v >= 0.0 && v <= 1.0))
        fail(line, "confidence " + text + " outside [0,1]");
    return v;
}

void check_record(const PredictionRecord& r, std::size_t line,
                  std::unordered_set<std::string>& seen_ids) {
    if (r.question_id.empty()) fail(line, "question_id is empty");
    if (r.predicted_label.empty()) fail(line, "predicted_label is empty");
    if (r.oracle_label.empty()) fail(line, "oracle_label is empty");
    if (!(r.confidence >= 0.0 && r.confidence <= 1.0))
        fail(line, "confidence " + detail::format_double(r.confidence) + " outside [0,1]");
    if (!seen_ids.insert(r.question_id).second)
        fail(line, "duplicate question_id '" + r.question_id + "'");
}

// RFC-4180 field splitting for one logical CSV row. The stream is consumed
// row by row so quoted fields may contain embedded newlines.
bool read_csv_row(std::istream& in, std::vector<std::string>& fields,
                  std::size_t& line, std::size_t& rows_consumed) {
    fields.clear();
    rows_consumed = 0;
    int c = in.get();
    if (c == EOF) return false;
    std::string field;
    bool quoted = false;
    bool any = false;
    rows_consumed = 1;
    while (true) {
        if (c == EOF) {
            if (quoted) fail(line, "unterminated quoted field");
            fields.push_back(std::move(field));
            return true;
        }
        char ch = static_cast<char>(c);
        if (quoted) {
            if (ch == '"') {
                int next = in.peek();
                if (next == '"') {
                    in.get();
                    field.push_back('"');
                } else {
                    quoted = false;
                }
            } else {
                if (ch == '\n') ++rows_consumed;
                field.push_back(ch);
            }
        } else if (ch == '"' && field.empty() && !any) {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
            any = false;
        } else if (ch == '\r' && in.peek() == '\n') {
            in.get();
            fields.push_back(std::move(field));
            return true;
        } else if (ch == '\n') {
            fields.push_back(std::move(field));
            return true;
        } else {
            field.push_back(ch);
            any = true;
        }
        c = in.get();
    }
}

RecordSet parse_csv(std::istream& in, std::string model_name) {
    RecordSet rs;
    rs.model_name = std::move(model_name);
    std::vector<std::string> fields;
    std::size_t line = 1, consumed = 0;
    if (!read_csv_row(in, fields, line, consumed))
        throw ParseError("empty input: missing CSV header");
    const std::vector<std::string> expected = {"question_id", "predicted_label",
                                               "oracle_label", "confidence"};
    if (fields != expected)
        fail(line, "bad CSV header (expected question_id,predicted_label,oracle_label,confidence)");
    line += consumed;
    std::unordered_set<std::string> seen;
    while (read_csv_row(in, fields, line, consumed)) {
        if (fields.size() == 1 && fields[0].empty()) {
            line += consumed;  // trailing blank line
            continue;
        }
        if (fields.size() != 4)
            fail(line, "expected 4 fields, got " + std::to_string(fields.size()));
        PredictionRecord r;
        r.question_id = fields[0];
        r.predicted_label = fields[1];
        r.oracle_label = fields[2];
        r.confidence = parse_confidence(fields[3], line);
        check_record(r, line, seen);
        rs.records.push_back(std::move(r));
        line += consumed;
    }
    return rs;
}

RecordSet parse_jsonl(std::istream& in, std::string model_name) {
    RecordSet rs;
    rs.model_name = std::move(model_name);
    std::unordered_set<std::string> seen;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (text.empty() || text.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            fail(line, std::string("invalid JSON: ") + e.what());
        }
        if (!j.is_object()) fail(line, "expected a JSON object");
        for (const char* key : {"question_id", "predicted_label", "oracle_label"}) {
            if (!j.contains(key)) fail(line, std::string("missing required field '") + key + "'");
            if (!j[key].is_string()) fail(line, std::string("field '") + key + "' must be a string");
        }
        const bool has_conf = j.contains("confidence");
        const bool has_probs = j.contains("probabilities");
        if (has_conf == has_probs)
            fail(line, "exactly one of 'confidence' or 'probabilities' is required");
        PredictionRecord r;
        r.question_id = j["question_id"].get<std::string>();
        r.predicted_label = j["predicted_label"].get<std::string>();
        r.oracle_label = j["oracle_label"].get<std::string>();
        if (has_conf) {
            if (!j["confidence"].is_number()) fail(line, "field 'confidence' must be a number");
            r.confidence = j["confidence"].get<double>();
        } else {
            if (!j["probabilities"].is_array())
                fail(line, "field 'probabilities' must be an array of numbers");
            std::vector<double> probs;
            for (const auto& e : j["probabilities"]) {
                if (!e.is_number()) fail(line, "field 'probabilities' must be an array of numbers");
                probs.push_back(e.get<double>());
            }
            try {
                r.confidence = derive_confidence(probs).confidence;
            } catch (const std::invalid_argument& e) {
                fail(line, std::string("probabilities: ") + e.what());
            }
        }
        check_record(r, line, seen);
        rs.records.push_back(std::move(r));
    }
    return rs;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

RecordSet parse_records(std::istream& source, InputFormat format, std::string model_name) {
    return format == InputFormat::csv ? parse_csv(source, std::move(model_name))
                                      : parse_jsonl(source, std::move(model_name));
}

RecordSet parse_records_file(const std::filesystem::path& path, InputFormat format,
                             std::string model_name) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    if (model_name.empty()) model_name = path.stem().string();
    return parse_records(in, format, std::move(model_name));
}

void write_records_csv(const RecordSet& rs, std::ostream& out) {
    out << "question_id,predicted_label,oracle_label,confidence\n";
    for (const auto& r : rs.records) {
        out << csv_escape(r.question_id) << ',' << csv_escape(r.predicted_label) << ','
            << csv_escape(r.oracle_label) << ',' << detail::format_double(r.confidence) << '\n';
    }
}

void write_records_jsonl(const RecordSet& rs, std::ostream& out) {
    for (const auto& r : rs.records) {
        json j;
        j["question_id"] = r.question_id;
        j["predicted_label"] = r.predicted_label;
        j["oracle_label"] = r.oracle_label;
        j["confidence"] = r.confidence;
        out << j.dump() << '\n';
    }
}

DerivedConfidence derive_confidence(std::span<const double> probabilities) {
    if (probabilities.empty()) throw std::invalid_argument("probability vector is empty");
    double sum = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        if (probabilities[i] < 0.0)
            throw std::invalid_argument("entry " + std::to_string(i) + " is negative");
        if (probabilities[i] > 1.0)
            throw std::invalid_argument("entry " + std::to_string(i) + " exceeds 1");
        sum += probabilities[i];
    }
    if (std::abs(sum - 1.0) > 1e-6)
        throw std::invalid_argument("entries sum to " + detail::format_double(sum) +
                                    ", expected 1 within 1e-6");
    std::size_t best = 0;
    for (std::size_t i = 1; i < probabilities.size(); ++i)
        if (probabilities[i] > probabilities[best]) best = i;
    return {best, probabilities[best]};
}

std::vector<RunManifestEntry> load_run_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open manifest '" + path.string() + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("manifest '" + path.string() + "': " + e.what());
    }
    if (!j.is_array()) throw ParseError("manifest must be a JSON array of runs");
    if (j.empty()) throw ParseError("manifest: no runs declared");
    std::vector<RunManifestEntry> runs;
    std::unordered_set<std::string> names;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        if (!e.is_object() || !e.contains("model_name") || !e.contains("path") ||
            !e["model_name"].is_string() || !e["path"].is_string())
            throw ParseError("manifest entry " + std::to_string(i) +
                             ": expected {\"model_name\": string, \"path\": string}");
        RunManifestEntry run;
        run.model_name = e["model_name"].get<std::string>();
        if (run.model_name.empty())
            throw ParseError("manifest entry " + std::to_string(i) + ": model_name is empty");
        if (!names.insert(run.model_name).second)
            throw ParseError("manifest: duplicate model_name '" + run.model_name + "'");
        std::filesystem::path p = e["path"].get<std::string>();
        if (p.is_relative()) p = path.parent_path() / p;
        run.path = std::move(p);
        runs.push_back(std::move(run));
    }
    return runs;
}

}  // namespace netrust
