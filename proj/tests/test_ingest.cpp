#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "netrust/ingest.hpp"

using namespace netrust;

TEST_CASE("jsonl single line maps fields directly") {
    std::istringstream in(
        R"({"question_id":"q1","predicted_label":"teapot","oracle_label":"teapot","confidence":0.9})"
        "\n");
    auto rs = parse_records(in, InputFormat::jsonl, "m");
    REQUIRE(rs.records.size() == 1);
    CHECK(rs.records[0].question_id == "q1");
    CHECK(rs.records[0].predicted_label == "teapot");
    CHECK(rs.records[0].oracle_label == "teapot");
    CHECK(rs.records[0].confidence == doctest::Approx(0.9));
}

TEST_CASE("jsonl with probability vector derives confidence") {
    std::istringstream in(
        R"({"question_id":"q1","predicted_label":"b","oracle_label":"b","probabilities":[0.1,0.7,0.2]})"
        "\n");
    auto rs = parse_records(in, InputFormat::jsonl, "m");
    CHECK(rs.records[0].confidence == doctest::Approx(0.7));
}

TEST_CASE("jsonl requires exactly one of confidence/probabilities") {
    std::istringstream both(
        R"({"question_id":"q1","predicted_label":"a","oracle_label":"a","confidence":0.5,"probabilities":[1.0]})"
        "\n");
    CHECK_THROWS_AS(parse_records(both, InputFormat::jsonl), ParseError);
    std::istringstream neither(
        R"({"question_id":"q1","predicted_label":"a","oracle_label":"a"})"
        "\n");
    CHECK_THROWS_AS(parse_records(neither, InputFormat::jsonl), ParseError);
}

TEST_CASE("csv basic parse preserves order") {
    std::istringstream in(
        "question_id,predicted_label,oracle_label,confidence\n"
        "q1,cat,cat,0.8\n"
        "q2,dog,cat,0.6\n");
    auto rs = parse_records(in, InputFormat::csv);
    REQUIRE(rs.records.size() == 2);
    CHECK(rs.records[0].question_id == "q1");
    CHECK(rs.records[1].predicted_label == "dog");
}

TEST_CASE("csv quoted fields with commas and escaped quotes") {
    std::istringstream in(
        "question_id,predicted_label,oracle_label,confidence\n"
        "q1,\"water, bottle\",\"say \"\"hi\"\"\",0.5\n");
    auto rs = parse_records(in, InputFormat::csv);
    CHECK(rs.records[0].predicted_label == "water, bottle");
    CHECK(rs.records[0].oracle_label == "say \"hi\"");
}

TEST_CASE("confidence out of range is a hard error naming the line") {
    std::istringstream in(
        "question_id,predicted_label,oracle_label,confidence\n"
        "q1,a,a,1.2\n");
    try {
        parse_records(in, InputFormat::csv);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find("line 2") != std::string::npos);
        CHECK(msg.find("[0,1]") != std::string::npos);
    }
}

TEST_CASE("duplicate question_id rejected") {
    std::istringstream in(
        "question_id,predicted_label,oracle_label,confidence\n"
        "q7,a,a,0.5\n"
        "q7,b,b,0.6\n");
    try {
        parse_records(in, InputFormat::csv);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("q7") != std::string::npos);
    }
}

TEST_CASE("missing field and bad header rejected") {
    std::istringstream bad_header("id,pred,orc,conf\nq1,a,a,0.5\n");
    CHECK_THROWS_AS(parse_records(bad_header, InputFormat::csv), ParseError);
    std::istringstream missing(
        R"({"question_id":"q1","predicted_label":"a","confidence":0.5})"
        "\n");
    try {
        parse_records(missing, InputFormat::jsonl);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("oracle_label") != std::string::npos);
    }
}

TEST_CASE("boundary confidences 0 and 1 accepted") {
    std::istringstream in(
        "question_id,predicted_label,oracle_label,confidence\n"
        "q1,a,a,0\n"
        "q2,a,a,1\n");
    auto rs = parse_records(in, InputFormat::csv);
    CHECK(rs.records[0].confidence == 0.0);
    CHECK(rs.records[1].confidence == 1.0);
}

TEST_CASE("parse -> serialize -> parse round-trips") {
    std::istringstream in(
        "question_id,predicted_label,oracle_label,confidence\n"
        "q1,\"a,b\",c,0.123456789012345\n"
        "q2,x,y,0.5\n");
    auto rs = parse_records(in, InputFormat::csv, "m");

    std::ostringstream csv_out;
    write_records_csv(rs, csv_out);
    std::istringstream csv_in(csv_out.str());
    CHECK(parse_records(csv_in, InputFormat::csv, "m") == rs);

    std::ostringstream jl_out;
    write_records_jsonl(rs, jl_out);
    std::istringstream jl_in(jl_out.str());
    CHECK(parse_records(jl_in, InputFormat::jsonl, "m") == rs);
}

TEST_CASE("derive_confidence") {
    std::vector<double> v{0.1, 0.7, 0.2};
    auto d = derive_confidence(v);
    CHECK(d.predicted_index == 1);
    CHECK(d.confidence == doctest::Approx(0.7));

    std::vector<double> onehot{1.0, 0.0};
    auto d2 = derive_confidence(onehot);
    CHECK(d2.predicted_index == 0);
    CHECK(d2.confidence == 1.0);

    // ties break to the lowest index
    std::vector<double> tie{0.5, 0.5};
    auto d3 = derive_confidence(tie);
    CHECK(d3.predicted_index == 0);
    CHECK(d3.confidence == 0.5);
}

TEST_CASE("derive_confidence rejects bad vectors") {
    CHECK_THROWS_AS(derive_confidence(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(derive_confidence(std::vector<double>{0.5, 0.4}), std::invalid_argument);
    CHECK_THROWS_AS(derive_confidence(std::vector<double>{1.1, -0.1}), std::invalid_argument);
}

TEST_CASE("derive_confidence invariant under appended zero classes") {
    std::vector<double> v{0.3, 0.6, 0.1};
    auto base = derive_confidence(v);
    v.push_back(0.0);
    v.push_back(0.0);
    auto padded = derive_confidence(v);
    CHECK(base.predicted_index == padded.predicted_index);
    CHECK(base.confidence == padded.confidence);
}

TEST_CASE("run manifest") {
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "netrust_manifest_test";
    fs::create_directories(dir);
    {
        std::ofstream f(dir / "runs.json");
        f << R"([{"model_name":"a","path":"a.jsonl"},{"model_name":"b","path":"b.jsonl"}])";
    }
    auto runs = load_run_manifest(dir / "runs.json");
    REQUIRE(runs.size() == 2);
    CHECK(runs[0].model_name == "a");
    CHECK(runs[0].path == dir / "a.jsonl");

    {
        std::ofstream f(dir / "dup.json");
        f << R"([{"model_name":"resnet50","path":"a"},{"model_name":"resnet50","path":"b"}])";
    }
    CHECK_THROWS_AS(load_run_manifest(dir / "dup.json"), ParseError);

    {
        std::ofstream f(dir / "empty.json");
        f << "[]";
    }
    try {
        load_run_manifest(dir / "empty.json");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("no runs declared") != std::string::npos);
    }
    CHECK_THROWS_AS(load_run_manifest(dir / "nope.json"), ParseError);
    fs::remove_all(dir);
}
