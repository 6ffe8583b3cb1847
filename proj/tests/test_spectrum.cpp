#include <doctest.h>

#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "netrust/spectrum.hpp"

using namespace netrust;

namespace {

ScoredRecord sr(const std::string& id, const std::string& pred, const std::string& orc,
                double trust) {
    return {{id, pred, orc, 0.5}, pred == orc, trust};
}

}  // namespace

TEST_CASE("grouping by predicted and oracle labels") {
    std::vector<ScoredRecord> scored{sr("q1", "teapot", "teapot", 0.9),
                                     sr("q2", "teapot", "hammer", 0.4),
                                     sr("q3", "screen", "screen", 0.8)};
    auto by_pred = group_by_scenario(scored, Grouping::predicted);
    REQUIRE(by_pred.size() == 2);
    CHECK(by_pred[0].scenario_label == "screen");
    CHECK(by_pred[0].members.size() == 1);
    CHECK(by_pred[1].scenario_label == "teapot");
    CHECK(by_pred[1].members.size() == 2);
    // member order preserves input order
    CHECK(by_pred[1].members[0].record.question_id == "q1");

    auto by_oracle = group_by_scenario(scored, Grouping::oracle);
    CHECK(by_oracle.size() == 3);

    std::vector<ScoredRecord> single{sr("q", "a", "a", 1.0)};
    CHECK(group_by_scenario(single, Grouping::predicted).size() == 1);
    CHECK_THROWS_AS(group_by_scenario(std::vector<ScoredRecord>{}, Grouping::predicted),
                    std::invalid_argument);
}

TEST_CASE("spectrum coefficient is the group mean") {
    ScenarioGroup g{"z", {sr("a", "z", "z", 0.9), sr("b", "z", "z", 0.7)}};
    CHECK(spectrum_coefficient(g) == doctest::Approx(0.8));

    ScenarioGroup ones{"z", {sr("a", "z", "z", 1.0), sr("b", "z", "z", 1.0)}};
    CHECK(spectrum_coefficient(ones) == 1.0);

    ScenarioGroup mix{"z",
                      {sr("a", "z", "z", 1.0), sr("b", "z", "z", 0.5), sr("c", "z", "z", 0.0),
                       sr("d", "z", "z", 0.1)}};
    CHECK(spectrum_coefficient(mix) == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("net trust score under both weightings") {
    std::vector<ScoredRecord> scored{sr("a", "A", "A", 1.0), sr("b", "B", "B", 0.5),
                                     sr("c", "B", "B", 0.0), sr("d", "B", "B", 0.1)};
    auto s = trust_spectrum(scored, Grouping::predicted, "m");
    CHECK(net_trust_score(s, Weighting::empirical) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(net_trust_score(s, Weighting::uniform) == doctest::Approx(0.6).epsilon(1e-12));

    std::vector<ScoredRecord> one_scenario{sr("a", "A", "A", 0.7), sr("b", "A", "A", 0.3)};
    auto s1 = trust_spectrum(one_scenario, Grouping::predicted, "m");
    CHECK(net_trust_score(s1, Weighting::empirical) == doctest::Approx(0.5));
    CHECK(net_trust_score(s1, Weighting::uniform) == doctest::Approx(0.5));
}

TEST_CASE("spectrum partitions all records and coefficients stay in range") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int rep = 0; rep < 100; ++rep) {
        std::size_t n = 1 + rng() % 40;
        std::vector<ScoredRecord> scored;
        for (std::size_t i = 0; i < n; ++i) {
            std::string label(1, static_cast<char>('a' + rng() % 5));
            std::string orc(1, static_cast<char>('a' + rng() % 5));
            scored.push_back(sr("q" + std::to_string(i), label, orc, unif(rng)));
        }
        for (Grouping g : {Grouping::predicted, Grouping::oracle}) {
            auto s = trust_spectrum(scored, g, "m");
            CHECK(s.total_count() == n);
            double lo = 1.0, hi = 0.0;
            for (const auto& [label, e] : s.coefficients) {
                CHECK(e.coefficient >= 0.0);
                CHECK(e.coefficient <= 1.0);
                lo = std::min(lo, e.coefficient);
                hi = std::max(hi, e.coefficient);
            }
            for (Weighting w : {Weighting::empirical, Weighting::uniform}) {
                double t = net_trust_score(s, w);
                CHECK(t >= lo - 1e-12);
                CHECK(t <= hi + 1e-12);
            }
        }
    }
}

TEST_CASE("empirical score equals the grand mean for either grouping") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
        std::size_t n = 1 + rng() % 60;
        std::vector<ScoredRecord> scored;
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double q = unif(rng);
            sum += q;
            std::string label(1, static_cast<char>('a' + rng() % 6));
            std::string orc(1, static_cast<char>('a' + rng() % 6));
            scored.push_back(sr("q" + std::to_string(i), label, orc, q));
        }
        double grand = sum / n;
        for (Grouping g : {Grouping::predicted, Grouping::oracle}) {
            auto s = trust_spectrum(scored, g, "m");
            CHECK(net_trust_score(s, Weighting::empirical) ==
                  doctest::Approx(grand).epsilon(1e-12));
        }
    }
}

TEST_CASE("spectrum serialization") {
    std::vector<ScoredRecord> scored{sr("a", "A", "A", 0.8), sr("b", "B", "B", 0.4)};
    auto s = trust_spectrum(scored, Grouping::predicted, "m");
    std::ostringstream csv;
    write_spectrum_csv(s, csv);
    CHECK(csv.str() == "scenario,coefficient,count\nA,0.8,1\nB,0.4,1\n");
    auto j = spectrum_to_json(s);
    CHECK(j["model_name"] == "m");
    CHECK(j["coefficients"]["A"]["coefficient"] == 0.8);
    CHECK(j["coefficients"]["B"]["count"] == 1);
}
