#include <doctest.h>

#include <string>

#include "hgdef/constructions.hpp"
#include "hgdef/harness.hpp"

using hgdef::Claim;
using hgdef::ClaimStatus;
using hgdef::complete_uniform;
using hgdef::FuzzConfig;
using hgdef::VerificationReport;

namespace {

/// Identical modulo the timing field.
bool same_stripped(const VerificationReport& a, const VerificationReport& b) {
    auto ja = hgdef::report_json(a);
    auto jb = hgdef::report_json(b);
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    return ja.dump() == jb.dump();
}

} // namespace

TEST_CASE("defect bound on chi holds on known instances") {
    const auto claim = hgdef::check_aj_bound(complete_uniform(5, 2), 2, 0);
    CHECK(claim.status == ClaimStatus::pass);
    CHECK(claim.id == "AJ-bound");
    CHECK(claim.computed["chi"] == 3);

    // single-edge base: KG has one vertex and no edges, chi = 1
    const auto single = hgdef::Hypergraph::from_edge_lists(3, {{0, 1, 2}});
    const auto trivial = hgdef::check_aj_bound(single, 2, 1);
    CHECK(trivial.status == ClaimStatus::pass);
    CHECK(trivial.computed["chi"] == 1);

    const auto blocks = hgdef::check_aj_bound(hgdef::thm3_family({2, 2}), 2, 2);
    CHECK(blocks.status == ClaimStatus::pass);
    CHECK(blocks.computed["chi"] == 2);
}

TEST_CASE("strengthened bound evaluation records HOLDS / VIOLATED") {
    SUBCASE("baseline x = floor(s/2) holds trivially") {
        const auto claim = hgdef::check_strengthened_bound(complete_uniform(5, 2), 2, 0, 0);
        CHECK(claim.status == ClaimStatus::pass);
        CHECK(claim.computed["cd_variant"] == "HOLDS");
        CHECK(claim.computed["ecd_variant"] == "HOLDS");
    }
    SUBCASE("tailed-complete family breaks the ecd variant at x = s") {
        const auto f = hgdef::thm2_family({2, 1, 2});
        const auto claim = hgdef::check_strengthened_bound(f, 2, 1, 1);
        CHECK(claim.status == ClaimStatus::pass);
        CHECK(claim.computed["chi"] == 2);
        CHECK(claim.computed["ecd_x"] == 3);
        CHECK(claim.computed["ecd_variant"] == "VIOLATED");
    }
    SUBCASE("disjoint blocks break the cd variant at x = l") {
        const auto f = hgdef::thm3_family({2, 2});
        const auto claim = hgdef::check_strengthened_bound(f, 2, 2, 2);
        CHECK(claim.status == ClaimStatus::pass);
        CHECK(claim.computed["chi"] == 2);
        CHECK(claim.computed["cd_x"] == 6);
        CHECK(claim.computed["cd_variant"] == "VIOLATED");
        CHECK(claim.computed["ecd_variant"] == "VIOLATED");
    }
    SUBCASE("x outside [floor(s/2), s] is rejected") {
        const auto f = complete_uniform(5, 2);
        CHECK_THROWS_AS(hgdef::check_strengthened_bound(f, 2, 1, 2), hgdef::DomainError);
        CHECK_THROWS_AS(hgdef::check_strengthened_bound(f, 2, 2, 0), hgdef::DomainError);
    }
}

TEST_CASE("fuzz corpus finds no violations and is deterministic") {
    FuzzConfig config;
    config.seed = 42;
    config.trials = 25;
    config.max_n = 6;
    config.max_edges = 6;
    const auto report = hgdef::fuzz_corpus(config);
    CHECK(report.count(ClaimStatus::fail) == 0);
    CHECK(report.count(ClaimStatus::inconclusive) == 0);
    CHECK(report.count(ClaimStatus::pass) == static_cast<int>(report.claims.size()));
    CHECK(report.claims.size() > 25); // at least one claim per trial
    CHECK(hgdef::report_exit_code(report) == 0);
    CHECK(report.corpus["seed"] == 42);

    // the ecd-in-r comparison is logged as an experiment, not asserted
    const auto& experiment = report.corpus["ecd_r_experiment"];
    CHECK(experiment["compared"] == config.trials);
    CHECK(experiment["increases"].get<int>() >= 0);

    CHECK(same_stripped(report, hgdef::fuzz_corpus(config)));

    FuzzConfig other = config;
    other.seed = 43;
    CHECK_FALSE(same_stripped(report, hgdef::fuzz_corpus(other)));
}

TEST_CASE("fuzz config validation") {
    FuzzConfig bad;
    bad.trials = -1;
    CHECK_THROWS_AS(hgdef::fuzz_corpus(bad), hgdef::UsageError);
    bad = FuzzConfig{};
    bad.max_n = 0;
    CHECK_THROWS_AS(hgdef::fuzz_corpus(bad), hgdef::UsageError);
    bad = FuzzConfig{};
    bad.r_values = {1};
    CHECK_THROWS_AS(hgdef::fuzz_corpus(bad), hgdef::UsageError);
}

TEST_CASE("small reproduction grid passes everything") {
    const auto report = hgdef::reproduce_paper(hgdef::GridKind::small);
    CHECK(report.count(ClaimStatus::fail) == 0);
    CHECK(report.count(ClaimStatus::inconclusive) == 0);
    CHECK(hgdef::report_exit_code(report) == 0);
    CHECK(same_stripped(report, hgdef::reproduce_paper(hgdef::GridKind::small)));

    // ordering: claims sorted by id, then parameters
    for (std::size_t i = 1; i < report.claims.size(); ++i) {
        CHECK(report.claims[i - 1].id <= report.claims[i].id);
    }
    // every expected claim family is present
    for (const std::string id :
         {"complete-cd", "complete-chi", "DK-bound", "thm2-chi", "thm2-ecd", "thm2-cert",
          "thm2-counterexample", "thm3-chi", "thm3-cd", "thm3-ecd", "thm3-cert",
          "thm3-counterexample", "AJ-bound"}) {
        bool found = false;
        for (const auto& claim : report.claims) {
            if (claim.id == id) {
                found = true;
                break;
            }
        }
        CHECK_MESSAGE(found, "missing claim id ", id);
    }
}

TEST_CASE("budget exhaustion yields inconclusive claims, never failures") {
    const auto report = hgdef::reproduce_paper(hgdef::GridKind::small, 2);
    CHECK(report.count(ClaimStatus::fail) == 0);
    CHECK(report.count(ClaimStatus::inconclusive) > 0);
    CHECK(hgdef::report_exit_code(report) == 2);
}

TEST_CASE("report JSON shape") {
    FuzzConfig config;
    config.trials = 2;
    config.max_n = 4;
    config.max_edges = 3;
    const auto j = hgdef::report_json(hgdef::fuzz_corpus(config));
    REQUIRE(j.contains("claims"));
    REQUIRE(j.contains("summary"));
    REQUIRE(j.contains("corpus"));
    REQUIRE(j.contains("elapsed_ms"));
    CHECK(j["summary"]["total"] == static_cast<int>(j["claims"].size()));
    for (const auto& claim : j["claims"]) {
        CHECK(claim.contains("id"));
        CHECK(claim.contains("params"));
        CHECK(claim.contains("predicted"));
        CHECK(claim.contains("computed"));
        CHECK(claim.contains("status"));
    }
    const std::string table = hgdef::render_table(hgdef::fuzz_corpus(config));
    CHECK(table.find("CLAIM") != std::string::npos);
    CHECK(table.find("pass") != std::string::npos);
}

TEST_CASE("exit codes follow the pass/fail/inconclusive contract") {
    VerificationReport report;
    Claim claim;
    claim.id = "x";
    claim.status = ClaimStatus::pass;
    report.claims.push_back(claim);
    CHECK(hgdef::report_exit_code(report) == 0);
    claim.status = ClaimStatus::inconclusive;
    report.claims.push_back(claim);
    CHECK(hgdef::report_exit_code(report) == 2);
    claim.status = ClaimStatus::fail;
    report.claims.push_back(claim);
    CHECK(hgdef::report_exit_code(report) == 1);
}
