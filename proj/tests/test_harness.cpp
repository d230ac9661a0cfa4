#include "cfclab/error.hpp"
#include "cfclab/families.hpp"
#include "cfclab/harness.hpp"
#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

using namespace cfclab;

TEST_CASE("check id parsing") {
  CHECK(all_check_ids().size() == 19);
  CHECK(parse_check_id("lemma6") == CheckId::lemma6);
  CHECK(parse_check_id("theorem2") == CheckId::theorem2);
  CHECK_FALSE(parse_check_id("lemma99").has_value());
  for (CheckId id : all_check_ids()) CHECK(parse_check_id(to_string(id)) == id);
}

TEST_CASE("single checks pass on small bounds") {
  HarnessBounds small{5, 7};
  for (CheckId id : {CheckId::lemma3, CheckId::lemma4, CheckId::lemma6, CheckId::corollary2}) {
    Report report = run_check(CheckSpec{id, small, 1});
    REQUIRE(report.checks.size() == 1);
    CHECK(report.checks[0].passed);
    CHECK(report.checks[0].instances > 0);
    CHECK(report.all_passed);
  }
}

TEST_CASE("evaluate_instance flags genuine violations") {
  Corpus corpus(HarnessBounds{4, 5});
  // a path with two edges is not the remark1 tree for k = 3
  Instance bogus{path_graph(2), std::nullopt, "k=3", 3, 0};
  std::string details;
  CHECK_FALSE(evaluate_instance(CheckId::remark1, bogus, corpus, &details));
  CHECK(details.find("alpha") != std::string::npos);

  // and the genuine instance re-checks green
  Instance genuine{remark1_tree(3), std::nullopt, "k=3", 3, 0};
  CHECK(evaluate_instance(CheckId::remark1, genuine, corpus, &details));
}

TEST_CASE("reports serialize") {
  Report report = run_check(CheckSpec{CheckId::lemma6, HarnessBounds{4, 5}, 1});
  auto j = nlohmann::json::parse(report_to_json(report));
  CHECK(j["all_passed"] == true);
  CHECK(j["checks"].size() == 1);
  CHECK(j["checks"][0]["id"] == "lemma6");
  CHECK(j["checks"][0]["instances"] == 10);
  CHECK(j["checks"][0]["counterexample"].is_null());

  std::string csv = report_to_csv(report);
  CHECK(csv.find("lemma6,10,pass") != std::string::npos);
  std::string text = report_to_text(report);
  CHECK(text.find("[pass] lemma6") != std::string::npos);
}

TEST_CASE("seed and thread count do not change verdicts") {
  HarnessBounds small{5, 7};
  Report one = run_check(CheckSpec{CheckId::theorem2, small, 7}, 1);
  Report two = run_check(CheckSpec{CheckId::theorem2, small, 7}, 2);
  CHECK(one.checks[0].passed == two.checks[0].passed);
  CHECK(one.checks[0].instances == two.checks[0].instances);

  Report other_seed = run_check(CheckSpec{CheckId::theorem2, small, 8}, 1);
  CHECK(other_seed.checks[0].passed);  // different instances, same verdict
}

TEST_CASE("corpus bounds are enforced") {
  Corpus big_graphs(HarnessBounds{8, 10});
  CHECK_THROWS_WITH_AS(big_graphs.connected_graphs(), doctest::Contains("CorpusTooLarge"), Error);
  Corpus big_trees(HarnessBounds{6, 13});
  CHECK_THROWS_WITH_AS(big_trees.trees(), doctest::Contains("CorpusTooLarge"), Error);
}

TEST_CASE("run_all on reduced bounds") {
  Report report = run_all(HarnessBounds{4, 6}, 3, 2);
  CHECK(report.checks.size() == 19);
  CHECK(report.all_passed);
  CHECK(report.memo_spot_samples == report.memo_spot_agreed);
  for (const CheckReport& check : report.checks) CHECK_FALSE(check.counterexample.has_value());
}
