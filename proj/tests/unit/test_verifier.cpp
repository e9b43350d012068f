#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "centra/error.hpp"
#include "centra/json_io.hpp"
#include "centra/verifier.hpp"

using namespace centra;

namespace {
  nlohmann::json strip_times(std::vector<TheoremReport> const& reports) {
    nlohmann::json out = nlohmann::json::array();
    for (auto const& r : reports) {
      auto j = report_to_json(r);
      j.erase("elapsed_ms");
      out.push_back(j);
    }
    return out;
  }
}  // namespace

TEST(Verifier, TheoremIds) {
  auto const& ids = theorem_ids();
  EXPECT_EQ(ids.size(), 11U);
  for (auto const& id : ids) {
    EXPECT_FALSE(default_instances(id).empty()) << id;
  }
  EXPECT_THROW(default_instances("no-such-theorem"), UsageError);
}

TEST(Verifier, InstanceIdsUnique) {
  auto all = default_instances("all");
  std::set<std::string> ids;
  for (auto const& i : all) {
    EXPECT_TRUE(ids.insert(i.id).second) << i.id;
  }
}

TEST(Verifier, ManifestRoundTrip) {
  auto all = default_instances("all");
  auto parsed = parse_manifest(manifest_to_json(all));
  ASSERT_EQ(parsed.size(), all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(instance_to_json(parsed[i]), instance_to_json(all[i]));
  }
}

TEST(Verifier, ShippedManifestMatchesDefaults) {
  auto shipped = read_json_file(std::filesystem::path(CENTRA_TEST_DATA_DIR) / "default_manifest.json");
  EXPECT_EQ(shipped, manifest_to_json(default_instances("all")));
}

TEST(Verifier, ExpectShorthand) {
  auto inst = instance_from_json(nlohmann::json::parse(
      R"({"id":"x","theorem":"examples","spec":"cyclic:4","expect":"non-member"})"));
  EXPECT_EQ(inst.expect, (nlohmann::json{{"member", false}}));
  auto r = evaluate(inst, VerifyOptions{});
  EXPECT_EQ(r.status, ReportStatus::fail);

  inst.spec = "abelian:2,2,2";
  EXPECT_EQ(evaluate(inst, VerifyOptions{}).status, ReportStatus::pass);
}

TEST(Verifier, EmptyManifest) {
  auto reports = run_instances(parse_manifest(nlohmann::json::array()), VerifyOptions{});
  EXPECT_TRUE(reports.empty());
  EXPECT_EQ(exit_status(reports), 0);
  EXPECT_EQ(reports_to_jsonl(reports), "");
}

TEST(Verifier, WrongExpectationFails) {
  TheoremInstance good{"a", "p-dihedral", "dihedral:8", {{"member", true}}, {}, ""};
  TheoremInstance bad{"b", "p-dihedral", "dihedral:12", {{"member", true}}, {}, ""};
  auto reports = run_instances({good, bad}, VerifyOptions{});
  ASSERT_EQ(reports.size(), 2U);
  EXPECT_EQ(reports[0].status, ReportStatus::pass);
  EXPECT_EQ(reports[1].status, ReportStatus::fail);
  EXPECT_FALSE(reports[1].witness.is_null());
  EXPECT_EQ(exit_status(reports), 1);
  auto s = summarize(reports);
  EXPECT_EQ(s.pass, 1U);
  EXPECT_EQ(s.fail, 1U);
}

TEST(Verifier, BadSpecIsFailureNotCrash) {
  TheoremInstance inst{"z", "examples", "bogus:1", {{"member", true}}, {}, ""};
  auto r = evaluate(inst, VerifyOptions{});
  EXPECT_EQ(r.status, ReportStatus::fail);
  EXPECT_FALSE(r.message.empty());
}

TEST(Verifier, MaxOrderSkips) {
  VerifyOptions opts;
  opts.max_order = 100;
  auto reports = verify("t-finitesimple", opts);
  auto s = summarize(reports);
  EXPECT_GT(s.skipped, 0U);
  EXPECT_EQ(s.fail, 0U);
  EXPECT_EQ(exit_status(reports), 0);
}

TEST(Verifier, DeterministicAcrossJobCounts) {
  auto instances = default_instances("p-dihedral");
  auto more      = default_instances("t-abelian");
  instances.insert(instances.end(), more.begin(), more.end());
  VerifyOptions one;
  VerifyOptions four;
  four.jobs = 4;
  auto a = run_instances(instances, one);
  auto b = run_instances(instances, four);
  EXPECT_EQ(strip_times(a), strip_times(b));
  for (std::size_t i = 1; i < a.size(); ++i) {
    EXPECT_LT(a[i - 1].id, a[i].id);
  }
}

TEST(Verifier, JsonlOneLinePerReport) {
  auto reports = verify("psl2-normalizer", VerifyOptions{});
  auto text    = reports_to_jsonl(reports);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), static_cast<long>(reports.size()));
  for (auto const& r : reports) {
    EXPECT_EQ(r.status, ReportStatus::pass) << r.id << " " << r.message;
  }
}

TEST(Verifier, ClassCPrediction) {
  EXPECT_TRUE(class_c_prediction(5, true, true));
  EXPECT_FALSE(class_c_prediction(4, true, true));
  EXPECT_TRUE(class_c_prediction(6, false, false));
  EXPECT_TRUE(class_c_prediction(21, false, false));
  EXPECT_FALSE(class_c_prediction(15, true, true));
  EXPECT_FALSE(class_c_prediction(8, false, false));
  EXPECT_FALSE(class_c_prediction(12, false, false));
}
