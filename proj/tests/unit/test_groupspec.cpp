#include <gtest/gtest.h>

#include "centra/catalog.hpp"
#include "centra/classify.hpp"
#include "centra/error.hpp"
#include "centra/groupspec.hpp"
#include "centra/json_io.hpp"

using namespace centra;

namespace {
  SpecContext data_ctx() {
    SpecContext ctx;
    ctx.base_dir = CENTRA_TEST_DATA_DIR;
    return ctx;
  }
}  // namespace

TEST(GroupSpec, Families) {
  std::vector<std::pair<std::string, std::size_t>> cases{
      {"cyclic:12", 12}, {"abelian:2,4", 8}, {"dihedral:16", 16}, {"sd:32", 32},
      {"q:16", 16},      {"xsp:3,p", 27},    {"xsp:3,p2", 27},    {"sym:5", 120},
      {"alt:6", 360},    {"psl2:9", 360},    {"psl2:8", 504},     {"psl3:2", 168},
      {"perms:(1,2,3);(1,2)", 6},            {"dp:cyclic:2+cyclic:3+cyclic:5", 30},
      {"dp:dihedral:8+cyclic:2", 16}};
  for (auto const& [spec, order] : cases) {
    EXPECT_EQ(build_group(spec)->order(), order) << spec;
  }
  EXPECT_EQ(describe(*build_group("xsp:3,p2")), "order:27");
}

TEST(GroupSpec, Malformed) {
  for (std::string bad : {"nonsense:3", "cyclic", "cyclic:x", "dihedral:7", "psl2:6", "perms:(1,2", "dp:cyclic:2+"}) {
    EXPECT_ANY_THROW(build_group(bad)) << bad;
  }
  EXPECT_THROW(build_group("cyclic"), UsageError);
}

TEST(GroupSpec, SemidirectFromFileAndInline) {
  auto r = resolve_group_spec("sdp:@fixtures/s3_action.json", data_ctx());
  EXPECT_EQ(r.group->order(), 6U);
  ASSERT_TRUE(r.action);
  EXPECT_TRUE(acts_fixed_point_freely(*r.action));
  auto inline_spec = resolve_group_spec(
      R"(sdp:{"acting":"cyclic:2","target":"abelian:3,3","power_images":{"0":[2,2]}})");
  EXPECT_EQ(inline_spec.group->order(), 18U);
  EXPECT_EQ(build_group("sdp:@fixtures/q8_on_c3_action.json", data_ctx())->order(), 24U);
}

TEST(GroupSpec, FallbackDirectory) {
  SpecContext ctx;
  ctx.base_dir     = "/nonexistent";
  ctx.fallback_dir = CENTRA_TEST_DATA_DIR;
  EXPECT_EQ(build_group("sdp:@fixtures/c2_on_c3xc3_action.json", ctx)->order(), 18U);
  EXPECT_ANY_THROW(build_group("sdp:@fixtures/missing.json", ctx));
}

TEST(GroupSpec, Presentations) {
  auto r = resolve_group_spec("presentation:@presentations/ex-nc18.pres#auto:18", data_ctx());
  ASSERT_TRUE(r.realization);
  EXPECT_EQ(r.realization->convention, Convention::A);
  EXPECT_EQ(r.group->order(), 18U);
  EXPECT_EQ(build_group("presentation:@presentations/ex-nc18.pres#B", data_ctx())->order(), 2U);
  for (auto const& entry : presentation_catalog()) {
    auto p = resolve_group_spec("pres:" + std::string(entry.name));
    EXPECT_EQ(p.group->order(), entry.expected_order) << entry.name;
  }
  EXPECT_THROW(build_group("pres:nope"), UsageError);
}

TEST(GroupSpec, PresentationFilesMatchCatalog) {
  for (auto const& entry : presentation_catalog()) {
    auto from_file = resolve_group_spec(
        "presentation:@presentations/" + std::string(entry.name) + ".pres#auto:" +
            std::to_string(entry.expected_order),
        data_ctx());
    auto from_catalog = resolve_group_spec("pres:" + std::string(entry.name));
    EXPECT_EQ(from_file.group->generators(), from_catalog.group->generators()) << entry.name;
    EXPECT_EQ(from_file.realization->convention, from_catalog.realization->convention);
  }
}

TEST(GroupSpec, WitnessFixturesMatchCatalog) {
  std::vector<std::pair<std::string, ExclusionWitness>> cases{
      {"a7_witness.json", a7_witness()},
      {"m11_witness.json", m11_witness()},
      {"psl3_7_witness.json", psl3_witness(7)}};
  for (auto const& [file, builtin] : cases) {
    auto w = witness_from_json(read_json_file(std::filesystem::path(CENTRA_TEST_DATA_DIR) / "fixtures" / file));
    EXPECT_EQ(w.generators, builtin.generators) << file;
    EXPECT_EQ(w.expected, builtin.expected) << file;
    auto r = resolve_group_spec("witness:@fixtures/" + file, data_ctx());
    EXPECT_EQ(describe(*r.group), builtin.expected) << file;
  }
  EXPECT_EQ(build_group("witness:a7")->order(), 12U);
  EXPECT_EQ(build_group("witness:psl3:7")->degree(), 57U);
}

TEST(GroupSpec, GroupJsonRoundTrip) {
  auto G = build_group("sd:16");
  auto j = group_to_json(*G);
  auto H = group_from_json(j);
  EXPECT_EQ(H->order(), 16U);
  EXPECT_EQ(H->generators(), G->generators());
  j["order"] = 17;
  EXPECT_ANY_THROW(group_from_json(j));
  EXPECT_EQ(perm_from_json(nlohmann::json("(1,3)"), 3), Perm::from_cycles("(1,3)", 3));
  EXPECT_EQ(perm_from_json(perm_to_json(Perm::from_cycles("(1,2,3)", 4))), Perm::from_cycles("(1,2,3)", 4));
}

TEST(GroupSpec, VerdictJson) {
  auto G = build_group("dihedral:12");
  auto j = verdict_to_json(in_class_X(*G), "dihedral:12");
  EXPECT_EQ(j["member"], false);
  EXPECT_EQ(j["method"], "pair-reduced");
  ASSERT_TRUE(j["witness"].is_object());
  EXPECT_TRUE(j["witness"]["z"].is_string());

  auto w = psl3_witness(3);
  auto c = verdict_to_json(certify_non_membership(w.ambient, w.generators), "witness:psl3:3");
  EXPECT_TRUE(c["member"].is_null());
}
