#include <gtest/gtest.h>

#include "nlgs/report_json.hpp"

namespace {

nlgs::BoundReport small_report(double theta, bool oracle) {
  const auto h = nlgs::fermionic_hamiltonian(
      nlgs::build_css_hamiltonian({2, {{1, 1}}, {{1, 1}}}), nlgs::Mapping::assimilation, 2);
  const auto rot = nlgs::rotate_hamiltonian(h, theta, nlgs::AncillaPolicy::shared);
  nlgs::BoundConfig cfg;
  cfg.theta = theta;
  cfg.restarts = 2;
  cfg.seed = 4;
  return nlgs::certify(rot, cfg, oracle ? std::optional<std::size_t>(12) : std::nullopt);
}

std::vector<std::string> keys(const nlohmann::ordered_json& j) {
  std::vector<std::string> out;
  for (const auto& item : j.items()) out.push_back(item.key());
  return out;
}

TEST(ReportJson, LeadingKeysInFixedOrder) {
  const auto j = nlgs::report_json(small_report(0.0, true), nlgs::RunManifest{});
  const auto k = keys(j);
  const std::vector<std::string> head{"claimed_bound",   "gaussian_min",
                                      "exact_ground",    "theta_in_window",
                                      "generators_commute", "verdict", "manifest"};
  ASSERT_GE(k.size(), head.size());
  EXPECT_EQ(std::vector<std::string>(k.begin(), k.begin() + 7), head);
  EXPECT_EQ(j["verdict"], "bound_vacuous");
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(j["manifest"]["tool_version"], nlgs::kToolVersion);
}

TEST(ReportJson, NullExactGroundWithoutOracle) {
  const auto j = nlgs::report_json(small_report(0.0, false), nlgs::RunManifest{});
  EXPECT_TRUE(j["exact_ground"].is_null());
  EXPECT_TRUE(j["empirical_gap"].is_null());
}

TEST(ReportJson, WitnessPresentOnlyWhenViolated) {
  const auto rep = small_report(1.35, true);
  const auto j = nlgs::report_json(rep, nlgs::RunManifest{});
  EXPECT_EQ(j["witness"].is_null(), rep.verdict != nlgs::Verdict::bound_violated);
  EXPECT_EQ(j["argmin_gamma"].size(), static_cast<std::size_t>(rep.argmin_gamma.num_majoranas()));
}

TEST(ReportJson, DumpIsDeterministic) {
  nlgs::RunManifest m;
  m.seed = 4;
  m.restarts = 2;
  const auto a = nlgs::report_json(small_report(0.9, true), m).dump(2);
  const auto b = nlgs::report_json(small_report(0.9, true), m).dump(2);
  EXPECT_EQ(a, b);
}

TEST(HamiltonianJson, RepetitionCodeSummary) {
  const auto h = nlgs::fermionic_hamiltonian(
      nlgs::build_css_hamiltonian({2, {{1, 1}}, {{1, 1}}}), nlgs::Mapping::assimilation);
  const auto j = nlgs::hamiltonian_json(h);
  EXPECT_EQ(j["k0"], 2);
  EXPECT_EQ(j["num_majoranas"], 6);
  EXPECT_EQ(j["term_count"], 2);
  EXPECT_EQ(j["terms"][0]["kind"], "X");
  EXPECT_EQ(j["terms"][1]["kind"], "Z");
}

}  // namespace
