#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include <gss/verify.hpp>

using namespace gss;

namespace {

VerifyOptions small() {
  VerifyOptions o;
  o.nu = 13;
  o.nv = 11;
  return o;
}

void expect_all_pass(const VerificationReport& r) {
  EXPECT_TRUE(r.overall_pass()) << r.family;
  for (const CheckRecord& c : r.checks)
    EXPECT_NE(c.status, CheckStatus::fail) << r.family << ": " << c.name << " dev=" << c.max_abs_deviation << " "
                                           << c.reason;
}

}  // namespace

TEST(Verify, EveryBuiltInFamilyPasses) {
  const std::vector<FamilySpec> specs = {PlaneSpec{},
                                         CaseISpec{1.0, 2.0, {}},
                                         CaseISpec{2.0, 2.0, {}},
                                         CaseISpec{3.0, 2.0, {}},
                                         CaseIISpec{3.0, 2.0, AngleFunction::identity(), {}},
                                         CaseIISpec{1.0, 1.0, AngleFunction::constant(0.2), {}},
                                         CaseIIISpec{1.0, 2.0, rho_example11(), "example11", {}},
                                         CaseIIISpec{3.0, 2.0, rho_small_circle(1.1), "small-circle", {}},
                                         OtsukiSpec{OtsukiVariant::a, {}},
                                         OtsukiSpec{OtsukiVariant::b, {}}};
  for (const FamilySpec& spec : specs) expect_all_pass(verify_surface(Surface(spec), small()));
}

TEST(Verify, OtsukiRecordsConstantAndSkipsInverseCSquared) {
  const VerificationReport r = verify_surface(Surface(OtsukiSpec{}), small());
  ASSERT_NE(r.find("gauss_curvature_constant_on_grid"), nullptr);
  EXPECT_EQ(r.find("gauss_curvature_constant_on_grid")->status, CheckStatus::pass);
  EXPECT_EQ(r.find("gauss_curvature_inverse_c_squared")->status, CheckStatus::not_applicable);
  EXPECT_EQ(r.find("affine_rank_4")->status, CheckStatus::pass);
  bool recorded = false;
  for (const auto& [k, v] : r.recorded)
    if (k == "K_mean") {
      recorded = true;
      EXPECT_NEAR(v, 1.0, 1e-12);
    }
  EXPECT_TRUE(recorded);
}

TEST(Verify, SphereRadiusOnlyAtLambdaEqualsC) {
  EXPECT_EQ(verify_surface(Surface(CaseISpec{2.0, 2.0, {}}), small()).find("sphere_radius")->status, CheckStatus::pass);
  EXPECT_EQ(verify_surface(Surface(CaseISpec{1.0, 2.0, {}}), small()).find("sphere_radius")->status,
            CheckStatus::not_applicable);
}

TEST(Verify, CurveExamples) {
  for (int which : {1, 2, 3}) {
    const VerificationReport r =
        verify_curve_report(example_curve(which, 3.0, 2.0, AngleFunction::identity()), "example" + std::to_string(which));
    expect_all_pass(r);
  }
  const VerificationReport bad = verify_curve_report(
      SphericalCurveSpec(DirectionFunction::constant({2.0, 0.0}), 1.0, 2.0), "scaled");
  EXPECT_FALSE(bad.overall_pass());
  EXPECT_EQ(bad.find("direction_unit")->status, CheckStatus::fail);
}

TEST(Verify, DomainErrorInsideCheckFailsThatCheck) {
  // Grid touching the edge of the radicand interval: phi'' is unbounded there.
  const Surface s(CaseISpec{4.0, 2.0, Rect{{0.0, 5.0}, {0.0, 1.0}}});
  const VerificationReport r = verify_surface(s, small());
  EXPECT_FALSE(r.overall_pass());
  const CheckRecord* c = r.find("gauss_curvature_constant");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, CheckStatus::fail);
  EXPECT_NE(c->reason.find("at (u, v)"), std::string::npos);
}

TEST(Verify, JsonIsStableAndParsable) {
  const VerificationReport r = verify_surface(Surface(CaseIIISpec{}), small());
  std::ostringstream a, b;
  write_json(a, r);
  write_json(b, verify_surface(Surface(CaseIIISpec{}), small()));
  EXPECT_EQ(a.str(), b.str());
  const auto j = nlohmann::json::parse(a.str());
  EXPECT_EQ(j["family"], "case3");
  EXPECT_EQ(j["grid"], "13x11");
  EXPECT_EQ(j["overall_pass"], true);
  const auto& first = j["checks"][0];
  std::vector<std::string> keys;
  const auto ordered = nlohmann::ordered_json::parse(a.str());
  for (const auto& [k, v] : ordered["checks"][0].items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"name", "claim", "max_abs_deviation", "tolerance", "status", "grid",
                                            "wall_time_ms", "reason"}));
  EXPECT_TRUE(first["wall_time_ms"].is_null());
}

TEST(Verify, TimingIsOptIn) {
  VerifyOptions o = small();
  o.timing = true;
  const VerificationReport r = verify_surface(Surface(PlaneSpec{}), o);
  for (const CheckRecord& c : r.checks) EXPECT_TRUE(c.wall_time_ms.has_value());
}

TEST(Verify, ReportWithoutChecksDoesNotPass) { EXPECT_FALSE(VerificationReport{}.overall_pass()); }
