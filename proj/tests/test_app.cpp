#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include <gss/app.hpp>

using namespace gss;
using namespace gss::app;
namespace fs = std::filesystem;

namespace {

class AppTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gss_app_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Data rows of a CSV file, split on commas; comment lines dropped, header first.
  static std::vector<std::vector<std::string>> rows(const std::string& p) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in(slurp(p));
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      out.push_back(split(line, ','));
    }
    return out;
  }

  static std::size_t column(const std::vector<std::string>& header, const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    ADD_FAILURE() << "missing column " << name;
    return 0;
  }

  fs::path dir_;
};

}  // namespace

TEST(Parse, Numbers) {
  EXPECT_DOUBLE_EQ(parse_number("2.5"), 2.5);
  EXPECT_DOUBLE_EQ(parse_number("pi"), std::numbers::pi);
  EXPECT_DOUBLE_EQ(parse_number("-0.5pi"), -0.5 * std::numbers::pi);
  EXPECT_DOUBLE_EQ(parse_number("2*pi"), 2 * std::numbers::pi);
  EXPECT_THROW(parse_number("abc"), SpecError);
  EXPECT_THROW(parse_number("1.0x"), SpecError);
  EXPECT_THROW(parse_number(""), SpecError);
}

TEST(Parse, GridDomainAlphaRho) {
  EXPECT_EQ(parse_grid("41x7"), (std::pair<std::size_t, std::size_t>{41, 7}));
  EXPECT_THROW(parse_grid("41"), SpecError);
  EXPECT_THROW(parse_grid("4x-1"), SpecError);
  const Rect r = parse_rect("-1:1,0:2pi");
  EXPECT_EQ(r.u.lo, -1.0);
  EXPECT_DOUBLE_EQ(r.v.hi, 2 * std::numbers::pi);
  EXPECT_THROW(parse_rect("0:1"), SpecError);
  EXPECT_DOUBLE_EQ(parse_alpha("poly:1,2")(3.0), 7.0);
  EXPECT_DOUBLE_EQ(parse_alpha("const:0.3")(9.0), 0.3);
  EXPECT_DOUBLE_EQ(parse_alpha("u")(0.25), 0.25);
  EXPECT_THROW(parse_alpha("cos"), SpecError);
  EXPECT_NO_THROW(parse_rho("small-circle:1.0"));
  EXPECT_THROW(parse_rho("ellipse"), SpecError);
  EXPECT_THROW(parse_jet("symbolic", 1e-4), SpecError);
}

TEST(Parse, Projections) {
  const Projection d = parse_projection(std::string("drop1"), 4);
  EXPECT_EQ(d.apply(VecN{1, 2, 3, 4}), (VecN{2, 3, 4}));
  EXPECT_EQ(parse_projection(std::nullopt, 4).apply(VecN{1, 2, 3, 4}), (VecN{2, 3, 4}));
  const Projection p = parse_projection(std::string("plane:1,0,0,0;0,1,0,0;0,0,1,1"), 4);
  const VecN y = p.apply(VecN{1, 2, 3, 4});
  EXPECT_NEAR(y[2], 7 / std::sqrt(2.0), 1e-15);
  EXPECT_THROW(parse_projection(std::string("plane:1,0,0,0;1,0,0,0;0,0,1,0"), 4), SpecError);
  EXPECT_THROW(parse_projection(std::string("plane:1,0,0;0,1,0;0,0,1"), 4), DimensionError);
  EXPECT_THROW(parse_projection(std::string("drop1"), 3), SpecError);
}

TEST_F(AppTest, ConfigFileOverridesFlags) {
  const std::string cfg_path = path("run.json");
  std::ofstream(cfg_path) << R"({"family": "case2", "lambda": 3, "grid": [5, 6], "alpha": "const:0.1"})";
  RunConfig cfg;
  cfg.family = "case1";
  cfg.lambda = 1.0;
  apply_config_file(cfg, cfg_path);
  EXPECT_EQ(cfg.family, "case2");
  EXPECT_EQ(cfg.lambda, 3.0);
  EXPECT_EQ(cfg.nu, 5u);
  EXPECT_EQ(cfg.nv, 6u);
  std::ofstream(cfg_path) << R"({"lamda": 3})";
  EXPECT_THROW(apply_config_file(cfg, cfg_path), SpecError);
  std::ofstream(cfg_path) << R"({"lambda": "three"})";
  EXPECT_THROW(apply_config_file(cfg, cfg_path), SpecError);
  EXPECT_THROW(apply_config_file(cfg, path("missing.json")), SpecError);
}

TEST_F(AppTest, EvalCaseIGrid) {
  RunConfig cfg;
  cfg.family = "case1";
  cfg.lambda = 1.0;
  cfg.c = 2.0;
  cfg.nu = cfg.nv = 5;
  cfg.out = path("case1.csv");
  ASSERT_EQ(run_eval(cfg), exit_ok);
  const auto t = rows(cfg.out);
  ASSERT_EQ(t.size(), 26u);
  EXPECT_EQ(t[0], (std::vector<std::string>{"u", "v", "x1", "x2", "x3", "K", "H_norm", "H_1", "K_N", "Wsq", "singular"}));
  for (std::size_t k = 1; k < t.size(); ++k) EXPECT_NEAR(std::stod(t[k][column(t[0], "K")]), 0.25, 1e-8);
  EXPECT_NE(slurp(cfg.out).find("\r\n"), std::string::npos);
}

TEST_F(AppTest, EvalPlaneAndCaseII) {
  RunConfig cfg;
  cfg.family = "plane";
  cfg.nu = cfg.nv = 2;
  cfg.out = path("plane.csv");
  ASSERT_EQ(run_eval(cfg), exit_ok);
  auto t = rows(cfg.out);
  ASSERT_EQ(t.size(), 5u);
  for (std::size_t k = 1; k < t.size(); ++k) {
    EXPECT_EQ(std::stod(t[k][column(t[0], "K")]), 0.0);
    EXPECT_EQ(std::stod(t[k][column(t[0], "H_norm")]), 0.0);
  }
  cfg.family = "case2";
  cfg.lambda = 3.0;
  cfg.nu = cfg.nv = 7;
  cfg.out = path("case2.csv");
  ASSERT_EQ(run_eval(cfg), exit_ok);
  t = rows(cfg.out);
  EXPECT_EQ(t[0].size(), 2u + 4u + 2u + 2u + 3u);
  for (std::size_t k = 1; k < t.size(); ++k) EXPECT_LT(std::stod(t[k][column(t[0], "K_N")]), 1e-8);
}

TEST_F(AppTest, EvalFlagsSingularRowsWithEmptyCurvature) {
  RunConfig cfg;
  cfg.family = "case1";
  cfg.lambda = 1.0;
  cfg.c = 2.0;
  cfg.domain = "0:pi,0:1";
  cfg.nu = 3;
  cfg.nv = 2;
  cfg.out = path("sing.csv");
  ASSERT_EQ(run_eval(cfg), exit_ok);
  const auto t = rows(cfg.out);
  const auto& last = t.back();
  EXPECT_EQ(last[column(t[0], "singular")], "1");
  EXPECT_EQ(last[column(t[0], "K")], "");
  EXPECT_EQ(t[1][column(t[0], "singular")], "0");
}

TEST_F(AppTest, EvalIsByteIdenticalAcrossThreadCounts) {
  RunConfig cfg;
  cfg.family = "case3";
  cfg.nu = 9;
  cfg.nv = 8;
  cfg.out = path("a.csv");
  ASSERT_EQ(run_eval(cfg), exit_ok);
  cfg.threads = 4;
  cfg.out = path("b.csv");
  ASSERT_EQ(run_eval(cfg), exit_ok);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
}

TEST_F(AppTest, VerifyExitCodesAndPrecondition) {
  RunConfig cfg;
  cfg.family = "case3";
  cfg.nu = cfg.nv = 11;
  cfg.out = path("ok.json");
  EXPECT_EQ(run_verify(cfg), exit_ok);
  EXPECT_TRUE(nlohmann::json::parse(slurp(cfg.out))["overall_pass"].get<bool>());

  cfg.family = "case1";
  cfg.lambda = -1.0;
  cfg.out = path("bad.json");
  EXPECT_EQ(run_verify(cfg), exit_config_error);
  const auto j = nlohmann::json::parse(slurp(cfg.out));
  EXPECT_FALSE(j["overall_pass"].get<bool>());
  EXPECT_EQ(j["checks"][0]["name"], "precondition");
  EXPECT_EQ(j["checks"][0]["status"], "fail");

  cfg.lambda = 4.0;
  cfg.domain = "0:5,0:1";
  cfg.out = path("edge.json");
  EXPECT_EQ(run_verify(cfg), exit_verification_failed);
}

TEST_F(AppTest, MeshCounts) {
  RunConfig cfg;
  cfg.family = "plane";
  cfg.nu = cfg.nv = 2;
  cfg.out = path("two.obj");
  ASSERT_EQ(run_mesh(cfg), exit_ok);
  std::istringstream two(slurp(cfg.out));
  std::string row;
  std::size_t faces = 0;
  while (std::getline(two, row)) faces += row.rfind("f ", 0) == 0;
  EXPECT_EQ(faces, 2u);
  EXPECT_TRUE(fs::exists(path("two.curvature.csv")));

  cfg.family = "case3";
  cfg.lambda = 1.0;
  cfg.c = 2.0;
  cfg.nu = 6;
  cfg.nv = 5;
  cfg.project = "drop1";
  cfg.out = path("c29.obj");
  ASSERT_EQ(run_mesh(cfg), exit_ok);
  std::istringstream in(slurp(cfg.out));
  std::string line;
  std::size_t v = 0, f = 0;
  while (std::getline(in, line)) {
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) {
      ++f;
      std::istringstream fl(line.substr(2));
      std::size_t a, b, c;
      fl >> a >> b >> c;
      EXPECT_GE(std::min({a, b, c}), 1u);
      EXPECT_LE(std::max({a, b, c}), 30u);
    }
  }
  EXPECT_EQ(v, 30u);
  EXPECT_GT(f, 0u);
  const auto side = rows(path("c29.curvature.csv"));
  EXPECT_EQ(side.size(), 31u);
  EXPECT_EQ(side[1][0], "1");
}

TEST_F(AppTest, MeshSphereVerticesOnFittedSphere) {
  RunConfig cfg;
  cfg.family = "case1";
  cfg.lambda = cfg.c = 1.0;
  cfg.nu = 12;
  cfg.nv = 10;
  cfg.out = path("sphere.obj");
  ASSERT_EQ(run_mesh(cfg), exit_ok);
  std::istringstream in(slurp(cfg.out));
  std::string tag;
  std::vector<VecN> pts;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    ls >> tag;
    if (tag != "v") continue;
    double x, y, z;
    ls >> x >> y >> z;
    pts.push_back(VecN{x, y, z});
  }
  const SphereFit fit = fit_sphere(pts);
  EXPECT_NEAR(fit.radius, 1.0, 1e-6);
  EXPECT_LT(fit.max_radial_deviation, 1e-6);
}

TEST_F(AppTest, CurveOutputs) {
  RunConfig cfg;
  cfg.family = "example1";
  cfg.lambda = 2.0;
  cfg.c = 2.0;
  cfg.samples = 100;
  cfg.out = path("ex1.csv");
  ASSERT_EQ(run_curve(cfg), exit_ok);
  auto t = rows(cfg.out);
  ASSERT_EQ(t.size(), 101u);
  for (std::size_t k = 1; k < t.size(); ++k) EXPECT_NEAR(std::stod(t[k][column(t[0], "speed")]), 1.0, 1e-8);

  cfg.family = "example3";
  cfg.lambda = 3.0;
  cfg.out = path("ex3.csv");
  ASSERT_EQ(run_curve(cfg), exit_ok);
  t = rows(cfg.out);
  std::size_t gammas = 0;
  for (const auto& h : t[0]) gammas += h.rfind("gamma_", 0) == 0;
  EXPECT_EQ(gammas, 4u);
  for (std::size_t k = 1; k < t.size(); ++k) EXPECT_LT(std::fabs(std::stod(t[k][column(t[0], "beta_4")])), 1e-10);
}

TEST_F(AppTest, CurveClippingIsReportedInHeaderComment) {
  RunConfig cfg;
  cfg.family = "example1";
  cfg.lambda = 4.0;
  cfg.c = 2.0;
  cfg.domain = "-3:3";
  cfg.samples = 10;
  cfg.out = path("clip.csv");
  ASSERT_EQ(run_curve(cfg), exit_ok);
  EXPECT_EQ(slurp(cfg.out).rfind("# domain clipped", 0), 0u);
}

TEST_F(AppTest, ErrorsMapToExitTwo) {
  RunConfig cfg;
  cfg.family = "torus";
  EXPECT_EQ(guarded([&] { return run_eval(cfg); }), exit_config_error);
  cfg.family = "case1";
  cfg.out = path("no/such/dir/out.csv");
  EXPECT_EQ(guarded([&] { return run_eval(cfg); }), exit_config_error);
  cfg.out = "-";
  cfg.nu = 1;
  EXPECT_EQ(guarded([&] { return run_eval(cfg); }), exit_config_error);
  cfg.nu = 5;
  cfg.format = "json";
  EXPECT_EQ(guarded([&] { return run_eval(cfg); }), exit_config_error);
  cfg.format.reset();
  cfg.family = "otsuki-a";
  cfg.frame = "paper";
  EXPECT_EQ(guarded([&] { return run_eval(cfg); }), exit_config_error);
}
