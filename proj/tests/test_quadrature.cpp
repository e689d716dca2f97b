#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <gss/quadrature.hpp>

using namespace gss;

namespace {

std::vector<double> scalar(double x) { return {x}; }

}  // namespace

TEST(Quadrature, PolynomialsAreExact) {
  const auto r = quad::integrate([](double t) { return scalar(7 * std::pow(t, 6) - 3 * t * t + 1); }, -1.0, 2.0);
  EXPECT_NEAR(r.value[0], (128.0 + 1.0) - (8.0 + 1.0) + 3.0, 1e-12);
  EXPECT_EQ(r.evaluations, 15u);
}

TEST(Quadrature, SineOverHalfPeriod) {
  const auto r = quad::integrate([](double t) { return scalar(std::sin(t)); }, 0.0, std::numbers::pi);
  EXPECT_NEAR(r.value[0], 2.0, 1e-13);
}

TEST(Quadrature, ReversedAndEmptyIntervals) {
  auto f = [](double t) { return std::vector<double>{std::exp(t), t}; };
  const auto fwd = quad::integrate(f, 0.0, 1.0), back = quad::integrate(f, 1.0, 0.0);
  EXPECT_NEAR(fwd.value[0], std::numbers::e - 1.0, 1e-13);
  EXPECT_DOUBLE_EQ(back.value[0], -fwd.value[0]);
  EXPECT_DOUBLE_EQ(back.value[1], -0.5);
  const auto zero = quad::integrate(f, 0.3, 0.3);
  ASSERT_EQ(zero.value.size(), 2u);
  EXPECT_EQ(zero.value[0], 0.0);
}

TEST(Quadrature, AdaptiveRefinementOnSteepIntegrand) {
  // sqrt has an unbounded derivative at 0.
  const auto r = quad::integrate([](double t) { return scalar(std::sqrt(t)); }, 0.0, 1.0, {1e-12, 60});
  EXPECT_NEAR(r.value[0], 2.0 / 3.0, 1e-11);
  EXPECT_GT(r.evaluations, 15u);
}

TEST(Quadrature, AgreesWithBoostGaussKronrod) {
  // The integrand of the spherical profile: sqrt(1 - k^2 sin^2(t/c)) times a direction.
  for (const double k : {0.3, 0.9, 1.0}) {
    const double c = 2.0;
    auto g = [&](double t) { return std::sqrt(std::fmax(0.0, 1 - k * k * std::pow(std::sin(t / c), 2))); };
    auto vec = [&](double t) { return std::vector<double>{g(t) * std::cos(t), g(t) * std::sin(t)}; };
    const double b = 0.95 * c * std::asin(1.0);
    const auto mine = quad::integrate(vec, 0.0, b);
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    const double ref0 = GK::integrate([&](double t) { return g(t) * std::cos(t); }, 0.0, b, 15, 1e-14);
    const double ref1 = GK::integrate([&](double t) { return g(t) * std::sin(t); }, 0.0, b, 15, 1e-14);
    EXPECT_NEAR(mine.value[0], ref0, 1e-10);
    EXPECT_NEAR(mine.value[1], ref1, 1e-10);
  }
}

TEST(Quadrature, CumulativeMatchesIndependentIntegrals) {
  auto f = [](double t) { return std::vector<double>{std::cos(3 * t), 1.0 / (1.0 + t * t)}; };
  const std::vector<double> grid{0.9, -0.7, 0.0, 0.2, -1.5, 2.0};
  const auto cum = quad::integrate_cumulative(f, 0.1, grid);
  ASSERT_EQ(cum.size(), grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    EXPECT_NEAR(cum[k][0], (std::sin(3 * grid[k]) - std::sin(0.3)) / 3, 1e-10);
    EXPECT_NEAR(cum[k][1], std::atan(grid[k]) - std::atan(0.1), 1e-10);
  }
}

TEST(Quadrature, Additivity) {
  auto f = [](double t) { return scalar(std::exp(-t * t)); };
  const double ab = quad::integrate(f, -0.4, 0.7).value[0], bc = quad::integrate(f, 0.7, 1.9).value[0];
  EXPECT_NEAR(ab + bc, quad::integrate(f, -0.4, 1.9).value[0], 2e-10);
}

TEST(Quadrature, ErrorPaths) {
  EXPECT_THROW(quad::integrate([](double t) { return scalar(1.0 / t); }, 0.0, 1.0), ToleranceError);
  EXPECT_THROW(quad::integrate([](double t) { return scalar(t); }, 0.0, 1.0, {0.0, 60}), SpecError);
}
