#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <gss/curvature.hpp>

#include "random_maps.hpp"

using namespace gss;

namespace {

struct RoundSphere {
  double R;
  std::size_t dim() const { return 3; }
  template <Scalar T>
  std::vector<T> operator()(const T& u, const T& v) const {
    return {R * cos(u) * cos(v), R * cos(u) * sin(v), R * sin(u)};
  }
};

struct Cylinder {
  double R;
  std::size_t dim() const { return 3; }
  template <Scalar T>
  std::vector<T> operator()(const T& u, const T& v) const {
    return {R * cos(v), R * sin(v), u};
  }
};

// Unit circles in two orthogonal planes: flat, with flat normal bundle.
struct CliffordTorus {
  std::size_t dim() const { return 4; }
  template <Scalar T>
  std::vector<T> operator()(const T& u, const T& v) const {
    return {cos(u), sin(u), cos(v), sin(v)};
  }
};

// Graph of z -> z^2 in C^2, a complex curve.
struct ComplexSquare {
  std::size_t dim() const { return 4; }
  template <Scalar T>
  std::vector<T> operator()(const T& u, const T& v) const {
    return {u, v, u * u - v * v, 2.0 * u * v};
  }
};

}  // namespace

TEST(Curvature, RoundSphereInE3) {
  for (double R : {0.5, 1.0, 3.0}) {
    const SurfaceJet2 j = forward_jet(RoundSphere{R}, 0.3, 1.1);
    const CurvatureReport r = curvature_report(j);
    EXPECT_NEAR(r.K, 1 / (R * R), 1e-13);
    EXPECT_NEAR(r.Hnorm, 1 / R, 1e-13);
    EXPECT_EQ(r.KN, 0.0);
    EXPECT_FALSE(r.KN_signed);
  }
}

TEST(Curvature, CylinderHasZeroGaussCurvature) {
  const CurvatureReport r = curvature_report(forward_jet(Cylinder{2.0}, 0.4, 0.9));
  EXPECT_NEAR(r.K, 0.0, 1e-15);
  EXPECT_NEAR(r.Hnorm, 0.25, 1e-15);
}

TEST(Curvature, CliffordTorus) {
  const CurvatureReport r = curvature_report(forward_jet(CliffordTorus{}, 0.7, -1.2));
  EXPECT_NEAR(r.K, 0.0, 1e-15);
  EXPECT_NEAR(r.KN, 0.0, 1e-15);
  EXPECT_NEAR(r.Hnorm, std::sqrt(0.5), 1e-15);
}

TEST(Curvature, ComplexCurveHasNormalCurvatureEqualToGaussCurvature) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> p(-1.0, 1.0);
  for (int k = 0; k < 20; ++k) {
    const double u = p(rng), v = p(rng);
    const CurvatureReport r = curvature_report(forward_jet(ComplexSquare{}, u, v));
    const double rr = 1.0 + 4.0 * (u * u + v * v);
    EXPECT_NEAR(r.K, -8.0 / (rr * rr * rr), 1e-13);
    EXPECT_NEAR(r.KN, std::fabs(r.K), 1e-13);
    EXPECT_NEAR(r.Hnorm, 0.0, 1e-14);
  }
}

TEST(Curvature, DeterminantAndTraceIdentities) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> p(-0.5, 0.5);
  for (int trial = 0; trial < 100; ++trial) {
    const CurvatureReport r = curvature_report(forward_jet(QuarticGraph::random(rng), p(rng), p(rng)));
    double detsum = 0.0;
    for (std::size_t k = 0; k < 2; ++k) {
      detsum += r.shape_ops[k].det();
      EXPECT_NEAR(0.5 * r.shape_ops[k].trace(), r.Hk[k], 1e-12 * std::fmax(1.0, std::fabs(r.Hk[k])));
      const Mat2 GA = r.I.matrix() * r.shape_ops[k];
      EXPECT_NEAR(GA.a12, GA.a21, 1e-12 * std::fmax(1.0, std::fabs(GA.a12)));
    }
    EXPECT_NEAR(detsum, r.K, 1e-12 * std::fmax(1.0, std::fabs(r.K)));
  }
}

TEST(Curvature, CommutatorAndClosedFormNormalCurvatureAgree) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> p(-0.6, 0.6);
  double largest = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const SurfaceJet2 j = forward_jet(QuarticGraph::random(rng), p(rng), p(rng));
    const FirstForm I = first_form(j);
    const SecondForm II = second_form(j, normal_frame(j));
    const double a = normal_curvature_commutator(I, II), b = normal_curvature_closed_form(I, II);
    EXPECT_NEAR(a, std::fabs(b), 1e-9 * std::fmax(1.0, a));
    // Signed relation: closed form = -(pairwise Ricci term).
    EXPECT_NEAR(b, -ricci_term(I, II, 0, 1), 1e-9 * std::fmax(1.0, a));
    largest = std::fmax(largest, a);
  }
  EXPECT_GT(largest, 1e-2);  // the sample is not trivially flat
}

TEST(Curvature, ClosedFormNormalCurvatureNeedsCodimensionTwo) {
  const SurfaceJet2 j = forward_jet(RoundSphere{1.0}, 0.2, 0.2);
  EXPECT_THROW(normal_curvature_closed_form(first_form(j), second_form(j, normal_frame(j))), DimensionError);
}

TEST(Curvature, SingularPointCarriesLocation) {
  // Pole of the latitude parametrization.
  const SurfaceJet2 j = forward_jet(RoundSphere{1.0}, std::numbers::pi / 2, 0.5);
  try {
    curvature_report(j, NormalFrame{{VecN{0, 0, 1}}, FrameSource::paper_analytic});
    FAIL() << "expected SingularPointError";
  } catch (const SingularPointError& e) {
    EXPECT_DOUBLE_EQ(e.u(), std::numbers::pi / 2);
    EXPECT_DOUBLE_EQ(e.v(), 0.5);
  }
}

TEST(Curvature, FrameSizeMismatchIsDimensionError) {
  const SurfaceJet2 j = forward_jet(CliffordTorus{}, 0.1, 0.1);
  const FirstForm I = first_form(j);
  SecondForm II = second_form(j, normal_frame(j));
  II.frame.normals.pop_back();
  EXPECT_THROW(mean_curvature(I, II), DimensionError);
}
