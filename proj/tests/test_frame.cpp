#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <gss/curvature.hpp>
#include <gss/frame.hpp>

#include "random_maps.hpp"

using namespace gss;

namespace {

SurfaceJet2 plane_jet() {
  return SurfaceJet2{VecN{0.2, 0.3, 0}, VecN{1, 0, 0}, VecN{0, 1, 0}, VecN(3), VecN(3), VecN(3), 0.2, 0.3};
}

NormalFrame rotated(const NormalFrame& f, double t) {
  NormalFrame r = f;
  r.normals[0] = std::cos(t) * f[0] + std::sin(t) * f[1];
  r.normals[1] = -std::sin(t) * f[0] + std::cos(t) * f[1];
  return r;
}

}  // namespace

TEST(NormalFrame, PlaneInE3GivesThirdAxis) {
  const NormalFrame f = normal_frame(plane_jet());
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0], (VecN{0, 0, 1}));
}

TEST(NormalFrame, SignNormalizedAndDeterministic) {
  const SurfaceJet2 j{VecN(3), VecN{0, 1, 0}, VecN{0, 0, 1}, VecN(3), VecN(3), VecN(3), 0, 0};
  const NormalFrame f = normal_frame(j);
  EXPECT_EQ(f[0], (VecN{1, 0, 0}));
  const SurfaceJet2 flipped{VecN(3), VecN{0, 0, 1}, VecN{0, 1, 0}, VecN(3), VecN(3), VecN(3), 0, 0};
  EXPECT_EQ(normal_frame(flipped)[0], (VecN{1, 0, 0}));
}

TEST(NormalFrame, OrthonormalOnRandomE4Surfaces) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> p(-0.5, 0.5);
  for (int trial = 0; trial < 100; ++trial) {
    const QuarticGraph g = QuarticGraph::random(rng);
    const SurfaceJet2 j = forward_jet(g, p(rng), p(rng));
    const NormalFrame f = normal_frame(j);
    ASSERT_EQ(f.size(), 2u);
    const FrameDefect d = frame_defect(f, j);
    EXPECT_LT(d.orthonormality, 1e-13);
    EXPECT_LT(d.tangency, 1e-13);
    for (const VecN& n : f.normals) {
      std::size_t k = 0;
      while (std::fabs(n[k]) <= kTauFrame) ++k;
      EXPECT_GT(n[k], 0.0);
    }
    const NormalFrame again = normal_frame(j);
    EXPECT_EQ(again[0], f[0]);
    EXPECT_EQ(again[1], f[1]);
  }
}

TEST(NormalFrame, ProjectorIsIdempotentWithTraceCodim) {
  std::mt19937_64 rng(11);
  const SurfaceJet2 j = forward_jet(QuarticGraph::random(rng), 0.1, -0.2);
  const NormalFrame f = normal_frame(j);
  const std::vector<double> P = projector(f.normals, 4);
  double trace = 0.0, defect = 0.0;
  for (std::size_t r = 0; r < 4; ++r) {
    trace += P[r * 4 + r];
    for (std::size_t c = 0; c < 4; ++c) {
      double pp = 0.0;
      for (std::size_t k = 0; k < 4; ++k) pp += P[r * 4 + k] * P[k * 4 + c];
      defect = std::fmax(defect, std::fabs(pp - P[r * 4 + c]));
      defect = std::fmax(defect, std::fabs(P[r * 4 + c] - P[c * 4 + r]));
    }
  }
  EXPECT_NEAR(trace, 2.0, 1e-14);
  EXPECT_LT(defect, 1e-14);
  EXPECT_LT(frame_span_distance(f, rotated(f, 0.9)), 1e-14);
}

TEST(NormalFrame, RotationLeavesInvariantsUnchanged) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const SurfaceJet2 j = forward_jet(QuarticGraph::random(rng), 0.3, 0.1);
    const NormalFrame f = normal_frame(j);
    const CurvatureReport a = curvature_report(j, f), b = curvature_report(j, rotated(f, 0.3 + trial));
    EXPECT_NEAR(a.K, b.K, 1e-12 * std::fmax(1.0, std::fabs(a.K)));
    EXPECT_NEAR(a.Hnorm, b.Hnorm, 1e-12 * std::fmax(1.0, a.Hnorm));
    EXPECT_NEAR(a.KN, b.KN, 1e-12 * std::fmax(1.0, a.KN));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(a.Hvec[i], b.Hvec[i], 1e-12 * std::fmax(1.0, a.Hnorm));
  }
}

TEST(NormalFrame, DegenerateTangentPlaneIsSingular) {
  SurfaceJet2 j = plane_jet();
  j.Xv = VecN{2, 0, 0};
  try {
    normal_frame(j);
    FAIL() << "expected SingularPointError";
  } catch (const SingularPointError& e) {
    EXPECT_EQ(e.u(), 0.2);
    EXPECT_EQ(e.v(), 0.3);
  }
}

TEST(NormalFrame, NeedsAmbientDimensionThree) {
  const SurfaceJet2 j{VecN(2), VecN{1, 0}, VecN{0, 1}, VecN(2), VecN(2), VecN(2), 0, 0};
  EXPECT_THROW(normal_frame(j), DimensionError);
}
