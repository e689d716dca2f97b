#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "frame.hpp"
#include "surface_jet.hpp"
#include "vec.hpp"

namespace gss {

// 2x2 real matrix, row-major.
struct Mat2 {
  double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;

  double operator()(int i, int j) const { return i == 0 ? (j == 0 ? a11 : a12) : (j == 0 ? a21 : a22); }
  double det() const { return a11 * a22 - a12 * a21; }
  double trace() const { return a11 + a22; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22, a.a21 * b.a11 + a.a22 * b.a21,
            a.a21 * b.a12 + a.a22 * b.a22};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
  }
  friend Mat2 operator*(double s, const Mat2& a) { return {s * a.a11, s * a.a12, s * a.a21, s * a.a22}; }
};

struct FirstForm {
  double g11 = 0.0, g12 = 0.0, g22 = 0.0;
  double Wsq = 0.0;  // g11*g22 - g12^2

  bool regular(double tau_reg = kTauReg) const { return Wsq > tau_reg; }
  Mat2 matrix() const { return {g11, g12, g12, g22}; }
  Mat2 inverse() const { return (1.0 / Wsq) * Mat2{g22, -g12, -g12, g11}; }
};

inline FirstForm first_form(const SurfaceJet2& jet) {
  FirstForm I;
  I.g11 = dot(jet.Xu, jet.Xu);
  I.g12 = dot(jet.Xu, jet.Xv);
  I.g22 = dot(jet.Xv, jet.Xv);
  I.Wsq = I.g11 * I.g22 - I.g12 * I.g12;
  return I;
}

// Coefficients L^k_ij = <h(X_i, X_j), N_k>, one symmetric matrix per frame normal.
struct SecondForm {
  std::vector<Mat2> L;
  NormalFrame frame;

  std::size_t codim() const noexcept { return L.size(); }
};

// The normal part of X_ij is h(X_i, X_j); frame normals annihilate the tangential part, so
// projecting the raw second partials is enough.
inline SecondForm second_form(const SurfaceJet2& jet, const NormalFrame& frame) {
  SecondForm II;
  II.frame = frame;
  for (const VecN& N : frame.normals) {
    if (N.dim() != jet.dim()) throw DimensionError(jet.dim(), N.dim());
    const double l12 = dot(jet.Xuv, N);
    II.L.push_back({dot(jet.Xuu, N), l12, l12, dot(jet.Xvv, N)});
  }
  return II;
}

namespace detail {
inline void require_regular(const FirstForm& I, double tau_reg) {
  if (!I.regular(tau_reg)) throw SingularPointError("singular point: W^2 <= tau_reg", NAN, NAN);
}
}  // namespace detail

inline double gauss_curvature(const FirstForm& I, const SecondForm& II, double tau_reg = kTauReg) {
  detail::require_regular(I, tau_reg);
  double sum = 0.0;
  for (const Mat2& L : II.L) sum += L.a11 * L.a22 - L.a12 * L.a12;
  return sum / I.Wsq;
}

struct MeanCurvature {
  VecN Hvec;
  std::vector<double> Hk;
};

inline MeanCurvature mean_curvature(const FirstForm& I, const SecondForm& II, double tau_reg = kTauReg) {
  detail::require_regular(I, tau_reg);
  MeanCurvature H;
  if (II.frame.size() != II.codim()) throw DimensionError(II.frame.size(), II.codim());
  H.Hvec = II.codim() ? VecN(II.frame[0].dim()) : VecN();
  for (std::size_t k = 0; k < II.codim(); ++k) {
    const Mat2& L = II.L[k];
    const double hk = (L.a11 * I.g22 + L.a22 * I.g11 - 2.0 * L.a12 * I.g12) / (2.0 * I.Wsq);
    H.Hk.push_back(hk);
    H.Hvec += hk * II.frame[k];
  }
  return H;
}

// A_k = G^{-1} L_k, self-adjoint with respect to G.
inline Mat2 shape_operator(const FirstForm& I, const SecondForm& II, std::size_t k, double tau_reg = kTauReg) {
  detail::require_regular(I, tau_reg);
  if (k >= II.codim()) throw DimensionError(k, II.codim());
  return I.inverse() * II.L[k];
}

// <[A_a, A_b] X_u, X_v> / W, i.e. the Ricci term <R^perp(e1, e2) N_a, N_b> on an orthonormal
// tangent basis.
inline double ricci_term(const FirstForm& I, const SecondForm& II, std::size_t a, std::size_t b,
                         double tau_reg = kTauReg) {
  const Mat2 Aa = shape_operator(I, II, a, tau_reg), Ab = shape_operator(I, II, b, tau_reg);
  const Mat2 C = Aa * Ab - Ab * Aa;
  // C X_u = C(0,0) X_u + C(1,0) X_v
  const double value = C(0, 0) * I.g12 + C(1, 0) * I.g22;
  return value / std::sqrt(I.Wsq);
}

// Norm of the normal curvature over all unordered normal pairs; 0 when there are fewer than two
// normals.
inline double normal_curvature_commutator(const FirstForm& I, const SecondForm& II, double tau_reg = kTauReg) {
  detail::require_regular(I, tau_reg);
  double sum = 0.0;
  for (std::size_t a = 0; a < II.codim(); ++a)
    for (std::size_t b = a + 1; b < II.codim(); ++b) {
      const double r = ricci_term(I, II, a, b, tau_reg);
      sum += r * r;
    }
  return std::sqrt(sum);
}

// Signed closed form for surfaces in E^4 (exactly two normals), denominator W^3 with W > 0.
inline double normal_curvature_closed_form(const FirstForm& I, const SecondForm& II, double tau_reg = kTauReg) {
  detail::require_regular(I, tau_reg);
  if (II.codim() != 2) throw DimensionError(II.codim(), 2);
  const Mat2 &L1 = II.L[0], &L2 = II.L[1];
  const double num = I.g11 * (L1.a12 * L2.a22 - L2.a12 * L1.a22) - I.g12 * (L1.a11 * L2.a22 - L2.a11 * L1.a22) +
                     I.g22 * (L1.a11 * L2.a12 - L2.a11 * L1.a12);
  const double W = std::sqrt(I.Wsq);
  return num / (W * W * W);
}

struct NormalCurvature {
  double KN = 0.0;                   // nonnegative, from the commutators
  std::optional<double> KN_signed;  // closed form, codimension 2 only
};

// Computes the commutator norm and, in codimension 2, cross-checks it against the closed form.
inline NormalCurvature normal_curvature(const FirstForm& I, const SecondForm& II, double tau_reg = kTauReg) {
  NormalCurvature out;
  out.KN = normal_curvature_commutator(I, II, tau_reg);
  if (II.codim() == 2) {
    out.KN_signed = normal_curvature_closed_form(I, II, tau_reg);
    double scale = 1.0;
    for (const Mat2& L : II.L) scale = std::fmax(scale, std::fabs(L.a11) + std::fabs(L.a12) + std::fabs(L.a22));
    scale = scale * scale / I.Wsq * std::fmax(1.0, std::fmax(I.g11, I.g22) / std::sqrt(I.Wsq));
    if (std::fabs(out.KN - std::fabs(*out.KN_signed)) > 1e-12 * scale)
      throw ToleranceError("normal curvature: commutator and closed-form routes disagree");
  }
  return out;
}

struct CurvatureReport {
  FirstForm I;
  SecondForm II;
  double K = 0.0;
  VecN Hvec;
  double Hnorm = 0.0;
  std::vector<double> Hk;
  double KN = 0.0;
  std::optional<double> KN_signed;
  std::vector<Mat2> shape_ops;
};

inline CurvatureReport curvature_report(const SurfaceJet2& jet, const NormalFrame& frame, double tau_reg = kTauReg) {
  CurvatureReport r;
  r.I = first_form(jet);
  if (!r.I.regular(tau_reg)) throw SingularPointError("singular point: W^2 <= tau_reg", jet.u, jet.v);
  r.II = second_form(jet, frame);
  r.K = gauss_curvature(r.I, r.II, tau_reg);
  MeanCurvature H = mean_curvature(r.I, r.II, tau_reg);
  r.Hvec = std::move(H.Hvec);
  r.Hk = std::move(H.Hk);
  r.Hnorm = norm(r.Hvec);
  const NormalCurvature kn = normal_curvature(r.I, r.II, tau_reg);
  r.KN = kn.KN;
  r.KN_signed = kn.KN_signed;
  for (std::size_t k = 0; k < r.II.codim(); ++k) r.shape_ops.push_back(shape_operator(r.I, r.II, k, tau_reg));
  return r;
}

// Report in the deterministic Gram-Schmidt frame.
inline CurvatureReport curvature_report(const SurfaceJet2& jet, double tau_reg = kTauReg,
                                        double tau_frame = kTauFrame) {
  return curvature_report(jet, normal_frame(jet, tau_reg, tau_frame), tau_reg);
}

}  // namespace gss
