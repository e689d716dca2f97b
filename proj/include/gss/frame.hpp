#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"
#include "surface_jet.hpp"
#include "vec.hpp"

namespace gss {

inline constexpr double kTauFrame = 1e-10;
inline constexpr double kTauReg = 1e-12;
// Relaxation applied to frame/regularity tolerances for finite-difference jets.
inline constexpr double kFdRelaxation = 1e4;

enum class FrameSource { paper_analytic, gram_schmidt };

inline std::string to_string(FrameSource s) {
  return s == FrameSource::paper_analytic ? "paper-analytic" : "gram-schmidt";
}

// Orthonormal frame N_1..N_{n-2} of the normal space at one point.
struct NormalFrame {
  std::vector<VecN> normals;
  FrameSource source = FrameSource::gram_schmidt;

  std::size_t size() const noexcept { return normals.size(); }
  const VecN& operator[](std::size_t k) const { return normals[k]; }
};

namespace detail {

inline void orthogonalize_against(VecN& r, const std::vector<VecN>& basis) {
  // Two passes of modified Gram-Schmidt keep orthogonality at round-off level.
  for (int pass = 0; pass < 2; ++pass)
    for (const VecN& b : basis) r -= dot(r, b) * b;
}

inline void normalize_sign(VecN& n) {
  for (double x : n.coords()) {
    if (std::fabs(x) > kTauFrame) {
      if (x < 0.0) n *= -1.0;
      return;
    }
  }
}

}  // namespace detail

// Orthonormal basis {t1, t2} of span{Xu, Xv}.
inline std::vector<VecN> tangent_basis(const SurfaceJet2& jet, double tau_reg = kTauReg) {
  const double g11 = dot(jet.Xu, jet.Xu), g12 = dot(jet.Xu, jet.Xv), g22 = dot(jet.Xv, jet.Xv);
  if (!(g11 * g22 - g12 * g12 > tau_reg)) throw SingularPointError("degenerate tangent plane", jet.u, jet.v);
  std::vector<VecN> basis;
  basis.push_back(jet.Xu / std::sqrt(g11));
  VecN t2 = jet.Xv;
  detail::orthogonalize_against(t2, basis);
  basis.push_back(t2 / norm(t2));
  return basis;
}

// Gram-Schmidt on the standard basis e_1..e_n (in index order) against span{Xu, Xv}. Seeds whose
// residual has norm <= tau_frame are skipped. Each normal is sign-normalized so that its first
// coordinate exceeding tau_frame in magnitude is positive.
inline NormalFrame normal_frame(const SurfaceJet2& jet, double tau_reg = kTauReg, double tau_frame = kTauFrame) {
  jet.validate();
  const std::size_t n = jet.dim();
  if (n < 3) throw DimensionError(n, 3);
  std::vector<VecN> basis = tangent_basis(jet, tau_reg);
  NormalFrame frame;
  frame.source = FrameSource::gram_schmidt;
  for (std::size_t i = 0; i < n && frame.size() < n - 2; ++i) {
    VecN r = VecN::basis(n, i);
    detail::orthogonalize_against(r, basis);
    const double len = norm(r);
    if (len <= tau_frame) continue;
    r /= len;
    detail::orthogonalize_against(r, basis);
    r /= norm(r);
    detail::normalize_sign(r);
    basis.push_back(r);
    frame.normals.push_back(r);
  }
  if (frame.size() != n - 2) throw SingularPointError("normal frame construction failed", jet.u, jet.v);
  return frame;
}

// Orthogonal projector onto span(vectors) for an orthonormal list, as a dense n x n row-major matrix.
inline std::vector<double> projector(const std::vector<VecN>& orthonormal, std::size_t n) {
  std::vector<double> P(n * n, 0.0);
  for (const VecN& e : orthonormal) {
    if (e.dim() != n) throw DimensionError(e.dim(), n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) P[i * n + j] += e[i] * e[j];
  }
  return P;
}

// max_{a,b} |<N_a,N_b> - delta_ab| and max_a max(|<N_a,Xu>|, |<N_a,Xv>|) / |X_{u,v}|.
struct FrameDefect {
  double orthonormality = 0.0;
  double tangency = 0.0;
};

inline FrameDefect frame_defect(const NormalFrame& frame, const SurfaceJet2& jet) {
  FrameDefect d;
  const double lu = norm(jet.Xu), lv = norm(jet.Xv);
  for (std::size_t a = 0; a < frame.size(); ++a) {
    for (std::size_t b = 0; b < frame.size(); ++b)
      d.orthonormality = std::fmax(d.orthonormality, std::fabs(dot(frame[a], frame[b]) - (a == b ? 1.0 : 0.0)));
    d.tangency = std::fmax(d.tangency, std::fabs(dot(frame[a], jet.Xu)) / lu);
    d.tangency = std::fmax(d.tangency, std::fabs(dot(frame[a], jet.Xv)) / lv);
  }
  return d;
}

// Largest entrywise difference between the normal-space projectors of two frames.
inline double frame_span_distance(const NormalFrame& a, const NormalFrame& b) {
  if (a.size() != b.size() || a.size() == 0) return INFINITY;
  const std::size_t n = a[0].dim();
  const auto Pa = projector(a.normals, n), Pb = projector(b.normals, n);
  double worst = 0.0;
  for (std::size_t i = 0; i < Pa.size(); ++i) worst = std::fmax(worst, std::fabs(Pa[i] - Pb[i]));
  return worst;
}

}  // namespace gss
