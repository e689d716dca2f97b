#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <string>
#include <vector>

#include "errors.hpp"
#include "jet.hpp"
#include "vec.hpp"

namespace gss {

// Position and all first and second partials of a patch at one parameter point.
// The mixed partial is stored once, so X_uv and X_vu are the same vector.
struct SurfaceJet2 {
  VecN X, Xu, Xv, Xuu, Xuv, Xvv;
  double u = 0.0, v = 0.0;

  std::size_t dim() const noexcept { return X.dim(); }

  // Index-style access to the second partials: second(0,0)=Xuu, (0,1)=(1,0)=Xuv, (1,1)=Xvv.
  const VecN& second(int i, int j) const {
    if (i == 0 && j == 0) return Xuu;
    if (i == 1 && j == 1) return Xvv;
    return Xuv;
  }
  const VecN& tangent(int i) const { return i == 0 ? Xu : Xv; }

  std::array<const VecN*, 6> vectors() const { return {&X, &Xu, &Xv, &Xuu, &Xuv, &Xvv}; }

  void validate() const {
    for (const VecN* w : vectors())
      if (w->dim() != X.dim()) throw DimensionError(X.dim(), w->dim());
  }
};

enum class JetKind { analytic, forward, finite_difference };

inline std::string to_string(JetKind k) {
  switch (k) {
    case JetKind::analytic: return "analytic";
    case JetKind::forward: return "forward";
    case JetKind::finite_difference: return "fd";
  }
  return "?";
}

struct JetSource {
  JetKind kind = JetKind::analytic;
  double h = 1e-4;  // finite-difference step

  static JetSource analytic() { return {JetKind::analytic, 1e-4}; }
  static JetSource forward() { return {JetKind::forward, 1e-4}; }
  static JetSource finite_difference(double step = 1e-4) {
    if (!(step > 0.0)) throw SpecError("finite-difference step must be > 0");
    return {JetKind::finite_difference, step};
  }
};

// A parametric map (u, v) -> E^n evaluable over doubles and over Jet2.
template <typename M>
concept ParametricMap = requires(const M& m, double d, Jet2 j) {
  { m.dim() } -> std::convertible_to<std::size_t>;
  { m(d, d) } -> std::same_as<std::vector<double>>;
  { m(j, j) } -> std::same_as<std::vector<Jet2>>;
};

template <typename M>
concept HasAnalyticJet = requires(const M& m, double d) {
  { m.analytic_jet(d, d) } -> std::same_as<SurfaceJet2>;
};

template <ParametricMap M>
SurfaceJet2 forward_jet(const M& map, double u, double v) {
  const std::vector<Jet2> x = map(Jet2::variable_u(u), Jet2::variable_v(v));
  const std::size_t n = x.size();
  SurfaceJet2 jet{VecN(n), VecN(n), VecN(n), VecN(n), VecN(n), VecN(n), u, v};
  for (std::size_t i = 0; i < n; ++i) {
    jet.X[i] = x[i].val;
    jet.Xu[i] = x[i].du;
    jet.Xv[i] = x[i].dv;
    jet.Xuu[i] = x[i].duu;
    jet.Xuv[i] = x[i].duv;
    jet.Xvv[i] = x[i].dvv;
  }
  return jet;
}

// Central differences with step h; truncation error O(h^2).
template <ParametricMap M>
SurfaceJet2 fd_jet(const M& map, double u, double v, double h) {
  if (!(h > 0.0)) throw SpecError("finite-difference step must be > 0");
  auto at = [&](double du, double dv) { return VecN(map(u + du, v + dv)); };
  const VecN x0 = at(0, 0);
  const VecN xp0 = at(h, 0), xm0 = at(-h, 0), x0p = at(0, h), x0m = at(0, -h);
  const VecN xpp = at(h, h), xpm = at(h, -h), xmp = at(-h, h), xmm = at(-h, -h);
  SurfaceJet2 jet;
  jet.u = u;
  jet.v = v;
  jet.X = x0;
  jet.Xu = (xp0 - xm0) / (2.0 * h);
  jet.Xv = (x0p - x0m) / (2.0 * h);
  jet.Xuu = (xp0 - 2.0 * x0 + xm0) / (h * h);
  jet.Xvv = (x0p - 2.0 * x0 + x0m) / (h * h);
  jet.Xuv = (xpp - xpm - xmp + xmm) / (4.0 * h * h);
  return jet;
}

template <ParametricMap M>
SurfaceJet2 jet_at(const JetSource& source, const M& map, double u, double v) {
  SurfaceJet2 jet;
  switch (source.kind) {
    case JetKind::analytic:
      if constexpr (HasAnalyticJet<M>) {
        jet = map.analytic_jet(u, v);
      } else {
        throw SpecError("map has no closed-form jet; use the forward or fd jet source");
      }
      break;
    case JetKind::forward: jet = forward_jet(map, u, v); break;
    case JetKind::finite_difference: jet = fd_jet(map, u, v, source.h); break;
  }
  jet.validate();
  for (const VecN* w : jet.vectors())
    if (!all_finite(*w)) throw DomainError("jet is not finite", u, v);
  return jet;
}

// Largest componentwise |a - b| / max(|b|, 1) over the derivative vectors (position excluded when
// include_position is false).
inline double jet_max_rel_diff(const SurfaceJet2& a, const SurfaceJet2& b, bool include_position = true) {
  a.validate();
  b.validate();
  a.X.check_dim(b.X);
  const auto va = a.vectors(), vb = b.vectors();
  double worst = 0.0;
  for (std::size_t k = include_position ? 0 : 1; k < va.size(); ++k)
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const double ref = (*vb[k])[i];
      worst = std::max(worst, std::fabs((*va[k])[i] - ref) / std::max(std::fabs(ref), 1.0));
    }
  return worst;
}

}  // namespace gss
