#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "curvature.hpp"
#include "family.hpp"
#include "frame.hpp"

namespace gss {

enum class FrameChoice { gram_schmidt, paper };

struct GridOptions {
  std::size_t nu = 41, nv = 41;
  JetSource source = JetSource::analytic();
  FrameChoice frame = FrameChoice::gram_schmidt;
  unsigned threads = 1;
};

struct GridPoint {
  std::size_t i = 0, j = 0;  // u index, v index
  double u = 0.0, v = 0.0;
  std::optional<VecN> X;     // empty when the position itself cannot be evaluated
  double Wsq = 0.0;
  bool singular = false;
  std::string reason;  // why the point is singular
  std::optional<CurvatureReport> report;
};

// Tolerances for regularity and frame construction, relaxed for finite-difference jets.
struct PointTolerances {
  double tau_reg = kTauReg;
  double tau_frame = kTauFrame;
};

inline PointTolerances tolerances_for(const JetSource& source) {
  if (source.kind == JetKind::finite_difference) return {kTauReg * kFdRelaxation, kTauFrame * kFdRelaxation};
  return {};
}

// Evaluates one point; DomainError (including singular points) marks the point singular.
inline GridPoint evaluate_point(const Surface& surface, double u, double v, const GridOptions& opt) {
  GridPoint p;
  p.u = u;
  p.v = v;
  const PointTolerances tol = tolerances_for(opt.source);
  try {
    const VecN x = surface.position(u, v);
    if (all_finite(x)) p.X = x;
  } catch (const DomainError&) {
  }
  try {
    const SurfaceJet2 jet = surface.jet(opt.source, u, v);
    p.X = jet.X;
    const FirstForm I = first_form(jet);
    p.Wsq = I.Wsq;
    if (!I.regular(tol.tau_reg)) throw SingularPointError("singular point: W^2 <= tau_reg", u, v);
    NormalFrame frame;
    if (opt.frame == FrameChoice::paper) {
      auto pf = surface.paper_frame(u, v);
      if (!pf) throw SpecError("family " + surface.name() + " has no closed-form normal frame");
      frame = *pf;
    } else {
      frame = normal_frame(jet, tol.tau_reg, tol.tau_frame);
    }
    p.report = curvature_report(jet, frame, tol.tau_reg);
  } catch (const DomainError& e) {
    p.singular = true;
    p.reason = e.what();
  }
  return p;
}

// Row-major (u index outer) evaluation over the inclusive nu x nv grid of the surface's domain.
// Work may be split across threads; the output order never depends on it.
inline std::vector<GridPoint> evaluate_grid(const Surface& surface, const GridOptions& opt) {
  if (opt.nu < 2 || opt.nv < 2) throw SpecError("grid needs nu, nv >= 2");
  const Rect& d = surface.domain();
  const std::vector<double> us = linspace(d.u.lo, d.u.hi, opt.nu), vs = linspace(d.v.lo, d.v.hi, opt.nv);
  std::vector<GridPoint> out(opt.nu * opt.nv);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const std::size_t i = k / opt.nv, j = k % opt.nv;
      out[k] = evaluate_point(surface, us[i], vs[j], opt);
      out[k].i = i;
      out[k].j = j;
    }
  };
  const std::size_t total = out.size();
  const unsigned threads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(total)));
  if (threads == 1) {
    work(0, total);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t b = t * chunk, e = std::min(total, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
  }
  return out;
}

}  // namespace gss
