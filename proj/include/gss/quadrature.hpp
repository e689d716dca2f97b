#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace gss::quad {

// 7-point Gauss / 15-point Kronrod pair on [-1, 1]. Nodes are listed from the right end to the
// centre; odd indices are shared with the Gauss rule.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Options {
  double abs_tol = 1e-10;  // per coordinate
  int max_depth = 60;
};

struct Result {
  std::vector<double> value;
  std::vector<double> error;  // per coordinate estimate, sum over accepted panels
  std::size_t evaluations = 0;
};

namespace detail {

template <typename F>
void add_scaled(std::vector<double>& acc, const F& x, double s) {
  if (acc.empty()) acc.assign(x.size(), 0.0);
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += s * x[i];
}

template <typename F>
void panel(const F& f, double a, double b, std::vector<double>& kronrod, std::vector<double>& gauss,
           std::size_t& evals) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  kronrod.clear();
  gauss.clear();
  const auto fc = f(c);
  add_scaled(kronrod, fc, kKronrodWeights[7] * h);
  add_scaled(gauss, fc, kGaussWeights[3] * h);
  ++evals;
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = h * kKronrodNodes[j];
    const auto fl = f(c - dx), fr = f(c + dx);
    evals += 2;
    for (const auto* fx : {&fl, &fr}) {
      add_scaled(kronrod, *fx, kKronrodWeights[j] * h);
      if (j % 2 == 1) add_scaled(gauss, *fx, kGaussWeights[j / 2] * h);
    }
  }
}

template <typename F>
void adapt(const F& f, double a, double b, double tol, int depth, const Options& opt, Result& out) {
  std::vector<double> k, g;
  panel(f, a, b, k, g, out.evaluations);
  double worst = 0.0;
  for (std::size_t i = 0; i < k.size(); ++i) worst = std::max(worst, std::fabs(k[i] - g[i]));
  const bool tiny = std::fabs(b - a) <= 64.0 * 2.2e-16 * std::max(std::fabs(a), std::fabs(b));
  if (worst <= tol || !std::isfinite(worst) || tiny) {
    if (!std::isfinite(worst)) throw ToleranceError("quadrature: integrand is not finite");
    add_scaled(out.value, k, 1.0);
    if (out.error.empty()) out.error.assign(k.size(), 0.0);
    for (std::size_t i = 0; i < k.size(); ++i) out.error[i] += std::fabs(k[i] - g[i]);
    return;
  }
  if (depth >= opt.max_depth) throw ToleranceError("quadrature: no convergence within the subdivision limit");
  const double m = 0.5 * (a + b);
  adapt(f, a, m, 0.5 * tol, depth + 1, opt, out);
  adapt(f, m, b, 0.5 * tol, depth + 1, opt, out);
}

}  // namespace detail

// Adaptive bisection with a G7/K15 panel rule; f maps double -> random-access container of doubles.
// Every coordinate meets the absolute tolerance. a > b yields the negated integral; a == b yields
// zeros of the integrand's dimension.
template <typename F>
Result integrate(const F& f, double a, double b, const Options& opt = {}) {
  if (!(opt.abs_tol > 0.0)) throw SpecError("quadrature tolerance must be > 0");
  Result out;
  if (a == b) {
    out.value.assign(f(a).size(), 0.0);
    out.error.assign(out.value.size(), 0.0);
    out.evaluations = 1;
    return out;
  }
  const bool flip = b < a;
  detail::adapt(f, flip ? b : a, flip ? a : b, opt.abs_tol, 0, opt, out);
  if (flip)
    for (double& x : out.value) x = -x;
  return out;
}

// Values of integral from base to each grid point. Neighbouring grid points share panels: each
// point's value is the previous one plus the integral over the gap between them. Output order
// follows the input order.
template <typename F>
std::vector<std::vector<double>> integrate_cumulative(const F& f, double base, const std::vector<double>& grid,
                                                      const Options& opt = {}) {
  std::vector<std::size_t> order(grid.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return grid[i] < grid[j]; });
  const std::size_t dim = f(base).size();
  std::vector<std::vector<double>> out(grid.size(), std::vector<double>(dim, 0.0));
  Options seg = opt;
  seg.abs_tol = opt.abs_tol / static_cast<double>(std::max<std::size_t>(grid.size(), 1));

  // Points at or above the base, walking up; points below it, walking down.
  const auto split = std::partition_point(order.begin(), order.end(), [&](std::size_t i) { return grid[i] < base; });
  std::vector<double> acc(dim, 0.0);
  double prev = base;
  for (auto it = split; it != order.end(); ++it) {
    const Result r = integrate(f, prev, grid[*it], seg);
    for (std::size_t d = 0; d < dim; ++d) acc[d] += r.value[d];
    out[*it] = acc;
    prev = grid[*it];
  }
  acc.assign(dim, 0.0);
  prev = base;
  for (auto it = std::make_reverse_iterator(split); it != order.rend(); ++it) {
    const Result r = integrate(f, prev, grid[*it], seg);
    for (std::size_t d = 0; d < dim; ++d) acc[d] += r.value[d];
    out[*it] = acc;
    prev = grid[*it];
  }
  return out;
}

}  // namespace gss::quad
