#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "functions.hpp"
#include "jet.hpp"
#include "quadrature.hpp"
#include "vec.hpp"

namespace gss {

struct Interval {
  double lo = 0.0, hi = 0.0;
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool empty() const { return !(lo <= hi); }
  double width() const { return hi - lo; }
};

// 1 - (lambda^2/c^2) sin^2(t/c): the squared speed available to the first n coordinates of a
// unit-speed curve whose last coordinate is lambda cos(t/c).
template <Scalar T>
T radicand(double lambda, double c, const T& t) {
  const T s = sin(t / c);
  return 1.0 - (lambda * lambda) / (c * c) * s * s;
}

// Maximal closed interval containing u0 on which the radicand is nonnegative; nullopt when the
// radicand is already negative at u0. Unbounded when lambda <= |c|.
inline std::optional<Interval> radicand_interval(double lambda, double c, double u0) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double ac = std::fabs(c);
  if (lambda <= ac) return Interval{-inf, inf};
  if (radicand(lambda, c, u0) < 0.0) return std::nullopt;
  const double half = std::asin(ac / lambda);  // in theta = t/c
  const double theta0 = u0 / c;
  const double k = std::round(theta0 / std::numbers::pi);
  const double t1 = c * (k * std::numbers::pi - half), t2 = c * (k * std::numbers::pi + half);
  return Interval{std::fmin(t1, t2), std::fmax(t1, t2)};
}

// Half-width of the regular region around u = 0: radicand positive and cos(u/c) != 0.
inline double regular_halfwidth(double lambda, double c) {
  const double ac = std::fabs(c);
  if (lambda > ac) return ac * std::asin(ac / lambda);
  return 0.5 * std::numbers::pi * ac;
}

// Unit vector function a(u) in E^n (the implicit (n+1)-th coordinate is zero).
class DirectionFunction {
 public:
  DirectionFunction(std::size_t n, VectorFn fn, std::string name = "custom")
      : n_(n), fn_(std::move(fn)), name_(std::move(name)) {}

  static DirectionFunction constant(std::vector<double> a) {
    const std::size_t n = a.size();
    return DirectionFunction(
        n, [a = std::move(a)](const Jet2&) { return std::vector<Jet2>(a.begin(), a.end()); }, "constant");
  }
  // a = (1): the E^2 circle.
  static DirectionFunction circle() { return constant({1.0}); }
  // a = (cos alpha, sin alpha).
  static DirectionFunction planar(AngleFunction alpha) {
    return DirectionFunction(
        2, [alpha = std::move(alpha)](const Jet2& t) {
          const Jet2 a = alpha(t);
          return std::vector<Jet2>{cos(a), sin(a)};
        },
        "planar");
  }
  // a = (cos alpha, cos alpha sin alpha, sin^2 alpha).
  static DirectionFunction spherical3(AngleFunction alpha) {
    return DirectionFunction(
        3, [alpha = std::move(alpha)](const Jet2& t) {
          const Jet2 a = alpha(t), ca = cos(a), sa = sin(a);
          return std::vector<Jet2>{ca, ca * sa, sa * sa};
        },
        "spherical3");
  }

  std::size_t n() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  std::vector<Jet2> operator()(const Jet2& t) const { return checked(fn_(t)); }
  std::vector<double> operator()(double t) const {
    const auto js = checked(fn_(Jet2(t)));
    std::vector<double> out(js.size());
    for (std::size_t i = 0; i < js.size(); ++i) out[i] = js[i].val;
    return out;
  }
  UnivariateVec jet(double t) const { return univariate(fn_, t); }

 private:
  std::vector<Jet2> checked(std::vector<Jet2> v) const {
    if (v.size() != n_) throw DimensionError(v.size(), n_);
    return v;
  }
  std::size_t n_;
  VectorFn fn_;
  std::string name_;
};

// Generalized spherical curve gamma(u) = phi(u) + lambda cos(u/c) e_{n+1}, with
// phi(u) = integral from u0 to u of sqrt(radicand(t)) a(t) dt.
class SphericalCurveSpec {
 public:
  // Validates lambda > 0 and c != 0, then clips the requested domain to the radicand-valid interval
  // around u0. Pass no domain to get the default [-0.9 w, 0.9 w] around u0 = 0 (w = regular
  // half-width) intersected with the valid interval.
  SphericalCurveSpec(DirectionFunction a, double lambda, double c, std::optional<Interval> domain = std::nullopt,
                     double u0 = 0.0, double quad_tol = 1e-10)
      : a_(std::move(a)), lambda_(lambda), c_(c), u0_(u0), quad_tol_(quad_tol) {
    if (!(std::isfinite(lambda) && lambda > 0.0)) throw SpecError("invalid curve: lambda must be finite and > 0");
    if (!(std::isfinite(c) && c != 0.0)) throw SpecError("invalid curve: c must be finite and nonzero");
    if (!(quad_tol > 0.0)) throw SpecError("invalid curve: quadrature tolerance must be > 0");
    const auto valid = radicand_interval(lambda, c, u0);
    if (!valid) throw SpecError("invalid curve: radicand 1 - (lambda/c)^2 sin^2(u0/c) is negative at u0");
    valid_ = *valid;
    Interval want = domain.value_or(Interval{u0 - 0.9 * regular_halfwidth(lambda, c),
                                             u0 + 0.9 * regular_halfwidth(lambda, c)});
    if (want.empty()) throw SpecError("invalid curve: empty domain");
    domain_ = Interval{std::fmax(want.lo, valid_.lo), std::fmin(want.hi, valid_.hi)};
    clipped_ = domain_.lo != want.lo || domain_.hi != want.hi;
    requested_ = want;
    if (domain_.empty() || !domain_.contains(u0))
      throw SpecError("invalid curve: domain does not contain the integration base point after clipping");
  }

  const DirectionFunction& direction() const noexcept { return a_; }
  double lambda() const noexcept { return lambda_; }
  double c() const noexcept { return c_; }
  double u0() const noexcept { return u0_; }
  double quad_tol() const noexcept { return quad_tol_; }
  const Interval& domain() const noexcept { return domain_; }
  const Interval& requested_domain() const noexcept { return requested_; }
  const Interval& valid_interval() const noexcept { return valid_; }
  bool clipped() const noexcept { return clipped_; }
  // Dimension of gamma (n + 1).
  std::size_t dim() const noexcept { return a_.n() + 1; }

  void require_in_domain(double u) const {
    if (!domain_.contains(u)) throw DomainError("curve parameter outside the domain", u);
  }

  // Integrand sqrt(radicand) a(t) of phi.
  template <Scalar T>
  std::vector<T> integrand(const T& t) const {
    T rad = radicand(lambda_, c_, t);
    if (primal(rad) < -1e-14) throw DomainError("negative radicand under the square root", primal(t));
    if constexpr (std::same_as<T, double>) rad = std::fmax(rad, 0.0);
    const T root = sqrt(rad);
    std::vector<T> a = a_(t);
    for (auto& x : a) x = x * root;
    return a;
  }

  // phi(u) restricted to its first n coordinates. Over double this is the quadrature; over Jet2
  // the derivatives are the integrand and its derivative at u.
  template <Scalar T>
  std::vector<T> phi_block(const T& u) const {
    const double u_val = primal(u);
    require_in_domain(u_val);
    const quad::Options opt{quad_tol_, 60};
    const auto q = quad::integrate([this](double t) { return integrand(t); }, u0_, u_val, opt);
    if constexpr (std::same_as<T, double>) {
      return q.value;
    } else {
      const std::vector<Jet2> g = integrand(Jet2::variable_u(u_val));
      std::vector<Jet2> out(q.value.size());
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = compose(u, q.value[i], g[i].val, g[i].du);
      return out;
    }
  }

  // Same as phi_block, for many points at once, sharing quadrature panels between neighbours.
  std::vector<std::vector<double>> phi_block_many(const std::vector<double>& us) const {
    for (double u : us) require_in_domain(u);
    const quad::Options opt{quad_tol_, 60};
    return quad::integrate_cumulative([this](double t) { return integrand(t); }, u0_, us, opt);
  }

 private:
  DirectionFunction a_;
  double lambda_, c_, u0_, quad_tol_;
  Interval valid_{}, domain_{}, requested_{};
  bool clipped_ = false;
};

inline VecN phi_at(const SphericalCurveSpec& spec, double u) {
  std::vector<double> p = spec.phi_block(u);
  p.push_back(0.0);
  return VecN(std::move(p));
}

inline VecN gamma_at(const SphericalCurveSpec& spec, double u) {
  std::vector<double> p = spec.phi_block(u);
  p.push_back(spec.lambda() * std::cos(u / spec.c()));
  return VecN(std::move(p));
}

// First and second derivatives of gamma from the analytic integrand (no quadrature involved).
struct CurveDerivatives {
  VecN d1, d2;
};

inline CurveDerivatives gamma_derivatives(const SphericalCurveSpec& spec, double u) {
  spec.require_in_domain(u);
  const std::vector<Jet2> g = spec.integrand(Jet2::variable_u(u));
  const double lam = spec.lambda(), c = spec.c();
  CurveDerivatives d{VecN(spec.dim()), VecN(spec.dim())};
  for (std::size_t i = 0; i < g.size(); ++i) {
    d.d1[i] = g[i].val;
    d.d2[i] = g[i].du;
  }
  d.d1[g.size()] = -lam / c * std::sin(u / c);
  d.d2[g.size()] = -lam / (c * c) * std::cos(u / c);
  return d;
}

// Trace curve beta = phi + c^2 phi''.
inline VecN beta_at(const SphericalCurveSpec& spec, double u) {
  VecN phi = phi_at(spec, u);
  const CurveDerivatives d = gamma_derivatives(spec, u);
  const double c2 = spec.c() * spec.c();
  for (std::size_t i = 0; i + 1 < spec.dim(); ++i) phi[i] += c2 * d.d2[i];
  return phi;
}

inline double speed_at(const SphericalCurveSpec& spec, double u) { return norm(gamma_derivatives(spec, u).d1); }

struct CurveSample {
  double u = 0.0;
  VecN gamma, phi, beta;
  double speed = 0.0;
};

inline std::vector<double> linspace(double lo, double hi, std::size_t count) {
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < count; ++i)
    out[i] = (i + 1 == count) ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  return out;
}

// Equispaced samples over the spec's domain, endpoints included.
inline std::vector<CurveSample> sample_curve(const SphericalCurveSpec& spec, std::size_t samples) {
  if (samples < 2) throw SpecError("curve sampling needs at least 2 samples");
  const std::vector<double> us = linspace(spec.domain().lo, spec.domain().hi, samples);
  const auto blocks = spec.phi_block_many(us);
  const double c2 = spec.c() * spec.c();
  std::vector<CurveSample> out;
  out.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    CurveSample s;
    s.u = us[k];
    std::vector<double> p = blocks[k];
    p.push_back(0.0);
    s.phi = VecN(p);
    s.gamma = s.phi;
    s.gamma[spec.dim() - 1] = spec.lambda() * std::cos(s.u / spec.c());
    const CurveDerivatives d = gamma_derivatives(spec, s.u);
    s.beta = s.phi;
    for (std::size_t i = 0; i + 1 < spec.dim(); ++i) s.beta[i] += c2 * d.d2[i];
    s.speed = norm(d.d1);
    out.push_back(std::move(s));
  }
  return out;
}

struct CurveCheck {
  double max_speed_dev = 0.0;     // max | |gamma'| - 1 |
  double max_beta_last = 0.0;     // max |(gamma + c^2 gamma'')_{n+1}|
  double max_unit_dev_of_a = 0.0;  // max | |a| - 1 |
  double max_trace_mismatch = 0.0;  // max |(gamma + c^2 gamma'') - (phi + c^2 phi'')|
};

inline CurveCheck verify_curve(const SphericalCurveSpec& spec, std::size_t samples) {
  if (samples < 2) throw SpecError("curve verification needs at least 2 samples");
  CurveCheck out;
  const double c2 = spec.c() * spec.c();
  for (const CurveSample& s : sample_curve(spec, samples)) {
    const CurveDerivatives d = gamma_derivatives(spec, s.u);
    const VecN trace = s.gamma + c2 * d.d2;
    out.max_speed_dev = std::fmax(out.max_speed_dev, std::fabs(s.speed - 1.0));
    out.max_beta_last = std::fmax(out.max_beta_last, std::fabs(trace[spec.dim() - 1]));
    out.max_unit_dev_of_a = std::fmax(out.max_unit_dev_of_a, std::fabs(norm(VecN(spec.direction()(s.u))) - 1.0));
    out.max_trace_mismatch = std::fmax(out.max_trace_mismatch, max_abs(trace - s.beta));
  }
  return out;
}

// The three worked curves: the E^2 circle, the E^3 curve with a = (cos a, sin a) and the E^4 curve
// with a = (cos a, cos a sin a, sin^2 a).
inline SphericalCurveSpec example_curve(int which, double lambda, double c, AngleFunction alpha = {},
                                        std::optional<Interval> domain = std::nullopt) {
  switch (which) {
    case 1: return SphericalCurveSpec(DirectionFunction::circle(), lambda, c, domain);
    case 2: return SphericalCurveSpec(DirectionFunction::planar(std::move(alpha)), lambda, c, domain);
    case 3: return SphericalCurveSpec(DirectionFunction::spherical3(std::move(alpha)), lambda, c, domain);
  }
  throw SpecError("unknown example curve (expected 1, 2 or 3)");
}

}  // namespace gss
