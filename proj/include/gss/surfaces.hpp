#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvature.hpp"
#include "curves.hpp"
#include "errors.hpp"
#include "frame.hpp"
#include "functions.hpp"
#include "jet.hpp"
#include "surface_jet.hpp"
#include "vec.hpp"

namespace gss {

struct Rect {
  Interval u, v;
  bool contains(double uu, double vv) const { return u.contains(uu) && v.contains(vv); }
};

namespace detail {

inline void validate_lambda_c(double lambda, double c) {
  if (!(std::isfinite(lambda) && lambda > 0.0)) throw SpecError("invalid family: lambda must be finite and > 0");
  if (!(std::isfinite(c) && c != 0.0)) throw SpecError("invalid family: c must be finite and nonzero");
}

// Parallel radius r(u) = lambda cos(u/c) and the root phi'(u) = sqrt(radicand) with derivatives.
struct Profile {
  double r, r1, r2;
  double root, root1;
};

inline Profile profile(double lambda, double c, double u) {
  const double s = std::sin(u / c), co = std::cos(u / c);
  Profile p;
  p.r = lambda * co;
  p.r1 = -lambda / c * s;
  p.r2 = -lambda / (c * c) * co;
  const double rad = radicand(lambda, c, u);
  if (rad < -1e-14) throw DomainError("negative radicand under the square root", u);
  p.root = std::sqrt(std::fmax(rad, 0.0));
  p.root1 = -(lambda * lambda) / (c * c * c) * s * co / p.root;
  return p;
}

inline Rect default_rotational_domain(double lambda, double c) {
  const double w = 0.9 * regular_halfwidth(lambda, c);
  return {{-w, w}, {0.0, 2.0 * std::numbers::pi}};
}

// Clips the u-range of a requested domain to the radicand-valid interval around 0.
struct ClippedDomain {
  Rect domain;
  bool clipped = false;
};

inline ClippedDomain clip_domain(double lambda, double c, const std::optional<Rect>& requested) {
  ClippedDomain out{requested.value_or(default_rotational_domain(lambda, c)), false};
  if (out.domain.u.empty() || out.domain.v.empty()) throw SpecError("invalid family: empty domain");
  const Interval valid = *radicand_interval(lambda, c, 0.0);
  const Interval u{std::fmax(out.domain.u.lo, valid.lo), std::fmin(out.domain.u.hi, valid.hi)};
  out.clipped = u.lo != out.domain.u.lo || u.hi != out.domain.u.hi;
  out.domain.u = u;
  if (u.empty()) throw SpecError("invalid family: domain is empty after clipping to the region with radicand >= 0");
  return out;
}

inline SurfaceJet2 make_jet(std::size_t n, double u, double v) {
  return {VecN(n), VecN(n), VecN(n), VecN(n), VecN(n), VecN(n), u, v};
}

}  // namespace detail

// ---------------------------------------------------------------------------------------------
// Plane (u, v, 0): flat reference patch.

struct PlaneSpec {
  Rect domain{{0.0, 1.0}, {0.0, 1.0}};
};

class PlaneSurface {
 public:
  explicit PlaneSurface(PlaneSpec spec = {}) : spec_(spec) {
    if (spec_.domain.u.empty() || spec_.domain.v.empty()) throw SpecError("invalid family: empty domain");
  }
  std::size_t dim() const { return 3; }
  std::string name() const { return "plane"; }
  const Rect& domain() const { return spec_.domain; }
  bool clipped() const { return false; }

  template <Scalar T>
  std::vector<T> operator()(const T& u, const T& v) const {
    return {u, v, T(0.0)};
  }
  SurfaceJet2 analytic_jet(double u, double v) const {
    SurfaceJet2 j = detail::make_jet(3, u, v);
    j.X = VecN{u, v, 0.0};
    j.Xu = VecN{1.0, 0.0, 0.0};
    j.Xv = VecN{0.0, 1.0, 0.0};
    return j;
  }
  std::optional<NormalFrame> paper_frame(double, double) const {
    return NormalFrame{{VecN{0.0, 0.0, 1.0}}, FrameSource::paper_analytic};
  }

 private:
  PlaneSpec spec_;
};

// ---------------------------------------------------------------------------------------------
// Case I: spherical surface in E^3, X = (phi(u), lambda cos(u/c) cos v, lambda cos(u/c) sin v).

struct CaseISpec {
  double lambda = 1.0;
  double c = 1.0;
  std::optional<Rect> domain;
};

enum class SphereClass { sphere, hyperbolic, elliptic };

inline std::string to_string(SphereClass k) {
  switch (k) {
    case SphereClass::sphere: return "sphere";
    case SphereClass::hyperbolic: return "hyperbolic";
    case SphereClass::elliptic: return "elliptic";
  }
  return "?";
}

// lambda = |c| is a round sphere of radius |c|; lambda > |c| hyperbolic; lambda < |c| elliptic.
inline SphereClass classify_case1(const CaseISpec& spec, double tol = 1e-12) {
  detail::validate_lambda_c(spec.lambda, spec.c);
  const double ac = std::fabs(spec.c);
  if (std::fabs(spec.lambda - ac) <= tol) return SphereClass::sphere;
  return spec.lambda > ac ? SphereClass::hyperbolic : SphereClass::elliptic;
}

struct CaseIReference {
  double K = 0.0;       // 1/c^2
  double H = 0.0;       // closed-form mean curvature
  double kappa1 = 0.0;  // profile function with L11 = -kappa1
  VecN N;               // unit normal (Xu x Xv)/|Xu x Xv|
  Mat2 L;               // second fundamental form in N
};

class CaseISurface {
 public:
  explicit CaseISurface(const CaseISpec& spec)
      : spec_((detail::validate_lambda_c(spec.lambda, spec.c), spec)),
        curve_(DirectionFunction::circle(), spec.lambda, spec.c, *radicand_interval(spec.lambda, spec.c, 0.0)) {
    const auto cd = detail::clip_domain(spec.lambda, spec.c, spec.domain);
    domain_ = cd.domain;
    clipped_ = cd.clipped;
  }

  std::size_t dim() const { return 3; }
  std::string name() const { return "case1"; }
  const CaseISpec& spec() const { return spec_; }
  const Rect& domain() const { return domain_; }
  bool clipped() const { return clipped_; }
  const SphericalCurveSpec& profile_curve() const { return curve_; }

  template <Scalar T>
  std::vector<T> operator()(const T& u, const T& v) const {
    const T phi = curve_.phi_block(u)[0];
    const T r = spec_.lambda * cos(u / spec_.c);
    return {phi, r * cos(v), r * sin(v)};
  }

  SurfaceJet2 analytic_jet(double u, double v) const {
    const auto p = detail::profile(spec_.lambda, spec_.c, u);
    const double cv = std::cos(v), sv = std::sin(v);
    SurfaceJet2 j = detail::make_jet(3, u, v);
    j.X = VecN{curve_.phi_block(u)[0], p.r * cv, p.r * sv};
    j.Xu = VecN{p.root, p.r1 * cv, p.r1 * sv};
    j.Xv = VecN{0.0, -p.r * sv, p.r * cv};
    j.Xuu = VecN{p.root1, p.r2 * cv, p.r2 * sv};
    j.Xuv = VecN{0.0, -p.r1 * sv, p.r1 * cv};
    j.Xvv = VecN{0.0, -p.r * cv, -p.r * sv};
    return j;
  }

  std::optional<NormalFrame> paper_frame(double u, double v) const {
    return NormalFrame{{reference(u, v).N}, FrameSource::paper_analytic};
  }

  CaseIReference reference(double u, double v) const {
    const double lam = spec_.lambda, c = spec_.c;
    const auto p = detail::profile(lam, c, u);
    const double s = std::sin(u / c), co = std::cos(u / c);
    if (std::fabs(p.r) * std::fabs(p.r) <= kTauReg) throw SingularPointError("singular parallel cos(u/c) = 0", u, v);
    CaseIReference ref;
    ref.K = 1.0 / (c * c);
    ref.H = (2.0 * lam * lam / (c * c) * co * co - lam * lam / (c * c) + 1.0) / (2.0 * lam * co * p.root);
    ref.kappa1 = -lam / (c * c) * p.root * co + lam / c * p.root1 * s;
    // (Xu x Xv)/|Xu x Xv| = (r', -phi' cos v, -phi' sin v) * sign(r)
    const double sg = p.r > 0.0 ? 1.0 : -1.0;
    ref.N = sg * VecN{-lam / c * s, -p.root * std::cos(v), -p.root * std::sin(v)};
    ref.L = {-ref.kappa1 * sg, 0.0, 0.0, p.root * lam * co * sg};
    return ref;
  }

 private:
  CaseISpec spec_;
  SphericalCurveSpec curve_;
  Rect domain_{};
  bool clipped_ = false;
};

// ---------------------------------------------------------------------------------------------
// Case II: generalized spherical surface of first kind in E^4,
// X = (f1(u), f2(u), lambda cos(u/c) cos v, lambda cos(u/c) sin v), f1' + i f2' = phi e^{i alpha}.

struct CaseIISpec {
  double lambda = 1.0;
  double c = 1.0;
  AngleFunction alpha = AngleFunction::identity();
  std::optional<Rect> domain;
};

struct CaseIIReference {
  NormalFrame frame;  // paper normals N1 = X_uu/kappa, N2 = profile binormal
  SecondForm L;       // coefficients in that frame
  double kappa = 0.0;       // profile curvature from the second derivatives
  double kappa_alt = 0.0;   // same curvature from phi, phi', alpha'
  double kappa1 = 0.0;      // f1' f2'' - f1'' f2'
  double kappa1_alt = 0.0;  // phi^2 alpha'
  std::vector<double> Hk;   // closed-form mean curvature components along N1, N2
  VecN Hvec;
};

class CaseIISurface {
 public:
  explicit CaseIISurface(const CaseIISpec& spec)
      : spec_((detail::validate_lambda_c(spec.lambda, spec.c), spec)),
        curve_(DirectionFunction::planar(spec.alpha), spec.lambda, spec.c,
               *radicand_interval(spec.lambda, spec.c, 0.0)) {
    const auto cd = detail::clip_domain(spec.lambda, spec.c, spec.domain);
    domain_ = cd.domain;
    clipped_ = cd.clipped;
  }

  std::size_t dim() const { return 4; }
  std::string name() const { return "case2"; }
  const CaseIISpec& spec() const { return spec_; }
  const Rect& domain() const { return domain_; }
  bool clipped() const { return clipped_; }
  const SphericalCurveSpec& profile_curve() const { return curve_; }

  template <Scalar T>
  std::vector<T> operator()(const T& u, const T& v) const {
    const std::vector<T> f = curve_.phi_block(u);
    const T r = spec_.lambda * cos(u / spec_.c);
    return {f[0], f[1], r * cos(v), r * sin(v)};
  }

  // f1', f2', f1'', f2'' at u.
  struct ProfileDerivatives {
    double f1p, f2p, f1pp, f2pp;
  };
  ProfileDerivatives profile_derivatives(double u) const {
    const auto p = detail::profile(spec_.lambda, spec_.c, u);
    const Univariate a = spec_.alpha.jet(u);
    const double ca = std::cos(a.f), sa = std::sin(a.f);
    return {p.root * ca, p.root * sa, p.root1 * ca - p.root * a.d1 * sa, p.root1 * sa + p.root * a.d1 * ca};
  }

  SurfaceJet2 analytic_jet(double u, double v) const {
    const auto p = detail::profile(spec_.lambda, spec_.c, u);
    const auto d = profile_derivatives(u);
    const auto f = curve_.phi_block(u);
    const double cv = std::cos(v), sv = std::sin(v);
    SurfaceJet2 j = detail::make_jet(4, u, v);
    j.X = VecN{f[0], f[1], p.r * cv, p.r * sv};
    j.Xu = VecN{d.f1p, d.f2p, p.r1 * cv, p.r1 * sv};
    j.Xv = VecN{0.0, 0.0, -p.r * sv, p.r * cv};
    j.Xuu = VecN{d.f1pp, d.f2pp, p.r2 * cv, p.r2 * sv};
    j.Xuv = VecN{0.0, 0.0, -p.r1 * sv, p.r1 * cv};
    j.Xvv = VecN{0.0, 0.0, -p.r * cv, -p.r * sv};
    return j;
  }

  std::optional<NormalFrame> paper_frame(double u, double v) const { return reference(u, v).frame; }

  // Requires kappa(u) > 0, since N1 divides by it.
  CaseIIReference reference(double u, double v) const {
    const double lam = spec_.lambda, c = spec_.c;
    const auto p = detail::profile(lam, c, u);
    const auto d = profile_derivatives(u);
    const Univariate a = spec_.alpha.jet(u);
    const double s = std::sin(u / c), co = std::cos(u / c), cv = std::cos(v), sv = std::sin(v);
    if (p.r * p.r <= kTauReg) throw SingularPointError("singular parallel cos(u/c) = 0", u, v);

    CaseIIReference ref;
    ref.kappa = std::sqrt(d.f1pp * d.f1pp + d.f2pp * d.f2pp + lam * lam / (c * c * c * c) * co * co);
    if (!(ref.kappa > kTauFrame)) throw SingularPointError("profile curvature vanishes; paper frame undefined", u, v);
    const double phi = p.root, dphi = p.root1;
    ref.kappa_alt = std::sqrt(dphi * dphi + phi * phi * (a.d1 * a.d1 + 1.0 / (c * c)) +
                              lam * lam / (c * c * c * c) * (1.0 - c * c / (lam * lam)));
    ref.kappa1 = d.f1p * d.f2pp - d.f1pp * d.f2p;
    ref.kappa1_alt = phi * phi * a.d1;

    const double k = ref.kappa;
    const VecN N1 = VecN{d.f1pp, d.f2pp, p.r2 * cv, p.r2 * sv} / k;
    const VecN N2 = VecN{-lam * d.f2p / (c * c) * co + lam * d.f2pp / c * s,
                         -lam * d.f1pp / c * s + lam * d.f1p / (c * c) * co, ref.kappa1 * cv, ref.kappa1 * sv} /
                    k;
    ref.frame = NormalFrame{{N1, N2}, FrameSource::paper_analytic};
    ref.L.frame = ref.frame;
    ref.L.L = {Mat2{k, 0.0, 0.0, lam * lam * co * co / (c * c * k)}, Mat2{0.0, 0.0, 0.0, -lam * co * ref.kappa1 / k}};
    ref.Hk = {0.5 * (k * k * c * c + 1.0) / (c * c * k), -0.5 * ref.kappa1 / (k * lam * co)};
    ref.Hvec = ref.Hk[0] * N1 + ref.Hk[1] * N2;
    return ref;
  }

 private:
  CaseIISpec spec_;
  SphericalCurveSpec curve_;
  Rect domain_{};
  bool clipped_ = false;
};

// ---------------------------------------------------------------------------------------------
// Case III: generalized spherical surface of second kind (meridian surface) in E^4,
// X = phi(u) e1 + lambda cos(u/c) rho(v), rho a regular curve on the unit sphere S^2.

// rho(v) = (cos v, sin v, 0): great circle, geodesic curvature 0.
inline VectorFn rho_great_circle() {
  return [](const Jet2& v) { return std::vector<Jet2>{cos(v), sin(v), Jet2(0.0)}; };
}

// Unit-speed circle of colatitude theta around the first axis; geodesic curvature cot(theta).
inline VectorFn rho_small_circle(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) throw SpecError("small circle: colatitude must be in (0, pi)");
  const double st = std::sin(theta), ct = std::cos(theta);
  return [st, ct](const Jet2& v) {
    return std::vector<Jet2>{Jet2(ct), st * cos(v / st), st * sin(v / st)};
  };
}

// rho(v) = (cos v, cos v sin v, sin^2 v): on S^2 with |rho'|^2 = 1 + sin^2 v.
inline VectorFn rho_example11() {
  return [](const Jet2& v) {
    const Jet2 c = cos(v), s = sin(v);
    return std::vector<Jet2>{c, c * s, s * s};
  };
}

struct CaseIIISpec {
  double lambda = 1.0;
  double c = 1.0;
  VectorFn rho = rho_example11();
  std::string rho_name = "example11";
  std::optional<Rect> domain;
};

struct CaseIIIReference {
  NormalFrame frame;  // N1 = (0, rho x T), N2 = -(lambda/c) sin(u/c) e1 - phi' rho
  SecondForm L;
  FirstForm I;
  double K = 0.0;            // -kappa_gamma phi' / (lambda cos(u/c))
  double kappa_gamma = 0.0;  // curvature of the meridian profile
  double kappa_rho = 0.0;    // signed geodesic curvature of rho with respect to rho x T
  double kappa_rho_alt = 0.0;  // |rho''|
  double rho_speed = 0.0;      // |rho'|
  std::vector<double> Hk;
  VecN Hvec;
  double h2_condition = 0.0;  // kappa_gamma - f1'/f2, zero iff H2 vanishes
};

class CaseIIISurface {
 public:
  explicit CaseIIISurface(const CaseIIISpec& spec)
      : spec_((detail::validate_lambda_c(spec.lambda, spec.c), spec)),
        curve_(DirectionFunction::circle(), spec.lambda, spec.c, *radicand_interval(spec.lambda, spec.c, 0.0)) {
    if (!spec_.rho) throw SpecError("invalid family: rho is not set");
    const auto cd = detail::clip_domain(spec.lambda, spec.c, spec.domain);
    domain_ = cd.domain;
    clipped_ = cd.clipped;
    for (double v : linspace(domain_.v.lo, domain_.v.hi, 64)) {
      const UnivariateVec r = univariate(spec_.rho, v);
      if (r.f.size() != 3) throw SpecError("invalid family: rho must have 3 components");
      if (std::fabs(norm(VecN(r.f)) - 1.0) > 1e-8) throw SpecError("invalid family: rho must lie on the unit sphere");
      if (!(norm(VecN(r.d1)) > 1e-8)) throw SpecError("invalid family: rho must be regular (|rho'| > 0)");
      max_speed_dev_ = std::fmax(max_speed_dev_, std::fabs(norm(VecN(r.d1)) - 1.0));
    }
  }

  std::size_t dim() const { return 4; }
  std::string name() const { return "case3"; }
  const CaseIIISpec& spec() const { return spec_; }
  const Rect& domain() const { return domain_; }
  bool clipped() const { return clipped_; }
  // Largest | |rho'| - 1 | over the validation samples.
  double rho_speed_deviation() const { return max_speed_dev_; }

  template <Scalar T>
  std::vector<T> operator()(const T& u, const T& v) const {
    const T phi = curve_.phi_block(u)[0];
    const T r = spec_.lambda * cos(u / spec_.c);
    std::vector<T> rho;
    if constexpr (std::same_as<T, double>) {
      for (const Jet2& x : spec_.rho(Jet2(v))) rho.push_back(x.val);
    } else {
      rho = spec_.rho(v);
    }
    return {phi, r * rho[0], r * rho[1], r * rho[2]};
  }

  SurfaceJet2 analytic_jet(double u, double v) const {
    const auto p = detail::profile(spec_.lambda, spec_.c, u);
    const UnivariateVec rho = univariate(spec_.rho, v);
    auto lift = [](double head, double s, const std::vector<double>& w) {
      return VecN{head, s * w[0], s * w[1], s * w[2]};
    };
    SurfaceJet2 j = detail::make_jet(4, u, v);
    j.X = lift(curve_.phi_block(u)[0], p.r, rho.f);
    j.Xu = lift(p.root, p.r1, rho.f);
    j.Xv = lift(0.0, p.r, rho.d1);
    j.Xuu = lift(p.root1, p.r2, rho.f);
    j.Xuv = lift(0.0, p.r1, rho.d1);
    j.Xvv = lift(0.0, p.r, rho.d2);
    return j;
  }

  std::optional<NormalFrame> paper_frame(double u, double v) const { return reference(u, v).frame; }

  CaseIIIReference reference(double u, double v) const {
    const double lam = spec_.lambda, c = spec_.c;
    const auto p = detail::profile(lam, c, u);
    const double s = std::sin(u / c), co = std::cos(u / c);
    if (p.r * p.r <= kTauReg) throw SingularPointError("singular parallel cos(u/c) = 0", u, v);
    const UnivariateVec rv = univariate(spec_.rho, v);
    const VecN rho(rv.f), drho(rv.d1), ddrho(rv.d2);
    const double speed = norm(drho);
    const VecN n_rho = cross(rho, drho) / speed;

    CaseIIIReference ref;
    ref.rho_speed = speed;
    ref.kappa_rho = dot(ddrho, n_rho) / (speed * speed);
    ref.kappa_rho_alt = norm(ddrho);
    ref.kappa_gamma = -lam / (c * c) * p.root * co + lam / c * p.root1 * s;
    ref.K = -ref.kappa_gamma * p.root / (lam * co);

    const VecN N1{0.0, n_rho[0], n_rho[1], n_rho[2]};
    const VecN N2{-lam / c * s, -p.root * rho[0], -p.root * rho[1], -p.root * rho[2]};
    ref.frame = NormalFrame{{N1, N2}, FrameSource::paper_analytic};
    const double f2 = lam * co, f1p = p.root, s2 = speed * speed;
    ref.I = FirstForm{1.0, 0.0, f2 * f2 * s2, f2 * f2 * s2};
    ref.L.frame = ref.frame;
    ref.L.L = {Mat2{0.0, 0.0, 0.0, ref.kappa_rho * f2 * s2}, Mat2{-ref.kappa_gamma, 0.0, 0.0, f1p * f2 * s2}};
    ref.Hk = {ref.kappa_rho / (2.0 * f2), (-ref.kappa_gamma * f2 + f1p) / (2.0 * f2)};
    ref.Hvec = ref.Hk[0] * N1 + ref.Hk[1] * N2;
    ref.h2_condition = ref.kappa_gamma - f1p / f2;
    return ref;
  }

 private:
  CaseIIISpec spec_;
  SphericalCurveSpec curve_;
  Rect domain_{};
  bool clipped_ = false;
  double max_speed_dev_ = 0.0;
};

// ---------------------------------------------------------------------------------------------
// Otsuki spheres, embedded as rotational surfaces (f1(u), f2(u), f3(u) cos v, f3(u) sin v).

enum class OtsukiVariant { a, b };

struct OtsukiSpec {
  OtsukiVariant variant = OtsukiVariant::a;
  std::optional<Rect> domain;
};

class OtsukiSurface {
 public:
  explicit OtsukiSurface(const OtsukiSpec& spec) : spec_(spec) {
    constexpr double pi = std::numbers::pi;
    domain_ = spec.domain.value_or(Rect{{0.05 * pi, 0.95 * pi}, {0.0, 2.0 * pi}});
    if (domain_.u.empty() || domain_.v.empty()) throw SpecError("invalid family: empty domain");
  }

  std::size_t dim() const { return 4; }
  std::string name() const { return spec_.variant == OtsukiVariant::a ? "otsuki-a" : "otsuki-b"; }
  const Rect& domain() const { return domain_; }
  bool clipped() const { return false; }
  OtsukiVariant variant() const { return spec_.variant; }

  template <Scalar T>
  std::vector<T> profile(const T& u) const {
    if (spec_.variant == OtsukiVariant::a) {
      const T ch = cos(u / 2.0), sh = sin(u / 2.0);
      return {4.0 / 3.0 * ch * ch * ch, 4.0 / 3.0 * sh * sh * sh, sin(u)};
    }
    const T su = sin(u);
    return {0.5 * su * su * cos(2.0 * u), 0.5 * su * su * sin(2.0 * u), su};
  }

  template <Scalar T>
  std::vector<T> operator()(const T& u, const T& v) const {
    const std::vector<T> f = profile(u);
    return {f[0], f[1], f[2] * cos(v), f[2] * sin(v)};
  }

  SurfaceJet2 analytic_jet(double u, double v) const {
    double f[3], f1[3], f2[3];
    if (spec_.variant == OtsukiVariant::a) {
      const double C = std::cos(u / 2.0), S = std::sin(u / 2.0);
      f[0] = 4.0 / 3.0 * C * C * C;
      f[1] = 4.0 / 3.0 * S * S * S;
      f1[0] = -2.0 * C * C * S;
      f1[1] = 2.0 * S * S * C;
      f2[0] = 2.0 * C * S * S - C * C * C;
      f2[1] = 2.0 * S * C * C - S * S * S;
    } else {
      const double su = std::sin(u), cu = std::cos(u), s2 = std::sin(2 * u), c2 = std::cos(2 * u);
      f[0] = 0.5 * su * su * c2;
      f[1] = 0.5 * su * su * s2;
      f1[0] = su * cu * c2 - su * su * s2;
      f1[1] = 0.5 * s2 * s2 + su * su * c2;
      f2[0] = std::cos(4 * u) - s2 * s2 - 2.0 * su * su * c2;
      f2[1] = std::sin(4 * u) + s2 * c2 - 2.0 * su * su * s2;
    }
    f[2] = std::sin(u);
    f1[2] = std::cos(u);
    f2[2] = -std::sin(u);
    const double cv = std::cos(v), sv = std::sin(v);
    SurfaceJet2 j = detail::make_jet(4, u, v);
    j.X = VecN{f[0], f[1], f[2] * cv, f[2] * sv};
    j.Xu = VecN{f1[0], f1[1], f1[2] * cv, f1[2] * sv};
    j.Xv = VecN{0.0, 0.0, -f[2] * sv, f[2] * cv};
    j.Xuu = VecN{f2[0], f2[1], f2[2] * cv, f2[2] * sv};
    j.Xuv = VecN{0.0, 0.0, -f1[2] * sv, f1[2] * cv};
    j.Xvv = VecN{0.0, 0.0, -f[2] * cv, -f[2] * sv};
    return j;
  }

  std::optional<NormalFrame> paper_frame(double, double) const { return std::nullopt; }

 private:
  OtsukiSpec spec_;
  Rect domain_{};
};

// ---------------------------------------------------------------------------------------------
// General rotated spherical curve in E^{n+m}: X = (phi(u), lambda cos(u/c) rho(v)), where phi is
// the n-block of a generalized spherical curve and rho is a curve on the unit sphere S^{m-1}.
// Evaluable over Jet2, so jets come from the forward or finite-difference sources.

class GeneralSphericalSurface {
 public:
  GeneralSphericalSurface(SphericalCurveSpec curve, VectorFn rho, std::size_t m, Rect domain)
      : curve_(std::move(curve)), rho_(std::move(rho)), m_(m), domain_(domain) {
    if (m_ < 2) throw SpecError("invalid family: rho needs at least 2 components");
    if (!rho_) throw SpecError("invalid family: rho is not set");
  }

  std::size_t dim() const { return curve_.direction().n() + m_; }
  std::string name() const { return "general"; }
  const Rect& domain() const { return domain_; }
  bool clipped() const { return false; }

  template <Scalar T>
  std::vector<T> operator()(const T& u, const T& v) const {
    std::vector<T> x = curve_.phi_block(u);
    const T r = curve_.lambda() * cos(u / curve_.c());
    if constexpr (std::same_as<T, double>) {
      for (const Jet2& g : rho_(Jet2(v))) x.push_back(r * g.val);
    } else {
      for (const Jet2& g : rho_(v)) x.push_back(r * g);
    }
    if (x.size() != dim()) throw DimensionError(x.size(), dim());
    return x;
  }

  std::optional<NormalFrame> paper_frame(double, double) const { return std::nullopt; }

 private:
  SphericalCurveSpec curve_;
  VectorFn rho_;
  std::size_t m_;
  Rect domain_;
};

}  // namespace gss
