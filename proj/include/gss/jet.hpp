#pragma once

#include <cmath>
#include <concepts>
#include <ostream>

namespace gss {

using std::abs;
using std::atan2;
using std::cos;
using std::exp;
using std::fabs;
using std::log;
using std::pow;
using std::sin;
using std::sqrt;
using std::tan;

// Second-order truncated Taylor polynomial in the two surface parameters (u, v).
//
// Arithmetic on Jet2 propagates the value, the gradient and the Hessian exactly,
// so evaluating a map written against a generic scalar yields its full
// second-order jet in one pass (forward-mode differentiation).
struct Jet2 {
  double val = 0.0;
  double du = 0.0, dv = 0.0;
  double duu = 0.0, duv = 0.0, dvv = 0.0;

  constexpr Jet2() = default;
  constexpr Jet2(double value) : val(value) {}  // NOLINT: constants lift implicitly
  constexpr Jet2(double value, double gu, double gv, double huu, double huv, double hvv)
      : val(value), du(gu), dv(gv), duu(huu), duv(huv), dvv(hvv) {}

  static constexpr Jet2 variable_u(double u) { return {u, 1.0, 0.0, 0.0, 0.0, 0.0}; }
  static constexpr Jet2 variable_v(double v) { return {v, 0.0, 1.0, 0.0, 0.0, 0.0}; }

  constexpr Jet2& operator+=(const Jet2& o) {
    val += o.val;
    du += o.du;
    dv += o.dv;
    duu += o.duu;
    duv += o.duv;
    dvv += o.dvv;
    return *this;
  }
  constexpr Jet2& operator-=(const Jet2& o) {
    val -= o.val;
    du -= o.du;
    dv -= o.dv;
    duu -= o.duu;
    duv -= o.duv;
    dvv -= o.dvv;
    return *this;
  }
  constexpr Jet2& operator*=(const Jet2& o) {
    const Jet2 a = *this;
    val = a.val * o.val;
    du = a.du * o.val + a.val * o.du;
    dv = a.dv * o.val + a.val * o.dv;
    duu = a.duu * o.val + 2.0 * a.du * o.du + a.val * o.duu;
    duv = a.duv * o.val + a.du * o.dv + a.dv * o.du + a.val * o.duv;
    dvv = a.dvv * o.val + 2.0 * a.dv * o.dv + a.val * o.dvv;
    return *this;
  }
  constexpr Jet2& operator/=(const Jet2& o);
};

// f(x) given f, f', f'' at x.val (chain rule through second order).
constexpr Jet2 compose(const Jet2& x, double f0, double f1, double f2) {
  return {f0,
          f1 * x.du,
          f1 * x.dv,
          f1 * x.duu + f2 * x.du * x.du,
          f1 * x.duv + f2 * x.du * x.dv,
          f1 * x.dvv + f2 * x.dv * x.dv};
}

constexpr Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
constexpr Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
constexpr Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
constexpr Jet2 operator-(const Jet2& a) { return {-a.val, -a.du, -a.dv, -a.duu, -a.duv, -a.dvv}; }
constexpr Jet2 operator+(const Jet2& a) { return a; }

constexpr Jet2 reciprocal(const Jet2& x) {
  const double r = 1.0 / x.val;
  return compose(x, r, -r * r, 2.0 * r * r * r);
}

constexpr Jet2& Jet2::operator/=(const Jet2& o) { return *this *= reciprocal(o); }
constexpr Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }

inline Jet2 sin(const Jet2& x) {
  const double s = std::sin(x.val), c = std::cos(x.val);
  return compose(x, s, c, -s);
}
inline Jet2 cos(const Jet2& x) {
  const double s = std::sin(x.val), c = std::cos(x.val);
  return compose(x, c, -s, -c);
}
inline Jet2 tan(const Jet2& x) {
  const double t = std::tan(x.val), sec2 = 1.0 + t * t;
  return compose(x, t, sec2, 2.0 * t * sec2);
}
inline Jet2 exp(const Jet2& x) {
  const double e = std::exp(x.val);
  return compose(x, e, e, e);
}
inline Jet2 log(const Jet2& x) { return compose(x, std::log(x.val), 1.0 / x.val, -1.0 / (x.val * x.val)); }
inline Jet2 sqrt(const Jet2& x) {
  const double s = std::sqrt(x.val);
  return compose(x, s, 0.5 / s, -0.25 / (s * x.val));
}
inline Jet2 pow(const Jet2& x, double p) {
  const double f0 = std::pow(x.val, p);
  return compose(x, f0, p * std::pow(x.val, p - 1.0), p * (p - 1.0) * std::pow(x.val, p - 2.0));
}

inline std::ostream& operator<<(std::ostream& os, const Jet2& j) {
  return os << "Jet2{" << j.val << "; " << j.du << ", " << j.dv << "; " << j.duu << ", " << j.duv << ", "
            << j.dvv << "}";
}

template <typename T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Jet2>;

constexpr double primal(double x) noexcept { return x; }
constexpr double primal(const Jet2& x) noexcept { return x.val; }

}  // namespace gss
