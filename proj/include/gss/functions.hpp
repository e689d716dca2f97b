#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "jet.hpp"

namespace gss {

// Scalar and vector functions of one real variable, written once over Jet2 so that values and
// exact first/second derivatives come from the same callable.
using ScalarFn = std::function<Jet2(const Jet2&)>;
using VectorFn = std::function<std::vector<Jet2>(const Jet2&)>;

// Value and first two derivatives of a univariate function at t.
struct Univariate {
  double f = 0.0, d1 = 0.0, d2 = 0.0;
};
struct UnivariateVec {
  std::vector<double> f, d1, d2;
};

inline Univariate univariate(const ScalarFn& fn, double t) {
  const Jet2 j = fn(Jet2::variable_u(t));
  return {j.val, j.du, j.duu};
}

inline UnivariateVec univariate(const VectorFn& fn, double t) {
  const std::vector<Jet2> js = fn(Jet2::variable_u(t));
  UnivariateVec out;
  for (const Jet2& j : js) {
    out.f.push_back(j.val);
    out.d1.push_back(j.du);
    out.d2.push_back(j.duu);
  }
  return out;
}

// Angle function alpha(u).
class AngleFunction {
 public:
  AngleFunction() : AngleFunction(identity()) {}
  explicit AngleFunction(ScalarFn fn) : fn_(std::move(fn)) {}

  static AngleFunction polynomial(std::vector<double> coeffs) {
    return AngleFunction([coeffs = std::move(coeffs)](const Jet2& t) {
      Jet2 acc(0.0);
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + Jet2(*it);
      return acc;
    });
  }
  static AngleFunction constant(double a) { return polynomial({a}); }
  static AngleFunction identity() { return polynomial({0.0, 1.0}); }

  Jet2 operator()(const Jet2& t) const { return fn_(t); }
  double operator()(double t) const { return fn_(Jet2(t)).val; }
  Univariate jet(double t) const { return univariate(fn_, t); }
  const ScalarFn& fn() const noexcept { return fn_; }

 private:
  ScalarFn fn_;
};

}  // namespace gss
