#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "errors.hpp"

namespace gss {

// Point or vector in E^n. The dimension is fixed at construction.
class VecN {
 public:
  VecN() = default;
  explicit VecN(std::size_t dim) : c_(dim, 0.0) {}
  VecN(std::initializer_list<double> coords) : c_(coords) {}
  explicit VecN(std::vector<double> coords) : c_(std::move(coords)) {}

  static VecN basis(std::size_t dim, std::size_t i) {
    VecN e(dim);
    e[i] = 1.0;
    return e;
  }

  std::size_t dim() const noexcept { return c_.size(); }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }
  std::span<const double> coords() const noexcept { return c_; }
  const std::vector<double>& data() const noexcept { return c_; }

  VecN& operator+=(const VecN& o) {
    check_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  VecN& operator-=(const VecN& o) {
    check_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  VecN& operator*=(double s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  VecN& operator/=(double s) {
    for (auto& x : c_) x /= s;
    return *this;
  }

  friend VecN operator+(VecN a, const VecN& b) { return a += b; }
  friend VecN operator-(VecN a, const VecN& b) { return a -= b; }
  friend VecN operator-(VecN a) { return a *= -1.0; }
  friend VecN operator*(VecN a, double s) { return a *= s; }
  friend VecN operator*(double s, VecN a) { return a *= s; }
  friend VecN operator/(VecN a, double s) { return a /= s; }
  friend bool operator==(const VecN&, const VecN&) = default;

  void check_dim(const VecN& o) const {
    if (o.dim() != dim()) throw DimensionError(dim(), o.dim());
  }

 private:
  std::vector<double> c_;
};

inline double dot(const VecN& a, const VecN& b) {
  a.check_dim(b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const VecN& a) { return std::sqrt(dot(a, a)); }

inline double max_abs(const VecN& a) {
  double m = 0.0;
  for (double x : a.coords()) m = std::fmax(m, std::fabs(x));
  return m;
}

inline bool all_finite(const VecN& a) {
  for (double x : a.coords())
    if (!std::isfinite(x)) return false;
  return true;
}

// 3D cross product; both arguments must be 3-dimensional.
inline VecN cross(const VecN& a, const VecN& b) {
  if (a.dim() != 3) throw DimensionError(a.dim(), 3);
  if (b.dim() != 3) throw DimensionError(b.dim(), 3);
  return VecN{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace gss
