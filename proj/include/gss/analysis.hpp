#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "errors.hpp"
#include "vec.hpp"

namespace gss {

struct SphereFit {
  VecN center;
  double radius = 0.0;
  double max_radial_deviation = 0.0;  // max | |x - center| - radius |
};

// Linear least squares on |x|^2 = 2 c.x + (r^2 - |c|^2).
inline SphereFit fit_sphere(const std::vector<VecN>& points) {
  if (points.empty()) throw SpecError("sphere fit needs points");
  const auto n = static_cast<Eigen::Index>(points[0].dim());
  if (static_cast<Eigen::Index>(points.size()) < n + 1) throw SpecError("sphere fit needs at least dim + 1 points");
  Eigen::MatrixXd A(points.size(), n + 1);
  Eigen::VectorXd b(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    points[0].check_dim(points[k]);
    const auto row = static_cast<Eigen::Index>(k);
    for (Eigen::Index i = 0; i < n; ++i) A(row, i) = 2.0 * points[k][static_cast<std::size_t>(i)];
    A(row, n) = 1.0;
    b(row) = dot(points[k], points[k]);
  }
  const Eigen::VectorXd sol = A.colPivHouseholderQr().solve(b);
  SphereFit fit;
  fit.center = VecN(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) fit.center[static_cast<std::size_t>(i)] = sol(i);
  fit.radius = std::sqrt(sol(n) + dot(fit.center, fit.center));
  for (const VecN& p : points)
    fit.max_radial_deviation = std::fmax(fit.max_radial_deviation, std::fabs(norm(p - fit.center) - fit.radius));
  return fit;
}

struct AffineRank {
  int rank = 0;
  std::vector<double> singular_values;  // descending
};

// Rank of {p_k - p_0}; singular values below rel_tol * sigma_max count as zero.
inline AffineRank affine_rank(const std::vector<VecN>& points, double rel_tol = 1e-8) {
  if (points.size() < 2) return {};
  const auto n = static_cast<Eigen::Index>(points[0].dim());
  Eigen::MatrixXd D(points.size() - 1, n);
  for (std::size_t k = 1; k < points.size(); ++k) {
    const VecN d = points[k] - points[0];
    for (Eigen::Index i = 0; i < n; ++i) D(static_cast<Eigen::Index>(k - 1), i) = d[static_cast<std::size_t>(i)];
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(D);
  AffineRank out;
  const Eigen::VectorXd& s = svd.singularValues();
  for (Eigen::Index i = 0; i < s.size(); ++i) out.singular_values.push_back(s(i));
  const double smax = s.size() ? s(0) : 0.0;
  for (double x : out.singular_values)
    if (x > rel_tol * smax) ++out.rank;
  return out;
}

}  // namespace gss
