#pragma once

#include <array>
#include <random>
#include <vector>

#include <gss/jet.hpp>

// Graph-type map (u, v, p(u, v), q(u, v)) with random quartic p and q; regular everywhere.
struct QuarticGraph {
  std::array<std::array<double, 15>, 2> coeffs{};

  std::size_t dim() const { return 4; }

  static QuarticGraph random(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    QuarticGraph g;
    for (auto& row : g.coeffs)
      for (double& x : row) x = d(rng);
    return g;
  }

  template <gss::Scalar T>
  std::vector<T> operator()(const T& u, const T& v) const {
    std::vector<T> out{u, v, T(0.0), T(0.0)};
    for (std::size_t k = 0; k < 2; ++k) {
      std::size_t idx = 0;
      T upow(1.0);
      for (int a = 0; a <= 4; ++a) {
        T term = upow;
        for (int b = 0; a + b <= 4; ++b) {
          out[2 + k] = out[2 + k] + coeffs[k][idx++] * term;
          term = term * v;
        }
        upow = upow * u;
      }
    }
    return out;
  }
};
