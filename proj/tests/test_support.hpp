#pragma once

// Test-only helpers: straightforward reference formulas written without the
// library's FamilyStats machinery, plus small random generators.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "bessel/numeric.hpp"

namespace oracle {

using bessel::Complex;
using bessel::HVector;

inline Complex dot(const HVector& u, const HVector& v) {
  Complex acc = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) acc += u[k] * std::conj(v[k]);
  return acc;
}

inline double sq_norm(const HVector& u) { return std::real(dot(u, u)); }

inline std::vector<std::vector<Complex>> gram(const std::vector<HVector>& ys) {
  std::vector<std::vector<Complex>> g(ys.size(), std::vector<Complex>(ys.size()));
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) g[i][j] = dot(ys[i], ys[j]);
  return g;
}

inline double bessel_sum(const bessel::Family& f) {
  double acc = 0.0;
  for (const auto& y : f.ys()) acc += std::norm(dot(f.x(), y));
  return acc;
}

inline double max_row_sum(const bessel::Family& f) {
  const auto g = gram(f.ys());
  double best = 0.0;
  for (const auto& row : g) {
    double s = 0.0;
    for (auto v : row) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

inline HVector random_vector(std::mt19937_64& rng, std::size_t d, bool complex = true) {
  std::normal_distribution<double> normal;
  HVector v(d);
  for (std::size_t k = 0; k < d; ++k) v[k] = Complex{normal(rng), complex ? normal(rng) : 0.0};
  return v;
}

inline bessel::Family random_family(std::mt19937_64& rng, std::size_t n, std::size_t d, bool complex = true) {
  std::vector<HVector> ys;
  for (std::size_t j = 0; j < n; ++j) ys.push_back(random_vector(rng, d, complex));
  return bessel::Family(random_vector(rng, d, complex), ys,
                        complex ? bessel::FieldMode::complex : bessel::FieldMode::real);
}

inline bool close(double a, double b, double rel = 1e-12) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace oracle
