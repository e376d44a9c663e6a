#include "bessel/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bessel/errors.hpp"

namespace bessel {

namespace {

void require_same_dim(const HVector& u, const HVector& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorKind::dimension_mismatch, "dimension mismatch: " + std::to_string(u.size()) +
                                                   " vs " + std::to_string(v.size()));
  }
}

}  // namespace

HVector HVector::basis(std::size_t dim, std::size_t k) {
  if (k >= dim) throw Error(ErrorKind::parameter, "basis index out of range");
  HVector e(dim);
  e[k] = 1.0;
  return e;
}

bool HVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Complex c) { return c == Complex{}; });
}

bool HVector::is_finite() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Complex c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

bool HVector::is_real(double tol) const noexcept {
  return std::all_of(coords_.begin(), coords_.end(),
                     [tol](Complex c) { return std::abs(c.imag()) <= tol; });
}

HVector& HVector::operator+=(const HVector& other) {
  require_same_dim(*this, other);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

HVector& HVector::operator-=(const HVector& other) {
  require_same_dim(*this, other);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= other.coords_[k];
  return *this;
}

HVector& HVector::operator*=(Complex scale) noexcept {
  for (auto& c : coords_) c *= scale;
  return *this;
}

Family::Family(HVector x, std::vector<HVector> ys, FieldMode field)
    : x_(std::move(x)), ys_(std::move(ys)), field_(field) {
  if (x_.size() == 0) throw Error(ErrorKind::dimension_mismatch, "reference vector has dimension 0");
  if (ys_.empty()) throw Error(ErrorKind::dimension_mismatch, "family needs at least one test vector");
  if (!x_.is_finite()) throw Error(ErrorKind::malformed_input, "reference vector is not finite");
  for (std::size_t j = 0; j < ys_.size(); ++j) {
    if (ys_[j].size() != x_.size()) {
      throw Error(ErrorKind::dimension_mismatch,
                  "ys[" + std::to_string(j) + "] has dimension " + std::to_string(ys_[j].size()) +
                      ", expected " + std::to_string(x_.size()));
    }
    if (!ys_[j].is_finite()) {
      throw Error(ErrorKind::malformed_input, "ys[" + std::to_string(j) + "] is not finite");
    }
  }
  if (field_ == FieldMode::real) {
    bool real = x_.is_real() && std::all_of(ys_.begin(), ys_.end(), [](const HVector& y) { return y.is_real(); });
    if (!real) throw Error(ErrorKind::malformed_input, "real-mode family has non-zero imaginary parts");
  }
}

bool GramMatrix::is_hermitian(double tol) const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    const Complex d = (*this)(i, i);
    if (std::abs(d.imag()) > tol * std::max(1.0, d.real()) || d.real() < -tol) return false;
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double scale = std::max(1.0, std::abs((*this)(i, j)));
      if (std::abs((*this)(j, i) - std::conj((*this)(i, j))) > tol * scale) return false;
    }
  }
  return true;
}

Complex inner(const HVector& u, const HVector& v) {
  require_same_dim(u, v);
  Complex acc{};
  for (std::size_t k = 0; k < u.size(); ++k) acc += u[k] * std::conj(v[k]);
  return acc;
}

double norm_sq(const HVector& u) noexcept {
  double acc = 0.0;
  for (const auto& c : u) acc += std::norm(c);
  return acc;
}

double norm(const HVector& u) noexcept { return std::sqrt(norm_sq(u)); }

GramMatrix gram(std::span<const HVector> ys) {
  if (ys.empty()) throw Error(ErrorKind::dimension_mismatch, "gram of an empty list");
  const std::size_t n = ys.size();
  GramMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = norm_sq(ys[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      g(i, j) = inner(ys[i], ys[j]);
      g(j, i) = std::conj(g(i, j));
    }
  }
  return g;
}

HVector project_out(const HVector& w, const HVector& x) {
  const double xx = norm_sq(x);
  if (xx == 0.0) throw Error(ErrorKind::degenerate_reference, "cannot project against a zero vector");
  return w - (inner(w, x) / xx) * x;
}

std::vector<HVector> lift_gram_values(const HVector& x, std::span<const Complex> zs,
                                      std::optional<std::span<const HVector>> ws) {
  const double xx = norm_sq(x);
  if (xx == 0.0) throw Error(ErrorKind::degenerate_reference, "lift needs a non-zero reference vector");
  if (ws && ws->size() != zs.size()) {
    throw Error(ErrorKind::dimension_mismatch, "lift: " + std::to_string(ws->size()) +
                                                   " orthogonal parts for " + std::to_string(zs.size()) +
                                                   " coefficients");
  }
  std::vector<HVector> ys;
  ys.reserve(zs.size());
  for (std::size_t j = 0; j < zs.size(); ++j) {
    HVector y = (std::conj(zs[j]) / xx) * x;
    if (ws) {
      if ((*ws)[j].size() != x.size()) {
        throw Error(ErrorKind::dimension_mismatch, "lift: ws[" + std::to_string(j) + "] has wrong dimension");
      }
      y += project_out((*ws)[j], x);
    }
    ys.push_back(std::move(y));
  }
  return ys;
}

bool is_orthonormal(std::span<const HVector> es, double tol) {
  if (es.empty()) return false;
  const auto g = gram(es);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      const Complex expected = i == j ? 1.0 : 0.0;
      if (std::abs(g(i, j) - expected) > tol) return false;
    }
  }
  return true;
}

}  // namespace bessel
