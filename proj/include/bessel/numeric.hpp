#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace bessel {

using Complex = std::complex<double>;

/// Default relative tolerance for inequality checks.
inline constexpr double kDefaultTolerance = 1e-9;

enum class FieldMode { real, complex };

/// Element of a finite-dimensional complex inner product space.
class HVector {
 public:
  HVector() = default;
  explicit HVector(std::size_t dim) : coords_(dim) {}
  HVector(std::initializer_list<Complex> coords) : coords_(coords) {}
  explicit HVector(std::vector<Complex> coords) : coords_(std::move(coords)) {}

  /// Unit vector e_k of the given dimension.
  static HVector basis(std::size_t dim, std::size_t k);

  std::size_t size() const noexcept { return coords_.size(); }
  Complex& operator[](std::size_t k) { return coords_[k]; }
  const Complex& operator[](std::size_t k) const { return coords_[k]; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  std::span<const Complex> coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  bool is_finite() const noexcept;
  bool is_real(double tol = 0.0) const noexcept;

  HVector& operator+=(const HVector& other);
  HVector& operator-=(const HVector& other);
  HVector& operator*=(Complex scale) noexcept;

  friend HVector operator+(HVector a, const HVector& b) { return a += b; }
  friend HVector operator-(HVector a, const HVector& b) { return a -= b; }
  friend HVector operator*(Complex s, HVector v) { return v *= s; }
  friend HVector operator*(HVector v, Complex s) { return v *= s; }

  friend bool operator==(const HVector&, const HVector&) = default;

 private:
  std::vector<Complex> coords_;
};

/// Reference vector x together with the test vectors y_1..y_n.
class Family {
 public:
  /// Throws Error(dimension_mismatch) on inconsistent dimensions, n = 0, dim = 0,
  /// non-finite coordinates, or non-real data in real mode.
  Family(HVector x, std::vector<HVector> ys, FieldMode field = FieldMode::complex);

  const HVector& x() const noexcept { return x_; }
  const std::vector<HVector>& ys() const noexcept { return ys_; }
  FieldMode field() const noexcept { return field_; }
  std::size_t n() const noexcept { return ys_.size(); }
  std::size_t dim() const noexcept { return x_.size(); }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  HVector x_;
  std::vector<HVector> ys_;
  FieldMode field_;
};

/// Hermitian matrix of pairwise inner products <y_i, y_j>.
class GramMatrix {
 public:
  explicit GramMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  bool is_hermitian(double tol) const noexcept;

 private:
  std::size_t n_;
  std::vector<Complex> entries_;
};

/// Linear in the first argument, conjugate-linear in the second.
Complex inner(const HVector& u, const HVector& v);
double norm_sq(const HVector& u) noexcept;
double norm(const HVector& u) noexcept;

GramMatrix gram(std::span<const HVector> ys);

/// Component of w orthogonal to x. x must be non-zero.
HVector project_out(const HVector& w, const HVector& x);

/// Returns y_j with inner(x, y_j) == zs[j]: y_j = conj(z_j)/|x|^2 x + (w_j minus its x-component).
/// ws, when given, supplies the free orthogonal parts.
std::vector<HVector> lift_gram_values(const HVector& x, std::span<const Complex> zs,
                                      std::optional<std::span<const HVector>> ws = std::nullopt);

/// True when a <= b up to tol * max(1, |b|).
inline bool approx_le(double a, double b, double tol) noexcept {
  double scale = b < 0 ? -b : b;
  return a <= b + tol * (scale > 1.0 ? scale : 1.0);
}

/// True when gram(es) is the identity within tol.
bool is_orthonormal(std::span<const HVector> es, double tol);

}  // namespace bessel
