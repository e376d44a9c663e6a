#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "bessel/numeric.hpp"
#include "bessel/report.hpp"

namespace bessel {

/// Quantities shared by every bound on a family: Fourier coefficients <x, y_j>,
/// the Gram matrix, and the absolute row sums of the Gram matrix. Compute once,
/// then evaluate as many bounds as needed against it.
class FamilyStats {
 public:
  explicit FamilyStats(const Family& f);

  std::size_t n() const noexcept { return coeffs_.size(); }
  double x_norm_sq() const noexcept { return x_norm_sq_; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  const GramMatrix& gram() const noexcept { return gram_; }
  /// sum_j |<y_i, y_j>|
  double row_sum(std::size_t i) const noexcept { return row_sums_[i]; }
  double max_row_sum() const noexcept { return max_row_sum_; }
  double bessel_sum() const noexcept { return bessel_sum_; }
  /// sum_j |<x, y_j>|^r
  double coeff_power_sum(double r) const noexcept;
  bool all_coeffs_zero() const noexcept;

 private:
  double x_norm_sq_;
  std::vector<Complex> coeffs_;
  GramMatrix gram_;
  std::vector<double> row_sums_;
  double max_row_sum_;
  double bessel_sum_;
};

double bessel_sum(const Family& f);

/// Bessel's inequality itself; applicable only when ys is orthonormal within tol.
BoundReport bessel_inequality(const Family& f, const FamilyStats& s, double tol = kDefaultTolerance);

BoundReport boas_bellman(const FamilyStats& s);
BoundReport bombieri(const FamilyStats& s);
/// Inapplicable when some y_i is zero.
BoundReport selberg(const FamilyStats& s);
/// An empty off-diagonal max (n = 1) counts as 0.
BoundReport offdiag_max(const FamilyStats& s);
/// Throws Error(parameter) for p <= 1. Inapplicable when every coefficient vanishes.
BoundReport holder_bombieri(const FamilyStats& s, double p);
BoundReport heilbronn(const FamilyStats& s);

struct PecaricValues {
  double lhs = 0.0;
  double rhs_first = 0.0;
  double rhs_second = 0.0;
};

/// Throws Error(dimension_mismatch) when c.size() != n.
PecaricValues pecaric(const FamilyStats& s, std::span<const Complex> c);

struct CoefficientBranches {
  double lhs = 0.0;
  double max_branch = 0.0;
  std::optional<double> holder_branch;  // empty when p <= 1
  double l1_branch = 0.0;
};

/// The three-branch bound on |sum c_k <x,y_k>|^2. The first branch uses max_k |c_k|.
CoefficientBranches coefficient_branches(const FamilyStats& s, std::span<const Complex> c, double p);

/// The three branches with c_k = conj(<x, y_k>), in their quotient form:
/// {quotient_max, quotient_holder, quotient_l1}.
std::array<BoundReport, 3> coefficient_quotients(const FamilyStats& s, double p);

/// The three classical coefficient choices that recover other bounds from Pečarić's inequality.
std::vector<Complex> bombieri_coefficients(const FamilyStats& s);
std::vector<Complex> selberg_coefficients(const FamilyStats& s);
/// Unit modulus phases conj(z)/|z|; zero coefficients get phase 1.
std::vector<Complex> heilbronn_coefficients(const FamilyStats& s);

// Family-level conveniences.
inline BoundReport boas_bellman(const Family& f) { return boas_bellman(FamilyStats(f)); }
inline BoundReport bombieri(const Family& f) { return bombieri(FamilyStats(f)); }
inline BoundReport selberg(const Family& f) { return selberg(FamilyStats(f)); }
inline BoundReport offdiag_max(const Family& f) { return offdiag_max(FamilyStats(f)); }
inline BoundReport holder_bombieri(const Family& f, double p) { return holder_bombieri(FamilyStats(f), p); }
inline BoundReport heilbronn(const Family& f) { return heilbronn(FamilyStats(f)); }
inline PecaricValues pecaric(const Family& f, std::span<const Complex> c) { return pecaric(FamilyStats(f), c); }

}  // namespace bessel
