#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "bessel/classical.hpp"
#include "bessel/numeric.hpp"
#include "bessel/report.hpp"

namespace bessel {

/// Absolute tolerance for disk membership and boundary residuals, scaled by max(1, radius).
inline constexpr double kBoundaryTolerance = 1e-9;

/// The closed disk with diameter [gamma, Gamma] in the complex plane.
class Disk {
 public:
  Disk(Complex gamma, Complex big_gamma) : gamma_(gamma), big_gamma_(big_gamma) {}

  Complex gamma() const noexcept { return gamma_; }
  Complex big_gamma() const noexcept { return big_gamma_; }
  Complex center() const noexcept { return 0.5 * (gamma_ + big_gamma_); }
  double radius() const noexcept { return 0.5 * std::abs(big_gamma_ - gamma_); }
  /// Re(Gamma * conj(gamma)) = |center|^2 - radius^2.
  double re_product() const noexcept { return (big_gamma_ * std::conj(gamma_)).real(); }
  /// |Gamma|^2 + 6 Re(Gamma conj(gamma)) + |gamma|^2 = 8|center|^2 - 4 radius^2.
  double m_constant() const noexcept {
    return std::norm(big_gamma_) + 6.0 * re_product() + std::norm(gamma_);
  }
  /// Absolute membership slack, tol * max(1, radius).
  double boundary_slack(double tol = kBoundaryTolerance) const noexcept {
    return tol * std::max(1.0, radius());
  }

 private:
  Complex gamma_;
  Complex big_gamma_;
};

/// Product form: (Re G - Re z)(Re z - Re g) + (Im G - Im z)(Im z - Im g) >= 0.
/// The slack is expressed in distance units: the threshold is -(2r + t) t with
/// t = boundary_slack(tol), which makes it agree with disk_condition_abs.
bool disk_condition_re(Complex z, const Disk& d, double tol = kBoundaryTolerance) noexcept;
/// Distance form: |z - center| <= radius + t.
bool disk_condition_abs(Complex z, const Disk& d, double tol = kBoundaryTolerance) noexcept;
/// Box form: Re g <= Re z <= Re G and Im g <= Im z <= Im G. Implies the disk condition.
bool sufficient_condition_box(Complex z, const Disk& d, double tol = kBoundaryTolerance) noexcept;

struct EqualityResiduals {
  std::vector<double> per_j_boundary;  // ||z_j - center| - radius|
  double mean_residual = 0.0;          // distance of the mean test vector from its characterized value
  double max_residual = 0.0;
};

/// sqrt(sum |<x,y_j>|^2) <= |x| |sum y_j| / sqrt(n) + sqrt(n)/4 |G - g|^2 / |G + g|.
/// Throws Error(parameter) when Gamma = -gamma. A coefficient outside the disk
/// yields an inapplicable report naming the index.
BoundReport disk_root_bound(const Family& f, const FamilyStats& s, const Disk& d);
BoundReport disk_root_bound(const Family& f, const Disk& d);
EqualityResiduals disk_root_residuals(const Family& f, const Disk& d);

/// sum |<x,y_j>|^2 <= |G + g|^2 / (4 n Re(G conj g)) |sum y_j|^2 |x|^2.
/// Throws Error(parameter) when Re(Gamma conj(gamma)) <= 0.
BoundReport disk_square_bound(const Family& f, const FamilyStats& s, const Disk& d);
BoundReport disk_square_bound(const Family& f, const Disk& d);
EqualityResiduals disk_square_residuals(const Family& f, const Disk& d);

struct LemmaValues {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// sum |z_j|^2 + n |c|^2 <= n r^2 + Re[conj(G + g) <x, sum y_j>]. Throws Error(precondition)
/// when a coefficient lies outside the disk.
LemmaValues summed_disk_lemma(const Family& f, const Disk& d);

struct OrthonormalRemark {
  BoundReport root;    // sqrt Bessel sum <= |x| + sqrt(n)/4 |G - g|^2 / |G + g|
  BoundReport square;  // Bessel sum <= |G + g|^2 / (4 Re(G conj g)) |x|^2
  bool coarser_than_bessel = false;
};

/// Throws Error(precondition) for non-orthonormal es or a coefficient outside the disk,
/// Error(parameter) when Gamma = -gamma. The square report is inapplicable when
/// Re(Gamma conj(gamma)) <= 0.
OrthonormalRemark orthonormal_remark(const HVector& x, std::span<const HVector> es, const Disk& d,
                                     double tol = kDefaultTolerance);

/// Scalar specializations, evaluated on the one-dimensional family x = 1, y_j = conj(z_j).
BoundReport triangle_reverse_l2(std::span<const Complex> zs, const Disk& d);
BoundReport triangle_reverse_sq(std::span<const Complex> zs, const Disk& d);

/// One-dimensional family with <x, y_j> = zs[j].
Family scalar_family(std::span<const Complex> zs);

}  // namespace bessel
