#include "bessel/sharp.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "bessel/errors.hpp"

namespace bessel {

namespace {

std::optional<std::size_t> first_outside(std::span<const Complex> zs, const Disk& d) {
  for (std::size_t j = 0; j < zs.size(); ++j) {
    if (!disk_condition_abs(zs[j], d)) return j;
  }
  return std::nullopt;
}

std::string outside_message(std::size_t j) {
  return "coefficient " + std::to_string(j) + " lies outside the disk";
}

void require_inside(std::span<const Complex> zs, const Disk& d) {
  if (auto j = first_outside(zs, d)) throw Error(ErrorKind::precondition, outside_message(*j));
}

void require_nonzero_center(const Disk& d) {
  if (d.gamma() + d.big_gamma() == Complex{}) {
    throw Error(ErrorKind::parameter, "Gamma = -gamma: the disk is centred at the origin");
  }
}

void require_positive_re_product(const Disk& d) {
  if (!(d.re_product() > 0.0)) {
    throw Error(ErrorKind::parameter, "Re(Gamma conj(gamma)) must be positive");
  }
}

HVector sum_of(const Family& f) {
  HVector total(f.dim());
  for (const auto& y : f.ys()) total += y;
  return total;
}

std::vector<Complex> coefficients_of(const Family& f) {
  std::vector<Complex> zs;
  zs.reserve(f.n());
  for (const auto& y : f.ys()) zs.push_back(inner(f.x(), y));
  return zs;
}

// Residuals shared by both equality characterizations: the mean of the y_j must
// equal target * x.
EqualityResiduals residuals(const Family& f, const Disk& d, Complex target_factor) {
  const double xx = norm_sq(f.x());
  if (xx == 0.0) throw Error(ErrorKind::degenerate_reference, "equality residuals need x != 0");
  const auto zs = coefficients_of(f);
  require_inside(zs, d);

  EqualityResiduals r;
  r.per_j_boundary.reserve(zs.size());
  const Complex c = d.center();
  const double radius = d.radius();
  for (auto z : zs) r.per_j_boundary.push_back(std::abs(std::abs(z - c) - radius));

  HVector mean = sum_of(f);
  mean *= 1.0 / static_cast<double>(f.n());
  mean -= (target_factor / xx) * f.x();
  r.mean_residual = norm(mean);

  r.max_residual = r.mean_residual;
  for (double b : r.per_j_boundary) r.max_residual = std::max(r.max_residual, b);
  return r;
}

}  // namespace

bool disk_condition_re(Complex z, const Disk& d, double tol) noexcept {
  const Complex g = d.gamma();
  const Complex G = d.big_gamma();
  const double product =
      (G.real() - z.real()) * (z.real() - g.real()) + (G.imag() - z.imag()) * (z.imag() - g.imag());
  const double t = d.boundary_slack(tol);
  return product >= -(2.0 * d.radius() + t) * t;
}

bool disk_condition_abs(Complex z, const Disk& d, double tol) noexcept {
  return std::abs(z - d.center()) <= d.radius() + d.boundary_slack(tol);
}

bool sufficient_condition_box(Complex z, const Disk& d, double tol) noexcept {
  const Complex g = d.gamma();
  const Complex G = d.big_gamma();
  const double t = d.boundary_slack(tol);
  return G.real() + t >= z.real() && z.real() + t >= g.real() && G.imag() + t >= z.imag() &&
         z.imag() + t >= g.imag();
}

BoundReport disk_root_bound(const Family& f, const FamilyStats& s, const Disk& d) {
  require_nonzero_center(d);
  if (auto j = first_outside(s.coeffs(), d)) {
    return BoundReport::inapplicable(BoundId::disk_root, outside_message(*j));
  }
  const double n = static_cast<double>(f.n());
  const double lhs = std::sqrt(s.bessel_sum());
  const double rhs = std::sqrt(s.x_norm_sq()) * norm(sum_of(f)) / std::sqrt(n) +
                     0.25 * std::sqrt(n) * std::norm(d.big_gamma() - d.gamma()) /
                         std::abs(d.big_gamma() + d.gamma());
  return BoundReport::evaluated(BoundId::disk_root, lhs, rhs);
}

BoundReport disk_root_bound(const Family& f, const Disk& d) { return disk_root_bound(f, FamilyStats(f), d); }

EqualityResiduals disk_root_residuals(const Family& f, const Disk& d) {
  require_nonzero_center(d);
  const Complex target = d.m_constant() / (4.0 * (d.big_gamma() + d.gamma()));
  return residuals(f, d, target);
}

BoundReport disk_square_bound(const Family& f, const FamilyStats& s, const Disk& d) {
  require_positive_re_product(d);
  if (auto j = first_outside(s.coeffs(), d)) {
    return BoundReport::inapplicable(BoundId::disk_square, outside_message(*j));
  }
  const double n = static_cast<double>(f.n());
  const double factor = std::norm(d.big_gamma() + d.gamma()) / (4.0 * d.re_product());
  const double rhs = factor * norm_sq(sum_of(f)) * s.x_norm_sq() / n;
  return BoundReport::evaluated(BoundId::disk_square, s.bessel_sum(), rhs);
}

BoundReport disk_square_bound(const Family& f, const Disk& d) {
  return disk_square_bound(f, FamilyStats(f), d);
}

EqualityResiduals disk_square_residuals(const Family& f, const Disk& d) {
  require_positive_re_product(d);
  const Complex target = 2.0 * d.re_product() / (d.big_gamma() + d.gamma());
  return residuals(f, d, target);
}

LemmaValues summed_disk_lemma(const Family& f, const Disk& d) {
  const auto zs = coefficients_of(f);
  require_inside(zs, d);
  const double n = static_cast<double>(f.n());
  LemmaValues v;
  for (auto z : zs) v.lhs += std::norm(z);
  v.lhs += n * std::norm(d.center());
  const double r = d.radius();
  const Complex weight = std::conj(d.big_gamma()) + std::conj(d.gamma());
  v.rhs = n * r * r + (weight * inner(f.x(), sum_of(f))).real();
  return v;
}

OrthonormalRemark orthonormal_remark(const HVector& x, std::span<const HVector> es, const Disk& d, double tol) {
  if (!is_orthonormal(es, tol)) throw Error(ErrorKind::precondition, "family is not orthonormal");
  require_nonzero_center(d);
  std::vector<Complex> zs;
  zs.reserve(es.size());
  double bessel = 0.0;
  for (const auto& e : es) {
    zs.push_back(inner(x, e));
    bessel += std::norm(zs.back());
  }
  require_inside(zs, d);

  const double n = static_cast<double>(es.size());
  const double x_norm = norm(x);
  OrthonormalRemark out;
  out.root = BoundReport::evaluated(
      BoundId::orthonormal_root, std::sqrt(bessel),
      x_norm + 0.25 * std::sqrt(n) * std::norm(d.big_gamma() - d.gamma()) / std::abs(d.big_gamma() + d.gamma()));
  if (d.re_product() > 0.0) {
    const double factor = std::norm(d.big_gamma() + d.gamma()) / (4.0 * d.re_product());
    out.square = BoundReport::evaluated(BoundId::orthonormal_square, bessel, factor * x_norm * x_norm);
  } else {
    out.square = BoundReport::inapplicable(BoundId::orthonormal_square, "Re(Gamma conj(gamma)) <= 0");
  }
  out.coarser_than_bessel = approx_le(x_norm, out.root.rhs, tol) &&
                            (!out.square.preconditions_met || approx_le(x_norm * x_norm, out.square.rhs, tol));
  return out;
}

Family scalar_family(std::span<const Complex> zs) {
  const HVector x{Complex{1.0, 0.0}};
  return Family(x, lift_gram_values(x, zs));
}

BoundReport triangle_reverse_l2(std::span<const Complex> zs, const Disk& d) {
  auto r = disk_root_bound(scalar_family(zs), d);
  r.id = BoundId::triangle_reverse_l2;
  return r;
}

BoundReport triangle_reverse_sq(std::span<const Complex> zs, const Disk& d) {
  auto r = disk_square_bound(scalar_family(zs), d);
  r.id = BoundId::triangle_reverse_sq;
  return r;
}

}  // namespace bessel
