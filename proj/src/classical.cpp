#include "bessel/classical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "bessel/errors.hpp"

namespace bessel {

namespace {

// (sum |v|^p)^(1/p), scaled by the largest entry to stay clear of overflow.
double lp_norm(std::span<const double> v, double p) {
  double peak = 0.0;
  for (double a : v) peak = std::max(peak, a);
  if (peak == 0.0) return 0.0;
  double acc = 0.0;
  for (double a : v) acc += std::pow(a / peak, p);
  return peak * std::pow(acc, 1.0 / p);
}

double conjugate_exponent(double p) { return p / (p - 1.0); }

std::string p_label(double p) {
  std::ostringstream os;
  os << "p=" << p;
  return os.str();
}

std::vector<double> moduli(std::span<const Complex> c) {
  std::vector<double> m(c.size());
  std::transform(c.begin(), c.end(), m.begin(), [](Complex z) { return std::abs(z); });
  return m;
}

double sum(std::span<const double> v) {
  double acc = 0.0;
  for (double a : v) acc += a;
  return acc;
}

double max_of(std::span<const double> v) {
  double m = 0.0;
  for (double a : v) m = std::max(m, a);
  return m;
}

// max_i (sum_j |G_ij|^q)^(1/q)
double max_row_lq(const GramMatrix& g, double q) {
  const std::size_t n = g.size();
  std::vector<double> row(n);
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row[j] = std::abs(g(i, j));
    best = std::max(best, lp_norm(row, q));
  }
  return best;
}

double max_abs_entry(const GramMatrix& g) {
  double m = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) m = std::max(m, std::abs(g(i, j)));
  }
  return m;
}

void require_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    std::ostringstream os;
    os << "exponent p must satisfy p > 1, got " << p;
    throw Error(ErrorKind::parameter, os.str());
  }
}

void require_coefficient_count(const FamilyStats& s, std::span<const Complex> c) {
  if (c.size() != s.n()) {
    throw Error(ErrorKind::dimension_mismatch, "expected " + std::to_string(s.n()) +
                                                   " coefficients, got " + std::to_string(c.size()));
  }
}

// |sum c_k <x, y_k>|^2
double weighted_coefficient_sum(const FamilyStats& s, std::span<const Complex> c) {
  Complex acc{};
  for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * s.coeffs()[k];
  return std::norm(acc);
}

}  // namespace

FamilyStats::FamilyStats(const Family& f)
    : x_norm_sq_(norm_sq(f.x())), gram_(bessel::gram(f.ys())), row_sums_(f.n(), 0.0) {
  coeffs_.reserve(f.n());
  bessel_sum_ = 0.0;
  for (const auto& y : f.ys()) {
    coeffs_.push_back(inner(f.x(), y));
    bessel_sum_ += std::norm(coeffs_.back());
  }
  max_row_sum_ = 0.0;
  for (std::size_t i = 0; i < f.n(); ++i) {
    for (std::size_t j = 0; j < f.n(); ++j) row_sums_[i] += std::abs(gram_(i, j));
    max_row_sum_ = std::max(max_row_sum_, row_sums_[i]);
  }
}

double FamilyStats::coeff_power_sum(double r) const noexcept {
  double acc = 0.0;
  for (auto z : coeffs_) acc += std::pow(std::abs(z), r);
  return acc;
}

bool FamilyStats::all_coeffs_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex z) { return z == Complex{}; });
}

double bessel_sum(const Family& f) {
  double acc = 0.0;
  for (const auto& y : f.ys()) acc += std::norm(inner(f.x(), y));
  return acc;
}

BoundReport bessel_inequality(const Family& f, const FamilyStats& s, double tol) {
  if (!is_orthonormal(f.ys(), tol)) {
    return BoundReport::inapplicable(BoundId::bessel, "test vectors are not orthonormal");
  }
  return BoundReport::evaluated(BoundId::bessel, s.bessel_sum(), s.x_norm_sq());
}

BoundReport boas_bellman(const FamilyStats& s) {
  const auto& g = s.gram();
  double max_diag = 0.0;
  double off_sq = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    max_diag = std::max(max_diag, g(i, i).real());
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i != j) off_sq += std::norm(g(i, j));
    }
  }
  return BoundReport::evaluated(BoundId::boas_bellman, s.bessel_sum(),
                                s.x_norm_sq() * (max_diag + std::sqrt(off_sq)));
}

BoundReport bombieri(const FamilyStats& s) {
  return BoundReport::evaluated(BoundId::bombieri, s.bessel_sum(), s.x_norm_sq() * s.max_row_sum());
}

BoundReport selberg(const FamilyStats& s) {
  const auto& g = s.gram();
  double lhs = 0.0;
  for (std::size_t i = 0; i < s.n(); ++i) {
    if (g(i, i).real() == 0.0) {
      return BoundReport::inapplicable(BoundId::selberg, "ys[" + std::to_string(i) + "] is the zero vector");
    }
    lhs += std::norm(s.coeffs()[i]) / s.row_sum(i);
  }
  return BoundReport::evaluated(BoundId::selberg, lhs, s.x_norm_sq());
}

BoundReport offdiag_max(const FamilyStats& s) {
  const auto& g = s.gram();
  double max_diag = 0.0;
  double max_off = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    max_diag = std::max(max_diag, g(i, i).real());
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i != j) max_off = std::max(max_off, std::abs(g(i, j)));
    }
  }
  const double n = static_cast<double>(s.n());
  return BoundReport::evaluated(BoundId::offdiag_max, s.bessel_sum(),
                                s.x_norm_sq() * (max_diag + (n - 1.0) * max_off));
}

BoundReport holder_bombieri(const FamilyStats& s, double p) {
  require_p(p);
  const std::string label = p_label(p);
  if (s.all_coeffs_zero()) {
    return BoundReport::inapplicable(BoundId::holder_bombieri, "all Fourier coefficients vanish", label);
  }
  const auto m = moduli(s.coeffs());
  const double q = conjugate_exponent(p);
  const double b = s.bessel_sum();
  const double lhs = b * b / (lp_norm(m, p) * lp_norm(m, q));
  return BoundReport::evaluated(BoundId::holder_bombieri, lhs, s.x_norm_sq() * s.max_row_sum(), label);
}

BoundReport heilbronn(const FamilyStats& s) {
  double lhs = 0.0;
  for (auto z : s.coeffs()) lhs += std::abs(z);
  double total = 0.0;
  for (std::size_t i = 0; i < s.n(); ++i) total += s.row_sum(i);
  return BoundReport::evaluated(BoundId::heilbronn, lhs, std::sqrt(s.x_norm_sq()) * std::sqrt(total));
}

PecaricValues pecaric(const FamilyStats& s, std::span<const Complex> c) {
  require_coefficient_count(s, c);
  PecaricValues v;
  v.lhs = weighted_coefficient_sum(s, c);
  double weighted = 0.0;
  double c_sq = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    weighted += std::norm(c[i]) * s.row_sum(i);
    c_sq += std::norm(c[i]);
  }
  v.rhs_first = s.x_norm_sq() * weighted;
  v.rhs_second = s.x_norm_sq() * c_sq * s.max_row_sum();
  return v;
}

CoefficientBranches coefficient_branches(const FamilyStats& s, std::span<const Complex> c, double p) {
  require_coefficient_count(s, c);
  const auto m = moduli(c);
  const double l1 = sum(m);
  CoefficientBranches b;
  b.lhs = weighted_coefficient_sum(s, c);
  b.max_branch = s.x_norm_sq() * max_of(m) * l1 * s.max_row_sum();
  if (p > 1.0 && std::isfinite(p)) {
    b.holder_branch = s.x_norm_sq() * l1 * lp_norm(m, p) * max_row_lq(s.gram(), conjugate_exponent(p));
  }
  b.l1_branch = s.x_norm_sq() * l1 * l1 * max_abs_entry(s.gram());
  return b;
}

std::array<BoundReport, 3> coefficient_quotients(const FamilyStats& s, double p) {
  const std::string label = p_label(p);
  if (s.all_coeffs_zero()) {
    const std::string why = "all Fourier coefficients vanish";
    return {BoundReport::inapplicable(BoundId::quotient_max, why),
            BoundReport::inapplicable(BoundId::quotient_holder, why, label),
            BoundReport::inapplicable(BoundId::quotient_l1, why)};
  }
  const auto m = moduli(s.coeffs());
  const double l1 = sum(m);
  const double b = s.bessel_sum();
  const double num = b * b;
  const double xx = s.x_norm_sq();

  auto max_q = BoundReport::evaluated(BoundId::quotient_max, num / (max_of(m) * l1), xx * s.max_row_sum());
  BoundReport holder_q;
  if (p > 1.0 && std::isfinite(p)) {
    holder_q = BoundReport::evaluated(BoundId::quotient_holder, num / (l1 * lp_norm(m, p)),
                                      xx * max_row_lq(s.gram(), conjugate_exponent(p)), label);
  } else {
    holder_q = BoundReport::inapplicable(BoundId::quotient_holder, "needs p > 1", label);
  }
  auto l1_q = BoundReport::evaluated(BoundId::quotient_l1, num / (l1 * l1), xx * max_abs_entry(s.gram()));
  return {std::move(max_q), std::move(holder_q), std::move(l1_q)};
}

std::vector<Complex> bombieri_coefficients(const FamilyStats& s) {
  std::vector<Complex> c(s.n());
  std::transform(s.coeffs().begin(), s.coeffs().end(), c.begin(), [](Complex z) { return std::conj(z); });
  return c;
}

std::vector<Complex> selberg_coefficients(const FamilyStats& s) {
  std::vector<Complex> c(s.n());
  for (std::size_t i = 0; i < s.n(); ++i) {
    c[i] = s.row_sum(i) > 0.0 ? std::conj(s.coeffs()[i]) / s.row_sum(i) : Complex{};
  }
  return c;
}

std::vector<Complex> heilbronn_coefficients(const FamilyStats& s) {
  std::vector<Complex> c(s.n());
  for (std::size_t i = 0; i < s.n(); ++i) {
    const double a = std::abs(s.coeffs()[i]);
    c[i] = a > 0.0 ? std::conj(s.coeffs()[i]) / a : Complex{1.0, 0.0};
  }
  return c;
}

}  // namespace bessel
