#include "bessel/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bessel/errors.hpp"

namespace bessel {

namespace {

constexpr double kPhaseTolerance = 1e-12;

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

}  // namespace

ExtremalSpec plan_extremal(ExtremalTarget target, std::size_t n, const Disk& d) {
  if (n == 0) throw Error(ErrorKind::parameter, "extremal family needs n >= 1");
  const Complex c = d.center();
  const double r = d.radius();
  const double c_sq = std::norm(c);
  const double nn = static_cast<double>(n);

  ExtremalSpec spec{target, n, d, Complex{}, true, {}};
  if (target == ExtremalTarget::root_bound) {
    if (c == Complex{}) throw Error(ErrorKind::parameter, "Gamma = -gamma: the disk is centred at the origin");
    spec.phase_sum = -nn * r * c / (2.0 * c_sq);
    // Equality needs the mean coefficient to point along the centre, i.e. M >= 0.
    if (d.m_constant() < -kPhaseTolerance * 8.0 * c_sq) {
      std::ostringstream os;
      os << "radius " << r << " exceeds sqrt(2)*|center| = " << std::sqrt(2.0 * c_sq)
         << "; |Gamma|^2 + 6 Re(Gamma conj(gamma)) + |gamma|^2 < 0";
      spec.feasible = false;
      spec.reason = os.str();
      return spec;
    }
  } else {
    if (!(d.re_product() > 0.0)) throw Error(ErrorKind::parameter, "Re(Gamma conj(gamma)) must be positive");
    spec.phase_sum = -nn * r * c / c_sq;
  }
  spec.phase_sum = Complex{spec.phase_sum.real() + 0.0, spec.phase_sum.imag() + 0.0};

  if (r == 0.0) {
    spec.phase_sum = Complex{};
    return spec;
  }
  const double s = std::abs(spec.phase_sum);
  if (s > nn * (1.0 + kPhaseTolerance)) {
    std::ostringstream os;
    os << "|phase sum| = " << s << " exceeds n = " << n;
    spec.feasible = false;
    spec.reason = os.str();
  } else if (n == 1 && std::abs(s - 1.0) > kPhaseTolerance) {
    std::ostringstream os;
    os << "n = 1 needs |phase sum| = 1, got " << s;
    spec.feasible = false;
    spec.reason = os.str();
  }
  return spec;
}

std::vector<double> solve_phases(const ExtremalSpec& spec) {
  if (!spec.feasible) throw Error(ErrorKind::construction, "infeasible extremal plan: " + spec.reason);
  const std::size_t n = spec.n;
  const double nn = static_cast<double>(n);
  const double s = std::min(std::abs(spec.phase_sum), nn);
  const double phi = s == 0.0 ? 0.0 : std::arg(spec.phase_sum);

  std::vector<double> theta;
  theta.reserve(n);
  if (n % 2 == 0) {
    const double alpha = std::acos(clamp_unit(s / nn));
    for (std::size_t k = 0; k < n / 2; ++k) theta.push_back(phi + alpha);
    for (std::size_t k = 0; k < n / 2; ++k) theta.push_back(phi - alpha);
  } else {
    theta.push_back(phi);
    if (n > 1) {
      const double beta = std::acos(clamp_unit((s - 1.0) / (nn - 1.0)));
      for (std::size_t k = 0; k < n / 2; ++k) theta.push_back(phi + beta);
      for (std::size_t k = 0; k < n / 2; ++k) theta.push_back(phi - beta);
    }
  }
  return theta;
}

std::vector<Complex> extremal_coefficients(const ExtremalSpec& spec) {
  const auto theta = solve_phases(spec);
  const Complex c = spec.disk.center();
  const double r = spec.disk.radius();
  std::vector<Complex> zs;
  zs.reserve(theta.size());
  for (double t : theta) zs.push_back(c + std::polar(r, t));
  return zs;
}

Family build_extremal(ExtremalTarget target, const HVector& x, std::size_t n, const Disk& d,
                      std::optional<std::span<const HVector>> ws) {
  if (x.is_zero()) throw Error(ErrorKind::degenerate_reference, "extremal family needs x != 0");
  const auto spec = plan_extremal(target, n, d);
  if (!spec.feasible) throw Error(ErrorKind::construction, "infeasible extremal plan: " + spec.reason);

  if (ws) {
    if (ws->size() != n) throw Error(ErrorKind::dimension_mismatch, "need one orthogonal part per test vector");
    HVector total(x.size());
    double scale = 0.0;
    for (const auto& w : *ws) {
      if (w.size() != x.size()) throw Error(ErrorKind::dimension_mismatch, "orthogonal part has wrong dimension");
      auto p = project_out(w, x);
      scale += norm(p);
      total += p;
    }
    if (norm(total) > kBoundaryTolerance * std::max(1.0, scale)) {
      throw Error(ErrorKind::construction, "orthogonal parts must sum to zero after projection");
    }
  }
  return Family(x, lift_gram_values(x, extremal_coefficients(spec), ws));
}

}  // namespace bessel
