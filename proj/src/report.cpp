#include "bessel/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bessel {

std::string_view to_string(BoundId id) noexcept {
  switch (id) {
    case BoundId::bessel: return "bessel";
    case BoundId::boas_bellman: return "boas_bellman";
    case BoundId::bombieri: return "bombieri";
    case BoundId::selberg: return "selberg";
    case BoundId::offdiag_max: return "offdiag_max";
    case BoundId::holder_bombieri: return "holder_bombieri";
    case BoundId::heilbronn: return "heilbronn";
    case BoundId::pecaric: return "pecaric";
    case BoundId::pecaric_chain: return "pecaric_chain";
    case BoundId::coeff_max: return "coeff_max";
    case BoundId::coeff_holder: return "coeff_holder";
    case BoundId::coeff_l1: return "coeff_l1";
    case BoundId::quotient_max: return "quotient_max";
    case BoundId::quotient_holder: return "quotient_holder";
    case BoundId::quotient_l1: return "quotient_l1";
    case BoundId::disk_root: return "disk_root";
    case BoundId::disk_square: return "disk_square";
    case BoundId::summed_disk_lemma: return "summed_disk_lemma";
    case BoundId::orthonormal_root: return "orthonormal_root";
    case BoundId::orthonormal_square: return "orthonormal_square";
    case BoundId::triangle_reverse_l2: return "triangle_reverse_l2";
    case BoundId::triangle_reverse_sq: return "triangle_reverse_sq";
  }
  return "unknown";
}

std::optional<BoundId> bound_from_string(std::string_view name) noexcept {
  for (auto id : kAllBounds) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::tight: return "tight";
    case Verdict::violated: return "violated";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "unknown";
}

BoundReport BoundReport::evaluated(BoundId id, double lhs, double rhs, std::string variant) {
  BoundReport r;
  r.id = id;
  r.variant = std::move(variant);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  if (rhs != 0.0) {
    r.ratio = lhs / rhs;
  } else {
    r.ratio = lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  r.preconditions_met = true;
  return r;
}

BoundReport BoundReport::inapplicable(BoundId id, std::string reason, std::string variant) {
  BoundReport r;
  r.id = id;
  r.variant = std::move(variant);
  r.lhs = std::numeric_limits<double>::quiet_NaN();
  r.rhs = std::numeric_limits<double>::quiet_NaN();
  r.slack = std::numeric_limits<double>::quiet_NaN();
  r.ratio = std::numeric_limits<double>::quiet_NaN();
  r.preconditions_met = false;
  r.note = std::move(reason);
  return r;
}

double BoundReport::relative_slack() const noexcept {
  return slack / std::max(1.0, std::abs(rhs));
}

Verdict BoundReport::verdict(double tol) const noexcept {
  if (!preconditions_met) return Verdict::inapplicable;
  const double rel = relative_slack();
  if (!(rel >= -tol)) return Verdict::violated;
  if (rel < tol) return Verdict::tight;
  return Verdict::holds;
}

}  // namespace bessel
