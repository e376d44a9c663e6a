#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace bessel {

/// Every inequality the toolkit evaluates.
enum class BoundId {
  bessel,
  boas_bellman,
  bombieri,
  selberg,
  offdiag_max,        // max-norm plus (n-1) times the largest off-diagonal Gram entry
  holder_bombieri,    // Bombieri with the (p, q) Hölder quotient on the left
  heilbronn,
  pecaric,            // |sum c_k <x,y_k>|^2 against the weighted row sums
  pecaric_chain,      // weighted row sums against the max-row bound
  coeff_max,          // three-branch bound, max |c_k| branch
  coeff_holder,       // three-branch bound, Hölder branch
  coeff_l1,           // three-branch bound, (sum |c_k|)^2 branch
  quotient_max,       // coefficient-substituted quotients of the three branches
  quotient_holder,
  quotient_l1,
  disk_root,          // sharp bound on the root Bessel sum under the disk condition
  disk_square,        // sharp bound on the Bessel sum when Re(Gamma conj(gamma)) > 0
  summed_disk_lemma,
  orthonormal_root,
  orthonormal_square,
  triangle_reverse_l2,
  triangle_reverse_sq,
};

inline constexpr BoundId kAllBounds[] = {
    BoundId::bessel,          BoundId::boas_bellman,       BoundId::bombieri,
    BoundId::selberg,         BoundId::offdiag_max,        BoundId::holder_bombieri,
    BoundId::heilbronn,       BoundId::pecaric,            BoundId::pecaric_chain,
    BoundId::coeff_max,       BoundId::coeff_holder,       BoundId::coeff_l1,
    BoundId::quotient_max,    BoundId::quotient_holder,    BoundId::quotient_l1,
    BoundId::disk_root,       BoundId::disk_square,        BoundId::summed_disk_lemma,
    BoundId::orthonormal_root, BoundId::orthonormal_square, BoundId::triangle_reverse_l2,
    BoundId::triangle_reverse_sq,
};

std::string_view to_string(BoundId id) noexcept;
std::optional<BoundId> bound_from_string(std::string_view name) noexcept;

enum class Verdict { holds, tight, violated, inapplicable };

std::string_view to_string(Verdict v) noexcept;

/// One evaluated inequality lhs <= rhs.
struct BoundReport {
  BoundId id{};
  std::string variant;  // parameter label such as "p=3" or "c=conj"; may be empty
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  double ratio = 0.0;  // lhs / rhs; 0 when both vanish, +inf when only rhs does
  bool preconditions_met = false;
  std::string note;

  static BoundReport evaluated(BoundId id, double lhs, double rhs, std::string variant = {});
  static BoundReport inapplicable(BoundId id, std::string reason, std::string variant = {});

  /// slack / max(1, |rhs|).
  double relative_slack() const noexcept;
  Verdict verdict(double tol) const noexcept;
};

}  // namespace bessel
