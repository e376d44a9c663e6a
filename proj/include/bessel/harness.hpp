#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bessel/numeric.hpp"
#include "bessel/report.hpp"
#include "bessel/sharp.hpp"

namespace bessel {

enum class FieldChoice { real, complex, mixed };

struct IndexRange {
  std::size_t lo = 1;
  std::size_t hi = 1;

  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// How (gamma, Gamma) and the boundary/interior placement of coefficients are drawn.
struct DiskSampler {
  double center_scale = 2.0;          // |center| drawn from a complex normal of this scale, floored at 0.1
  double positive_fraction = 0.5;     // share of disks with Re(Gamma conj(gamma)) > 0
  double degenerate_fraction = 0.05;  // share of zero-radius disks
  double boundary_fraction = 0.25;    // share of instances whose coefficients all sit on the boundary
};

struct FuzzConfig {
  std::uint64_t master_seed = 42;
  std::size_t instances = 1000;
  IndexRange n_range{1, 12};
  IndexRange d_range{1, 8};
  FieldChoice field = FieldChoice::mixed;
  DiskSampler disk;
  std::vector<double> p_values{1.5, 2.0, 3.0, 6.0};
  double tolerance = kDefaultTolerance;
  unsigned threads = 1;  // 0 = hardware concurrency; never affects results

  /// Throws Error(parameter) for empty ranges, non-positive tolerance, or p <= 1.
  void validate() const;
};

/// Independent random stream for one (master seed, index, purpose) triple.
std::mt19937_64 instance_stream(std::uint64_t master_seed, std::uint64_t index, std::uint64_t purpose);
/// Seed value behind instance_stream, reported with violations.
std::uint64_t instance_seed(std::uint64_t master_seed, std::uint64_t index, std::uint64_t purpose);

Family sample_family(const FuzzConfig& cfg, std::size_t index);

struct DiskInstance {
  Family family;
  Disk disk;
  bool boundary_only = false;  // every coefficient was placed on the disk boundary
};

/// Coefficients are drawn in the disk first, then lifted onto a random x with
/// random orthogonal parts, so the disk condition holds by construction.
DiskInstance sample_disk_family(const FuzzConfig& cfg, std::size_t index);

/// Orthonormal test vectors with coefficients inside a disk with Re(Gamma conj(gamma)) > 0.
/// n is capped at the drawn dimension.
DiskInstance sample_orthonormal_family(const FuzzConfig& cfg, std::size_t index);

/// Random coefficients c_k for the weighted bounds, same distribution as coordinates.
std::vector<Complex> sample_coefficients(const FuzzConfig& cfg, std::size_t index, std::size_t n, FieldMode field);

/// Every bound applicable to the inputs. Failed preconditions and parameter
/// errors become inapplicable reports; nothing throws for well-formed families.
std::vector<BoundReport> check_all(const Family& f, const std::optional<Disk>& disk,
                                   std::optional<std::span<const Complex>> c, std::span<const double> p_values,
                                   double tol = kDefaultTolerance);

struct Violation {
  BoundId id{};
  std::string variant;
  std::uint64_t instance = 0;
  std::uint64_t instance_seed = 0;
  double slack = 0.0;
  double relative_slack = 0.0;
};

struct FuzzSummary {
  std::size_t instances = 0;
  std::map<BoundId, std::size_t> checked;
  std::map<BoundId, std::size_t> tight;
  std::map<BoundId, double> min_slack;  // minimum relative slack
  std::map<BoundId, std::size_t> tightness_wins;
  std::vector<Violation> violations;  // sorted by (instance, bound, variant)

  void merge(const FuzzSummary& other);
};

/// Upper bounds on the Bessel sum that compete in tightness comparisons, in
/// tie-break order (earlier wins ties).
inline constexpr BoundId kBesselSumBounds[] = {BoundId::boas_bellman, BoundId::bombieri, BoundId::offdiag_max,
                                               BoundId::disk_square, BoundId::disk_root};

/// Index into kBesselSumBounds of the smallest applicable rhs (disk_root squared);
/// empty when none applies.
std::optional<std::size_t> tightest_bound(std::span<const BoundReport> reports, double tol);

/// Even indices use sample_family, odd indices sample_disk_family.
FuzzSummary fuzz(const FuzzConfig& cfg);

enum class Ensemble { generic, disk, orthonormal };

struct TightnessRow {
  BoundId id{};
  std::size_t wins = 0;
  std::size_t applicable = 0;
  double mean_ratio = 0.0;  // mean lhs/rhs where applicable
};

struct TightnessTable {
  std::vector<TightnessRow> rows;
  std::size_t instances = 0;
  std::size_t with_applicable = 0;  // instances where at least one bound applied
};

TightnessTable tightness_compare(const FuzzConfig& cfg, Ensemble ensemble);

}  // namespace bessel
