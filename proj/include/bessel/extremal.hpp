#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bessel/numeric.hpp"
#include "bessel/sharp.hpp"

namespace bessel {

/// Which sharp bound the construction should make an equality.
enum class ExtremalTarget { root_bound, square_bound };

/// Equality plan. Every Fourier coefficient sits on the disk boundary,
/// z_j = center + radius * exp(i theta_j), and the phases must sum to phase_sum:
///   root bound:   phase_sum = -n r c / (2 |c|^2), feasible iff r <= sqrt(2) |c|
///   square bound: phase_sum = -n r c / |c|^2,     feasible iff r < |c|
/// A single vector (n = 1) additionally needs |phase_sum| = 1, or r = 0.
struct ExtremalSpec {
  ExtremalTarget target;
  std::size_t n;
  Disk disk;
  Complex phase_sum;
  bool feasible = false;
  std::string reason;  // why the plan is infeasible; empty otherwise
};

/// Throws Error(parameter) for n = 0, Gamma = -gamma (root bound), or
/// Re(Gamma conj(gamma)) <= 0 (square bound).
ExtremalSpec plan_extremal(ExtremalTarget target, std::size_t n, const Disk& d);

/// Phases theta_1..theta_n with sum exp(i theta_j) = spec.phase_sum.
/// Throws Error(construction) for an infeasible spec.
std::vector<double> solve_phases(const ExtremalSpec& spec);

/// Boundary coefficients z_j = center + radius * exp(i theta_j).
std::vector<Complex> extremal_coefficients(const ExtremalSpec& spec);

/// Family achieving equality in the target bound. Optional ws add components
/// orthogonal to x; their projections must sum to zero.
Family build_extremal(ExtremalTarget target, const HVector& x, std::size_t n, const Disk& d,
                      std::optional<std::span<const HVector>> ws = std::nullopt);

}  // namespace bessel
