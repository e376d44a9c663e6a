#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bessel/errors.hpp"
#include "bessel/extremal.hpp"
#include "test_support.hpp"

using namespace bessel;

namespace {

Complex phase_total(const std::vector<double>& thetas) {
  Complex s{};
  for (double t : thetas) s += std::polar(1.0, t);
  return s;
}

double sum_sq(std::span<const Complex> zs) {
  double acc = 0.0;
  for (auto z : zs) acc += std::norm(z);
  return acc;
}

}  // namespace

TEST_CASE("plan examples") {
  const Disk d(1.0, 3.0);
  const auto root = plan_extremal(ExtremalTarget::root_bound, 2, d);
  CHECK(root.feasible);
  CHECK(root.phase_sum.real() == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(root.phase_sum.imag() == 0.0);

  const auto sq = plan_extremal(ExtremalTarget::square_bound, 2, d);
  CHECK(sq.feasible);
  CHECK(sq.phase_sum.real() == doctest::Approx(-1.0).epsilon(1e-15));

  const auto single = plan_extremal(ExtremalTarget::root_bound, 1, d);
  CHECK_FALSE(single.feasible);
  CHECK_FALSE(single.reason.empty());

  const auto point = plan_extremal(ExtremalTarget::root_bound, 1, Disk(2.0, 2.0));
  CHECK(point.feasible);
  CHECK(point.phase_sum == Complex{});
}

TEST_CASE("root plan needs M >= 0") {
  // radius = sqrt(2) |center| is the edge: M = 0.
  const Complex c{1, 1};
  const double edge = std::sqrt(2.0) * std::abs(c);
  const Complex u = std::polar(edge, 0.4);
  CHECK(plan_extremal(ExtremalTarget::root_bound, 3, Disk(c - u, c + u)).feasible);
  const Complex wider = std::polar(1.01 * edge, 0.4);
  CHECK_FALSE(plan_extremal(ExtremalTarget::root_bound, 3, Disk(c - wider, c + wider)).feasible);
  const Complex twice = std::polar(2 * std::abs(c), 0.4);
  CHECK_FALSE(plan_extremal(ExtremalTarget::root_bound, 4, Disk(c - twice, c + twice)).feasible);
}

TEST_CASE("plan errors") {
  CHECK_THROWS_AS(plan_extremal(ExtremalTarget::root_bound, 0, Disk(1.0, 3.0)), Error);
  try {
    (void)plan_extremal(ExtremalTarget::root_bound, 2, Disk(Complex{1, 0}, Complex{-1, 0}));
    FAIL("expected a parameter error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parameter);
  }
  CHECK_THROWS_AS(plan_extremal(ExtremalTarget::square_bound, 2, Disk(-1.0, 3.0)), Error);
}

TEST_CASE("solve_phases examples") {
  const auto root = plan_extremal(ExtremalTarget::root_bound, 2, Disk(1.0, 3.0));
  const auto thetas = solve_phases(root);
  REQUIRE(thetas.size() == 2);
  const double a = std::acos(0.25);
  CHECK(std::cos(thetas[0] - std::numbers::pi) == doctest::Approx(std::cos(a)).epsilon(1e-14));
  CHECK(thetas[0] + thetas[1] == doctest::Approx(2 * std::numbers::pi).epsilon(1e-14));

  ExtremalSpec zero{ExtremalTarget::root_bound, 2, Disk(2.0, 2.0), Complex{}, true, {}};
  const auto antipodal = solve_phases(zero);
  CHECK(std::abs(antipodal[0]) == doctest::Approx(std::numbers::pi / 2));
  CHECK(std::abs(phase_total(antipodal)) <= 1e-15);

  ExtremalSpec full{ExtremalTarget::root_bound, 3, Disk(2.0, 2.0), Complex{3.0}, true, {}};
  for (double t : solve_phases(full)) CHECK(t == 0.0);

  ExtremalSpec bad{ExtremalTarget::root_bound, 2, Disk(1.0, 3.0), Complex{0.5}, false, "no"};
  try {
    (void)solve_phases(bad);
    FAIL("expected a construction error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::construction);
  }
}

TEST_CASE("property: solve_phases meets the phase sum") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 5000; ++trial) {
    const std::size_t n = 2 + trial % 11;
    const Complex s = std::polar(n * unit(rng), 6.3 * unit(rng) - 3.15);
    const ExtremalSpec spec{ExtremalTarget::root_bound, n, Disk(1.0, 3.0), s, true, {}};
    const auto thetas = solve_phases(spec);
    CHECK(thetas.size() == n);
    CHECK(std::abs(phase_total(thetas) - s) <= 1e-12 * n);
  }
}

TEST_CASE("build fixtures") {
  const HVector e1 = HVector::basis(2, 0);
  const Disk d(1.0, 3.0);
  const auto f = build_extremal(ExtremalTarget::root_bound, e1, 2, d);
  const auto r = disk_root_bound(f, d);
  CHECK(r.lhs == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-14));

  const auto g = build_extremal(ExtremalTarget::square_bound, e1, 2, d);
  const auto s = disk_square_bound(g, d);
  CHECK(s.lhs == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(s.rhs == doctest::Approx(6.0).epsilon(1e-14));

  for (std::size_t n : {1u, 2u, 5u}) {
    const auto p = build_extremal(ExtremalTarget::root_bound, e1, n, Disk(1.0, 1.0));
    for (const auto& y : p.ys()) CHECK(y == e1);
  }
}

TEST_CASE("build errors") {
  const HVector e1 = HVector::basis(2, 0);
  try {
    (void)build_extremal(ExtremalTarget::root_bound, HVector(2), 2, Disk(1.0, 3.0));
    FAIL("expected a degenerate reference error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::degenerate_reference);
  }
  try {
    (void)build_extremal(ExtremalTarget::root_bound, e1, 1, Disk(1.0, 3.0));
    FAIL("expected a construction error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::construction);
  }
  const std::vector<HVector> unbalanced{HVector::basis(2, 1), HVector(2)};
  CHECK_THROWS_AS(build_extremal(ExtremalTarget::root_bound, e1, 2, Disk(1.0, 3.0), unbalanced), Error);
  // Components along x are projected away before the zero-sum check.
  const std::vector<HVector> along_x{e1, Complex{3.0} * e1};
  CHECK_NOTHROW(build_extremal(ExtremalTarget::root_bound, e1, 2, Disk(1.0, 3.0), along_x));
}

TEST_CASE("property: random extremal families are equality cases") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int built = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto target = trial % 2 ? ExtremalTarget::square_bound : ExtremalTarget::root_bound;
    const Complex c{normal(rng), normal(rng)};
    if (std::abs(c) < 0.1) continue;
    const double cap = target == ExtremalTarget::root_bound ? std::sqrt(2.0) : 0.999;
    const Complex u = std::polar(cap * std::abs(c) * unit(rng), 6.3 * unit(rng));
    const Disk d(c - u, c + u);
    const std::size_t n = 2 + trial % 9;
    const std::size_t dim = 1 + trial % 5;
    const auto x = oracle::random_vector(rng, dim);

    std::vector<HVector> ws;
    HVector total(dim);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      ws.push_back(oracle::random_vector(rng, dim));
      total += ws.back();
    }
    ws.push_back(Complex{-1.0} * total);

    const auto spec = plan_extremal(target, n, d);
    REQUIRE(spec.feasible);
    const auto zs = extremal_coefficients(spec);
    const double nn = static_cast<double>(n);
    if (target == ExtremalTarget::root_bound) {
      CHECK(oracle::close(sum_sq(zs), nn * std::norm(c), 1e-11));
    } else {
      CHECK(oracle::close(sum_sq(zs), nn * d.re_product(), 1e-11));
    }

    const auto bare = build_extremal(target, x, n, d);
    const auto f = build_extremal(target, x, n, d, std::span<const HVector>(ws));
    for (const auto& y : f.ys()) {
      const Complex z = oracle::dot(x, y);
      CHECK(std::abs(std::abs(z - c) - d.radius()) <= 1e-9 * std::max(1.0, d.radius()));
    }
    const bool root = target == ExtremalTarget::root_bound;
    const auto a = root ? disk_root_bound(bare, d) : disk_square_bound(bare, d);
    const auto b = root ? disk_root_bound(f, d) : disk_square_bound(f, d);
    const auto ra = root ? disk_root_residuals(bare, d) : disk_square_residuals(bare, d);
    const auto rb = root ? disk_root_residuals(f, d) : disk_square_residuals(f, d);
    CHECK(std::abs(b.lhs - b.rhs) <= 1e-9 * std::max(1.0, b.rhs));
    CHECK(rb.max_residual <= 1e-9);
    CHECK(oracle::close(a.lhs, b.lhs, 1e-9));
    CHECK(oracle::close(a.rhs, b.rhs, 1e-9));
    CHECK(std::abs(ra.max_residual - rb.max_residual) <= 1e-9);
    ++built;
  }
  CHECK(built > 1500);
}
