#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bessel/errors.hpp"
#include "bessel/sharp.hpp"
#include "test_support.hpp"

using namespace bessel;

namespace {

const HVector e1 = HVector::basis(2, 0);
const HVector e2 = HVector::basis(2, 1);

// z_j = 2 + exp(i(pi +- alpha)), cos(alpha) = 1/4: equality in the root bound for gamma = 1, Gamma = 3.
std::vector<Complex> root_fixture() {
  const double a = std::acos(0.25);
  return {2.0 + std::polar(1.0, std::numbers::pi + a), 2.0 + std::polar(1.0, std::numbers::pi - a)};
}

// theta = pi +- pi/3: equality in the square bound for the same disk.
std::vector<Complex> square_fixture() {
  const double a = std::numbers::pi / 3;
  return {2.0 + std::polar(1.0, std::numbers::pi + a), 2.0 + std::polar(1.0, std::numbers::pi - a)};
}

Family lifted(const std::vector<Complex>& zs) { return Family(e1, lift_gram_values(e1, zs)); }

Family repeated_e1(std::size_t n) { return Family(e1, std::vector<HVector>(n, e1)); }

}  // namespace

TEST_CASE("disk geometry") {
  const Disk d({1, 2}, {-3, 0.5});
  CHECK(d.center() == Complex{-1, 1.25});
  CHECK(d.radius() == doctest::Approx(0.5 * std::hypot(4.0, 1.5)).epsilon(1e-15));
  CHECK(d.re_product() == doctest::Approx(std::norm(d.center()) - d.radius() * d.radius()).epsilon(1e-14));
  const double m = 8 * std::norm(d.center()) - 4 * d.radius() * d.radius();
  CHECK(d.m_constant() == doctest::Approx(m).epsilon(1e-14));
}

TEST_CASE("disk conditions") {
  const Disk d({1, -1}, {3, 2});
  for (auto z : {d.gamma(), d.big_gamma(), d.center()}) {
    CHECK(disk_condition_re(z, d));
    CHECK(disk_condition_abs(z, d));
  }
  const Complex far = d.center() + 2.0 * d.radius();
  CHECK_FALSE(disk_condition_re(far, d));
  CHECK_FALSE(disk_condition_abs(far, d));

  const Disk point({0.5, 0.5}, {0.5, 0.5});
  CHECK(disk_condition_re(point.gamma(), point));
  CHECK(disk_condition_abs(point.gamma(), point));
  CHECK_FALSE(disk_condition_re({0.5, 0.51}, point));
  CHECK_FALSE(disk_condition_abs({0.5, 0.51}, point));

  const Disk box({0, 0}, {1, 1});
  CHECK(sufficient_condition_box(0.0, box));
  CHECK(sufficient_condition_box(box.center(), box));
  CHECK(disk_condition_abs(box.center(), box));
  CHECK_FALSE(sufficient_condition_box({1.5, 0.5}, box));
}

TEST_CASE("property: disk condition forms agree and the box implies the disk") {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100000; ++trial) {
    const Complex g{normal(rng), normal(rng)};
    const Complex G{normal(rng), normal(rng)};
    const Disk d(g, G);
    Complex z;
    if (trial % 4 == 0) {
      z = d.center() + std::polar(d.radius(), 2 * std::numbers::pi * unit(rng));
    } else {
      z = d.center() + Complex{normal(rng), normal(rng)} * (2.0 * d.radius() + 0.1) * unit(rng);
    }
    CHECK(disk_condition_re(z, d) == disk_condition_abs(z, d));
    if (sufficient_condition_box(z, d)) CHECK(disk_condition_re(z, d));
  }
}

TEST_CASE("root bound fixtures") {
  for (std::size_t n : {1u, 3u, 7u}) {
    const auto r = disk_root_bound(repeated_e1(n), Disk(1.0, 1.0));
    CHECK(r.lhs == doctest::Approx(std::sqrt(double(n))).epsilon(1e-15));
    CHECK(r.rhs == doctest::Approx(std::sqrt(double(n))).epsilon(1e-15));
  }

  const auto f = lifted(root_fixture());
  const Disk d(1.0, 3.0);
  const auto r = disk_root_bound(f, d);
  CHECK(r.lhs == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(r.verdict(1e-9) == Verdict::tight);
  CHECK(disk_root_residuals(f, d).max_residual <= 1e-12);

  // Strictly interior coefficients leave a gap.
  const std::vector<Complex> inner_zs{2.0, Complex{1.5, 0.3}};
  const auto strict = disk_root_bound(lifted(inner_zs), d);
  CHECK(strict.slack > 1e-3);
}

TEST_CASE("root bound errors") {
  const Disk centred(Complex{1, 1}, Complex{-1, -1});
  try {
    (void)disk_root_bound(repeated_e1(2), centred);
    FAIL("expected a parameter error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parameter);
  }
  const std::vector<Complex> zs{2.0, 5.0};
  const auto r = disk_root_bound(lifted(zs), Disk(1.0, 3.0));
  CHECK_FALSE(r.preconditions_met);
  CHECK(r.note.find("1") != std::string::npos);
  CHECK_THROWS_AS(disk_root_residuals(lifted(zs), Disk(1.0, 3.0)), Error);
  try {
    (void)disk_root_residuals(Family(HVector(2), {e1}), Disk(0.0, 1.0));
    FAIL("expected a degenerate reference error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::degenerate_reference);
  }
}

TEST_CASE("root residuals react to a perturbation orthogonal to x") {
  const Disk d(1.0, 3.0);
  auto ys = lift_gram_values(e1, root_fixture());
  for (double delta : {1e-3, 0.25, 2.0}) {
    auto bumped = ys;
    bumped[1] += Complex{delta} * e2;
    const auto res = disk_root_residuals(Family(e1, bumped), d);
    CHECK(res.mean_residual == doctest::Approx(delta / 2).epsilon(1e-12));
    CHECK(res.per_j_boundary[1] <= 1e-12);
  }
}

TEST_CASE("equality conditions need M >= 0 in the root bound") {
  // gamma = -1, Gamma = 3: every z_j = -1 is on the boundary and the mean matches
  // M / (4 (Gamma + gamma)) x, yet lhs = sqrt(n) < rhs = 3 sqrt(n).
  const Disk d(-1.0, 3.0);
  CHECK(d.m_constant() < 0);
  for (std::size_t n : {1u, 2u, 5u}) {
    const Family f(HVector{1.0}, std::vector<HVector>(n, HVector{-1.0}));
    const auto res = disk_root_residuals(f, d);
    CHECK(res.max_residual <= 1e-15);
    const auto r = disk_root_bound(f, d);
    CHECK(r.lhs == doctest::Approx(std::sqrt(double(n))));
    CHECK(r.rhs == doctest::Approx(3 * std::sqrt(double(n))));
  }
}

TEST_CASE("square bound fixtures") {
  for (std::size_t n : {1u, 4u}) {
    const auto r = disk_square_bound(repeated_e1(n), Disk(1.0, 1.0));
    CHECK(r.lhs == doctest::Approx(double(n)).epsilon(1e-15));
    CHECK(r.rhs == doctest::Approx(double(n)).epsilon(1e-15));
    CHECK(disk_square_residuals(repeated_e1(n), Disk(1.0, 1.0)).max_residual == 0.0);
  }
  const Disk d(1.0, 3.0);
  const auto f = lifted(square_fixture());
  const auto r = disk_square_bound(f, d);
  CHECK(r.lhs == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(disk_square_residuals(f, d).max_residual <= 1e-12);

  try {
    (void)disk_square_bound(repeated_e1(2), Disk(-1.0, 3.0));
    FAIL("expected a parameter error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parameter);
  }
}

TEST_CASE("square residuals under scaling") {
  // Doubling an equality family doubles the mean of the ys, 3 x here; the residual is
  // its distance from the characterized target of the disk in use.
  const auto ys = lift_gram_values(e1, square_fixture());
  std::vector<HVector> doubled;
  for (const auto& y : ys) doubled.push_back(Complex{2.0} * y);
  const Family f(e1, doubled);
  const Disk wide(0.5, 5.0);
  const double target = 2 * wide.re_product() / 5.5;
  const auto res = disk_square_residuals(f, wide);
  CHECK(res.mean_residual == doctest::Approx(3.0 - target).epsilon(1e-13));
  CHECK(disk_square_residuals(Family(e1, ys), Disk(1.0, 3.0)).mean_residual <= 1e-12);
}

TEST_CASE("summed disk lemma") {
  for (std::size_t n : {1u, 3u}) {
    const auto v = summed_disk_lemma(repeated_e1(n), Disk(1.0, 1.0));
    CHECK(v.lhs == doctest::Approx(2.0 * n));
    CHECK(v.rhs == doctest::Approx(2.0 * n));
  }
  const Disk d({0.5, 1}, {2, -1});
  std::vector<Complex> boundary;
  for (int k = 0; k < 5; ++k) boundary.push_back(d.center() + std::polar(d.radius(), 1.1 * k));
  const auto eq = summed_disk_lemma(lifted(boundary), d);
  CHECK(eq.lhs == doctest::Approx(eq.rhs).epsilon(1e-13));

  boundary[2] = d.center() + 0.5 * (boundary[2] - d.center());
  const auto strict = summed_disk_lemma(lifted(boundary), d);
  CHECK(strict.lhs < strict.rhs - 1e-3);

  const std::vector<Complex> outside{10.0};
  CHECK_THROWS_AS(summed_disk_lemma(lifted(outside), d), Error);
}

TEST_CASE("orthonormal remark") {
  const HVector x{Complex{0.3, 0.1}, Complex{0.2, -0.1}};
  const std::vector<HVector> es{e1, e2};
  const Disk d({0.1, -0.2}, {0.5, 0.2});
  const auto r = orthonormal_remark(x, es, d);
  CHECK(r.root.rhs >= norm(x));
  CHECK(r.square.lhs == doctest::Approx(norm_sq(x)).epsilon(1e-15));
  CHECK(r.square.rhs >= norm_sq(x));
  CHECK(r.coarser_than_bessel);

  const Disk point(Complex{0.5, 0.5}, Complex{0.5, 0.5});
  const HVector xp{Complex{0.5, 0.5}, Complex{0.5, 0.5}};
  const auto p = orthonormal_remark(xp, es, point);
  CHECK(p.root.rhs == norm(xp));

  const std::vector<HVector> not_orth{e1, e1};
  try {
    (void)orthonormal_remark(x, not_orth, d);
    FAIL("expected a precondition error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }

  const auto negative = orthonormal_remark(HVector{-1.0, -1.0}, es, Disk(-1.0, 3.0));
  CHECK_FALSE(negative.square.preconditions_met);
  CHECK(negative.coarser_than_bessel);
}

TEST_CASE("scalar corollaries delegate to the sharp bounds") {
  std::vector<Complex> ones(4, 1.0);
  const auto l2 = triangle_reverse_l2(ones, Disk(1.0, 1.0));
  CHECK(l2.id == BoundId::triangle_reverse_l2);
  CHECK(l2.lhs == doctest::Approx(2.0));
  CHECK(l2.rhs == doctest::Approx(2.0));
  const auto sq = triangle_reverse_sq(ones, Disk(1.0, 1.0));
  CHECK(sq.lhs == doctest::Approx(4.0));
  CHECK(sq.rhs == doctest::Approx(4.0));

  const auto a = triangle_reverse_l2(root_fixture(), Disk(1.0, 3.0));
  CHECK(a.lhs == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(a.rhs == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-14));
  const auto b = triangle_reverse_sq(square_fixture(), Disk(1.0, 3.0));
  CHECK(b.lhs == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(b.rhs == doctest::Approx(6.0).epsilon(1e-14));

  // Direct scalar formulas against the delegated values.
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const Complex g{unit(rng) + 0.5, unit(rng) - 0.5};
    const Complex G{unit(rng) + 1.0, unit(rng) - 0.5};
    const Disk dk(g, G);
    std::vector<Complex> zs;
    const int n = 1 + trial % 6;
    for (int j = 0; j < n; ++j) zs.push_back(dk.center() + std::polar(dk.radius() * std::sqrt(unit(rng)), 6.3 * unit(rng)));
    double sq_sum = 0.0;
    Complex total{};
    for (auto z : zs) {
      sq_sum += std::norm(z);
      total += z;
    }
    const double rn = std::sqrt(double(n));
    const double l2_rhs = std::abs(total) / rn + rn / 4 * std::norm(G - g) / std::abs(G + g);
    const auto r2 = triangle_reverse_l2(zs, dk);
    CHECK(oracle::close(r2.lhs, std::sqrt(sq_sum)));
    CHECK(oracle::close(r2.rhs, l2_rhs));
    CHECK(r2.lhs <= r2.rhs + 1e-9);
    const auto rsq = triangle_reverse_sq(zs, dk);
    if (dk.re_product() > 0) {
      const double sq_rhs = std::norm(G + g) / (4 * dk.re_product()) * std::norm(total) / n;
      CHECK(oracle::close(rsq.lhs, sq_sum));
      CHECK(oracle::close(rsq.rhs, sq_rhs));
    }
  }
}

TEST_CASE("property: sharp bounds hold under the disk condition") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 3000; ++trial) {
    const Complex c{normal(rng), normal(rng)};
    if (std::abs(c) < 0.05) continue;
    const double r = std::abs(c) * 3 * unit(rng);
    const Complex u = std::polar(r, 6.3 * unit(rng));
    const Disk d(c - u, c + u);
    const std::size_t n = 1 + trial % 9;
    const std::size_t dim = 1 + trial % 4;
    auto x = oracle::random_vector(rng, dim);
    std::vector<Complex> zs;
    for (std::size_t j = 0; j < n; ++j) {
      const double rho = trial % 2 ? r : r * std::sqrt(unit(rng));
      zs.push_back(c + std::polar(rho, 6.3 * unit(rng)));
    }
    std::vector<HVector> ws;
    for (std::size_t j = 0; j < n; ++j) ws.push_back(oracle::random_vector(rng, dim));
    const Family f(x, lift_gram_values(x, zs, std::span<const HVector>(ws)));
    const auto root = disk_root_bound(f, d);
    REQUIRE(root.preconditions_met);
    CHECK(approx_le(root.lhs, root.rhs, 1e-9));
    const auto lemma = summed_disk_lemma(f, d);
    CHECK(approx_le(lemma.lhs, lemma.rhs, 1e-9));
    if (d.re_product() > 0) {
      const auto sq = disk_square_bound(f, d);
      CHECK(approx_le(sq.lhs, sq.rhs, 1e-9));
    }
  }
}
