#include "bessel/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>
#include <tuple>

#include "bessel/classical.hpp"
#include "bessel/errors.hpp"

namespace bessel {

namespace {

enum Purpose : std::uint64_t { kFamily = 1, kDisk = 2, kOrthonormal = 3, kCoefficients = 4 };

constexpr std::size_t kChunk = 256;
constexpr double kInteriorCap = 0.99;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::size_t draw_index(std::mt19937_64& rng, IndexRange r) {
  return std::uniform_int_distribution<std::size_t>(r.lo, r.hi)(rng);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return uniform(rng, 0.0, 1.0) < p; }

FieldMode draw_field(std::mt19937_64& rng, FieldChoice choice) {
  switch (choice) {
    case FieldChoice::real: return FieldMode::real;
    case FieldChoice::complex: return FieldMode::complex;
    case FieldChoice::mixed: break;
  }
  return coin(rng, 0.5) ? FieldMode::real : FieldMode::complex;
}

Complex draw_scalar(std::mt19937_64& rng, FieldMode field, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  const double re = normal(rng);
  const double im = field == FieldMode::complex ? normal(rng) : 0.0;
  return {re, im};
}

HVector draw_vector(std::mt19937_64& rng, std::size_t dim, FieldMode field) {
  HVector v(dim);
  for (std::size_t k = 0; k < dim; ++k) v[k] = draw_scalar(rng, field);
  return v;
}

HVector draw_nonzero_vector(std::mt19937_64& rng, std::size_t dim, FieldMode field) {
  for (;;) {
    auto v = draw_vector(rng, dim, field);
    if (norm(v) > 1e-6) return v;
  }
}

// Unit direction in the ground field: exp(i psi), or +-1 in real mode.
Complex draw_direction(std::mt19937_64& rng, FieldMode field) {
  if (field == FieldMode::real) return coin(rng, 0.5) ? 1.0 : -1.0;
  return std::polar(1.0, uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

Disk draw_disk(std::mt19937_64& rng, const DiskSampler& sampler, FieldMode field, bool force_positive) {
  Complex c;
  do {
    c = draw_scalar(rng, field, sampler.center_scale);
  } while (std::abs(c) < 0.1);
  const bool positive = force_positive || coin(rng, sampler.positive_fraction);
  const bool degenerate = coin(rng, sampler.degenerate_fraction);
  double r = 0.0;
  if (!degenerate) r = std::abs(c) * uniform(rng, 0.1, positive ? 0.95 : 3.0);
  const Complex u = draw_direction(rng, field);
  return Disk(c - r * u, c + r * u);
}

// Coefficients in the disk; the flag reports whether all of them landed on the boundary.
std::pair<std::vector<Complex>, bool> draw_disk_coefficients(std::mt19937_64& rng, const DiskSampler& sampler,
                                                             const Disk& d, std::size_t n, FieldMode field) {
  const Complex c = d.center();
  const double r = d.radius();
  const bool all_boundary = r == 0.0 || coin(rng, sampler.boundary_fraction);
  std::vector<Complex> zs;
  zs.reserve(n);
  bool boundary_only = true;
  for (std::size_t j = 0; j < n; ++j) {
    const bool on_boundary = all_boundary || coin(rng, 0.5);
    boundary_only = boundary_only && on_boundary;
    if (field == FieldMode::real) {
      // Real disks meet the real line in the segment [c - r, c + r].
      const double v = on_boundary ? (coin(rng, 0.5) ? 1.0 : -1.0) : uniform(rng, -kInteriorCap, kInteriorCap);
      zs.emplace_back(c.real() + r * v, 0.0);
    } else {
      const double rho = on_boundary ? r : r * std::sqrt(uniform(rng, 0.0, kInteriorCap));
      zs.push_back(c + std::polar(rho, uniform(rng, 0.0, 2.0 * std::numbers::pi)));
    }
  }
  return {std::move(zs), boundary_only};
}

std::vector<HVector> orthonormal_vectors(std::mt19937_64& rng, std::size_t n, std::size_t dim, FieldMode field) {
  std::vector<HVector> es;
  es.reserve(n);
  while (es.size() < n) {
    auto v = draw_vector(rng, dim, field);
    // Two Gram-Schmidt passes keep the result orthonormal to rounding.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : es) v -= inner(v, e) * e;
    }
    const double len = norm(v);
    if (len < 1e-3) continue;
    v *= 1.0 / len;
    es.push_back(std::move(v));
  }
  return es;
}

std::string p_label(double p) {
  std::ostringstream os;
  os << "p=" << p;
  return os.str();
}

template <class Fn>
BoundReport guarded(BoundId id, const std::string& variant, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return BoundReport::inapplicable(id, e.what(), variant);
  }
}

void add_pecaric(std::vector<BoundReport>& out, const FamilyStats& s, std::span<const Complex> c,
                 const std::string& variant) {
  const auto v = pecaric(s, c);
  out.push_back(BoundReport::evaluated(BoundId::pecaric, v.lhs, v.rhs_first, variant));
  out.push_back(BoundReport::evaluated(BoundId::pecaric_chain, v.rhs_first, v.rhs_second, variant));
}

void add_branches(std::vector<BoundReport>& out, const FamilyStats& s, std::span<const Complex> c,
                  const std::string& variant, std::span<const double> p_values) {
  const auto b = coefficient_branches(s, c, 2.0);
  out.push_back(BoundReport::evaluated(BoundId::coeff_max, b.lhs, b.max_branch, variant));
  out.push_back(BoundReport::evaluated(BoundId::coeff_l1, b.lhs, b.l1_branch, variant));
  for (double p : p_values) {
    const std::string label = variant + "," + p_label(p);
    const auto bp = coefficient_branches(s, c, p);
    if (bp.holder_branch) {
      out.push_back(BoundReport::evaluated(BoundId::coeff_holder, bp.lhs, *bp.holder_branch, label));
    } else {
      out.push_back(BoundReport::inapplicable(BoundId::coeff_holder, "needs p > 1", label));
    }
  }
}

template <class Fn>
void for_each_chunk(std::size_t chunks, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));
  if (threads <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t c; (c = next.fetch_add(1)) < chunks;) {
        try {
          fn(c);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<BoundReport> bessel_sum_candidates(const Family& f, const std::optional<Disk>& disk) {
  const FamilyStats s(f);
  std::vector<BoundReport> out{boas_bellman(s), bombieri(s), offdiag_max(s)};
  if (disk) {
    out.push_back(guarded(BoundId::disk_square, {}, [&] { return disk_square_bound(f, s, *disk); }));
    out.push_back(guarded(BoundId::disk_root, {}, [&] { return disk_root_bound(f, s, *disk); }));
  }
  return out;
}

// lhs/rhs on the Bessel-sum scale: the root bound is compared squared.
std::pair<double, double> bessel_scale(const BoundReport& r) {
  if (r.id == BoundId::disk_root) return {r.lhs * r.lhs, r.rhs * r.rhs};
  return {r.lhs, r.rhs};
}

}  // namespace

void FuzzConfig::validate() const {
  if (n_range.lo < 1 || n_range.lo > n_range.hi) throw Error(ErrorKind::parameter, "n range must satisfy 1 <= lo <= hi");
  if (d_range.lo < 1 || d_range.lo > d_range.hi) throw Error(ErrorKind::parameter, "d range must satisfy 1 <= lo <= hi");
  if (!(tolerance > 0.0)) throw Error(ErrorKind::parameter, "tolerance must be positive");
  for (double p : p_values) {
    if (!(p > 1.0)) throw Error(ErrorKind::parameter, "every p value must exceed 1");
  }
}

std::uint64_t instance_seed(std::uint64_t master_seed, std::uint64_t index, std::uint64_t purpose) {
  return splitmix64(splitmix64(splitmix64(master_seed) ^ index) ^ (purpose * 0xD1B54A32D192ED03ULL));
}

std::mt19937_64 instance_stream(std::uint64_t master_seed, std::uint64_t index, std::uint64_t purpose) {
  return std::mt19937_64(instance_seed(master_seed, index, purpose));
}

Family sample_family(const FuzzConfig& cfg, std::size_t index) {
  auto rng = instance_stream(cfg.master_seed, index, kFamily);
  const auto n = draw_index(rng, cfg.n_range);
  const auto d = draw_index(rng, cfg.d_range);
  const auto field = draw_field(rng, cfg.field);
  auto x = draw_vector(rng, d, field);
  std::vector<HVector> ys;
  ys.reserve(n);
  for (std::size_t j = 0; j < n; ++j) ys.push_back(draw_vector(rng, d, field));
  return Family(std::move(x), std::move(ys), field);
}

DiskInstance sample_disk_family(const FuzzConfig& cfg, std::size_t index) {
  auto rng = instance_stream(cfg.master_seed, index, kDisk);
  const auto n = draw_index(rng, cfg.n_range);
  const auto d = draw_index(rng, cfg.d_range);
  const auto field = draw_field(rng, cfg.field);
  const Disk disk = draw_disk(rng, cfg.disk, field, false);
  auto [zs, boundary_only] = draw_disk_coefficients(rng, cfg.disk, disk, n, field);
  const auto x = draw_nonzero_vector(rng, d, field);
  std::vector<HVector> ws;
  ws.reserve(n);
  for (std::size_t j = 0; j < n; ++j) ws.push_back(draw_vector(rng, d, field));
  auto ys = lift_gram_values(x, zs, std::span<const HVector>(ws));
  return {Family(x, std::move(ys), field), disk, boundary_only};
}

DiskInstance sample_orthonormal_family(const FuzzConfig& cfg, std::size_t index) {
  auto rng = instance_stream(cfg.master_seed, index, kOrthonormal);
  const auto d = draw_index(rng, cfg.d_range);
  const auto n = draw_index(rng, {std::min(cfg.n_range.lo, d), std::min(cfg.n_range.hi, d)});
  const auto field = draw_field(rng, cfg.field);
  const Disk disk = draw_disk(rng, cfg.disk, field, true);
  auto [zs, boundary_only] = draw_disk_coefficients(rng, cfg.disk, disk, n, field);
  auto es = orthonormal_vectors(rng, n, d, field);
  // x = sum z_j e_j plus a part orthogonal to every e_j, so <x, e_j> = z_j.
  HVector x = draw_vector(rng, d, field);
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& e : es) x -= inner(x, e) * e;
  }
  for (std::size_t j = 0; j < n; ++j) x += zs[j] * es[j];
  return {Family(std::move(x), std::move(es), field), disk, boundary_only};
}

std::vector<Complex> sample_coefficients(const FuzzConfig& cfg, std::size_t index, std::size_t n, FieldMode field) {
  auto rng = instance_stream(cfg.master_seed, index, kCoefficients);
  std::vector<Complex> c(n);
  for (auto& ck : c) ck = draw_scalar(rng, field);
  return c;
}

std::vector<BoundReport> check_all(const Family& f, const std::optional<Disk>& disk,
                                   std::optional<std::span<const Complex>> c, std::span<const double> p_values,
                                   double tol) {
  const FamilyStats s(f);
  std::vector<BoundReport> out;
  out.push_back(bessel_inequality(f, s, tol));
  out.push_back(boas_bellman(s));
  out.push_back(bombieri(s));
  out.push_back(selberg(s));
  out.push_back(offdiag_max(s));
  out.push_back(heilbronn(s));
  for (double p : p_values) {
    out.push_back(guarded(BoundId::holder_bombieri, p_label(p), [&] { return holder_bombieri(s, p); }));
  }

  std::vector<std::pair<std::string, std::vector<Complex>>> choices;
  if (c) {
    if (c->size() == s.n()) {
      choices.emplace_back("c=given", std::vector<Complex>(c->begin(), c->end()));
    } else {
      out.push_back(BoundReport::inapplicable(BoundId::pecaric, "coefficient count differs from n", "c=given"));
    }
  }
  choices.emplace_back("c=conj", bombieri_coefficients(s));
  choices.emplace_back("c=selberg", selberg_coefficients(s));
  choices.emplace_back("c=unit", heilbronn_coefficients(s));
  for (const auto& [label, coeffs] : choices) add_pecaric(out, s, coeffs, label);
  for (const auto& [label, coeffs] : choices) {
    if (label == "c=given" || label == "c=conj") add_branches(out, s, coeffs, label, p_values);
  }

  const double quotient_p = p_values.empty() ? 2.0 : p_values.front();
  for (std::size_t k = 0; k < std::max<std::size_t>(1, p_values.size()); ++k) {
    const double p = p_values.empty() ? quotient_p : p_values[k];
    auto q = coefficient_quotients(s, p);
    if (k == 0) {
      out.push_back(std::move(q[0]));
      out.push_back(std::move(q[2]));
    }
    out.push_back(std::move(q[1]));
  }

  if (disk) {
    out.push_back(guarded(BoundId::disk_root, {}, [&] { return disk_root_bound(f, s, *disk); }));
    out.push_back(guarded(BoundId::disk_square, {}, [&] { return disk_square_bound(f, s, *disk); }));
    out.push_back(guarded(BoundId::summed_disk_lemma, {}, [&] {
      const auto v = summed_disk_lemma(f, *disk);
      return BoundReport::evaluated(BoundId::summed_disk_lemma, v.lhs, v.rhs);
    }));
    out.push_back(guarded(BoundId::triangle_reverse_l2, {}, [&] { return triangle_reverse_l2(s.coeffs(), *disk); }));
    out.push_back(guarded(BoundId::triangle_reverse_sq, {}, [&] { return triangle_reverse_sq(s.coeffs(), *disk); }));
    if (is_orthonormal(f.ys(), tol)) {
      try {
        auto remark = orthonormal_remark(f.x(), f.ys(), *disk, tol);
        out.push_back(std::move(remark.root));
        out.push_back(std::move(remark.square));
      } catch (const Error& e) {
        out.push_back(BoundReport::inapplicable(BoundId::orthonormal_root, e.what()));
        out.push_back(BoundReport::inapplicable(BoundId::orthonormal_square, e.what()));
      }
    }
  }
  return out;
}

void FuzzSummary::merge(const FuzzSummary& other) {
  instances += other.instances;
  for (const auto& [id, k] : other.checked) checked[id] += k;
  for (const auto& [id, k] : other.tight) tight[id] += k;
  for (const auto& [id, k] : other.tightness_wins) tightness_wins[id] += k;
  for (const auto& [id, v] : other.min_slack) {
    auto [it, inserted] = min_slack.emplace(id, v);
    if (!inserted) it->second = std::min(it->second, v);
  }
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::optional<std::size_t> tightest_bound(std::span<const BoundReport> reports, double tol) {
  std::optional<std::size_t> best;
  double best_rhs = 0.0;
  for (std::size_t k = 0; k < std::size(kBesselSumBounds); ++k) {
    auto it = std::find_if(reports.begin(), reports.end(), [&](const BoundReport& r) {
      return r.id == kBesselSumBounds[k] && r.preconditions_met;
    });
    if (it == reports.end()) continue;
    const double rhs = bessel_scale(*it).second;
    if (!best || rhs < best_rhs - tol * std::max(1.0, std::abs(best_rhs))) {
      best = k;
      best_rhs = rhs;
    }
  }
  return best;
}

FuzzSummary fuzz(const FuzzConfig& cfg) {
  cfg.validate();
  const std::size_t chunks = (cfg.instances + kChunk - 1) / kChunk;
  std::vector<FuzzSummary> partial(chunks);

  for_each_chunk(chunks, cfg.threads, [&](std::size_t chunk) {
    FuzzSummary& out = partial[chunk];
    const std::size_t end = std::min(cfg.instances, (chunk + 1) * kChunk);
    for (std::size_t index = chunk * kChunk; index < end; ++index) {
      std::vector<BoundReport> reports;
      std::uint64_t seed = 0;
      if (index % 2 == 0) {
        const auto f = sample_family(cfg, index);
        const auto c = sample_coefficients(cfg, index, f.n(), f.field());
        reports = check_all(f, std::nullopt, std::span<const Complex>(c), cfg.p_values, cfg.tolerance);
        seed = instance_seed(cfg.master_seed, index, kFamily);
      } else {
        const auto inst = sample_disk_family(cfg, index);
        const auto c = sample_coefficients(cfg, index, inst.family.n(), inst.family.field());
        reports = check_all(inst.family, inst.disk, std::span<const Complex>(c), cfg.p_values, cfg.tolerance);
        seed = instance_seed(cfg.master_seed, index, kDisk);
      }
      ++out.instances;
      for (const auto& r : reports) {
        const Verdict v = r.verdict(cfg.tolerance);
        if (v == Verdict::inapplicable) continue;
        ++out.checked[r.id];
        const double rel = r.relative_slack();
        auto [it, inserted] = out.min_slack.emplace(r.id, rel);
        if (!inserted) it->second = std::min(it->second, rel);
        if (v == Verdict::tight) ++out.tight[r.id];
        if (v == Verdict::violated) out.violations.push_back({r.id, r.variant, index, seed, r.slack, rel});
      }
      if (auto win = tightest_bound(reports, cfg.tolerance)) ++out.tightness_wins[kBesselSumBounds[*win]];
    }
  });

  FuzzSummary total;
  for (const auto& p : partial) total.merge(p);
  std::sort(total.violations.begin(), total.violations.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.instance, a.id, a.variant) < std::tie(b.instance, b.id, b.variant);
  });
  return total;
}

TightnessTable tightness_compare(const FuzzConfig& cfg, Ensemble ensemble) {
  cfg.validate();
  constexpr std::size_t kCandidates = std::size(kBesselSumBounds);
  struct Partial {
    std::array<std::size_t, kCandidates> wins{};
    std::array<std::size_t, kCandidates> applicable{};
    std::array<double, kCandidates> ratio_sum{};
    std::size_t with_applicable = 0;
  };
  const std::size_t chunks = (cfg.instances + kChunk - 1) / kChunk;
  std::vector<Partial> partial(chunks);

  for_each_chunk(chunks, cfg.threads, [&](std::size_t chunk) {
    Partial& out = partial[chunk];
    const std::size_t end = std::min(cfg.instances, (chunk + 1) * kChunk);
    for (std::size_t index = chunk * kChunk; index < end; ++index) {
      std::vector<BoundReport> reports;
      switch (ensemble) {
        case Ensemble::generic:
          reports = bessel_sum_candidates(sample_family(cfg, index), std::nullopt);
          break;
        case Ensemble::disk: {
          const auto inst = sample_disk_family(cfg, index);
          reports = bessel_sum_candidates(inst.family, inst.disk);
          break;
        }
        case Ensemble::orthonormal: {
          const auto inst = sample_orthonormal_family(cfg, index);
          reports = bessel_sum_candidates(inst.family, inst.disk);
          break;
        }
      }
      for (const auto& r : reports) {
        if (!r.preconditions_met) continue;
        const auto k = static_cast<std::size_t>(
            std::find(std::begin(kBesselSumBounds), std::end(kBesselSumBounds), r.id) - std::begin(kBesselSumBounds));
        const auto [lhs, rhs] = bessel_scale(r);
        ++out.applicable[k];
        out.ratio_sum[k] += rhs > 0.0 ? lhs / rhs : 0.0;
      }
      if (auto win = tightest_bound(reports, cfg.tolerance)) {
        ++out.wins[*win];
        ++out.with_applicable;
      }
    }
  });

  Partial total;
  for (const auto& p : partial) {
    for (std::size_t k = 0; k < kCandidates; ++k) {
      total.wins[k] += p.wins[k];
      total.applicable[k] += p.applicable[k];
      total.ratio_sum[k] += p.ratio_sum[k];
    }
    total.with_applicable += p.with_applicable;
  }

  TightnessTable table;
  table.instances = cfg.instances;
  table.with_applicable = total.with_applicable;
  const bool has_disk = ensemble != Ensemble::generic;
  for (std::size_t k = 0; k < kCandidates; ++k) {
    const BoundId id = kBesselSumBounds[k];
    if (!has_disk && (id == BoundId::disk_root || id == BoundId::disk_square)) continue;
    TightnessRow row{id, total.wins[k], total.applicable[k], 0.0};
    if (row.applicable > 0) row.mean_ratio = total.ratio_sum[k] / static_cast<double>(row.applicable);
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace bessel
