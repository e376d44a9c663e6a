#include "bessel/cli.hpp"

#include <cmath>
#include <fstream>
#include <random>

#include <json.hpp>

#include "bessel/errors.hpp"
#include "bessel/extremal.hpp"
#include "bessel/io.hpp"
#include "bessel/sharp.hpp"

namespace bessel::cli {

using nlohmann::json;

namespace {

bool write_text(const std::optional<std::string>& path, const std::string& text, std::ostream& out,
                std::ostream& err) {
  if (!path) {
    out << text;
    return true;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text) || !file.flush()) {
    err << "error: cannot write " << *path << "\n";
    return false;
  }
  return true;
}

json residual_json(const EqualityResiduals& r) {
  return {{"per_j_boundary", r.per_j_boundary}, {"mean_residual", r.mean_residual}, {"max_residual", r.max_residual}};
}

}  // namespace

IndexRange parse_range(const std::string& text) {
  auto to_size = [&](const std::string& s) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty() || s[0] == '-') {
      throw Error(ErrorKind::malformed_input, "bad range '" + text + "', expected lo:hi");
    }
    return static_cast<std::size_t>(v);
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const auto v = to_size(text);
    return {v, v};
  }
  return {to_size(text.substr(0, colon)), to_size(text.substr(colon + 1))};
}

int cmd_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.format != "json" && opts.format != "csv") {
    err << "error: --format must be json or csv\n";
    return kInputError;
  }
  if (!(opts.tolerance > 0.0)) {
    err << "error: --tolerance must be positive\n";
    return kInputError;
  }
  std::optional<FamilyFile> loaded;
  try {
    loaded.emplace(read_family_file(opts.input));
  } catch (const Error& e) {
    err << "error: " << opts.input << ": " << e.what() << "\n";
    return kInputError;
  }
  const FamilyFile& file = *loaded;
  std::vector<double> p_values = file.p_values.empty() ? std::vector<double>{2.0} : file.p_values;
  std::optional<std::span<const Complex>> coeffs;
  if (file.coeffs) coeffs = *file.coeffs;
  const auto reports = check_all(file.family, file.disk, coeffs, p_values, opts.tolerance);

  const std::string text =
      opts.format == "csv" ? reports_to_csv(reports, opts.tolerance) : reports_to_json(reports, opts.tolerance);
  if (!write_text(opts.output, text, out, err)) return kInputError;

  bool violated = false;
  for (const auto& r : reports) {
    if (r.verdict(opts.tolerance) == Verdict::violated) {
      violated = true;
      err << "violation: " << to_string(r.id) << (r.variant.empty() ? "" : " [" + r.variant + "]")
          << " slack " << r.slack << "\n";
    }
  }
  return violated ? kViolation : kOk;
}

int cmd_fuzz(const FuzzOptions& opts, std::ostream& out, std::ostream& err) {
  const auto summary = fuzz(opts.config);
  if (!write_text(opts.output, summary_to_json(summary, opts.config), out, err)) return kInputError;
  if (!summary.violations.empty()) {
    err << summary.violations.size() << " violation(s) found\n";
    return kViolation;
  }
  return kOk;
}

int cmd_extremal(const ExtremalOptions& opts, std::ostream& out, std::ostream& err) {
  ExtremalTarget target;
  if (opts.target == "root" || opts.target == "thm21") {
    target = ExtremalTarget::root_bound;
  } else if (opts.target == "square" || opts.target == "thm22") {
    target = ExtremalTarget::square_bound;
  } else {
    err << "error: --target must be root or square (thm21 or thm22)\n";
    return kInputError;
  }
  if (opts.dim == 0) {
    err << "error: --dim must be at least 1\n";
    return kInputError;
  }
  std::optional<Disk> parsed;
  try {
    parsed.emplace(parse_complex(opts.gamma), parse_complex(opts.big_gamma));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  const Disk disk = *parsed;

  HVector x = HVector::basis(opts.dim, 0);
  std::optional<std::vector<HVector>> ws;
  if (opts.seed) {
    auto rng = instance_stream(*opts.seed, 0, 0);
    std::normal_distribution<double> normal;
    auto draw = [&] {
      HVector v(opts.dim);
      for (std::size_t k = 0; k < opts.dim; ++k) v[k] = Complex{normal(rng), normal(rng)};
      return v;
    };
    do {
      x = draw();
    } while (norm(x) < 1e-6);
    // Orthogonal parts with zero sum: project, then subtract the mean.
    std::vector<HVector> parts;
    HVector mean(opts.dim);
    for (std::size_t j = 0; j < opts.n; ++j) {
      parts.push_back(project_out(draw(), x));
      mean += parts.back();
    }
    mean *= 1.0 / static_cast<double>(std::max<std::size_t>(opts.n, 1));
    for (auto& p : parts) p -= mean;
    ws = std::move(parts);
  }

  std::optional<Family> family;
  try {
    const auto spec = plan_extremal(target, opts.n, disk);
    if (!spec.feasible) {
      err << "infeasible: " << spec.reason << "\n";
      return kViolation;
    }
    std::optional<std::span<const HVector>> parts;
    if (ws) parts = std::span<const HVector>(*ws);
    family.emplace(build_extremal(target, x, opts.n, disk, parts));
  } catch (const Error& e) {
    err << "infeasible: " << e.what() << "\n";
    return kViolation;
  }

  const BoundReport report =
      target == ExtremalTarget::root_bound ? disk_root_bound(*family, disk) : disk_square_bound(*family, disk);
  const EqualityResiduals residuals =
      target == ExtremalTarget::root_bound ? disk_root_residuals(*family, disk) : disk_square_residuals(*family, disk);

  const FamilyFile file{*family, disk, std::nullopt, {}};
  json doc;
  doc["target"] = opts.target;
  doc["n"] = opts.n;
  doc["lhs"] = report.lhs;
  doc["rhs"] = report.rhs;
  doc["abs_difference"] = std::abs(report.rhs - report.lhs);
  doc["equality"] = std::abs(report.rhs - report.lhs) <= opts.tolerance * std::max(1.0, std::abs(report.rhs));
  doc["residuals"] = residual_json(residuals);
  if (opts.output) {
    if (!write_text(opts.output, write_family_file(file), out, err)) return kInputError;
    doc["family_file"] = *opts.output;
  } else {
    doc["family"] = json::parse(write_family_file(file));
  }
  out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err) {
  const auto ensemble = ensemble_from_string(opts.ensemble);
  if (!ensemble) {
    err << "error: --ensemble must be generic, disk or orthonormal\n";
    return kInputError;
  }
  const auto table = tightness_compare(opts.config, *ensemble);
  if (!write_text(opts.output, tightness_to_csv(table), out, err)) return kInputError;
  return kOk;
}

}  // namespace bessel::cli
