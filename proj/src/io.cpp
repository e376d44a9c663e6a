#include "bessel/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bessel/errors.hpp"

namespace bessel {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::malformed_input, what); }

Complex complex_at(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    malformed(path + ": expected a [re, im] pair of numbers");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

std::vector<Complex> complex_list(const json& v, const std::string& path) {
  if (!v.is_array()) malformed(path + ": expected an array of [re, im] pairs");
  std::vector<Complex> out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(complex_at(v[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

json pair(Complex z) { return json::array({z.real(), z.imag()}); }

json pairs(std::span<const Complex> zs) {
  json a = json::array();
  for (auto z : zs) a.push_back(pair(z));
  return a;
}

// JSON has no NaN or infinity; those become null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string csv_number(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

// Parses a signed real at the front of s, advancing it. Returns false when no number is present.
bool take_real(std::string_view& s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{}) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  const std::string original(text);
  if (compact.empty()) malformed("empty complex number");

  std::string_view s = compact;

  double re = 0.0;
  double im = 0.0;
  if (s.back() != 'i') {
    if (!take_real(s, re) || !s.empty()) malformed("cannot parse complex number '" + original + "'");
    return {re, 0.0};
  }
  // Trailing 'i': either "bi", "i", "-i", or "a+bi" / "a-bi" / "a+i" / "a-i".
  std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not part of an exponent and not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string_view real_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view imag_part = split == std::string_view::npos ? body : body.substr(split);
  if (!real_part.empty()) {
    if (!take_real(real_part, re) || !real_part.empty()) malformed("cannot parse complex number '" + original + "'");
  }
  if (imag_part.empty() || imag_part == "+") {
    im = 1.0;
  } else if (imag_part == "-") {
    im = -1.0;
  } else if (!take_real(imag_part, im) || !imag_part.empty()) {
    malformed("cannot parse complex number '" + original + "'");
  }
  return {re, im};
}

FamilyFile parse_family_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    malformed("line " + std::to_string(line_of(text, e.byte > 0 ? e.byte - 1 : 0)) + ": " + e.what());
  }
  if (!doc.is_object()) malformed("top level: expected a JSON object");

  FieldMode field = FieldMode::complex;
  if (doc.contains("field_mode")) {
    const auto& m = doc["field_mode"];
    if (m == "real") {
      field = FieldMode::real;
    } else if (m != "complex") {
      malformed("field_mode: expected \"real\" or \"complex\"");
    }
  }
  if (!doc.contains("x")) malformed("x: missing");
  if (!doc.contains("ys")) malformed("ys: missing");
  HVector x(complex_list(doc["x"], "x"));
  const auto& ys_json = doc["ys"];
  if (!ys_json.is_array()) malformed("ys: expected an array of vectors");
  std::vector<HVector> ys;
  for (std::size_t j = 0; j < ys_json.size(); ++j) {
    ys.emplace_back(complex_list(ys_json[j], "ys[" + std::to_string(j) + "]"));
  }

  std::optional<Family> family;
  try {
    family.emplace(std::move(x), std::move(ys), field);
  } catch (const Error& e) {
    malformed(std::string("family: ") + e.what());
  }
  FamilyFile file{std::move(*family), std::nullopt, std::nullopt, {}};

  const bool has_gamma = doc.contains("gamma");
  const bool has_big_gamma = doc.contains("Gamma");
  if (has_gamma != has_big_gamma) malformed("gamma/Gamma: both or neither must be given");
  if (has_gamma) file.disk.emplace(complex_at(doc["gamma"], "gamma"), complex_at(doc["Gamma"], "Gamma"));
  if (doc.contains("coeffs")) {
    file.coeffs = complex_list(doc["coeffs"], "coeffs");
    if (file.coeffs->size() != file.family.n()) {
      malformed("coeffs: expected " + std::to_string(file.family.n()) + " entries, got " +
                std::to_string(file.coeffs->size()));
    }
  }
  if (doc.contains("p")) {
    const auto& p = doc["p"];
    if (!p.is_array()) malformed("p: expected an array of numbers");
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (!p[k].is_number()) malformed("p[" + std::to_string(k) + "]: expected a number");
      file.p_values.push_back(p[k].get<double>());
    }
  }
  return file;
}

FamilyFile read_family_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family_file(buf.str());
}

std::string write_family_file(const FamilyFile& file) {
  const auto& f = file.family;
  json doc;
  doc["field_mode"] = f.field() == FieldMode::real ? "real" : "complex";
  doc["x"] = pairs(f.x().coords());
  json ys = json::array();
  for (const auto& y : f.ys()) ys.push_back(pairs(y.coords()));
  doc["ys"] = std::move(ys);
  if (file.disk) {
    doc["gamma"] = pair(file.disk->gamma());
    doc["Gamma"] = pair(file.disk->big_gamma());
  }
  if (file.coeffs) doc["coeffs"] = pairs(*file.coeffs);
  if (!file.p_values.empty()) doc["p"] = file.p_values;
  return doc.dump(2) + "\n";
}

std::string reports_to_json(std::span<const BoundReport> reports, double tol) {
  json out = json::array();
  for (const auto& r : reports) {
    json item;
    item["bound_id"] = std::string(to_string(r.id));
    item["variant"] = r.variant;
    item["lhs"] = number(r.lhs);
    item["rhs"] = number(r.rhs);
    item["slack"] = number(r.slack);
    item["ratio"] = number(r.ratio);
    item["preconditions_met"] = r.preconditions_met;
    item["status"] = std::string(to_string(r.verdict(tol)));
    item["note"] = r.note;
    out.push_back(std::move(item));
  }
  return out.dump(2) + "\n";
}

std::string reports_to_csv(std::span<const BoundReport> reports, double tol) {
  std::string out(kReportCsvHeader);
  out += '\n';
  for (const auto& r : reports) {
    out += std::string(to_string(r.id)) + ',' + csv_field(r.variant) + ',' + csv_number(r.lhs) + ',' +
           csv_number(r.rhs) + ',' + csv_number(r.slack) + ',' + csv_number(r.ratio) + ',' +
           std::string(to_string(r.verdict(tol))) + ',' + csv_field(r.note) + '\n';
  }
  return out;
}

std::string summary_to_json(const FuzzSummary& summary, const FuzzConfig& cfg) {
  json config;
  config["master_seed"] = cfg.master_seed;
  config["instances"] = cfg.instances;
  config["n_range"] = {cfg.n_range.lo, cfg.n_range.hi};
  config["d_range"] = {cfg.d_range.lo, cfg.d_range.hi};
  config["field_mode"] = std::string(to_string(cfg.field));
  config["p_values"] = cfg.p_values;
  config["tolerance"] = cfg.tolerance;
  config["disk_sampler"] = {{"center_scale", cfg.disk.center_scale},
                            {"positive_fraction", cfg.disk.positive_fraction},
                            {"degenerate_fraction", cfg.disk.degenerate_fraction},
                            {"boundary_fraction", cfg.disk.boundary_fraction}};

  auto counts = [](const std::map<BoundId, std::size_t>& m) {
    json o = json::object();
    for (const auto& [id, k] : m) o[std::string(to_string(id))] = k;
    return o;
  };
  json min_slack = json::object();
  for (const auto& [id, v] : summary.min_slack) min_slack[std::string(to_string(id))] = number(v);
  json violations = json::array();
  for (const auto& v : summary.violations) {
    violations.push_back({{"bound_id", std::string(to_string(v.id))},
                          {"variant", v.variant},
                          {"instance", v.instance},
                          {"instance_seed", v.instance_seed},
                          {"slack", number(v.slack)},
                          {"relative_slack", number(v.relative_slack)}});
  }

  json doc;
  doc["config"] = std::move(config);
  doc["instances"] = summary.instances;
  doc["checked"] = counts(summary.checked);
  doc["tight"] = counts(summary.tight);
  doc["min_slack"] = std::move(min_slack);
  doc["tightness_wins"] = counts(summary.tightness_wins);
  doc["violations"] = std::move(violations);
  return doc.dump(2) + "\n";
}

std::string tightness_to_csv(const TightnessTable& table) {
  std::string out(kTightnessCsvHeader);
  out += '\n';
  for (const auto& row : table.rows) {
    out += std::string(to_string(row.id)) + ',' + std::to_string(row.wins) + ',' + csv_number(row.mean_ratio) + '\n';
  }
  return out;
}

std::string_view to_string(FieldChoice f) noexcept {
  switch (f) {
    case FieldChoice::real: return "real";
    case FieldChoice::complex: return "complex";
    case FieldChoice::mixed: return "mixed";
  }
  return "mixed";
}

std::optional<FieldChoice> field_choice_from_string(std::string_view s) noexcept {
  if (s == "real") return FieldChoice::real;
  if (s == "complex") return FieldChoice::complex;
  if (s == "mixed") return FieldChoice::mixed;
  return std::nullopt;
}

std::string_view to_string(Ensemble e) noexcept {
  switch (e) {
    case Ensemble::generic: return "generic";
    case Ensemble::disk: return "disk";
    case Ensemble::orthonormal: return "orthonormal";
  }
  return "generic";
}

std::optional<Ensemble> ensemble_from_string(std::string_view s) noexcept {
  if (s == "generic") return Ensemble::generic;
  if (s == "disk") return Ensemble::disk;
  if (s == "orthonormal") return Ensemble::orthonormal;
  return std::nullopt;
}

}  // namespace bessel
