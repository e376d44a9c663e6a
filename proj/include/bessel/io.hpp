#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bessel/harness.hpp"
#include "bessel/numeric.hpp"
#include "bessel/report.hpp"
#include "bessel/sharp.hpp"

namespace bessel {

/// On-disk family description:
///   {"field_mode": "real"|"complex", "x": [[re, im], ...], "ys": [[[re, im], ...], ...],
///    "gamma": [re, im], "Gamma": [re, im], "coeffs": [[re, im], ...], "p": [ ... ]}
/// gamma/Gamma, coeffs and p are optional; gamma and Gamma come together.
struct FamilyFile {
  Family family;
  std::optional<Disk> disk;
  std::optional<std::vector<Complex>> coeffs;
  std::vector<double> p_values;
};

/// Throws Error(malformed_input) naming the line (syntax errors) or the field path.
FamilyFile parse_family_file(std::string_view text);
FamilyFile read_family_file(const std::filesystem::path& path);
/// Doubles are written in shortest round-trip form, so parsing the output gives back identical bits.
std::string write_family_file(const FamilyFile& file);

/// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i" with optional exponents and surrounding blanks.
Complex parse_complex(std::string_view text);

std::string reports_to_json(std::span<const BoundReport> reports, double tol);
inline constexpr std::string_view kReportCsvHeader = "bound_id,variant,lhs,rhs,slack,ratio,status,note";
std::string reports_to_csv(std::span<const BoundReport> reports, double tol);

/// Keys are emitted in sorted order; identical summaries give identical bytes.
std::string summary_to_json(const FuzzSummary& summary, const FuzzConfig& cfg);

inline constexpr std::string_view kTightnessCsvHeader = "bound_id,wins,mean_ratio";
std::string tightness_to_csv(const TightnessTable& table);

std::string_view to_string(FieldChoice f) noexcept;
std::optional<FieldChoice> field_choice_from_string(std::string_view s) noexcept;
std::string_view to_string(Ensemble e) noexcept;
std::optional<Ensemble> ensemble_from_string(std::string_view s) noexcept;

}  // namespace bessel
