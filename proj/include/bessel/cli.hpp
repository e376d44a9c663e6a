#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "bessel/harness.hpp"
#include "bessel/numeric.hpp"

namespace bessel::cli {

// Exit codes shared by every command.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kViolation = 2;  // eval/fuzz: an inequality failed; extremal: infeasible parameters

struct EvalOptions {
  std::string input;
  std::optional<std::string> output;
  double tolerance = kDefaultTolerance;
  std::string format = "json";
};

struct FuzzOptions {
  FuzzConfig config;
  std::optional<std::string> output;
};

struct ExtremalOptions {
  std::string target = "root";
  std::size_t n = 2;
  std::string gamma = "1";
  std::string big_gamma = "3";
  std::size_t dim = 2;
  std::optional<std::uint64_t> seed;  // random x and zero-sum orthogonal parts when set; x = e1 otherwise
  std::optional<std::string> output;
  double tolerance = kDefaultTolerance;
};

struct CompareOptions {
  FuzzConfig config;
  std::string ensemble = "generic";
  std::optional<std::string> output;
};

int cmd_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err);
int cmd_fuzz(const FuzzOptions& opts, std::ostream& out, std::ostream& err);
int cmd_extremal(const ExtremalOptions& opts, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err);

/// "lo:hi" or a single value.
IndexRange parse_range(const std::string& text);

}  // namespace bessel::cli
