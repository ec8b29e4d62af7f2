#pragma once

// Typed access to a job's JSON parameters. Flags and run-config jobs are
// both turned into one JSON object and read through this class, so they
// share a single validation path.

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gjs/io.hpp"

namespace gjs::cli {

/// Bad or missing parameter. Maps to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One "MATRIX:ROW:COL:DELTA" request.
struct MatrixPerturbation {
  std::string matrix;
  std::size_t row = 0;
  std::size_t col = 0;
  double delta = 0.0;
};

/// One "IDX:DELTA" request.
struct LadderPerturbation {
  std::size_t index = 0;
  double delta = 0.0;
};

class Params {
 public:
  Params(std::string command, const Json& params, std::set<std::string> allowed);

  bool has(const std::string& key) const;
  CharFn charfn(const std::string& key) const;
  double real(const std::string& key) const;
  double real_or(const std::string& key, double fallback) const;
  double positive_real_or(const std::string& key, double fallback) const;
  std::optional<double> optional_real(const std::string& key) const;
  std::size_t count(const std::string& key, std::size_t min) const;
  std::size_t count_or(const std::string& key, std::size_t min, std::size_t fallback) const;
  bool flag(const std::string& key) const;
  std::string text(const std::string& key) const;
  std::optional<std::string> optional_text(const std::string& key) const;
  std::vector<std::string> texts(const std::string& key) const;

  /// A real number or one of the listed keywords.
  std::variant<double, std::string> real_or_keyword(const std::string& key,
                                                    const std::vector<std::string>& keywords) const;
  /// j as "p/q", an integer or a half-integer number; returns 2j.
  std::size_t twice_j(const std::string& key) const;

  std::vector<MatrixPerturbation> matrix_perturbations(const std::string& key,
                                                       const std::set<std::string>& matrices,
                                                       std::size_t dim) const;
  std::vector<LadderPerturbation> ladder_perturbations(const std::string& key, std::size_t size) const;

  [[noreturn]] void fail(const std::string& key, const std::string& message) const;

 private:
  const Json& at(const std::string& key) const;

  std::string command_;
  const Json& params_;
};

/// Flag text to JSON: numbers, objects, arrays and literals parse as JSON;
/// anything else stays a string ("1/2", "cut", file paths).
Json flag_value(const std::string& text);

/// Value of GJS_DIVERGENCE_BOUND, or the library default when unset.
double divergence_bound_from_env();

}  // namespace gjs::cli
