#include "params.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "gjs/errors.hpp"

namespace gjs::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
std::optional<T> parse_number(const std::string& text) {
  T value{};
  const char* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc{} || res.ptr != end) return std::nullopt;
  return value;
}

bool integral(double v) { return std::isfinite(v) && v == std::floor(v); }

}  // namespace

Params::Params(std::string command, const Json& params, std::set<std::string> allowed)
    : command_(std::move(command)), params_(params) {
  if (!params_.is_object()) throw ValidationError(command_ + ": parameters must be a JSON object");
  for (const auto& item : params_.items()) {
    if (!allowed.contains(item.key())) throw ValidationError(command_ + ": unknown parameter '" + item.key() + "'");
  }
}

void Params::fail(const std::string& key, const std::string& message) const {
  throw ValidationError(command_ + ": --" + key + ": " + message);
}

bool Params::has(const std::string& key) const {
  return params_.contains(key) && !params_.at(key).is_null();
}

const Json& Params::at(const std::string& key) const {
  if (!has(key)) fail(key, "required");
  return params_.at(key);
}

CharFn Params::charfn(const std::string& key) const {
  const Json& v = at(key);
  try {
    return charfn_from_json(v.is_string() ? Json::parse(v.get<std::string>()) : v);
  } catch (const Json::exception& e) {
    fail(key, std::string("invalid JSON: ") + e.what());
  } catch (const Error& e) {
    fail(key, e.what());
  }
}

double Params::real(const std::string& key) const {
  const Json& v = at(key);
  if (!v.is_number()) fail(key, "expected a real number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(key, "expected a finite number");
  return x;
}

double Params::real_or(const std::string& key, double fallback) const {
  return has(key) ? real(key) : fallback;
}

double Params::positive_real_or(const std::string& key, double fallback) const {
  const double x = real_or(key, fallback);
  if (!(x > 0.0)) fail(key, "must be positive");
  return x;
}

std::optional<double> Params::optional_real(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return real(key);
}

std::size_t Params::count(const std::string& key, std::size_t min) const {
  const Json& v = at(key);
  if (!v.is_number() || !integral(v.get<double>())) fail(key, "expected an integer");
  const double x = v.get<double>();
  if (x < static_cast<double>(min)) fail(key, "must be at least " + std::to_string(min));
  if (x > 1e9) fail(key, "too large");
  return static_cast<std::size_t>(x);
}

std::size_t Params::count_or(const std::string& key, std::size_t min, std::size_t fallback) const {
  return has(key) ? count(key, min) : fallback;
}

bool Params::flag(const std::string& key) const {
  if (!has(key)) return false;
  const Json& v = params_.at(key);
  if (!v.is_boolean()) fail(key, "expected true or false");
  return v.get<bool>();
}

std::string Params::text(const std::string& key) const {
  const Json& v = at(key);
  if (!v.is_string()) fail(key, "expected a string");
  return v.get<std::string>();
}

std::optional<std::string> Params::optional_text(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return text(key);
}

std::vector<std::string> Params::texts(const std::string& key) const {
  if (!has(key)) return {};
  const Json& v = params_.at(key);
  if (v.is_string()) return {v.get<std::string>()};
  if (!v.is_array()) fail(key, "expected a string or a list of strings");
  std::vector<std::string> out;
  for (const Json& item : v) {
    if (!item.is_string()) fail(key, "expected a list of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::variant<double, std::string> Params::real_or_keyword(const std::string& key,
                                                          const std::vector<std::string>& keywords) const {
  const Json& v = at(key);
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    for (const std::string& k : keywords) {
      if (s == k) return s;
    }
    std::string expected = "a real number";
    for (const std::string& k : keywords) expected += " or '" + k + "'";
    fail(key, "expected " + expected);
  }
  return real(key);
}

std::size_t Params::twice_j(const std::string& key) const {
  const Json& v = at(key);
  if (v.is_number()) {
    const double twice = 2.0 * v.get<double>();
    if (!integral(twice) || twice < 0.0 || twice > 1e6) fail(key, "j must be a non-negative half-integer");
    return static_cast<std::size_t>(twice);
  }
  if (!v.is_string()) fail(key, "expected a rational p/q");
  const std::vector<std::string> parts = split(v.get<std::string>(), '/');
  if (parts.size() != 2) fail(key, "expected a rational p/q");
  const auto p = parse_number<long long>(parts[0]);
  const auto q = parse_number<long long>(parts[1]);
  if (!p || !q || *q <= 0) fail(key, "expected a rational p/q with q > 0");
  if (*p < 0 || (2 * *p) % *q != 0) fail(key, "j must be a non-negative half-integer");
  const long long twice = 2 * *p / *q;
  if (twice > 1000000) fail(key, "too large");
  return static_cast<std::size_t>(twice);
}

std::vector<MatrixPerturbation> Params::matrix_perturbations(const std::string& key,
                                                             const std::set<std::string>& matrices,
                                                             std::size_t dim) const {
  std::vector<MatrixPerturbation> out;
  for (const std::string& spec : texts(key)) {
    const std::vector<std::string> parts = split(spec, ':');
    if (parts.size() != 4) fail(key, "expected MATRIX:ROW:COL:DELTA, got '" + spec + "'");
    if (!matrices.contains(parts[0])) {
      std::string names;
      for (const std::string& m : matrices) names += (names.empty() ? "" : ", ") + m;
      fail(key, "unknown matrix '" + parts[0] + "' (one of " + names + ")");
    }
    const auto row = parse_number<std::size_t>(parts[1]);
    const auto col = parse_number<std::size_t>(parts[2]);
    const auto delta = parse_number<double>(parts[3]);
    if (!row || !col || !delta || !std::isfinite(*delta)) fail(key, "malformed '" + spec + "'");
    if (*row >= dim || *col >= dim) fail(key, "index out of range in '" + spec + "'");
    out.push_back({parts[0], *row, *col, *delta});
  }
  return out;
}

std::vector<LadderPerturbation> Params::ladder_perturbations(const std::string& key, std::size_t size) const {
  std::vector<LadderPerturbation> out;
  for (const std::string& spec : texts(key)) {
    const std::vector<std::string> parts = split(spec, ':');
    if (parts.size() != 2) fail(key, "expected IDX:DELTA, got '" + spec + "'");
    const auto index = parse_number<std::size_t>(parts[0]);
    const auto delta = parse_number<double>(parts[1]);
    if (!index || !delta || !std::isfinite(*delta)) fail(key, "malformed '" + spec + "'");
    if (*index >= size) fail(key, "ladder index out of range in '" + spec + "'");
    out.push_back({*index, *delta});
  }
  return out;
}

Json flag_value(const std::string& text) {
  try {
    Json v = Json::parse(text);
    if (!v.is_discarded()) return v;
  } catch (const Json::exception&) {
  }
  return text;
}

double divergence_bound_from_env() {
  const char* raw = std::getenv("GJS_DIVERGENCE_BOUND");
  if (raw == nullptr || *raw == '\0') return kDefaultDivergenceBound;
  const auto v = parse_number<double>(raw);
  if (!v || !(*v > 0.0) || !std::isfinite(*v)) {
    throw ValidationError(std::string("GJS_DIVERGENCE_BOUND must be a positive finite number, got '") + raw + "'");
  }
  return *v;
}

}  // namespace gjs::cli
