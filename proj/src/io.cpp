#include "gjs/io.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "gjs/errors.hpp"

namespace gjs {

namespace {

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json points_json(const std::vector<Point>& points) {
  Json out = Json::array();
  for (const Point& p : points) out.push_back({p.x, p.y});
  return out;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string_view to_string(Orientation o) {
  return o == Orientation::OscillatorLike ? "oscillator" : "weight";
}

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::Attracting: return "attracting";
    case Stability::Repelling: return "repelling";
    case Stability::NeutralTangent: return "neutral_tangent";
  }
  return "unknown";
}

std::string_view to_string(OneSidedBehavior b) {
  switch (b) {
    case OneSidedBehavior::ConvergesFromBelow: return "converges_from_below";
    case OneSidedBehavior::ConvergesFromAbove: return "converges_from_above";
    case OneSidedBehavior::DivergesBothSides: return "diverges_both_sides";
    case OneSidedBehavior::Attracting: return "attracting";
  }
  return "unknown";
}

std::string_view to_string(RegionLabel r) {
  switch (r) {
    case RegionLabel::OnFixedPoint: return "on_fixed_point";
    case RegionLabel::ConvergentInterval: return "convergent_interval";
    case RegionLabel::DivergentInterval: return "divergent_interval";
    case RegionLabel::OutsideInvertibleRegion: return "outside_invertible_region";
  }
  return "unknown";
}

CharFn charfn_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "characteristic function must be a JSON object");
  const auto coeffs = j.find("coefficients");
  if (coeffs == j.end() || !coeffs->is_array() || coeffs->empty()) {
    throw Error(ErrorCode::InvalidArgument, "\"coefficients\" must be a non-empty array");
  }
  std::vector<double> a;
  for (const Json& c : *coeffs) {
    if (!c.is_number()) throw Error(ErrorCode::InvalidArgument, "coefficients must be numbers");
    const double v = c.get<double>();
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "coefficients must be finite");
    a.push_back(v);
  }
  const auto orient = j.find("orientation");
  if (orient == j.end() || !orient->is_string()) {
    throw Error(ErrorCode::InvalidArgument, "\"orientation\" must be \"oscillator\" or \"weight\"");
  }
  const std::string o = orient->get<std::string>();
  if (o == "oscillator") return CharFn(std::move(a), Orientation::OscillatorLike);
  if (o == "weight") return CharFn(std::move(a), Orientation::WeightLike);
  throw Error(ErrorCode::InvalidArgument, "unknown orientation \"" + o + "\"");
}

Json to_json(const CharFn& fn) {
  Json coeffs = Json::array();
  for (double c : fn.coefficients()) coeffs.push_back(c);
  return {{"coefficients", std::move(coeffs)}, {"orientation", to_string(fn.orientation())}};
}

Json to_json(const FixedPointInfo& fp) {
  Json out;
  out["location"] = fp.location;
  out["multiplier"] = fp.multiplier;
  out["stability"] = to_string(fp.stability);
  out["one_sided"] = fp.one_sided ? Json(to_string(*fp.one_sided)) : Json(nullptr);
  out["in_invertible_region"] = fp.in_invertible_region;
  return out;
}

Json to_json(const OperatorMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return {{"basis_label", m.basis_label()}, {"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

Json to_json(const ResidualReport& r) {
  Json items = Json::array();
  for (const Residual& res : r.residuals) items.push_back({{"relation", res.relation}, {"max_abs", res.max_abs}});
  return {{"tolerance", r.tolerance},
          {"passed", r.passed()},
          {"max_residual", r.max_residual()},
          {"residuals", std::move(items)}};
}

Json to_json(const GhaRep& rep) {
  Json out;
  out["fn"] = to_json(rep.fn());
  out["alpha0"] = rep.alpha0();
  out["dim"] = rep.dim();
  out["eigenvalues"] = std::vector<double>(rep.eigenvalues().begin(), rep.eigenvalues().end());
  out["ladder"] = std::vector<double>(rep.ladder().begin(), rep.ladder().end());
  return out;
}

Json to_json(const Gsl2Rep& rep) {
  Json out;
  out["gn"] = to_json(rep.gn());
  out["alpha_j"] = rep.alpha_j();
  out["dim"] = rep.dim();
  out["kind"] = to_string(rep.kind());
  out["weights"] = std::vector<double>(rep.weights().begin(), rep.weights().end());
  out["ladder_sq"] = std::vector<double>(rep.ladder_sq().begin(), rep.ladder_sq().end());
  out["cut_residual"] = optional_number(rep.closure_residual());
  return out;
}

Json to_json(const CutSolutions& cut) {
  Json excluded = Json::array();
  for (const ExcludedRoot& e : cut.excluded) excluded.push_back({{"value", e.value}, {"reason", to_string(e.reason)}});
  return {{"included", cut.included}, {"excluded", std::move(excluded)}};
}

Json to_json(const JsMapRep& rep) {
  const TwoOscillatorSpace& space = rep.space();
  Json out;
  out["mode"] = space.mode() == SpaceMode::FixedJ ? "fixed_j" : "full_grid";
  if (space.mode() == SpaceMode::FixedJ) {
    out["twice_j"] = space.twice_j();
  } else {
    out["grid_dim"] = space.grid_dim();
  }
  out["fn"] = to_json(space.gha().fn());
  out["alpha0"] = space.gha().alpha0();
  out["gn"] = to_json(rep.gn());
  out["alpha_j"] = rep.alpha_j();
  out["Q2"] = rep.Q2();
  out["M0sq"] = rep.M0sq();
  Json basis = Json::array();
  for (const OccupationPair& p : space.basis()) basis.push_back({p.n1, p.n2});
  out["basis"] = std::move(basis);
  out["S_z"] = to_json(rep.S_z());
  out["S_plus"] = to_json(rep.S_plus());
  out["S_minus"] = to_json(rep.S_minus());
  out["S_sq"] = to_json(rep.S_sq());
  out["F"] = to_json(rep.F());
  if (space.mode() == SpaceMode::FullGrid) {
    out["designated_twice_j"] = rep.designated_twice_j() ? Json(*rep.designated_twice_j()) : Json(nullptr);
    out["unverified_shells"] = std::vector<std::size_t>(rep.unverified_shells().begin(), rep.unverified_shells().end());
    out["clamped_states"] = std::vector<std::size_t>(rep.clamped_states().begin(), rep.clamped_states().end());
  }
  return out;
}

Json to_json(const OrbitReport& report) {
  Json out;
  out["series"] = report.series;
  out["fn"] = to_json(report.fn);
  out["start"] = report.start;
  out["window"] = {{"lo", report.window.lo}, {"hi", report.window.hi}};
  out["iterates"] = report.iterates;
  out["diverged"] = report.diverged;
  out["truncated"] = report.truncated;
  Json fps = Json::array();
  for (const FixedPointInfo& fp : report.fixed_points) fps.push_back(to_json(fp));
  out["fixed_points"] = std::move(fps);
  out["boundary"] = optional_number(report.boundary);
  out["region_label"] = report.region_label ? Json(to_string(*report.region_label)) : Json(nullptr);
  Json guides = Json::array();
  for (const GuideLine& g : report.guide_lines) {
    guides.push_back({{"vertical", g.vertical}, {"position", g.position}, {"label", g.label}});
  }
  out["guide_lines"] = std::move(guides);
  out["fn_samples"] = points_json(report.fn_samples);
  out["diagonal_samples"] = points_json(report.diagonal_samples);
  Json segments = Json::array();
  for (const Segment& s : report.cobweb_segments) {
    segments.push_back({s.from.x, s.from.y, s.to.x, s.to.y});
  }
  out["cobweb_segments"] = std::move(segments);
  return out;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

std::string to_csv(const OperatorMatrix& m) {
  std::string out = csv_field(m.basis_label());
  for (std::size_t c = 0; c < m.cols(); ++c) out += "," + std::to_string(c);
  out += '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += std::to_string(r);
    for (std::size_t c = 0; c < m.cols(); ++c) out += "," + format_double(m(r, c));
    out += '\n';
  }
  return out;
}

std::string samples_csv(const OrbitReport& report) {
  std::string out = "series,x,y\n";
  for (const Point& p : report.fn_samples) out += "fn," + format_double(p.x) + "," + format_double(p.y) + "\n";
  for (const Point& p : report.diagonal_samples) {
    out += "diagonal," + format_double(p.x) + "," + format_double(p.y) + "\n";
  }
  return out;
}

std::string cobweb_csv(const OrbitReport& report) {
  std::string out = "index,kind,x1,y1,x2,y2\n";
  for (std::size_t i = 0; i < report.cobweb_segments.size(); ++i) {
    const Segment& s = report.cobweb_segments[i];
    out += std::to_string(i) + (s.vertical ? ",vertical," : ",horizontal,") + format_double(s.from.x) + "," +
           format_double(s.from.y) + "," + format_double(s.to.x) + "," + format_double(s.to.y) + "\n";
  }
  return out;
}

}  // namespace gjs
