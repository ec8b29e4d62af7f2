#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "gjs/errors.hpp"
#include "params.hpp"

namespace gjs::cli {

namespace fs = std::filesystem;

namespace {

constexpr double kDefaultTol = 1e-10;

std::set<std::string> allowed_keys(const std::string& command) {
  for (const CommandSpec& spec : command_specs()) {
    if (spec.full_name() == command) {
      std::set<std::string> keys;
      for (const FlagSpec& f : spec.flags) keys.insert(f.name);
      return keys;
    }
  }
  throw ValidationError("unknown command '" + command + "'");
}

fs::path resolve(const Context& ctx, const std::string& path) {
  const fs::path p(path);
  return p.is_absolute() ? p : ctx.base_dir / p;
}

std::optional<fs::path> out_dir(const Params& p, const Context& ctx) {
  if (auto dir = p.optional_text("out")) {
    if (dir->empty()) p.fail("out", "must not be empty");
    return resolve(ctx, *dir);
  }
  return std::nullopt;
}

void apply_perturbations(const std::vector<MatrixPerturbation>& perturbations,
                         const std::map<std::string, OperatorMatrix*>& targets) {
  for (const MatrixPerturbation& m : perturbations) (*targets.at(m.matrix))(m.row, m.col) += m.delta;
}

void add_matrix_files(Outcome& outcome, const std::optional<fs::path>& dir,
                      const std::vector<std::pair<std::string, const OperatorMatrix*>>& matrices) {
  Json json = Json::object();
  for (const auto& [name, m] : matrices) {
    json[name] = to_json(*m);
    if (dir) outcome.files.push_back({*dir / (name + ".csv"), to_csv(*m)});
  }
  outcome.result["matrices"] = std::move(json);
}

void add_orbit_files(Outcome& outcome, const std::optional<fs::path>& dir, const std::string& prefix,
                     const OrbitReport& report) {
  if (!dir) return;
  const std::string stem = prefix + "_" + report.series;
  outcome.files.push_back({*dir / (stem + "_samples.csv"), samples_csv(report)});
  outcome.files.push_back({*dir / (stem + "_cobweb.csv"), cobweb_csv(report)});
}

Json region_json(const CharFn& fn, std::optional<double> x0) {
  if (!x0 || !fn.is_quadratic() || !has_double_fixed_point(fn)) return nullptr;
  return to_string(classify_region(fn, *x0));
}

// --- charfun ---------------------------------------------------------------

Job charfun_analyze(const Params& p, const Context&) {
  const CharFn fn = p.charfn("fn");
  const std::optional<double> x0 = p.optional_real("x0");
  return {"charfun analyze", [fn, x0] {
            Outcome o;
            Json& r = o.result;
            r["fn"] = to_json(fn);
            r["degree"] = fn.degree();
            Json fps = Json::array();
            try {
              for (const FixedPointInfo& fp : fixed_points(fn)) fps.push_back(to_json(fp));
            } catch (const Error& e) {
              if (e.code() != ErrorCode::NoRealFixedPoint) throw;
            }
            r["fixed_points"] = std::move(fps);
            if (fn.is_quadratic()) {
              r["discriminant"] = discriminant(fn);
              r["double_fixed_point"] = has_double_fixed_point(fn);
              r["boundary"] = invertibility_boundary(fn);
            } else {
              r["discriminant"] = nullptr;
              r["double_fixed_point"] = nullptr;
              r["boundary"] = nullptr;
            }
            r["x0"] = x0 ? Json(*x0) : Json(nullptr);
            r["x0_in_invertible_region"] = x0 ? Json(in_invertible_region(fn, *x0)) : Json(nullptr);
            r["region"] = region_json(fn, x0);
            return o;
          }, std::nullopt};
}

// --- gha -------------------------------------------------------------------

Job gha_build(const Params& p, const Context& ctx) {
  const CharFn fn = p.charfn("fn");
  const double alpha0 = p.real("alpha0");
  const std::size_t dim = p.count("dim", 1);
  const bool verify = p.flag("verify");
  const double tol = p.positive_real_or("tol", kDefaultTol);
  if (verify && dim < 2) p.fail("dim", "verification needs at least two states");
  const auto perturb = p.matrix_perturbations("perturb", {"H", "A", "Adag"}, dim);
  const auto ladder = p.ladder_perturbations("perturb-ladder", dim - 1);
  const auto dir = out_dir(p, ctx);
  return {"gha build", [=] {
            GhaRep rep = build_gha(fn, alpha0, dim);
            for (const LadderPerturbation& l : ladder) rep = rep.with_ladder_offset(l.index, l.delta);
            GhaOperators ops = gha_operators(rep);
            apply_perturbations(perturb, {{"H", &ops.H}, {"A", &ops.A}, {"Adag", &ops.Adag}});
            const OperatorMatrix n = matrix_N(rep);
            const OperatorMatrix casimir = ops.Adag * ops.A - ops.H;

            Outcome o;
            o.result["rep"] = to_json(rep);
            o.result["casimir_diagonal"] = casimir.diagonal_entries();
            add_matrix_files(o, dir, {{"H", &ops.H}, {"A", &ops.A}, {"Adag", &ops.Adag}, {"N", &n},
                                      {"casimir", &casimir}});
            if (verify) {
              const ResidualReport report = gha_relation_residuals(fn, ops, tol);
              o.result["residuals"] = to_json(report);
              o.verification_failed = !report.passed();
            } else {
              o.result["residuals"] = nullptr;
            }
            return o;
          }, dir};
}

// --- gsl2 ------------------------------------------------------------------

Job gsl2_build(const Params& p, const Context& ctx) {
  const CharFn gn = p.charfn("gn");
  const double alpha_j = p.real("alphaj");
  const std::size_t dim = p.count("dim", 1);
  const std::string kind_text = p.text("kind");
  const std::optional<Gsl2Kind> kind = parse_gsl2_kind(kind_text);
  if (!kind) p.fail("kind", "expected periodic, cut or truncated");
  const bool verify = p.flag("verify");
  const double tol = p.positive_real_or("tol", kDefaultTol);
  const double closure_tol = p.positive_real_or("closure-tol", kClosureTolerance);
  if (verify && dim < 2) p.fail("dim", "verification needs at least two states");
  const auto perturb = p.matrix_perturbations("perturb", {"J0", "Jplus", "Jminus"}, dim);
  const auto ladder = p.ladder_perturbations("perturb-ladder", dim - 1);
  const auto dir = out_dir(p, ctx);
  return {"gsl2 build", [=, kind = *kind] {
            Gsl2Rep rep = build_gsl2(gn, alpha_j, dim, kind, closure_tol);
            for (const LadderPerturbation& l : ladder) rep = rep.with_ladder_sq_offset(l.index, l.delta);
            Gsl2Operators ops = gsl2_operators(rep);
            apply_perturbations(perturb, {{"J0", &ops.J0}, {"Jplus", &ops.Jplus}, {"Jminus", &ops.Jminus}});
            const OperatorMatrix casimir = casimir_from(gn, ops);

            Outcome o;
            o.result["rep"] = to_json(rep);
            o.result["casimir_diagonal"] = casimir.diagonal_entries();
            add_matrix_files(o, dir, {{"J0", &ops.J0}, {"Jplus", &ops.Jplus}, {"Jminus", &ops.Jminus},
                                      {"casimir", &casimir}});
            if (verify) {
              const ResidualReport report = gsl2_relation_residuals(gn, ops, rep.checked_columns(), tol);
              o.result["residuals"] = to_json(report);
              o.verification_failed = !report.passed();
            } else {
              o.result["residuals"] = nullptr;
            }
            return o;
          }, dir};
}

CutScanOptions scan_options(const Params& p) {
  CutScanOptions opts;
  opts.step = p.positive_real_or("step", opts.step);
  opts.tol = p.positive_real_or("root-tol", opts.tol);
  opts.half_width = p.positive_real_or("half-width", opts.half_width);
  if (opts.half_width / opts.step > 1e8) p.fail("step", "too many grid points for the scan window");
  return opts;
}

Job gsl2_cut(const Params& p, const Context&) {
  const CharFn gn = p.charfn("gn");
  const std::size_t d = p.count("d", 1);
  const CutScanOptions opts = scan_options(p);
  return {"gsl2 cut", [=] {
            const CutSolutions cut = cut_condition_solve(gn, d, opts);
            Outcome o;
            o.result["gn"] = to_json(gn);
            o.result["d"] = d;
            const Json solutions = to_json(cut);
            o.result["included"] = solutions["included"];
            o.result["excluded"] = solutions["excluded"];
            Json residuals = Json::array();
            for (double r : cut.included) residuals.push_back(std::abs(r + compose(gn, r, d) + 1.0));
            o.result["cut_residuals"] = std::move(residuals);
            return o;
          }, std::nullopt};
}

Job gsl2_periodic(const Params& p, const Context&) {
  const CharFn gn = p.charfn("gn");
  const std::size_t d = p.count("d", 1);
  const CutScanOptions opts = scan_options(p);
  return {"gsl2 periodic", [=] {
            Outcome o;
            o.result["gn"] = to_json(gn);
            o.result["d"] = d;
            o.result["roots"] = periodic_condition_solve(gn, d, opts);
            return o;
          }, std::nullopt};
}

// --- jsmap -----------------------------------------------------------------

CharFn partner(const Params& p, const CharFn& fn) {
  if (p.has("gn")) return p.charfn("gn");
  try {
    return reflection_pair(fn);
  } catch (const Error& e) {
    p.fail("gn", std::string("not given and fn has no reflection partner: ") + e.what());
  }
}

Job jsmap_build(const Params& p, const Context& ctx) {
  const CharFn fn = p.charfn("fn");
  const double alpha0 = p.real("alpha0");
  const CharFn gn = partner(p, fn);
  const double alpha_j = p.real("alphaj");
  const std::optional<std::size_t> grid =
      p.has("full-grid") ? std::optional<std::size_t>(p.count("full-grid", 1)) : std::nullopt;
  std::optional<std::size_t> twice_j;
  if (p.has("j")) twice_j = p.twice_j("j");
  if (!grid && !twice_j) p.fail("j", "required unless --full-grid is given");
  if (grid && twice_j && *twice_j > *grid - 1) p.fail("j", "designated shell must satisfy 2j <= D - 1");
  const auto dir = out_dir(p, ctx);
  return {"jsmap build", [=] {
            const JsMapRep js = grid ? build_jsmap(TwoOscillatorSpace::full_grid(fn, alpha0, *grid), gn, alpha_j,
                                                   twice_j)
                                     : build_jsmap_fixed_j(fn, alpha0, gn, alpha_j, *twice_j);
            Outcome o;
            o.result = to_json(js);
            if (dir) {
              for (const auto& [name, m] : std::vector<std::pair<std::string, const OperatorMatrix*>>{
                       {"S_z", &js.S_z()}, {"S_plus", &js.S_plus()}, {"S_minus", &js.S_minus()},
                       {"S_sq", &js.S_sq()}, {"F", &js.F()}}) {
                o.files.push_back({*dir / (name + ".csv"), to_csv(*m)});
              }
            }
            return o;
          }, dir};
}

Gsl2Kind detect_kind(const CharFn& gn, double alpha_j, std::size_t dim) {
  const double beyond = compose(gn, alpha_j, dim);
  if (std::abs(alpha_j + beyond + 1.0) <= kClosureTolerance) return Gsl2Kind::FiniteCut;
  if (std::abs(beyond - alpha_j) <= kClosureTolerance) return Gsl2Kind::FinitePeriodic;
  return Gsl2Kind::TruncatedInfinite;
}

Job jsmap_verify(const Params& p, const Context&) {
  const CharFn fn = p.charfn("fn");
  const CharFn gn = partner(p, fn);
  const auto alpha0_spec = p.real_or_keyword("alpha0", {"mirror"});
  const auto alpha_j_spec = p.real_or_keyword("alphaj", {"cut", "mirror"});
  if (std::holds_alternative<std::string>(alpha0_spec) && std::holds_alternative<std::string>(alpha_j_spec) &&
      std::get<std::string>(alpha_j_spec) == "mirror") {
    p.fail("alphaj", "alpha0 and alphaj cannot both mirror each other");
  }
  const std::size_t twice_j = p.twice_j("j");
  if (twice_j == 0) p.fail("j", "verification needs j >= 1/2");
  const std::size_t dim = twice_j + 1;
  const double tol = p.positive_real_or("tol", kDefaultTol);
  const auto perturb = p.matrix_perturbations(
      "perturb", {"S_z", "S_plus", "S_minus", "S_sq", "J0", "Jplus", "Jminus", "C"}, dim);
  const auto ladder = p.ladder_perturbations("perturb-ladder", dim - 1);
  return {"jsmap verify", [=] {
            double alpha_j = 0.0;
            if (const double* v = std::get_if<double>(&alpha_j_spec)) {
              alpha_j = *v;
            } else if (std::get<std::string>(alpha_j_spec) == "cut") {
              const CutSolutions cut = cut_condition_solve(gn, dim);
              if (cut.included.empty()) {
                throw Error(ErrorCode::InvalidArgument, "no admissible cut root for d = " + std::to_string(dim));
              }
              alpha_j = cut.included.front();
            } else {
              alpha_j = -std::get<double>(alpha0_spec);
            }
            const double alpha0 = std::holds_alternative<double>(alpha0_spec) ? std::get<double>(alpha0_spec)
                                                                              : -alpha_j;

            const Gsl2Kind kind = detect_kind(gn, alpha_j, dim);
            const Gsl2Rep rep = build_gsl2(gn, alpha_j, dim, kind);
            GhaRep gha = build_gha(fn, alpha0, dim);
            for (const LadderPerturbation& l : ladder) gha = gha.with_ladder_offset(l.index, l.delta);
            const JsMapRep js = build_jsmap(TwoOscillatorSpace::fixed_j(gha, twice_j), gn, alpha_j);

            Gsl2Operators s_side = js.operators();
            OperatorMatrix s_sq = js.S_sq();
            Gsl2Operators j_side = gsl2_operators(rep);
            OperatorMatrix casimir = casimir_gsl2(rep);
            apply_perturbations(perturb, {{"S_z", &s_side.J0}, {"S_plus", &s_side.Jplus},
                                          {"S_minus", &s_side.Jminus}, {"S_sq", &s_sq}, {"J0", &j_side.J0},
                                          {"Jplus", &j_side.Jplus}, {"Jminus", &j_side.Jminus},
                                          {"C", &casimir}});
            const ResidualReport map_report = compare_operator_sets(s_side, s_sq, j_side, casimir, tol);
            const ResidualReport relations = gsl2_relation_residuals(gn, s_side, rep.checked_columns(), tol);

            Outcome o;
            Json& r = o.result;
            r["fn"] = to_json(fn);
            r["gn"] = to_json(gn);
            r["alpha0"] = alpha0;
            r["alpha_j"] = alpha_j;
            r["twice_j"] = twice_j;
            r["kind"] = to_string(kind);
            r["cut_residual"] = rep.closure_residual() ? Json(*rep.closure_residual()) : Json(nullptr);
            r["map_vs_gsl2"] = to_json(map_report);
            r["relations"] = to_json(relations);
            const bool passed = map_report.passed() && relations.passed();
            r["passed"] = passed;
            o.verification_failed = !passed;
            return o;
          }, std::nullopt};
}

Job jsmap_pairing(const Params& p, const Context&) {
  const CharFn fn = p.charfn("fn");
  const double alpha0 = p.real("alpha0");
  const std::size_t m_max = p.count("mmax", 0);
  const double tol = p.positive_real_or("tol", kDefaultTol);
  return {"jsmap pairing", [=] {
            const CharFn gn = reflection_pair(fn);
            const double alpha_j = -alpha0;
            const ResidualReport report = verify_pairing_identity(fn, alpha0, gn, alpha_j, m_max, tol);
            Outcome o;
            o.result["fn"] = to_json(fn);
            o.result["alpha0"] = alpha0;
            o.result["gn"] = to_json(gn);
            o.result["alpha_j"] = alpha_j;
            o.result["mmax"] = m_max;
            o.result["report"] = to_json(report);
            o.verification_failed = !report.passed();
            return o;
          }, std::nullopt};
}

// --- orbit -----------------------------------------------------------------

Job orbit_figure(const Params& p, const Context& ctx) {
  const std::string name = p.text("name");
  const std::optional<Figure> figure = parse_figure(name);
  if (!figure) p.fail("name", "expected fig1, fig2, fig3 or fig4");
  CobwebOptions opts;
  opts.samples = p.count_or("samples", 2, opts.samples);
  opts.divergence_bound = ctx.divergence_bound;
  const auto dir = out_dir(p, ctx);
  return {"orbit figure", [=, figure = *figure] {
            Outcome o;
            o.result["figure"] = name;
            Json series = Json::array();
            for (const OrbitReport& report : figure_bundle(figure, opts)) {
              series.push_back(to_json(report));
              add_orbit_files(o, dir, name, report);
            }
            o.result["series"] = std::move(series);
            return o;
          }, dir};
}

Job orbit_cobweb(const Params& p, const Context& ctx) {
  const CharFn fn = p.charfn("fn");
  const double x0 = p.real("x0");
  const std::size_t steps = p.count("steps", 1);
  const std::optional<double> lo = p.optional_real("lo");
  const std::optional<double> hi = p.optional_real("hi");
  if (lo.has_value() != hi.has_value()) p.fail(lo ? "hi" : "lo", "--lo and --hi go together");
  if (lo && !(*lo < *hi)) p.fail("hi", "must exceed --lo");
  const std::string series = p.optional_text("series").value_or("orbit");
  if (series.empty() || series.find_first_of("/\\") != std::string::npos) p.fail("series", "invalid name");
  CobwebOptions opts;
  opts.samples = p.count_or("samples", 2, opts.samples);
  opts.divergence_bound = ctx.divergence_bound;
  const auto dir = out_dir(p, ctx);
  return {"orbit cobweb", [=] {
            PlotWindow window;
            if (lo) {
              window = {*lo, *hi};
            } else {
              std::vector<double> landmarks{x0, evaluate(fn, x0)};
              try {
                for (const FixedPointInfo& fp : fixed_points(fn)) landmarks.push_back(fp.location);
              } catch (const Error& e) {
                if (e.code() != ErrorCode::NoRealFixedPoint) throw;
              }
              if (fn.is_quadratic()) landmarks.push_back(invertibility_boundary(fn));
              std::erase_if(landmarks, [](double v) { return !std::isfinite(v); });
              window = padded_window(landmarks);
            }
            OrbitReport report = cobweb(fn, x0, steps, window, opts);
            report.series = series;
            Outcome o;
            o.result = to_json(report);
            add_orbit_files(o, dir, "cobweb", report);
            return o;
          }, dir};
}

using Validator = Job (*)(const Params&, const Context&);

const std::map<std::string, Validator>& validators() {
  static const std::map<std::string, Validator> table{
      {"charfun analyze", charfun_analyze}, {"gha build", gha_build},         {"gsl2 build", gsl2_build},
      {"gsl2 cut", gsl2_cut},               {"gsl2 periodic", gsl2_periodic}, {"jsmap build", jsmap_build},
      {"jsmap verify", jsmap_verify},       {"jsmap pairing", jsmap_pairing}, {"orbit figure", orbit_figure},
      {"orbit cobweb", orbit_cobweb},
  };
  return table;
}

// --- batch -----------------------------------------------------------------

struct BatchJob {
  Job job;
  std::optional<fs::path> output;
};

struct BatchResult {
  int exit_code = 0;
  Json result;
  std::string error;
};

fs::path normalized(const fs::path& p) { return fs::absolute(p).lexically_normal(); }

std::vector<BatchJob> validate_config(const fs::path& config_path, double divergence_bound) {
  std::ifstream in(config_path, std::ios::binary);
  if (!in) throw ValidationError("cannot read config '" + config_path.string() + "'");
  Json config;
  try {
    config = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ValidationError("config '" + config_path.string() + "' is not valid JSON: " + e.what());
  }
  if (!config.is_object() || !config.contains("jobs") || !config["jobs"].is_array()) {
    throw ValidationError("config must be an object with a \"jobs\" array");
  }
  for (const auto& item : config.items()) {
    if (item.key() != "jobs") throw ValidationError("config: unknown key '" + item.key() + "'");
  }

  const Context ctx{divergence_bound, config_path.parent_path()};
  std::vector<BatchJob> jobs;
  std::map<fs::path, std::size_t> claimed;
  const auto claim = [&](const fs::path& path, std::size_t index) {
    const auto [it, inserted] = claimed.emplace(normalized(path), index);
    if (!inserted) {
      throw ValidationError("job " + std::to_string(index) + ": output path '" + path.string() +
                            "' is already declared by job " + std::to_string(it->second));
    }
  };

  std::size_t index = 0;
  for (const Json& entry : config["jobs"]) {
    const std::string where = "job " + std::to_string(index);
    if (!entry.is_object()) throw ValidationError(where + ": must be an object");
    for (const auto& item : entry.items()) {
      if (item.key() != "command" && item.key() != "params" && item.key() != "output") {
        throw ValidationError(where + ": unknown key '" + item.key() + "'");
      }
    }
    if (!entry.contains("command") || !entry["command"].is_string()) {
      throw ValidationError(where + ": \"command\" must be a string");
    }
    const std::string command = entry["command"].get<std::string>();
    const Json params = entry.contains("params") ? entry["params"] : Json::object();
    BatchJob bj{validate_job(command, params, ctx), std::nullopt};
    if (entry.contains("output")) {
      if (!entry["output"].is_string() || entry["output"].get<std::string>().empty()) {
        throw ValidationError(where + ": \"output\" must be a non-empty path");
      }
      bj.output = resolve(ctx, entry["output"].get<std::string>());
      claim(*bj.output, index);
    }
    if (bj.job.out_dir) claim(*bj.job.out_dir, index);
    jobs.push_back(std::move(bj));
    ++index;
  }
  // An output file must not sit inside another job's CSV directory either.
  for (const auto& [path, owner] : claimed) {
    for (const BatchJob& other : jobs) {
      if (!other.job.out_dir) continue;
      const fs::path dir = normalized(*other.job.out_dir);
      if (path != dir && path.parent_path() == dir) {
        throw ValidationError("job " + std::to_string(owner) + ": output '" + path.string() +
                              "' lies inside another job's --out directory");
      }
    }
  }
  return jobs;
}

BatchResult execute(const BatchJob& bj) {
  BatchResult r;
  try {
    Outcome o = bj.job.run();
    std::vector<OutputFile> files = std::move(o.files);
    if (bj.output) files.push_back({*bj.output, o.result.dump(2) + "\n"});
    write_outputs(files);
    r.exit_code = o.verification_failed ? 2 : 0;
    r.result = std::move(o.result);
  } catch (const std::exception& e) {
    r.exit_code = 1;
    r.error = e.what();
  }
  return r;
}

int run_batch(const fs::path& config_path, double divergence_bound, std::ostream& out) {
  const std::vector<BatchJob> jobs = validate_config(config_path, divergence_bound);
  std::vector<BatchResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  const std::size_t workers =
      std::min<std::size_t>(jobs.size(), std::max(1u, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = execute(jobs[i]);
      });
    }
  }

  int exit_code = 0;
  Json summary = Json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Json entry;
    entry["command"] = jobs[i].job.command;
    entry["exit_code"] = results[i].exit_code;
    if (jobs[i].output) entry["output"] = jobs[i].output->generic_string();
    if (!results[i].error.empty()) {
      entry["error"] = results[i].error;
    } else if (!jobs[i].output) {
      entry["result"] = std::move(results[i].result);
    }
    summary.push_back(std::move(entry));
    exit_code = std::max(exit_code, results[i].exit_code);
  }
  out << Json{{"jobs", std::move(summary)}, {"exit_code", exit_code}}.dump(2) << "\n";
  return exit_code;
}

}  // namespace

const std::vector<CommandSpec>& command_specs() {
  using enum FlagKind;
  static const FlagSpec fn{"fn", Value, "characteristic function f as JSON"};
  static const FlagSpec gn{"gn", Value, "characteristic function g as JSON"};
  static const FlagSpec out{"out", Text, "directory for CSV output"};
  static const FlagSpec tol{"tol", Value, "residual tolerance (default 1e-10)"};
  static const std::vector<FlagSpec> scan{{"step", Value, "scan grid step (default 1e-4)"},
                                          {"half-width", Value, "scan half-width around the boundary (default 100)"},
                                          {"root-tol", Value, "root tolerance (default 1e-12)"}};
  const auto with = [](std::vector<FlagSpec> a, const std::vector<FlagSpec>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  static const std::vector<CommandSpec> specs{
      {"charfun", "analyze", "fixed points, discriminant, boundary and region of x0",
       {fn, {"x0", Value, "starting point to classify"}}},
      {"gha", "build", "GHA representation, matrices and relation residuals",
       {fn, {"alpha0", Value, "vacuum eigenvalue"}, {"dim", Value, "number of states"},
        {"verify", Switch, "check the algebra relations"}, tol, out,
        {"perturb", Repeated, "MATRIX:ROW:COL:DELTA added before verification (H, A, Adag)"},
        {"perturb-ladder", Repeated, "IDX:DELTA added to ladder value M_IDX"}}},
      {"gsl2", "build", "G-sl(2) representation, matrices and relation residuals",
       {gn, {"alphaj", Value, "highest weight"}, {"dim", Value, "number of states"},
        {"kind", Text, "periodic, cut or truncated"}, {"verify", Switch, "check the algebra relations"}, tol,
        {"closure-tol", Value, "closure condition tolerance (default 1e-9)"}, out,
        {"perturb", Repeated, "MATRIX:ROW:COL:DELTA added before verification (J0, Jplus, Jminus)"},
        {"perturb-ladder", Repeated, "IDX:DELTA added to squared ladder value IDX"}}},
      {"gsl2", "cut", "roots of the cut condition alpha + g^(d)(alpha) + 1 = 0",
       with({gn, {"d", Value, "representation dimension"}}, scan)},
      {"gsl2", "periodic", "roots of the periodicity condition g^(d)(alpha) = alpha",
       with({gn, {"d", Value, "period"}}, scan)},
      {"jsmap", "build", "two-oscillator realization S_z, S+, S-, S^2",
       {fn, {"alpha0", Value, "vacuum eigenvalue"}, {"gn", Value, "g as JSON (default: reflection partner of f)"},
        {"alphaj", Value, "highest weight"}, {"j", Value, "shell j as p/q (designated shell with --full-grid)"},
        {"full-grid", Value, "use every n1, n2 < D instead of one shell"}, out}},
      {"jsmap", "verify", "compare the realization with the G-sl(2) matrices",
       {fn, {"alpha0", Value, "vacuum eigenvalue, or 'mirror' for -alphaj"},
        {"gn", Value, "g as JSON (default: reflection partner of f)"},
        {"alphaj", Value, "highest weight, 'cut' for the cut root or 'mirror' for -alpha0"},
        {"j", Value, "shell j as p/q"}, tol,
        {"perturb", Repeated, "MATRIX:ROW:COL:DELTA (S_z, S_plus, S_minus, S_sq, J0, Jplus, Jminus, C)"},
        {"perturb-ladder", Repeated, "IDX:DELTA added to the oscillator ladder value M_IDX"}}},
      {"jsmap", "pairing", "pairing identity for f and its reflection partner",
       {fn, {"alpha0", Value, "vacuum eigenvalue"}, {"mmax", Value, "largest Gauss number index"}, tol}},
      {"orbit", "figure", "cobweb data for one of the reference figures",
       {{"name", Text, "fig1, fig2, fig3 or fig4"}, out, {"samples", Value, "curve samples (default 512)"}}},
      {"orbit", "cobweb", "cobweb data for any characteristic function",
       {fn, {"x0", Value, "starting point"}, {"steps", Value, "number of iterations"},
        {"lo", Value, "window lower end"}, {"hi", Value, "window upper end"},
        {"samples", Value, "curve samples (default 512)"}, {"series", Text, "series name used in file names"},
        out}},
  };
  return specs;
}

Job validate_job(const std::string& command, const Json& params, const Context& ctx) {
  const auto it = validators().find(command);
  if (it == validators().end()) throw ValidationError("unknown command '" + command + "'");
  const Params p(command, params, allowed_keys(command));
  return it->second(p, ctx);
}

void write_outputs(const std::vector<OutputFile>& files) {
  for (const OutputFile& f : files) {
    if (f.path.has_parent_path()) fs::create_directories(f.path.parent_path());
    std::ofstream os(f.path, std::ios::binary | std::ios::trunc);
    os << f.content;
    if (!os) throw std::runtime_error("cannot write '" + f.path.string() + "'");
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Heisenberg algebra, generalized sl(2) and two-oscillator realizations"};
  app.name("gjs");
  app.require_subcommand(1);

  struct Leaf {
    const CommandSpec* spec;
    CLI::App* app;
  };
  std::vector<Leaf> leaves;
  std::map<std::string, std::string> values;
  std::map<std::string, std::vector<std::string>> repeated;
  std::map<std::string, bool> switches;
  std::map<std::string, CLI::App*> groups;

  for (const CommandSpec& spec : command_specs()) {
    CLI::App*& group = groups[spec.group];
    if (group == nullptr) {
      group = app.add_subcommand(spec.group, spec.group + " operations");
      group->require_subcommand(1);
    }
    CLI::App* leaf = group->add_subcommand(spec.name, spec.help);
    for (const FlagSpec& f : spec.flags) {
      const std::string key = spec.full_name() + "/" + f.name;
      switch (f.kind) {
        case FlagKind::Value:
        case FlagKind::Text: leaf->add_option("--" + f.name, values[key], f.help); break;
        case FlagKind::Switch: leaf->add_flag("--" + f.name, switches[key], f.help); break;
        case FlagKind::Repeated: leaf->add_option("--" + f.name, repeated[key], f.help); break;
      }
    }
    leaves.push_back({&spec, leaf});
  }
  std::string config;
  CLI::App* run = app.add_subcommand("run", "run a batch of jobs from a JSON config");
  run->add_option("--config", config, "path to the run config")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const double bound = divergence_bound_from_env();
    if (run->parsed()) return run_batch(config, bound, out);

    for (const Leaf& leaf : leaves) {
      if (!leaf.app->parsed()) continue;
      Json params = Json::object();
      for (const FlagSpec& f : leaf.spec->flags) {
        const std::string key = leaf.spec->full_name() + "/" + f.name;
        if (leaf.app->count("--" + f.name) == 0) continue;
        switch (f.kind) {
          case FlagKind::Value: params[f.name] = flag_value(values[key]); break;
          case FlagKind::Text: params[f.name] = values[key]; break;
          case FlagKind::Switch: params[f.name] = switches[key]; break;
          case FlagKind::Repeated: params[f.name] = repeated[key]; break;
        }
      }
      const Job job = validate_job(leaf.spec->full_name(), params, Context{bound, {}});
      Outcome o = job.run();
      write_outputs(o.files);
      out << o.result.dump(2) << "\n";
      return o.verification_failed ? 2 : 0;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no command given\n";
  return 1;
}

}  // namespace gjs::cli
