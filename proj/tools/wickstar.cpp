// wickstar: evaluate star products, run the verification suite, run rigidity experiments.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "wickstar/json_io.hpp"
#include "wickstar/rigidity.hpp"
#include "wickstar/star.hpp"
#include "wickstar/surface.hpp"
#include "wickstar/verify.hpp"

#ifndef WICKSTAR_SPEC_DIR
#define WICKSTAR_SPEC_DIR "specs"
#endif

using namespace wickstar;

namespace {

enum Exit { ok = 0, check_failed = 1, input_error = 2, no_convergence = 3, internal_error = 4 };

int fail_json(int code, const std::string& kind, const std::string& message) {
  std::cout << json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << "\n";
  return code;
}

Complex complex_arg(const std::string& text) {
  const auto comma = text.find(',');
  if (!text.empty() && text.front() == '[') return complex_from_json(parse_loose(text));
  try {
    if (comma != std::string::npos) return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    return {std::stod(text), 0.0};
  } catch (const std::exception&) {
    throw InputError("cannot read complex number \"" + text + "\"");
  }
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(); }

// ---- star eval --------------------------------------------------------------

struct StarArgs {
  std::string surface = "disk";
  std::string f = "1", g = "1";
  std::string hbar;
  std::vector<std::string> at, w;
  double R = 2.0;
  unsigned max_terms = 64;
  double tol = 1e-12;
  std::string mode = "truncated";
  std::string weight = "derived";
};

int cmd_star_eval(const StarArgs& a) {
  StarConfig cfg;
  cfg.max_terms = a.max_terms;
  cfg.tol = a.tol;
  cfg.mode = a.mode == "exact" ? StarMode::exact_finite : StarMode::truncated;
  const Hbar h(complex_arg(a.hbar));
  const PuncturedWeight weight = a.weight == "printed" ? PuncturedWeight::printed : PuncturedWeight::derived;

  json results = json::array();
  bool all_converged = true;
  auto push = [&](const json& point, const StarResult& r) {
    json e = star_result_to_json(r);
    e.insert(point.begin(), point.end());
    results.push_back(std::move(e));
    all_converged = all_converged && r.converged;
  };

  if (a.surface == "disk") {
    if (!a.w.empty()) throw InputError("--w applies to annulus and punctured surfaces");
    const DiskFunction f = disk_from_json(parse_loose(a.f));
    const DiskFunction g = disk_from_json(parse_loose(a.g));
    for (const auto& s : a.at) {
      const Complex z = complex_arg(s);
      push({{"z", complex_to_json(z)}}, star_disk(f, g, h, z, cfg));
    }
  } else {
    const EntireFn g = entire_from_json(parse_loose(a.f));
    const EntireFn gt = entire_from_json(parse_loose(a.g));
    const bool annulus = a.surface == "annulus";
    auto eval = [&](Complex w) {
      return annulus ? star_annulus(g, gt, h, w, cfg) : star_punctured(g, gt, h, w, cfg, weight);
    };
    for (const auto& s : a.at) {
      const Complex z = complex_arg(s);
      const Complex w = annulus ? chart_f_R(a.R, z) : chart_f_0(z);
      push({{"z", complex_to_json(z)}, {"w", complex_to_json(w)}}, eval(w));
    }
    for (const auto& s : a.w) {
      const Complex w = complex_arg(s);
      push({{"w", complex_to_json(w)}}, eval(w));
    }
  }
  if (results.empty()) throw InputError("no evaluation point given (--at or --w)");

  json out = {{"surface", a.surface}, {"hbar", complex_to_json(h.value())}, {"results", results}};
  if (a.surface == "annulus") out["R"] = a.R;
  if (!all_converged) {
    out["error"] = {{"kind", "non_convergence"},
                    {"message", "series did not meet the tolerance within max_terms"}};
    std::cout << out.dump(2) << "\n";
    return no_convergence;
  }
  std::cout << out.dump(2) << "\n";
  return ok;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> suites;
  std::uint64_t seed = 42;
  double tol = std::numeric_limits<double>::quiet_NaN();
  std::string mode = "exact";
  bool inject_printed = false;
  bool timing = false;
  std::string out;
};

int cmd_verify(const VerifyArgs& a) {
  VerifyOptions opt;
  opt.suites = a.suites;
  opt.ctx.seed = a.seed;
  opt.ctx.exact = a.mode == "exact";
  if (!std::isnan(a.tol)) opt.ctx.tol = a.tol;
  opt.ctx.inject_printed = a.inject_printed;
  opt.timing = a.timing;
  const SuiteReport rep = run_verify(opt);
  const std::string text = rep.to_json().dump(2) + "\n";
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(a.out, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + a.out);
    os << text;
  }
  return rep.all_pass() ? ok : check_failed;
}

// ---- rigidity ---------------------------------------------------------------

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

json load_spec(const std::string& file, const std::string& bundled) {
  std::string path = file;
  if (!bundled.empty()) path = std::string(WICKSTAR_SPEC_DIR) + "/" + bundled + ".json";
  std::ifstream is(path);
  if (!is) throw InputError("cannot open experiment spec " + path);
  try {
    return json::parse(is);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid experiment spec: ") + e.what());
  }
}

GFunction kernel_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "scaling_kernel") return scaling_kernel(entire_from_json(j.at("g")));
  if (type == "translation_kernel") return translation_kernel(entire_from_json(j.at("g")));
  if (type == "fpq") return fpq_on_g(j.at("p").get<int>(), j.at("q").get<int>());
  if (type == "z") return {"z", [](const GPoint& P) { return P.z().value(); }};
  throw InputError("unknown function type \"" + type + "\"");
}

int cmd_rigidity(const std::string& file, const std::string& bundled, const std::string& csv) {
  const json spec = load_spec(file, bundled);
  if (!spec.contains("experiment")) throw InputError("experiment spec needs an \"experiment\" field");
  const std::string kind = spec.at("experiment").get<std::string>();
  const json expect = spec.value("expect", json::object());
  json out = {{"name", spec.value("name", kind)}, {"experiment", kind}};
  bool met = true;

  if (kind == "invariant_dimension") {
    const std::string group = spec.at("group").get<std::string>();
    const int degree = spec.at("degree").get<int>();
    const auto n = get_or<std::size_t>(spec, "samples", 200);
    const auto seed = get_or<std::uint64_t>(spec, "seed", 1);
    InvarianceExperiment e;
    if (group == "two_hyperbolic")
      e = two_hyperbolic_experiment(degree, n, seed);
    else if (group == "elliptic")
      e = elliptic_experiment(spec.at("N").get<int>(), degree, n, seed);
    else if (group == "scaling_kernels")
      e = scaling_kernel_experiment(degree, n, seed);
    else
      throw InputError("unknown group \"" + group + "\"");
    e.svd_tol = get_or<double>(spec, "svd_tol", 1e-8);
    const InvarianceResult r = invariant_dimension(e);
    json labels = json::array();
    for (std::size_t k : r.invariant_indices) labels.push_back(e.basis[k].label);
    out["dimension"] = r.dimension;
    out["gap"] = finite_or_null(r.gap);
    out["singular_values"] = r.singular_values;
    out["invariant_indices"] = r.invariant_indices;
    out["invariant_basis"] = labels;
    out["evaluation_condition"] = r.evaluation_condition;
    out["evaluation_rank_deficient"] = r.evaluation_rank_deficient;
    out["rows"] = r.rows;
    if (expect.contains("dimension")) met = met && expect.at("dimension").get<int>() == r.dimension;
    if (expect.contains("invariant_indices"))
      met = met && expect.at("invariant_indices").get<std::vector<std::size_t>>() == r.invariant_indices;
    if (expect.contains("min_gap")) met = met && !(r.gap < expect.at("min_gap").get<double>());
    if (!csv.empty()) {
      std::ofstream os(csv);
      if (!os) throw std::runtime_error("cannot write " + csv);
      os << "index,singular_value\n";
      os.precision(17);
      for (std::size_t k = 0; k < r.singular_values.size(); ++k) os << k << "," << r.singular_values[k] << "\n";
    }
  } else if (kind == "obstruction") {
    std::vector<Complex> hs;
    for (const auto& h : spec.at("hbars")) hs.push_back(complex_from_json(h));
    const ObstructionReport r = obstruction_check(spec.at("R").get<double>(), hs, spec.at("degree").get<int>(),
                                                  get_or<std::size_t>(spec, "points", 12),
                                                  get_or<double>(spec, "tol", 1e-8), get_or<std::uint64_t>(spec, "seed", 7));
    out["verdict"] = to_string(r.verdict);
    out["alpha"] = complex_to_json(r.alpha);
    out["beta"] = complex_to_json(r.beta);
    out["residuals"] = r.residuals;
    out["hbar2_nullspace_dim"] = r.hbar2_nullspace_dim;
    out["hbar2_margin"] = r.hbar2_margin;
    out["fit_condition"] = r.fit_condition;
    out["note"] = r.note;
    if (expect.contains("verdict")) met = met && expect.at("verdict").get<std::string>() == to_string(r.verdict);
  } else if (kind == "fixed_point_demo") {
    const auto m = spec.at("gamma").get<std::vector<double>>();
    if (m.size() != 4) throw InputError("gamma is [a, b, c, d] of a real Moebius map");
    const MoebiusMap gamma = half_plane_automorphism(m[0], m[1], m[2], m[3]);
    std::mt19937_64 rng(get_or<std::uint64_t>(spec, "seed", 1));
    const auto samples = sample_g_points(rng, get_or<std::size_t>(spec, "samples", 50));
    const FixedPointDemo d = hyperbolic_fixed_point_demo(gamma, kernel_from_json(spec.at("function")),
                                                         spec.at("order").get<unsigned>(),
                                                         complex_from_json(spec.at("w0")), samples,
                                                         get_or<double>(spec, "invariance_tol", 1e-10));
    out["refused"] = d.refused;
    out["invariance_residual"] = d.invariance_residual;
    if (!d.refused) {
      out["fixed_point"] = d.fixed_point.is_infinity() ? json("infinity") : complex_to_json(d.fixed_point.value());
      out["derivative_magnitudes"] = d.derivative_magnitudes;
    }
    if (!d.message.empty()) out["message"] = d.message;
    if (expect.contains("refused")) met = met && expect.at("refused").get<bool>() == d.refused;
  } else {
    throw InputError("unknown experiment \"" + kind + "\"");
  }
  if (!expect.empty()) out["expectation_met"] = met;
  std::cout << out.dump(2) << "\n";
  return met ? ok : check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wick-type star products on the disk, annuli and the punctured disk"};
  app.require_subcommand(1);

  auto* star = app.add_subcommand("star", "star products");
  star->require_subcommand(1);
  auto* eval = star->add_subcommand("eval", "evaluate a product at points");
  StarArgs sa;
  eval->add_option("--surface", sa.surface, "disk | annulus | punctured")
      ->check(CLI::IsMember({"disk", "annulus", "punctured"}));
  eval->add_option("--f", sa.f, "first factor (JSON or shorthand)");
  eval->add_option("--g", sa.g, "second factor (JSON or shorthand)");
  eval->add_option("--hbar", sa.hbar, "deformation parameter, re or re,im or [re,im]")->required();
  // one point per flag; repeat the flag for more points
  eval->add_option("--at", sa.at, "point on the surface (disk: z), repeatable")->allow_extra_args(false);
  eval->add_option("--w", sa.w, "chart value w (annulus / punctured), repeatable")->allow_extra_args(false);
  eval->add_option("--R", sa.R, "annulus modulus");
  eval->add_option("--max-terms", sa.max_terms);
  eval->add_option("--tol", sa.tol);
  eval->add_option("--mode", sa.mode)->check(CLI::IsMember({"truncated", "exact"}));
  eval->add_option("--weight", sa.weight, "punctured weight")->check(CLI::IsMember({"derived", "printed"}));

  auto* verify = app.add_subcommand("verify", "run the identity checks");
  VerifyArgs va;
  verify->add_option("--suite", va.suites, "check name (repeatable); default all");
  verify->add_option("--seed", va.seed);
  verify->add_option("--tol", va.tol, "override every check threshold");
  verify->add_option("--mode", va.mode)->check(CLI::IsMember({"exact", "float"}));
  verify->add_flag("--inject-printed-exponent", va.inject_printed, "use the constant w^2 punctured weight");
  verify->add_flag("--timing", va.timing, "record runtime_ms (reports are no longer reproducible)");
  verify->add_option("--out", va.out, "write the report to a file");
  verify->add_flag_callback("--list", [] {
    for (const auto& n : check_names()) std::cout << n << "\n";
    std::exit(0);
  });

  auto* rig = app.add_subcommand("rigidity", "run an invariance / obstruction experiment");
  std::string spec_file, bundled, csv;
  auto* spec_opt = rig->add_option("--spec", spec_file, "experiment JSON file");
  auto* bundled_opt = rig->add_option("--bundled", bundled, "bundled experiment name");
  spec_opt->excludes(bundled_opt);
  rig->add_option("--csv", csv, "write the singular-value spectrum as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : input_error;
  }

  try {
    if (eval->parsed()) return cmd_star_eval(sa);
    if (verify->parsed()) return cmd_verify(va);
    if (rig->parsed()) {
      if (spec_file.empty() && bundled.empty()) throw InputError("rigidity needs --spec or --bundled");
      return cmd_rigidity(spec_file, bundled, csv);
    }
  } catch (const DomainError& e) {
    return fail_json(input_error, "domain", e.what());
  } catch (const InputError& e) {
    return fail_json(input_error, "input", e.what());
  } catch (const json::exception& e) {
    return fail_json(input_error, "input", e.what());
  } catch (const std::invalid_argument& e) {
    return fail_json(input_error, "input", e.what());
  } catch (const RepresentationError& e) {
    return fail_json(input_error, "representation", e.what());
  } catch (const ConditioningError& e) {
    return fail_json(no_convergence, "conditioning", e.what());
  } catch (const std::exception& e) {
    return fail_json(internal_error, "internal", e.what());
  }
  return internal_error;
}
