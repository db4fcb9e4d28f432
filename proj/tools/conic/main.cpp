// conic: command-line front end for the cone Poisson toolkit.
#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "conic/builtins.hpp"
#include "conic/dyadic.hpp"
#include "conic/errors.hpp"
#include "conic/expansion.hpp"
#include "conic/norms.hpp"
#include "conic/schauder.hpp"
#include "conic/tpoly.hpp"
#include "conic/version.hpp"
#include "verify.hpp"

namespace {

using nlohmann::ordered_json;

struct Global {
  std::string beta = "1";
  std::uint64_t seed = 20240611;
  std::string out;
  std::string format = "json";
  int xi_dim = 0;
};

// Inputs read during the run, by path, for the manifest.
std::map<std::string, std::string> g_input_hashes;

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw conic::ParseError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  g_input_hashes[path] = "fnv1a64:" + fnv1a(buf.str());
  return buf.str();
}

void write_output(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream os(g.out, std::ios::binary);
  if (!os) throw conic::ParseError("cannot write '" + g.out + "'");
  os << text;
  if (!text.empty() && text.back() != '\n') os << '\n';
}

void write_side_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw conic::ParseError("cannot write '" + path + "'");
  os << text;
}

bool is_csv_path(const std::string& s) { return s.size() > 4 && s.substr(s.size() - 4) == ".csv"; }

conic::ConeParam cone_params(const Global& g) { return conic::ConeParam(conic::parse_rational(g.beta), g.xi_dim); }

// Builtin spec or mode-field CSV.
conic::ConeFunction cone_input(const std::string& spec, const conic::ConeParam& params) {
  if (is_csv_path(spec)) {
    const auto mf = conic::mode_field_from_csv(read_file(spec), params);
    return conic::as_function(mf);
  }
  if (spec.rfind("tpoly:", 0) == 0) read_file(spec.substr(6));
  return conic::cone_field(spec, params);
}

conic::FPolynomial read_polynomial(const std::string& path) { return conic::from_json(read_file(path)); }

std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string polynomial_output(const conic::FPolynomial& p, const Global& g) {
  if (g.format == "json") return conic::to_json(p);
  std::ostringstream os;
  os << "coeff,gamma,m,trig,sigma\n";
  for (const auto& [k, c] : p.terms()) {
    os << conic::to_string(c) << ',' << conic::to_string(k.gamma) << ',' << k.m << ',' << conic::to_string(k.trig) << ',';
    for (std::size_t i = 0; i < k.sigma.size(); ++i) os << (i ? ";" : "") << k.sigma[i];
    os << '\n';
  }
  return os.str();
}

std::string report_output(const conic::NormReport& r, const Global& g) {
  if (g.format == "json") return conic::to_json(r);
  std::ostringstream os;
  os << "clause,value\n";
  for (const auto& c : r.clauses) os << c.name << ',' << csv_number(c.value) << '\n';
  os << "total," << csv_number(r.total) << '\n';
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poisson equation, harmonic expansions and Hoelder-type norms on the cone X_beta"};
  app.set_version_flag("--version", std::string(conic::kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--beta", g.beta, "cone parameter beta as p/q")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized inputs")->capture_default_str();
  app.add_option("--out", g.out, "output path (stdout when empty); a .manifest.json sidecar is written next to it");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--xi-dim", g.xi_dim, "number of xi coordinates")->check(CLI::NonNegativeNumber)->capture_default_str();

  ordered_json params;
  int exit_code = 0;

  // tpoly
  auto* tpoly = app.add_subcommand("tpoly", "T-polynomial calculus (JSON polynomial files)");
  std::string t_op;
  std::string t_in;
  std::string t_with;
  std::string t_q;
  std::string t_point;
  std::string t_degree = "4";
  int t_sigma = 2;
  int t_terms = 5;
  tpoly->add_option("op", t_op, "laplacian | solve | truncate | evaluate | degree | validate | multiply | random")
      ->required()
      ->check(CLI::IsMember({"laplacian", "solve", "truncate", "evaluate", "degree", "validate", "multiply", "random"}));
  tpoly->add_option("--in", t_in, "polynomial JSON file");
  tpoly->add_option("--with", t_with, "second polynomial for multiply");
  tpoly->add_option("--q", t_q, "truncation order (p/q)");
  tpoly->add_option("--point", t_point, "evaluation point rho,theta,xi1,...");
  tpoly->add_option("--degree", t_degree, "random: maximal degree (p/q)")->capture_default_str();
  tpoly->add_option("--max-sigma", t_sigma, "random: maximal |sigma|")->capture_default_str();
  tpoly->add_option("--terms", t_terms, "random: maximal number of terms")->capture_default_str();

  // dyadic
  auto* dyadic = app.add_subcommand("dyadic", "dyadic-annulus solution of Delta u = f with u = O(d^{q+2})");
  conic::DyadicConfig dcfg;
  std::string d_f = "power:0.5:1";
  std::string d_diag;
  dyadic->add_option("--q", dcfg.q, "order of f")->capture_default_str();
  dyadic->add_option("--levels", dcfg.levels, "number of dyadic levels L")->capture_default_str();
  dyadic->add_option("--modes", dcfg.max_mode, "highest angular mode M")->capture_default_str();
  dyadic->add_option("--ppo", dcfg.points_per_octave, "radial points per octave")->capture_default_str();
  dyadic->add_option("--radius", dcfg.radius, "outer radius R")->capture_default_str();
  dyadic->add_option("--f", d_f, "builtin field or mode-field CSV")->capture_default_str();
  dyadic->add_option("--diag", d_diag, "Lemma 7.3 per-level diagnostics CSV");

  // expand-harmonic
  auto* expand = app.add_subcommand("expand-harmonic", "harmonic extension of boundary data and its expansion at the apex");
  std::string e_boundary = "cos:1";
  double e_q = 2.5;
  double e_rho_star = 0.25;
  int e_modes = 16;
  int e_ppo = 64;
  std::string e_octaves = "-8:0";
  expand->add_option("--boundary", e_boundary, "boundary builtin (const:c, cos:k, sin:k, band:seed:M)")->capture_default_str();
  expand->add_option("--q", e_q, "expansion order")->capture_default_str();
  expand->add_option("--rho-star", e_rho_star, "extraction radius")->capture_default_str();
  expand->add_option("--modes", e_modes, "highest angular mode")->capture_default_str();
  expand->add_option("--ppo", e_ppo, "radial points per octave")->capture_default_str();
  expand->add_option("--grid-octaves", e_octaves, "grid span a:b, radii 2^a .. 2^b")->capture_default_str();

  // norm
  auto* norm = app.add_subcommand("norm", "UBE, U^q, Donaldson and comparison estimators");
  std::string n_kind;
  double n_q = 0.5;
  double n_alpha = 0.3;
  std::string n_u = "rho:2";
  std::string n_plan;
  double n_delta = 0.25;
  int n_dim = 2;
  norm->add_option("kind", n_kind, "ube | uq | donaldson | compare")
      ->required()
      ->check(CLI::IsMember({"ube", "uq", "donaldson", "compare"}));
  norm->add_option("--q", n_q, "order")->capture_default_str();
  norm->add_option("--alpha", n_alpha, "Hoelder exponent")->capture_default_str();
  norm->add_option("--u", n_u, "builtin or mode-field CSV (ube: R^n builtin)")->capture_default_str();
  norm->add_option("--plan", n_plan, "sampling plan JSON");
  norm->add_option("--delta", n_delta, "expansion scale of the default plan")->capture_default_str();
  norm->add_option("--dim", n_dim, "ube: dimension n of R^n")->capture_default_str();

  // schauder
  auto* schauder = app.add_subcommand("schauder", "end-to-end Schauder estimate for Delta u = f");
  conic::SchauderConfig scfg;
  std::string s_f;
  bool s_family = false;
  schauder->add_option("--q", scfg.q, "order of f")->capture_default_str();
  schauder->add_option("--f", s_f, "builtin f (default family:0:q)");
  schauder->add_flag("--family", s_family, "run the ten-member family instead of one f");
  schauder->add_option("--levels", scfg.levels, "dyadic levels")->capture_default_str();
  schauder->add_option("--modes", scfg.max_mode, "highest angular mode")->capture_default_str();
  schauder->add_option("--ppo", scfg.points_per_octave, "radial points per octave")->capture_default_str();
  schauder->add_option("--delta", scfg.delta, "expansion scale of the norm plans")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "property and acceptance suites");
  std::string v_suite = "all";
  std::optional<double> v_q;
  bool v_serial = false;
  verify->add_option("suite", v_suite, "symbolic | ube | expansion | dyadic | norms | schauder | all")
      ->capture_default_str()
      ->check(CLI::IsMember(conic::verify::suite_names()));
  verify->add_option("--q", v_q, "override the orders of the dyadic checks");
  verify->add_flag("--serial", v_serial, "run checks one after another");

  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  std::string command;
  try {
    if (tpoly->parsed()) {
      command = "tpoly";
      params = {{"op", t_op}, {"in", t_in}, {"with", t_with}, {"q", t_q}, {"point", t_point}};
      conic::FPolynomial p(cone_params(g));
      if (t_op == "random") {
        std::mt19937_64 rng(g.seed);
        p = conic::random_t_polynomial(cone_params(g), rng, conic::parse_rational(t_degree), t_sigma, t_terms);
        params["degree"] = t_degree;
        params["max_sigma"] = t_sigma;
        params["terms"] = t_terms;
        write_output(g, polynomial_output(p, g));
      } else {
        if (t_in.empty()) throw conic::ParameterError("--in is required");
        p = read_polynomial(t_in);
        if (t_op == "laplacian") {
          write_output(g, polynomial_output(conic::laplacian(p), g));
        } else if (t_op == "solve") {
          write_output(g, polynomial_output(conic::solve_poisson(p), g));
        } else if (t_op == "truncate") {
          if (t_q.empty()) throw conic::ParameterError("--q is required");
          write_output(g, polynomial_output(conic::truncate_below(p, conic::parse_rational(t_q)), g));
        } else if (t_op == "multiply") {
          if (t_with.empty()) throw conic::ParameterError("--with is required");
          write_output(g, polynomial_output(conic::multiply(p, read_polynomial(t_with)), g));
        } else if (t_op == "evaluate") {
          const auto x = conic::parse_point(t_point, p.params().xi_dim());
          const double v = conic::evaluate(p, x);
          write_output(g, g.format == "json" ? ordered_json{{"point", t_point}, {"value", v}}.dump(2)
                                             : "point,value\n\"" + t_point + "\"," + csv_number(v) + "\n");
        } else if (t_op == "degree") {
          const auto d = conic::degree(p);
          write_output(g, g.format == "json" ? ordered_json{{"degree", conic::to_string(d)}}.dump(2)
                                             : "degree\n" + conic::to_string(d) + "\n");
        } else {
          ordered_json flags = ordered_json::array();
          for (const auto& [key, ok] : conic::validity_flags(p)) {
            flags.push_back({{"gamma", conic::to_string(key.gamma)}, {"m", key.m}, {"trig", conic::to_string(key.trig)},
                             {"t_monomial", ok}});
          }
          write_output(g, ordered_json{{"t_polynomial", conic::is_t_polynomial(p)},
                                       {"xbeta_polynomial", conic::is_xbeta_polynomial(p)},
                                       {"terms", flags}}
                              .dump(2));
          if (!conic::is_t_polynomial(p)) exit_code = 1;
        }
      }
    } else if (dyadic->parsed()) {
      command = "dyadic";
      dcfg.params = cone_params(g);
      params = {{"q", dcfg.q}, {"levels", dcfg.levels}, {"modes", dcfg.max_mode}, {"ppo", dcfg.points_per_octave},
                {"radius", dcfg.radius}, {"f", d_f}, {"diag", d_diag}};
      dcfg.validate();
      const auto sol = conic::construct(cone_input(d_f, dcfg.params), dcfg);
      write_output(g, conic::to_csv(sol.u));
      if (!d_diag.empty()) write_side_file(d_diag, conic::diagnostics_csv(conic::level_diagnostics(sol)));
      ordered_json summary{{"f_seminorm", sol.f_seminorm},       {"u_seminorm", sol.u_seminorm},
                           {"seminorm_ratio", sol.seminorm_ratio}, {"max_residual", sol.max_residual},
                           {"truncation_error", sol.truncation_error}};
      std::cerr << summary.dump() << '\n';
    } else if (expand->parsed()) {
      command = "expand-harmonic";
      const auto params_cone = cone_params(g);
      params = {{"boundary", e_boundary}, {"q", e_q}, {"rho_star", e_rho_star}, {"modes", e_modes}, {"ppo", e_ppo},
                {"grid_octaves", e_octaves}};
      const auto colon = e_octaves.find(':');
      if (colon == std::string::npos) throw conic::ParseError("--grid-octaves expects a:b");
      const auto grid = conic::RadialGrid::octaves(std::stoi(e_octaves.substr(0, colon)), std::stoi(e_octaves.substr(colon + 1)),
                                                   e_ppo);
      const auto u = conic::solve_dirichlet(conic::boundary_field(e_boundary), params_cone, grid, e_modes);
      const auto ex = conic::extract_coeffs(u, e_q, e_rho_star);
      if (g.format == "json") {
        ordered_json coeffs = ordered_json::array();
        for (const auto& c : ex.coeffs) coeffs.push_back({{"k", c.k}, {"a", c.a}, {"b", c.b}, {"degree", c.degree}});
        write_output(g, ordered_json{{"beta", conic::to_string(ex.beta)},
                                     {"q", ex.q},
                                     {"rho_star", ex.rho_star},
                                     {"coefficients", coeffs},
                                     {"remainder_seminorm", ex.remainder_seminorm}}
                            .dump(2));
      } else {
        std::ostringstream os;
        os << "k,a,b,degree\n";
        for (const auto& c : ex.coeffs) {
          os << c.k << ',' << csv_number(c.a) << ',' << csv_number(c.b) << ',' << csv_number(c.degree) << '\n';
        }
        write_output(g, os.str());
      }
    } else if (norm->parsed()) {
      command = "norm";
      params = {{"kind", n_kind}, {"q", n_q}, {"alpha", n_alpha}, {"u", n_u}, {"plan", n_plan}, {"delta", n_delta},
                {"dim", n_dim}};
      if (n_kind == "ube") {
        auto plan = n_plan.empty() ? conic::SamplingPlan::ube_default(n_dim, n_delta)
                                   : conic::plan_from_json(read_file(n_plan));
        write_output(g, report_output(conic::ube_seminorm_rn(conic::rn_field(n_u), n_q, plan), g));
      } else {
        const auto cp = cone_params(g);
        auto plan = n_plan.empty() ? conic::SamplingPlan::cone_default(cp, n_delta)
                                   : conic::plan_from_json(read_file(n_plan));
        const auto u = cone_input(n_u, cp);
        if (n_kind == "uq") {
          write_output(g, report_output(conic::uq_norm(u, n_q, cp, plan), g));
        } else if (n_kind == "donaldson") {
          write_output(g, report_output(conic::donaldson_norm(u, n_alpha, cp, plan), g));
        } else {
          const auto table = conic::compare_spaces(u, n_alpha, cp, plan);
          if (g.format == "json") {
            write_output(g, conic::to_json(table));
          } else {
            std::ostringstream os;
            os << "ratio,numerator,denominator,value,flagged\n";
            for (const auto& r : table.rows) {
              os << '"' << r.name << "\"," << csv_number(r.numerator) << ',' << csv_number(r.denominator) << ','
                 << csv_number(r.ratio) << ',' << (r.flagged ? 1 : 0) << '\n';
            }
            write_output(g, os.str());
          }
          if (table.any_flagged) exit_code = 1;
        }
      }
    } else if (schauder->parsed()) {
      command = "schauder";
      scfg.params = cone_params(g);
      params = {{"q", scfg.q}, {"f", s_f}, {"family", s_family}, {"levels", scfg.levels}, {"modes", scfg.max_mode},
                {"ppo", scfg.points_per_octave}, {"delta", scfg.delta}};
      std::vector<std::string> specs;
      if (s_family) {
        specs = conic::schauder_family(scfg.q);
      } else {
        specs = {s_f.empty() ? conic::schauder_family(scfg.q).front() : s_f};
      }
      ordered_json reports = ordered_json::array();
      std::ostringstream csv;
      csv << "f,constant,u_Uq2_B1,u_C0_B2,f_Uq_B2,max_residual,trivial\n";
      double worst = 0.0;
      for (const auto& spec : specs) {
        const auto rep = conic::run_schauder(cone_input(spec, scfg.params), scfg, spec);
        worst = std::max(worst, rep.constant);
        reports.push_back(ordered_json::parse(conic::to_json(rep)));
        csv << '"' << spec << "\"," << csv_number(rep.constant) << ',' << csv_number(rep.u_norm.total) << ','
            << csv_number(rep.u_sup) << ',' << csv_number(rep.f_norm.total) << ',' << csv_number(rep.max_residual) << ','
            << (rep.trivial ? 1 : 0) << '\n';
      }
      if (g.format == "json") {
        write_output(g, (s_family ? ordered_json{{"max_constant", worst}, {"runs", reports}} : reports.front()).dump(2));
      } else {
        write_output(g, csv.str());
      }
    } else if (verify->parsed()) {
      command = "verify";
      params = {{"suite", v_suite}, {"serial", v_serial}};
      if (v_q) params["q"] = *v_q;
      conic::verify::Options opts;
      opts.seed = g.seed;
      opts.q_override = v_q;
      opts.parallel = !v_serial;
      const auto report = conic::verify::run_suite(v_suite, opts);
      for (const auto& c : report.checks) {
        std::cerr << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.summary << '\n';
      }
      if (g.format == "json") {
        write_output(g, conic::verify::to_json(report));
      } else {
        std::ostringstream os;
        os << "check,passed,seconds,summary\n";
        for (const auto& c : report.checks) {
          os << c.name << ',' << (c.passed ? 1 : 0) << ',' << csv_number(c.seconds) << ",\"" << c.summary << "\"\n";
        }
        write_output(g, os.str());
      }
      if (!report.passed) exit_code = 1;
    }
  } catch (const conic::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  ordered_json manifest;
  manifest["command"] = command;
  manifest["global"] = {{"beta", g.beta}, {"seed", g.seed}, {"xi_dim", g.xi_dim}, {"format", g.format}, {"out", g.out}};
  manifest["parameters"] = params;
  manifest["inputs"] = g_input_hashes;
  manifest["version"] = conic::kVersion;
  manifest["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  manifest["exit_status"] = exit_code;
  if (g.out.empty()) {
    std::cerr << manifest.dump() << '\n';
  } else {
    write_side_file(g.out + ".manifest.json", manifest.dump(2) + "\n");
  }
  return exit_code;
}
