// Command-line front end: root counts, the two solving pipelines,
// Groebner bases, Lagrange critical-point systems and a handful of
// self-checking demos.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polysolve/polysolve.hpp"

namespace {

using nlohmann::json;
using namespace polysolve;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitMismatch = 4;

struct CliError : std::runtime_error {
  int code;
  CliError(int c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError(kExitParse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SystemFile load_system(const std::string& path) {
  try {
    return parse_system_text(read_file(path));
  } catch (const ParseError& e) {
    throw CliError(kExitParse, std::string("parse error: ") + e.what());
  }
}

json solution_record(const Solution& s) {
  json coords = json::array();
  for (const auto& z : s.point) coords.push_back({z.real(), z.imag()});
  return json{{"coordinates", coords},
              {"residual", s.residual},
              {"is_real", s.is_real},
              {"provenance", s.provenance}};
}

void print_solutions(const SolutionSet& sols, bool as_json) {
  if (as_json) {
    json rec = json::array();
    for (const auto& s : sols.solutions) rec.push_back(solution_record(s));
    json out{{"solutions", rec},
             {"paths_tracked", sols.paths_tracked},
             {"paths_diverged", sols.paths_diverged},
             {"paths_failed", sols.paths_failed},
             {"warnings", sols.warnings}};
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << sols.solutions.size() << " solution(s)\n";
  for (const auto& s : sols.solutions) {
    std::cout << "  (";
    for (std::size_t i = 0; i < s.point.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << s.point[i].real();
      if (std::abs(s.point[i].imag()) > 0) std::cout << std::showpos << s.point[i].imag() << "i"
                                                     << std::noshowpos;
    }
    std::cout << ")  residual " << s.residual << (s.is_real ? "  real" : "") << "  ["
              << s.provenance << "]\n";
  }
  if (sols.paths_tracked > 0)
    std::cout << "paths: " << sols.paths_tracked << " tracked, " << sols.paths_diverged
              << " diverged, " << sols.paths_failed << " failed\n";
  for (const auto& w : sols.warnings) std::cout << "warning: " << w << "\n";
}

void write_trace_csv(const std::string& path, const HomotopyResult& res, int nvars) {
  std::ofstream out(path);
  if (!out) throw CliError(kExitNumerical, "cannot write '" + path + "'");
  out << "path,t";
  for (int i = 0; i < nvars; ++i) out << ",re_x" << (i + 1) << ",im_x" << (i + 1);
  out << ",dt\n";
  for (std::size_t p = 0; p < res.paths.size(); ++p)
    for (const auto& pt : res.paths[p].trace) {
      out << p << "," << pt.t;
      for (const auto& z : pt.x) out << "," << z.real() << "," << z.imag();
      out << "," << pt.step << "\n";
    }
}

int cmd_count(const std::string& file, bool as_json) {
  SystemFile sf = load_system(file);
  RootCountReport rep = count_report(sf.system);
  if (as_json) {
    json out{{"bezout", rep.bezout},
             {"kushnirenko", rep.kushnirenko ? json(*rep.kushnirenko) : json(nullptr)},
             {"bkk", rep.bkk ? json(*rep.bkk) : json(nullptr)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "bezout: " << rep.bezout << "\n";
    if (rep.kushnirenko) std::cout << "kushnirenko: " << *rep.kushnirenko << "\n";
    if (rep.bkk) std::cout << "bkk: " << *rep.bkk << "\n";
    if (!rep.note.empty()) std::cout << rep.note << "\n";
  }
  return kExitOk;
}

int cmd_solve(const std::string& file, const std::string& method, double tol, unsigned seed,
              bool as_json, const std::string& dump_macaulay, const std::string& trace_paths) {
  SystemFile sf = load_system(file);
  if (!dump_macaulay.empty()) {
    std::ofstream out(dump_macaulay);
    if (!out) throw CliError(kExitNumerical, "cannot write '" + dump_macaulay + "'");
    out << dump_macaulay_csv(sf.system, sf.vars);
  }
  SolutionSet sols;
  if (method == "eigen") {
    EigenSolveConfig cfg;
    cfg.seed = seed;
    if (tol > 0) cfg.residual_tol = tol;
    sols = solve_eigen(sf.system, cfg);
  } else if (method == "groebner-eigen") {
    EigenSolveConfig cfg;
    cfg.seed = seed;
    if (tol > 0) cfg.residual_tol = tol;
    sols = solve_groebner_eigen(sf.system, cfg);
  } else if (method == "homotopy") {
    TrackerConfig cfg;
    cfg.seed = seed;
    if (tol > 0) cfg.newton_tol = tol;
    cfg.trace = !trace_paths.empty();
    HomotopyResult res = solve_homotopy(sf.system, cfg);
    if (!trace_paths.empty()) write_trace_csv(trace_paths, res, sf.system.nvars);
    sols = std::move(res.solutions);
  } else {
    throw CliError(kExitParse, "unknown method '" + method + "'");
  }
  print_solutions(sols, as_json);
  return kExitOk;
}

int cmd_groebner(const std::string& file, const std::string& order_name, int eliminate_count,
                 bool as_json) {
  SystemFile sf = load_system(file);
  int n = sf.system.nvars;
  std::vector<PolyQ> gb;
  MonomialOrder order = MonomialOrder::grlex(n);
  if (eliminate_count > 0) {
    order = MonomialOrder::lex(n);
    gb = eliminate(sf.system.polys, eliminate_count);
  } else {
    if (order_name == "lex")
      order = MonomialOrder::lex(n);
    else if (order_name == "grlex")
      order = MonomialOrder::grlex(n);
    else if (order_name == "grevlex")
      order = MonomialOrder::grevlex(n);
    else
      throw CliError(kExitParse, "unknown order '" + order_name + "'");
    gb = buchberger(sf.system.polys, order);
  }
  std::vector<std::string> lines;
  for (const auto& g : gb) lines.push_back(format_polynomial(g, sf.vars));
  json std_mons = json(nullptr);
  if (eliminate_count == 0) {
    try {
      json arr = json::array();
      for (const auto& m : standard_monomials(gb, order))
        arr.push_back(detail::csv_monomial(m, sf.vars));
      std_mons = arr;
    } catch (const NotZeroDimensional&) {
    }
  }
  if (as_json) {
    std::cout << json{{"generators", lines}, {"standard_monomials", std_mons}}.dump(2) << "\n";
  } else {
    for (const auto& l : lines) std::cout << l << "\n";
    if (std_mons.is_array())
      std::cout << "# " << lines.size() << " generators, " << std_mons.size()
                << " standard monomials\n";
  }
  return kExitOk;
}

// Input file: vars line, then the objective, then zero or more
// constraints. Output: the critical-point system in the same text
// format, ready to feed back into `solve`.
int cmd_lagrange(const std::string& file) {
  SystemFile sf = load_system(file);
  PolyQ objective = sf.system.polys.front();
  std::vector<PolyQ> constraints(sf.system.polys.begin() + 1, sf.system.polys.end());
  LagrangeSystem ls;
  try {
    ls = lagrange_system(objective, constraints, sf.vars);
  } catch (const std::invalid_argument& e) {
    throw CliError(kExitParse, e.what());
  }
  std::cout << format_system(ls.system, ls.vars);
  return kExitOk;
}

struct Check {
  std::string what;
  bool ok;
};

int report_checks(const std::string& name, const std::vector<Check>& checks, bool as_json) {
  bool all = true;
  for (const auto& c : checks) all = all && c.ok;
  if (as_json) {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back({{"check", c.what}, {"ok", c.ok}});
    std::cout << json{{"demo", name}, {"checks", arr}, {"ok", all}}.dump(2) << "\n";
  } else {
    for (const auto& c : checks)
      std::cout << (c.ok ? "   ok  " : " FAIL  ") << c.what << "\n";
  }
  return all ? kExitOk : kExitMismatch;
}

int demo_clebsch27(bool as_json) {
  SystemQ F = clebsch_line_system();
  std::vector<Check> checks;
  checks.push_back({"Bezout bound 81", bezout_bound(F.degrees()) == 81});
  std::vector<Support> supports;
  for (const auto& f : F.polys) supports.push_back(Support::of(f));
  checks.push_back({"mixed volume 45", mixed_volume(supports) == 45});
  HomotopyResult res = solve_homotopy(F);
  const SolutionSet& s = res.solutions;
  checks.push_back({"81 paths tracked", s.paths_tracked == 81});
  checks.push_back({"54 paths diverged", s.paths_diverged == 54});
  checks.push_back({"27 lines found", s.solutions.size() == 27});
  bool all_real = true, all_tight = true;
  for (const auto& sol : s.solutions) {
    all_real = all_real && sol.is_real;
    all_tight = all_tight && sol.residual <= 1e-8;
  }
  checks.push_back({"all 27 lines real", all_real});
  checks.push_back({"all residuals <= 1e-8", all_tight});
  return report_checks("clebsch27", checks, as_json);
}

int demo_wilkinson(bool as_json) {
  SystemQ F(1, {wilkinson(12)});
  HomotopyResult res = solve_homotopy(F);
  const SolutionSet& s = res.solutions;
  std::vector<Check> checks;
  checks.push_back({"12 paths tracked", s.paths_tracked == 12});
  checks.push_back({"12 roots found", s.solutions.size() == 12});
  double err = 1e9;
  if (s.solutions.size() == 12) {
    err = 0;
    std::vector<double> roots;
    for (const auto& sol : s.solutions) roots.push_back(sol.point[0].real());
    std::sort(roots.begin(), roots.end());
    for (int k = 0; k < 12; ++k) err = std::max(err, std::abs(roots[k] - (k + 1)));
    for (const auto& sol : s.solutions)
      err = std::max(err, std::abs(sol.point[0].imag()));
  }
  checks.push_back({"endpoints match 1..12 within 1e-6", err <= 1e-6});
  return report_checks("wilkinson", checks, as_json);
}

int demo_curves7(bool as_json) {
  SystemQ F = plane_curves_system();
  SolutionSet s = solve_eigen(F);
  std::vector<Check> checks;
  checks.push_back({"7 intersection points", s.solutions.size() == 7});
  bool all_real = true;
  for (const auto& sol : s.solutions) all_real = all_real && sol.is_real;
  checks.push_back({"all points real", all_real});
  auto has = [&](double x, double y) {
    for (const auto& sol : s.solutions)
      if (std::abs(sol.point[0] - Complex(x, 0)) <= 1e-8 &&
          std::abs(sol.point[1] - Complex(y, 0)) <= 1e-8)
        return true;
    return false;
  };
  checks.push_back({"contains (0,0)", has(0, 0)});
  checks.push_back({"contains (1,1)", has(1, 1)});
  return report_checks("curves7", checks, as_json);
}

int demo_robot(bool as_json) {
  SystemQ F = robot_circles(Rational(1), Rational(1), Rational(1), rat(1, 2));
  SolutionSet s = solve_eigen(F);
  std::vector<Check> checks;
  checks.push_back({"2 elbow configurations", s.solutions.size() == 2});
  bool all_real = true, on_circles = true;
  for (const auto& sol : s.solutions) {
    all_real = all_real && sol.is_real;
    on_circles = on_circles && sol.residual <= 1e-8;
  }
  checks.push_back({"both real", all_real});
  checks.push_back({"both on the circles", on_circles});
  return report_checks("robot", checks, as_json);
}

int cmd_demo(const std::string& name, bool as_json) {
  if (name == "clebsch27") return demo_clebsch27(as_json);
  if (name == "wilkinson") return demo_wilkinson(as_json);
  if (name == "curves7") return demo_curves7(as_json);
  if (name == "robot") return demo_robot(as_json);
  throw CliError(kExitParse, "unknown demo '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polynomial system solving toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON output");

  std::string file, method = "eigen", order_name = "grlex", demo_name;
  std::string dump_macaulay, trace_paths;
  double tol = 0;
  unsigned seed = 20220905;
  int eliminate_count = 0;

  auto* count = app.add_subcommand("count", "root-count bounds for a system");
  count->add_option("file", file)->required();

  auto* solve = app.add_subcommand("solve", "find all isolated solutions");
  solve->add_option("file", file)->required();
  solve->add_option("--method", method, "eigen | homotopy | groebner-eigen");
  solve->add_option("--tol", tol, "residual / corrector tolerance");
  solve->add_option("--seed", seed, "random seed");
  solve->add_option("--dump-macaulay", dump_macaulay, "write the Macaulay matrices as CSV");
  solve->add_option("--trace-paths", trace_paths, "write per-step homotopy trace as CSV");

  auto* groebner = app.add_subcommand("groebner", "reduced Groebner basis");
  groebner->add_option("file", file)->required();
  groebner->add_option("--order", order_name, "lex | grlex | grevlex");
  groebner->add_option("--eliminate", eliminate_count, "eliminate the first j variables");

  auto* lagrange = app.add_subcommand("lagrange", "critical-point system of an objective");
  lagrange->add_option("file", file)->required();

  auto* demo = app.add_subcommand("demo", "self-checking case studies");
  demo->add_option("name", demo_name, "clebsch27 | wilkinson | curves7 | robot")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) return cmd_count(file, as_json);
    if (solve->parsed())
      return cmd_solve(file, method, tol, seed, as_json, dump_macaulay, trace_paths);
    if (groebner->parsed()) return cmd_groebner(file, order_name, eliminate_count, as_json);
    if (lagrange->parsed()) return cmd_lagrange(file);
    if (demo->parsed()) return cmd_demo(demo_name, as_json);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const InconsistentSystem&) {
    // no solutions is an answer, not a crash
    print_solutions(SolutionSet{}, as_json);
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}
