#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "pdnf/app/analyze.hpp"
#include "pdnf/app/dsl.hpp"
#include "pdnf/app/fixtures.hpp"
#include "pdnf/app/report.hpp"

namespace {

using namespace pdnf::app;

constexpr int kUsage = 1;
constexpr int kInvariant = 3;

struct Args {
  std::string input;
  unsigned degree = default_degree();
  std::vector<std::string> params;
  std::string grid;
  bool json = false;
  bool text = false;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  bool flow = false;
  double radius = 0.1, t_end = 1.0, step = 1e-3;
  unsigned samples = 16;
  std::string symmetry;
  bool solver_only = false;
};

// "fixture:NAME" reads a bundled fixture, anything else a file.
std::string read_input(const std::string& path) {
  if (path.rfind("fixture:", 0) == 0) {
    const auto name = path.substr(8);
    if (const auto t = fixture_text(name)) return std::string(*t);
    throw pdnf::PreconditionError("no bundled fixture named '" + name + "'");
  }
  std::ifstream in(path);
  if (!in) throw pdnf::PreconditionError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void add_common(CLI::App* cmd, Args& a, bool flow_flag) {
  cmd->add_option("input", a.input, "field description file, or fixture:NAME")->required();
  cmd->add_option("--degree,-k", a.degree, "working truncation degree (default $PDNF_DEGREE or 8)")
      ->check(CLI::Range(1u, 64u));
  cmd->add_option("--param,-p", a.params, "parameter binding NAME=VALUE (repeatable)");
  cmd->add_option("--grid", a.grid, "file with one binding set per line");
  auto* j = cmd->add_flag("--json", a.json, "JSON output (default)");
  auto* t = cmd->add_flag("--text", a.text, "human-readable output");
  j->excludes(t);
  cmd->add_option("--tol", a.tol, "flow-check tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", a.seed, "seed for flow-check sample points");
  cmd->add_option("--symmetry", a.symmetry, "use this declared symmetry block");
  cmd->add_flag("--solver-only", a.solver_only, "never fall back to declared symmetries");
  if (flow_flag) cmd->add_flag("--flow", a.flow, "run the numerical flow check");
  cmd->add_option("--radius", a.radius, "flow-check sample radius")->check(CLI::PositiveNumber);
  cmd->add_option("--t-end", a.t_end, "flow-check integration time")->check(CLI::PositiveNumber);
  cmd->add_option("--step", a.step, "flow-check RK4 step")->check(CLI::PositiveNumber);
  cmd->add_option("--samples", a.samples, "flow-check sample count")->check(CLI::Range(1u, 100000u));
}

int run(const std::string& command, const Args& a) {
  const std::string text = read_input(a.input);
  const FieldSpec spec = parse_field(text);

  AnalyzeOptions opt;
  opt.degree = a.degree;
  opt.source = a.input;
  opt.solver_only = a.solver_only;
  if (!a.symmetry.empty()) {
    const bool known = std::any_of(spec.symmetries.begin(), spec.symmetries.end(),
                                   [&](const SymmetryDecl& s) { return s.name == a.symmetry; });
    if (!known) throw pdnf::PreconditionError("no symmetry block named '" + a.symmetry + "'");
    opt.symmetry_name = a.symmetry;
  }
  if (command == "analyze") opt.sections = Sections::analyze();
  if (command == "normalize") opt.sections = Sections::normalize();
  if (command == "symmetry") opt.sections = Sections::symmetry_only();
  if (command == "bruno") opt.sections = Sections::bruno_only();
  if (command == "classify") opt.sections = Sections::classify();
  if (command == "flowcheck") opt.sections = Sections::flowcheck();
  opt.sections.flow = opt.sections.flow || a.flow;
  opt.flow.tol = a.tol;
  opt.flow.seed = a.seed;
  opt.flow.radius = a.radius;
  opt.flow.t_end = a.t_end;
  opt.flow.step = a.step;
  opt.flow.samples = a.samples;

  Bindings base;
  for (const auto& p : a.params) {
    auto [name, value] = parse_binding(p);
    base[name] = value;
  }
  std::vector<Bindings> grid{base};
  if (!a.grid.empty()) {
    grid = parse_grid(read_input(a.grid));
    for (auto& g : grid)
      for (const auto& [name, value] : base) g.try_emplace(name, value);
  }

  const std::vector<AnalysisReport> reports = run_grid(spec, grid, opt);
  if (a.text) {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (reports.size() > 1) std::cout << (i ? "\n" : "") << "== grid point " << i + 1 << " ==\n";
      std::cout << render_text(reports[i]);
    }
  } else if (a.grid.empty()) {
    std::cout << to_json(reports.front()) << "\n";
  } else {
    std::cout << to_json(reports) << "\n";
  }
  int status = 0;
  for (const auto& r : reports) status = std::max(status, exit_status(r));
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms, linearization and convergence diagnostics for polynomial vector fields"};
  app.require_subcommand(1);
  Args args;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"analyze", "full pipeline: spectrum, resonances, symmetry, normal form, convergence"},
      {"normalize", "Poincare-Dulac normal form through the working degree"},
      {"symmetry", "solve for a symmetry with identity linear part"},
      {"bruno", "spectrum, resonances and the omega diagnostic"},
      {"classify", "convergence classification"},
      {"flowcheck", "compare the original and normalized flows numerically"},
  };
  for (const auto& [name, help] : commands) add_common(app.add_subcommand(name, help), args, name == "analyze");
  app.add_subcommand("fixtures", "list bundled fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "fixtures") {
      for (const auto& f : fixtures()) std::cout << f.name << "\n";
      return 0;
    }
    return run(command, args);
  } catch (const ParseError& e) {
    std::cerr << args.input << ":" << e.what() << "\n";
    return kUsage;
  } catch (const pdnf::InvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const pdnf::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const pdnf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvariant;
  }
}
