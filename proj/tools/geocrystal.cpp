// Command-line front end; each subcommand forwards to a cmd_* function.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "geocrystal/commands.hpp"
#include "geocrystal/error.hpp"

namespace {

using geocrystal::cli::json;

std::vector<std::int64_t> parse_point(const std::string& text) {
  std::string s = text;
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream in(s);
  std::vector<std::int64_t> out;
  std::int64_t x = 0;
  while (in >> x) out.push_back(x);
  if (!in.eof()) throw std::invalid_argument("point must be a list of integers, got '" + text + "'");
  return out;
}

std::vector<std::string> parse_names(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;  // commas inside a[1,2] do not separate
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) std::cout << text;
  else geocrystal::io::write_text_file(path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for the geometric crystal on U^- and the generalized Young tableaux crystal"};
  app.require_subcommand(1);
  app.fallthrough();

  int n = 2;
  std::uint64_t seed = geocrystal::cli::kDefaultSeed;
  int max_radius = 4;
  bool as_json = false;
  app.add_option("--n", n, "Rank n of SL_{n+1}")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for random populations");
  app.add_option("--max-radius", max_radius, "Largest radius accepted by graph")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", as_json, "Machine-readable output");

  auto* verify = app.add_subcommand("verify", "Run an identity suite; exit status 0 iff every check holds");
  std::string suite;
  std::optional<int> cap;
  int population = 1000;
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(geocrystal::cli::suite_names()));
  verify->add_option("--cap", cap, "Override the suite's rank cap");
  verify->add_option("--population", population, "Random population size for B# checks")->check(CLI::PositiveNumber);

  auto* act = app.add_subcommand("act", "Apply a crystal operator to a JSON state");
  std::string kind, param, in_path, out_path;
  int root_index = 1;
  act->add_option("kind", kind, "sharp | geomA | geomAlpha")
      ->required()
      ->check(CLI::IsMember({"sharp", "geomA", "geomAlpha"}));
  act->add_option("--i", root_index, "Root index")->required();
  act->add_option("--param", param, "Integer power (sharp) or nonzero rational parameter (geom kinds)")->required();
  act->add_option("--in", in_path, "Input state file")->required()->check(CLI::ExistingFile);
  act->add_option("--out", out_path, "Output state file (default: stdout)");

  auto* graph = app.add_subcommand("graph", "Export the crystal graph around a B# element as DOT");
  std::string root_path, dot_path;
  int radius = 2;
  graph->add_option("--root", root_path, "Root element file")->required()->check(CLI::ExistingFile);
  graph->add_option("--radius", radius, "Number of e/f steps from the root");
  graph->add_option("--out", dot_path, "Output file (default: stdout)");

  auto* trop = app.add_subcommand("trop", "Evaluate a tropicalized formula at an integer point");
  std::string formula, expr, point_text, vars_text;
  int ti = 1, tk = 1;
  trop->add_option("formula", formula, "alpha_ik | gammaA | xi | xi_inv");
  trop->add_option("--expr", expr, "Explicit subtraction-free expression instead of a named formula");
  trop->add_option("--vars", vars_text, "Coordinate order for --expr (default: sorted variables)");
  trop->add_option("--i", ti, "Root index for alpha_ik");
  trop->add_option("--k", tk, "Index k for alpha_ik");
  trop->add_option("--point", point_text, "Integer coordinates, comma separated")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      geocrystal::cli::VerifyOptions opts{n, seed, cap, population};
      auto reports = geocrystal::cli::cmd_verify(suite, opts);
      bool all = true;
      json arr = json::array();
      for (const auto& r : reports) {
        all = all && r.holds;
        if (as_json) arr.push_back(r.to_json());
        else std::cout << r.to_line() << "\n";
      }
      if (as_json) std::cout << arr.dump(2) << "\n";
      else std::cout << (all ? "all " : "NOT all ") << reports.size() << " checks hold\n";
      return all ? 0 : 1;
    }
    if (act->parsed()) {
      auto state = geocrystal::io::read_json_file(in_path);
      auto res = geocrystal::cli::cmd_act(kind, root_index, param, state);
      const std::string text = res.state.dump(2) + "\n";
      if (out_path.empty()) {
        std::cout << text;
        std::cerr << res.summary << "\n";
      } else {
        geocrystal::io::write_text_file(out_path, text);
        std::cout << res.summary << "\n";
      }
      return 0;
    }
    if (graph->parsed()) {
      auto root = geocrystal::io::sharp_from_json(geocrystal::io::read_json_file(root_path));
      auto slice = geocrystal::cli::cmd_graph(root, radius, max_radius);
      emit(as_json ? slice.to_json().dump(2) + "\n" : slice.to_dot(), dot_path);
      return 0;
    }
    if (trop->parsed()) {
      const auto point = parse_point(point_text);
      if (expr.empty() == formula.empty()) throw std::invalid_argument("give exactly one of a formula name or --expr");
      auto res = expr.empty() ? geocrystal::cli::cmd_trop_named(formula, n, ti, tk, point)
                              : geocrystal::cli::cmd_trop_expr(expr, parse_names(vars_text), point);
      std::cout << (as_json ? res.to_json().dump(2) : res.to_line()) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
