#ifndef GEOCRYSTAL_COMMANDS_HPP
#define GEOCRYSTAL_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geocrystal/gyt.hpp"
#include "geocrystal/io.hpp"
#include "geocrystal/ud.hpp"

// Front-end operations behind the command-line tool. Everything here is
// deterministic given its arguments (random populations take an explicit seed).

namespace geocrystal::cli {

using json = nlohmann::json;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct VerifyReport {
  std::string check;
  int n = 0;
  bool holds = false;
  double elapsed_ms = 0;
  json counterexample;  // null when the check holds

  json to_json() const;
  /// `PASS name n=.. (.. ms)` or `FAIL ...` followed by the counterexample.
  std::string to_line() const;
};

struct VerifyOptions {
  int n = 2;
  std::uint64_t seed = kDefaultSeed;
  /// Overrides the suite's rank cap.
  std::optional<int> cap;
  /// Size of random populations for the combinatorial checks.
  int population = 1000;
};

const std::vector<std::string>& suite_names();
/// Default rank cap of a suite: 3 for the heavy symbolic ones, 5 otherwise.
int suite_cap(const std::string& suite);

/// Runs a suite at rank opts.n; reports are sorted by check name. Throws
/// std::invalid_argument for an unknown suite or a rank above the cap. The
/// suite "all" skips members whose cap is below n.
std::vector<VerifyReport> cmd_verify(const std::string& suite, const VerifyOptions& opts);

// Population checks on B#, also used by the acceptance driver.
std::vector<VerifyReport> check_sharp_axioms(int n, int population, std::uint64_t seed);
VerifyReport check_weyl(int n, int population, std::uint64_t seed);
/// Tensor rule on arabic reading words versus etilde_pow on row counts.
VerifyReport check_tableau_oracle(int n, int cases, std::uint64_t seed);

/// Sample points for the tropical checks at rank n: the whole cube [-3,3]^{m+1}
/// for n <= 2, otherwise `random_points` points of [-5,5]^{m+1}; m = n(n+1)/2
/// and the last coordinate is the crystal exponent z.
std::vector<std::vector<std::int64_t>> ud_points(int n, int random_points, std::uint64_t seed);
/// Compares the whole tropical e_i update with etilde_pow / ftilde_pow. Each
/// tropical alpha_k^{(i)} must also equal beta_k^{(i)}, and tropical gamma_A must equal wt.
VerifyReport check_ud_main(int n, std::uint64_t seed);
/// trop_eval against the substitution degree on the same formulas and points.
VerifyReport check_ud_soundness(int n, std::uint64_t seed);

/// Coordinate names of the A-chart followed by the crystal parameter.
std::vector<std::string> A_chart_variables(int n);

struct ActResult {
  json state;
  std::string summary;
};
/// "sharp" takes an integer power, negative meaning ftilde. The geometric kinds
/// act on the A-chart ("geomA") or the a-chart ("geomAlpha") with a nonzero rational.
ActResult cmd_act(const std::string& kind, int i, const std::string& param, const json& state);

struct GraphSlice {
  struct Arc {
    std::size_t from;
    int i;
    char direction;  // 'e' or 'f'
    std::size_t to;
  };
  gyt::SharpElement root;
  int radius = 0;
  std::vector<gyt::SharpElement> nodes;  // sorted
  std::vector<Arc> arcs;

  std::string to_dot() const;
  json to_json() const;
};
/// All elements within `radius` etilde/ftilde steps of root, with every arc between them.
GraphSlice cmd_graph(const gyt::SharpElement& root, int radius, int max_radius);

struct TropResult {
  std::string formula;
  std::vector<std::string> labels;
  std::vector<ud::TropValue> values;

  json to_json() const;
  std::string to_line() const;
};
/// Named formulas: alpha_ik (needs i, k; point = A-coordinates then z), gammaA,
/// xi and xi_inv (point = chart coordinates in lexicographic order).
TropResult cmd_trop_named(const std::string& name, int n, int i, int k, const std::vector<std::int64_t>& point);
/// Explicit subtraction-free expression; vars default to its sorted variables.
TropResult cmd_trop_expr(const std::string& expr, std::vector<std::string> vars,
                         const std::vector<std::int64_t>& point);

}  // namespace geocrystal::cli

#endif
