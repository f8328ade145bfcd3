#include "geocrystal/commands.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "geocrystal/charts.hpp"
#include "geocrystal/error.hpp"
#include "geocrystal/slgroup.hpp"
#include "geocrystal/tableau.hpp"

namespace geocrystal::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

VerifyReport from_identity(const sl::IdentityReport& r, int n, double ms) {
  VerifyReport v{r.identity, n, r.holds, ms, json()};
  if (!r.holds) v.counterexample = json{{"witness", r.witness.value_or("(none recorded)")}};
  return v;
}

VerifyReport timed(int n, const std::function<sl::IdentityReport()>& f) {
  auto t0 = Clock::now();
  auto r = f();
  return from_identity(r, n, ms_since(t0));
}

gyt::SharpElement random_sharp(int n, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  std::vector<std::int64_t> e(Triangle<int>::size_for(n));
  for (auto& x : e) x = d(rng);
  return gyt::SharpElement(n, e);
}

// Records the first failure of a population check.
struct Population {
  Population(std::string name_, int n_) : name(std::move(name_)), n(n_) {}
  std::string name;
  int n;
  Clock::time_point t0 = Clock::now();
  json counterexample;

  bool failed() const { return !counterexample.is_null(); }
  void fail(const std::string& what, const gyt::SharpElement& v, int i, json extra = json::object()) {
    if (failed()) return;
    extra["property"] = what;
    extra["v"] = io::to_json(v);
    extra["i"] = i;
    counterexample = std::move(extra);
  }
  VerifyReport report() const { return {name, n, !failed(), ms_since(t0), counterexample}; }
};

std::vector<std::int64_t> with_alpha_shift(std::vector<std::int64_t> w, int i, int delta) {
  w[i - 1] += delta;
  return w;
}

std::vector<VerifyReport> suite_verma(int n) {
  std::vector<VerifyReport> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      auto t0 = Clock::now();
      auto group = sl::verify_verma(i, j, n);
      auto chart = charts::verify_verma_A(i, j, n);
      sl::IdentityReport r{"verma[" + std::to_string(i) + "," + std::to_string(j) + "]", group.holds && chart.holds,
                           std::nullopt};
      if (!group.holds) r.witness = "matrix realization: " + group.witness.value_or("");
      else if (!chart.holds) r.witness = "A-chart: " + chart.witness.value_or("");
      out.push_back(from_identity(r, n, ms_since(t0)));
    }
  return out;
}

std::vector<VerifyReport> suite_axioms(int n) {
  std::vector<VerifyReport> out;
  for (int i = 1; i <= n; ++i) {
    out.push_back(timed(n, [&] { return sl::verify_unit_action(i, n); }));
    out.push_back(timed(n, [&] { return sl::verify_gamma_equivariance(i, n); }));
    out.push_back(timed(n, [&] { return charts::verify_gamma_equivariance_A(i, n); }));
    out.push_back(timed(n, [&] { return sl::verify_one_parameter(i, n); }));
    out.push_back(timed(n, [&] { return sl::verify_phi_scaling(i, n); }));
  }
  out.push_back(timed(n, [&] { return sl::verify_determinants(n); }));
  out.push_back(timed(n, [&] { return sl::verify_commutation(n); }));
  return out;
}

std::vector<VerifyReport> suite_umorphism(int n) {
  std::vector<VerifyReport> out;
  for (int i = 1; i <= n; ++i) {
    out.push_back(timed(n, [&] { return sl::verify_F_Umorphism(i, n); }));
    out.push_back(timed(n, [&] { return sl::verify_T_condition(i, n); }));
  }
  return out;
}

std::vector<VerifyReport> suite_a_chart_action(int n) {
  std::vector<VerifyReport> out;
  for (int i = 1; i <= n; ++i) {
    out.push_back(timed(n, [&] { return charts::verify_a_chart_action(i, n); }));
    out.push_back(timed(n, [&] { return charts::verify_chart_compat(i, n); }));
  }
  out.push_back(timed(n, [&] { return charts::verify_xi_roundtrip(n); }));
  out.push_back(timed(n, [&] { return charts::verify_gamma_chart(n); }));
  return out;
}

std::vector<VerifyReport> run_suite(const std::string& suite, const VerifyOptions& o) {
  const int n = o.n;
  if (suite == "verma") return suite_verma(n);
  if (suite == "axioms") return suite_axioms(n);
  if (suite == "umorphism") return suite_umorphism(n);
  if (suite == "fi-mi") return {timed(n, [&] { return charts::verify_f_varphi_closed(n); })};
  if (suite == "prop43") return suite_a_chart_action(n);
  if (suite == "positivity") return {timed(n, [&] { return charts::verify_positivity(n, 100, o.seed); })};
  if (suite == "sharp-axioms") {
    auto out = check_sharp_axioms(n, o.population, o.seed);
    out.push_back(check_weyl(n, o.population, o.seed + 1));
    out.push_back(check_tableau_oracle(n, 500, o.seed + 2));
    return out;
  }
  if (suite == "ud-main") return {check_ud_main(n, o.seed), check_ud_soundness(n, o.seed)};
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

Triangle<std::int64_t> chart_point(int n, const std::vector<std::int64_t>& l) {
  Triangle<std::int64_t> t(n, 0);
  t.values().assign(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(t.size()));
  return t;
}

// Everything the tropical checks need at one rank, tropicalized once.
struct UdInventory {
  int n;
  std::vector<std::string> vars;
  std::vector<std::vector<RatFun>> alpha;             // [i-1][k-1]
  std::vector<std::vector<ud::TropExpr>> alpha_trop;  // same layout
  std::vector<std::vector<RatFun>> update;            // [i-1][coordinate]
  std::vector<std::vector<ud::TropExpr>> update_trop; // same layout
  std::vector<RatFun> gamma;
  std::vector<ud::TropExpr> gamma_trop;

  explicit UdInventory(int rank) : n(rank), vars(A_chart_variables(rank)) {
    const auto q = charts::symbolic_A(n);
    const RatFun a = RatFun::variable(charts::kAlpha);
    for (int i = 1; i <= n; ++i) {
      alpha.emplace_back();
      alpha_trop.emplace_back();
      for (int k = 1; k <= i; ++k) {
        alpha.back().push_back(charts::alpha_coeff(i, k, a, q));
        alpha_trop.back().push_back(ud::tropicalize(alpha.back().back(), vars));
      }
      update.push_back(charts::e_act_A(i, a, q).A.values());
      update_trop.emplace_back();
      for (const auto& c : update.back()) update_trop.back().push_back(ud::tropicalize(c, vars));
    }
    gamma = charts::gamma_A(q).coroots();
    for (const auto& g : gamma) gamma_trop.push_back(ud::tropicalize(g, vars));
  }
};

int random_point_count(int n) { return n <= 2 ? 0 : 2000; }

}  // namespace

json VerifyReport::to_json() const {
  return json{{"check", check}, {"n", n}, {"holds", holds}, {"elapsed_ms", elapsed_ms}, {"counterexample", counterexample}};
}

std::string VerifyReport::to_line() const {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << (holds ? "PASS " : "FAIL ") << check << " n=" << n << " (" << elapsed_ms << " ms)";
  if (!holds) os << "\n  counterexample: " << counterexample.dump();
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"verma",      "axioms",       "umorphism", "fi-mi", "prop43",
                                              "positivity", "sharp-axioms", "ud-main",   "all"};
  return names;
}

int suite_cap(const std::string& suite) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  return (suite == "verma" || suite == "prop43") ? 3 : 5;
}

std::vector<VerifyReport> cmd_verify(const std::string& suite, const VerifyOptions& opts) {
  if (opts.n < 1) throw std::invalid_argument("rank n must be >= 1");
  std::vector<VerifyReport> out;
  if (suite == "all") {
    for (const auto& s : suite_names()) {
      if (s == "all" || opts.n > opts.cap.value_or(suite_cap(s))) continue;
      auto part = run_suite(s, opts);
      out.insert(out.end(), part.begin(), part.end());
    }
  } else {
    const int cap = opts.cap.value_or(suite_cap(suite));
    if (opts.n > cap)
      throw std::invalid_argument("suite '" + suite + "' is capped at n = " + std::to_string(cap) +
                                  " (raise it with --cap)");
    out = run_suite(suite, opts);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.check < b.check; });
  return out;
}

std::vector<VerifyReport> check_sharp_axioms(int n, int population, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> power(0, 6);
  Population axioms{"crystal-axioms[n=" + std::to_string(n) + "]", n};
  Population freeness{"freeness[n=" + std::to_string(n) + "]", n};
  Population shifts{"eps-phi-shift[n=" + std::to_string(n) + "]", n};
  Population powers{"power-formula[n=" + std::to_string(n) + "]", n};
  for (int s = 0; s < population; ++s) {
    const auto v = random_sharp(n, rng, -10, 10);
    const auto wt = gyt::weight(v);
    for (int i = 1; i <= n; ++i) {
      const auto eps = gyt::epsilon(i, v), ph = gyt::phi(i, v);
      if (ph != eps + gyt::pairing(i, v)) axioms.fail("phi = epsilon + <h_i, wt>", v, i);
      const auto e = gyt::etilde(i, v), f = gyt::ftilde(i, v);
      if (gyt::weight(e) != with_alpha_shift(wt, i, 1)) axioms.fail("wt(e_i v) = wt(v) + alpha_i", v, i);
      if (gyt::weight(f) != with_alpha_shift(wt, i, -1)) axioms.fail("wt(f_i v) = wt(v) - alpha_i", v, i);
      if (gyt::ftilde(i, e) != v) axioms.fail("e_i v = v' implies f_i v' = v", v, i);
      if (gyt::ftilde(i, e) != v || gyt::etilde(i, f) != v) freeness.fail("e_i f_i = f_i e_i = id", v, i);
      if (gyt::epsilon(i, e) != eps - 1 || gyt::phi(i, e) != ph + 1) shifts.fail("epsilon/phi under e_i", v, i);
      if (gyt::epsilon(i, f) != eps + 1 || gyt::phi(i, f) != ph - 1) shifts.fail("epsilon/phi under f_i", v, i);
      const int beta = power(rng);
      auto iter = v;
      for (int t = 0; t < beta; ++t) iter = gyt::etilde(i, iter);
      if (gyt::etilde_pow(i, beta, v) != iter) powers.fail("etilde_pow = iterated etilde", v, i, {{"beta", beta}});
      auto bk = gyt::beta_coefficients(i, beta, v);
      std::int64_t sum = 0;
      for (auto b : bk) sum += b;
      if (sum != beta) powers.fail("sum_k beta_k = beta", v, i, {{"beta", beta}});
    }
  }
  return {axioms.report(), freeness.report(), shifts.report(), powers.report()};
}

VerifyReport check_weyl(int n, int population, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Population weyl{"weyl[n=" + std::to_string(n) + "]", n};
  for (int s = 0; s < population && !weyl.failed(); ++s) {
    const auto v = random_sharp(n, rng, -10, 10);
    for (int i = 1; i <= n; ++i) {
      if (gyt::stilde(i, gyt::stilde(i, v)) != v) weyl.fail("s_i^2 = id", v, i);
      for (int j = i + 1; j <= n; ++j) {
        auto si = [&](const gyt::SharpElement& x) { return gyt::stilde(i, x); };
        auto sj = [&](const gyt::SharpElement& x) { return gyt::stilde(j, x); };
        if (j == i + 1) {
          if (si(sj(si(v))) != sj(si(sj(v)))) weyl.fail("s_i s_j s_i = s_j s_i s_j", v, i, {{"j", j}});
        } else if (si(sj(v)) != sj(si(v))) {
          weyl.fail("s_i s_j = s_j s_i", v, i, {{"j", j}});
        }
      }
    }
  }
  return weyl.report();
}

VerifyReport check_tableau_oracle(int n, int cases, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> root(1, n), power(0, 4);
  Population oracle{"tableau-oracle[n=" + std::to_string(n) + "]", n};
  int done = 0;
  for (int attempts = 0; done < cases && !oracle.failed(); ++attempts) {
    if (attempts > 100 * cases) throw std::runtime_error("tableau oracle: too many annihilated samples");
    const auto t = gyt::random_tableau(n, 12, rng);
    const int i = root(rng), beta = power(rng);
    gyt::BoxWord word;
    try {
      word = gyt::tensor_e_pow(i, beta, gyt::arabic_reading(t));
    } catch (const Annihilated&) {
      continue;
    }
    ++done;
    const auto counts = gyt::tableau_rowcounts(t, n);
    const auto expected = gyt::word_rowcounts(word, t.shape, n);
    const auto got = gyt::etilde_pow(i, beta, counts);
    if (got != expected)
      oracle.fail("tensor rule = etilde_pow", counts, i,
                  {{"beta", beta}, {"tableau", io::to_json(t)}, {"tensor", io::to_json(expected)}, {"formula", io::to_json(got)}});
  }
  return oracle.report();
}

std::vector<std::string> A_chart_variables(int n) {
  std::vector<std::string> vars;
  for (auto [k, j] : Triangle<int>::indices(n)) vars.push_back(charts::A_name(k, j));
  vars.push_back(charts::kAlpha);
  return vars;
}

std::vector<std::vector<std::int64_t>> ud_points(int n, int random_points, std::uint64_t seed) {
  const std::size_t dim = Triangle<int>::size_for(n) + 1;
  std::vector<std::vector<std::int64_t>> pts;
  if (n <= 2) {
    std::vector<std::int64_t> cur(dim, -3);
    for (;;) {
      pts.push_back(cur);
      std::size_t p = 0;
      while (p < dim && cur[p] == 3) cur[p++] = -3;
      if (p == dim) break;
      ++cur[p];
    }
    return pts;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> d(-5, 5);
  for (int s = 0; s < random_points; ++s) {
    std::vector<std::int64_t> l(dim);
    for (auto& x : l) x = d(rng);
    pts.push_back(std::move(l));
  }
  return pts;
}

VerifyReport check_ud_main(int n, std::uint64_t seed) {
  auto t0 = Clock::now();
  const UdInventory inv(n);
  VerifyReport rep{"ud-main[n=" + std::to_string(n) + "]", n, true, 0, json()};
  auto mismatch = [&](const std::string& what, const std::vector<std::int64_t>& l, int i, json expected, json got) {
    rep.holds = false;
    rep.counterexample = json{{"property", what}, {"point", l}, {"i", i}, {"expected", expected}, {"tropical", got}};
  };
  auto as_json = [](const ud::TropValue& x) { return x ? json(*x) : json("-inf"); };
  for (const auto& l : ud_points(n, random_point_count(n), seed)) {
    const auto v = ud::chart_to_sharp(chart_point(n, l));
    const std::int64_t z = l.back();
    for (int i = 1; i <= n && rep.holds; ++i) {
      gyt::SharpElement moved = z >= 0 ? gyt::etilde_pow(i, z, v) : gyt::ftilde_pow(i, -z, v);
      std::vector<std::int64_t> beta;
      if (z >= 0) beta = gyt::beta_coefficients(i, z, v);
      else
        for (int k = 1; k <= i; ++k) beta.push_back(v.B(k, i + 1) - moved.B(k, i + 1));
      for (int k = 1; k <= i && rep.holds; ++k) {
        auto t = inv.alpha_trop[i - 1][k - 1].eval(l);
        if (!t || *t != beta[k - 1])
          mismatch("trop alpha_" + std::to_string(k) + " = beta_" + std::to_string(k), l, i, beta[k - 1], as_json(t));
      }
      if (!rep.holds) break;
      Triangle<std::int64_t> upd(n, 0);
      std::size_t c = 0;
      for (const auto& e : inv.update_trop[i - 1]) {
        auto t = e.eval(l);
        if (!t) {
          mismatch("trop e_i update is finite", l, i, json(), "-inf");
          break;
        }
        upd.values()[c++] = *t;
      }
      if (rep.holds && ud::chart_to_sharp(upd) != moved)
        mismatch("trop e_i = etilde^z", l, i, io::to_json(moved), io::to_json(ud::chart_to_sharp(upd)));
    }
    if (!rep.holds) break;
    const auto wt = gyt::weight(v);
    for (int i = 1; i <= n; ++i) {
      auto t = inv.gamma_trop[i - 1].eval(l);
      if (!t || *t != wt[i - 1]) {
        mismatch("trop gamma_A = wt", l, i, wt[i - 1], as_json(t));
        break;
      }
    }
    if (!rep.holds) break;
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

VerifyReport check_ud_soundness(int n, std::uint64_t seed) {
  auto t0 = Clock::now();
  const UdInventory inv(n);
  std::vector<std::pair<std::string, std::pair<const RatFun*, const ud::TropExpr*>>> formulas;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= i; ++k)
      formulas.push_back({"alpha_" + std::to_string(k) + "^(" + std::to_string(i) + ")",
                          {&inv.alpha[i - 1][k - 1], &inv.alpha_trop[i - 1][k - 1]}});
  for (int i = 1; i <= n; ++i)
    formulas.push_back({"gammaA_" + std::to_string(i), {&inv.gamma[i - 1], &inv.gamma_trop[i - 1]}});
  const auto coords = Triangle<int>::indices(n);
  for (int i = 1; i <= n; ++i)
    for (std::size_t c = 0; c < coords.size(); ++c)
      formulas.push_back({"e_" + std::to_string(i) + " A" + io::index_key(coords[c].first, coords[c].second),
                          {&inv.update[i - 1][c], &inv.update_trop[i - 1][c]}});
  VerifyReport rep{"ud-soundness[n=" + std::to_string(n) + "]", n, true, 0, json()};
  for (const auto& l : ud_points(n, random_point_count(n), seed)) {
    for (const auto& [name, fe] : formulas) {
      const auto t = fe.second->eval(l);
      const auto d = ud::degree_oracle(*fe.first, inv.vars, l);
      if (!t || *t != d) {
        rep.holds = false;
        rep.counterexample = json{{"formula", name}, {"point", l}, {"degree", d}, {"tropical", t ? json(*t) : json("-inf")}};
        break;
      }
    }
    if (!rep.holds) break;
  }
  rep.elapsed_ms = ms_since(t0);
  return rep;
}

ActResult cmd_act(const std::string& kind, int i, const std::string& param, const json& state) {
  if (kind == "sharp") {
    const auto v = io::sharp_from_json(state);
    std::int64_t p = 0;
    std::size_t used = 0;
    try {
      p = std::stoll(param, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used == 0 || used != param.size()) throw std::invalid_argument("sharp action needs an integer power, got '" + param + "'");
    const auto w = p >= 0 ? gyt::etilde_pow(i, p, v) : gyt::ftilde_pow(i, -p, v);
    const std::string op = p >= 0 ? "e_" + std::to_string(i) + "^" + std::to_string(p)
                                  : "f_" + std::to_string(i) + "^" + std::to_string(-p);
    return {io::to_json(w), op + ": " + v.to_string() + " -> " + w.to_string()};
  }
  if (kind != "geomA" && kind != "geomAlpha") throw std::invalid_argument("unknown action kind '" + kind + "'");
  const RatFun alpha = RatFun::parse(param);
  if (alpha.is_zero()) throw std::invalid_argument("the crystal parameter must be nonzero");
  const auto point = io::chart_from_json(state);
  const std::string op = "e_" + std::to_string(i) + "^(" + alpha.to_string() + ")";
  if (kind == "geomA") {
    const auto* q = std::get_if<charts::TorusPointB>(&point);
    if (!q) throw std::invalid_argument("geomA expects a state with chart \"A\"");
    return {io::to_json(charts::e_act_A(i, alpha, *q)), op + " applied in the A-chart"};
  }
  const auto* p = std::get_if<charts::TorusPointA>(&point);
  if (!p) throw std::invalid_argument("geomAlpha expects a state with chart \"a\"");
  if (charts::varphi_closed(i, *p).is_zero()) throw PhiVanishes("varphi_" + std::to_string(i) + " vanishes at this point");
  return {io::to_json(charts::e_act_a(i, alpha, *p)), op + " applied in the a-chart"};
}

GraphSlice cmd_graph(const gyt::SharpElement& root, int radius, int max_radius) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  if (radius > max_radius)
    throw std::invalid_argument("radius " + std::to_string(radius) + " exceeds --max-radius " + std::to_string(max_radius));
  const int n = root.rank();
  std::map<gyt::SharpElement, int> dist{{root, 0}};
  std::deque<gyt::SharpElement> queue{root};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    const int d = dist[v];
    if (d == radius) continue;
    for (int i = 1; i <= n; ++i)
      for (const auto& w : {gyt::etilde(i, v), gyt::ftilde(i, v)})
        if (dist.emplace(w, d + 1).second) queue.push_back(w);
  }
  GraphSlice g{root, radius, {}, {}};
  std::map<gyt::SharpElement, std::size_t> index;
  for (const auto& [v, d] : dist) {
    index[v] = g.nodes.size();
    g.nodes.push_back(v);
  }
  for (std::size_t a = 0; a < g.nodes.size(); ++a)
    for (int i = 1; i <= n; ++i) {
      if (auto it = index.find(gyt::etilde(i, g.nodes[a])); it != index.end()) g.arcs.push_back({a, i, 'e', it->second});
      if (auto it = index.find(gyt::ftilde(i, g.nodes[a])); it != index.end()) g.arcs.push_back({a, i, 'f', it->second});
    }
  return g;
}

std::string GraphSlice::to_dot() const {
  std::ostringstream os;
  os << "digraph sharp {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    os << "  v" << a << " [label=\"" << nodes[a].to_string() << "\"";
    if (nodes[a] == root) os << ", style=bold";
    os << "];\n";
  }
  for (const auto& arc : arcs)
    os << "  v" << arc.from << " -> v" << arc.to << " [label=\"" << arc.i << "\", color="
       << (arc.direction == 'e' ? "red" : "blue") << "];\n";
  os << "}\n";
  return os.str();
}

json GraphSlice::to_json() const {
  json ns = json::array(), as = json::array();
  for (const auto& v : nodes) ns.push_back(v.entries());
  for (const auto& a : arcs)
    as.push_back(json{{"from", a.from}, {"i", a.i}, {"direction", std::string(1, a.direction)}, {"to", a.to}});
  return json{{"n", root.rank()}, {"root", root.entries()}, {"radius", radius}, {"nodes", ns}, {"arcs", as}};
}

json TropResult::to_json() const {
  json vals = json::array();
  for (const auto& v : values) vals.push_back(v ? json(*v) : json("-inf"));
  return json{{"formula", formula}, {"labels", labels}, {"values", vals}};
}

std::string TropResult::to_line() const {
  std::string s;
  for (std::size_t k = 0; k < values.size(); ++k)
    s += (k ? " " : "") + (values[k] ? std::to_string(*values[k]) : std::string("-inf"));
  return s;
}

TropResult cmd_trop_named(const std::string& name, int n, int i, int k, const std::vector<std::int64_t>& point) {
  if (n < 1) throw std::invalid_argument("rank n must be >= 1");
  std::vector<std::string> vars;
  std::vector<RatFun> comps;
  std::vector<std::string> labels;
  if (name == "alpha_ik") {
    vars = A_chart_variables(n);
    comps.push_back(charts::alpha_coeff(i, k, RatFun::variable(charts::kAlpha), charts::symbolic_A(n)));
    labels.push_back("alpha_" + std::to_string(k) + "^(" + std::to_string(i) + ")");
  } else if (name == "gammaA") {
    for (auto [a, b] : Triangle<int>::indices(n)) vars.push_back(charts::A_name(a, b));
    comps = charts::gamma_A(charts::symbolic_A(n)).coroots();
    for (int t = 1; t <= n; ++t) labels.push_back("gamma_" + std::to_string(t));
  } else if (name == "xi") {
    for (auto [a, b] : Triangle<int>::indices(n)) {
      vars.push_back(sl::a_name(a, b));
      labels.push_back(charts::A_name(a, b));
    }
    comps = charts::xi(charts::symbolic_a(n)).A.values();
  } else if (name == "xi_inv") {
    for (auto [a, b] : Triangle<int>::indices(n)) {
      vars.push_back(charts::A_name(a, b));
      labels.push_back(sl::a_name(a, b));
    }
    comps = charts::xi_inv(charts::symbolic_A(n)).a.values();
  } else {
    throw std::invalid_argument("unknown formula '" + name + "' (alpha_ik, gammaA, xi, xi_inv)");
  }
  auto map = ud::ud_map(comps, vars, labels);
  return {name, labels, map.eval(point)};
}

TropResult cmd_trop_expr(const std::string& expr, std::vector<std::string> vars, const std::vector<std::int64_t>& point) {
  const RatFun f = RatFun::parse(expr);
  if (vars.empty()) vars = f.variables();
  auto e = ud::tropicalize(f, vars);
  return {e.to_string(), {expr}, {e.eval(point)}};
}

}  // namespace geocrystal::cli
