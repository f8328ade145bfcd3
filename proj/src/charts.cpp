#include "geocrystal/charts.hpp"

#include <random>
#include <stdexcept>

namespace geocrystal::charts {

namespace {

void check_root(int i, int n) {
  if (i < 1 || i > n) throw std::out_of_range("root index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

// Sum of the given terms without ever introducing a subtraction; empty sum is 0.
RatFun positive_sum(const std::vector<RatFun>& terms) {
  RatFun acc;
  bool first = true;
  for (const auto& t : terms) {
    acc = first ? t : acc + t;
    first = false;
  }
  return acc;
}

sl::IdentityReport compare_points(std::string identity, const Triangle<RatFun>& lhs, const Triangle<RatFun>& rhs,
                                  const char* sym) {
  sl::IdentityReport r{std::move(identity), true, std::nullopt};
  for (auto [k, j] : Triangle<RatFun>::indices(lhs.rank()))
    if (!(lhs(k, j) == rhs(k, j))) {
      r.holds = false;
      r.witness = std::string(sym) + "[" + std::to_string(k) + "," + std::to_string(j) + "]: lhs = " +
                  lhs(k, j).to_string() + ", rhs = " + rhs(k, j).to_string();
      break;
    }
  return r;
}

// P_j = prod_{l<=j} A_{l,i} / prod_{l<=j-1} A_{l,i-1}.
RatFun partial_product(int i, int j, const TorusPointB& q) {
  RatFun num(1), den(1);
  for (int l = 1; l <= j; ++l) num *= q.A(l, i);
  for (int l = 1; l <= j - 1; ++l) den *= q.A(l, i - 1);
  return num / den;
}

}  // namespace

std::string A_name(int k, int j) { return "A[" + std::to_string(k) + "," + std::to_string(j) + "]"; }

TorusPointA symbolic_a(int n) {
  TorusPointA p{Triangle<RatFun>(n)};
  for (auto [k, j] : Triangle<RatFun>::indices(n)) p.a(k, j) = RatFun::variable(sl::a_name(k, j));
  return p;
}

TorusPointB symbolic_A(int n) {
  TorusPointB q{Triangle<RatFun>(n)};
  for (auto [k, j] : Triangle<RatFun>::indices(n)) q.A(k, j) = RatFun::variable(A_name(k, j));
  return q;
}

MatRF buildY(const TorusPointA& p) {
  const int n = p.rank();
  std::vector<std::pair<int, RatFun>> word;
  for (int k = 1; k <= n; ++k)
    for (int j = n; j >= k; --j) word.emplace_back(j, p.a(k, j));
  return sl::y_word(n, word);
}

RatFun f_closed(int i, const TorusPointA& p) {
  const int n = p.rank();
  check_root(i, n);
  RatFun acc(1);
  for (int k = 1; k <= i; ++k)
    for (int j = k; j <= n - i + k; ++j) acc *= p.a(k, j);
  return acc;
}

RatFun varphi_closed(int i, const TorusPointA& p) {
  check_root(i, p.rank());
  std::vector<RatFun> terms;
  for (int k = 1; k <= i; ++k) terms.push_back(p.a(k, i));
  return positive_sum(terms);
}

RatFun C_coeff(int i, int k, const RatFun& alpha, const TorusPointA& p) {
  check_root(i, p.rank());
  if (k < 0 || k > i) throw std::out_of_range("C_k^(i) needs 0 <= k <= i");
  if (k == 0) return RatFun(1);
  if (k == i) return alpha;
  std::vector<RatFun> head, tail;
  for (int l = 1; l <= k; ++l) head.push_back(p.a(l, i));
  for (int l = k + 1; l <= i; ++l) tail.push_back(p.a(l, i));
  RatFun s_k = positive_sum(head), rest = positive_sum(tail);
  return (alpha * s_k + rest) / (s_k + rest);
}

TorusPointA e_act_a(int i, const RatFun& alpha, const TorusPointA& p) {
  const int n = p.rank();
  check_root(i, n);
  std::vector<RatFun> C;
  for (int k = 0; k <= i; ++k) C.push_back(C_coeff(i, k, alpha, p));
  TorusPointA out = p;
  if (i >= 2)
    for (int k = 1; k <= i - 1; ++k) out.a(k, i - 1) = C[k] * p.a(k, i - 1);
  for (int k = 1; k <= i; ++k) out.a(k, i) = p.a(k, i) / (C[k - 1] * C[k]);
  if (i + 1 <= n)
    for (int k = 1; k <= i + 1; ++k) out.a(k, i + 1) = C[k - 1] * p.a(k, i + 1);
  return out;
}

TorusPointB xi(const TorusPointA& p) {
  const int n = p.rank();
  TorusPointB q{Triangle<RatFun>(n)};
  for (auto [i, j] : Triangle<RatFun>::indices(n)) {
    RatFun num(1), den(1);
    for (int m = 0; m <= i - 1; ++m) num *= p.a(i - m, j - m);
    for (int m = 0; m <= i - 2; ++m) den *= p.a(i - 1 - m, j - m);
    q.A(i, j) = num / den;
  }
  return q;
}

TorusPointA xi_inv(const TorusPointB& q) {
  const int n = q.rank();
  TorusPointA p{Triangle<RatFun>(n)};
  for (auto [i, j] : Triangle<RatFun>::indices(n)) {
    RatFun num(1), den(1);
    for (int l = 1; l <= i; ++l) num *= q.A(l, j);
    for (int l = 1; l <= i - 1; ++l) den *= q.A(l, j - 1);
    p.a(i, j) = num / den;
  }
  return p;
}

RatFun alpha_coeff(int i, int k, const RatFun& alpha, const TorusPointB& q) {
  check_root(i, q.rank());
  if (k < 1 || k > i) throw std::out_of_range("alpha_k^(i) needs 1 <= k <= i");
  std::vector<RatFun> P;
  for (int j = 1; j <= i; ++j) P.push_back(partial_product(i, j, q));
  auto range_sum = [&](int lo, int hi) {
    std::vector<RatFun> t;
    for (int j = lo; j <= hi; ++j) t.push_back(P[j - 1]);
    return positive_sum(t);
  };
  // Empty ranges contribute nothing; the alpha-weighted part is always nonempty
  // in the numerator, and at least one of the two parts is nonempty below.
  RatFun num = alpha * range_sum(1, k);
  if (k < i) num = num + range_sum(k + 1, i);
  RatFun den = range_sum(k, i);
  if (k > 1) den = alpha * range_sum(1, k - 1) + den;
  return num / den;
}

TorusPointB e_act_A(int i, const RatFun& alpha, const TorusPointB& q) {
  const int n = q.rank();
  check_root(i, n);
  TorusPointB out = q;
  for (int k = 1; k <= i; ++k) {
    RatFun ak = alpha_coeff(i, k, alpha, q);
    if (k <= i - 1) out.A(k, i - 1) = ak * q.A(k, i - 1);
    out.A(k, i) = q.A(k, i) / ak;
  }
  return out;
}

sl::TorusElem gamma_A(const TorusPointB& q) {
  const int n = q.rank();
  std::vector<RatFun> c;
  for (int i = 1; i <= n; ++i) {
    RatFun prod(1);
    for (int k = 1; k <= i; ++k)
      for (int j = i; j <= n; ++j) prod *= q.A(k, j);
    c.push_back(prod.inverse());
  }
  return sl::TorusElem::from_coroots(c);
}

sl::IdentityReport verify_f_varphi_closed(int n) {
  const TorusPointA p = symbolic_a(n);
  const MatRF Y = buildY(p);
  for (int i = 1; i <= n; ++i) {
    RatFun f = sl::f_det(i, Y), g = f_closed(i, p);
    if (!(f == g))
      return {"f_i=m_i-closed[n=" + std::to_string(n) + "]", false,
              "f_" + std::to_string(i) + ": det = " + f.to_string() + ", closed = " + g.to_string()};
    RatFun phi = sl::varphi(i, Y), psi = varphi_closed(i, p);
    if (!(phi == psi))
      return {"f_i=m_i-closed[n=" + std::to_string(n) + "]", false,
              "varphi_" + std::to_string(i) + ": entry = " + phi.to_string() + ", closed = " + psi.to_string()};
  }
  return {"f_i=m_i-closed[n=" + std::to_string(n) + "]", true, std::nullopt};
}

sl::IdentityReport verify_a_chart_action(int i, int n) {
  const TorusPointA p = symbolic_a(n);
  const RatFun alpha = RatFun::variable(kAlpha);
  return sl::compare_matrices("a-chart-action[" + std::to_string(i) + "]", buildY(e_act_a(i, alpha, p)),
                              sl::e_act(i, alpha, buildY(p)));
}

sl::IdentityReport verify_chart_compat(int i, int n) {
  const TorusPointA p = symbolic_a(n);
  const RatFun alpha = RatFun::variable(kAlpha);
  return compare_points("xi-compat[" + std::to_string(i) + "]", xi(e_act_a(i, alpha, p)).A,
                                     e_act_A(i, alpha, xi(p)).A, "A");
}

sl::IdentityReport verify_xi_roundtrip(int n) {
  const TorusPointA p = symbolic_a(n);
  const TorusPointB q = symbolic_A(n);
  auto r = compare_points("xi-roundtrip[n=" + std::to_string(n) + "]", xi_inv(xi(p)).a, p.a, "a");
  if (!r.holds) return r;
  return compare_points("xi-roundtrip[n=" + std::to_string(n) + "]", xi(xi_inv(q)).A, q.A, "A");
}

sl::IdentityReport verify_gamma_chart(int n) {
  const TorusPointA p = symbolic_a(n);
  return sl::compare_tori("gammaA[n=" + std::to_string(n) + "]", gamma_A(xi(p)), sl::gamma(buildY(p)));
}

sl::IdentityReport verify_gamma_equivariance_A(int i, int n) {
  const TorusPointB q = symbolic_A(n);
  const RatFun c = RatFun::variable("c");
  return sl::compare_tori("gammaA-equivariance[" + std::to_string(i) + "]", gamma_A(e_act_A(i, c, q)),
                          sl::gen_alphacheck(i, c, n) * gamma_A(q));
}

sl::IdentityReport verify_verma_A(int i, int j, int n) {
  check_root(i, n);
  check_root(j, n);
  if (i == j) throw std::invalid_argument("verify_verma_A needs i != j");
  const TorusPointB q = symbolic_A(n);
  const RatFun c1 = RatFun::variable("c1"), c2 = RatFun::variable("c2");
  const std::string pair = std::to_string(i) + "," + std::to_string(j);
  if (sl::CartanA{n}(i, j) == 0) {
    auto lhs = e_act_A(i, c1, e_act_A(j, c2, q));
    auto rhs = e_act_A(j, c2, e_act_A(i, c1, q));
    return compare_points("verma-commute-A[" + pair + "]", lhs.A, rhs.A, "A");
  }
  const RatFun c12 = c1 * c2;
  auto lhs = e_act_A(i, c1, e_act_A(j, c12, e_act_A(i, c2, q)));
  auto rhs = e_act_A(j, c2, e_act_A(i, c12, e_act_A(j, c1, q)));
  return compare_points("verma-braid-A[" + pair + "]", lhs.A, rhs.A, "A");
}

std::vector<sl::IdentityReport> verify_verma_A_all(int n) {
  std::vector<sl::IdentityReport> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(verify_verma_A(i, j, n));
  return out;
}

sl::IdentityReport verify_positivity(int n, int samples, std::uint64_t seed) {
  const std::string name = "positive-structure[n=" + std::to_string(n) + "]";
  const RatFun alpha = RatFun::variable(kAlpha);
  const TorusPointB q = symbolic_A(n);
  const TorusPointA p = symbolic_a(n);

  std::vector<std::pair<std::string, RatFun>> comps;
  for (int i = 1; i <= n; ++i) {
    auto e = e_act_A(i, alpha, q);
    for (auto [k, j] : Triangle<RatFun>::indices(n))
      comps.emplace_back("e_" + std::to_string(i) + " " + A_name(k, j), e.A(k, j));
  }
  auto g = gamma_A(q).coroots();
  for (int i = 1; i <= n; ++i) comps.emplace_back("gammaA_" + std::to_string(i), g[i - 1]);
  auto x = xi(p);
  auto xinv = xi_inv(q);
  for (auto [k, j] : Triangle<RatFun>::indices(n)) {
    comps.emplace_back("xi " + A_name(k, j), x.A(k, j));
    comps.emplace_back("xi_inv " + sl::a_name(k, j), xinv.a(k, j));
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 50);
  for (const auto& [label, f] : comps) {
    if (!f.positive_cert()) return {name, false, label + " has no subtraction-free certificate"};
    auto vars = f.variables();
    for (int s = 0; s < samples; ++s) {
      std::map<std::string, Rational> point;
      for (const auto& v : vars) {
        Rational r(dist(rng), dist(rng));
        r.canonicalize();
        point[v] = r;
      }
      Rational val = evaluate(f, point);
      if (val <= 0) return {name, false, label + " evaluates to " + val.get_str() + " at a positive point"};
    }
  }
  return {name, true, std::nullopt};
}

}  // namespace geocrystal::charts
