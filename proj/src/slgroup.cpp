#include "geocrystal/slgroup.hpp"

#include <stdexcept>

#include "geocrystal/error.hpp"

namespace geocrystal::sl {

namespace {

void check_index(int i, int n) {
  if (n < 1) throw std::out_of_range("rank must be >= 1");
  if (i < 1 || i > n) throw std::out_of_range("root index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

int rank_of(const MatRF& m) {
  if (m.size() < 2) throw std::invalid_argument("matrix too small for SL_{n+1}, n >= 1");
  return static_cast<int>(m.size()) - 1;
}

}  // namespace

TorusElem TorusElem::from_diagonal(std::vector<RatFun> diag) {
  if (diag.size() < 2) throw std::invalid_argument("torus element needs n+1 >= 2 entries");
  RatFun prod(1);
  for (const auto& d : diag) prod *= d;
  if (!(prod == RatFun(1))) throw std::invalid_argument("torus element must have determinant 1");
  TorusElem t;
  t.diag_ = std::move(diag);
  return t;
}

TorusElem TorusElem::from_coroots(const std::vector<RatFun>& c) {
  if (c.empty()) throw std::invalid_argument("from_coroots: rank must be >= 1");
  const std::size_t n = c.size();
  TorusElem t;
  t.diag_.resize(n + 1);
  t.diag_[0] = c[0];
  for (std::size_t k = 1; k < n; ++k) t.diag_[k] = c[k] / c[k - 1];
  t.diag_[n] = c[n - 1].inverse();
  return t;
}

TorusElem TorusElem::identity(int n) { return from_coroots(std::vector<RatFun>(n, RatFun(1))); }

std::vector<RatFun> TorusElem::coroots() const {
  std::vector<RatFun> c;
  RatFun acc(1);
  for (std::size_t k = 0; k + 1 < diag_.size(); ++k) {
    acc *= diag_[k];
    c.push_back(acc);
  }
  return c;
}

MatRF TorusElem::to_matrix() const {
  MatRF m(diag_.size());
  for (std::size_t k = 0; k < diag_.size(); ++k) m(k, k) = diag_[k];
  return m;
}

TorusElem TorusElem::inverse() const {
  TorusElem t;
  for (const auto& d : diag_) t.diag_.push_back(d.inverse());
  return t;
}

TorusElem operator*(const TorusElem& a, const TorusElem& b) {
  if (a.diag_.size() != b.diag_.size()) throw DimensionMismatch("torus product of different ranks");
  TorusElem t;
  for (std::size_t k = 0; k < a.diag_.size(); ++k) t.diag_.push_back(a.diag_[k] * b.diag_[k]);
  return t;
}

MatRF gen_x(int i, const RatFun& t, int n) {
  check_index(i, n);
  MatRF m = MatRF::identity(n + 1);
  m(i - 1, i) = t;
  return m;
}

MatRF gen_y(int i, const RatFun& t, int n) {
  check_index(i, n);
  MatRF m = MatRF::identity(n + 1);
  m(i, i - 1) = t;
  return m;
}

TorusElem gen_alphacheck(int i, const RatFun& c, int n) {
  check_index(i, n);
  if (c.is_zero()) throw std::invalid_argument("alphacheck of 0");
  std::vector<RatFun> coroots(n, RatFun(1));
  coroots[i - 1] = c;
  return TorusElem::from_coroots(coroots);
}

MatRF y_word(int n, const std::vector<std::pair<int, RatFun>>& word) {
  MatRF m = MatRF::identity(n + 1);
  for (const auto& [i, t] : word) m = m * gen_y(i, t, n);
  return m;
}

std::string a_name(int k, int j) { return "a[" + std::to_string(k) + "," + std::to_string(j) + "]"; }

MatRF generic_lower_unipotent(int n) {
  std::vector<std::pair<int, RatFun>> word;
  for (int k = 1; k <= n; ++k)
    for (int j = n; j >= k; --j) word.emplace_back(j, RatFun::variable(a_name(k, j)));
  return y_word(n, word);
}

GaussFactors gauss(const MatRF& g) {
  const std::size_t n = g.size();
  MatRF a = g;
  MatRF lower = MatRF::identity(n);
  MatRF upper = MatRF::identity(n);
  std::vector<RatFun> diag(n);
  for (std::size_t k = 0; k < n; ++k) {
    const RatFun piv = a(k, k);
    if (piv.is_zero())
      throw DecompositionOutsideDomain("leading principal minor of order " + std::to_string(k + 1) +
                                       " vanishes identically");
    diag[k] = piv;
    for (std::size_t i = k + 1; i < n; ++i)
      if (!a(i, k).is_zero()) lower(i, k) = a(i, k) / piv;
    for (std::size_t j = k + 1; j < n; ++j)
      if (!a(k, j).is_zero()) upper(k, j) = a(k, j) / piv;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (lower(i, k).is_zero()) continue;
      for (std::size_t j = k + 1; j < n; ++j)
        if (!a(k, j).is_zero()) a(i, j) -= lower(i, k) * a(k, j);
    }
  }
  return {std::move(lower), TorusElem::from_diagonal(std::move(diag)), std::move(upper)};
}

MatRF pi_minus(const MatRF& g) {
  auto f = gauss(g);
  return f.lower * f.torus.to_matrix();
}

MatRF pi_plus(const MatRF& g) { return gauss(g).upper; }

RatFun chi(int i, const MatRF& b) {
  check_index(i, rank_of(b));
  if (!b.is_lower_triangular()) throw std::invalid_argument("chi: argument is not in B^-");
  return b(i, i - 1) / b(i - 1, i - 1);
}

RatFun f_det(int i, const MatRF& u) {
  const int n = rank_of(u);
  check_index(i, n);
  return u.submatrix(n + 1 - i, 0, i).determinant();
}

TorusElem curly_t(const MatRF& u) {
  const int n = rank_of(u);
  std::vector<RatFun> c;
  for (int i = 1; i <= n; ++i) {
    RatFun f = f_det(i, u);
    if (f.is_zero()) throw TorusUndefined("f_" + std::to_string(i) + " vanishes identically");
    c.push_back(f.inverse());
  }
  return TorusElem::from_coroots(c);
}

MatRF big_f(const MatRF& u) { return u * curly_t(u).to_matrix(); }

RatFun varphi(int i, const MatRF& u) {
  check_index(i, rank_of(u));
  return u(i, i - 1);
}

namespace {

RatFun shift_parameter(int i, const RatFun& c, const MatRF& u) {
  RatFun phi = varphi(i, u);
  if (phi.is_zero()) throw PhiVanishes("varphi_" + std::to_string(i) + " vanishes identically");
  return (c - RatFun(1)) / phi;
}

}  // namespace

MatRF e_act(int i, const RatFun& c, const MatRF& u) {
  const int n = rank_of(u);
  RatFun s = shift_parameter(i, c, u);
  return gauss(gen_x(i, s, n) * u).lower;
}

MatRF e_act_closed_form(int i, const RatFun& c, const MatRF& u) {
  const int n = rank_of(u);
  RatFun s = shift_parameter(i, c, u);
  return gen_x(i, s, n) * u * gen_x(i, -(s / c), n) * gen_alphacheck(i, c, n).inverse().to_matrix();
}

std::vector<MatRF> product_act(const MatRF& x, const std::vector<MatRF>& factors) {
  std::vector<MatRF> out;
  MatRF cur = x;
  for (const auto& b : factors) {
    auto f = gauss(cur * b);
    out.push_back(f.lower * f.torus.to_matrix());
    cur = std::move(f.upper);
  }
  return out;
}

std::pair<MatRF, MatRF> product_act(const MatRF& x, const std::pair<MatRF, MatRF>& pair) {
  auto v = product_act(x, std::vector<MatRF>{pair.first, pair.second});
  return {std::move(v[0]), std::move(v[1])};
}

IdentityReport compare_matrices(std::string identity, const MatRF& lhs, const MatRF& rhs) {
  IdentityReport r{std::move(identity), true, std::nullopt};
  if (auto d = lhs.first_difference(rhs)) {
    r.holds = false;
    auto [row, col] = *d;
    r.witness = "entry (" + std::to_string(row + 1) + "," + std::to_string(col + 1) +
                "): lhs = " + lhs(row, col).to_string() + ", rhs = " + rhs(row, col).to_string();
  }
  return r;
}

IdentityReport compare_tori(std::string identity, const TorusElem& lhs, const TorusElem& rhs) {
  IdentityReport r{std::move(identity), true, std::nullopt};
  auto a = lhs.coroots(), b = rhs.coroots();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k] == b[k])) {
      r.holds = false;
      r.witness = "alphacheck_" + std::to_string(k + 1) + " component: lhs = " + a[k].to_string() +
                  ", rhs = " + b[k].to_string();
      break;
    }
  return r;
}

IdentityReport verify_verma(int i, int j, int n) {
  check_index(i, n);
  check_index(j, n);
  if (i == j) throw std::invalid_argument("verify_verma needs i != j");
  const MatRF u = generic_lower_unipotent(n);
  const RatFun c1 = RatFun::variable("c1"), c2 = RatFun::variable("c2");
  const std::string pair = std::to_string(i) + "," + std::to_string(j);
  if (CartanA{n}(i, j) == 0) {
    MatRF lhs = e_act(i, c1, e_act(j, c2, u));
    MatRF rhs = e_act(j, c2, e_act(i, c1, u));
    return compare_matrices("verma-commute[" + pair + "]", lhs, rhs);
  }
  const RatFun c12 = c1 * c2;
  MatRF lhs = e_act(i, c1, e_act(j, c12, e_act(i, c2, u)));
  MatRF rhs = e_act(j, c2, e_act(i, c12, e_act(j, c1, u)));
  return compare_matrices("verma-braid[" + pair + "]", lhs, rhs);
}

std::vector<IdentityReport> verify_verma_all(int n) {
  std::vector<IdentityReport> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(verify_verma(i, j, n));
  return out;
}

IdentityReport verify_F_Umorphism(int i, int n) {
  check_index(i, n);
  const MatRF u = generic_lower_unipotent(n);
  const MatRF x = gen_x(i, RatFun::variable("s"), n);
  MatRF lhs = big_f(gauss(x * u).lower);
  MatRF rhs = pi_minus(x * big_f(u));
  return compare_matrices("F-U-morphism[" + std::to_string(i) + "]", lhs, rhs);
}

IdentityReport verify_T_condition(int i, int n) {
  check_index(i, n);
  const MatRF u = generic_lower_unipotent(n);
  const MatRF x = gen_x(i, RatFun::variable("s"), n);
  auto f = gauss(x * u);
  return compare_tori("T-condition[" + std::to_string(i) + "]", curly_t(f.lower), f.torus * curly_t(u));
}

IdentityReport verify_unit_action(int i, int n) {
  check_index(i, n);
  const MatRF u = generic_lower_unipotent(n);
  return compare_matrices("e^1=id[" + std::to_string(i) + "]", e_act(i, RatFun(1), u), u);
}

IdentityReport verify_gamma_equivariance(int i, int n) {
  check_index(i, n);
  const MatRF u = generic_lower_unipotent(n);
  const RatFun c = RatFun::variable("c");
  return compare_tori("gamma-equivariance[" + std::to_string(i) + "]", gamma(e_act(i, c, u)),
                      gen_alphacheck(i, c, n) * gamma(u));
}

IdentityReport verify_one_parameter(int i, int n) {
  check_index(i, n);
  const MatRF u = generic_lower_unipotent(n);
  const RatFun c1 = RatFun::variable("c1"), c2 = RatFun::variable("c2");
  return compare_matrices("one-parameter[" + std::to_string(i) + "]", e_act(i, c2, e_act(i, c1, u)),
                          e_act(i, c1 * c2, u));
}

IdentityReport verify_phi_scaling(int i, int n) {
  check_index(i, n);
  const MatRF u = generic_lower_unipotent(n);
  const RatFun c = RatFun::variable("c");
  RatFun lhs = varphi(i, e_act(i, c, u)), rhs = varphi(i, u) / c;
  IdentityReport r{"phi-scaling[" + std::to_string(i) + "]", lhs == rhs, std::nullopt};
  if (!r.holds) r.witness = "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string();
  return r;
}

IdentityReport verify_commutation(int n) {
  const RatFun a = RatFun::variable("a"), b = RatFun::variable("b");
  const CartanA cartan{n};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const std::string tag = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
      MatRF rhs;
      if (i == j) {
        const RatFun d = RatFun(1) + a * b;
        rhs = gen_y(i, b / d, n) * gen_alphacheck(i, d, n).to_matrix() * gen_x(i, a / d, n);
      } else {
        rhs = gen_y(j, b, n) * gen_x(i, a, n);
      }
      auto r = compare_matrices("x-y-commutation" + tag, gen_x(i, a, n) * gen_y(j, b, n), rhs);
      if (!r.holds) return r;
      r = compare_matrices("alphacheck-x-commutation" + tag, gen_alphacheck(i, a, n).to_matrix() * gen_x(j, b, n),
                           gen_x(j, a.pow(cartan(i, j)) * b, n) * gen_alphacheck(i, a, n).to_matrix());
      if (!r.holds) return r;
    }
  return {"commutation[n=" + std::to_string(n) + "]", true, std::nullopt};
}

IdentityReport verify_determinants(int n) {
  const std::string name = "det=1[n=" + std::to_string(n) + "]";
  const RatFun t = RatFun::variable("t"), c = RatFun::variable("c");
  const MatRF u = generic_lower_unipotent(n);
  std::vector<std::pair<std::string, MatRF>> items{{"Y(a)", u}};
  for (int i = 1; i <= n; ++i) {
    const std::string s = std::to_string(i);
    items.emplace_back("x_" + s, gen_x(i, t, n));
    items.emplace_back("y_" + s, gen_y(i, t, n));
    items.emplace_back("alphacheck_" + s, gen_alphacheck(i, c, n).to_matrix());
    items.emplace_back("e_" + s + "^c Y(a)", e_act(i, c, u));
  }
  for (const auto& [label, m] : items) {
    RatFun d = m.determinant();
    if (!(d == RatFun(1))) return {name, false, "det " + label + " = " + d.to_string()};
  }
  return {name, true, std::nullopt};
}

}  // namespace geocrystal::sl
