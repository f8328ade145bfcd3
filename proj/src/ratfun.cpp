#include "geocrystal/ratfun.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <unordered_map>

#include "geocrystal/error.hpp"

namespace geocrystal {

namespace {

using Factor = RatFun::Factor;

PositiveExprPtr make_constant(const Rational& c) {
  auto e = std::make_shared<PositiveExpr>();
  e->kind = PositiveExpr::Kind::Constant;
  e->value = c;
  return e;
}

PositiveExprPtr make_atom(const std::string& var, int exponent) {
  if (exponent == 0) return make_constant(Rational(1));
  auto e = std::make_shared<PositiveExpr>();
  e->kind = PositiveExpr::Kind::Atom;
  e->var = var;
  e->exponent = exponent;
  return e;
}

PositiveExprPtr make_node(PositiveExpr::Kind kind, PositiveExprPtr a, PositiveExprPtr b) {
  if (!a || !b) return nullptr;
  auto e = std::make_shared<PositiveExpr>();
  e->kind = kind;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

PositiveExprPtr term_tree(const Poly& p, std::size_t t) {
  PositiveExprPtr node;
  if (p.coefficient(t) != 1 || p.is_constant()) node = make_constant(p.coefficient(t));
  auto e = p.exponents(t);
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    auto atom = make_atom(p.variables()[v], e[v]);
    node = node ? make_node(PositiveExpr::Kind::Product, node, atom) : atom;
  }
  return node;
}

PositiveExprPtr sum_tree(const Poly& p, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return term_tree(p, lo);
  std::size_t mid = lo + (hi - lo) / 2;
  return make_node(PositiveExpr::Kind::Sum, sum_tree(p, lo, mid), sum_tree(p, mid, hi));
}

// Syntactic certificate for a polynomial with positive coefficients.
PositiveExprPtr poly_tree(const Poly& p) {
  if (p.is_zero() || !p.all_coefficients_positive()) return nullptr;
  return sum_tree(p, 0, p.term_count());
}

std::vector<Factor> sorted_merge(std::vector<Factor> fs) {
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return a.base < b.base; });
  std::vector<Factor> out;
  for (auto& f : fs) {
    if (f.multiplicity == 0) continue;
    if (!out.empty() && out.back().base == f.base) out.back().multiplicity += f.multiplicity;
    else out.push_back(std::move(f));
  }
  std::erase_if(out, [](const Factor& f) { return f.multiplicity == 0; });
  return out;
}

// p = lc * prod(factors) with variable factors split off and the remaining part monic.
struct Split {
  Rational lc;
  std::vector<Factor> factors;
};

Split split_poly(Poly p) {
  Split s;
  const auto vars = p.variables();
  for (const auto& v : vars) {
    int e = p.min_exponent_in(v);
    if (e > 0) {
      s.factors.push_back({Poly::variable(v), e});
      p = p.divide_by_variable(v, e);
    }
  }
  s.lc = p.leading_coefficient();
  if (!p.is_constant()) s.factors.push_back({p.scaled(1 / s.lc), 1});
  return s;
}

bool is_variable_factor(const Poly& base) { return base.is_monomial() && base.num_vars() == 1; }

Poly expand(const std::vector<Factor>& fs) {
  Poly out(Rational(1));
  for (const auto& f : fs) out = out * f.base.pow(static_cast<unsigned>(f.multiplicity));
  return out;
}

// Lowest multiplicity list covering both (same bases matched exactly).
std::vector<Factor> common_multiple(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  std::vector<Factor> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].base < b[j].base)) out.push_back(a[i++]);
    else if (i == a.size() || b[j].base < a[i].base) out.push_back(b[j++]);
    else {
      out.push_back({a[i].base, std::max(a[i].multiplicity, b[j].multiplicity)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Product of the factors in `full` not already accounted for in `part`.
Poly cofactor(const std::vector<Factor>& full, const std::vector<Factor>& part) {
  Poly out(Rational(1));
  std::size_t j = 0;
  for (const auto& f : full) {
    int have = 0;
    while (j < part.size() && part[j].base < f.base) ++j;
    if (j < part.size() && part[j].base == f.base) have = part[j].multiplicity;
    if (f.multiplicity > have) out = out * f.base.pow(static_cast<unsigned>(f.multiplicity - have));
  }
  return out;
}

}  // namespace

RatFun::RatFun(const Rational& c) : num_(c) {
  if (sgn(c) > 0) cert_ = make_constant(canonical(c));
}

RatFun::RatFun(const Poly& p) : num_(p), cert_(poly_tree(p)) {}

RatFun RatFun::variable(const std::string& name) { return RatFun(Poly::variable(name)); }

RatFun RatFun::fraction(const Poly& num, const Poly& den) { return RatFun(num) / RatFun(den); }

RatFun RatFun::assemble(Poly num, std::vector<Factor> den, PositiveExprPtr cert) {
  RatFun r;
  if (num.is_zero()) return r;
  den = sorted_merge(std::move(den));
  for (auto& f : den) {
    if (is_variable_factor(f.base)) {
      const std::string& v = f.base.variables()[0];
      int k = std::min(f.multiplicity, num.min_exponent_in(v));
      if (k > 0) {
        num = num.divide_by_variable(v, k);
        f.multiplicity -= k;
      }
      continue;
    }
    while (f.multiplicity > 0) {
      auto q = num.divide_exact(f.base);
      if (!q) break;
      if (cert && !q->all_coefficients_positive()) break;
      num = std::move(*q);
      --f.multiplicity;
    }
  }
  std::erase_if(den, [](const Factor& f) { return f.multiplicity == 0; });
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.cert_ = std::move(cert);
  if (r.cert_) {
    bool ok = r.num_.all_coefficients_positive();
    for (const auto& f : r.den_) ok = ok && f.base.all_coefficients_positive();
    if (!ok) throw std::logic_error("positivity certificate without positive num/den");
  }
  return r;
}

Poly RatFun::den() const { return expand(den_); }

std::vector<std::string> RatFun::variables() const {
  std::set<std::string> vs(num_.variables().begin(), num_.variables().end());
  for (const auto& f : den_) vs.insert(f.base.variables().begin(), f.base.variables().end());
  return {vs.begin(), vs.end()};
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -num_;
  r.cert_ = nullptr;
  return r;
}

RatFun operator+(const RatFun& f, const RatFun& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  auto cert = make_node(PositiveExpr::Kind::Sum, f.cert_, g.cert_);
  if (f.den_ == g.den_) return RatFun::assemble(f.num_ + g.num_, f.den_, cert);
  auto l = common_multiple(f.den_, g.den_);
  Poly num = f.num_ * cofactor(l, f.den_) + g.num_ * cofactor(l, g.den_);
  return RatFun::assemble(std::move(num), std::move(l), cert);
}

RatFun operator-(const RatFun& f, const RatFun& g) {
  if (g.is_zero()) return f;
  return f + (-g);
}

RatFun operator*(const RatFun& f, const RatFun& g) {
  if (f.is_zero() || g.is_zero()) return RatFun();
  auto cert = make_node(PositiveExpr::Kind::Product, f.cert_, g.cert_);
  if (f.is_constant()) {
    RatFun r = g;
    r.num_ = g.num_.scaled(f.num_.constant_value());
    r.cert_ = cert;
    return r;
  }
  if (g.is_constant()) {
    RatFun r = f;
    r.num_ = f.num_.scaled(g.num_.constant_value());
    r.cert_ = cert;
    return r;
  }
  std::vector<Factor> den = f.den_;
  den.insert(den.end(), g.den_.begin(), g.den_.end());
  return RatFun::assemble(f.num_ * g.num_, std::move(den), cert);
}

RatFun operator/(const RatFun& f, const RatFun& g) {
  if (g.is_zero()) throw DivisionByZero();
  if (f.is_zero()) return RatFun();
  auto cert = make_node(PositiveExpr::Kind::Quotient, f.cert_, g.cert_);
  // Factors of g's denominator move up; cancel identical ones against f's denominator.
  std::vector<Factor> fden = f.den_;
  std::vector<Factor> up;
  for (const auto& gf : g.den_) {
    int m = gf.multiplicity;
    for (auto& ff : fden)
      if (ff.base == gf.base) {
        int k = std::min(m, ff.multiplicity);
        ff.multiplicity -= k;
        m -= k;
      }
    if (m > 0) up.push_back({gf.base, m});
  }
  Split s = split_poly(g.num_);
  Poly num = f.num_.scaled(1 / s.lc) * expand(up);
  fden.insert(fden.end(), s.factors.begin(), s.factors.end());
  return RatFun::assemble(std::move(num), std::move(fden), cert);
}

RatFun RatFun::pow(int e) const {
  if (e < 0) return RatFun(1) / pow(-e);
  RatFun result(1);
  RatFun base = *this;
  unsigned u = static_cast<unsigned>(e);
  while (u) {
    if (u & 1u) result = result * base;
    u >>= 1;
    if (u) base = base * base;
  }
  return result;
}

bool operator==(const RatFun& f, const RatFun& g) {
  if (f.den_ == g.den_) return f.num_ == g.num_;
  auto l = common_multiple(f.den_, g.den_);
  return f.num_ * cofactor(l, f.den_) == g.num_ * cofactor(l, g.den_);
}

std::string RatFun::to_string() const {
  if (den_.empty()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den().to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) { return os << f.to_string(); }

Rational evaluate(const RatFun& f, const std::map<std::string, Rational>& point) {
  Rational den = 1;
  for (const auto& fac : f.den_factors()) {
    Rational b = fac.base.evaluate(point);
    if (sgn(b) == 0) throw PoleError("denominator vanishes at the evaluation point");
    Rational p;
    mpz_pow_ui(mpq_numref(p.get_mpq_t()), mpq_numref(b.get_mpq_t()), fac.multiplicity);
    mpz_pow_ui(mpq_denref(p.get_mpq_t()), mpq_denref(b.get_mpq_t()), fac.multiplicity);
    p.canonicalize();
    den *= p;
  }
  return f.num().evaluate(point) / den;
}

namespace {

struct Laurent {
  Poly poly;   // in the single variable c, nonnegative exponents
  long shift;  // value = poly * c^shift
};

Laurent to_laurent(const Poly& p, const std::map<std::string, int>& l, const std::string& c) {
  std::vector<long> var_l;
  for (const auto& v : p.variables()) {
    auto it = l.find(v);
    if (it == l.end()) throw std::invalid_argument("substitute_monomial: no exponent for " + v);
    var_l.push_back(it->second);
  }
  std::map<long, Rational> acc;
  for (std::size_t t = 0; t < p.term_count(); ++t) {
    long e = 0;
    auto ex = p.exponents(t);
    for (std::size_t v = 0; v < ex.size(); ++v) e += ex[v] * var_l[v];
    acc[e] += p.coefficient(t);
  }
  std::erase_if(acc, [](const auto& kv) { return sgn(kv.second) == 0; });
  if (acc.empty()) return {Poly(), 0};
  long lo = acc.begin()->first;
  std::vector<std::pair<std::vector<int32_t>, Rational>> terms;
  for (const auto& [e, coef] : acc) terms.push_back({{static_cast<int32_t>(e - lo)}, coef});
  return {Poly::from_terms({c}, terms), lo};
}

PositiveExprPtr substitute_tree(const PositiveExprPtr& e, const std::map<std::string, int>& l,
                                const std::string& c,
                                std::unordered_map<const PositiveExpr*, PositiveExprPtr>& memo) {
  if (auto it = memo.find(e.get()); it != memo.end()) return it->second;
  PositiveExprPtr out;
  switch (e->kind) {
    case PositiveExpr::Kind::Constant:
      out = e;
      break;
    case PositiveExpr::Kind::Atom:
      out = make_atom(c, e->exponent * l.at(e->var));
      break;
    default:
      out = make_node(e->kind, substitute_tree(e->lhs, l, c, memo), substitute_tree(e->rhs, l, c, memo));
  }
  memo.emplace(e.get(), out);
  return out;
}

}  // namespace

RatFun substitute_monomial(const RatFun& f, const std::map<std::string, int>& exponents,
                           const std::string& c) {
  if (f.is_zero()) return RatFun();
  Laurent n = to_laurent(f.num_, exponents, c);
  if (n.poly.is_zero()) return RatFun();
  Poly den(Rational(1));
  long shift = n.shift;
  for (const auto& fac : f.den_) {
    Laurent d = to_laurent(fac.base, exponents, c);
    if (d.poly.is_zero()) throw DivisionByZero();
    den = den * d.poly.pow(static_cast<unsigned>(fac.multiplicity));
    shift -= d.shift * fac.multiplicity;
  }
  Poly num = n.poly;
  if (shift > 0) num = num * Poly::variable(c, static_cast<int>(shift));
  else if (shift < 0) den = den * Poly::variable(c, static_cast<int>(-shift));
  PositiveExprPtr cert;
  if (f.cert_) {
    std::unordered_map<const PositiveExpr*, PositiveExprPtr> memo;
    cert = substitute_tree(f.cert_, exponents, c, memo);
  }
  Split s = split_poly(den);
  return RatFun::assemble(num.scaled(1 / s.lc), std::move(s.factors), cert);
}

long degree(const RatFun& f) {
  if (f.is_zero()) throw ZeroFunctionError("degree of the zero function");
  if (f.variables().size() > 1) throw std::invalid_argument("degree: not a univariate function");
  long d = f.num().total_degree();
  for (const auto& fac : f.den_factors()) d -= static_cast<long>(fac.base.total_degree()) * fac.multiplicity;
  return d;
}

}  // namespace geocrystal
