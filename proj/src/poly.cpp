#include "geocrystal/poly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace geocrystal {

namespace {

using u128 = unsigned __int128;

// Union of two sorted variable lists, with index maps from each input into the union.
struct Alignment {
  std::vector<std::string> vars;
  std::vector<std::size_t> map_a, map_b;
};

Alignment align(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  Alignment out;
  out.vars.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  out.map_a.resize(a.size());
  out.map_b.resize(b.size());
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      out.map_a[i++] = out.vars.size();
      out.vars.push_back(a[i - 1]);
    } else if (i == a.size() || b[j] < a[i]) {
      out.map_b[j++] = out.vars.size();
      out.vars.push_back(b[j - 1]);
    } else {
      out.map_a[i++] = out.vars.size();
      out.map_b[j++] = out.vars.size();
      out.vars.push_back(a[i - 1]);
    }
  }
  return out;
}

std::vector<int32_t> remap(const std::vector<int32_t>& exps, std::size_t old_nv, std::size_t nterms,
                           const std::vector<std::size_t>& map, std::size_t new_nv) {
  std::vector<int32_t> out(nterms * new_nv, 0);
  for (std::size_t t = 0; t < nterms; ++t)
    for (std::size_t v = 0; v < old_nv; ++v) out[t * new_nv + map[v]] = exps[t * old_nv + v];
  return out;
}

int bit_width_of(long v) { return v <= 0 ? 1 : static_cast<int>(std::bit_width(static_cast<unsigned long>(v))); }

}  // namespace

int grlex_compare(std::span<const int32_t> a, std::span<const int32_t> b) {
  long da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

// Collects unsorted terms over a fixed variable list and produces a canonical Poly.
class PolyBuilder {
public:
  explicit PolyBuilder(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  void add(std::span<const int32_t> e, Rational c) {
    if (sgn(c) == 0) return;
    exps_.insert(exps_.end(), e.begin(), e.end());
    coeffs_.push_back(std::move(c));
  }
  void reserve(std::size_t n) {
    exps_.reserve(n * vars_.size());
    coeffs_.reserve(n);
  }

  Poly finish() {
    const std::size_t nv = vars_.size();
    const std::size_t n = coeffs_.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto span_of = [&](std::size_t t) { return std::span<const int32_t>(exps_.data() + t * nv, nv); };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return grlex_compare(span_of(x), span_of(y)) > 0;
    });
    Poly p;
    p.vars_ = std::move(vars_);
    for (std::size_t idx = 0; idx < n;) {
      Rational sum = coeffs_[order[idx]];
      std::size_t next = idx + 1;
      while (next < n && grlex_compare(span_of(order[idx]), span_of(order[next])) == 0)
        sum += coeffs_[order[next++]];
      if (sgn(sum) != 0) {
        auto s = span_of(order[idx]);
        p.exps_.insert(p.exps_.end(), s.begin(), s.end());
        p.coeffs_.push_back(std::move(sum));
      }
      idx = next;
    }
    p.drop_unused_variables();
    return p;
  }

private:
  std::vector<std::string> vars_;
  std::vector<int32_t> exps_;
  std::vector<Rational> coeffs_;
};

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) coeffs_.push_back(canonical(c));
}

Poly Poly::variable(const std::string& name, int exponent) {
  if (exponent < 0) throw std::invalid_argument("Poly::variable: negative exponent");
  Poly p;
  if (exponent == 0) {
    p.coeffs_.push_back(Rational(1));
    return p;
  }
  p.vars_.push_back(name);
  p.exps_.push_back(exponent);
  p.coeffs_.push_back(Rational(1));
  return p;
}

Poly Poly::from_terms(std::vector<std::string> vars,
                      const std::vector<std::pair<std::vector<int32_t>, Rational>>& terms) {
  // Sort variables, permuting exponent columns to match.
  std::vector<std::size_t> perm(vars.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](auto x, auto y) { return vars[x] < vars[y]; });
  std::vector<std::string> sorted;
  for (auto k : perm) sorted.push_back(vars[k]);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("Poly::from_terms: duplicate variable");
  PolyBuilder b(sorted);
  std::vector<int32_t> e(vars.size());
  for (const auto& [exps, c] : terms) {
    if (exps.size() != vars.size()) throw std::invalid_argument("Poly::from_terms: arity mismatch");
    for (std::size_t k = 0; k < perm.size(); ++k) {
      if (exps[perm[k]] < 0) throw std::invalid_argument("Poly::from_terms: negative exponent");
      e[k] = exps[perm[k]];
    }
    b.add(e, canonical(c));
  }
  return b.finish();
}

void Poly::drop_unused_variables() {
  const std::size_t nv = vars_.size();
  if (nv == 0) return;
  std::vector<bool> used(nv, false);
  for (std::size_t t = 0; t < coeffs_.size(); ++t)
    for (std::size_t v = 0; v < nv; ++v)
      if (exps_[t * nv + v] != 0) used[v] = true;
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> vars;
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < nv; ++v)
    if (used[v]) {
      keep.push_back(v);
      vars.push_back(vars_[v]);
    }
  std::vector<int32_t> exps;
  exps.reserve(coeffs_.size() * keep.size());
  for (std::size_t t = 0; t < coeffs_.size(); ++t)
    for (auto v : keep) exps.push_back(exps_[t * nv + v]);
  vars_ = std::move(vars);
  exps_ = std::move(exps);
}

bool Poly::all_coefficients_positive() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) > 0; });
}

int Poly::total_degree() const {
  if (is_zero()) throw std::domain_error("total_degree of the zero polynomial");
  int d = 0;
  for (auto e : exponents(0)) d += e;
  return d;  // leading term has maximal total degree
}

int Poly::degree_in(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return 0;
  std::size_t v = it - vars_.begin();
  int d = 0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) d = std::max(d, exps_[t * vars_.size() + v]);
  return d;
}

int Poly::min_exponent_in(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var || is_zero()) return 0;
  std::size_t v = it - vars_.begin();
  int d = exps_[v];
  for (std::size_t t = 1; t < coeffs_.size(); ++t) d = std::min(d, exps_[t * vars_.size() + v]);
  return d;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Poly Poly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return Poly();
  Poly p = *this;
  const Rational k = canonical(c);
  for (auto& x : p.coeffs_) x *= k;
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const bool same_vars = vars_ == o.vars_;
  Alignment al;
  std::vector<int32_t> ea, eb;
  const std::vector<int32_t>* pa = &exps_;
  const std::vector<int32_t>* pb = &o.exps_;
  std::size_t nv = vars_.size();
  if (!same_vars) {
    al = align(vars_, o.vars_);
    nv = al.vars.size();
    ea = remap(exps_, vars_.size(), term_count(), al.map_a, nv);
    eb = remap(o.exps_, o.vars_.size(), o.term_count(), al.map_b, nv);
    pa = &ea;
    pb = &eb;
  }
  Poly out;
  out.vars_ = same_vars ? vars_ : al.vars;
  out.exps_.reserve(pa->size() + pb->size());
  out.coeffs_.reserve(term_count() + o.term_count());
  auto sa = [&](std::size_t t) { return std::span<const int32_t>(pa->data() + t * nv, nv); };
  auto sb = [&](std::size_t t) { return std::span<const int32_t>(pb->data() + t * nv, nv); };
  std::size_t i = 0, j = 0;
  auto push = [&](std::span<const int32_t> e, Rational c) {
    if (sgn(c) == 0) return;
    out.exps_.insert(out.exps_.end(), e.begin(), e.end());
    out.coeffs_.push_back(std::move(c));
  };
  while (i < term_count() || j < o.term_count()) {
    int cmp;
    if (i == term_count()) cmp = -1;
    else if (j == o.term_count()) cmp = 1;
    else cmp = grlex_compare(sa(i), sb(j));
    if (cmp > 0) {
      push(sa(i), coeffs_[i]);
      ++i;
    } else if (cmp < 0) {
      push(sb(j), o.coeffs_[j]);
      ++j;
    } else {
      push(sa(i), coeffs_[i] + o.coeffs_[j]);
      ++i;
      ++j;
    }
  }
  out.drop_unused_variables();
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  if (is_constant()) return o.scaled(coeffs_[0]);
  if (o.is_constant()) return scaled(o.coeffs_[0]);

  Alignment al = align(vars_, o.vars_);
  const std::size_t nv = al.vars.size();
  std::vector<int32_t> ea = remap(exps_, vars_.size(), term_count(), al.map_a, nv);
  std::vector<int32_t> eb = remap(o.exps_, o.vars_.size(), o.term_count(), al.map_b, nv);

  // Field widths for a packed key [total degree | e_0 | ... | e_{nv-1}]; adding keys
  // multiplies monomials and integer order on keys is the graded-lex order.
  std::vector<int> width(nv);
  std::vector<long> max_a(nv, 0), max_b(nv, 0);
  for (std::size_t t = 0; t < term_count(); ++t)
    for (std::size_t v = 0; v < nv; ++v) max_a[v] = std::max<long>(max_a[v], ea[t * nv + v]);
  for (std::size_t t = 0; t < o.term_count(); ++t)
    for (std::size_t v = 0; v < nv; ++v) max_b[v] = std::max<long>(max_b[v], eb[t * nv + v]);
  int total_bits = bit_width_of(total_degree() + o.total_degree());
  const int deg_bits = total_bits;
  for (std::size_t v = 0; v < nv; ++v) {
    width[v] = bit_width_of(max_a[v] + max_b[v]);
    total_bits += width[v];
  }

  const std::size_t na = term_count(), nb = o.term_count();
  if (total_bits <= 127) {
    auto pack = [&](const std::vector<int32_t>& e, std::size_t t) {
      u128 key = 0;
      long deg = 0;
      for (std::size_t v = 0; v < nv; ++v) deg += e[t * nv + v];
      key = static_cast<u128>(deg);
      for (std::size_t v = 0; v < nv; ++v) key = (key << width[v]) | static_cast<u128>(e[t * nv + v]);
      return key;
    };
    std::vector<u128> ka(na), kb(nb);
    for (std::size_t t = 0; t < na; ++t) ka[t] = pack(ea, t);
    for (std::size_t t = 0; t < nb; ++t) kb[t] = pack(eb, t);
    std::vector<std::pair<u128, std::uint32_t>> prods;
    prods.reserve(na * nb);
    for (std::size_t x = 0; x < na; ++x)
      for (std::size_t y = 0; y < nb; ++y)
        prods.emplace_back(ka[x] + kb[y], static_cast<std::uint32_t>(x * nb + y));
    std::sort(prods.begin(), prods.end(),
              [](const auto& p, const auto& q) { return p.first > q.first; });
    Poly out;
    out.vars_ = std::move(al.vars);
    std::vector<int32_t> e(nv);
    Rational sum, tmp;
    for (std::size_t idx = 0; idx < prods.size();) {
      const u128 key = prods[idx].first;
      mpq_mul(sum.get_mpq_t(), coeffs_[prods[idx].second / nb].get_mpq_t(),
              o.coeffs_[prods[idx].second % nb].get_mpq_t());
      std::size_t next = idx + 1;
      for (; next < prods.size() && prods[next].first == key; ++next) {
        mpq_mul(tmp.get_mpq_t(), coeffs_[prods[next].second / nb].get_mpq_t(),
                o.coeffs_[prods[next].second % nb].get_mpq_t());
        sum += tmp;
      }
      if (sgn(sum) != 0) {
        u128 k = key;
        for (std::size_t v = nv; v-- > 0;) {
          e[v] = static_cast<int32_t>(k & ((static_cast<u128>(1) << width[v]) - 1));
          k >>= width[v];
        }
        out.exps_.insert(out.exps_.end(), e.begin(), e.end());
        out.coeffs_.push_back(sum);
      }
      idx = next;
    }
    (void)deg_bits;
    out.drop_unused_variables();
    return out;
  }

  PolyBuilder b(al.vars);
  b.reserve(na * nb);
  std::vector<int32_t> e(nv);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) {
      for (std::size_t v = 0; v < nv; ++v) e[v] = ea[x * nv + v] + eb[y * nv + v];
      b.add(e, coeffs_[x] * o.coeffs_[y]);
    }
  return b.finish();
}

Poly Poly::pow(unsigned e) const {
  Poly result(Rational(1));
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::divide_by_variable(const std::string& var, int e) const {
  if (e == 0) return *this;
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) throw std::invalid_argument("divide_by_variable: variable absent");
  std::size_t v = it - vars_.begin();
  Poly p = *this;
  for (std::size_t t = 0; t < p.coeffs_.size(); ++t) {
    auto& x = p.exps_[t * vars_.size() + v];
    if (x < e) throw std::invalid_argument("divide_by_variable: not divisible");
    x -= e;
  }
  // Dividing every term by the same monomial preserves graded-lex order.
  p.drop_unused_variables();
  return p;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("divide_exact by zero polynomial");
  if (is_zero()) return Poly();
  if (d.is_constant()) return scaled(1 / d.coeffs_[0]);
  // Every variable of d must occur in *this.
  std::vector<std::size_t> dmap(d.vars_.size());
  for (std::size_t k = 0; k < d.vars_.size(); ++k) {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), d.vars_[k]);
    if (it == vars_.end() || *it != d.vars_[k]) return std::nullopt;
    dmap[k] = it - vars_.begin();
  }
  const std::size_t nv = vars_.size();
  Poly dd;
  dd.vars_ = vars_;
  dd.exps_ = remap(d.exps_, d.vars_.size(), d.term_count(), dmap, nv);
  dd.coeffs_ = d.coeffs_;
  if (d.total_degree() > total_degree()) return std::nullopt;

  const Rational inv_lc = 1 / dd.coeffs_[0];
  Poly r = *this;
  r.vars_ = vars_;  // keep full variable list while reducing
  std::vector<int32_t> qexps;
  std::vector<Rational> qcoeffs;
  std::vector<int32_t> shift(nv);
  while (!r.is_zero()) {
    // r may have dropped variables; realign to vars_ if needed.
    if (r.vars_ != vars_) {
      Alignment al = align(vars_, r.vars_);
      if (al.vars.size() != nv) return std::nullopt;
      r.exps_ = remap(r.exps_, r.vars_.size(), r.term_count(), al.map_b, nv);
      r.vars_ = vars_;
    }
    for (std::size_t v = 0; v < nv; ++v) {
      shift[v] = r.exps_[v] - dd.exps_[v];
      if (shift[v] < 0) return std::nullopt;
    }
    Rational c = r.coeffs_[0] * inv_lc;
    Poly sub;
    sub.vars_ = vars_;
    sub.exps_ = dd.exps_;
    for (std::size_t t = 0; t < dd.term_count(); ++t)
      for (std::size_t v = 0; v < nv; ++v) sub.exps_[t * nv + v] += shift[v];
    sub.coeffs_.reserve(dd.term_count());
    for (const auto& x : dd.coeffs_) sub.coeffs_.push_back(x * c);
    qexps.insert(qexps.end(), shift.begin(), shift.end());
    qcoeffs.push_back(std::move(c));
    Poly next = r - sub;
    r = std::move(next);
  }
  Poly q;
  q.vars_ = vars_;
  q.exps_ = std::move(qexps);
  q.coeffs_ = std::move(qcoeffs);
  q.drop_unused_variables();
  return q;
}

Rational Poly::evaluate(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> vals;
  vals.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = point.find(v);
    if (it == point.end()) throw std::invalid_argument("evaluate: no value for variable " + v);
    vals.push_back(canonical(it->second));
  }
  Rational sum = 0, term, pw;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    term = coeffs_[t];
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      int e = exps_[t * vars_.size() + v];
      if (e == 0) continue;
      mpz_pow_ui(mpq_numref(pw.get_mpq_t()), mpq_numref(vals[v].get_mpq_t()), e);
      mpz_pow_ui(mpq_denref(pw.get_mpq_t()), mpq_denref(vals[v].get_mpq_t()), e);
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    Rational c = coeffs_[t];
    if (t == 0) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    bool has_vars = false;
    for (std::size_t v = 0; v < vars_.size(); ++v)
      if (exps_[t * vars_.size() + v] != 0) has_vars = true;
    bool wrote = false;
    if (!has_vars || c != 1) {
      if (c.get_den() == 1) os << c.get_num().get_str();
      else os << "(" << c.get_num().get_str() << "/" << c.get_den().get_str() << ")";
      wrote = true;
    }
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      int e = exps_[t * vars_.size() + v];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << vars_[v];
      if (e != 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.vars_ != b.vars_) return a.vars_ < b.vars_;
  if (a.exps_ != b.exps_) return a.exps_ < b.exps_;
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  return false;
}

}  // namespace geocrystal
