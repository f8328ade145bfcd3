#include "geocrystal/ud.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "geocrystal/error.hpp"

namespace geocrystal::ud {

TropExpr::TropExpr(std::vector<std::string> vars, std::vector<Node> nodes)
    : vars_(std::move(vars)), nodes_(std::move(nodes)) {
  for (std::size_t k = 0; k < nodes_.size(); ++k)
    for (int c : nodes_[k].children)
      if (c < 0 || static_cast<std::size_t>(c) >= k) throw std::invalid_argument("TropExpr nodes not in topological order");
}

TropValue TropExpr::eval(std::span<const std::int64_t> l) const {
  if (l.size() != vars_.size())
    throw DimensionMismatch("tropical evaluation: expected " + std::to_string(vars_.size()) + " coordinates, got " +
                            std::to_string(l.size()));
  if (nodes_.empty()) return std::nullopt;
  std::vector<TropValue> val(nodes_.size());
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    const Node& nd = nodes_[k];
    switch (nd.kind) {
      case Kind::Var: val[k] = nd.coeff * l[nd.var]; break;
      case Kind::Zero: val[k] = 0; break;
      case Kind::Bottom: val[k] = std::nullopt; break;
      case Kind::Sum: {
        std::int64_t s = 0;
        bool bottom = false;
        for (int c : nd.children) {
          if (!val[c]) bottom = true;
          else s += *val[c];
        }
        val[k] = bottom ? TropValue() : TropValue(s);
        break;
      }
      case Kind::Diff: {
        const auto& a = val[nd.children[0]];
        const auto& b = val[nd.children[1]];
        if (!b) throw std::domain_error("tropical division by bottom");
        val[k] = a ? TropValue(*a - *b) : TropValue();
        break;
      }
      case Kind::Max: {
        TropValue m;
        for (int c : nd.children)
          if (val[c] && (!m || *val[c] > *m)) m = val[c];
        val[k] = m;
        break;
      }
    }
  }
  return val.back();
}

std::string TropExpr::to_string() const {
  if (nodes_.empty()) return "-inf";
  std::function<std::string(int)> rec = [&](int k) -> std::string {
    const Node& nd = nodes_[k];
    auto list = [&](const char* op) {
      std::string s = std::string("(") + op;
      for (int c : nd.children) s += " " + rec(c);
      return s + ")";
    };
    switch (nd.kind) {
      case Kind::Var:
        return nd.coeff == 1 ? vars_[nd.var] : "(* " + std::to_string(nd.coeff) + " " + vars_[nd.var] + ")";
      case Kind::Zero: return "0";
      case Kind::Bottom: return "-inf";
      case Kind::Sum: return list("+");
      case Kind::Diff: return list("-");
      case Kind::Max: return list("max");
    }
    return "";
  };
  return rec(static_cast<int>(nodes_.size()) - 1);
}

namespace {

class Builder {
public:
  explicit Builder(const std::vector<std::string>& vars) {
    for (std::size_t k = 0; k < vars.size(); ++k) index_[vars[k]] = static_cast<int>(k);
  }

  int walk(const PositiveExprPtr& e) {
    if (auto it = memo_.find(e.get()); it != memo_.end()) return it->second;
    int id = -1;
    switch (e->kind) {
      case PositiveExpr::Kind::Constant: id = zero(); break;
      case PositiveExpr::Kind::Atom: {
        auto it = index_.find(e->var);
        if (it == index_.end()) throw std::invalid_argument("tropicalize: no coordinate for variable " + e->var);
        id = push({TropExpr::Kind::Var, it->second, e->exponent, {}});
        break;
      }
      case PositiveExpr::Kind::Product: id = flat(TropExpr::Kind::Sum, walk(e->lhs), walk(e->rhs)); break;
      case PositiveExpr::Kind::Sum: id = flat(TropExpr::Kind::Max, walk(e->lhs), walk(e->rhs)); break;
      case PositiveExpr::Kind::Quotient: {
        int a = walk(e->lhs), b = walk(e->rhs);
        id = nodes_[b].kind == TropExpr::Kind::Zero ? a : push({TropExpr::Kind::Diff, -1, 1, {a, b}});
        break;
      }
    }
    memo_.emplace(e.get(), id);
    return id;
  }

  // Reorders so the root is last; nodes are already topologically sorted.
  std::vector<TropExpr::Node> finish(int root) {
    std::vector<int> keep(nodes_.size(), -1);
    std::vector<int> stack{root};
    std::vector<bool> live(nodes_.size(), false);
    while (!stack.empty()) {
      int k = stack.back();
      stack.pop_back();
      if (live[k]) continue;
      live[k] = true;
      for (int c : nodes_[k].children) stack.push_back(c);
    }
    std::vector<TropExpr::Node> out;
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      if (!live[k]) continue;
      TropExpr::Node nd = nodes_[k];
      for (int& c : nd.children) c = keep[c];
      keep[k] = static_cast<int>(out.size());
      out.push_back(std::move(nd));
    }
    return out;
  }

private:
  std::unordered_map<std::string, int> index_;
  std::unordered_map<const PositiveExpr*, int> memo_;
  std::vector<TropExpr::Node> nodes_;
  int zero_ = -1;

  int push(TropExpr::Node nd) {
    nodes_.push_back(std::move(nd));
    return static_cast<int>(nodes_.size()) - 1;
  }
  int zero() {
    if (zero_ < 0) zero_ = push({TropExpr::Kind::Zero, -1, 1, {}});
    return zero_;
  }

  // Sum/Max of a and b, merging children of same-kind operands. Zero is the unit
  // of Sum, and Max(x, x) = x.
  int flat(TropExpr::Kind kind, int a, int b) {
    std::vector<int> ch;
    for (int x : {a, b}) {
      if (kind == TropExpr::Kind::Sum && nodes_[x].kind == TropExpr::Kind::Zero) continue;
      if (nodes_[x].kind == kind) ch.insert(ch.end(), nodes_[x].children.begin(), nodes_[x].children.end());
      else ch.push_back(x);
    }
    if (kind == TropExpr::Kind::Max) {
      std::sort(ch.begin(), ch.end());
      ch.erase(std::unique(ch.begin(), ch.end()), ch.end());
    }
    if (ch.empty()) return zero();
    if (ch.size() == 1) return ch.front();
    return push({kind, -1, 1, std::move(ch)});
  }
};

}  // namespace

TropExpr tropicalize(const RatFun& f, const std::vector<std::string>& vars) {
  if (!f.positive_cert()) throw NotPositive("tropicalize: no subtraction-free certificate for " + f.to_string());
  Builder b(vars);
  int root = b.walk(f.certificate());
  return TropExpr(vars, b.finish(root));
}

std::int64_t degree_oracle(const RatFun& f, const std::vector<std::string>& vars, std::span<const std::int64_t> l) {
  if (l.size() != vars.size()) throw DimensionMismatch("degree_oracle: coordinate count mismatch");
  if (f.is_zero()) throw ZeroFunctionError("degree of the zero function");
  std::map<std::string, int> ex;
  for (std::size_t k = 0; k < vars.size(); ++k) ex[vars[k]] = static_cast<int>(l[k]);
  // A name that cannot clash with parsed identifiers.
  return degree(substitute_monomial(f, ex, "%c"));
}

std::vector<TropValue> TropMap::eval(std::span<const std::int64_t> l) const {
  std::vector<TropValue> out;
  for (const auto& c : components) out.push_back(c.eval(l));
  return out;
}

TropMap ud_map(const std::vector<RatFun>& components, const std::vector<std::string>& vars,
               std::vector<std::string> names) {
  if (names.empty())
    for (std::size_t k = 0; k < components.size(); ++k) names.push_back(std::to_string(k));
  if (names.size() != components.size()) throw DimensionMismatch("ud_map: one name per component");
  TropMap m{vars, std::move(names), {}};
  for (const auto& f : components) m.components.push_back(tropicalize(f, vars));
  return m;
}

gyt::SharpElement chart_to_sharp(const Triangle<std::int64_t>& l) {
  gyt::SharpElement v(l.rank());
  for (auto [k, j] : Triangle<std::int64_t>::indices(l.rank())) v.B(k, j + 1) = l(k, j);
  return v;
}

Triangle<std::int64_t> sharp_to_chart(const gyt::SharpElement& v) {
  Triangle<std::int64_t> l(v.rank(), 0);
  for (auto [k, j] : Triangle<std::int64_t>::indices(v.rank())) l(k, j) = v.B(k, j + 1);
  return l;
}

}  // namespace geocrystal::ud
