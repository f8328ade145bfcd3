#ifndef GEOCRYSTAL_UD_HPP
#define GEOCRYSTAL_UD_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geocrystal/gyt.hpp"
#include "geocrystal/ratfun.hpp"
#include "geocrystal/triangle.hpp"

// Ultra-discretization: subtraction-free rational functions become max-plus
// piecewise-linear functions on integer points (x*y -> X+Y, x/y -> X-Y,
// x+y -> max(X,Y), positive constants -> 0).

namespace geocrystal::ud {

/// A tropical value; std::nullopt is the bottom element (minus infinity).
using TropValue = std::optional<std::int64_t>;

class TropExpr {
public:
  enum class Kind { Var, Zero, Bottom, Sum, Diff, Max };
  struct Node {
    Kind kind;
    int var = -1;            // Var: coordinate index
    std::int64_t coeff = 1;  // Var: integer multiple of the coordinate
    std::vector<int> children;
  };

  TropExpr() = default;
  TropExpr(std::vector<std::string> vars, std::vector<Node> nodes);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t dimension() const { return vars_.size(); }
  /// Nodes in topological order; the last one is the root.
  const std::vector<Node>& nodes() const { return nodes_; }

  /// Max-plus evaluation; throws DimensionMismatch if l has the wrong length.
  TropValue eval(std::span<const std::int64_t> l) const;

  /// Prefix form such as `(- (max X Y) Z)`.
  std::string to_string() const;

private:
  std::vector<std::string> vars_;
  std::vector<Node> nodes_;
};

/// Structural tropicalization of the positivity certificate of f over the
/// coordinates `vars` (every variable of f must appear). Throws NotPositive when
/// f has no certificate.
TropExpr tropicalize(const RatFun& f, const std::vector<std::string>& vars);

/// deg of f(c^{l_1}, ..., c^{l_m}) computed by exact substitution.
std::int64_t degree_oracle(const RatFun& f, const std::vector<std::string>& vars, std::span<const std::int64_t> l);

struct TropMap {
  std::vector<std::string> domain;
  std::vector<std::string> names;  // component labels
  std::vector<TropExpr> components;

  std::vector<TropValue> eval(std::span<const std::int64_t> l) const;
};

/// Componentwise tropicalization; labels default to "0", "1", ...
TropMap ud_map(const std::vector<RatFun>& components, const std::vector<std::string>& vars,
               std::vector<std::string> names = {});

/// Coordinate (k, j) of the torus lattice becomes B_{k,j+1}.
gyt::SharpElement chart_to_sharp(const Triangle<std::int64_t>& l);
Triangle<std::int64_t> sharp_to_chart(const gyt::SharpElement& v);

}  // namespace geocrystal::ud

#endif
