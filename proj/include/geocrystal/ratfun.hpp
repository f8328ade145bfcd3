#ifndef GEOCRYSTAL_RATFUN_HPP
#define GEOCRYSTAL_RATFUN_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "geocrystal/poly.hpp"

namespace geocrystal {

/// Construction history of a value built only from variables (or Laurent monomials
/// in them), positive rational constants, +, * and /. Its existence is the
/// subtraction-free certificate; the tropicalization walks this tree.
struct PositiveExpr {
  enum class Kind { Constant, Atom, Sum, Product, Quotient };
  Kind kind;
  Rational value;            // Constant (> 0)
  std::string var;           // Atom: var^exponent
  int exponent = 0;
  std::shared_ptr<const PositiveExpr> lhs, rhs;
};
using PositiveExprPtr = std::shared_ptr<const PositiveExpr>;

/// Exact multivariate rational function over Q.
///
/// The numerator is an expanded Poly; the denominator is kept as a sorted list of
/// factors (single variables, and monic polynomials free of monomial content) with
/// multiplicities. Fractions are not GCD-reduced, but numerators are trial-divided
/// by each denominator factor after every operation. Equality is extensional.
class RatFun {
public:
  struct Factor {
    Poly base;
    int multiplicity;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  RatFun() = default;
  RatFun(long c) : RatFun(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Rational& c);               // NOLINT(google-explicit-constructor)
  explicit RatFun(const Poly& p);

  static RatFun variable(const std::string& name);
  static RatFun fraction(const Poly& num, const Poly& den);
  static RatFun parse(std::string_view text);

  const Poly& num() const { return num_; }
  /// Expanded denominator (product of the factor list).
  Poly den() const;
  const std::vector<Factor>& den_factors() const { return den_; }

  bool positive_cert() const { return cert_ != nullptr; }
  const PositiveExprPtr& certificate() const { return cert_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  std::vector<std::string> variables() const;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  friend RatFun operator+(const RatFun& f, const RatFun& g);
  friend RatFun operator-(const RatFun& f, const RatFun& g);
  friend RatFun operator*(const RatFun& f, const RatFun& g);
  /// Throws DivisionByZero when g is the zero function.
  friend RatFun operator/(const RatFun& f, const RatFun& g);
  RatFun pow(int e) const;
  RatFun inverse() const { return RatFun(1) / *this; }

  /// f == g iff f.num * g.den - g.num * f.den expands to zero.
  friend bool operator==(const RatFun& f, const RatFun& g);

  /// `num` alone when the denominator is 1, otherwise `(num) / (den)`.
  std::string to_string() const;

private:
  Poly num_;
  std::vector<Factor> den_;
  PositiveExprPtr cert_;

  static RatFun assemble(Poly num, std::vector<Factor> den, PositiveExprPtr cert);
  friend RatFun substitute_monomial(const RatFun&, const std::map<std::string, int>&, const std::string&);
};

/// Exact value at a rational point; throws PoleError when the denominator vanishes.
Rational evaluate(const RatFun& f, const std::map<std::string, Rational>& point);

/// Substitutes var -> c^l(var) (l may be negative) and clears the result into a
/// univariate rational function in `c`. Every variable of f must be assigned.
RatFun substitute_monomial(const RatFun& f, const std::map<std::string, int>& exponents,
                           const std::string& c = "c");

/// deg(num) - deg(den) of a rational function in at most one variable.
long degree(const RatFun& f);

std::ostream& operator<<(std::ostream& os, const RatFun& f);

}  // namespace geocrystal

#endif
