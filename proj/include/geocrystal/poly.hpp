#ifndef GEOCRYSTAL_POLY_HPP
#define GEOCRYSTAL_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace geocrystal {

using Rational = mpq_class;

/// Copy of c in lowest terms; mpq_class(num, den) does not reduce by itself.
inline Rational canonical(Rational c) {
  c.canonicalize();
  return c;
}

/// Sparse multivariate polynomial over the rationals in canonical expanded form.
///
/// Variables are kept sorted by name and only variables that actually occur are
/// stored. Terms are sorted by descending graded-lexicographic order of their
/// exponent vectors (leading term first) and carry nonzero coefficients, so two
/// equal polynomials always have identical representations.
class Poly {
public:
  Poly() = default;
  explicit Poly(const Rational& c);
  explicit Poly(long c) : Poly(Rational(c)) {}

  static Poly variable(const std::string& name, int exponent = 1);
  /// Builds from (exponents, coefficient) pairs over `vars`; duplicates are merged.
  static Poly from_terms(std::vector<std::string> vars,
                         const std::vector<std::pair<std::vector<int32_t>, Rational>>& terms);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t num_vars() const { return vars_.size(); }
  std::size_t term_count() const { return coeffs_.size(); }
  std::span<const int32_t> exponents(std::size_t t) const {
    return {exps_.data() + t * vars_.size(), vars_.size()};
  }
  const Rational& coefficient(std::size_t t) const { return coeffs_[t]; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  /// Constant value; only meaningful when is_constant().
  Rational constant_value() const { return is_zero() ? Rational(0) : coeffs_[0]; }
  const Rational& leading_coefficient() const { return coeffs_.front(); }
  bool all_coefficients_positive() const;

  int total_degree() const;
  int degree_in(const std::string& var) const;
  /// Exponent of `var` that divides every term (0 if absent).
  int min_exponent_in(const std::string& var) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  Poly pow(unsigned e) const;
  /// Divides every term by var^e; requires e <= min_exponent_in(var).
  Poly divide_by_variable(const std::string& var, int e) const;

  /// Exact quotient if `d` divides this polynomial, otherwise nullopt.
  std::optional<Poly> divide_exact(const Poly& d) const;

  Rational evaluate(const std::map<std::string, Rational>& point) const;

  /// Canonical text form, e.g. `(3/2)*a[1,2]^2*c1 + 1`.
  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.exps_ == b.exps_ && a.coeffs_ == b.coeffs_;
  }
  /// Total order used for canonical factor lists (not a monomial order).
  friend bool operator<(const Poly& a, const Poly& b);

private:
  friend class PolyBuilder;
  std::vector<std::string> vars_;
  std::vector<int32_t> exps_;   // term-major, vars_.size() entries per term
  std::vector<Rational> coeffs_;

  void drop_unused_variables();
};

/// Compares exponent vectors in graded-lexicographic order; returns <0, 0, >0.
int grlex_compare(std::span<const int32_t> a, std::span<const int32_t> b);

}  // namespace geocrystal

#endif
