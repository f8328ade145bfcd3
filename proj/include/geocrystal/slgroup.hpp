#ifndef GEOCRYSTAL_SLGROUP_HPP
#define GEOCRYSTAL_SLGROUP_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geocrystal/matrix.hpp"
#include "geocrystal/ratfun.hpp"

// SL_{n+1} over the rational-function field: generators, Gauss decomposition,
// and the unipotent/geometric crystal structure on the lower unipotent subgroup.
//
// Root indices i run over 1..n. Matrices have size n+1 with 0-based entries, so
// the 1-based (i+1, i) entry of the math is m(i, i-1).

namespace geocrystal::sl {

/// Cartan matrix of type A_n.
struct CartanA {
  int n;
  int operator()(int i, int j) const {
    if (i == j) return 2;
    return (i - j == 1 || j - i == 1) ? -1 : 0;
  }
};

/// Element of the diagonal torus of SL_{n+1}.
class TorusElem {
public:
  TorusElem() = default;
  /// Requires the product of the entries to be 1.
  static TorusElem from_diagonal(std::vector<RatFun> diag);
  /// prod_i alphacheck_i(c_i) for c = (c_1, ..., c_n).
  static TorusElem from_coroots(const std::vector<RatFun>& c);
  static TorusElem identity(int n);

  int rank() const { return static_cast<int>(diag_.size()) - 1; }
  const std::vector<RatFun>& diagonal() const { return diag_; }
  /// The c_i with this = prod_i alphacheck_i(c_i); c_i = d_1 * ... * d_i.
  std::vector<RatFun> coroots() const;
  MatRF to_matrix() const;
  TorusElem inverse() const;

  friend TorusElem operator*(const TorusElem& a, const TorusElem& b);
  friend bool operator==(const TorusElem& a, const TorusElem& b) { return a.diag_ == b.diag_; }

private:
  std::vector<RatFun> diag_;
};

MatRF gen_x(int i, const RatFun& t, int n);
MatRF gen_y(int i, const RatFun& t, int n);
/// diag(1, ..., c, c^{-1}, ..., 1) with c in slot i.
TorusElem gen_alphacheck(int i, const RatFun& c, int n);

/// Product gen_y(i_1, t_1) * gen_y(i_2, t_2) * ... in the given order.
MatRF y_word(int n, const std::vector<std::pair<int, RatFun>>& word);

/// Y(a) on symbolic coordinates a[k,j], 1 <= k <= j <= n.
MatRF generic_lower_unipotent(int n);
std::string a_name(int k, int j);

struct GaussFactors {
  MatRF lower;  // lower unitriangular
  TorusElem torus;
  MatRF upper;  // upper unitriangular
};

/// g = lower * torus * upper via LDU elimination on leading principal minors.
/// Throws DecompositionOutsideDomain if a leading principal minor is identically 0.
GaussFactors gauss(const MatRF& g);

/// B^- part of the B^- x U factorization (lower * torus).
MatRF pi_minus(const MatRF& g);
/// U part of the B^- x U factorization.
MatRF pi_plus(const MatRF& g);

/// chi_i on B^-: entry (i+1, i) divided by the diagonal entry (i, i).
RatFun chi(int i, const MatRF& b);
/// Determinant of the lower-left i x i block of u.
RatFun f_det(int i, const MatRF& u);
/// prod_i alphacheck_i(f_det(i, u)^{-1}); throws TorusUndefined if some f_det vanishes.
TorusElem curly_t(const MatRF& u);
/// u * curly_t(u), an element of B^-.
MatRF big_f(const MatRF& u);
inline TorusElem gamma(const MatRF& u) { return curly_t(u); }
/// Entry (i+1, i) of u.
RatFun varphi(int i, const MatRF& u);

/// e_i^c(u): the U^- factor of gen_x(i, (c-1)/varphi_i(u)) * u.
/// Throws PhiVanishes when varphi_i(u) is identically 0.
MatRF e_act(int i, const RatFun& c, const MatRF& u);
/// x_i(s) * u * x_i(-s/c) * alphacheck_i(c)^{-1} with s = (c-1)/varphi_i(u).
MatRF e_act_closed_form(int i, const RatFun& c, const MatRF& u);

/// U-action on a product of B^- factors: b_1 -> pi^-(x b_1), and x is replaced by
/// pi(x b_1) before acting on the next factor.
std::vector<MatRF> product_act(const MatRF& x, const std::vector<MatRF>& factors);
std::pair<MatRF, MatRF> product_act(const MatRF& x, const std::pair<MatRF, MatRF>& pair);

struct IdentityReport {
  std::string identity;
  bool holds = false;
  std::optional<std::string> witness;
};

IdentityReport compare_matrices(std::string identity, const MatRF& lhs, const MatRF& rhs);
IdentityReport compare_tori(std::string identity, const TorusElem& lhs, const TorusElem& rhs);

/// Verma relation for the pair (i, j), i != j, on Y(a) with symbolic c1, c2.
IdentityReport verify_verma(int i, int j, int n);
/// One report per unordered pair i < j (empty for n = 1).
std::vector<IdentityReport> verify_verma_all(int n);
/// F(pi^{--}(x_i(s) u)) = pi^-(x_i(s) F(u)) on Y(a) with symbolic s.
IdentityReport verify_F_Umorphism(int i, int n);
/// curly_t(pi^{--}(x u)) = pi^0(x u) curly_t(u) for x = x_i(s).
IdentityReport verify_T_condition(int i, int n);
/// e_i^1 = id on Y(a).
IdentityReport verify_unit_action(int i, int n);
/// gamma(e_i^c u) = alphacheck_i(c) gamma(u) on Y(a).
IdentityReport verify_gamma_equivariance(int i, int n);
/// e_i^{c2} e_i^{c1} = e_i^{c1 c2} on Y(a).
IdentityReport verify_one_parameter(int i, int n);
/// varphi_i(e_i^c u) = varphi_i(u) / c on Y(a).
IdentityReport verify_phi_scaling(int i, int n);
/// x_i(a) y_j(b) and alphacheck_i(a) x_j(b) rewritten in the opposite order, all i, j.
IdentityReport verify_commutation(int n);
/// Generators have determinant 1, as does Y(a) before and after e_i^c.
IdentityReport verify_determinants(int n);

}  // namespace geocrystal::sl

#endif
