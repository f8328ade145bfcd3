#ifndef GEOCRYSTAL_CHARTS_HPP
#define GEOCRYSTAL_CHARTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "geocrystal/ratfun.hpp"
#include "geocrystal/slgroup.hpp"
#include "geocrystal/triangle.hpp"

// Torus charts of U^-: the a-chart Y(a) built from a fixed reduced word, and the
// A-chart obtained from it by the birational change of coordinates xi.

namespace geocrystal::charts {

struct TorusPointA {
  Triangle<RatFun> a;
  int rank() const { return a.rank(); }
  friend bool operator==(const TorusPointA&, const TorusPointA&) = default;
};

struct TorusPointB {
  Triangle<RatFun> A;
  int rank() const { return A.rank(); }
  friend bool operator==(const TorusPointB&, const TorusPointB&) = default;
};

/// Name of the crystal parameter used by the symbolic checks.
inline const std::string kAlpha = "alpha";

std::string A_name(int k, int j);
/// Coordinates a[k,j] as free symbols.
TorusPointA symbolic_a(int n);
/// Coordinates A[k,j] as free symbols.
TorusPointB symbolic_A(int n);

/// Y(a) = prod_{k=1..n} y_n(a_{k,n}) y_{n-1}(a_{k,n-1}) ... y_k(a_{k,k}).
MatRF buildY(const TorusPointA& p);

/// Closed forms on Y(a): prod_{k<=i} prod_{k<=j<=n-i+k} a_{k,j}, and sum_{k<=i} a_{k,i}.
RatFun f_closed(int i, const TorusPointA& p);
RatFun varphi_closed(int i, const TorusPointA& p);

/// C_k^{(i)}, 0 <= k <= i, with C_0 = 1 and C_i = alpha. Subtraction-free.
RatFun C_coeff(int i, int k, const RatFun& alpha, const TorusPointA& p);
/// e_i^alpha in a-coordinates.
TorusPointA e_act_a(int i, const RatFun& alpha, const TorusPointA& p);

TorusPointB xi(const TorusPointA& p);
TorusPointA xi_inv(const TorusPointB& q);

/// alpha_k^{(i)}, 1 <= k <= i, as a ratio of alpha-weighted partial sums.
RatFun alpha_coeff(int i, int k, const RatFun& alpha, const TorusPointB& q);
/// e_i^alpha in A-coordinates: A_{k,i-1} *= alpha_k, A_{k,i} /= alpha_k.
TorusPointB e_act_A(int i, const RatFun& alpha, const TorusPointB& q);

/// gamma on the A-chart: prod_i alphacheck_i(prod_{k<=i, i<=j<=n} A_{k,j})^{-1}.
sl::TorusElem gamma_A(const TorusPointB& q);

// Symbolic identity checks; each compares both sides exactly.
sl::IdentityReport verify_f_varphi_closed(int n);
sl::IdentityReport verify_a_chart_action(int i, int n);
sl::IdentityReport verify_chart_compat(int i, int n);
sl::IdentityReport verify_xi_roundtrip(int n);
sl::IdentityReport verify_gamma_chart(int n);
sl::IdentityReport verify_gamma_equivariance_A(int i, int n);
sl::IdentityReport verify_verma_A(int i, int j, int n);
std::vector<sl::IdentityReport> verify_verma_A_all(int n);

/// Every component of e_act_A, gamma_A, xi and xi_inv (symbolic coordinates and
/// alpha) carries a positivity certificate, and evaluates > 0 at `samples`
/// random positive rational points.
sl::IdentityReport verify_positivity(int n, int samples, std::uint64_t seed);

}  // namespace geocrystal::charts

#endif
