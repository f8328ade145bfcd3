#include <doctest.h>

#include "geocrystal/charts.hpp"
#include "geocrystal/error.hpp"

using namespace geocrystal;
using namespace geocrystal::charts;

namespace {

RatFun P(const char* s) { return RatFun::parse(s); }

RatFun a(int k, int j) { return RatFun::variable(sl::a_name(k, j)); }
RatFun A(int k, int j) { return RatFun::variable(A_name(k, j)); }

void require(const sl::IdentityReport& r) {
  INFO(r.identity << ": " << r.witness.value_or(""));
  CHECK(r.holds);
}

TorusPointB numeric_A(int n, std::vector<long> values) {
  TorusPointB q{Triangle<RatFun>(n)};
  REQUIRE(values.size() == q.A.size());
  for (std::size_t s = 0; s < values.size(); ++s) q.A.values()[s] = RatFun(values[s]);
  return q;
}

}  // namespace

TEST_SUITE("charts") {
  TEST_CASE("Y(a) for small rank") {
    MatRF y1 = buildY(symbolic_a(1));
    CHECK(y1 == sl::gen_y(1, a(1, 1), 1));

    MatRF y2 = buildY(symbolic_a(2));
    CHECK(y2(1, 0) == a(1, 1));
    CHECK(y2(2, 1) == a(1, 2) + a(2, 2));
    CHECK(y2(2, 0) == a(1, 1) * a(1, 2));
    CHECK(y2.is_lower_unitriangular());
    CHECK(y2 == sl::generic_lower_unipotent(2));
  }

  TEST_CASE("closed forms of f and varphi") {
    for (int n = 1; n <= 4; ++n) require(verify_f_varphi_closed(n));
    const auto p = symbolic_a(3);
    CHECK(f_closed(1, p) == a(1, 1) * a(1, 2) * a(1, 3));
    CHECK(f_closed(2, p) == a(1, 1) * a(1, 2) * a(2, 2) * a(2, 3));
    CHECK(varphi_closed(2, p) == a(1, 2) + a(2, 2));
    for (int i = 1; i <= 3; ++i) CHECK(varphi_closed(i, p) == sl::varphi(i, buildY(p)));
  }

  TEST_CASE("C coefficients") {
    const auto p = symbolic_a(3);
    const RatFun alpha = RatFun::variable(kAlpha);
    for (int i = 1; i <= 3; ++i) {
      CHECK(C_coeff(i, 0, alpha, p) == RatFun(1));
      CHECK(C_coeff(i, i, alpha, p) == alpha);
      for (int k = 0; k <= i; ++k) {
        CHECK(C_coeff(i, k, alpha, p).positive_cert());
        CHECK(C_coeff(i, k, RatFun(1), p) == RatFun(1));
      }
    }
  }

  TEST_CASE("e-action in a-coordinates") {
    const RatFun alpha = RatFun::variable(kAlpha);
    auto p1 = symbolic_a(1);
    CHECK(e_act_a(1, alpha, p1).a(1, 1) == a(1, 1) / alpha);
    for (int n = 1; n <= 3; ++n) {
      const auto p = symbolic_a(n);
      for (int i = 1; i <= n; ++i) {
        CHECK(e_act_a(i, RatFun(1), p) == p);
        require(verify_a_chart_action(i, n));
      }
    }
  }

  TEST_CASE("coordinate change xi") {
    const auto p1 = symbolic_a(1);
    CHECK(xi(p1).A(1, 1) == a(1, 1));
    CHECK(xi(symbolic_a(2)).A(2, 2) == a(2, 2) * a(1, 1) / a(1, 2));
    for (int n = 1; n <= 4; ++n) require(verify_xi_roundtrip(n));
    const auto q = symbolic_A(3);
    CHECK(xi(xi_inv(q)) == q);
    const auto back = xi_inv(q);
    for (const auto& v : back.a.values()) CHECK(v.positive_cert());
  }

  TEST_CASE("e-action in A-coordinates") {
    const RatFun alpha = RatFun::variable(kAlpha);
    CHECK(e_act_A(1, alpha, symbolic_A(1)).A(1, 1) == A(1, 1) / alpha);
    CHECK(e_act_A(1, RatFun(3), numeric_A(1, {6})).A(1, 1) == RatFun(2));
    CHECK(alpha_coeff(1, 1, alpha, symbolic_A(3)) == alpha);
    for (int n = 1; n <= 3; ++n) {
      const auto q = symbolic_A(n);
      for (int i = 1; i <= n; ++i) {
        CHECK(e_act_A(i, RatFun(1), q) == q);
        CHECK(e_act_A(i, P("c2"), e_act_A(i, P("c1"), q)) == e_act_A(i, P("c1*c2"), q));
        require(verify_chart_compat(i, n));
      }
    }
  }

  TEST_CASE("alpha_k is positive with alpha_i-fixed product") {
    const RatFun alpha = RatFun::variable(kAlpha);
    const auto q = symbolic_A(3);
    for (int i = 1; i <= 3; ++i)
      for (int k = 1; k <= i; ++k) CHECK(alpha_coeff(i, k, alpha, q).positive_cert());
  }

  TEST_CASE("gamma on the A-chart") {
    CHECK(gamma_A(symbolic_A(1)) == sl::gen_alphacheck(1, RatFun(1) / A(1, 1), 1));
    const auto g2 = gamma_A(symbolic_A(2)).coroots();
    CHECK(g2[0] == RatFun(1) / (A(1, 1) * A(1, 2)));
    CHECK(g2[1] == RatFun(1) / (A(1, 2) * A(2, 2)));
    for (int n = 1; n <= 3; ++n) {
      require(verify_gamma_chart(n));
      for (int i = 1; i <= n; ++i) require(verify_gamma_equivariance_A(i, n));
    }
  }

  TEST_CASE("Verma relations on the A-chart") {
    for (int n = 2; n <= 3; ++n)
      for (const auto& r : verify_verma_A_all(n)) require(r);
    CHECK(verify_verma_A_all(1).empty());
  }

  TEST_CASE("positivity") {
    for (int n = 1; n <= 4; ++n) require(verify_positivity(n, 100, 7 + n));
  }

  TEST_CASE("rank must be positive") {
    CHECK_THROWS(symbolic_a(0));
    CHECK_THROWS(symbolic_A(-1));
  }
}
