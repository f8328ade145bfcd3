#include <doctest.h>

#include "geocrystal/charts.hpp"
#include "geocrystal/error.hpp"
#include "geocrystal/slgroup.hpp"

using namespace geocrystal;
using namespace geocrystal::sl;

namespace {

RatFun P(const char* s) { return RatFun::parse(s); }

MatRF mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  MatRF m(rows.size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (const char* e : row) m(r, c++) = P(e);
    ++r;
  }
  return m;
}

void require(const IdentityReport& r) {
  INFO(r.identity << ": " << r.witness.value_or(""));
  CHECK(r.holds);
}

}  // namespace

TEST_SUITE("slgroup") {
  TEST_CASE("generators") {
    CHECK(gen_x(1, P("t"), 1) == mat({{"1", "t"}, {"0", "1"}}));
    CHECK(gen_y(1, P("t"), 1) * gen_y(1, P("s"), 1) == gen_y(1, P("t+s"), 1));
    CHECK(gen_alphacheck(1, P("c"), 2).to_matrix() == mat({{"c", "0", "0"}, {"0", "1/c", "0"}, {"0", "0", "1"}}));
    CHECK_THROWS_AS(gen_x(0, P("t"), 2), std::out_of_range);
    CHECK_THROWS_AS(gen_y(3, P("t"), 2), std::out_of_range);
    CHECK_THROWS(gen_alphacheck(1, RatFun(0), 2));
  }

  TEST_CASE("Cartan matrix of type A") {
    CartanA a{4};
    CHECK(a(2, 2) == 2);
    CHECK(a(2, 3) == -1);
    CHECK(a(3, 2) == -1);
    CHECK(a(1, 3) == 0);
  }

  TEST_CASE("torus elements") {
    auto t = TorusElem::from_coroots({P("c1"), P("c2")});
    CHECK(t.diagonal()[0] == P("c1"));
    CHECK(t.diagonal()[1] == P("c2/c1"));
    CHECK(t.diagonal()[2] == P("1/c2"));
    CHECK(t.coroots()[1] == P("c2"));
    CHECK(t * t.inverse() == TorusElem::identity(2));
    CHECK_THROWS(TorusElem::from_diagonal({P("2"), P("2")}));
  }

  TEST_CASE("gauss decomposition") {
    auto id = gauss(MatRF::identity(3));
    CHECK(id.lower == MatRF::identity(3));
    CHECK(id.torus == TorusElem::identity(2));
    CHECK(id.upper == MatRF::identity(3));

    auto g = mat({{"a", "b"}, {"c", "(1+b*c)/a"}});
    auto f = gauss(g);
    CHECK(f.lower == mat({{"1", "0"}, {"c/a", "1"}}));
    CHECK(f.torus.to_matrix() == mat({{"a", "0"}, {"0", "1/a"}}));
    CHECK(f.upper == mat({{"1", "b/a"}, {"0", "1"}}));

    auto xy = gauss(gen_x(1, P("s"), 1) * gen_y(1, P("a"), 1));
    CHECK(xy.lower == gen_y(1, P("a/(1+s*a)"), 1));
    CHECK(xy.torus == gen_alphacheck(1, P("1+s*a"), 1));
    CHECK(xy.upper == gen_x(1, P("s/(1+s*a)"), 1));

    CHECK_THROWS_AS(gauss(mat({{"0", "1"}, {"-1", "0"}})), DecompositionOutsideDomain);
  }

  TEST_CASE("gauss recomposes symbolic products") {
    const int n = 3;
    MatRF g = gen_x(2, P("s"), n) * gen_y(1, P("p"), n) * gen_x(1, P("t"), n) * gen_y(3, P("q"), n) *
              gen_alphacheck(2, P("c"), n).to_matrix() * gen_y(2, P("r"), n);
    auto f = gauss(g);
    CHECK(f.lower.is_lower_unitriangular());
    CHECK(f.upper.is_upper_unitriangular());
    CHECK(f.lower * f.torus.to_matrix() * f.upper == g);
    CHECK(pi_minus(g) * pi_plus(g) == g);
  }

  TEST_CASE("chi") {
    CHECK(chi(1, gen_y(1, P("a"), 1)) == P("a"));
    CHECK(chi(1, gen_y(1, P("a"), 1) * gen_alphacheck(1, P("c"), 1).to_matrix()) == P("a"));
    CHECK(chi(2, generic_lower_unipotent(2)) == P("a[1,2]+a[2,2]"));
    CHECK_THROWS(chi(1, gen_x(1, P("t"), 1)));
  }

  TEST_CASE("f_det") {
    CHECK(f_det(1, MatRF::identity(2)).is_zero());
    for (int i = 1; i <= 3; ++i) CHECK(f_det(i, MatRF::identity(4)).is_zero());
    const MatRF Y = generic_lower_unipotent(2);
    CHECK(f_det(1, Y) == P("a[1,1]*a[1,2]"));
    CHECK(f_det(2, Y) == P("a[1,1]*a[2,2]"));
    CHECK(f_det(1, gen_y(1, P("a"), 1)) == P("a"));
  }

  TEST_CASE("curly T, F and gamma") {
    const MatRF u = gen_y(1, P("a"), 1);
    CHECK(curly_t(u) == gen_alphacheck(1, P("1/a"), 1));
    CHECK(big_f(u) == mat({{"1", "0"}, {"a", "1"}}) * mat({{"1/a", "0"}, {"0", "a"}}));
    const MatRF Y = generic_lower_unipotent(2);
    CHECK(curly_t(Y) ==
          gen_alphacheck(1, P("1/(a[1,1]*a[1,2])"), 2) * gen_alphacheck(2, P("1/(a[1,1]*a[2,2])"), 2));
    CHECK(gamma(Y) == curly_t(Y));
    CHECK_THROWS_AS(curly_t(MatRF::identity(3)), TorusUndefined);
    CHECK_THROWS_AS(gamma(MatRF::identity(2)), TorusUndefined);
  }

  TEST_CASE("varphi") {
    for (int n = 1; n <= 4; ++n) {
      const MatRF Y = generic_lower_unipotent(n);
      for (int i = 1; i <= n; ++i) {
        RatFun s(0);
        for (int k = 1; k <= i; ++k) s += RatFun::variable(a_name(k, i));
        CHECK(varphi(i, Y) == s);
      }
    }
    CHECK(varphi(1, MatRF::identity(3)).is_zero());
    CHECK(varphi(1, gen_y(1, P("a"), 1)) == P("a"));
  }

  TEST_CASE("e_act") {
    const MatRF u = gen_y(1, P("a"), 1);
    CHECK(e_act(1, P("alpha"), u) == gen_y(1, P("a/alpha"), 1));
    CHECK(e_act(1, RatFun(1), u) == u);
    CHECK(e_act(1, RatFun(3), u) == gen_y(1, P("a/3"), 1));
    CHECK_THROWS_AS(e_act(1, P("c"), MatRF::identity(2)), PhiVanishes);
    for (int n = 1; n <= 3; ++n) {
      const MatRF Y = generic_lower_unipotent(n);
      for (int i = 1; i <= n; ++i) {
        CHECK(e_act(i, P("c"), Y) == e_act_closed_form(i, P("c"), Y));
        CHECK(e_act(i, P("c"), Y).is_lower_unitriangular());
      }
    }
  }

  TEST_CASE("product action") {
    const MatRF b1 = mat({{"2", "0"}, {"3", "1/2"}});
    const MatRF b2 = mat({{"1/5", "0"}, {"7", "5"}});
    const MatRF b3 = mat({{"4", "0"}, {"-1", "1/4"}});
    CHECK(product_act(MatRF::identity(2), std::pair{b1, b2}) == std::pair{b1, b2});

    const MatRF x = gen_x(1, P("s"), 1);
    // (b1 x b2) x b3 against b1 x (b2 x b3).
    auto left = product_act(x, std::pair{b1, b2});
    MatRF p3 = pi_minus(pi_plus(x * b1 * b2) * b3);
    MatRF p1 = pi_minus(x * b1);
    auto right = product_act(pi_plus(x * b1), std::pair{b2, b3});
    CHECK(left.first == p1);
    CHECK(left.second == right.first);
    CHECK(p3 == right.second);
    CHECK(product_act(x, std::vector<MatRF>{b1, b2, b3}) == std::vector<MatRF>{p1, right.first, right.second});

    // The product of the images is pi^- of x times the product.
    CHECK(left.first * left.second == pi_minus(x * b1 * b2));
  }

  TEST_CASE("Verma relations") {
    for (int n = 1; n <= 3; ++n)
      for (const auto& r : verify_verma_all(n)) require(r);
    require(verify_verma(1, 2, 2));
    require(verify_verma(1, 3, 3));
    CHECK(verify_verma_all(1).empty());
    CHECK_THROWS(verify_verma(1, 1, 2));
  }

  TEST_CASE("unipotent crystal identities") {
    for (int n = 1; n <= 3; ++n)
      for (int i = 1; i <= n; ++i) {
        require(verify_F_Umorphism(i, n));
        require(verify_T_condition(i, n));
        require(verify_unit_action(i, n));
        require(verify_gamma_equivariance(i, n));
        require(verify_one_parameter(i, n));
        require(verify_phi_scaling(i, n));
      }
  }

  TEST_CASE("commutation and determinants") {
    for (int n = 1; n <= 3; ++n) {
      require(verify_commutation(n));
      require(verify_determinants(n));
    }
  }

  TEST_CASE("f_det on the e-action scales by the torus factor") {
    const int n = 3;
    const MatRF Y = generic_lower_unipotent(n);
    for (int i = 1; i <= n; ++i) {
      MatRF moved = e_act(i, P("c"), Y);
      for (int k = 1; k <= n; ++k) {
        RatFun expected = k == i ? f_det(k, Y) / P("c") : f_det(k, Y);
        CHECK(f_det(k, moved) == expected);
      }
    }
  }

  TEST_CASE("closed product formula for f_i agrees with the determinant") {
    for (int n = 1; n <= 4; ++n) {
      const auto r = charts::verify_f_varphi_closed(n);
      require(r);
    }
  }
}
