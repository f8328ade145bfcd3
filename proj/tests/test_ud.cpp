#include <doctest.h>

#include <random>

#include "geocrystal/charts.hpp"
#include "geocrystal/error.hpp"
#include "geocrystal/ud.hpp"

using namespace geocrystal;
using namespace geocrystal::ud;

namespace {

RatFun P(const char* s) { return RatFun::parse(s); }

using Pt = std::vector<std::int64_t>;

TropValue at(const TropExpr& e, Pt l) { return e.eval(l); }

RatFun random_positive(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 1 : 4);
  switch (pick(rng)) {
    case 0: return RatFun::variable(std::string(1, "xyz"[rng() % 3]));
    case 1: return RatFun(static_cast<long>(1 + rng() % 4));
    case 2: return random_positive(rng, depth - 1) + random_positive(rng, depth - 1);
    case 3: return random_positive(rng, depth - 1) * random_positive(rng, depth - 1);
    default: return random_positive(rng, depth - 1) / random_positive(rng, depth - 1);
  }
}

const std::vector<std::string> kXYZ{"x", "y", "z"};

}  // namespace

TEST_SUITE("ud") {
  TEST_CASE("tropicalization examples") {
    CHECK(at(tropicalize(P("x*y"), {"x", "y"}), {2, 3}) == 5);
    CHECK(at(tropicalize(P("(x+y)/z"), kXYZ), {2, 0, 1}) == 1);
    CHECK(at(tropicalize(P("7*x"), {"x"}), {4}) == 4);
    CHECK(at(tropicalize(P("x^2/y^3"), {"x", "y"}), {1, 1}) == -1);
    CHECK(at(tropicalize(P("5"), {"x"}), {9}) == 0);
    CHECK(tropicalize(P("(x+y)/z"), kXYZ).to_string().rfind("(- (max ", 0) == 0);
    CHECK_THROWS_AS(tropicalize(P("x-y"), {"x", "y"}), NotPositive);
    CHECK_THROWS_AS(tropicalize(RatFun(0), {"x"}), NotPositive);
    CHECK_THROWS_AS(tropicalize(P("x*y"), {"x"}), std::invalid_argument);
  }

  TEST_CASE("alpha_1 on rank one is the crystal parameter") {
    const auto vars = std::vector<std::string>{charts::A_name(1, 1), charts::kAlpha};
    auto e = tropicalize(charts::alpha_coeff(1, 1, RatFun::variable(charts::kAlpha), charts::symbolic_A(1)), vars);
    CHECK(at(e, {7, 1}) == 1);
    CHECK(at(e, {-3, -4}) == -4);
  }

  TEST_CASE("evaluation checks the dimension") {
    auto e = tropicalize(P("x+y"), {"x", "y"});
    CHECK_THROWS_AS(at(e, {1}), DimensionMismatch);
    CHECK_THROWS_AS(at(e, {1, 2, 3}), DimensionMismatch);
  }

  TEST_CASE("bottom element") {
    using K = TropExpr::Kind;
    TropExpr mx({"x"}, {{K::Var, 0, 1, {}}, {K::Bottom, -1, 1, {}}, {K::Max, -1, 1, {0, 1}}});
    CHECK(at(mx, {5}) == 5);
    TropExpr sum({"x"}, {{K::Var, 0, 1, {}}, {K::Bottom, -1, 1, {}}, {K::Sum, -1, 1, {0, 1}}});
    CHECK(at(sum, {5}) == std::nullopt);
    TropExpr scaled({"x"}, {{K::Var, 0, 3, {}}});
    CHECK(at(scaled, {-2}) == -6);
  }

  TEST_CASE("degree oracle examples") {
    CHECK(degree_oracle(P("x+y"), {"x", "y"}, Pt{1, 1}) == 1);
    CHECK(degree_oracle(P("x+y"), {"x", "y"}, Pt{3, -2}) == 3);
    CHECK(degree_oracle(P("(x+y)/z"), kXYZ, Pt{2, 0, 1}) == 1);
    CHECK_THROWS_AS(degree_oracle(P("x-y"), {"x", "y"}, Pt{1, 1}), ZeroFunctionError);
  }

  TEST_CASE("tropicalization is a semiring homomorphism") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::int64_t> c(-8, 8);
    for (int s = 0; s < 200; ++s) {
      RatFun f = random_positive(rng, 3), g = random_positive(rng, 3);
      Pt l{c(rng), c(rng), c(rng)};
      const auto tf = *at(tropicalize(f, kXYZ), l), tg = *at(tropicalize(g, kXYZ), l);
      CHECK(at(tropicalize(f * g, kXYZ), l) == tf + tg);
      CHECK(at(tropicalize(f / g, kXYZ), l) == tf - tg);
      CHECK(at(tropicalize(f + g, kXYZ), l) == std::max(tf, tg));
      // The structural value agrees with the substitution degree.
      CHECK(tf == degree_oracle(f, kXYZ, l));
    }
  }

  TEST_CASE("soundness against the degree oracle on chart formulas") {
    std::mt19937_64 rng(22);
    for (int n = 1; n <= 3; ++n) {
      const auto q = charts::symbolic_A(n);
      const RatFun alpha = RatFun::variable(charts::kAlpha);
      std::vector<std::string> vars;
      for (auto [k, j] : Triangle<int>::indices(n)) vars.push_back(charts::A_name(k, j));
      vars.push_back(charts::kAlpha);

      std::vector<RatFun> fs;
      for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= i; ++k) fs.push_back(charts::alpha_coeff(i, k, alpha, q));
      for (const auto& c : charts::gamma_A(q).coroots()) fs.push_back(c);
      const auto back = charts::xi_inv(q);
      for (const auto& v : back.a.values()) fs.push_back(v);

      // Whole cube [-3,3]^m for n <= 2, the cube [-1,1]^m plus random points of
      // [-20,20]^m at n = 3.
      std::vector<Pt> points;
      const int r = n <= 2 ? 3 : 1;
      Pt l(vars.size(), -r);
      while (true) {
        points.push_back(l);
        std::size_t s = 0;
        while (s < l.size() && l[s] == r) l[s++] = -r;
        if (s == l.size()) break;
        ++l[s];
      }
      std::uniform_int_distribution<std::int64_t> wide(-20, 20);
      for (int t = 0; t < 200; ++t) {
        Pt p(vars.size());
        for (auto& x : p) x = wide(rng);
        points.push_back(p);
      }

      for (const auto& f : fs) {
        const auto e = tropicalize(f, vars);
        bool ok = true;
        for (const auto& p : points) ok = ok && e.eval(p) == degree_oracle(f, vars, p);
        CHECK(ok);
      }
    }
  }

  TEST_CASE("ud of xi_inv after xi is the identity") {
    for (int n = 1; n <= 3; ++n) {
      const auto pa = charts::symbolic_a(n);
      std::vector<std::string> avars, Avars;
      for (auto [k, j] : Triangle<int>::indices(n)) {
        avars.push_back(sl::a_name(k, j));
        Avars.push_back(charts::A_name(k, j));
      }
      const auto fwd = ud_map(charts::xi(pa).A.values(), avars);
      const auto back = ud_map(charts::xi_inv(charts::symbolic_A(n)).a.values(), Avars);
      std::mt19937_64 rng(30 + n);
      std::uniform_int_distribution<std::int64_t> c(-6, 6);
      for (int s = 0; s < 200; ++s) {
        Pt l(avars.size());
        for (auto& x : l) x = c(rng);
        Pt mid;
        for (const auto& v : fwd.eval(l)) mid.push_back(*v);
        Pt round;
        for (const auto& v : back.eval(mid)) round.push_back(*v);
        CHECK(round == l);
      }
    }
  }

  TEST_CASE("ud_map labels") {
    auto m = ud_map({P("x*y"), P("x+y")}, {"x", "y"});
    REQUIRE(m.names.size() == 2);
    CHECK(m.names[0] == "0");
    CHECK(m.eval(Pt{2, -1}) == std::vector<TropValue>{1, 2});
    auto named = ud_map({P("x")}, {"x"}, {"first"});
    CHECK(named.names[0] == "first");
  }

  TEST_CASE("chart lattice and B# coordinates") {
    Triangle<std::int64_t> l(2);
    l(1, 1) = 4;
    l(1, 2) = 5;
    l(2, 2) = 6;
    const auto v = chart_to_sharp(l);
    CHECK(v.B(1, 2) == 4);
    CHECK(v.B(1, 3) == 5);
    CHECK(v.B(2, 3) == 6);
    CHECK(sharp_to_chart(v) == l);
    const gyt::SharpElement w(3, {1, -2, 3, 0, 5, -7});
    CHECK(chart_to_sharp(sharp_to_chart(w)) == w);
  }
}
