#include <doctest.h>

#include "helpers.hpp"

using namespace primegb;
using testing::poly;
using testing::str;

namespace {

using Big = RationalBig;
using PolyV = Polynomial<Big, ExponentVector>;

// Univariate remainder by schoolbook long division, coefficients highest
// degree first.
std::vector<mpq_class> long_division_remainder(std::vector<mpq_class> p, const std::vector<mpq_class>& d) {
  while (p.size() >= d.size()) {
    const mpq_class q = p[0] / d[0];
    for (std::size_t i = 0; i < d.size(); ++i) p[i] -= q * d[i];
    p.erase(p.begin());
  }
  while (!p.empty() && p[0] == 0) p.erase(p.begin());
  return p;
}

}  // namespace

TEST_SUITE("poly") {
  TEST_CASE("leading monomials") {
    const PolyRing<ExponentVector> deglex(VarTable("a"), OrderingKind::DegLex);
    const auto f = poly<Big>(deglex, "a^2 + 4a + 3");
    CHECK(to_string(leading_monomial(f).pp, deglex.vars()) == "a^2");
    CHECK(leading_monomial(f).coeff == Big(1));

    const PolyRing<PrimeImage> prime(VarTable("xy"), OrderingKind::PrimeBased);
    const auto g = poly<Big>(prime, "x^3 + y^2");
    CHECK(g.leading_pp().value() == 9);
    const PolyRing<ExpandedString> tdeg(VarTable("xy"), OrderingKind::TotalDegree);
    CHECK(to_string(poly<Big>(tdeg, "x^3 + y^2").leading_pp(), tdeg.vars()) == "x^3");

    const auto m = poly<Big>(deglex, "-5a^4");
    CHECK(leading_monomial(m) == m.terms()[0]);
    CHECK_THROWS_AS(PolyV{}.leading(), ZeroPolynomial);
  }

  TEST_CASE("addition and scaling") {
    const PolyRing<ExponentVector> ring(VarTable("xy"), OrderingKind::DegLex);
    const auto a = poly<Big>(ring, "x + y");
    const auto b = poly<Big>(ring, "x - y");
    CHECK(str(ring, add(ring, a, b)) == "2x");
    CHECK(add(ring, a, PolyV{}) == a);
    CHECK(sub(ring, a, a).is_zero());
    CHECK(scale(a, Big(0)).is_zero());
    CHECK(str(ring, scale(a, Big(-3, 2))) == "-3/2x - 3/2y");
  }

  TEST_CASE("monomial multiplication follows the distributive law") {
    const PolyRing<ExponentVector> ring(VarTable("xy"), OrderingKind::DegLex);
    const auto f = poly<Big>(ring, "x + 1");
    const Monomial<Big, ExponentVector> m{Big(2), ExponentVector({0, 1})};
    // oracle: multiply each term's exponents and coefficients separately
    std::vector<Monomial<Big, ExponentVector>> expect;
    for (const auto& t : f.terms()) {
      Exponents e(t.pp.exponents().begin(), t.pp.exponents().end());
      e[1] += 1;
      expect.push_back({t.coeff * Big(2), ExponentVector(e)});
    }
    CHECK(mul_monomial(f, m) == PolyV::from_terms(ring, expect));
    CHECK(str(ring, mul_monomial(f, m)) == "2xy + 2y");
  }

  TEST_CASE("S-polynomials") {
    const PolyRing<ExponentVector> ring(VarTable("xy"), OrderingKind::DegLex);
    const auto f = poly<Big>(ring, "x^2 - 1");
    const auto g = poly<Big>(ring, "xy - 1");
    CHECK(s_polynomial(ring, f, f).is_zero());
    // y f - x g = -y + x
    const auto s = s_polynomial(ring, f, g);
    CHECK(s == sub(ring, mul_monomial(f, {Big(1), ExponentVector({0, 1})}), mul_monomial(g, {Big(1), ExponentVector({1, 0})})));
    CHECK(str(ring, s) == "x - y");
    CHECK(ring.less(s.leading_pp(), lcm(f.leading_pp(), g.leading_pp())));
  }

  TEST_CASE("normal form of x^3 modulo x^2 + 4x + 3") {
    const PolyRing<ExponentVector> ring(VarTable("x"), OrderingKind::DegLex);
    const std::vector<PolyV> F{poly<Big>(ring, "x^2 + 4x + 3")};
    const auto r = normal_form(ring, F, poly<Big>(ring, "x^3"));
    const auto expect = long_division_remainder({1, 0, 0, 0}, {1, 4, 3});
    REQUIRE(expect.size() == 2);
    CHECK(r == PolyV::from_terms(ring, {{Big(expect[0]), ExponentVector({1})}, {Big(expect[1]), ExponentVector({0})}}));
    CHECK(str(ring, r) == "13x + 12");
    CHECK(normal_form(ring, F, PolyV{}).is_zero());
    const auto irreducible = poly<Big>(ring, "5x + 1");
    CHECK(normal_form(ring, F, irreducible) == irreducible);
  }

  TEST_CASE("each reduction step lowers the reduced term") {
    const PolyRing<PrimeImage> ring(VarTable("xyz"), OrderingKind::PrimeBased);
    const auto F = testing::polys<Big>(ring, "x^2 + y\ny^2 - xz + 1\nz^2 - x");
    std::vector<PrimeImage> heads;
    const auto r = normal_form(ring, F, poly<Big>(ring, "x^3y^2z + x^2z^3 - 7yz"), {},
                               [&](const PrimeImage& t) { heads.push_back(t); });
    CHECK(heads.size() > 3);
    for (std::size_t i = 1; i < heads.size(); ++i) CHECK(ring.less(heads[i], heads[i - 1]));
    CHECK(is_well_formed(ring, r));
    for (const auto& t : r.terms()) {
      for (const auto& f : F) CHECK_FALSE(divides(f.leading_pp(), t.pp));
    }
  }

  TEST_CASE("membership: p - NF(p) reduces to zero modulo a Groebner basis") {
    const PolyRing<ExponentVector> ring(VarTable("xy"), OrderingKind::DegLex);
    // {x^2 - y, xy - x, y^2 - y} is a Groebner basis under deglex (x > y).
    const auto G = testing::polys<Big>(ring, "x^2 - y\nxy - x\ny^2 - y");
    const auto p = poly<Big>(ring, "x^3y + 3x^2 - y^3 + 2");
    const auto r = normal_form(ring, G, p);
    CHECK(normal_form(ring, G, sub(ring, p, r)).is_zero());
    CHECK(normal_form(ring, G, r) == r);
  }

  TEST_CASE("make_monic") {
    const PolyRing<ExponentVector> ring(VarTable("x"), OrderingKind::DegLex);
    CHECK(str(ring, make_monic(poly<Big>(ring, "2x + 4"))) == "x + 2");
    const auto monic = poly<Big>(ring, "x - 1/3");
    CHECK(make_monic(monic) == monic);
    const PolyRing<ExponentVector> g1(VarTable("yztw"), OrderingKind::DegLex);
    const auto f = make_monic(poly<Big>(g1, "yw-1/2zw + tw"));
    CHECK(f.leading_coeff().is_one());
    CHECK(str(g1, f) == "yw - 1/2zw + tw");
    const PolyRing<ExponentVector> g2(VarTable("zytw"), OrderingKind::DegLex);
    CHECK(str(g2, make_monic(poly<Big>(g2, "yw-1/2zw + tw"))) == "zw - 2yw - 2tw");
  }

  TEST_CASE("rendering") {
    const PolyRing<ExponentVector> ring(VarTable("xyzt"), OrderingKind::DegLex);
    CHECK(str(ring, poly<Big>(ring, "xyzt - 1")) == "xyzt - 1");
    CHECK(str(ring, poly<Big>(ring, "-2/7x^2 + 1")) == "-2/7x^2 + 1");
    CHECK(str(ring, PolyV{}) == "0");
  }
}
