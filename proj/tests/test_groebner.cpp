#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "invariants/groebner.hpp"
#include "invariants/poly_io.hpp"

using namespace invariants;

namespace {

const RingCtxPtr& xy() {
  static RingCtxPtr ctx = make_ring({"x", "y"});
  return ctx;
}
const RingCtxPtr& XY() {
  static RingCtxPtr ctx = make_ring({"X", "Y"}, TermOrder::grlex());
  return ctx;
}

Poly P(const std::string& s) { return parse_poly(s, xy(), 4); }

RatFunc C(const std::string& num, const std::string& den = "1") {
  return RatFunc(P(num), P(den));
}

// X-monomial term with a rational-function coefficient.
XPoly T(const std::string& xmono, RatFunc coeff) {
  Poly p = parse_poly(xmono, XY(), 4);
  return XPoly::term(XY(), p.terms().begin()->first, std::move(coeff));
}

Poly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<int> expo(0, 2);
  std::uniform_int_distribution<long> coef(-4, 4);
  Poly p(xy());
  for (int i = 0, t = nterms(rng); i < t; ++i) {
    Monomial m(2);
    for (auto& e : m.e) e = expo(rng);
    p.add_term(m, Cyclotomic(coef(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("buchberger on toy ideals") {
  TermOrder ord = TermOrder::grevlex();
  // Already a Groebner basis.
  auto gb1 = buchberger<Cyclotomic>({P("x - 1")}, ord);
  REQUIRE(gb1.size() == 1);
  CHECK(gb1[0] == P("x - 1"));
  // <x^2 - 1, x - 1> = <x - 1>.
  auto gb2 = buchberger<Cyclotomic>({P("x^2 - 1"), P("x - 1")}, ord);
  REQUIRE(gb2.size() == 1);
  CHECK(gb2[0] == P("x - 1"));
  // Classic: <x^2 - y, x^3 - x> has a finite quotient.
  auto gb3 = buchberger<Cyclotomic>({P("x^2 - y"), P("x^3 - x")}, ord);
  auto sm3 = standard_monomials(gb3, ord);
  REQUIRE(sm3.has_value());
  CHECK(sm3->size() == 3);  // V(x^3 = x, y = x^2) has three points
}

TEST_CASE("standard monomials") {
  TermOrder ord = TermOrder::grevlex();
  RingCtxPtr one_var = make_ring({"X"});
  Poly f = parse_poly("X^3 - 8", one_var, 1);
  auto gb = buchberger<Cyclotomic>({f}, ord);
  auto sm = standard_monomials(gb, ord);
  REQUIRE(sm.has_value());
  REQUIRE(sm->size() == 3);
  CHECK((*sm)[0].degree() == 0);
  CHECK((*sm)[1].degree() == 1);
  CHECK((*sm)[2].degree() == 2);
  // The trivial-group orbit ideal <X - x, Y - y> leaves only 1.
  auto gb2 = buchberger<Cyclotomic>({P("x - 1"), P("y - 2")}, ord);
  auto sm2 = standard_monomials(gb2, ord);
  REQUIRE(sm2.has_value());
  CHECK(sm2->size() == 1);
  // A principal ideal in two variables has infinitely many standard monomials.
  auto gb3 = buchberger<Cyclotomic>({P("x*y - 1")}, ord);
  CHECK(!standard_monomials(gb3, ord).has_value());
}

TEST_CASE("random ideals: S-polynomials reduce to zero, recomputation stable") {
  std::mt19937 rng(1123);
  TermOrder ord = TermOrder::grevlex();
  int done = 0;
  for (int iter = 0; iter < 200 && done < 100; ++iter) {
    std::vector<Poly> gens;
    for (int i = 0; i < 3; ++i) {
      Poly p = random_poly(rng);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    auto gb = buchberger(gens, ord);
    for (size_t i = 0; i < gb.size(); ++i)
      for (size_t j = i + 1; j < gb.size(); ++j) {
        Poly s = spoly(gb[i], gb[j], ord);
        if (!s.is_zero()) CHECK(divide(s, gb, ord).remainder.is_zero());
      }
    // Generators reduce to zero against the basis; inputs shuffled give the
    // identical reduced basis.
    for (const auto& g : gens) CHECK(divide(g, gb, ord).remainder.is_zero());
    std::vector<Poly> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(buchberger(shuffled, ord) == gb);
    ++done;
  }
  CHECK(done >= 100);
}

TEST_CASE("ideal membership via remainder") {
  TermOrder ord = TermOrder::grevlex();
  std::vector<Poly> gens = {P("x^2 + y"), P("x*y - 1")};
  auto gb = buchberger(gens, ord);
  Poly member = P("x + y") * gens[0] + P("y^2") * gens[1];
  CHECK(divide(member, gb, ord).remainder.is_zero());
  CHECK(!divide(member + P("1"), gb, ord).remainder.is_zero());
}

TEST_CASE("quaternion orbit ideal from the worked example") {
  // The seven relations, entered verbatim; coefficients in C(x,y)^{Q8}.
  std::vector<XPoly> gens;
  gens.push_back(T("X", C("1")) + T("Y^3", C("2*x*y", "x^4 - y^4")) -
                 T("X^2*Y", C("x^4 + y^4", "x^5*y - x*y^5")));
  gens.push_back(T("Y", C("1")) - T("X^3", C("2*x*y", "x^4 - y^4")) +
                 T("X*Y^2", C("x^4 + y^4", "x^5*y - x*y^5")));
  gens.push_back(T("X^4", C("1")) + T("Y^4", C("1")) - T("1", C("x^4 + y^4")));
  gens.push_back(T("X^2*Y^2", C("1")) - T("1", C("x^2*y^2")));
  gens.push_back(T("X^3*Y", C("1")) - T("X*Y^3", C("1")) -
                 T("X^2", C("x^3*y - x*y^3", "x^2 + y^2")) -
                 T("Y^2", C("x^3*y - x*y^3", "x^2 + y^2")));
  gens.push_back(T("X^4", C("1")) - T("Y^4", C("1")) - T("X*Y", C("x^4 - y^4", "x*y")));
  gens.push_back(T("X^3*Y", C("1")) + T("X*Y^3", C("1")) -
                 T("X^2", C("x^3*y + x*y^3", "x^2 - y^2")) +
                 T("Y^2", C("x^3*y + x*y^3", "x^2 - y^2")));

  auto gb = buchberger(gens, XY()->order);
  REQUIRE(gb.size() == 4);
  // Initial ideal {Y^4, X*Y^3, X^3, X^2*Y} under graded-lex X > Y.
  std::vector<std::string> leads;
  for (const auto& f : gb) {
    Poly lm = Poly::term(XY(), f.leading(XY()->order).first, Cyclotomic(1));
    leads.push_back(to_string(lm));
  }
  std::sort(leads.begin(), leads.end());
  std::vector<std::string> expect = {"X^2*Y", "X^3", "X*Y^3", "Y^4"};
  std::sort(expect.begin(), expect.end());
  CHECK(leads == expect);

  auto sm = standard_monomials(gb, XY()->order);
  REQUIRE(sm.has_value());
  CHECK(sm->size() == 8);  // quotient is 8-dimensional over K

  // The four reduced basis elements match the worked example verbatim.
  std::vector<XPoly> expected;
  expected.push_back(T("Y^4", C("1")) + T("X*Y", C("x^4 - y^4", "2*x*y")) -
                     T("1", C("1/2*x^4 + 1/2*y^4")));
  expected.push_back(T("X*Y^3", C("1")) - T("X^2", C("2*x^3*y^3", "x^4 - y^4")) +
                     T("Y^2", C("x^5*y + x*y^5", "x^4 - y^4")));
  expected.push_back(T("X^3", C("1")) - T("X*Y^2", C("x^4 + y^4", "2*x^2*y^2")) -
                     T("Y", C("x^4 - y^4", "2*x*y")));
  expected.push_back(T("X^2*Y", C("1")) - T("Y^3", C("2*x^2*y^2", "x^4 + y^4")) -
                     T("X", C("x^5*y - x*y^5", "x^4 + y^4")));
  for (const auto& e : expected)
    CHECK(std::find(gb.begin(), gb.end(), e) != gb.end());

  // Dividing the X-form of an invariant by the basis leaves a remainder of
  // X-degree zero (an element of K).
  XPoly inv = T("X^4", C("1")) + T("Y^4", C("1"));
  XPoly rem = divide(inv, gb, XY()->order).remainder;
  REQUIRE(!rem.is_zero());
  CHECK(rem.degree() == 0);
}
