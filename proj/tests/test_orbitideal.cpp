#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invariants/orbit_ideal.hpp"
#include "invariants/poly_io.hpp"
#include "test_group_common.hpp"

using namespace invariants;
using namespace testutil;

namespace {

RatFunc C(const GroupData& gd, const std::string& num, const std::string& den = "1") {
  return RatFunc(parse_in(gd, num), parse_in(gd, den));
}

const XPoly* find_generator_with_support(const std::vector<OrbitIdealGenerator>& gens,
                                         std::vector<std::string> support,
                                         const RingCtxPtr& Xring, unsigned order_m) {
  std::set<Monomial> want;
  for (const auto& s : support)
    want.insert(parse_poly(s, Xring, order_m).terms().begin()->first);
  for (const auto& g : gens) {
    std::set<Monomial> have;
    for (const auto& [m, c] : g.xpoly.terms()) have.insert(m);
    if (have == want) return &g.xpoly;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("multipliers and coefficients of the worked example") {
  GroupData q8 = make_q8();
  SpanReport span = compute_span(q8);

  // The paper's hand-picked witness: both Sta embeddings in degree 3.
  RegularWitness paper = span.witness;
  for (auto& comp : paper.components)
    if (comp.label == "Sta") comp.embeddings = q8.homs(q8.model_index("Sta"), 3);
  REQUIRE(verify_witness(q8, paper));

  // hom order at degree 3 is [phi_{x^2 y}, phi_{y^3}]; the worked example
  // indexes psi_1 = phi_{y^3}, psi_2 = phi_{x^2 y}.
  for (auto& comp : paper.components) {
    if (comp.label != "Sta") continue;
    REQUIRE(comp.embeddings[0].images[0] == parse_in(q8, "x^2*y"));
    std::swap(comp.embeddings[0], comp.embeddings[1]);
  }

  const auto& phi_x = q8.homs(q8.model_index("Sta"), 1);
  REQUIRE(phi_x.size() == 1);
  REQUIRE(phi_x[0].images[0] == parse_in(q8, "x"));

  auto rec = solve_embedding(q8, paper, span.D_span, phi_x[0], 0);
  REQUIRE(rec.solution.size() == 2);
  CHECK(rec.solution[0] == C(q8, "-2*x*y", "x^4 - y^4"));
  CHECK(rec.solution[1] == C(q8, "x^4 + y^4", "x^5*y - x*y^5"));
  // Entries are invariant polynomials within the K_low degree budget.
  for (const auto& h : rec.multipliers) CHECK(h.degree().value_or(0) <= span.D_span);
  for (size_t i = 0; i < rec.rhs.size(); ++i) {
    CHECK(is_invariant(q8.group, rec.rhs[i]));
    for (size_t l = 0; l < rec.mat.cols(); ++l)
      CHECK(is_invariant(q8.group, rec.mat.at(i, l)));
  }
  CHECK(rec.entry_degree_bound <= std::max(span.D_span + 1, 2 * span.D_span));

  // A 1-dimensional case read off the example: the j-character coefficient.
  auto j4 = q8.homs(q8.model_index("j"), 4);
  REQUIRE(j4.size() == 1);
  REQUIRE(j4[0].images[0] == parse_in(q8, "x^4 - y^4"));
  RegularWitness w = span.witness;
  auto rec_j = solve_embedding(q8, w, span.D_span, j4[0], 0);
  CHECK(rec_j.solution[0] == C(q8, "x^4 - y^4", "x*y"));
}

TEST_CASE("q8 orbit ideal end to end") {
  GroupData q8 = make_q8();
  SpanReport span = compute_span(q8);
  OrbitIdealReport rep = compute_orbit_ideal(q8, span);

  CHECK(rep.candidate_degree == 4);
  CHECK(rep.D_I == 4);
  CHECK(rep.std_monomials.size() == 8);
  CHECK(rep.generators.size() == 7);  // two degree-3 relations, five in degree 4

  // Initial ideal {Y^4, X*Y^3, X^3, X^2*Y} under the graded order.
  std::multiset<std::string> leads;
  for (const auto& f : rep.groebner_basis)
    leads.insert(to_string(Poly::term(rep.Xring, f.leading(rep.Xring->order).first, Cyclotomic(1))));
  CHECK(leads == std::multiset<std::string>{"X^2*Y", "X^3", "X*Y^3", "Y^4"});

  // Kernel membership and coefficient invariance for every generator.
  for (const auto& g : rep.generators) {
    CHECK(xi_image(g.xpoly, q8.group.xring).is_zero());
    for (const auto& [m, c] : g.xpoly.terms()) CHECK(is_invariant(q8.group, c));
    CHECK(g.coeff_degree_bound <= 2 * span.D_span + 1);
  }

  // The intrinsic relation on {X, Y^3, X^2*Y}, normalized to X-coefficient 1,
  // carries the worked example's coefficients.
  const XPoly* rel = find_generator_with_support(rep.generators, {"X", "Y^3", "X^2*Y"},
                                                 rep.Xring, 4);
  REQUIRE(rel != nullptr);
  Monomial mX = parse_poly("X", rep.Xring, 4).terms().begin()->first;
  Monomial mY3 = parse_poly("Y^3", rep.Xring, 4).terms().begin()->first;
  Monomial mX2Y = parse_poly("X^2*Y", rep.Xring, 4).terms().begin()->first;
  XPoly scaled = rel->scaled(rel->coeff(mX)->inverse());
  CHECK(*scaled.coeff(mY3) == C(q8, "2*x*y", "x^4 - y^4"));
  CHECK(*scaled.coeff(mX2Y) == -C(q8, "x^4 + y^4", "x^5*y - x*y^5"));

  // X^4 + Y^4 - (x^4 + y^4) appears verbatim (it is monic already).
  const XPoly* quartic = find_generator_with_support(rep.generators, {"X^4", "Y^4", "1"},
                                                     rep.Xring, 4);
  REQUIRE(quartic != nullptr);
  Monomial one(2);
  CHECK(*quartic->coeff(one) == -C(q8, "x^4 + y^4"));
}

TEST_CASE("trivial group orbit ideal") {
  GroupData t = make_trivial();
  SpanReport span = compute_span(t);
  OrbitIdealReport rep = compute_orbit_ideal(t, span);
  CHECK(rep.D_I == 1);
  CHECK(rep.std_monomials.size() == 1);
  REQUIRE(rep.generators.size() == 1);
  // X - x.
  XPoly expect = to_xring(parse_in(t, "x"), rep.Xring) -
                 XPoly::constant(rep.Xring, RatFunc(parse_in(t, "x")));
  CHECK(rep.generators[0].xpoly == expect.monic(rep.Xring->order));
}

TEST_CASE("c3 on one variable: equality case of the degree bound") {
  GroupData c3 = make_c3_1d();
  SpanReport span = compute_span(c3);
  CHECK(span.D_span == 2);
  OrbitIdealReport rep = compute_orbit_ideal(c3, span);
  CHECK(rep.D_I == 3);  // = D_span + 1
  CHECK(rep.std_monomials.size() == 3);
  // The certified basis is X^3 - x^3.
  REQUIRE(rep.groebner_basis.size() == 1);
  XPoly expect = to_xring(parse_in(c3, "x^3"), rep.Xring) -
                 XPoly::constant(rep.Xring, RatFunc(parse_in(c3, "x^3")));
  CHECK(rep.groebner_basis[0] == expect);
}

TEST_CASE("cyclic diagonal orbit ideals certify") {
  for (unsigned n : {3u, 5u}) {
    GroupData cn = make_cn_diag(n);
    SpanReport span = compute_span(cn);
    OrbitIdealReport rep = compute_orbit_ideal(cn, span);
    CHECK(rep.std_monomials.size() == n);
    CHECK(rep.D_I <= span.D_span + 1);
    for (const auto& g : rep.generators) {
      CHECK(xi_image(g.xpoly, cn.group.xring).is_zero());
      for (const auto& [m, c] : g.xpoly.terms()) CHECK(is_invariant(cn.group, c));
    }
  }
}
