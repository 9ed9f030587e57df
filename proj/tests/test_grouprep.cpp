#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_group_common.hpp"

using namespace invariants;
using namespace testutil;

namespace {

Poly random_poly(const RingCtxPtr& ctx, std::mt19937& rng, int max_deg = 4) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> expo(0, max_deg);
  std::uniform_int_distribution<long> coef(-5, 5);
  Poly p(ctx);
  for (int i = 0, t = nterms(rng); i < t; ++i) {
    Monomial m(ctx->nvars());
    for (auto& e : m.e) e = expo(rng);
    p.add_term(m, Cyclotomic(coef(rng)));
  }
  return p;
}

size_t find_element(const MatrixGroup& g, const Matrix<Cyclotomic>& m) {
  for (size_t i = 0; i < g.order(); ++i)
    if (g.elems[i] == m) return i;
  throw std::logic_error("element not found");
}

}  // namespace

TEST_CASE("group enumeration") {
  GroupData q8 = make_q8();
  CHECK(q8.group.order() == 8);
  CHECK(q8.group.dim() == 2);

  GroupData triv = make_trivial();
  CHECK(triv.group.order() == 1);

  GroupData c5 = make_cn_diag(5);
  CHECK(c5.group.order() == 5);

  CHECK(make_a4perm().group.order() == 12);
  CHECK(make_s3std().group.order() == 6);

  // The multiplication table is consistent and every element has an inverse.
  const MatrixGroup& G = q8.group;
  for (size_t i = 0; i < G.order(); ++i) {
    CHECK(G.elems[G.mult[i][G.inv[i]]].is_identity());
    for (size_t j = 0; j < G.order(); ++j)
      CHECK(G.elems[i] * G.elems[j] == G.elems[G.mult[i][j]]);
  }

  // Non-invertible generator rejected; cap exceeded reported distinctly.
  RingCtxPtr ring = make_ring({"x", "y"});
  CHECK_THROWS_AS(enumerate_group({mat(1, {{"1", "0"}, {"0", "0"}})}, ring, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_group({mat(4, {{"0", "-1"}, {"1", "0"}})}, ring, 4, 3),
                  GroupTooLarge);
}

TEST_CASE("action on polynomials") {
  GroupData q8 = make_q8();
  const MatrixGroup& G = q8.group;
  size_t gi = find_element(G, mat(4, {{"0", "-1"}, {"1", "0"}}));
  size_t gj = find_element(G, mat(4, {{"-z", "0"}, {"0", "z"}}));

  // i x = y, i y = -x; j x = ix, j y = -iy.
  CHECK(act(G, gi, parse_in(q8, "x")) == parse_in(q8, "y"));
  CHECK(act(G, gi, parse_in(q8, "y")) == parse_in(q8, "-x"));
  CHECK(act(G, gj, parse_in(q8, "x")) == parse_in(q8, "z*x"));
  CHECK(act(G, gj, parse_in(q8, "y")) == parse_in(q8, "-z*y"));
  CHECK(act(G, gj, parse_in(q8, "x^2*y^2")) == parse_in(q8, "x^2*y^2"));
  CHECK(act(G, 0, parse_in(q8, "x^3 - 2*y")) == parse_in(q8, "x^3 - 2*y"));

  // act is a left action: act(gh, f) = act(g, act(h, f)).
  std::mt19937 rng(31);
  for (int iter = 0; iter < 100; ++iter) {
    Poly f = random_poly(G.xring, rng);
    size_t a = iter % G.order(), b = (iter * 5 + 3) % G.order();
    CHECK(act(G, G.mult[a][b], f) == act(G, a, act(G, b, f)));
  }
}

TEST_CASE("reynolds operator") {
  GroupData q8 = make_q8();
  const MatrixGroup& G = q8.group;
  // From the worked example: R(xy^2 * x) = x^2y^2 and R(x^3 * x) = (x^4+y^4)/2.
  CHECK(reynolds(G, parse_in(q8, "x*y^2") * parse_in(q8, "x")) == parse_in(q8, "x^2*y^2"));
  CHECK(reynolds(G, parse_in(q8, "x^3") * parse_in(q8, "x")) ==
        parse_in(q8, "1/2*x^4 + 1/2*y^4"));

  std::mt19937 rng(47);
  for (int iter = 0; iter < 100; ++iter) {
    Poly f = random_poly(G.xring, rng);
    Poly rf = reynolds(G, f);
    CHECK(is_invariant(G, rf));
    CHECK(reynolds(G, rf) == rf);  // idempotent
    size_t any = iter % G.order();
    CHECK(reynolds(G, act(G, any, f)) == rf);
  }

  // Serial and parallel batch kernels agree exactly.
  std::vector<Poly> batch;
  for (int i = 0; i < 12; ++i) batch.push_back(random_poly(G.xring, rng));
  CHECK(reynolds_batch(G, batch, par::Mode::serial) ==
        reynolds_batch(G, batch, par::Mode::parallel));

  // Rational-function Reynolds: invariant, idempotent.
  RatFunc q(parse_in(q8, "x^3*y"), parse_in(q8, "x^2 + y^2"));
  RatFunc rq = reynolds(G, q);
  CHECK(is_invariant(G, rq));
  CHECK(reynolds(G, rq) == rq);
}

TEST_CASE("characters and multiplicities") {
  GroupData q8 = make_q8();
  const MatrixGroup& G = q8.group;
  size_t gi = find_element(G, mat(4, {{"0", "-1"}, {"1", "0"}}));
  CHECK(character(q8.model("Sta").mats[gi]).is_zero());
  CHECK(character(q8.model("Sta").mats[0]) == Cyclotomic(2));

  const DegreeAction& a2 = q8.action(2);
  CHECK(character(a2.mats[0]) == Cyclotomic(3));  // dim of degree-2 component

  CHECK(multiplicity(G, q8.model("Sta"), q8.action(3)) == 2);
  CHECK(multiplicity(G, q8.model("Sta"), q8.action(0)) == 0);
  CHECK(multiplicity(G, q8.model("1"), q8.action(4)) == 2);
  CHECK(multiplicity(G, q8.model("i"), q8.action(2)) == 1);

  // Degree-action kernels agree across modes.
  CHECK(degree_action(G, 3, par::Mode::serial).mats ==
        degree_action(G, 3, par::Mode::parallel).mats);

  // sum_lambda mult * d_lambda = dim k[V]_d.
  for (int d = 0; d <= 5; ++d) {
    long total = 0;
    for (const auto& m : q8.models) total += multiplicity(G, m, q8.action(d)) * m.dim;
    CHECK(total == static_cast<long>(monomials_of_degree(G.xring, d).size()));
  }

  // Character orthogonality over all supplied irreducible pairs.
  for (const auto& ma : q8.models)
    for (const auto& mb : q8.models) {
      Cyclotomic acc(0);
      for (size_t e = 0; e < G.order(); ++e)
        acc += character(ma.mats[e]) * character(mb.mats[G.inv[e]]);
      acc = acc / Cyclotomic(static_cast<long>(G.order()));
      CHECK(acc == (ma.label == mb.label ? Cyclotomic(1) : Cyclotomic(0)));
    }
}

TEST_CASE("hom bases") {
  GroupData q8 = make_q8();
  const MatrixGroup& G = q8.group;

  auto sta3 = q8.homs(q8.model_index("Sta"), 3);
  REQUIRE(sta3.size() == 2);
  // The canonical embeddings match the worked example's spans.
  Poly x2y = parse_in(q8, "x^2*y"), xy2 = parse_in(q8, "-x*y^2");
  Poly y3 = parse_in(q8, "y^3"), x3 = parse_in(q8, "-x^3");
  CHECK(sta3[0].images == std::vector<Poly>{x2y, xy2});
  CHECK(sta3[1].images == std::vector<Poly>{y3, x3});

  auto j2 = q8.homs(q8.model_index("j"), 2);
  REQUIRE(j2.size() == 1);
  CHECK(j2[0].images == std::vector<Poly>{parse_in(q8, "x*y")});

  auto triv0 = q8.homs(q8.model_index("1"), 0);
  REQUIRE(triv0.size() == 1);
  CHECK(triv0[0].images == std::vector<Poly>{poly_one(G.xring)});

  // Every hom-basis output is equivariant; serial == parallel.
  for (size_t mi = 0; mi < q8.models.size(); ++mi)
    for (int d = 0; d <= 4; ++d) {
      for (const auto& emb : q8.homs(mi, d))
        CHECK(check_equivariance(G, q8.models[mi], emb));
      auto ser = hom_basis(G, q8.models[mi], q8.action(d), par::Mode::serial);
      auto par_ = hom_basis(G, q8.models[mi], q8.action(d), par::Mode::parallel);
      REQUIRE(ser.size() == par_.size());
      for (size_t s = 0; s < ser.size(); ++s) CHECK(ser[s].images == par_[s].images);
    }
}

TEST_CASE("irreducible validation") {
  GroupData q8 = make_q8();
  CHECK(validate_irreducibles(q8.group, q8.models).ok);
  CHECK(validate_irreducibles(make_a4perm().group, make_a4perm().models).ok);
  CHECK(validate_irreducibles(make_s3std().group, make_s3std().models).ok);

  // Duplicate trivial model: the non-isomorphism check fires.
  GroupData dup = make_q8();
  dup.models[1] = extend_model(dup.group, "1bis", {mat(4, {{"1"}}), mat(4, {{"1"}})});
  auto rep = validate_irreducibles(dup.group, dup.models);
  CHECK(!rep.ok);
  CHECK(rep.first_violation.find("isomorphic") != std::string::npos);

  // C3 with only the trivial character: completeness fails.
  GroupData c3 = make_c3_1d();
  c3.models.erase(c3.models.begin() + 1, c3.models.end());
  auto rep2 = validate_irreducibles(c3.group, c3.models);
  CHECK(!rep2.ok);
  CHECK(rep2.first_violation.find("squared degrees") != std::string::npos);

  // A reducible 2-dimensional model: End dimension 2.
  GroupData bad = make_c3_1d();
  auto z = mat(3, {{"z", "0"}, {"0", "1"}});
  bad.models.push_back(extend_model(bad.group, "red", {z}));
  auto rep3 = validate_irreducibles(bad.group, bad.models);
  CHECK(!rep3.ok);
  CHECK(rep3.first_violation.find("irreducible") != std::string::npos);
}
