#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invariants/analysis.hpp"
#include "invariants/poly_io.hpp"

using namespace invariants;

namespace {

std::string fixture(const std::string& name) {
  return std::string(INVARIANTS_FIXTURE_DIR) + "/" + name + ".json";
}

// Brute-force generic orbit ideal: the K-kernel of the multiplication map on
// monomials of degree <= d, computed as the row-reduced nullspace of the
// group-translate matrix over k(x). Independent of the matrix-equation
// pipeline (no witness, no Reynolds solve).
std::vector<XPoly> xi_kernel_oracle(const GroupData& gd, int d, const RingCtxPtr& Xring) {
  std::vector<Monomial> cols;
  for (int e = 0; e <= d; ++e)
    for (const auto& m : monomials_of_degree(gd.group.xring, e)) cols.push_back(m);
  const size_t N = cols.size();
  const size_t G = gd.group.order();

  Matrix<RatFunc> m(G, N, RatFunc(Poly(gd.group.xring)));
  for (size_t g = 0; g < G; ++g)
    for (size_t c = 0; c < N; ++c)
      m.at(g, c) = RatFunc(act(gd.group, g, Poly::term(gd.group.xring, cols[c], Cyclotomic(1))));
  rref(m);

  // Pivot bookkeeping from the echelon form.
  std::vector<int> pivot_row(N, -1);
  size_t row = 0;
  for (size_t c = 0; c < N && row < G; ++c) {
    if (!m.at(row, c).is_zero() && m.at(row, c).is_one()) {
      bool pivot = true;
      for (size_t r2 = 0; r2 < G; ++r2)
        if (r2 != row && !m.at(r2, c).is_zero()) pivot = false;
      if (pivot) {
        pivot_row[c] = static_cast<int>(row);
        ++row;
      }
    }
  }
  std::vector<XPoly> kernel;
  for (size_t f = 0; f < N; ++f) {
    if (pivot_row[f] >= 0) continue;
    XPoly v(Xring);
    v.add_term(cols[f], RatFunc(poly_one(gd.group.xring)));
    for (size_t c = 0; c < N; ++c)
      if (pivot_row[c] >= 0) {
        RatFunc coef = m.at(static_cast<size_t>(pivot_row[c]), f);
        if (!coef.is_zero()) v.add_term(cols[c], -coef);
      }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

void compare_with_oracle(const std::string& name) {
  GroupData gd = instantiate(parse_spec_file(fixture(name)));
  SpanReport span = compute_span(gd);
  OrbitIdealReport rep = compute_orbit_ideal(gd, span);

  auto kernel = xi_kernel_oracle(gd, span.D_span + 1, rep.Xring);
  REQUIRE(!kernel.empty());
  // Every oracle element really is a relation, with invariant coefficients.
  for (const auto& v : kernel) {
    CHECK(xi_image(v, gd.group.xring).is_zero());
    for (const auto& [mm, c] : v.terms()) CHECK(is_invariant(gd.group, c));
  }
  auto oracle_gb = buchberger(kernel, rep.Xring->order);
  CHECK(oracle_gb == rep.groebner_basis);  // reduced bases are unique
}

}  // namespace

TEST_CASE("pipeline orbit ideal equals the brute-force kernel (trivial)") {
  compare_with_oracle("trivial");
}

TEST_CASE("pipeline orbit ideal equals the brute-force kernel (c2)") {
  compare_with_oracle("c2");
}

TEST_CASE("pipeline orbit ideal equals the brute-force kernel (c3_1d)") {
  compare_with_oracle("c3_1d");
}

TEST_CASE("oracle cross-check on the worked example") {
  // Not required at this size, but cheap enough to pin down.
  compare_with_oracle("q8");
}
