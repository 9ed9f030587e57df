#ifndef INVARIANTS_ORBIT_IDEAL_HPP
#define INVARIANTS_ORBIT_IDEAL_HPP

#include <memory>

#include "invariants/groebner.hpp"
#include "invariants/spanning.hpp"

namespace invariants {

/// X-ring companion of the coordinate ring: same dimension and order,
/// uppercase variable names.
RingCtxPtr make_X_ring(const RingCtxPtr& xring);

/// One Reynolds matrix equation: the coefficients of phi_s on the witness
/// embeddings solve mat * a = rhs, every entry an invariant polynomial of
/// controlled degree.
struct MatrixEquationRecord {
  std::string label;
  int source_degree = 0;
  int source_index = 0;
  std::vector<Poly> multipliers;
  Matrix<Poly> mat;
  std::vector<Poly> rhs;
  std::vector<RatFunc> solution;
  int entry_degree_bound = 0;
};

struct OrbitIdealGenerator {
  XPoly xpoly;  // monic leading X-coefficient under the X-ring order
  std::string label;
  int source_degree = 0;
  int source_index = 0;
  int basis_index = 0;
  std::shared_ptr<const MatrixEquationRecord> record;
  int coeff_degree_bound = 0;  // max over coefficients of max(num, den) degree
};

struct OrbitIdealReport {
  int candidate_degree = 0;
  int D_I = 0;
  std::vector<OrbitIdealGenerator> generators;
  std::vector<XPoly> groebner_basis;
  std::vector<Monomial> std_monomials;
  RingCtxPtr Xring;
};

/// Homogeneous multipliers h_1..h_d of degree <= D_span making the Reynolds
/// matrix (R(h_i psi_l(v_k))) nonsingular. Searched over the witness basis
/// elements, dual isotypic component first, then the rest, then pairwise
/// products.
std::vector<Poly> find_multipliers(const GroupData& gd, const RegularWitness& witness,
                                   const IrreducibleModel& model, size_t k);

/// Solves the matrix equation for phi at basis index 0 and verifies the
/// resulting relation phi(v_j) = sum_l a_l psi_l(v_j) at every j.
MatrixEquationRecord solve_embedding(const GroupData& gd, const RegularWitness& witness,
                                     int D_span, const EquivariantEmbedding& phi,
                                     int source_index);

/// Relations for every hom-basis element of k[V]_{<=d} outside the witness;
/// each emitted generator is checked to lie in ker Xi by substitution.
std::vector<OrbitIdealGenerator> build_orbit_ideal(const GroupData& gd,
                                                   const RegularWitness& witness,
                                                   int D_span, int d,
                                                   const RingCtxPtr& Xring);

/// Reduced Groebner basis, the standard monomial count certificate
/// (count == |G|), and the downward search for D_I.
OrbitIdealReport certify_orbit_ideal(const GroupData& gd,
                                     std::vector<OrbitIdealGenerator> generators,
                                     const RingCtxPtr& Xring, int candidate_degree);

/// Full schedule: build at d = D_span + 1 and certify, retrying upward on a
/// failed certificate (which the degree bound rules out barring a bug).
OrbitIdealReport compute_orbit_ideal(const GroupData& gd, const SpanReport& span);

}  // namespace invariants

#endif
