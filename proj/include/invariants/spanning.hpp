#ifndef INVARIANTS_SPANNING_HPP
#define INVARIANTS_SPANNING_HPP

#include "invariants/group.hpp"

namespace invariants {

/// Dedekind independence: f_1..f_m are K-linearly independent over the
/// invariant field exactly when the |G| x m matrix (g f_i) has full column
/// rank over k(V). The returned value is the K-dimension of the span.
/// Symbolic and exact (fraction-free elimination on polynomial entries).
size_t galois_rank(const MatrixGroup& g, const std::vector<Poly>& polys,
                   par::Mode mode = par::default_mode());

/// Assembles the |G| x m translate matrix; data-parallel kernel with a
/// serial reference twin.
Matrix<Poly> translate_matrix(const MatrixGroup& g, const std::vector<Poly>& polys,
                              par::Mode mode = par::default_mode());

struct RankOptions {
  // When set, a full-rank evaluation of the translate matrix at a random
  // integer point is accepted as a proof of independence (a random point can
  // only prove independence, never dependence). Shortfalls always fall back
  // to the symbolic rank, so dependence claims stay symbolic.
  bool fast = false;
  unsigned seed = 0x5eedu;
};

/// True when the polynomials are K-linearly independent.
bool k_independent(const MatrixGroup& g, const std::vector<Poly>& polys,
                   const RankOptions& opts = {});

/// The spanning-degree witness: per irreducible label, exactly d_lambda
/// embeddings whose images together form a K-basis of k(V).
struct RegularWitness {
  struct Component {
    std::string label;
    std::vector<EquivariantEmbedding> embeddings;
  };
  std::vector<Component> components;

  std::vector<Poly> basis_polys() const;
  int max_degree() const;
  const Component& component(const std::string& label) const;
};

struct SpanReport {
  int D_span = 0;
  int D_reg = 0;
  RegularWitness witness;
  std::vector<size_t> dimension_profile;  // dim_K span k[V]_{<=d}, d = 0..D_span
};

/// Smallest d such that every irreducible has appeared in k[V]_{<=d} with
/// multiplicity at least its degree.
int compute_Dreg(const GroupData& gd);

/// Greedy per-isotypic-component accumulation of hom-basis embeddings by
/// increasing degree, each acceptance certified by K-independence of the
/// stacked images. Also computes D_reg and the dimension profile.
SpanReport compute_span(const GroupData& gd, const RankOptions& opts = {});

/// Certifies that the witness basis polynomials span k(V): the per-component
/// galois rank must be d_lambda^2 for every component (isotypic components
/// are independent, so the ranks add up to |G|). Always symbolic.
bool verify_witness(const GroupData& gd, const RegularWitness& w);

}  // namespace invariants

#endif
