#ifndef INVARIANTS_GROUP_HPP
#define INVARIANTS_GROUP_HPP

#include <map>
#include <string>

#include "invariants/matrix.hpp"
#include "invariants/parallel.hpp"
#include "invariants/polynomial.hpp"
#include "invariants/rational_function.hpp"

namespace invariants {

/// Finite matrix group given by generators, closed by breadth-first
/// products. Element 0 is the identity; bfs_parent records how each element
/// was first reached so representations extend along the same words.
/// Immutable after construction; safe for concurrent readers.
struct MatrixGroup {
  RingCtxPtr xring;        // coordinate ring k[x_1..x_n]
  unsigned field_order = 1;  // m of the ground field Q(zeta_m)
  std::vector<Matrix<Cyclotomic>> elems;
  std::vector<size_t> gens;  // element indices of the input generators
  std::vector<std::vector<size_t>> mult;  // mult[i][j] = index of elems[i]*elems[j]
  std::vector<size_t> inv;
  std::vector<std::pair<size_t, size_t>> bfs_parent;  // (element, generator slot)

  size_t order() const { return elems.size(); }
  size_t dim() const { return xring->nvars(); }
};

struct GroupTooLarge : std::runtime_error {
  explicit GroupTooLarge(size_t cap)
      : std::runtime_error("group enumeration exceeded the element cap of " +
                           std::to_string(cap) + "; too large for desk scale") {}
};

MatrixGroup enumerate_group(const std::vector<Matrix<Cyclotomic>>& generators,
                            RingCtxPtr xring, unsigned field_order,
                            size_t element_cap = 2000);

/// A fixed model V_lambda with the standard coordinate basis distinguished;
/// matrices indexed by group element.
struct IrreducibleModel {
  std::string label;
  size_t dim = 0;
  std::vector<Matrix<Cyclotomic>> mats;
};

/// Extends per-generator matrices to all elements along the BFS words.
IrreducibleModel extend_model(const MatrixGroup& g, std::string label,
                              const std::vector<Matrix<Cyclotomic>>& gen_mats);

/// Natural action (g f)(v) = f(g^{-1} v).
Poly act(const MatrixGroup& g, size_t elem, const Poly& f);
RatFunc act(const MatrixGroup& g, size_t elem, const RatFunc& f);

Poly reynolds(const MatrixGroup& g, const Poly& f);
RatFunc reynolds(const MatrixGroup& g, const RatFunc& f);

/// Reynolds image of each input; a data-parallel kernel with a serial
/// reference twin.
std::vector<Poly> reynolds_batch(const MatrixGroup& g, const std::vector<Poly>& fs,
                                 par::Mode mode = par::default_mode());

bool is_invariant(const MatrixGroup& g, const Poly& f);
bool is_invariant(const MatrixGroup& g, const RatFunc& f);

inline Cyclotomic character(const Matrix<Cyclotomic>& m) {
  Cyclotomic tr(0);
  for (size_t i = 0; i < m.rows(); ++i) tr += m.at(i, i);
  return tr;
}

/// Matrices of the action on k[V]_d w.r.t. the monomial basis ordered
/// descending under the ring's term order.
struct DegreeAction {
  int degree = 0;
  std::vector<Monomial> basis;
  std::vector<Matrix<Cyclotomic>> mats;  // per group element
};
DegreeAction degree_action(const MatrixGroup& g, int d,
                           par::Mode mode = par::default_mode());

/// G-map V_lambda -> k[V]_d recorded as the images of the distinguished
/// basis.
struct EquivariantEmbedding {
  std::string label;
  int degree = 0;
  std::vector<Poly> images;
};

bool check_equivariance(const MatrixGroup& g, const IrreducibleModel& model,
                        const EquivariantEmbedding& emb);

/// Multiplicity of V_lambda in k[V]_d by the character inner product;
/// throws std::domain_error when the inner product is not a non-negative
/// integer (invalid irreducible input).
long multiplicity(const MatrixGroup& g, const IrreducibleModel& model,
                  const DegreeAction& action);

/// Canonical basis of Hom_kG(V_lambda, k[V]_d): the averaging projector is
/// applied to the elementary maps and the results are row-reduced; rows are
/// scaled so the first nonzero image coefficient is 1. The averaging pass is
/// a data-parallel kernel with a serial reference twin.
std::vector<EquivariantEmbedding> hom_basis(const MatrixGroup& g,
                                            const IrreducibleModel& model,
                                            const DegreeAction& action,
                                            par::Mode mode = par::default_mode());

struct ValidationReport {
  bool ok = true;
  std::string first_violation;
};

/// Checks, in order: homomorphism property against the multiplication
/// table, absolute irreducibility (End dimension 1), pairwise
/// non-isomorphism, and the completeness identity sum d^2 = |G|.
ValidationReport validate_irreducibles(const MatrixGroup& g,
                                       const std::vector<IrreducibleModel>& models);

/// A validated group with its irreducible models and per-degree caches.
struct GroupData {
  MatrixGroup group;
  std::vector<IrreducibleModel> models;

  const DegreeAction& action(int d) const;
  const std::vector<EquivariantEmbedding>& homs(size_t model_index, int d) const;
  const IrreducibleModel& model(const std::string& label) const;
  size_t model_index(const std::string& label) const;

 private:
  mutable std::map<int, DegreeAction> action_cache_;
  mutable std::map<std::pair<size_t, int>, std::vector<EquivariantEmbedding>> hom_cache_;
};

}  // namespace invariants

#endif
