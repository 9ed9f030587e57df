#ifndef INVARIANTS_FIELD_GENERATORS_HPP
#define INVARIANTS_FIELD_GENERATORS_HPP

#include "invariants/orbit_ideal.hpp"

namespace invariants {

/// Canonical k-basis of the invariant polynomials of degree <= d: Reynolds
/// images of all monomials, row-reduced. The Reynolds pass is a
/// data-parallel kernel with a serial reference twin.
std::vector<Poly> invariant_basis(const GroupData& gd, int d,
                                  par::Mode mode = par::default_mode());

struct FieldGenVerdict {
  bool ok = false;
  std::string reason;            // set when !ok
  std::optional<size_t> count;   // standard monomial count when finite
};

/// Certifies field generation: forms the ideal of cleared relations
/// c_num(X) c_den(x) - c_num(x) c_den(X) in k(x)[X] and accepts exactly when
/// it is zero-dimensional with standard monomial count |G| (the generic
/// fiber is one orbit). Candidates must be G-invariant.
FieldGenVerdict verify_field_generation(const GroupData& gd,
                                        const std::vector<RatFunc>& candidates,
                                        const RingCtxPtr& Xring);

struct GeneratorSet {
  struct Item {
    Poly poly;
    int degree = 0;
    std::string provenance;
  };
  std::vector<Item> items;
  std::vector<Poly> polys() const;
  int max_degree() const;
};

/// Collects the matrix-equation entries (all invariant polynomials of degree
/// <= max(D_span + D_I, 2 D_span)) from the records of the degree-<=D_I
/// generators, and certifies that they generate the invariant field. A
/// verification failure would falsify the main bound and is raised as a
/// fatal inconsistency.
GeneratorSet extract_field_generators(const GroupData& gd, const OrbitIdealReport& rep,
                                      int D_span);

/// Smallest d <= limit with verify_field_generation(invariant_basis(d)), by
/// upward linear scan; nullopt when none.
std::optional<int> compute_beta_upper(const GroupData& gd, int limit,
                                      const RingCtxPtr& Xring);

}  // namespace invariants

#endif
