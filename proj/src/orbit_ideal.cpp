#include "invariants/orbit_ideal.hpp"

#include <algorithm>
#include <cctype>

namespace invariants {

RingCtxPtr make_X_ring(const RingCtxPtr& xring) {
  std::vector<std::string> names;
  names.reserve(xring->nvars());
  for (const auto& v : xring->vars) {
    std::string u = v;
    for (auto& c : u) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (u == v) u = "X_" + v;
    names.push_back(std::move(u));
  }
  return make_ring(std::move(names), xring->order);
}

namespace {

// Dual model index: the one whose character is g -> chi(g^{-1}).
size_t dual_model_index(const GroupData& gd, const IrreducibleModel& model) {
  for (size_t i = 0; i < gd.models.size(); ++i) {
    bool match = true;
    for (size_t e = 0; e < gd.group.order() && match; ++e)
      if (character(gd.models[i].mats[e]) != character(model.mats[gd.group.inv[e]]))
        match = false;
    if (match) return i;
  }
  throw std::logic_error("dual irreducible not found; model list incomplete");
}

std::vector<Poly> witness_elements_of(const RegularWitness& w, const std::string& label) {
  std::vector<Poly> out;
  for (const auto& comp : w.components) {
    if (comp.label != label) continue;
    for (const auto& emb : comp.embeddings)
      for (const auto& img : emb.images) out.push_back(img);
  }
  return out;
}

bool next_combination(std::vector<size_t>& idx, size_t n) {
  const size_t k = idx.size();
  size_t i = k;
  while (i-- > 0) {
    if (idx[i] + (k - i) < n + 0) {
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Poly> find_multipliers(const GroupData& gd, const RegularWitness& witness,
                                   const IrreducibleModel& model, size_t k) {
  const size_t d = model.dim;
  const auto& comp = witness.component(model.label);

  // Candidate multipliers: dual-component witness elements first, then the
  // rest of the witness, then pairwise products as a last resort.
  const std::string dual = gd.models[dual_model_index(gd, model)].label;
  std::vector<Poly> candidates = witness_elements_of(witness, dual);
  std::vector<Poly> all = witness.basis_polys();
  for (const auto& p : all)
    if (std::find(candidates.begin(), candidates.end(), p) == candidates.end())
      candidates.push_back(p);
  const size_t plain = candidates.size();
  for (size_t a = 0; a < plain; ++a)
    for (size_t b = a; b < plain; ++b) candidates.push_back(candidates[a] * candidates[b]);

  std::vector<Poly> images;  // psi_l(v_k) for the witness embeddings
  for (const auto& emb : comp.embeddings) images.push_back(emb.images[k]);

  std::vector<size_t> idx(d);
  for (size_t i = 0; i < d; ++i) idx[i] = i;
  // Lexicographic combinations over the two plain tiers, then products.
  do {
    Matrix<Poly> m(d, d, Poly(gd.group.xring));
    for (size_t i = 0; i < d; ++i)
      for (size_t l = 0; l < d; ++l)
        m.at(i, l) = reynolds(gd.group, candidates[idx[i]] * images[l]);
    if (!bareiss_det(m).is_zero()) {
      std::vector<Poly> hs;
      for (size_t i = 0; i < d; ++i) hs.push_back(candidates[idx[i]]);
      return hs;
    }
  } while (next_combination(idx, candidates.size()));
  throw std::logic_error("no nonsingular Reynolds multiplier matrix found; "
                         "this contradicts the trace-form nondegeneracy");
}

MatrixEquationRecord solve_embedding(const GroupData& gd, const RegularWitness& witness,
                                     int D_span, const EquivariantEmbedding& phi,
                                     int source_index) {
  const IrreducibleModel& model = gd.model(phi.label);
  const auto& comp = witness.component(phi.label);
  const size_t d = model.dim;

  MatrixEquationRecord rec;
  rec.label = phi.label;
  rec.source_degree = phi.degree;
  rec.source_index = source_index;
  rec.multipliers = find_multipliers(gd, witness, model, 0);

  rec.mat = Matrix<Poly>(d, d, Poly(gd.group.xring));
  for (size_t i = 0; i < d; ++i) {
    for (size_t l = 0; l < d; ++l)
      rec.mat.at(i, l) = reynolds(gd.group, rec.multipliers[i] * comp.embeddings[l].images[0]);
    rec.rhs.push_back(reynolds(gd.group, rec.multipliers[i] * phi.images[0]));
  }
  rec.solution = cramer_solve(rec.mat, rec.rhs);

  // The coefficients are shared across the basis indices; verify the relation
  // phi(v_j) = sum_l a_l psi_l(v_j) at every j.
  for (size_t j = 0; j < d; ++j) {
    RatFunc rhs{Poly(gd.group.xring)};
    for (size_t l = 0; l < d; ++l) rhs += rec.solution[l] * RatFunc(comp.embeddings[l].images[j]);
    if (rhs != RatFunc(phi.images[j]))
      throw std::logic_error("matrix-equation solution failed verification at basis index " +
                             std::to_string(j));
  }

  bool multipliers_low = true;
  for (const auto& h : rec.multipliers)
    if (h.degree().value_or(0) > D_span) multipliers_low = false;
  int bound = 0;
  auto note = [&bound](const Poly& p) {
    if (auto dg = p.degree()) bound = std::max(bound, *dg);
  };
  for (size_t i = 0; i < d; ++i) {
    note(rec.rhs[i]);
    for (size_t l = 0; l < d; ++l) note(rec.mat.at(i, l));
  }
  rec.entry_degree_bound = bound;
  if (multipliers_low && bound > std::max(D_span + phi.degree, 2 * D_span))
    throw std::logic_error("matrix-equation entry degree exceeds the K_low bound");
  return rec;
}

std::vector<OrbitIdealGenerator> build_orbit_ideal(const GroupData& gd,
                                                   const RegularWitness& witness,
                                                   int D_span, int d,
                                                   const RingCtxPtr& Xring) {
  std::vector<OrbitIdealGenerator> gens;
  for (int e = 0; e <= d; ++e) {
    for (size_t mi = 0; mi < gd.models.size(); ++mi) {
      const auto& embs = gd.homs(mi, e);
      const auto& comp = witness.component(gd.models[mi].label);
      for (size_t s = 0; s < embs.size(); ++s) {
        const EquivariantEmbedding& phi = embs[s];
        bool in_witness = false;
        for (const auto& w : comp.embeddings)
          if (w.degree == phi.degree && w.images == phi.images) {
            in_witness = true;
            break;
          }
        if (in_witness) continue;
        auto rec = std::make_shared<const MatrixEquationRecord>(
            solve_embedding(gd, witness, D_span, phi, static_cast<int>(s)));
        for (size_t j = 0; j < phi.images.size(); ++j) {
          XPoly rel = to_xring(phi.images[j], Xring);
          for (size_t l = 0; l < comp.embeddings.size(); ++l) {
            XPoly t = to_xring(comp.embeddings[l].images[j], Xring);
            rel -= t.scaled(rec->solution[l]);
          }
          if (rel.is_zero()) continue;
          if (!xi_image(rel, gd.group.xring).is_zero())
            throw std::logic_error("orbit ideal relation does not vanish under X -> x");
          OrbitIdealGenerator gen;
          gen.xpoly = rel.monic(Xring->order);
          gen.label = phi.label;
          gen.source_degree = phi.degree;
          gen.source_index = static_cast<int>(s);
          gen.basis_index = static_cast<int>(j);
          gen.record = rec;
          int bound = 0;
          for (const auto& [m, c] : gen.xpoly.terms())
            if (auto h = c.height()) bound = std::max(bound, *h);
          gen.coeff_degree_bound = bound;
          gens.push_back(std::move(gen));
        }
      }
    }
  }
  return gens;
}

OrbitIdealReport certify_orbit_ideal(const GroupData& gd,
                                     std::vector<OrbitIdealGenerator> generators,
                                     const RingCtxPtr& Xring, int candidate_degree) {
  auto count_for = [&](const std::vector<XPoly>& basis) -> std::optional<size_t> {
    auto gb = buchberger(basis, Xring->order);
    auto sm = standard_monomials(gb, Xring->order);
    if (!sm) return std::nullopt;
    return sm->size();
  };

  std::vector<XPoly> all;
  for (const auto& g : generators) all.push_back(g.xpoly);
  auto gb = buchberger(all, Xring->order);
  auto sm = standard_monomials(gb, Xring->order);
  if (!sm || sm->size() != gd.group.order())
    throw std::domain_error("orbit ideal certificate failed: standard monomial count " +
                            std::string(sm ? std::to_string(sm->size()) : "infinite") +
                            " != " + std::to_string(gd.group.order()));

  // Downward search: smallest d whose degree-<=d generator subset still cuts
  // out the |G|-point generic orbit (containment plus matching codimension
  // forces equality).
  int max_deg = 0;
  for (const auto& g : generators)
    max_deg = std::max(max_deg, g.xpoly.degree().value_or(0));
  int d_i = max_deg;
  for (int d = max_deg - 1; d >= 1; --d) {
    std::vector<XPoly> subset;
    for (const auto& g : generators)
      if (g.xpoly.degree().value_or(0) <= d) subset.push_back(g.xpoly);
    if (subset.empty()) break;
    auto c = count_for(subset);
    if (c && *c == gd.group.order())
      d_i = d;
    else
      break;
  }

  OrbitIdealReport rep;
  rep.candidate_degree = candidate_degree;
  rep.D_I = d_i;
  rep.generators = std::move(generators);
  rep.groebner_basis = std::move(gb);
  rep.std_monomials = std::move(*sm);
  rep.Xring = Xring;
  return rep;
}

OrbitIdealReport compute_orbit_ideal(const GroupData& gd, const SpanReport& span) {
  RingCtxPtr Xring = make_X_ring(gd.group.xring);
  for (int d = span.D_span + 1; d <= span.D_span + 3; ++d) {
    auto gens = build_orbit_ideal(gd, span.witness, span.D_span, d, Xring);
    try {
      OrbitIdealReport rep = certify_orbit_ideal(gd, std::move(gens), Xring, d);
      if (rep.D_I > span.D_span + 1)
        throw std::logic_error("D_I exceeds D_span + 1");
      return rep;
    } catch (const std::domain_error&) {
      // Count shortfall: candidate degree too small; retry one degree higher.
    }
  }
  throw std::logic_error("orbit ideal not certified by degree D_span + 3");
}

}  // namespace invariants
