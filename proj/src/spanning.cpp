#include "invariants/spanning.hpp"

#include <random>

namespace invariants {

Matrix<Poly> translate_matrix(const MatrixGroup& g, const std::vector<Poly>& polys,
                              par::Mode mode) {
  Matrix<Poly> m(g.order(), polys.size(), Poly(g.xring));
  par::parallel_for(g.order() * polys.size(), mode, [&](size_t cell) {
    size_t e = cell / polys.size();
    size_t i = cell % polys.size();
    m.at(e, i) = act(g, e, polys[i]);
  });
  return m;
}

size_t galois_rank(const MatrixGroup& g, const std::vector<Poly>& polys, par::Mode mode) {
  if (polys.empty()) return 0;
  return bareiss_rank(translate_matrix(g, polys, mode), mode);
}

namespace {

// Evaluated rank at a random integer point; a lower bound on the symbolic
// rank over k(x).
size_t evaluated_rank(const MatrixGroup& g, const std::vector<Poly>& polys,
                      std::mt19937& rng) {
  std::uniform_int_distribution<long> dist(-41, 41);
  std::vector<Cyclotomic> point;
  point.reserve(g.dim());
  for (size_t i = 0; i < g.dim(); ++i) point.emplace_back(dist(rng));
  Matrix<Cyclotomic> m(g.order(), polys.size(), Cyclotomic(0));
  for (size_t e = 0; e < g.order(); ++e)
    for (size_t i = 0; i < polys.size(); ++i)
      m.at(e, i) = eval_at(act(g, e, polys[i]), point);
  return rref(m);
}

}  // namespace

bool k_independent(const MatrixGroup& g, const std::vector<Poly>& polys,
                   const RankOptions& opts) {
  if (polys.empty()) return true;
  if (opts.fast) {
    std::mt19937 rng(opts.seed);
    for (int attempt = 0; attempt < 3; ++attempt)
      if (evaluated_rank(g, polys, rng) == polys.size()) return true;
    // The random points fell short; only the symbolic rank may claim
    // dependence.
  }
  return galois_rank(g, polys) == polys.size();
}

std::vector<Poly> RegularWitness::basis_polys() const {
  std::vector<Poly> out;
  for (const auto& comp : components)
    for (const auto& emb : comp.embeddings)
      for (const auto& img : emb.images) out.push_back(img);
  return out;
}

int RegularWitness::max_degree() const {
  int d = 0;
  for (const auto& comp : components)
    for (const auto& emb : comp.embeddings) d = std::max(d, emb.degree);
  return d;
}

const RegularWitness::Component& RegularWitness::component(const std::string& label) const {
  for (const auto& comp : components)
    if (comp.label == label) return comp;
  throw std::invalid_argument("witness has no component " + label);
}

int compute_Dreg(const GroupData& gd) {
  const size_t limit = gd.group.order();  // D_reg <= |G| - 1
  std::vector<long> seen(gd.models.size(), 0);
  for (int d = 0; d < static_cast<int>(limit); ++d) {
    const DegreeAction& act_d = gd.action(d);
    bool all = true;
    for (size_t i = 0; i < gd.models.size(); ++i) {
      seen[i] += multiplicity(gd.group, gd.models[i], act_d);
      if (seen[i] < static_cast<long>(gd.models[i].dim)) all = false;
    }
    if (all) return d;
  }
  throw std::logic_error("regular representation not found by degree |G|-1");
}

SpanReport compute_span(const GroupData& gd, const RankOptions& opts) {
  SpanReport rep;
  rep.D_reg = compute_Dreg(gd);

  const size_t nmodels = gd.models.size();
  std::vector<RegularWitness::Component> comps(nmodels);
  std::vector<std::vector<Poly>> stacked(nmodels);  // accepted images per model
  std::vector<bool> complete(nmodels, false);
  size_t done = 0;
  std::vector<std::vector<int>> accept_degrees(nmodels);

  for (size_t i = 0; i < nmodels; ++i) comps[i].label = gd.models[i].label;

  const int dmax = static_cast<int>(gd.group.order());  // termination by |G| - 1
  for (int d = 0; done < nmodels && d < dmax; ++d) {
    for (size_t i = 0; i < nmodels; ++i) {
      if (complete[i]) continue;
      for (const auto& emb : gd.homs(i, d)) {
        std::vector<Poly> candidate = stacked[i];
        for (const auto& img : emb.images) candidate.push_back(img);
        if (!k_independent(gd.group, candidate, opts)) continue;
        stacked[i] = std::move(candidate);
        comps[i].embeddings.push_back(emb);
        accept_degrees[i].push_back(d);
        if (comps[i].embeddings.size() == gd.models[i].dim) {
          complete[i] = true;
          ++done;
          break;
        }
      }
    }
  }
  if (done < nmodels)
    throw std::logic_error("spanning search failed to reach |G| by degree |G|-1; "
                           "input action is likely not faithful");

  rep.witness.components = std::move(comps);
  rep.D_span = rep.witness.max_degree();
  rep.dimension_profile.assign(static_cast<size_t>(rep.D_span) + 1, 0);
  for (size_t i = 0; i < nmodels; ++i)
    for (int deg : accept_degrees[i])
      for (int e = deg; e <= rep.D_span; ++e)
        rep.dimension_profile[static_cast<size_t>(e)] += gd.models[i].dim;
  return rep;
}

bool verify_witness(const GroupData& gd, const RegularWitness& w) {
  size_t total = 0;
  for (const auto& comp : w.components) {
    std::vector<Poly> polys;
    for (const auto& emb : comp.embeddings)
      for (const auto& img : emb.images) polys.push_back(img);
    size_t expect = polys.size();
    const IrreducibleModel& m = gd.model(comp.label);
    if (expect != m.dim * m.dim) return false;
    if (galois_rank(gd.group, polys) != expect) return false;
    total += expect;
  }
  return total == gd.group.order();
}

}  // namespace invariants
