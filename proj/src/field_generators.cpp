#include "invariants/field_generators.hpp"

#include <algorithm>
#include <set>

namespace invariants {

std::vector<Poly> invariant_basis(const GroupData& gd, int d, par::Mode mode) {
  std::vector<Monomial> monos;
  for (int e = 0; e <= d; ++e)
    for (const auto& m : monomials_of_degree(gd.group.xring, e)) monos.push_back(m);
  std::vector<Poly> inputs;
  inputs.reserve(monos.size());
  for (const auto& m : monos)
    inputs.push_back(Poly::term(gd.group.xring, m, Cyclotomic(1)));
  std::vector<Poly> images = reynolds_batch(gd.group, inputs, mode);

  Matrix<Cyclotomic> rows(monos.size(), monos.size(), Cyclotomic(0));
  std::map<Monomial, size_t> pos;
  for (size_t i = 0; i < monos.size(); ++i) pos.emplace(monos[i], i);
  for (size_t r = 0; r < images.size(); ++r)
    for (const auto& [m, c] : images[r].terms()) rows.at(r, pos.at(m)) = c;
  size_t rank = rref(rows);

  std::vector<Poly> basis;
  basis.reserve(rank);
  for (size_t r = 0; r < rank; ++r) {
    Poly p(gd.group.xring);
    for (size_t cidx = 0; cidx < monos.size(); ++cidx)
      p.add_term(monos[cidx], rows.at(r, cidx));
    basis.push_back(std::move(p));
  }
  return basis;
}

namespace {

// Re-embed an XPoly into the same ring extended by trailing variables.
XPoly widen(const XPoly& p, const RingCtxPtr& wide) {
  XPoly out(wide);
  for (const auto& [m, c] : p.terms()) {
    Monomial mm(wide->nvars());
    std::copy(m.e.begin(), m.e.end(), mm.e.begin());
    out.add_term(mm, c);
  }
  return out;
}

}  // namespace

FieldGenVerdict verify_field_generation(const GroupData& gd,
                                        const std::vector<RatFunc>& candidates,
                                        const RingCtxPtr& Xring) {
  for (const auto& c : candidates)
    if (!is_invariant(gd.group, c))
      throw std::invalid_argument("field generation candidate is not G-invariant");

  std::vector<XPoly> rels;
  Poly den_product = poly_one(gd.group.xring);
  bool rational = false;
  for (const auto& c : candidates) {
    if (c.is_zero()) continue;
    // c_num(X) c_den(x) - c_num(x) c_den(X); zero exactly for constants.
    XPoly rel = to_xring(c.num(), Xring).scaled(RatFunc(c.den())) -
                to_xring(c.den(), Xring).scaled(RatFunc(c.num()));
    if (rel.is_zero()) continue;
    rels.push_back(std::move(rel));
    if (!c.den().is_constant()) {
      rational = true;
      den_product = den_product * c.den();
    }
  }
  FieldGenVerdict v;
  if (rels.empty()) {
    v.reason = "transcendence degree deficit";
    return v;
  }
  RingCtxPtr ring = Xring;
  if (rational) {
    // The cleared relations also vanish along the denominator locus; count
    // the fiber on the chart where the candidates are defined by inverting
    // the denominator product with one extra variable.
    std::vector<std::string> vars = Xring->vars;
    vars.push_back("U_sat");
    ring = make_ring(std::move(vars), Xring->order);
    for (auto& r : rels) r = widen(r, ring);
    XPoly dens = widen(to_xring(den_product, Xring), ring);
    Monomial u(ring->nvars());
    u.e.back() = 1;
    XPoly sat = dens.mul_term(u, RatFunc(poly_one(gd.group.xring))) -
                XPoly::constant(ring, RatFunc(poly_one(gd.group.xring)));
    rels.push_back(std::move(sat));
  }
  auto gb = buchberger(rels, ring->order);
  auto sm = standard_monomials(gb, ring->order);
  if (!sm) {
    v.reason = "transcendence degree deficit";
    return v;
  }
  v.count = sm->size();
  if (sm->size() == gd.group.order()) {
    v.ok = true;
  } else {
    v.reason = "generic fiber has " + std::to_string(sm->size()) + " points, expected " +
               std::to_string(gd.group.order());
  }
  return v;
}

std::vector<Poly> GeneratorSet::polys() const {
  std::vector<Poly> out;
  out.reserve(items.size());
  for (const auto& it : items) out.push_back(it.poly);
  return out;
}

int GeneratorSet::max_degree() const {
  int d = 0;
  for (const auto& it : items) d = std::max(d, it.degree);
  return d;
}

GeneratorSet extract_field_generators(const GroupData& gd, const OrbitIdealReport& rep,
                                      int D_span) {
  GeneratorSet set;
  std::set<const MatrixEquationRecord*> seen_records;
  std::vector<Poly> seen_polys;
  const int bound = std::max(D_span + rep.D_I, 2 * D_span);

  auto add = [&](const Poly& p, const std::string& provenance) {
    if (p.is_zero() || p.is_constant()) return;
    if (std::find(seen_polys.begin(), seen_polys.end(), p) != seen_polys.end()) return;
    int deg = p.degree().value_or(0);
    if (deg > bound)
      throw std::logic_error("extracted invariant of degree " + std::to_string(deg) +
                             " exceeds the K_low bound " + std::to_string(bound));
    seen_polys.push_back(p);
    set.items.push_back({p, deg, provenance});
  };

  for (const auto& gen : rep.generators) {
    if (gen.xpoly.degree().value_or(0) > rep.D_I) continue;
    const MatrixEquationRecord* rec = gen.record.get();
    if (!seen_records.insert(rec).second) continue;
    const std::string tag = rec->label + "/deg" + std::to_string(rec->source_degree) + "#" +
                            std::to_string(rec->source_index);
    for (size_t i = 0; i < rec->rhs.size(); ++i) add(rec->rhs[i], tag + ":rhs[" + std::to_string(i) + "]");
    for (size_t i = 0; i < rec->mat.rows(); ++i)
      for (size_t l = 0; l < rec->mat.cols(); ++l)
        add(rec->mat.at(i, l), tag + ":mat[" + std::to_string(i) + "][" + std::to_string(l) + "]");
  }

  std::vector<RatFunc> cands;
  for (const auto& it : set.items) cands.emplace_back(it.poly);
  FieldGenVerdict v = verify_field_generation(gd, cands, rep.Xring);
  if (!v.ok)
    throw std::logic_error("extracted coefficient set fails field generation (" + v.reason +
                           "); this contradicts the main bound");
  return set;
}

std::optional<int> compute_beta_upper(const GroupData& gd, int limit,
                                      const RingCtxPtr& Xring) {
  for (int d = 1; d <= limit; ++d) {
    std::vector<RatFunc> cands;
    for (const auto& p : invariant_basis(gd, d)) cands.emplace_back(p);
    if (verify_field_generation(gd, cands, Xring).ok) return d;
  }
  return std::nullopt;
}

}  // namespace invariants
