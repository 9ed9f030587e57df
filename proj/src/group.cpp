#include "invariants/group.hpp"

#include <algorithm>

namespace invariants {

namespace {

Matrix<Cyclotomic> identity_matrix(size_t n) {
  Matrix<Cyclotomic> m(n, n, Cyclotomic(0));
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
  return m;
}

bool matrix_less(const Matrix<Cyclotomic>& a, const Matrix<Cyclotomic>& b) {
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) != b.at(i, j)) return a.at(i, j) < b.at(i, j);
    }
  return false;
}

// Inverse over the cyclotomic field by Gauss-Jordan; throws on singular.
Matrix<Cyclotomic> invert(const Matrix<Cyclotomic>& m) {
  const size_t n = m.rows();
  if (rank_of(m) != n) throw std::invalid_argument("generator matrix is not invertible");
  Matrix<Cyclotomic> aug(n, 2 * n, Cyclotomic(0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Cyclotomic(1);
  }
  rref(aug);
  Matrix<Cyclotomic> out(n, n, Cyclotomic(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

}  // namespace

MatrixGroup enumerate_group(const std::vector<Matrix<Cyclotomic>>& generators,
                            RingCtxPtr xring, unsigned field_order, size_t element_cap) {
  const size_t n = xring->nvars();
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n)
      throw std::invalid_argument("generator matrix dimension does not match the variable count");
    invert(g);  // rejects singular input early
  }
  MatrixGroup G;
  G.xring = std::move(xring);
  G.field_order = field_order;
  G.elems.push_back(identity_matrix(n));
  G.bfs_parent.emplace_back(0, SIZE_MAX);

  std::map<Matrix<Cyclotomic>, size_t, bool (*)(const Matrix<Cyclotomic>&, const Matrix<Cyclotomic>&)>
      index(matrix_less);
  index.emplace(G.elems[0], 0);

  // Register generators first (they may duplicate the identity or each other).
  std::vector<size_t> gen_idx;
  for (size_t k = 0; k < generators.size(); ++k) {
    auto it = index.find(generators[k]);
    if (it != index.end()) {
      gen_idx.push_back(it->second);
      continue;
    }
    size_t id = G.elems.size();
    G.elems.push_back(generators[k]);
    G.bfs_parent.emplace_back(0, k);
    index.emplace(generators[k], id);
    gen_idx.push_back(id);
  }
  G.gens = gen_idx;

  // Breadth-first closure: walk the discovered list in order, multiplying on
  // the right by the generators in input order.
  for (size_t i = 0; i < G.elems.size(); ++i) {
    for (size_t k = 0; k < generators.size(); ++k) {
      Matrix<Cyclotomic> prod = G.elems[i] * generators[k];
      if (index.count(prod)) continue;
      if (G.elems.size() >= element_cap) throw GroupTooLarge(element_cap);
      size_t id = G.elems.size();
      G.elems.push_back(prod);
      G.bfs_parent.emplace_back(i, k);
      index.emplace(std::move(prod), id);
    }
  }

  const size_t N = G.elems.size();
  G.mult.assign(N, std::vector<size_t>(N));
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) {
      auto it = index.find(G.elems[i] * G.elems[j]);
      if (it == index.end()) throw std::logic_error("group closure incomplete");
      G.mult[i][j] = it->second;
    }
  G.inv.assign(N, 0);
  for (size_t i = 0; i < N; ++i) {
    bool found = false;
    for (size_t j = 0; j < N; ++j)
      if (G.mult[i][j] == 0) {
        G.inv[i] = j;
        found = true;
        break;
      }
    if (!found) throw std::logic_error("group element without inverse");
  }
  return G;
}

IrreducibleModel extend_model(const MatrixGroup& g, std::string label,
                              const std::vector<Matrix<Cyclotomic>>& gen_mats) {
  if (gen_mats.size() != g.gens.size() && !(gen_mats.empty() && g.gens.empty()))
    throw std::invalid_argument("model '" + label + "': need one matrix per generator");
  IrreducibleModel m;
  m.label = std::move(label);
  m.dim = gen_mats.empty() ? 1 : gen_mats.front().rows();
  for (const auto& mat : gen_mats)
    if (mat.rows() != m.dim || mat.cols() != m.dim)
      throw std::invalid_argument("model '" + m.label + "': matrices must be square of equal size");
  m.mats.reserve(g.order());
  for (size_t i = 0; i < g.order(); ++i) {
    if (i == 0) {
      m.mats.push_back(identity_matrix(m.dim));
      continue;
    }
    auto [parent, slot] = g.bfs_parent[i];
    m.mats.push_back(m.mats[parent] * gen_mats[slot]);
  }
  return m;
}

Poly act(const MatrixGroup& g, size_t elem, const Poly& f) {
  check_same_ring(g.xring, f.ctx());
  const Matrix<Cyclotomic>& gi = g.elems[g.inv[elem]];
  const size_t n = g.dim();
  // Linear forms: x_i -> sum_j (g^{-1})_{ij} x_j.
  std::vector<Poly> forms;
  forms.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    Poly L(g.xring);
    for (size_t j = 0; j < n; ++j) {
      Monomial m(n);
      m.e[j] = 1;
      L.add_term(m, gi.at(i, j));
    }
    forms.push_back(std::move(L));
  }
  // Per-variable power tables up to the needed exponent.
  std::vector<int> max_e(n, 0);
  for (const auto& [m, c] : f.terms())
    for (size_t i = 0; i < n; ++i) max_e[i] = std::max(max_e[i], m.e[i]);
  std::vector<std::vector<Poly>> pow(n);
  for (size_t i = 0; i < n; ++i) {
    pow[i].push_back(poly_one(g.xring));
    for (int e = 1; e <= max_e[i]; ++e) pow[i].push_back(pow[i].back() * forms[i]);
  }
  Poly out(g.xring);
  for (const auto& [m, c] : f.terms()) {
    Poly t = Poly::constant(g.xring, c);
    for (size_t i = 0; i < n; ++i)
      if (m.e[i] > 0) t = t * pow[i][m.e[i]];
    out += t;
  }
  return out;
}

RatFunc act(const MatrixGroup& g, size_t elem, const RatFunc& f) {
  if (f.is_zero()) return f;
  return RatFunc(act(g, elem, f.num()), act(g, elem, f.den()));
}

Poly reynolds(const MatrixGroup& g, const Poly& f) {
  Poly sum(g.xring);
  for (size_t e = 0; e < g.order(); ++e) sum += act(g, e, f);
  return sum.scaled(Cyclotomic(Rational(1, static_cast<long>(g.order()))));
}

RatFunc reynolds(const MatrixGroup& g, const RatFunc& f) {
  RatFunc sum(Poly(g.xring));
  for (size_t e = 0; e < g.order(); ++e) sum += act(g, e, f);
  return sum * RatFunc::constant(g.xring, Cyclotomic(Rational(1, static_cast<long>(g.order()))));
}

std::vector<Poly> reynolds_batch(const MatrixGroup& g, const std::vector<Poly>& fs,
                                 par::Mode mode) {
  std::vector<Poly> out(fs.size(), Poly(g.xring));
  par::parallel_for(fs.size(), mode, [&](size_t i) { out[i] = reynolds(g, fs[i]); });
  return out;
}

bool is_invariant(const MatrixGroup& g, const Poly& f) {
  for (size_t k : g.gens)
    if (act(g, k, f) != f) return false;
  return true;
}

bool is_invariant(const MatrixGroup& g, const RatFunc& f) {
  if (f.is_zero()) return true;
  for (size_t k : g.gens) {
    // Compare as fractions: act(num)*den == num*act(den).
    if (act(g, k, f.num()) * f.den() != f.num() * act(g, k, f.den())) return false;
  }
  return true;
}

DegreeAction degree_action(const MatrixGroup& g, int d, par::Mode mode) {
  DegreeAction da;
  da.degree = d;
  da.basis = monomials_of_degree(g.xring, d);
  const size_t nd = da.basis.size();
  std::map<Monomial, size_t> pos;
  for (size_t i = 0; i < nd; ++i) pos.emplace(da.basis[i], i);
  da.mats.assign(g.order(), Matrix<Cyclotomic>(nd, nd, Cyclotomic(0)));
  par::parallel_for(g.order(), mode, [&](size_t e) {
    for (size_t j = 0; j < nd; ++j) {
      Poly img = act(g, e, Poly::term(g.xring, da.basis[j], Cyclotomic(1)));
      for (const auto& [m, c] : img.terms()) da.mats[e].at(pos.at(m), j) = c;
    }
  });
  return da;
}

bool check_equivariance(const MatrixGroup& g, const IrreducibleModel& model,
                        const EquivariantEmbedding& emb) {
  if (emb.images.size() != model.dim) return false;
  for (size_t k : g.gens) {
    for (size_t j = 0; j < model.dim; ++j) {
      // Acting on the image of v_j must equal the model's column action:
      // g . emb(v_j) = emb(g . v_j) = sum_i model(g)[i][j] emb(v_i).
      Poly lhs = act(g, k, emb.images[j]);
      Poly rhs(g.xring);
      for (size_t i = 0; i < model.dim; ++i)
        rhs += emb.images[i].scaled(model.mats[k].at(i, j));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

long multiplicity(const MatrixGroup& g, const IrreducibleModel& model,
                  const DegreeAction& action) {
  Cyclotomic acc(0);
  for (size_t e = 0; e < g.order(); ++e)
    acc += character(action.mats[e]) * character(model.mats[g.inv[e]]);
  acc = acc / Cyclotomic(static_cast<long>(g.order()));
  if (!acc.is_rational()) throw std::domain_error("character inner product is not rational");
  Rational r = acc.as_rational();
  if (!r.is_integer() || r.sign() < 0)
    throw std::domain_error("character inner product is not a non-negative integer; invalid irreducible model");
  return static_cast<long>(r.numerator().get_si());
}

std::vector<EquivariantEmbedding> hom_basis(const MatrixGroup& g,
                                            const IrreducibleModel& model,
                                            const DegreeAction& action,
                                            par::Mode mode) {
  const size_t nd = action.basis.size();
  const size_t dl = model.dim;
  const size_t flat = nd * dl;
  const long mult = multiplicity(g, model, action);
  if (mult == 0) return {};

  // Averaging projector applied to each elementary map E_{t,b}; one row per
  // candidate, flattened with the image of v_1 first.
  Matrix<Cyclotomic> rows(flat, flat, Cyclotomic(0));
  const Cyclotomic scale = Cyclotomic(Rational(1, static_cast<long>(g.order())));
  par::parallel_for(flat, mode, [&](size_t cand) {
    const size_t t = cand / dl;  // monomial index
    const size_t b = cand % dl;  // model basis index
    for (size_t e = 0; e < g.order(); ++e) {
      const Matrix<Cyclotomic>& rho_d = action.mats[e];
      const Matrix<Cyclotomic>& rho_l_inv = model.mats[g.inv[e]];
      for (size_t i = 0; i < nd; ++i) {
        const Cyclotomic& left = rho_d.at(i, t);
        if (left.is_zero()) continue;
        for (size_t j = 0; j < dl; ++j) {
          const Cyclotomic& right = rho_l_inv.at(b, j);
          if (right.is_zero()) continue;
          // Projected map entry (i, j), flattened j-major.
          rows.at(cand, j * nd + i) += left * right * scale;
        }
      }
    }
  });

  size_t rank = rref(rows);
  if (rank != static_cast<size_t>(mult))
    throw std::logic_error("hom space dimension disagrees with the character multiplicity");

  std::vector<EquivariantEmbedding> out;
  out.reserve(rank);
  for (size_t r = 0; r < rank; ++r) {
    EquivariantEmbedding emb;
    emb.label = model.label;
    emb.degree = action.degree;
    for (size_t j = 0; j < dl; ++j) {
      Poly img(g.xring);
      for (size_t i = 0; i < nd; ++i)
        img.add_term(action.basis[i], rows.at(r, j * nd + i));
      emb.images.push_back(std::move(img));
    }
    out.push_back(std::move(emb));
  }
  return out;
}

ValidationReport validate_irreducibles(const MatrixGroup& g,
                                       const std::vector<IrreducibleModel>& models) {
  ValidationReport rep;
  auto fail = [&](std::string why) {
    rep.ok = false;
    rep.first_violation = std::move(why);
    return rep;
  };
  const Cyclotomic inv_order = Cyclotomic(Rational(1, static_cast<long>(g.order())));

  for (const auto& m : models) {
    if (!m.mats[0].is_identity()) return fail("model '" + m.label + "': identity matrix wrong");
    for (size_t i = 0; i < g.order(); ++i)
      for (size_t j = 0; j < g.order(); ++j)
        if (m.mats[i] * m.mats[j] != m.mats[g.mult[i][j]])
          return fail("model '" + m.label + "' is not a homomorphism");
  }
  // Absolute irreducibility: the averaged End space is one-dimensional.
  for (const auto& m : models) {
    const size_t d = m.dim;
    Matrix<Cyclotomic> rows(d * d, d * d, Cyclotomic(0));
    for (size_t a = 0; a < d; ++a)
      for (size_t b = 0; b < d; ++b)
        for (size_t e = 0; e < g.order(); ++e)
          for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j)
              rows.at(a * d + b, i * d + j) +=
                  m.mats[e].at(i, a) * m.mats[g.inv[e]].at(b, j) * inv_order;
    if (rref(rows) != 1)
      return fail("model '" + m.label + "' is not absolutely irreducible (End dimension != 1)");
  }
  // Pairwise non-isomorphism: averaged Hom space between distinct labels is 0.
  for (size_t p = 0; p < models.size(); ++p)
    for (size_t q = p + 1; q < models.size(); ++q) {
      const auto& A = models[p];
      const auto& B = models[q];
      for (size_t a = 0; a < A.dim; ++a)
        for (size_t b = 0; b < B.dim; ++b) {
          Matrix<Cyclotomic> avg(A.dim, B.dim, Cyclotomic(0));
          for (size_t e = 0; e < g.order(); ++e)
            for (size_t i = 0; i < A.dim; ++i)
              for (size_t j = 0; j < B.dim; ++j)
                avg.at(i, j) += A.mats[e].at(i, a) * B.mats[g.inv[e]].at(b, j) * inv_order;
          for (size_t i = 0; i < A.dim; ++i)
            for (size_t j = 0; j < B.dim; ++j)
              if (!avg.at(i, j).is_zero())
                return fail("models '" + A.label + "' and '" + B.label + "' are isomorphic");
        }
    }
  size_t sum = 0;
  for (const auto& m : models) sum += m.dim * m.dim;
  if (sum != g.order())
    return fail("sum of squared degrees is " + std::to_string(sum) + ", expected " +
                std::to_string(g.order()));
  return rep;
}

const DegreeAction& GroupData::action(int d) const {
  auto it = action_cache_.find(d);
  if (it == action_cache_.end()) it = action_cache_.emplace(d, degree_action(group, d)).first;
  return it->second;
}

const std::vector<EquivariantEmbedding>& GroupData::homs(size_t model_index, int d) const {
  auto key = std::make_pair(model_index, d);
  auto it = hom_cache_.find(key);
  if (it == hom_cache_.end())
    it = hom_cache_.emplace(key, hom_basis(group, models[model_index], action(d))).first;
  return it->second;
}

const IrreducibleModel& GroupData::model(const std::string& label) const {
  return models[model_index(label)];
}

size_t GroupData::model_index(const std::string& label) const {
  for (size_t i = 0; i < models.size(); ++i)
    if (models[i].label == label) return i;
  throw std::invalid_argument("unknown irreducible label: " + label);
}

}  // namespace invariants
