#include "invariants/analysis.hpp"

#include <chrono>
#include <sstream>

#include "invariants/poly_io.hpp"

namespace invariants {

namespace {

struct StageTimer {
  std::vector<std::pair<std::string, double>>& sink;
  std::string name;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~StageTimer() {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    sink.emplace_back(name, ms.count());
  }
};

}  // namespace

bool AnalysisReport::all_ok() const {
  if (!checks.dreg_le_dspan || !checks.dspan_le_gminus1 || !checks.profile_strict ||
      !checks.witness_certified)
    return false;
  for (const auto& opt : {checks.di_le_dspan_plus1, checks.beta_le_bound,
                          checks.extraction_generates})
    if (opt && !*opt) return false;
  return true;
}

AnalysisReport analyze(const GroupData& gd, const RunOptions& opts,
                       const std::string& fixture_name) {
  AnalysisReport rep;
  rep.fixture = fixture_name;
  rep.group_order = gd.group.order();
  rep.field_order = gd.group.field_order;
  rep.term_order = gd.group.xring->order.name();

  RankOptions rank;
  rank.fast = opts.fast_rank;
  rank.seed = opts.rank_seed;

  {
    StageTimer t{rep.timings_ms, "spanning"};
    rep.span = compute_span(gd, rank);
  }
  rep.bound = 2 * rep.span.D_span + 1;
  {
    StageTimer t{rep.timings_ms, "witness_certification"};
    rep.checks.witness_certified = verify_witness(gd, rep.span.witness);
  }

  // Isotypic decomposition table up to the orbit-ideal degree.
  int table_depth = opts.decompose_max_degree.value_or(rep.span.D_span + 1);
  {
    StageTimer t{rep.timings_ms, "decomposition"};
    for (int d = 0; d <= table_depth; ++d) {
      for (size_t mi = 0; mi < gd.models.size(); ++mi) {
        for (const auto& emb : gd.homs(mi, d)) {
          AnalysisReport::DecompRow row;
          row.degree = d;
          row.label = emb.label;
          for (const auto& img : emb.images) row.images.push_back(to_string(img));
          for (const auto& w : rep.span.witness.component(emb.label).embeddings)
            if (w.degree == emb.degree && w.images == emb.images) row.in_witness = true;
          rep.decomposition.push_back(std::move(row));
        }
      }
    }
  }

  if (opts.with_orbit_ideal) {
    StageTimer t{rep.timings_ms, "orbit_ideal"};
    rep.orbit = compute_orbit_ideal(gd, rep.span);
    rep.checks.di_le_dspan_plus1 = rep.orbit->D_I <= rep.span.D_span + 1;
  }
  if (opts.with_orbit_ideal) {
    StageTimer t{rep.timings_ms, "field_generator_extraction"};
    rep.generators = extract_field_generators(gd, *rep.orbit, rep.span.D_span);
    rep.extraction_verified = true;  // extract_field_generators throws otherwise
    rep.checks.extraction_generates = true;
  }
  if (opts.with_beta) {
    StageTimer t{rep.timings_ms, "beta_scan"};
    RingCtxPtr Xring = rep.orbit ? rep.orbit->Xring : make_X_ring(gd.group.xring);
    rep.beta_upper = compute_beta_upper(gd, rep.bound, Xring);
    rep.checks.beta_le_bound = rep.beta_upper.has_value() && *rep.beta_upper <= rep.bound;
  }

  rep.checks.dreg_le_dspan = rep.span.D_reg <= rep.span.D_span;
  rep.checks.dspan_le_gminus1 =
      rep.span.D_span <= static_cast<int>(rep.group_order) - 1;
  rep.checks.profile_strict = true;
  for (size_t i = 1; i < rep.span.dimension_profile.size(); ++i)
    if (rep.span.dimension_profile[i] <= rep.span.dimension_profile[i - 1])
      rep.checks.profile_strict = false;
  if (rep.span.dimension_profile.empty() ||
      rep.span.dimension_profile.back() != rep.group_order)
    rep.checks.profile_strict = false;
  return rep;
}

nlohmann::ordered_json report_to_json(const AnalysisReport& rep) {
  using json = nlohmann::ordered_json;
  json j;
  j["fixture"] = rep.fixture;
  j["group_order"] = rep.group_order;
  j["field"] = {{"cyclotomic_order", rep.field_order}};
  j["term_order"] = rep.term_order;
  j["degrees"] = json::object();
  j["degrees"]["D_reg"] = rep.span.D_reg;
  j["degrees"]["D_span"] = rep.span.D_span;
  if (rep.orbit) j["degrees"]["D_I"] = rep.orbit->D_I;
  if (rep.beta_upper) j["degrees"]["beta_field_upper"] = *rep.beta_upper;
  j["degrees"]["bound_2Dspan_plus_1"] = rep.bound;
  j["dimension_profile"] = rep.span.dimension_profile;

  json witness = json::array();
  for (const auto& comp : rep.span.witness.components) {
    for (const auto& emb : comp.embeddings) {
      json e;
      e["label"] = comp.label;
      e["degree"] = emb.degree;
      json imgs = json::array();
      for (const auto& img : emb.images) imgs.push_back(to_string(img));
      e["images"] = imgs;
      witness.push_back(e);
    }
  }
  j["witness"] = witness;

  json decomp = json::array();
  for (const auto& row : rep.decomposition) {
    json r;
    r["degree"] = row.degree;
    r["label"] = row.label;
    r["images"] = row.images;
    r["in_witness"] = row.in_witness;
    decomp.push_back(r);
  }
  j["decomposition"] = decomp;

  if (rep.orbit) {
    json o;
    o["candidate_degree"] = rep.orbit->candidate_degree;
    o["D_I"] = rep.orbit->D_I;
    json gens = json::array();
    for (const auto& g : rep.orbit->generators) {
      json e;
      e["xpoly"] = to_string(g.xpoly);
      e["lambda"] = g.label;
      e["source_degree"] = g.source_degree;
      e["source_index"] = g.source_index;
      e["basis_index"] = g.basis_index;
      e["coeff_degree_bound"] = g.coeff_degree_bound;
      gens.push_back(e);
    }
    o["generators"] = gens;
    json gb = json::array();
    for (const auto& f : rep.orbit->groebner_basis) gb.push_back(to_string(f));
    o["groebner_basis"] = gb;
    json init = json::array();
    for (const auto& f : rep.orbit->groebner_basis)
      init.push_back(to_string(
          Poly::term(rep.orbit->Xring, f.leading(rep.orbit->Xring->order).first, Cyclotomic(1))));
    o["initial_ideal"] = init;
    o["standard_monomial_count"] = rep.orbit->std_monomials.size();
    j["orbit_ideal"] = o;
  } else {
    j["orbit_ideal"] = nullptr;
  }

  if (rep.generators) {
    json items = json::array();
    for (const auto& it : rep.generators->items) {
      json e;
      e["poly"] = to_string(it.poly);
      e["degree"] = it.degree;
      e["provenance"] = it.provenance;
      items.push_back(e);
    }
    j["field_generators"] = {{"items", items}, {"verified", rep.extraction_verified}};
  } else {
    j["field_generators"] = nullptr;
  }

  json checks;
  checks["Dreg_le_Dspan"] = rep.checks.dreg_le_dspan;
  checks["Dspan_le_order_minus_1"] = rep.checks.dspan_le_gminus1;
  checks["profile_strictly_increasing"] = rep.checks.profile_strict;
  checks["witness_certified"] = rep.checks.witness_certified;
  auto opt = [](const std::optional<bool>& b) {
    return b ? json(*b) : json("skipped");
  };
  checks["DI_le_Dspan_plus_1"] = opt(rep.checks.di_le_dspan_plus1);
  checks["beta_le_2Dspan_plus_1"] = opt(rep.checks.beta_le_bound);
  checks["extraction_generates_field"] = opt(rep.checks.extraction_generates);
  j["checks"] = checks;
  j["all_ok"] = rep.all_ok();

  json t;
  for (const auto& [k, v] : rep.timings_ms) t[k] = v;
  j["timings_ms"] = t;
  return j;
}

std::string decomposition_table(const AnalysisReport& rep) {
  std::ostringstream os;
  int last = -1;
  for (const auto& row : rep.decomposition) {
    if (row.degree != last) {
      os << "degree " << row.degree << ":\n";
      last = row.degree;
    }
    os << "  < ";
    for (size_t i = 0; i < row.images.size(); ++i)
      os << row.images[i] << (i + 1 < row.images.size() ? ", " : " ");
    os << ">  ~  " << row.label << (row.in_witness ? "   [witness]" : "") << "\n";
  }
  return os.str();
}

std::string report_to_text(const AnalysisReport& rep) {
  std::ostringstream os;
  os << "fixture " << rep.fixture << ": |G| = " << rep.group_order << ", field Q(zeta_"
     << rep.field_order << "), term order " << rep.term_order << "\n\n";
  os << "  D_reg  = " << rep.span.D_reg << "\n";
  os << "  D_span = " << rep.span.D_span << "   (dimension profile:";
  for (size_t v : rep.span.dimension_profile) os << " " << v;
  os << ")\n";
  if (rep.orbit) os << "  D_I    = " << rep.orbit->D_I << "\n";
  if (rep.beta_upper) os << "  beta_field_upper = " << *rep.beta_upper << "\n";
  os << "  bound 2*D_span + 1 = " << rep.bound << "\n\n";

  os << "witness (graded regular representation):\n";
  for (const auto& comp : rep.span.witness.components)
    for (const auto& emb : comp.embeddings) {
      os << "  [" << comp.label << "] degree " << emb.degree << ": ";
      for (size_t i = 0; i < emb.images.size(); ++i)
        os << to_string(emb.images[i]) << (i + 1 < emb.images.size() ? ", " : "");
      os << "\n";
    }
  os << "\n";

  if (rep.orbit) {
    os << "generic orbit ideal: " << rep.orbit->generators.size()
       << " generators, standard monomial count " << rep.orbit->std_monomials.size()
       << ", D_I = " << rep.orbit->D_I << "\n";
    os << "  reduced Groebner basis:\n";
    for (const auto& f : rep.orbit->groebner_basis) os << "    " << to_string(f) << "\n";
    os << "  generators:\n";
    for (const auto& g : rep.orbit->generators) os << "    " << to_string(g.xpoly) << "\n";
    os << "\n";
  }
  if (rep.generators) {
    os << "extracted field generators (all invariant, degree <= "
       << std::max(rep.span.D_span + (rep.orbit ? rep.orbit->D_I : 0), 2 * rep.span.D_span)
       << "):\n";
    for (const auto& it : rep.generators->items)
      os << "    " << to_string(it.poly) << "   [deg " << it.degree << ", " << it.provenance
         << "]\n";
    os << "\n";
  }

  auto line = [&os](const std::string& name, const std::optional<bool>& v) {
    os << "  " << name;
    for (size_t i = name.size(); i < 38; ++i) os << ' ';
    os << (v ? (*v ? "PASS" : "FAIL") : "skipped") << "\n";
  };
  os << "checks:\n";
  line("D_reg <= D_span", rep.checks.dreg_le_dspan);
  line("D_span <= |G| - 1", rep.checks.dspan_le_gminus1);
  line("dimension profile strictly increasing", rep.checks.profile_strict);
  line("witness spans k(V) over K", rep.checks.witness_certified);
  line("D_I <= D_span + 1", rep.checks.di_le_dspan_plus1);
  line("beta_field <= 2*D_span + 1", rep.checks.beta_le_bound);
  line("extracted set generates the field", rep.checks.extraction_generates);
  os << "\nresult: " << (rep.all_ok() ? "all checks passed" : "CHECK FAILURES") << "\n";
  return os.str();
}

}  // namespace invariants
