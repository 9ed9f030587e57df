#ifndef INVARIANTS_ANALYSIS_HPP
#define INVARIANTS_ANALYSIS_HPP

#include <json.hpp>

#include "invariants/field_generators.hpp"
#include "invariants/group_spec.hpp"

namespace invariants {

struct RunOptions {
  bool fast_rank = false;
  std::optional<int> decompose_max_degree;
  bool with_orbit_ideal = true;
  bool with_beta = true;
  unsigned rank_seed = 0x5eedu;
};

/// Everything the pipeline produced for one fixture, with the inequality
/// verdicts. Optional stages record whether they were skipped.
struct AnalysisReport {
  std::string fixture;
  size_t group_order = 0;
  unsigned field_order = 1;
  std::string term_order;

  SpanReport span;

  struct DecompRow {
    int degree = 0;
    std::string label;
    std::vector<std::string> images;
    bool in_witness = false;
  };
  std::vector<DecompRow> decomposition;

  std::optional<OrbitIdealReport> orbit;
  std::optional<GeneratorSet> generators;
  bool extraction_verified = false;
  std::optional<int> beta_upper;
  int bound = 0;  // 2 D_span + 1

  struct Checks {
    bool dreg_le_dspan = false;
    bool dspan_le_gminus1 = false;
    bool profile_strict = false;
    bool witness_certified = false;
    std::optional<bool> di_le_dspan_plus1;   // nullopt when the stage was skipped
    std::optional<bool> beta_le_bound;
    std::optional<bool> extraction_generates;
  } checks;

  std::vector<std::pair<std::string, double>> timings_ms;

  bool all_ok() const;
};

AnalysisReport analyze(const GroupData& gd, const RunOptions& opts,
                       const std::string& fixture_name);

nlohmann::ordered_json report_to_json(const AnalysisReport& rep);
std::string report_to_text(const AnalysisReport& rep);
std::string decomposition_table(const AnalysisReport& rep);

}  // namespace invariants

#endif
