#ifndef INVARIANTS_GROUP_SPEC_HPP
#define INVARIANTS_GROUP_SPEC_HPP

#include <optional>
#include <string>

#include "invariants/group.hpp"

namespace invariants {

/// Parsed group description file: the ground field order, the variables,
/// generator matrices, and the irreducible models with their distinguished
/// bases; plus optional run overrides.
struct GroupSpecFile {
  std::string name;
  unsigned cyclotomic_order = 1;
  std::vector<std::string> variables;
  std::vector<std::vector<std::vector<std::string>>> generators;  // rows of scalar literals
  struct Model {
    std::string label;
    size_t degree = 0;
    std::vector<std::vector<std::vector<std::string>>> matrices;  // one per generator
  };
  std::vector<Model> models;

  std::optional<std::string> term_order;
  std::optional<int> max_degree;
  std::optional<size_t> element_cap;
};

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses and schema-validates a JSON group description; errors carry
/// line/column positions or the offending matrix name.
GroupSpecFile parse_spec_file(const std::string& path);
GroupSpecFile parse_spec_text(const std::string& text, const std::string& origin = "<memory>");

/// Builds the validated group and models; throws SpecError when
/// validate_irreducibles rejects the input.
GroupData instantiate(const GroupSpecFile& spec);

}  // namespace invariants

#endif
