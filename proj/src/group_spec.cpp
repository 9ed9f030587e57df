#include "invariants/group_spec.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "invariants/scalar_io.hpp"

namespace invariants {

namespace {

using nlohmann::json;

[[noreturn]] void fail_at(const std::string& origin, const std::string& what) {
  throw SpecError(origin + ": " + what);
}

std::pair<int, int> line_col(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::vector<std::vector<std::string>> parse_matrix(const json& j, const std::string& origin,
                                                   const std::string& name) {
  if (!j.is_array() || j.empty()) fail_at(origin, name + " must be a non-empty array of rows");
  std::vector<std::vector<std::string>> rows;
  size_t width = 0;
  for (const auto& row : j) {
    if (!row.is_array() || row.empty()) fail_at(origin, name + " rows must be non-empty arrays");
    std::vector<std::string> r;
    for (const auto& cell : row) {
      if (!cell.is_string()) fail_at(origin, name + " entries must be scalar literal strings");
      r.push_back(cell.get<std::string>());
    }
    if (width == 0) width = r.size();
    if (r.size() != width) fail_at(origin, name + " rows have inconsistent lengths");
    rows.push_back(std::move(r));
  }
  if (rows.size() != width)
    fail_at(origin, name + " is " + std::to_string(rows.size()) + "x" + std::to_string(width) +
                        ", not square");
  return rows;
}

}  // namespace

GroupSpecFile parse_spec_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte);
    fail_at(origin, "syntax error at line " + std::to_string(line) + ", column " +
                        std::to_string(col) + ": " + e.what());
  }
  GroupSpecFile spec;
  spec.name = j.value("name", origin);
  if (!j.contains("cyclotomic_order") || !j["cyclotomic_order"].is_number_unsigned() ||
      j["cyclotomic_order"].get<unsigned>() == 0)
    fail_at(origin, "cyclotomic_order must be a positive integer");
  spec.cyclotomic_order = j["cyclotomic_order"].get<unsigned>();
  if (!j.contains("variables") || !j["variables"].is_array() || j["variables"].empty())
    fail_at(origin, "variables must be a non-empty array of names");
  for (const auto& v : j["variables"]) {
    std::string name = v.get<std::string>();
    if (name == "z") fail_at(origin, "variable name 'z' is reserved for the root of unity");
    spec.variables.push_back(std::move(name));
  }
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
    fail_at(origin, "generators must be a non-empty array of matrices");
  size_t gi = 0;
  for (const auto& g : j["generators"]) {
    auto m = parse_matrix(g, origin, "generator #" + std::to_string(gi + 1));
    if (m.size() != spec.variables.size())
      fail_at(origin, "generator #" + std::to_string(gi + 1) + " is " + std::to_string(m.size()) +
                          "-dimensional but there are " + std::to_string(spec.variables.size()) +
                          " variables");
    spec.generators.push_back(std::move(m));
    ++gi;
  }
  if (!j.contains("irreducibles") || !j["irreducibles"].is_array() || j["irreducibles"].empty())
    fail_at(origin, "irreducibles must be a non-empty array of models");
  for (const auto& mj : j["irreducibles"]) {
    GroupSpecFile::Model model;
    if (!mj.contains("label") || !mj["label"].is_string())
      fail_at(origin, "irreducible model without a string label");
    model.label = mj["label"].get<std::string>();
    for (const auto& other : spec.models)
      if (other.label == model.label) fail_at(origin, "duplicate irreducible label " + model.label);
    if (!mj.contains("degree") || !mj["degree"].is_number_unsigned())
      fail_at(origin, "model " + model.label + ": degree must be a non-negative integer");
    model.degree = mj["degree"].get<size_t>();
    if (!mj.contains("matrices") || !mj["matrices"].is_array() ||
        mj["matrices"].size() != spec.generators.size())
      fail_at(origin, "model " + model.label + " needs one matrix per generator");
    size_t k = 0;
    for (const auto& mat : mj["matrices"]) {
      auto rows = parse_matrix(mat, origin,
                               "model " + model.label + " matrix #" + std::to_string(k + 1));
      if (rows.size() != model.degree)
        fail_at(origin, "model " + model.label + " matrix #" + std::to_string(k + 1) +
                            " does not match the declared degree " + std::to_string(model.degree));
      model.matrices.push_back(std::move(rows));
      ++k;
    }
    spec.models.push_back(std::move(model));
  }
  if (j.contains("options")) {
    const auto& o = j["options"];
    if (o.contains("term_order")) spec.term_order = o["term_order"].get<std::string>();
    if (o.contains("max_degree")) spec.max_degree = o["max_degree"].get<int>();
    if (o.contains("element_cap")) spec.element_cap = o["element_cap"].get<size_t>();
  }
  return spec;
}

GroupSpecFile parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str(), path);
}

GroupData instantiate(const GroupSpecFile& spec) {
  TermOrder order = TermOrder::grevlex();
  if (spec.term_order) order = TermOrder::from_name(*spec.term_order);
  RingCtxPtr ring = make_ring(spec.variables, order);

  auto to_matrix = [&](const std::vector<std::vector<std::string>>& rows,
                       const std::string& what) {
    Matrix<Cyclotomic> m(rows.size(), rows.size(), Cyclotomic(0));
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < rows.size(); ++j) {
        try {
          m.at(i, j) = parse_scalar(rows[i][j], spec.cyclotomic_order);
        } catch (const std::invalid_argument& e) {
          throw SpecError(spec.name + ": " + what + " entry (" + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + "): " + e.what());
        }
      }
    return m;
  };

  std::vector<Matrix<Cyclotomic>> gens;
  for (size_t k = 0; k < spec.generators.size(); ++k)
    gens.push_back(to_matrix(spec.generators[k], "generator #" + std::to_string(k + 1)));

  GroupData gd;
  gd.group = enumerate_group(gens, ring, spec.cyclotomic_order,
                             spec.element_cap.value_or(2000));
  for (const auto& model : spec.models) {
    std::vector<Matrix<Cyclotomic>> mats;
    for (size_t k = 0; k < model.matrices.size(); ++k)
      mats.push_back(to_matrix(model.matrices[k], "model " + model.label));
    gd.models.push_back(extend_model(gd.group, model.label, mats));
  }
  ValidationReport rep = validate_irreducibles(gd.group, gd.models);
  if (!rep.ok) throw SpecError(spec.name + ": irreducible models rejected: " + rep.first_violation);
  return gd;
}

}  // namespace invariants
