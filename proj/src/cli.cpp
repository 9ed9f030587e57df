#include "invariants/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "invariants/analysis.hpp"
#include "invariants/poly_io.hpp"

namespace invariants {

namespace {

struct CommonArgs {
  std::string spec_path;
  std::string output_path;
  std::string term_order;
  bool json = false;
  bool fast_rank = false;
  bool serial = false;
  int max_degree = -1;
  size_t element_cap = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_spec = true) {
  if (with_spec)
    cmd->add_option("spec", args.spec_path, "group description file (JSON)")->required();
  cmd->add_option("--output", args.output_path, "write the report to a file instead of stdout");
  cmd->add_option("--term-order", args.term_order, "term order: grevlex, grlex or lex")
      ->check(CLI::IsMember({"grevlex", "grlex", "lex"}));
  cmd->add_flag("--json", args.json, "emit the machine-readable report");
  cmd->add_flag("--fast-rank", args.fast_rank,
                "accept full-rank random evaluations as independence proofs");
  cmd->add_flag("--serial", args.serial, "disable the OpenMP kernels");
  cmd->add_option("--max-degree", args.max_degree, "degree cap for the decomposition table");
  cmd->add_option("--element-cap", args.element_cap, "group enumeration element cap");
}

GroupData load(const CommonArgs& args) {
  GroupSpecFile spec = parse_spec_file(args.spec_path);
  if (!args.term_order.empty()) spec.term_order = args.term_order;
  if (args.element_cap > 0) spec.element_cap = args.element_cap;
  if (args.max_degree >= 0) spec.max_degree = args.max_degree;
  return instantiate(spec);
}

void emit(const CommonArgs& args, const std::string& text) {
  if (args.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(args.output_path);
  if (!out) throw std::runtime_error("cannot write " + args.output_path);
  out << text;
}

std::string fixture_name(const CommonArgs& args) {
  auto slash = args.spec_path.find_last_of('/');
  std::string base =
      slash == std::string::npos ? args.spec_path : args.spec_path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

int run_pipeline(const CommonArgs& args, const RunOptions& opts) {
  if (args.serial) par::set_default_mode(par::Mode::serial);
  GroupData gd = load(args);
  RunOptions o = opts;
  o.fast_rank = args.fast_rank;
  if (args.max_degree >= 0) o.decompose_max_degree = args.max_degree;
  AnalysisReport rep = analyze(gd, o, fixture_name(args));
  emit(args, args.json ? report_to_json(rep).dump(2) + "\n" : report_to_text(rep));
  return rep.all_ok() ? 0 : 1;
}

int run_gb(const CommonArgs& args) {
  std::ifstream in(args.spec_path);
  if (!in) throw std::runtime_error("cannot open " + args.spec_path);
  nlohmann::json j = nlohmann::json::parse(in);
  unsigned m = j.at("cyclotomic_order").get<unsigned>();
  std::vector<std::string> vars = j.at("variables").get<std::vector<std::string>>();
  TermOrder order = TermOrder::from_name(
      !args.term_order.empty() ? args.term_order : j.value("term_order", "grevlex"));
  RingCtxPtr ring = make_ring(vars, order);
  std::vector<Poly> gens;
  for (const auto& s : j.at("polynomials"))
    gens.push_back(parse_poly(s.get<std::string>(), ring, m));
  auto gb = buchberger(gens, order);
  auto sm = standard_monomials(gb, order);

  if (args.json) {
    nlohmann::ordered_json out;
    out["term_order"] = order.name();
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (const auto& f : gb) basis.push_back(to_string(f));
    out["groebner_basis"] = basis;
    if (sm) {
      nlohmann::ordered_json mons = nlohmann::ordered_json::array();
      for (const auto& mm : *sm) mons.push_back(to_string(Poly::term(ring, mm, Cyclotomic(1))));
      out["standard_monomials"] = mons;
    } else {
      out["standard_monomials"] = "infinite";
    }
    emit(args, out.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "reduced Groebner basis (" << order.name() << "):\n";
    for (const auto& f : gb) os << "  " << to_string(f) << "\n";
    if (sm) {
      os << "standard monomials (" << sm->size() << "):";
      for (const auto& mm : *sm) os << " " << to_string(Poly::term(ring, mm, Cyclotomic(1)));
      os << "\n";
    } else {
      os << "standard monomials: infinite\n";
    }
    emit(args, os.str());
  }
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  CLI::App app{"exact invariant-field degree bounds for finite matrix groups"};
  app.require_subcommand(1);

  CommonArgs a_dspan, a_dreg, a_dec, a_orbit, a_gens, a_verify, a_gb;
  bool verify_no_orbit = false, verify_no_beta = false;

  CLI::App* c_dspan = app.add_subcommand("dspan", "spanning degree and witness");
  add_common(c_dspan, a_dspan);
  CLI::App* c_dreg = app.add_subcommand("dreg", "first regular representation degree");
  add_common(c_dreg, a_dreg);
  CLI::App* c_dec = app.add_subcommand("decompose", "isotypic decomposition table");
  add_common(c_dec, a_dec);
  CLI::App* c_orbit = app.add_subcommand("orbit-ideal", "generic orbit ideal and D_I");
  add_common(c_orbit, a_orbit);
  CLI::App* c_gens = app.add_subcommand("generators", "low-degree invariant field generators");
  add_common(c_gens, a_gens);
  CLI::App* c_verify = app.add_subcommand("verify", "full pipeline and inequality checks");
  add_common(c_verify, a_verify);
  c_verify->add_flag("--no-orbit-ideal", verify_no_orbit,
                     "skip the orbit ideal (and the extraction it feeds)");
  c_verify->add_flag("--no-beta", verify_no_beta, "skip the beta_field upper-bound scan");
  CLI::App* c_gb = app.add_subcommand("gb", "raw Groebner utility on a polynomial list");
  add_common(c_gb, a_gb);

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (c_dspan->parsed()) {
      RunOptions o;
      o.with_orbit_ideal = false;
      o.with_beta = false;
      return run_pipeline(a_dspan, o);
    }
    if (c_dreg->parsed()) {
      if (a_dreg.serial) par::set_default_mode(par::Mode::serial);
      GroupData gd = load(a_dreg);
      int dreg = compute_Dreg(gd);
      if (a_dreg.json) {
        nlohmann::ordered_json out;
        out["fixture"] = fixture_name(a_dreg);
        out["D_reg"] = dreg;
        emit(a_dreg, out.dump(2) + "\n");
      } else {
        emit(a_dreg, "D_reg = " + std::to_string(dreg) + "\n");
      }
      return 0;
    }
    if (c_dec->parsed()) {
      RunOptions o;
      o.with_orbit_ideal = false;
      o.with_beta = false;
      if (a_dec.serial) par::set_default_mode(par::Mode::serial);
      GroupData gd = load(a_dec);
      o.fast_rank = a_dec.fast_rank;
      if (a_dec.max_degree >= 0) o.decompose_max_degree = a_dec.max_degree;
      AnalysisReport rep = analyze(gd, o, fixture_name(a_dec));
      emit(a_dec, a_dec.json ? report_to_json(rep).dump(2) + "\n" : decomposition_table(rep));
      return rep.all_ok() ? 0 : 1;
    }
    if (c_orbit->parsed()) {
      RunOptions o;
      o.with_beta = false;
      return run_pipeline(a_orbit, o);
    }
    if (c_gens->parsed()) {
      RunOptions o;
      o.with_beta = false;
      return run_pipeline(a_gens, o);
    }
    if (c_verify->parsed()) {
      RunOptions o;
      o.with_orbit_ideal = !verify_no_orbit;
      o.with_beta = !verify_no_beta;
      return run_pipeline(a_verify, o);
    }
    if (c_gb->parsed()) return run_gb(a_gb);
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GroupTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}

}  // namespace invariants
