#include "solqsol/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"

#include "solqsol/config.hpp"
#include "solqsol/corpus.hpp"
#include "solqsol/errors.hpp"
#include "solqsol/iso.hpp"
#include "solqsol/numbers.hpp"
#include "solqsol/report.hpp"
#include "solqsol/spec_parse.hpp"
#include "solqsol/verify.hpp"

namespace solqsol {

namespace {

SubgroupFamily family_for(const Group& g, const std::string& which) {
  if (which == "sol") return solitary_family(g);
  if (which == "qsol") return quotient_solitary_family(g);
  if (which == "normal") return normal_subgroups(g);
  if (which == "char") return characteristic_subgroups(g);
  if (which == "subgroups") return all_subgroups(g);
  throw CLI::ValidationError("--which", "unknown family: " + which);
}

int cmd_show(const std::string& spec, std::ostream& out) {
  Group g = group_from_spec(spec);
  out << dump_report(show_report(g, spec));
  return 0;
}

int cmd_families(const std::string& spec, const std::string& which, const std::string& dot_path,
                 std::ostream& out) {
  Group g = group_from_spec(spec);
  SubgroupFamily family = family_for(g, which);
  FiniteLattice lattice = labelled_lattice(g, family);
  out << dump_report(families_report(g, spec, which, family, lattice));
  if (!dot_path.empty()) {
    std::ofstream f(dot_path);
    if (!f) throw std::runtime_error("cannot write " + dot_path);
    f << lattice.to_dot();
  }
  return 0;
}

int cmd_verify(bool all, const std::string& id, std::ostream& out) {
  std::vector<VerificationResult> results;
  if (all) {
    results = run_all_claims();
  } else {
    results.push_back(run_claim(id));
  }
  bool ok = true;
  for (const auto& r : results)
    if (!outcome_ok(r)) ok = false;
  out << dump_report(verify_report(results, ok));
  return ok ? 0 : 1;
}

std::vector<std::string> census_specs(int max_order, const std::vector<std::string>& families) {
  std::vector<std::string> specs;
  for (const auto& fam : families) {
    if (fam == "cyclic") {
      for (int n = 1; n <= max_order; ++n) specs.push_back("C" + std::to_string(n));
    } else if (fam == "dihedral") {
      for (int order = 6; order <= max_order; order += 2) specs.push_back("D" + std::to_string(order));
    } else if (fam == "quaternion") {
      if (max_order >= 8) specs.push_back("Q8");
    } else if (fam == "semidihedral") {
      for (int order = 16; order <= max_order; order *= 2) specs.push_back("SD" + std::to_string(order));
    } else if (fam == "symmetric") {
      for (int n = 1, fact = 1; n <= 5; ++n) {
        fact *= n;
        if (fact <= max_order) specs.push_back("S" + std::to_string(n));
      }
    } else if (fam == "abelian") {
      for (const auto& s : abelian_specs(max_order)) specs.push_back(s);
    } else {
      throw CLI::ValidationError("--families", "unknown family: " + fam);
    }
  }
  return specs;
}

int cmd_census(int max_order, const std::vector<std::string>& families, std::ostream& out) {
  auto specs = census_specs(max_order, families);
  // Groups are independent; compute in parallel, emit in spec order.
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::string> lines(specs.size());
  std::size_t next = 0;
  while (next < specs.size()) {
    std::size_t batch = std::min<std::size_t>(workers, specs.size() - next);
    std::vector<std::future<std::string>> futures;
    for (std::size_t i = 0; i < batch; ++i)
      futures.push_back(std::async(std::launch::async, [&specs, next, i] {
        Group g = group_from_spec(specs[next + i]);
        return census_line(g).dump();
      }));
    for (std::size_t i = 0; i < batch; ++i) lines[next + i] = futures[i].get();
    next += batch;
  }
  for (const auto& line : lines) out << line << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"solitary and quotient-solitary subgroup lattices of small finite groups"};
  app.require_subcommand(1);

  if (const char* env = std::getenv("SOLQSOL_MAX_ORDER")) {
    int cap = std::atoi(env);
    if (cap > 0) set_max_order(cap);
  }

  std::string spec, which = "qsol", dot_path, claim_id;
  bool verify_all = false;
  int census_max = 24;
  std::vector<std::string> census_families = {"cyclic", "dihedral",    "quaternion",
                                              "semidihedral", "symmetric", "abelian"};

  auto* show = app.add_subcommand("show", "print order, histogram and structural flags");
  show->add_option("spec", spec, "group spec, e.g. D8 or Ab(2:[1,2])")->required();

  auto* families = app.add_subcommand("families", "compute a subgroup family and its lattice");
  families->add_option("spec", spec)->required();
  families
      ->add_option("which", which, "one of sol|qsol|normal|char|subgroups")
      ->check(CLI::IsMember({"sol", "qsol", "normal", "char", "subgroups"}));
  families->add_option("--dot", dot_path, "write the Hasse diagram to this path");

  auto* sol_alias = app.add_subcommand("sol", "shorthand for: families <spec> sol");
  sol_alias->add_option("spec", spec)->required();
  sol_alias->add_option("--dot", dot_path);

  auto* qsol_alias = app.add_subcommand("qsol", "shorthand for: families <spec> qsol");
  qsol_alias->add_option("spec", spec)->required();
  qsol_alias->add_option("--dot", dot_path);

  auto* verify = app.add_subcommand("verify", "run the claim-verification suite");
  auto* opt_all = verify->add_flag("--all", verify_all, "run every claim");
  verify->add_option("--id", claim_id, "run a single claim")->excludes(opt_all);

  auto* census = app.add_subcommand("census", "sweep constructor families, one JSON line per group");
  census->add_option("--max-order", census_max, "largest group order to include");
  census->add_option("--families", census_families, "subset of the constructor families")
      ->delimiter(',');

  std::vector<std::string> argv_like = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("solqsol");
    for (const auto& a : argv_like) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (show->parsed()) return cmd_show(spec, out);
    if (families->parsed()) return cmd_families(spec, which, dot_path, out);
    if (sol_alias->parsed()) return cmd_families(spec, "sol", dot_path, out);
    if (qsol_alias->parsed()) return cmd_families(spec, "qsol", dot_path, out);
    if (verify->parsed()) {
      if (!verify_all && claim_id.empty()) {
        err << "error: verify needs --all or --id CLAIM\n";
        return 2;
      }
      return cmd_verify(verify_all, claim_id, out);
    }
    if (census->parsed()) return cmd_census(census_max, census_families, out);
  } catch (const SpecParseError& e) {
    err << "error: bad group spec: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace solqsol
