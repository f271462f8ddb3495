#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "solqsol/cli.hpp"
#include "solqsol/errors.hpp"
#include "solqsol/iso.hpp"
#include "solqsol/report.hpp"
#include "solqsol/solitary.hpp"
#include "solqsol/spec_parse.hpp"
#include "solqsol/verify.hpp"

namespace py = pybind11;
using namespace solqsol;

namespace {

SubgroupFamily named_family(const Group& g, const std::string& which) {
  if (which == "sol") return solitary_family(g);
  if (which == "qsol") return quotient_solitary_family(g);
  if (which == "normal") return normal_subgroups(g);
  if (which == "char") return characteristic_subgroups(g);
  if (which == "subgroups") return all_subgroups(g);
  throw std::invalid_argument("unknown family: " + which +
                              " (expected sol|qsol|normal|char|subgroups)");
}

std::string show_json(const std::string& spec) {
  return dump_report(show_report(group_from_spec(spec), spec));
}

std::string families_json(const std::string& spec, const std::string& which) {
  Group g = group_from_spec(spec);
  SubgroupFamily family = named_family(g, which);
  return dump_report(families_report(g, spec, which, family, labelled_lattice(g, family)));
}

std::string lattice_dot(const std::string& spec, const std::string& which) {
  Group g = group_from_spec(spec);
  return labelled_lattice(g, named_family(g, which)).to_dot();
}

std::string verify_json(const std::string& id) {
  std::vector<VerificationResult> results{run_claim(id)};
  return dump_report(verify_report(results, outcome_ok(results[0])));
}

std::string verify_all_json() {
  auto results = run_all_claims();
  bool ok = true;
  for (const auto& r : results)
    if (!outcome_ok(r)) ok = false;
  return dump_report(verify_report(results, ok));
}

std::string census_jsonl(int max_order, const std::vector<std::string>& families) {
  std::vector<std::string> args{"census", "--max-order", std::to_string(max_order)};
  if (!families.empty()) {
    args.push_back("--families");
    std::string joined;
    for (const auto& f : families) {
      if (!joined.empty()) joined += ",";
      joined += f;
    }
    args.push_back(joined);
  }
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  if (code != 0) throw std::runtime_error(err.str());
  return out.str();
}

std::vector<std::string> claim_ids() {
  std::vector<std::string> out;
  for (const auto& c : claim_catalog()) out.push_back(c.id);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "solitary and quotient-solitary subgroup lattices of small finite groups";

  py::register_exception<SpecParseError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapError", PyExc_RuntimeError);

  m.def("show_json", &show_json, py::arg("spec"),
        "JSON description of the group built from a spec string (e.g. 'D8').");
  m.def("families_json", &families_json, py::arg("spec"), py::arg("which") = "qsol",
        "JSON report for one of sol|qsol|normal|char|subgroups.");
  m.def("lattice_dot", &lattice_dot, py::arg("spec"), py::arg("which") = "qsol",
        "Graphviz DOT text of the family's Hasse diagram.");
  m.def("verify_json", &verify_json, py::arg("claim_id"), "Run one verification claim.");
  m.def("verify_all_json", &verify_all_json, "Run the whole verification suite.");
  m.def("census_jsonl", &census_jsonl, py::arg("max_order") = 24,
        py::arg("families") = std::vector<std::string>{},
        "JSON-lines census over the constructor families.");
  m.def("claim_ids", &claim_ids, "All claim ids known to the verification suite.");
  m.def("group_order", [](const std::string& spec) { return group_from_spec(spec).order(); },
        py::arg("spec"));
}
