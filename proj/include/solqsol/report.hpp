#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "solqsol/lattice.hpp"
#include "solqsol/solitary.hpp"
#include "solqsol/subgroup.hpp"

namespace solqsol {

inline constexpr int kReportSchemaVersion = 1;

// Best-effort isomorphism-type label in the constructor grammar ("C2xC4",
// "D8", "Q8xC3"); falls back to "order<n>#fp<hash>" for unmatched types.
std::string abstract_type_label(const Group& g);
std::string subgroup_type_label(const Group& parent, const Subgroup& h);

nlohmann::json group_descriptor(const Group& g);
nlohmann::json family_json(const Group& g, const SubgroupFamily& family);
nlohmann::json lattice_summary(const FiniteLattice& l);

nlohmann::json show_report(const Group& g, const std::string& spec);
nlohmann::json families_report(const Group& g, const std::string& spec, const std::string& which,
                               const SubgroupFamily& family, const FiniteLattice& lattice);
nlohmann::json verify_report(const std::vector<VerificationResult>& results, bool ok);
nlohmann::json census_line(const Group& g);

// Lattice with type-annotated node labels, for DOT output.
FiniteLattice labelled_lattice(const Group& g, const SubgroupFamily& family);

std::string dump_report(const nlohmann::json& doc);

}  // namespace solqsol
