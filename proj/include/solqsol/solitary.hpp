#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "solqsol/lattice.hpp"
#include "solqsol/subgroup.hpp"

namespace solqsol {

enum class VerifyStatus { verified, refuted, probe };

std::string to_string(VerifyStatus s);

// Outcome of one claim check. Refutations always carry a machine-checkable
// witness; probes report structured observations without asserting.
struct VerificationResult {
  std::string claim_id;
  VerifyStatus status = VerifyStatus::verified;
  nlohmann::json witness;
  std::string narrative;
};

// Subgroups with no other isomorphic copy in the group.
SubgroupFamily solitary_family(const Group& g);
const std::vector<Bitset>& solitary_bits(const Group& g);

// Normal subgroups whose quotient is not isomorphic to any other normal
// subgroup's quotient.
SubgroupFamily quotient_solitary_family(const Group& g);
const std::vector<Bitset>& quotient_solitary_bits(const Group& g);

bool is_quotient_solitary_free(const Group& g);

// Closed-form predictors for dihedral groups: all subgroups of the rotation
// subgroup (proper ones only when n is even) plus the whole group.
SubgroupFamily predicted_qsol_dihedral(int order);

// For abelian p-groups: the Frattini series (descending) predicts the
// quotient-solitary family; the omega series (ascending) predicts the
// solitary family.
std::vector<Subgroup> predicted_qsol_abelian_p(int p, const std::vector<int>& partition);
std::vector<Subgroup> predicted_sol_abelian_p(int p, const std::vector<int>& partition);

// Searches, in canonical order, for a proper normal H and a quotient-solitary
// K whose image in G/H is not quotient-solitary there.
std::optional<std::pair<Subgroup, Subgroup>> find_prop_2_3_counterexample(const Group& g);

struct SolitaryReport {
  std::string label;
  SubgroupFamily sol;
  SubgroupFamily qsol;
  FiniteLattice sol_lattice;
  FiniteLattice qsol_lattice;
  bool quotient_solitary_free = false;
  bool qsol_equals_normal = false;
  bool sol_equals_qsol = false;
};

SolitaryReport solitary_report(const Group& g);

}  // namespace solqsol
