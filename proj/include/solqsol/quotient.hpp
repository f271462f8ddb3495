#pragma once

#include <vector>

#include "solqsol/group.hpp"
#include "solqsol/subgroup.hpp"

namespace solqsol {

// G/N with the canonical projection kept explicit. Cosets are indexed in
// ascending order of their least member, so tables are reproducible.
struct QuotientGroup {
  Group group;
  Group parent;
  Subgroup kernel;
  std::vector<int> coset_of;  // parent element -> coset index
};

// Throws std::invalid_argument identifying a violating conjugation when N is
// not normal.
QuotientGroup quotient(const Group& g, const Subgroup& n);

// Image of a parent subgroup under the projection.
Subgroup project_subgroup(const QuotientGroup& q, const Subgroup& k);

}  // namespace solqsol
