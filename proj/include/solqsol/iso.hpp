#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "solqsol/group.hpp"
#include "solqsol/subgroup.hpp"

namespace solqsol {

// An explicit bijection witnessing source ~ target.
struct IsoMap {
  Group source;
  Group target;
  std::vector<int> images;  // images[g] in the target, per source element g
};

// Bijectivity plus the homomorphism law on all pairs.
bool verify_isomorphism(const IsoMap& m);

// Greedy minimal generating sequence: repeatedly add the element that
// enlarges the generated subgroup most, ties broken by lowest index.
const std::vector<int>& generating_sequence(const Group& g);

// Fingerprint prescreen, then backtracking over images of the generating
// sequence; candidates filtered by element order and centralizer size.
std::optional<IsoMap> are_isomorphic(const Group& g, const Group& h);

// The full automorphism group; throws CapExceeded when the order exceeds
// automorphism_order_cap().
const std::vector<std::vector<int>>& automorphism_images(const Group& g);
std::vector<IsoMap> automorphisms(const Group& g);

// Enumeration with a count cutoff, no order cap; nullopt when the group has
// more than max_count automorphisms.
std::optional<std::vector<std::vector<int>>> automorphism_images_limited(const Group& g,
                                                                         std::size_t max_count);

bool is_characteristic(const Group& g, const Subgroup& h);
SubgroupFamily characteristic_subgroups(const Group& g);

// Cayley table of the subgroup re-indexed to [0, |H|) together with the
// inclusion map back into the parent.
std::pair<Group, std::vector<int>> subgroup_abstract_group(const Group& g, const Subgroup& h);

}  // namespace solqsol
