#pragma once

#include <string>
#include <vector>

#include "solqsol/group.hpp"

namespace solqsol {

// An element subset of a parent group, closed under product and inverse.
// Equality and ordering are by bitset; families keep members in the canonical
// (order, member-sequence) ascending order.
class Subgroup {
 public:
  Subgroup(Group parent, Bitset members)
      : parent_(std::move(parent)), members_(std::move(members)), order_(members_.count()) {}

  const Group& parent() const { return parent_; }
  const Bitset& bits() const { return members_; }
  int order() const { return order_; }
  bool contains(int g) const { return members_.test(g); }
  std::vector<int> elements() const { return members_.to_vector(); }

  bool operator==(const Subgroup& o) const { return members_ == o.members_; }

  // Closure under product, contains identity.
  bool is_valid() const;

 private:
  Group parent_;
  Bitset members_;
  int order_;
};

class SubgroupFamily {
 public:
  SubgroupFamily(Group parent, std::vector<Bitset> members);

  const Group& parent() const { return parent_; }
  int size() const { return static_cast<int>(members_.size()); }
  const Subgroup& operator[](int i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const Bitset& bits) const;
  int index_of(const Bitset& bits) const;  // -1 if absent

  bool operator==(const SubgroupFamily& o) const;

 private:
  Group parent_;
  std::vector<Subgroup> members_;
};

Subgroup trivial_subgroup(const Group& g);
Subgroup full_subgroup(const Group& g);

// Product-closure of the seeded element set; empty seed gives the trivial
// subgroup.
Bitset closure_bits(const Group& g, Bitset seed);
Subgroup closure(const Group& g, const std::vector<int>& seed);

// Every subgroup, enumerated by joining cyclic subgroups to a fixpoint.
// Throws CapExceeded above the configured order cap.
SubgroupFamily all_subgroups(const Group& g);
const std::vector<Bitset>& all_subgroup_bits(const Group& g);

bool is_normal(const Group& g, const Subgroup& h);
SubgroupFamily normal_subgroups(const Group& g);
const std::vector<Bitset>& normal_subgroup_bits(const Group& g);

Subgroup center(const Group& g);
Subgroup derived_subgroup(const Group& g);

SubgroupFamily maximal_subgroups(const Group& g);

// Intersection of all maximal subgroups (the whole group when there is none).
Subgroup frattini(const Group& g);

// G = Phi_0 > Phi_1 > ... > 1, each step computed inside the abstract group
// of the previous term and mapped back through the inclusion.
std::vector<Subgroup> frattini_series(const Group& g);

// Omega_n = subgroup generated by elements of order dividing p^n; defined for
// abelian p-groups only. The series ascends 1 = Omega_0 <= ... <= G.
Subgroup omega(const Group& g, int n);
std::vector<Subgroup> omega_series(const Group& g);

bool is_abelian_p_group(const Group& g, int* prime = nullptr);

// Primary decomposition (prime, exponent) of an abelian group, sorted by
// (prime, exponent); read off element-order counts, no search involved.
std::vector<std::pair<int, int>> abelian_invariants(const Group& g);

// One subgroup per prime, elements of p-power order; requires a nilpotent
// group and otherwise throws naming a non-normal Sylow subgroup.
std::vector<Subgroup> sylow_decomposition(const Group& g);

bool is_nilpotent(const Group& g);
bool is_cyclic(const Group& g);
bool is_elementary_abelian(const Group& g);
bool is_perfect(const Group& g);
bool is_hamiltonian(const Group& g);

}  // namespace solqsol
