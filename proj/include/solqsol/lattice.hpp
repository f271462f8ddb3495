#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "solqsol/subgroup.hpp"

namespace solqsol {

struct LatticeNode {
  std::string label;
  int order = 1;             // subgroup order / integer rank where meaningful
  std::vector<int> members;  // subgroup members, empty for abstract nodes
};

// A finite bounded lattice given by its order relation. Construction
// validates the partial order, unique bottom/top, and that every pair has a
// unique meet and join, and computes the cover (Hasse) relation.
class FiniteLattice {
 public:
  // leq_rows[i].test(j) means node i <= node j.
  static FiniteLattice from_leq(std::vector<Bitset> leq_rows, std::vector<LatticeNode> payload);

  // Order = set inclusion. The family must contain the trivial subgroup and
  // the whole group. Meets must be literal intersections when those lie in
  // the family, otherwise the unique greatest lower bound.
  static FiniteLattice from_subgroup_family(
      const SubgroupFamily& family,
      const std::function<std::string(const Subgroup&)>& labeller = {});

  int size() const { return size_; }
  bool leq(int a, int b) const { return up_rows_[a].test(b); }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const LatticeNode& node(int i) const { return payload_[i]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  int meet(int a, int b) const;
  int join(int a, int b) const;

  bool is_chain() const;
  int chain_length() const;  // cover edges; throws on non-chains

  // Brute-force checks over all triples; throw for lattices larger than the
  // law-check cap (600 nodes).
  bool is_modular() const;
  bool is_distributive() const;

  FiniteLattice dual() const;

  std::string to_dot() const;
  nlohmann::json to_json() const;

 private:
  void init();  // validates and fills covers/bounds/tables

  int size_ = 0;
  int bottom_ = 0, top_ = 0;
  std::vector<Bitset> up_rows_;    // up_rows_[i] = { j : i <= j }
  std::vector<Bitset> down_rows_;  // down_rows_[i] = { j : j <= i }
  std::vector<std::pair<int, int>> covers_;
  std::vector<LatticeNode> payload_;
  std::vector<int> meet_table_, join_table_;  // filled when size <= law cap
};

bool lattice_isomorphic(const FiniteLattice& a, const FiniteLattice& b);
bool lattice_anti_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

// Componentwise order on pairs; node (i, j) gets index i * b.size() + j.
FiniteLattice product_lattice(const FiniteLattice& a, const FiniteLattice& b);

// Divisibility order; the set must contain 1 and be closed under divisors.
FiniteLattice divisor_lattice(const std::set<int>& orders);

// Total order with the given number of cover edges.
FiniteLattice chain_lattice(int edges);

}  // namespace solqsol
