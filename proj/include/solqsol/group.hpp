#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "solqsol/bitset.hpp"

namespace solqsol {

using OrderHistogram = std::map<int, int>;

// Isomorphism-invariant summary used as a prescreen; equality is necessary
// but not sufficient for isomorphism.
struct Fingerprint {
  int order = 1;
  bool abelian = true;
  int exponent = 1;
  std::vector<std::pair<int, int>> histogram;  // (element order, count), ascending
  int center_order = 1;
  int derived_order = 1;
  std::vector<int> class_sizes;  // conjugacy class sizes, ascending

  auto operator<=>(const Fingerprint&) const = default;
};

// Set-once caches attached to a group; filled lazily by the enumeration and
// classification routines. Guarded by a mutex so groups can be shared across
// threads.
struct GroupMemo {
  std::mutex mu;
  std::optional<std::vector<Bitset>> subgroups;
  std::optional<std::vector<Bitset>> normals;
  std::optional<std::vector<Bitset>> solitary;
  std::optional<std::vector<Bitset>> quotient_solitary;
  std::optional<Fingerprint> fingerprint;
  std::optional<std::vector<std::vector<int>>> classes;
  std::optional<std::vector<int>> generating_sequence;
  std::optional<std::vector<std::vector<int>>> automorphism_images;
};

// A finite group as an immutable dense Cayley table over element indices
// [0, order). Copies share the underlying table; all operations are pure.
class Group {
 public:
  // Validates index range, two-sided identity and inverses; checks
  // associativity on all triples when order <= 64 (constructors are trusted
  // above that, and validate_group() always checks everything).
  static Group from_table(int order, std::vector<int> table, std::string label);

  int order() const { return d_->n; }
  int mul(int a, int b) const { return d_->table[a * d_->n + b]; }
  int inv(int a) const { return d_->inverses[a]; }
  int identity() const { return d_->identity; }
  int element_order(int g) const { return d_->element_orders[g]; }
  bool abelian() const { return d_->abelian; }
  const std::string& label() const { return d_->label; }
  const std::vector<int>& table() const { return d_->table; }

  bool same(const Group& o) const { return d_ == o.d_; }

  GroupMemo& memo() const { return d_->memo; }

 private:
  struct Data {
    int n = 0;
    int identity = 0;
    bool abelian = true;
    std::vector<int> table;
    std::vector<int> inverses;
    std::vector<int> element_orders;
    std::string label;
    mutable GroupMemo memo;
  };
  std::shared_ptr<const Data> d_;
};

// Standard families. Dihedral and semidihedral groups are named by ORDER
// (D8 has 8 elements); see README, the literature also uses index-based names.
Group make_cyclic(int n);
Group make_dihedral(int order);          // order = 2n, n >= 3
Group make_quaternion();                 // Q8
Group make_semidihedral(int order);      // order = 2^n, n >= 4
Group make_abelian(std::vector<std::pair<int, int>> factors);  // (prime, exponent)
Group make_symmetric(int n);             // 1 <= n <= 5
Group direct_product(const Group& g, const Group& h);

// Full invariant check: index range, identity, inverses, associativity on all
// order^3 triples. Throws std::logic_error naming the first violation.
void validate_group(const Group& g);

OrderHistogram order_histogram(const Group& g);
int exponent(const Group& g);

// Conjugation orbits, each sorted ascending; ordered by least member.
const std::vector<std::vector<int>>& conjugacy_classes(const Group& g);

const Fingerprint& fingerprint(const Group& g);

// Decodes an element of make_abelian output to its residue tuple (factors in
// the group's canonical sorted order) and back.
std::vector<int> abelian_decode(const std::vector<std::pair<int, int>>& factors, int index);
int abelian_encode(const std::vector<std::pair<int, int>>& factors, const std::vector<int>& tuple);

}  // namespace solqsol
