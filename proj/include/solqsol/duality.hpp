#pragma once

#include <utility>
#include <vector>

#include "solqsol/group.hpp"
#include "solqsol/solitary.hpp"
#include "solqsol/subgroup.hpp"

namespace solqsol {

// A finite abelian group given by prime-power cyclic factors, together with
// its Cayley-table realization (the make_abelian encoding), so subgroups of
// the realization plug straight into the pairing.
class AbelianPresentation {
 public:
  explicit AbelianPresentation(std::vector<std::pair<int, int>> factors);

  const std::vector<std::pair<int, int>>& factors() const { return factors_; }
  const Group& realization() const { return realization_; }
  int order() const { return realization_.order(); }
  int exponent() const { return exponent_; }

  std::vector<int> decode(int index) const { return abelian_decode(factors_, index); }
  int encode(const std::vector<int>& tuple) const { return abelian_encode(factors_, tuple); }

 private:
  std::vector<std::pair<int, int>> factors_;  // sorted by (prime, exponent)
  Group realization_;
  int exponent_;
};

// Value of the diagonal pairing sum x_i y_i / p_i^{a_i} mod 1, reduced.
struct PairingValue {
  long long num = 0;
  long long den = 1;
  bool zero() const { return num == 0; }
  bool operator==(const PairingValue&) const = default;
};

PairingValue pairing(const AbelianPresentation& g, int x, int y);

// Annihilator duality: delta(H) = { g : <g, h> = 0 for all h in H }.
// Order-reversing involution with |delta(H)| * |H| = |G|.
Subgroup delta(const AbelianPresentation& g, const Subgroup& h);

// Checks that delta maps the quotient-solitary family onto the solitary
// family, fixes it pointwise under delta^2, and that the two lattices are
// anti-isomorphic. Defined for abelian p-groups.
VerificationResult verify_prop_3_1(const AbelianPresentation& g);

// Checks H ~ G/delta(H) and delta(H) ~ G/H for every subgroup.
VerificationResult verify_eq_4(const AbelianPresentation& g);

}  // namespace solqsol
