#include "solqsol/quotient.hpp"

#include <stdexcept>
#include <string>

namespace solqsol {

QuotientGroup quotient(const Group& g, const Subgroup& n) {
  if (!n.parent().same(g))
    throw std::invalid_argument("subgroup does not belong to " + g.label());
  const int order = g.order();
  for (int a = 0; a < order; ++a) {
    int ai = g.inv(a);
    int bad = -1;
    n.bits().for_each([&](int x) {
      if (bad < 0 && !n.contains(g.mul(g.mul(a, x), ai))) bad = x;
    });
    if (bad >= 0)
      throw std::invalid_argument("subgroup is not normal in " + g.label() +
                                  ": the conjugate of " + std::to_string(bad) + " by " +
                                  std::to_string(a) + " falls outside the subgroup");
  }

  std::vector<int> coset_of(order, -1);
  std::vector<int> reps;
  for (int a = 0; a < order; ++a) {
    if (coset_of[a] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(a);
    n.bits().for_each([&](int x) { coset_of[g.mul(a, x)] = id; });
  }

  const int q = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) table[i * q + j] = coset_of[g.mul(reps[i], reps[j])];

  std::string label = g.label() + "/o" + std::to_string(n.order()) + "#" +
                      std::to_string(n.bits().hash() % 0xFFFF);
  Group qg = Group::from_table(q, std::move(table), std::move(label));
  return QuotientGroup{std::move(qg), g, n, std::move(coset_of)};
}

Subgroup project_subgroup(const QuotientGroup& q, const Subgroup& k) {
  if (!k.parent().same(q.parent))
    throw std::invalid_argument("subgroup does not belong to " + q.parent.label());
  Bitset image(q.group.order());
  k.bits().for_each([&](int x) { image.set(q.coset_of[x]); });
  return Subgroup(q.group, std::move(image));
}

}  // namespace solqsol
