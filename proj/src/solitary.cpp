#include "solqsol/solitary.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "solqsol/iso.hpp"
#include "solqsol/numbers.hpp"
#include "solqsol/quotient.hpp"

namespace solqsol {

std::string to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::verified: return "verified";
    case VerifyStatus::refuted: return "refuted";
    case VerifyStatus::probe: return "probe";
  }
  return "unknown";
}

namespace {

// Marks which of the given groups are alone in their isomorphism class.
// Fingerprint buckets first; pairwise witness search only within buckets.
std::vector<bool> isomorphism_singletons(const std::vector<Group>& items) {
  std::map<Fingerprint, std::vector<int>> buckets;
  for (int i = 0; i < static_cast<int>(items.size()); ++i)
    buckets[fingerprint(items[i])].push_back(i);

  std::vector<bool> alone(items.size(), false);
  for (auto& [fp, idxs] : buckets) {
    if (idxs.size() == 1) {
      alone[idxs[0]] = true;
      continue;
    }
    std::vector<int> reps;
    std::vector<int> class_of(idxs.size(), -1);
    std::vector<int> class_count;
    for (std::size_t i = 0; i < idxs.size(); ++i) {
      for (std::size_t r = 0; r < reps.size(); ++r) {
        if (are_isomorphic(items[idxs[i]], items[idxs[reps[r]]])) {
          class_of[i] = static_cast<int>(r);
          ++class_count[r];
          break;
        }
      }
      if (class_of[i] < 0) {
        class_of[i] = static_cast<int>(reps.size());
        reps.push_back(static_cast<int>(i));
        class_count.push_back(1);
      }
    }
    for (std::size_t i = 0; i < idxs.size(); ++i)
      if (class_count[class_of[i]] == 1) alone[idxs[i]] = true;
  }
  return alone;
}

}  // namespace

const std::vector<Bitset>& solitary_bits(const Group& g) {
  auto& memo = g.memo();
  {
    std::scoped_lock lock(memo.mu);
    if (memo.solitary) return *memo.solitary;
  }
  const auto& subs = all_subgroup_bits(g);
  std::vector<Group> abstracts;
  abstracts.reserve(subs.size());
  for (const auto& b : subs)
    abstracts.push_back(subgroup_abstract_group(g, Subgroup(g, b)).first);
  auto alone = isomorphism_singletons(abstracts);
  std::vector<Bitset> out;
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (alone[i]) out.push_back(subs[i]);
  std::scoped_lock lock(memo.mu);
  if (!memo.solitary) memo.solitary = std::move(out);
  return *memo.solitary;
}

SubgroupFamily solitary_family(const Group& g) { return SubgroupFamily(g, solitary_bits(g)); }

const std::vector<Bitset>& quotient_solitary_bits(const Group& g) {
  auto& memo = g.memo();
  {
    std::scoped_lock lock(memo.mu);
    if (memo.quotient_solitary) return *memo.quotient_solitary;
  }
  const auto& normals = normal_subgroup_bits(g);
  std::vector<Group> quotients;
  quotients.reserve(normals.size());
  for (const auto& b : normals) quotients.push_back(quotient(g, Subgroup(g, b)).group);
  auto alone = isomorphism_singletons(quotients);
  std::vector<Bitset> out;
  for (std::size_t i = 0; i < normals.size(); ++i)
    if (alone[i]) out.push_back(normals[i]);
  std::scoped_lock lock(memo.mu);
  if (!memo.quotient_solitary) memo.quotient_solitary = std::move(out);
  return *memo.quotient_solitary;
}

SubgroupFamily quotient_solitary_family(const Group& g) {
  return SubgroupFamily(g, quotient_solitary_bits(g));
}

bool is_quotient_solitary_free(const Group& g) {
  return static_cast<int>(quotient_solitary_bits(g).size()) == (g.order() == 1 ? 1 : 2);
}

SubgroupFamily predicted_qsol_dihedral(int order) {
  Group g = make_dihedral(order);
  const int n = order / 2;
  std::vector<Bitset> members;
  for (int r : divisors(n)) {
    if (n % 2 == 0 && r == n) continue;  // even case keeps only proper rotation subgroups
    Bitset b(order);
    for (int i = 0; i < n; i += n / r) b.set(i);
    members.push_back(std::move(b));
  }
  members.push_back(full_subgroup(g).bits());
  return SubgroupFamily(g, std::move(members));
}

std::vector<Subgroup> predicted_qsol_abelian_p(int p, const std::vector<int>& partition) {
  std::vector<std::pair<int, int>> factors;
  for (int a : partition) factors.emplace_back(p, a);
  return frattini_series(make_abelian(std::move(factors)));
}

std::vector<Subgroup> predicted_sol_abelian_p(int p, const std::vector<int>& partition) {
  std::vector<std::pair<int, int>> factors;
  for (int a : partition) factors.emplace_back(p, a);
  return omega_series(make_abelian(std::move(factors)));
}

std::optional<std::pair<Subgroup, Subgroup>> find_prop_2_3_counterexample(const Group& g) {
  auto normals = normal_subgroups(g);
  auto qsol = quotient_solitary_family(g);
  for (int h = 0; h < normals.size(); ++h) {
    if (normals[h].order() == g.order()) continue;
    QuotientGroup q = quotient(g, normals[h]);
    auto quotient_qsol = quotient_solitary_family(q.group);
    for (int k = 0; k < qsol.size(); ++k) {
      Subgroup image = project_subgroup(q, qsol[k]);
      if (!quotient_qsol.contains(image.bits()))
        return std::make_pair(normals[h], qsol[k]);
    }
  }
  return std::nullopt;
}

SolitaryReport solitary_report(const Group& g) {
  SubgroupFamily sol = solitary_family(g);
  SubgroupFamily qsol = quotient_solitary_family(g);
  FiniteLattice sol_lattice = FiniteLattice::from_subgroup_family(sol);
  FiniteLattice qsol_lattice = FiniteLattice::from_subgroup_family(qsol);
  bool free = is_quotient_solitary_free(g);
  bool qn = qsol == normal_subgroups(g);
  bool sq = sol == qsol;
  return SolitaryReport{g.label(),  std::move(sol),         std::move(qsol),
                        std::move(sol_lattice), std::move(qsol_lattice),
                        free,       qn,          sq};
}

}  // namespace solqsol
