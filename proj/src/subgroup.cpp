#include "solqsol/subgroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "solqsol/config.hpp"
#include "solqsol/errors.hpp"
#include "solqsol/iso.hpp"
#include "solqsol/numbers.hpp"

namespace solqsol {

bool Subgroup::is_valid() const {
  if (!members_.test(parent_.identity())) return false;
  auto elems = members_.to_vector();
  for (int a : elems)
    for (int b : elems)
      if (!members_.test(parent_.mul(a, b))) return false;
  return true;
}

SubgroupFamily::SubgroupFamily(Group parent, std::vector<Bitset> members)
    : parent_(std::move(parent)) {
  std::sort(members.begin(), members.end(), BitsetCanonicalLess{});
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_.reserve(members.size());
  for (auto& b : members) members_.emplace_back(parent_, std::move(b));
}

int SubgroupFamily::index_of(const Bitset& bits) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), bits,
                             [](const Subgroup& s, const Bitset& b) {
                               return BitsetCanonicalLess{}(s.bits(), b);
                             });
  if (it != members_.end() && it->bits() == bits)
    return static_cast<int>(it - members_.begin());
  return -1;
}

bool SubgroupFamily::contains(const Bitset& bits) const { return index_of(bits) >= 0; }

bool SubgroupFamily::operator==(const SubgroupFamily& o) const {
  if (!parent_.same(o.parent_) || members_.size() != o.members_.size()) return false;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (!(members_[i].bits() == o.members_[i].bits())) return false;
  return true;
}

Subgroup trivial_subgroup(const Group& g) {
  Bitset b(g.order());
  b.set(g.identity());
  return Subgroup(g, std::move(b));
}

Subgroup full_subgroup(const Group& g) {
  Bitset b(g.order());
  for (int i = 0; i < g.order(); ++i) b.set(i);
  return Subgroup(g, std::move(b));
}

Bitset closure_bits(const Group& g, Bitset seed) {
  Bitset bits(g.order());
  std::vector<int> elems;
  auto add = [&](int v) {
    if (!bits.test(v)) {
      bits.set(v);
      elems.push_back(v);
    }
  };
  add(g.identity());
  seed.for_each(add);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(g.mul(elems[i], elems[j]));
      add(g.mul(elems[j], elems[i]));
    }
  return bits;
}

Subgroup closure(const Group& g, const std::vector<int>& seed) {
  Bitset b(g.order());
  for (int v : seed) {
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("seed element out of range for " + g.label());
    b.set(v);
  }
  return Subgroup(g, closure_bits(g, std::move(b)));
}

namespace {

std::vector<Bitset> enumerate_subgroups(const Group& g) {
  const int n = g.order();
  if (n > max_order())
    throw CapExceeded("subgroup enumeration of " + g.label() + " (order " +
                      std::to_string(n) + ") exceeds the order cap " +
                      std::to_string(max_order()));

  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> cyclics;
  {
    Bitset triv(n);
    triv.set(g.identity());
    seen.insert(triv);
    cyclics.push_back(std::move(triv));
  }
  for (int x = 0; x < n; ++x) {
    Bitset b(n);
    int y = g.identity();
    do {
      b.set(y);
      y = g.mul(y, x);
    } while (y != g.identity());
    if (seen.insert(b).second) cyclics.push_back(std::move(b));
  }

  std::vector<Bitset> all = cyclics;
  std::vector<Bitset> frontier = cyclics;
  while (!frontier.empty()) {
    std::vector<Bitset> next;
    for (const auto& a : frontier)
      for (const auto& c : cyclics) {
        if (c.is_subset_of(a)) continue;
        Bitset j = closure_bits(g, a | c);
        if (seen.insert(j).second) {
          all.push_back(j);
          next.push_back(std::move(j));
        }
      }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), BitsetCanonicalLess{});
  return all;
}

bool is_normal_bits(const Group& g, const Bitset& h) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    int ai = g.inv(a);
    bool bad = false;
    h.for_each([&](int x) {
      if (!bad && !h.test(g.mul(g.mul(a, x), ai))) bad = true;
    });
    if (bad) return false;
  }
  return true;
}

}  // namespace

const std::vector<Bitset>& all_subgroup_bits(const Group& g) {
  auto& memo = g.memo();
  {
    std::scoped_lock lock(memo.mu);
    if (memo.subgroups) return *memo.subgroups;
  }
  auto subs = enumerate_subgroups(g);
  std::scoped_lock lock(memo.mu);
  if (!memo.subgroups) memo.subgroups = std::move(subs);
  return *memo.subgroups;
}

SubgroupFamily all_subgroups(const Group& g) { return SubgroupFamily(g, all_subgroup_bits(g)); }

bool is_normal(const Group& g, const Subgroup& h) {
  if (!h.parent().same(g))
    throw std::invalid_argument("subgroup does not belong to " + g.label());
  return is_normal_bits(g, h.bits());
}

const std::vector<Bitset>& normal_subgroup_bits(const Group& g) {
  auto& memo = g.memo();
  {
    std::scoped_lock lock(memo.mu);
    if (memo.normals) return *memo.normals;
  }
  std::vector<Bitset> normals;
  for (const auto& b : all_subgroup_bits(g))
    if (is_normal_bits(g, b)) normals.push_back(b);
  std::scoped_lock lock(memo.mu);
  if (!memo.normals) memo.normals = std::move(normals);
  return *memo.normals;
}

SubgroupFamily normal_subgroups(const Group& g) {
  return SubgroupFamily(g, normal_subgroup_bits(g));
}

Subgroup center(const Group& g) {
  const int n = g.order();
  Bitset b(n);
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int y = 0; y < n && central; ++y)
      if (g.mul(x, y) != g.mul(y, x)) central = false;
    if (central) b.set(x);
  }
  return Subgroup(g, std::move(b));
}

Subgroup derived_subgroup(const Group& g) {
  const int n = g.order();
  Bitset seed(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      seed.set(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  return Subgroup(g, closure_bits(g, std::move(seed)));
}

SubgroupFamily maximal_subgroups(const Group& g) {
  const auto& subs = all_subgroup_bits(g);
  const int n = g.order();
  std::vector<Bitset> maximal;
  for (const auto& h : subs) {
    if (h.count() == n) continue;
    bool covered = false;
    for (const auto& k : subs) {
      if (k.count() == n || k.count() <= h.count()) continue;
      if (h.is_subset_of(k)) {
        covered = true;
        break;
      }
    }
    if (!covered) maximal.push_back(h);
  }
  return SubgroupFamily(g, std::move(maximal));
}

Subgroup frattini(const Group& g) {
  auto maxes = maximal_subgroups(g);
  if (maxes.size() == 0) return full_subgroup(g);
  Bitset b = maxes[0].bits();
  for (int i = 1; i < maxes.size(); ++i) b &= maxes[i].bits();
  return Subgroup(g, std::move(b));
}

std::vector<Subgroup> frattini_series(const Group& g) {
  std::vector<Subgroup> series;
  series.push_back(full_subgroup(g));
  while (series.back().order() > 1) {
    auto [abstract, incl] = subgroup_abstract_group(g, series.back());
    Subgroup phi = frattini(abstract);
    Bitset mapped(g.order());
    phi.bits().for_each([&](int i) { mapped.set(incl[i]); });
    series.emplace_back(g, std::move(mapped));
  }
  return series;
}

bool is_abelian_p_group(const Group& g, int* prime) {
  if (!g.abelian()) return false;
  auto pf = prime_factorization(g.order());
  if (pf.size() > 1) return false;
  if (prime) *prime = pf.empty() ? 0 : pf[0].first;
  return true;
}

std::vector<std::pair<int, int>> abelian_invariants(const Group& g) {
  if (!g.abelian())
    throw std::invalid_argument("abelian invariants of a nonabelian group: " + g.label());
  std::vector<std::pair<int, int>> out;
  for (auto [p, mult] : prime_factorization(g.order())) {
    // log_p of the count of elements of order dividing p^i, i ascending.
    std::vector<int> log_counts{0};
    for (int i = 1;; ++i) {
      long long bound = 1;
      for (int k = 0; k < i; ++k) bound *= p;
      int count = 0;
      for (int x = 0; x < g.order(); ++x)
        if (bound % g.element_order(x) == 0) ++count;
      int lg = 0;
      while (count > 1) {
        count /= p;
        ++lg;
      }
      log_counts.push_back(lg);
      if (lg == mult) break;
    }
    // Parts >= i appear (log_counts[i] - log_counts[i-1]) times; conjugate.
    std::vector<int> parts;
    for (std::size_t i = 1; i < log_counts.size(); ++i) {
      int d = log_counts[i] - log_counts[i - 1];
      while (static_cast<int>(parts.size()) < d) parts.push_back(0);
      for (int j = 0; j < d; ++j) ++parts[j];
    }
    std::sort(parts.begin(), parts.end());
    for (int a : parts) out.emplace_back(p, a);
  }
  return out;
}

Subgroup omega(const Group& g, int n) {
  int p = 0;
  if (!is_abelian_p_group(g, &p))
    throw std::invalid_argument("omega is defined for abelian p-groups; got " + g.label());
  if (n < 0) throw std::invalid_argument("omega index must be >= 0");
  int bound = 1;
  for (int i = 0; i < n; ++i) {
    bound *= (p == 0 ? 1 : p);
    if (bound >= g.order()) {
      bound = g.order();
      break;
    }
  }
  Bitset b(g.order());
  for (int x = 0; x < g.order(); ++x)
    if (bound % g.element_order(x) == 0) b.set(x);
  return Subgroup(g, std::move(b));
}

std::vector<Subgroup> omega_series(const Group& g) {
  std::vector<Subgroup> series;
  int n = 0;
  while (true) {
    series.push_back(omega(g, n));
    if (series.back().order() == g.order()) break;
    ++n;
  }
  return series;
}

namespace {

// Elements of p-power order, and whether they form a subgroup.
std::pair<Bitset, bool> p_part(const Group& g, int p) {
  Bitset b(g.order());
  for (int x = 0; x < g.order(); ++x) {
    int o = g.element_order(x);
    while (o % p == 0) o /= p;
    if (o == 1) b.set(x);
  }
  Bitset cl = closure_bits(g, b);
  return {b, cl == b};
}

}  // namespace

bool is_nilpotent(const Group& g) {
  for (auto [p, a] : prime_factorization(g.order()))
    if (!p_part(g, p).second) return false;
  return true;
}

std::vector<Subgroup> sylow_decomposition(const Group& g) {
  std::vector<Subgroup> parts;
  for (auto [p, a] : prime_factorization(g.order())) {
    auto [bits, closed] = p_part(g, p);
    if (!closed) {
      // Not nilpotent: report a concrete non-normal Sylow p-subgroup.
      int target = int_pow(p, a);
      for (const auto& h : all_subgroup_bits(g)) {
        if (h.count() != target || is_normal_bits(g, h)) continue;
        std::string members;
        h.for_each([&](int x) {
          if (!members.empty()) members += ",";
          members += std::to_string(x);
        });
        throw std::invalid_argument(g.label() + " is not nilpotent: Sylow " +
                                    std::to_string(p) + "-subgroup {" + members +
                                    "} is not normal");
      }
      throw std::logic_error("p-power elements not closed yet all Sylow subgroups normal in " +
                             g.label());
    }
    parts.emplace_back(g, std::move(bits));
  }
  return parts;
}

bool is_cyclic(const Group& g) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return true;
  return false;
}

bool is_elementary_abelian(const Group& g) {
  if (!g.abelian()) return false;
  if (g.order() == 1) return true;
  auto pf = prime_factorization(g.order());
  if (pf.size() > 1) return false;
  int p = pf[0].first;
  for (int x = 0; x < g.order(); ++x) {
    int o = g.element_order(x);
    if (o != 1 && o != p) return false;
  }
  return true;
}

bool is_perfect(const Group& g) { return derived_subgroup(g).order() == g.order(); }

bool is_hamiltonian(const Group& g) {
  if (g.abelian()) return false;
  return all_subgroup_bits(g).size() == normal_subgroup_bits(g).size();
}

}  // namespace solqsol
