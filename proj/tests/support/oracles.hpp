#pragma once

// Independent brute-force oracles, deliberately kept free of the library's
// enumeration and isomorphism search paths.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "solqsol/group.hpp"
#include "solqsol/subgroup.hpp"

namespace solqsol::oracle {

// All subgroups by testing every subset; usable for |G| <= 16.
inline std::vector<std::vector<int>> all_subgroups_by_subsets(const Group& g) {
  const int n = g.order();
  std::vector<std::vector<int>> out;
  for (unsigned long long mask = 1; mask < (1ull << n); ++mask) {
    if (!(mask >> g.identity() & 1)) continue;
    std::vector<int> elems;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) elems.push_back(i);
    bool closed = true;
    for (int a : elems) {
      for (int b : elems)
        if (!(mask >> g.mul(a, b) & 1)) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// Normal subgroups as subgroup unions of conjugacy classes.
inline std::vector<std::vector<int>> normal_subgroups_by_class_unions(const Group& g) {
  const int n = g.order();
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(n, false);
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<int> cls;
    for (int a = 0; a < n; ++a) {
      int y = g.mul(g.mul(a, x), g.inv(a));
      if (!seen[y]) {
        seen[y] = true;
        cls.push_back(y);
      }
    }
    classes.push_back(std::move(cls));
  }
  const int k = static_cast<int>(classes.size());
  std::vector<std::vector<int>> out;
  for (unsigned long long mask = 0; mask < (1ull << k); ++mask) {
    std::vector<bool> in(n, false);
    bool has_identity = false;
    for (int c = 0; c < k; ++c)
      if (mask >> c & 1)
        for (int x : classes[c]) {
          in[x] = true;
          if (x == g.identity()) has_identity = true;
        }
    if (!has_identity) continue;
    std::vector<int> elems;
    for (int x = 0; x < n; ++x)
      if (in[x]) elems.push_back(x);
    bool closed = true;
    for (int a : elems) {
      for (int b : elems)
        if (!in[g.mul(a, b)]) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

inline bool homomorphic_bijection(const Group& g, const Group& h, const std::vector<int>& phi) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b])) return false;
  return true;
}

// Isomorphism decision by trying all |G|! bijections; for |G| <= 8.
inline bool isomorphic_by_permutations(const Group& g, const Group& h) {
  if (g.order() != h.order()) return false;
  const int n = g.order();
  std::vector<int> phi(n);
  std::iota(phi.begin(), phi.end(), 0);
  do {
    if (homomorphic_bijection(g, h, phi)) return true;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return false;
}

namespace detail {

// Simple-minded generator choice: first element outside the running closure.
inline std::vector<int> plain_generators(const Group& g) {
  const int n = g.order();
  std::vector<bool> in(n, false);
  in[g.identity()] = true;
  int covered = 1;
  std::vector<int> gens, elems{g.identity()};
  auto close = [&](int seed) {
    std::vector<int> work{seed};
    if (!in[seed]) {
      in[seed] = true;
      elems.push_back(seed);
      ++covered;
    }
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) {
        for (int v : {g.mul(elems[i], elems[j]), g.mul(elems[j], elems[i])})
          if (!in[v]) {
            in[v] = true;
            elems.push_back(v);
            ++covered;
          }
      }
  };
  for (int x = 0; x < n && covered < n; ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    close(x);
  }
  return gens;
}

inline bool extend_all_images(const Group& g, const Group& h, const std::vector<int>& gens,
                              std::vector<int>& images, std::size_t depth) {
  const int n = g.order();
  if (depth == gens.size()) {
    // Build the full map from generator words by breadth-first products.
    std::vector<int> phi(n, -1);
    std::vector<int> elems{g.identity()};
    phi[g.identity()] = h.identity();
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        int a = elems[i];
        int b = g.mul(a, gens[k]);
        int pb = h.mul(phi[a], images[k]);
        if (phi[b] < 0) {
          phi[b] = pb;
          elems.push_back(b);
        } else if (phi[b] != pb) {
          return false;
        }
      }
    std::vector<bool> hit(n, false);
    for (int v : phi) {
      if (v < 0 || hit[v]) return false;
      hit[v] = true;
    }
    return homomorphic_bijection(g, h, phi);
  }
  for (int cand = 0; cand < n; ++cand) {
    if (h.element_order(cand) != g.element_order(gens[depth])) continue;
    images[depth] = cand;
    if (extend_all_images(g, h, gens, images, depth + 1)) return true;
  }
  return false;
}

}  // namespace detail

// Isomorphism decision by exhausting order-compatible generator images; no
// fingerprints, no centralizer pruning. Intended for |G| <= 16.
inline bool isomorphic_by_generator_search(const Group& g, const Group& h) {
  if (g.order() != h.order()) return false;
  auto gens = detail::plain_generators(g);
  std::vector<int> images(gens.size(), -1);
  return detail::extend_all_images(g, h, gens, images, 0);
}

// Automorphism count by brute force over all bijections; |G| <= 8.
inline int automorphism_count_by_permutations(const Group& g) {
  const int n = g.order();
  std::vector<int> phi(n);
  std::iota(phi.begin(), phi.end(), 0);
  int count = 0;
  do {
    if (homomorphic_bijection(g, g, phi)) ++count;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return count;
}

// Non-generators: elements g such that any T of size <= 3 generating the
// group together with g already generates it alone. Every maximal subgroup of
// the order <= 24 corpus is generated by at most 3 elements, so the bound is
// exact there.
inline std::vector<int> non_generators_by_search(const Group& g) {
  const int n = g.order();
  std::vector<std::vector<int>> small_subsets;
  for (int a = 0; a < n; ++a) {
    small_subsets.push_back({a});
    for (int b = a + 1; b < n; ++b) {
      small_subsets.push_back({a, b});
      for (int c = b + 1; c < n; ++c) small_subsets.push_back({a, b, c});
    }
  }
  small_subsets.push_back({});
  std::vector<bool> generator(n, false);
  for (const auto& t : small_subsets) {
    Subgroup base = closure(g, t);
    if (base.order() == n) continue;
    for (int x = 0; x < n; ++x) {
      if (generator[x] || base.contains(x)) continue;
      auto with = t;
      with.push_back(x);
      if (closure(g, with).order() == n) generator[x] = true;
    }
  }
  std::vector<int> out;
  for (int x = 0; x < n; ++x)
    if (!generator[x]) out.push_back(x);
  return out;
}

}  // namespace solqsol::oracle
