#include "solqsol/iso.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "solqsol/config.hpp"
#include "solqsol/errors.hpp"

namespace solqsol {

bool verify_isomorphism(const IsoMap& m) {
  const int n = m.source.order();
  if (m.target.order() != n || static_cast<int>(m.images.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int v : m.images) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (m.images[m.source.mul(a, b)] != m.target.mul(m.images[a], m.images[b])) return false;
  return true;
}

const std::vector<int>& generating_sequence(const Group& g) {
  auto& memo = g.memo();
  {
    std::scoped_lock lock(memo.mu);
    if (memo.generating_sequence) return *memo.generating_sequence;
  }
  const int n = g.order();
  std::vector<int> gens;
  Bitset bits(n);
  bits.set(g.identity());
  while (bits.count() < n) {
    int best = -1, best_size = bits.count();
    Bitset best_bits;
    for (int cand = 0; cand < n; ++cand) {
      if (bits.test(cand)) continue;
      Bitset seed = bits;
      seed.set(cand);
      Bitset cl = closure_bits(g, std::move(seed));
      if (cl.count() > best_size) {
        best = cand;
        best_size = cl.count();
        best_bits = std::move(cl);
      }
    }
    gens.push_back(best);
    bits = std::move(best_bits);
  }
  std::scoped_lock lock(memo.mu);
  if (!memo.generating_sequence) memo.generating_sequence = std::move(gens);
  return *memo.generating_sequence;
}

namespace {

std::vector<int> centralizer_sizes(const Group& g) {
  const int n = g.order();
  std::vector<int> out(n, 0);
  for (int x = 0; x < n; ++x) {
    int c = 0;
    for (int y = 0; y < n; ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++c;
    out[x] = c;
  }
  return out;
}

struct PartialMap {
  std::vector<int> phi;    // source -> target, -1 when unassigned
  std::vector<int> chi;    // target -> source, -1 when unassigned
  std::vector<int> elems;  // assigned source elements in discovery order
};

// Re-closes the partial map under right multiplication by the chosen
// generators. Checking every (element, generator) edge makes the resulting
// map a homomorphism on the generated subgroup.
bool close_partial(PartialMap& m, const Group& g, const Group& h,
                   const std::vector<int>& gens, const std::vector<int>& imgs,
                   std::size_t depth) {
  for (std::size_t i = 0; i < m.elems.size(); ++i) {
    int a = m.elems[i];
    for (std::size_t k = 0; k < depth; ++k) {
      int b = g.mul(a, gens[k]);
      int pb = h.mul(m.phi[a], imgs[k]);
      if (m.phi[b] >= 0) {
        if (m.phi[b] != pb) return false;
      } else if (m.chi[pb] >= 0) {
        return false;
      } else {
        m.phi[b] = pb;
        m.chi[pb] = b;
        m.elems.push_back(b);
      }
    }
  }
  return true;
}

struct IsoSearch {
  const Group& g;
  const Group& h;
  const std::vector<int>& gens;
  std::vector<int> cent_g, cent_h;
  std::vector<int> imgs;
  bool collect_all = false;
  std::size_t limit = 0;  // 0 = unlimited
  bool overflow = false;
  std::vector<std::vector<int>> found;

  IsoSearch(const Group& g_, const Group& h_)
      : g(g_), h(h_), gens(generating_sequence(g_)),
        cent_g(centralizer_sizes(g_)), cent_h(centralizer_sizes(h_)),
        imgs(gens.size(), -1) {}

  // Returns true to stop the whole search (first hit in decision mode).
  bool run(const PartialMap& m, std::size_t depth) {
    if (depth == gens.size()) {
      found.push_back(m.phi);
      if (!collect_all) return true;
      if (limit && found.size() > limit) {
        overflow = true;
        return true;
      }
      return false;
    }
    int src = gens[depth];
    for (int cand = 0; cand < h.order(); ++cand) {
      if (m.chi[cand] >= 0) continue;
      if (h.element_order(cand) != g.element_order(src)) continue;
      if (cent_h[cand] != cent_g[src]) continue;
      PartialMap next = m;
      next.phi[src] = cand;
      next.chi[cand] = src;
      next.elems.push_back(src);
      imgs[depth] = cand;
      if (close_partial(next, g, h, gens, imgs, depth + 1) && run(next, depth + 1)) return true;
    }
    return false;
  }

  void start() {
    PartialMap m;
    m.phi.assign(g.order(), -1);
    m.chi.assign(h.order(), -1);
    m.phi[g.identity()] = h.identity();
    m.chi[h.identity()] = g.identity();
    m.elems.push_back(g.identity());
    run(m, 0);
  }
};

std::vector<int> identity_images(const Group& g) {
  std::vector<int> ids(g.order());
  for (int i = 0; i < g.order(); ++i) ids[i] = i;
  return ids;
}

}  // namespace

std::optional<IsoMap> are_isomorphic(const Group& g, const Group& h) {
  if (g.same(h)) return IsoMap{g, h, identity_images(g)};
  if (g.order() != h.order()) return std::nullopt;
  if (fingerprint(g) != fingerprint(h)) return std::nullopt;
  IsoSearch search(g, h);
  search.start();
  if (search.found.empty()) return std::nullopt;
  return IsoMap{g, h, std::move(search.found.front())};
}

const std::vector<std::vector<int>>& automorphism_images(const Group& g) {
  if (g.order() > automorphism_order_cap())
    throw CapExceeded("automorphism enumeration of " + g.label() + " (order " +
                      std::to_string(g.order()) + ") exceeds the cap " +
                      std::to_string(automorphism_order_cap()));
  auto& memo = g.memo();
  {
    std::scoped_lock lock(memo.mu);
    if (memo.automorphism_images) return *memo.automorphism_images;
  }
  IsoSearch search(g, g);
  search.collect_all = true;
  search.start();
  std::sort(search.found.begin(), search.found.end());
  std::scoped_lock lock(memo.mu);
  if (!memo.automorphism_images) memo.automorphism_images = std::move(search.found);
  return *memo.automorphism_images;
}

std::vector<IsoMap> automorphisms(const Group& g) {
  std::vector<IsoMap> out;
  for (const auto& images : automorphism_images(g)) out.push_back(IsoMap{g, g, images});
  return out;
}

std::optional<std::vector<std::vector<int>>> automorphism_images_limited(const Group& g,
                                                                         std::size_t max_count) {
  {
    std::scoped_lock lock(g.memo().mu);
    if (g.memo().automorphism_images) return *g.memo().automorphism_images;
  }
  IsoSearch search(g, g);
  search.collect_all = true;
  search.limit = max_count;
  search.start();
  if (search.overflow) return std::nullopt;
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

bool is_characteristic(const Group& g, const Subgroup& h) {
  if (!h.parent().same(g))
    throw std::invalid_argument("subgroup does not belong to " + g.label());
  for (const auto& images : automorphism_images(g)) {
    Bitset mapped(g.order());
    h.bits().for_each([&](int x) { mapped.set(images[x]); });
    if (!(mapped == h.bits())) return false;
  }
  return true;
}

SubgroupFamily characteristic_subgroups(const Group& g) {
  std::vector<Bitset> out;
  for (const auto& b : all_subgroup_bits(g))
    if (is_characteristic(g, Subgroup(g, b))) out.push_back(b);
  return SubgroupFamily(g, std::move(out));
}

std::pair<Group, std::vector<int>> subgroup_abstract_group(const Group& g, const Subgroup& h) {
  if (!h.parent().same(g))
    throw std::invalid_argument("subgroup does not belong to " + g.label());
  std::vector<int> incl = h.elements();
  const int k = static_cast<int>(incl.size());
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < k; ++i) local[incl[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int prod = local[g.mul(incl[i], incl[j])];
      if (prod < 0)
        throw std::invalid_argument("element set is not closed; not a subgroup of " + g.label());
      table[i * k + j] = prod;
    }
  Group abstract = Group::from_table(k, std::move(table),
                                     g.label() + ":sub" + std::to_string(k));
  return {std::move(abstract), std::move(incl)};
}

}  // namespace solqsol
