#include "solqsol/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace solqsol {

namespace {

constexpr int kLawCap = 600;

// The unique greatest element of the candidate set, or -1. Tries the highest
// index first (exact when the node order is a linear extension), then scans.
int greatest_of(const Bitset& candidates, const std::vector<Bitset>& down_rows) {
  int hi = candidates.highest();
  if (hi < 0) return -1;
  if (candidates.is_subset_of(down_rows[hi])) return hi;
  int found = -1;
  candidates.for_each([&](int m) {
    if (found < 0 && candidates.is_subset_of(down_rows[m])) found = m;
  });
  return found;
}

int least_of(const Bitset& candidates, const std::vector<Bitset>& up_rows) {
  int lo = candidates.lowest();
  if (lo < 0) return -1;
  if (candidates.is_subset_of(up_rows[lo])) return lo;
  int found = -1;
  candidates.for_each([&](int m) {
    if (found < 0 && candidates.is_subset_of(up_rows[m])) found = m;
  });
  return found;
}

std::string pair_text(const LatticeNode& a, const LatticeNode& b) {
  return "(" + (a.label.empty() ? "?" : a.label) + ", " + (b.label.empty() ? "?" : b.label) + ")";
}

}  // namespace

void FiniteLattice::init() {
  const int n = size_;
  for (int i = 0; i < n; ++i) {
    if (!up_rows_[i].test(i)) throw std::invalid_argument("order relation is not reflexive");
    for (int j = i + 1; j < n; ++j)
      if (up_rows_[i].test(j) && up_rows_[j].test(i))
        throw std::invalid_argument("order relation is not antisymmetric");
  }
  for (int i = 0; i < n; ++i) {
    bool ok = true;
    up_rows_[i].for_each([&](int j) {
      if (ok && !up_rows_[j].is_subset_of(up_rows_[i])) ok = false;
    });
    if (!ok) throw std::invalid_argument("order relation is not transitive");
  }

  down_rows_.assign(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    up_rows_[i].for_each([&](int j) { down_rows_[j].set(i); });

  bottom_ = top_ = -1;
  for (int i = 0; i < n; ++i) {
    if (up_rows_[i].count() == n) {
      if (bottom_ >= 0) throw std::invalid_argument("lattice has two bottoms");
      bottom_ = i;
    }
    if (down_rows_[i].count() == n) {
      if (top_ >= 0) throw std::invalid_argument("lattice has two tops");
      top_ = i;
    }
  }
  if (bottom_ < 0 || top_ < 0)
    throw std::invalid_argument("order has no unique bottom or top");

  const bool tables = n <= kLawCap;
  if (tables) {
    meet_table_.assign(static_cast<std::size_t>(n) * n, -1);
    join_table_.assign(static_cast<std::size_t>(n) * n, -1);
  }
  Bitset buf;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Bitset::and_into(buf, down_rows_[i], down_rows_[j]);
      int m = greatest_of(buf, down_rows_);
      if (m < 0)
        throw std::invalid_argument("no unique meet for " + pair_text(payload_[i], payload_[j]));
      Bitset::and_into(buf, up_rows_[i], up_rows_[j]);
      int u = least_of(buf, up_rows_);
      if (u < 0)
        throw std::invalid_argument("no unique join for " + pair_text(payload_[i], payload_[j]));
      if (tables) {
        meet_table_[i * n + j] = meet_table_[j * n + i] = m;
        join_table_[i * n + j] = join_table_[j * n + i] = u;
      }
    }

  covers_.clear();
  for (int i = 0; i < n; ++i) {
    Bitset strict_up = up_rows_[i];
    strict_up.reset(i);
    strict_up.for_each([&](int j) {
      Bitset::and_into(buf, strict_up, down_rows_[j]);
      buf.reset(j);
      if (buf.none()) covers_.emplace_back(i, j);
    });
  }
  std::sort(covers_.begin(), covers_.end());
}

FiniteLattice FiniteLattice::from_leq(std::vector<Bitset> leq_rows,
                                      std::vector<LatticeNode> payload) {
  FiniteLattice l;
  l.size_ = static_cast<int>(leq_rows.size());
  if (payload.size() != leq_rows.size())
    throw std::invalid_argument("payload size mismatch");
  if (l.size_ == 0) throw std::invalid_argument("empty lattice");
  l.up_rows_ = std::move(leq_rows);
  l.payload_ = std::move(payload);
  l.init();
  return l;
}

FiniteLattice FiniteLattice::from_subgroup_family(
    const SubgroupFamily& family, const std::function<std::string(const Subgroup&)>& labeller) {
  const int n = family.size();
  if (n == 0) throw std::invalid_argument("empty subgroup family");
  if (family[0].order() != 1)
    throw std::invalid_argument("family lacks the trivial subgroup");
  if (family[n - 1].order() != family.parent().order())
    throw std::invalid_argument("family lacks the whole group");

  std::vector<Bitset> rows(n, Bitset(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (family[i].bits().is_subset_of(family[j].bits())) rows[i].set(j);

  std::vector<LatticeNode> payload(n);
  for (int i = 0; i < n; ++i) {
    payload[i].order = family[i].order();
    payload[i].members = family[i].elements();
    if (labeller) {
      payload[i].label = labeller(family[i]);
    } else {
      std::string m;
      for (int x : payload[i].members) {
        if (!m.empty()) m += ",";
        m += std::to_string(x);
      }
      payload[i].label = std::to_string(payload[i].order) + ": {" + m + "}";
    }
  }
  return from_leq(std::move(rows), std::move(payload));
}

int FiniteLattice::meet(int a, int b) const {
  if (!meet_table_.empty()) return meet_table_[a * size_ + b];
  return greatest_of(down_rows_[a] & down_rows_[b], down_rows_);
}

int FiniteLattice::join(int a, int b) const {
  if (!join_table_.empty()) return join_table_[a * size_ + b];
  return least_of(up_rows_[a] & up_rows_[b], up_rows_);
}

bool FiniteLattice::is_chain() const {
  for (int i = 0; i < size_; ++i)
    if ((up_rows_[i] | down_rows_[i]).count() != size_) return false;
  return true;
}

int FiniteLattice::chain_length() const {
  if (!is_chain()) throw std::invalid_argument("chain_length requires a chain");
  return size_ - 1;
}

bool FiniteLattice::is_modular() const {
  if (meet_table_.empty())
    throw std::logic_error("lattice too large for the modular-law check");
  const int n = size_;
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      if (!leq(x, z)) continue;
      for (int y = 0; y < n; ++y)
        if (join_table_[x * n + meet_table_[y * n + z]] !=
            meet_table_[join_table_[x * n + y] * n + z])
          return false;
    }
  return true;
}

bool FiniteLattice::is_distributive() const {
  if (meet_table_.empty())
    throw std::logic_error("lattice too large for the distributive-law check");
  const int n = size_;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (meet_table_[x * n + join_table_[y * n + z]] !=
            join_table_[meet_table_[x * n + y] * n + meet_table_[x * n + z]])
          return false;
  return true;
}

FiniteLattice FiniteLattice::dual() const {
  return from_leq(down_rows_, payload_);
}

std::string FiniteLattice::to_dot() const {
  std::string out = "digraph lattice {\n  rankdir=BT;\n";
  for (int i = 0; i < size_; ++i) {
    std::string label = payload_[i].label;
    std::string escaped;
    for (char c : label) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    out += "  n" + std::to_string(i) + " [label=\"" + escaped + "\"];\n";
  }
  std::map<int, std::vector<int>> by_order;
  for (int i = 0; i < size_; ++i) by_order[payload_[i].order].push_back(i);
  for (const auto& [order, nodes] : by_order) {
    if (nodes.size() < 2) continue;
    out += "  { rank=same;";
    for (int i : nodes) out += " n" + std::to_string(i) + ";";
    out += " }\n";
  }
  for (auto [lo, hi] : covers_)
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

nlohmann::json FiniteLattice::to_json() const {
  nlohmann::json nodes = nlohmann::json::array();
  for (int i = 0; i < size_; ++i)
    nodes.push_back({{"id", i}, {"order", payload_[i].order}, {"members", payload_[i].members}});
  nlohmann::json covers = nlohmann::json::array();
  for (auto [lo, hi] : covers_) covers.push_back({lo, hi});
  return {{"nodes", std::move(nodes)}, {"covers", std::move(covers)}};
}

namespace {

struct NodeShape {
  int down, up, cover_in, cover_out;
  auto operator<=>(const NodeShape&) const = default;
};

std::vector<NodeShape> shapes(const FiniteLattice& l) {
  std::vector<NodeShape> out(l.size());
  for (int i = 0; i < l.size(); ++i) {
    int down = 0, up = 0;
    for (int j = 0; j < l.size(); ++j) {
      if (l.leq(j, i)) ++down;
      if (l.leq(i, j)) ++up;
    }
    out[i] = NodeShape{down, up, 0, 0};
  }
  for (auto [lo, hi] : l.covers()) {
    ++out[hi].cover_in;
    ++out[lo].cover_out;
  }
  return out;
}

bool extend_order_iso(const FiniteLattice& a, const FiniteLattice& b,
                      const std::vector<NodeShape>& sa, const std::vector<NodeShape>& sb,
                      std::vector<int>& map, std::vector<bool>& used, int depth) {
  if (depth == a.size()) return true;
  for (int cand = 0; cand < b.size(); ++cand) {
    if (used[cand] || sb[cand] != sa[depth]) continue;
    bool ok = true;
    for (int prev = 0; prev < depth && ok; ++prev) {
      if (a.leq(prev, depth) != b.leq(map[prev], cand)) ok = false;
      if (a.leq(depth, prev) != b.leq(cand, map[prev])) ok = false;
    }
    if (!ok) continue;
    map[depth] = cand;
    used[cand] = true;
    if (extend_order_iso(a, b, sa, sb, map, used, depth + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool lattice_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.size() != b.size()) return false;
  auto sa = shapes(a), sb = shapes(b);
  auto sorted_a = sa, sorted_b = sb;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return false;
  std::vector<int> map(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  return extend_order_iso(a, b, sa, sb, map, used, 0);
}

bool lattice_anti_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  return lattice_isomorphic(a, b.dual());
}

FiniteLattice product_lattice(const FiniteLattice& a, const FiniteLattice& b) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  std::vector<Bitset> rows(n, Bitset(n));
  std::vector<LatticeNode> payload(n);
  for (int i1 = 0; i1 < na; ++i1)
    for (int i2 = 0; i2 < nb; ++i2) {
      int i = i1 * nb + i2;
      for (int j1 = 0; j1 < na; ++j1)
        for (int j2 = 0; j2 < nb; ++j2)
          if (a.leq(i1, j1) && b.leq(i2, j2)) rows[i].set(j1 * nb + j2);
      payload[i].label = "(" + a.node(i1).label + ", " + b.node(i2).label + ")";
      payload[i].order = a.node(i1).order * b.node(i2).order;
    }
  return FiniteLattice::from_leq(std::move(rows), std::move(payload));
}

FiniteLattice divisor_lattice(const std::set<int>& orders) {
  if (!orders.count(1)) throw std::invalid_argument("divisor lattice must contain 1");
  std::vector<int> values(orders.begin(), orders.end());
  for (int v : values) {
    if (v < 1) throw std::invalid_argument("divisor lattice entries must be positive");
    for (int d = 1; d <= v; ++d)
      if (v % d == 0 && !orders.count(d))
        throw std::invalid_argument("set is not divisor-closed: " + std::to_string(d) +
                                    " divides " + std::to_string(v));
  }
  const int n = static_cast<int>(values.size());
  std::vector<Bitset> rows(n, Bitset(n));
  std::vector<LatticeNode> payload(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (values[j] % values[i] == 0) rows[i].set(j);
    payload[i].label = std::to_string(values[i]);
    payload[i].order = values[i];
  }
  return FiniteLattice::from_leq(std::move(rows), std::move(payload));
}

FiniteLattice chain_lattice(int edges) {
  const int n = edges + 1;
  std::vector<Bitset> rows(n, Bitset(n));
  std::vector<LatticeNode> payload(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) rows[i].set(j);
    payload[i].label = std::to_string(i);
    payload[i].order = i + 1;
  }
  return FiniteLattice::from_leq(std::move(rows), std::move(payload));
}

}  // namespace solqsol
