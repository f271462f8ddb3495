#include "solqsol/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "solqsol/config.hpp"
#include "solqsol/errors.hpp"
#include "solqsol/numbers.hpp"

namespace solqsol {

namespace {

constexpr int kConstructionAssocCap = 64;

int find_identity(int n, const std::vector<int>& table) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      if (table[e * n + x] != x || table[x * n + e] != x) ok = false;
    if (ok) return e;
  }
  throw std::invalid_argument("Cayley table has no two-sided identity");
}

void check_associativity(int n, const std::vector<int>& table, const std::string& label) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = table[a * n + b];
      for (int c = 0; c < n; ++c)
        if (table[ab * n + c] != table[a * n + table[b * n + c]])
          throw std::logic_error("associativity fails in " + label + " at (" +
                                 std::to_string(a) + "," + std::to_string(b) + "," +
                                 std::to_string(c) + ")");
    }
}

}  // namespace

Group Group::from_table(int order, std::vector<int> table, std::string label) {
  if (order <= 0) throw std::invalid_argument("group order must be positive");
  if (table.size() != static_cast<std::size_t>(order) * order)
    throw std::invalid_argument("Cayley table size mismatch for " + label);
  for (int v : table)
    if (v < 0 || v >= order)
      throw std::invalid_argument("Cayley table entry out of range in " + label);

  auto d = std::make_shared<Data>();
  d->n = order;
  d->table = std::move(table);
  d->label = std::move(label);
  d->identity = find_identity(order, d->table);

  d->inverses.assign(order, -1);
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) {
      if (d->table[g * order + h] == d->identity && d->table[h * order + g] == d->identity) {
        d->inverses[g] = h;
        break;
      }
    }
    if (d->inverses[g] < 0)
      throw std::invalid_argument("element " + std::to_string(g) +
                                  " has no two-sided inverse in " + d->label);
  }

  if (order <= kConstructionAssocCap) check_associativity(order, d->table, d->label);

  d->element_orders.assign(order, 1);
  for (int g = 0; g < order; ++g) {
    int k = 1, x = g;
    while (x != d->identity) {
      x = d->table[x * order + g];
      ++k;
    }
    d->element_orders[g] = k;
  }

  d->abelian = true;
  for (int a = 0; a < order && d->abelian; ++a)
    for (int b = a + 1; b < order; ++b)
      if (d->table[a * order + b] != d->table[b * order + a]) {
        d->abelian = false;
        break;
      }

  Group g;
  g.d_ = std::move(d);
  return g;
}

void validate_group(const Group& g) {
  const int n = g.order();
  const auto& t = g.table();
  for (int v : t)
    if (v < 0 || v >= n) throw std::logic_error("table entry out of range in " + g.label());
  const int e = g.identity();
  for (int x = 0; x < n; ++x)
    if (g.mul(e, x) != x || g.mul(x, e) != x)
      throw std::logic_error("identity fails in " + g.label());
  for (int x = 0; x < n; ++x)
    if (g.mul(x, g.inv(x)) != e || g.mul(g.inv(x), x) != e)
      throw std::logic_error("inverse fails in " + g.label());
  check_associativity(n, t, g.label());
}

Group make_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  if (n > max_order()) throw CapExceeded("C" + std::to_string(n) + " exceeds the order cap");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
  return Group::from_table(n, std::move(t), "C" + std::to_string(n));
}

Group make_dihedral(int order) {
  if (order % 2 != 0 || order < 6)
    throw std::invalid_argument("dihedral order must be even and >= 6");
  if (order > max_order()) throw CapExceeded("D" + std::to_string(order) + " exceeds the order cap");
  const int n = order / 2;
  // Elements 0..n-1 are x^i, n..2n-1 are x^i y, with y x y = x^{-1}.
  auto rot = [n](int i) { return ((i % n) + n) % n; };
  std::vector<int> t(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      int v;
      bool ra = a < n, rb = b < n;
      int i = ra ? a : a - n, j = rb ? b : b - n;
      if (ra && rb) v = rot(i + j);
      else if (ra && !rb) v = n + rot(i + j);
      else if (!ra && rb) v = n + rot(i - j);
      else v = rot(i - j);
      t[a * order + b] = v;
    }
  return Group::from_table(order, std::move(t), "D" + std::to_string(order));
}

Group make_quaternion() {
  // x^4 = 1, y^2 = x^2, y x y^{-1} = x^{-1}; elements x^i then x^i y.
  const int order = 8;
  auto rot = [](int i) { return ((i % 4) + 4) % 4; };
  std::vector<int> t(64);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      bool ra = a < 4, rb = b < 4;
      int i = ra ? a : a - 4, j = rb ? b : b - 4;
      int v;
      if (ra && rb) v = rot(i + j);
      else if (ra && !rb) v = 4 + rot(i + j);
      else if (!ra && rb) v = 4 + rot(i - j);
      else v = rot(i - j + 2);
      t[a * order + b] = v;
    }
  return Group::from_table(order, std::move(t), "Q8");
}

Group make_semidihedral(int order) {
  if (!is_power_of_two(order) || order < 16)
    throw std::invalid_argument("semidihedral order must be 2^n with n >= 4");
  if (order > max_order())
    throw CapExceeded("SD" + std::to_string(order) + " exceeds the order cap");
  const int m = order / 2;      // order of the generator a
  const int tw = m / 2 - 1;     // b a b = a^tw
  auto rot = [m](long long i) { return static_cast<int>(((i % m) + m) % m); };
  std::vector<int> t(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      bool ra = a < m, rb = b < m;
      long long i = ra ? a : a - m, j = rb ? b : b - m;
      int v;
      if (ra && rb) v = rot(i + j);
      else if (ra && !rb) v = m + rot(i + j);
      else if (!ra && rb) v = m + rot(i + j * tw);
      else v = rot(i + j * tw);
      t[a * order + b] = v;
    }
  return Group::from_table(order, std::move(t), "SD" + std::to_string(order));
}

namespace {

std::string abelian_label(const std::vector<std::pair<int, int>>& factors) {
  if (factors.empty()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j].first == factors[i].first) ++j;
    if (!out.empty()) out += "x";
    out += "Ab(" + std::to_string(factors[i].first) + ":[";
    for (std::size_t k = i; k < j; ++k) {
      if (k > i) out += ",";
      out += std::to_string(factors[k].second);
    }
    out += "])";
    i = j;
  }
  return out;
}

}  // namespace

std::vector<int> abelian_decode(const std::vector<std::pair<int, int>>& factors, int index) {
  std::vector<int> tuple(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    int m = int_pow(factors[k].first, factors[k].second);
    tuple[k] = index % m;
    index /= m;
  }
  return tuple;
}

int abelian_encode(const std::vector<std::pair<int, int>>& factors, const std::vector<int>& tuple) {
  int index = 0, stride = 1;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    int m = int_pow(factors[k].first, factors[k].second);
    index += (tuple[k] % m) * stride;
    stride *= m;
  }
  return index;
}

Group make_abelian(std::vector<std::pair<int, int>> factors) {
  for (auto [p, a] : factors) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (a < 1) throw std::invalid_argument("factor exponent must be >= 1");
  }
  std::sort(factors.begin(), factors.end());
  long long order = 1;
  for (auto [p, a] : factors) {
    order *= int_pow(p, a);
    if (order > max_order())
      throw CapExceeded("abelian group order exceeds the order cap");
  }
  const int n = static_cast<int>(order);
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  std::vector<int> moduli(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k)
    moduli[k] = int_pow(factors[k].first, factors[k].second);
  for (int a = 0; a < n; ++a) {
    auto ta = abelian_decode(factors, a);
    for (int b = 0; b < n; ++b) {
      auto tb = abelian_decode(factors, b);
      std::vector<int> tc(factors.size());
      for (std::size_t k = 0; k < factors.size(); ++k) tc[k] = (ta[k] + tb[k]) % moduli[k];
      t[a * n + b] = abelian_encode(factors, tc);
    }
  }
  return Group::from_table(n, std::move(t), abelian_label(factors));
}

Group make_symmetric(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("symmetric group supported for 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int order = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < order; ++i) index_of[perms[i]] = i;
  std::vector<int> t(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a * order + b] = index_of[c];
    }
  return Group::from_table(order, std::move(t), "S" + std::to_string(n));
}

Group direct_product(const Group& g, const Group& h) {
  long long order = static_cast<long long>(g.order()) * h.order();
  if (order > max_order())
    throw CapExceeded("direct product " + g.label() + "x" + h.label() +
                      " exceeds the order cap");
  const int n = static_cast<int>(order), nh = h.order();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[a * n + b] = g.mul(a / nh, b / nh) * nh + h.mul(a % nh, b % nh);
  return Group::from_table(n, std::move(t), g.label() + "x" + h.label());
}

OrderHistogram order_histogram(const Group& g) {
  OrderHistogram h;
  for (int x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
  return h;
}

int exponent(const Group& g) {
  int e = 1;
  for (int x = 0; x < g.order(); ++x) e = std::lcm(e, g.element_order(x));
  return e;
}

const std::vector<std::vector<int>>& conjugacy_classes(const Group& g) {
  auto& memo = g.memo();
  std::scoped_lock lock(memo.mu);
  if (!memo.classes) {
    const int n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> classes;
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
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    memo.classes = std::move(classes);
  }
  return *memo.classes;
}

const Fingerprint& fingerprint(const Group& g) {
  auto& memo = g.memo();
  {
    std::scoped_lock lock(memo.mu);
    if (memo.fingerprint) return *memo.fingerprint;
  }
  Fingerprint fp;
  const int n = g.order();
  fp.order = n;
  fp.abelian = g.abelian();
  fp.exponent = exponent(g);
  for (auto [o, c] : order_histogram(g)) fp.histogram.emplace_back(o, c);

  int center = 0;
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int y = 0; y < n && central; ++y)
      if (g.mul(x, y) != g.mul(y, x)) central = false;
    if (central) ++center;
  }
  fp.center_order = center;

  // Derived subgroup order via product-closure of the commutator set.
  {
    Bitset bits(n);
    std::vector<int> elems;
    auto add = [&](int v) {
      if (!bits.test(v)) {
        bits.set(v);
        elems.push_back(v);
      }
    };
    add(g.identity());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        add(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); ++j) {
        add(g.mul(elems[i], elems[j]));
        add(g.mul(elems[j], elems[i]));
      }
    fp.derived_order = static_cast<int>(elems.size());
  }

  for (const auto& cls : conjugacy_classes(g)) fp.class_sizes.push_back(static_cast<int>(cls.size()));
  std::sort(fp.class_sizes.begin(), fp.class_sizes.end());

  std::scoped_lock lock(memo.mu);
  if (!memo.fingerprint) memo.fingerprint = std::move(fp);
  return *memo.fingerprint;
}

}  // namespace solqsol
