#include "solqsol/corpus.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "solqsol/numbers.hpp"
#include "solqsol/spec_parse.hpp"

namespace solqsol {

const Group& corpus_group(const std::string& spec) {
  static std::mutex mu;
  static std::map<std::string, Group> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(spec);
  if (it == cache.end()) it = cache.emplace(spec, group_from_spec(spec)).first;
  return it->second;
}

namespace {

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // ascending parts, each part >= previous
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = min_part; part <= remaining; ++part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, n, 1);
  return out;
}

std::string ab_spec(int p, const std::vector<int>& parts) {
  std::string s = "Ab(" + std::to_string(p) + ":[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + "])";
}

void sort_specs(std::vector<std::string>& specs) {
  std::vector<std::pair<std::pair<int, std::string>, std::string>> keyed;
  keyed.reserve(specs.size());
  for (auto& s : specs)
    keyed.push_back({{corpus_group(s).order(), s}, s});
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < specs.size(); ++i) specs[i] = std::move(keyed[i].second);
}

}  // namespace

std::vector<std::string> abelian_p_specs(int p, int max_order) {
  std::vector<std::string> out;
  for (int k = 1; int_pow(p, k) <= max_order && k < 31; ++k)
    for (const auto& parts : partitions_of(k)) out.push_back(ab_spec(p, parts));
  sort_specs(out);
  return out;
}

std::vector<std::string> abelian_specs(int max_order, const std::vector<int>& primes) {
  std::vector<int> ps = primes;
  if (ps.empty())
    for (int p = 2; p <= max_order; ++p)
      if (is_prime(p)) ps.push_back(p);

  // One spec per prime signature: product over primes of partition specs.
  std::vector<std::string> out;
  auto rec = [&](auto&& self, std::size_t prime_idx, int order_so_far,
                 const std::string& spec_so_far) -> void {
    if (!spec_so_far.empty()) out.push_back(spec_so_far);
    for (std::size_t i = prime_idx; i < ps.size(); ++i) {
      int p = ps[i];
      for (int k = 1;; ++k) {
        long long order = static_cast<long long>(order_so_far) * int_pow(p, k);
        if (int_pow(p, k) > max_order / order_so_far) break;
        for (const auto& parts : partitions_of(k)) {
          std::string spec = spec_so_far.empty() ? ab_spec(p, parts)
                                                 : spec_so_far + "x" + ab_spec(p, parts);
          self(self, i + 1, static_cast<int>(order), spec);
        }
      }
    }
  };
  rec(rec, 0, 1, "");
  sort_specs(out);
  return out;
}

std::vector<std::string> standard_corpus(int max_order) {
  std::vector<std::string> out;
  for (int n = 1; n <= std::min(16, max_order); ++n) out.push_back("C" + std::to_string(n));
  for (int n : {20, 24, 30})
    if (n <= max_order) out.push_back("C" + std::to_string(n));
  for (int order = 6; order <= std::min(24, max_order); order += 2)
    out.push_back("D" + std::to_string(order));
  if (max_order >= 8) out.push_back("Q8");
  if (max_order >= 16) out.push_back("SD16");
  if (max_order >= 32) out.push_back("SD32");
  for (int n = 3; n <= 5; ++n) {
    int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    if (fact <= max_order) out.push_back("S" + std::to_string(n));
  }
  for (const auto& s : abelian_specs(std::min(32, max_order), {2, 3, 5}))
    out.push_back(s);
  for (const auto* s : {"Q8xC3", "Q8xC5", "D8xC3", "D8xC5", "D6xC5", "D6xD10"}) {
    if (corpus_group(s).order() <= max_order) out.push_back(s);
  }
  sort_specs(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> nilpotent_corpus(int max_order) {
  std::vector<std::string> out = abelian_specs(max_order);
  for (const auto* s : {"D8", "D16", "D32", "Q8", "SD16", "SD32", "Q8xC3", "Q8xC5", "D8xC3",
                        "D8xC5", "D16xC3", "SD16xC3", "Q8xAb(3:[1,1])", "D8xD8"}) {
    if (corpus_group(s).order() <= max_order) out.push_back(s);
  }
  sort_specs(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> p_group_corpus(int max_order) {
  std::vector<std::string> out;
  for (int p : {2, 3, 5, 7})
    for (const auto& s : abelian_p_specs(p, max_order)) out.push_back(s);
  for (const auto* s : {"D8", "D16", "D32", "Q8", "SD16", "SD32"}) {
    if (corpus_group(s).order() <= max_order) out.push_back(s);
  }
  sort_specs(out);
  return out;
}

std::vector<std::pair<std::string, std::string>> coprime_pairs() {
  return {
      {"C2", "C3"},           {"C4", "C3"},         {"C2", "C5"},
      {"C4", "C5"},           {"C8", "C3"},         {"C2", "Ab(3:[2])"},
      {"Ab(2:[1,1])", "C3"},  {"Ab(2:[1,2])", "Ab(3:[2])"}, {"Ab(3:[1,1])", "C2"},
      {"D6", "C5"},           {"D8", "C3"},         {"D8", "C5"},
      {"Q8", "C3"},           {"Q8", "C5"},         {"Q8", "Ab(3:[2])"},
      {"SD16", "C3"},         {"D10", "C3"},        {"C16", "Ab(3:[2])"},
  };
}

std::vector<std::string> hamiltonian_specs() {
  std::vector<std::string> out;
  for (int n = 0; n <= 2; ++n) {
    std::string base = "Q8";
    for (int i = 0; i < n; ++i) base += "xC2";
    for (const auto* odd : {"", "xC3", "xAb(3:[2])", "xC5"}) out.push_back(base + odd);
  }
  return out;
}

}  // namespace solqsol
