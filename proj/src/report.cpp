#include "solqsol/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "solqsol/config.hpp"
#include "solqsol/errors.hpp"
#include "solqsol/iso.hpp"
#include "solqsol/numbers.hpp"

namespace solqsol {

namespace {

std::string abelian_type_label(const Group& g) {
  if (g.order() == 1) return "C1";
  std::vector<int> moduli;
  for (auto [p, a] : abelian_invariants(g)) moduli.push_back(int_pow(p, a));
  std::sort(moduli.begin(), moduli.end());
  std::string out;
  for (int m : moduli) {
    if (!out.empty()) out += "x";
    out += "C" + std::to_string(m);
  }
  return out;
}

std::string fallback_label(const Group& g) {
  char buf[32];
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  const auto& fp = fingerprint(g);
  mix(fp.order);
  mix(fp.exponent);
  mix(fp.center_order);
  mix(fp.derived_order);
  for (auto [o, c] : fp.histogram) {
    mix(o);
    mix(c);
  }
  for (int c : fp.class_sizes) mix(c);
  std::snprintf(buf, sizeof(buf), "%08llx",
                static_cast<unsigned long long>(h & 0xFFFFFFFFull));
  return "order" + std::to_string(g.order()) + "#fp" + buf;
}

std::string nonabelian_atom_label(const Group& g) {
  const int n = g.order();
  std::vector<Group> candidates;
  if (n % 2 == 0 && n >= 6 && n <= max_order()) candidates.push_back(make_dihedral(n));
  if (n == 8) candidates.push_back(make_quaternion());
  if (is_power_of_two(n) && n >= 16 && n <= max_order()) candidates.push_back(make_semidihedral(n));
  for (int k = 3; k <= 5; ++k) {
    int fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    if (fact == n) candidates.push_back(make_symmetric(k));
  }
  for (const auto& c : candidates)
    if (are_isomorphic(g, c)) return c.label();
  return fallback_label(g);
}

}  // namespace

std::string abstract_type_label(const Group& g) {
  if (g.abelian()) return abelian_type_label(g);
  if (is_nilpotent(g) && prime_factorization(g.order()).size() > 1) {
    std::string out;
    for (const auto& part : sylow_decomposition(g)) {
      Group abstract = subgroup_abstract_group(g, part).first;
      if (!out.empty()) out += "x";
      out += abstract_type_label(abstract);
    }
    return out;
  }
  return nonabelian_atom_label(g);
}

std::string subgroup_type_label(const Group& parent, const Subgroup& h) {
  return abstract_type_label(subgroup_abstract_group(parent, h).first);
}

nlohmann::json group_descriptor(const Group& g) {
  nlohmann::json histogram = nlohmann::json::object();
  for (auto [o, c] : order_histogram(g)) histogram[std::to_string(o)] = c;
  return {{"label", g.label()},
          {"order", g.order()},
          {"exponent", exponent(g)},
          {"histogram", std::move(histogram)},
          {"flags",
           {{"abelian", g.abelian()},
            {"cyclic", is_cyclic(g)},
            {"nilpotent", is_nilpotent(g)},
            {"perfect", is_perfect(g)},
            {"hamiltonian", is_hamiltonian(g)},
            {"elementary_abelian", is_elementary_abelian(g)}}}};
}

nlohmann::json family_json(const Group& g, const SubgroupFamily& family) {
  nlohmann::json members = nlohmann::json::array();
  for (int i = 0; i < family.size(); ++i)
    members.push_back({{"order", family[i].order()},
                       {"members", family[i].elements()},
                       {"type", subgroup_type_label(g, family[i])}});
  return {{"count", family.size()}, {"members", std::move(members)}};
}

nlohmann::json lattice_summary(const FiniteLattice& l) {
  nlohmann::json out = {{"nodes", l.size()},
                        {"edges", l.covers().size()},
                        {"is_chain", l.is_chain()}};
  if (l.size() <= 600) {
    out["is_distributive"] = l.is_distributive();
    out["is_modular"] = l.is_modular();
  } else {
    out["is_distributive"] = nullptr;
    out["is_modular"] = nullptr;
  }
  return out;
}

nlohmann::json show_report(const Group& g, const std::string& spec) {
  return {{"schema_version", kReportSchemaVersion},
          {"command", "show"},
          {"spec", spec},
          {"group", group_descriptor(g)}};
}

nlohmann::json families_report(const Group& g, const std::string& spec, const std::string& which,
                               const SubgroupFamily& family, const FiniteLattice& lattice) {
  return {{"schema_version", kReportSchemaVersion},
          {"command", "families"},
          {"spec", spec},
          {"which", which},
          {"group", group_descriptor(g)},
          {"family", family_json(g, family)},
          {"lattice", lattice.to_json()},
          {"lattice_summary", lattice_summary(lattice)}};
}

nlohmann::json verify_report(const std::vector<VerificationResult>& results, bool ok) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& r : results)
    items.push_back({{"id", r.claim_id},
                     {"status", to_string(r.status)},
                     {"witness", r.witness},
                     {"narrative", r.narrative}});
  return {{"schema_version", kReportSchemaVersion},
          {"command", "verify"},
          {"ok", ok},
          {"results", std::move(items)}};
}

nlohmann::json census_line(const Group& g) {
  SolitaryReport r = solitary_report(g);
  auto orders = [](const SubgroupFamily& f) {
    std::vector<int> out;
    for (int i = 0; i < f.size(); ++i) out.push_back(f[i].order());
    return out;
  };
  return {{"schema_version", kReportSchemaVersion},
          {"group", group_descriptor(g)},
          {"sol", {{"count", r.sol.size()}, {"orders", orders(r.sol)}}},
          {"qsol", {{"count", r.qsol.size()}, {"orders", orders(r.qsol)}}},
          {"sol_lattice", lattice_summary(r.sol_lattice)},
          {"qsol_lattice", lattice_summary(r.qsol_lattice)},
          {"flags",
           {{"quotient_solitary_free", r.quotient_solitary_free},
            {"qsol_equals_normal", r.qsol_equals_normal},
            {"sol_equals_qsol", r.sol_equals_qsol}}}};
}

FiniteLattice labelled_lattice(const Group& g, const SubgroupFamily& family) {
  return FiniteLattice::from_subgroup_family(family, [&](const Subgroup& h) {
    std::string m;
    for (int x : h.elements()) {
      if (!m.empty()) m += ",";
      m += std::to_string(x);
    }
    return subgroup_type_label(g, h) + " {" + m + "}";
  });
}

std::string dump_report(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace solqsol
