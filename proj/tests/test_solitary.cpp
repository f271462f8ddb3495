#include "doctest.h"

#include <set>

#include "solqsol/config.hpp"
#include "solqsol/corpus.hpp"
#include "solqsol/iso.hpp"
#include "solqsol/quotient.hpp"
#include "solqsol/solitary.hpp"
#include "solqsol/spec_parse.hpp"
#include "solqsol/verify.hpp"

using namespace solqsol;

namespace {

std::multiset<int> family_orders(const SubgroupFamily& f) {
  std::multiset<int> out;
  for (int i = 0; i < f.size(); ++i) out.insert(f[i].order());
  return out;
}

}  // namespace

TEST_CASE("solitary family of D8") {
  Group d8 = make_dihedral(8);
  auto sol = solitary_family(d8);
  CHECK(family_orders(sol) == std::multiset<int>{1, 4, 8});
  CHECK(sol.contains(closure(d8, {1}).bits()));        // <x>
  CHECK_FALSE(sol.contains(closure(d8, {2}).bits()));  // <x^2>
}

TEST_CASE("quotient-solitary family of dihedral groups") {
  Group d8 = make_dihedral(8);
  auto qsol = quotient_solitary_family(d8);
  CHECK(family_orders(qsol) == std::multiset<int>{1, 2, 8});
  CHECK(qsol.contains(closure(d8, {2}).bits()));
  CHECK_FALSE(qsol.contains(closure(d8, {1}).bits()));

  Group d6 = make_dihedral(6);
  CHECK(quotient_solitary_family(d6) == normal_subgroups(d6));
}

TEST_CASE("solitary and quotient-solitary families of Z2xZ4") {
  Group g = make_abelian({{2, 1}, {2, 2}});
  auto sol = solitary_family(g);
  auto qsol = quotient_solitary_family(g);
  CHECK(family_orders(sol) == std::multiset<int>{1, 4, 8});
  CHECK(family_orders(qsol) == std::multiset<int>{1, 2, 8});
  CHECK(sol.contains(omega(g, 1).bits()));
  CHECK(qsol.contains(frattini(g).bits()));
}

TEST_CASE("cyclic p-groups are all-solitary") {
  for (int n : {2, 4, 8, 16, 9, 27, 25}) {
    Group g = make_cyclic(n);
    CHECK(solitary_family(g) == all_subgroups(g));
  }
}

TEST_CASE("quotient solitary free groups") {
  CHECK(is_quotient_solitary_free(make_abelian({{2, 1}, {2, 1}})));
  CHECK(is_quotient_solitary_free(make_cyclic(1)));
  CHECK(is_quotient_solitary_free(make_cyclic(3)));
  CHECK_FALSE(is_quotient_solitary_free(make_cyclic(4)));
  CHECK_FALSE(is_quotient_solitary_free(make_dihedral(8)));
}

TEST_CASE("trivial and full subgroups always belong; derived subgroup too") {
  for (const auto& spec : {"C12", "D12", "Q8", "S4", "SD16", "Ab(2:[1,2])", "D6xD10"}) {
    const Group& g = corpus_group(spec);
    auto sol = solitary_family(g);
    auto qsol = quotient_solitary_family(g);
    CHECK(sol.contains(trivial_subgroup(g).bits()));
    CHECK(sol.contains(full_subgroup(g).bits()));
    CHECK(qsol.contains(trivial_subgroup(g).bits()));
    CHECK(qsol.contains(full_subgroup(g).bits()));
    CHECK(qsol.contains(derived_subgroup(g).bits()));
  }
}

TEST_CASE("dihedral predictor matches brute force") {
  for (int n = 3; n <= 12; ++n) {
    auto predicted = predicted_qsol_dihedral(2 * n);
    const Group& g = predicted.parent();
    CHECK(SubgroupFamily(g, [&] {
            std::vector<Bitset> bits;
            for (int i = 0; i < predicted.size(); ++i) bits.push_back(predicted[i].bits());
            return bits;
          }()) == quotient_solitary_family(g));
  }
}

TEST_CASE("abelian p-group predictors") {
  auto qsol_chain = predicted_qsol_abelian_p(2, {1, 2});
  REQUIRE(qsol_chain.size() == 3);
  CHECK(qsol_chain[1].order() == 2);

  auto sol_chain = predicted_sol_abelian_p(2, {1, 2});
  REQUIRE(sol_chain.size() == 3);
  CHECK(sol_chain[1].order() == 4);

  CHECK(predicted_qsol_abelian_p(3, {1, 1}).size() == 2);
  CHECK(predicted_sol_abelian_p(2, {2, 2}).size() == 3);
}

TEST_CASE("no projection counterexample in small abelian groups") {
  CHECK_FALSE(find_prop_2_3_counterexample(make_abelian({{2, 1}, {2, 2}})).has_value());
  CHECK_FALSE(find_prop_2_3_counterexample(make_abelian({{2, 1}, {2, 1}, {2, 1}})).has_value());
  CHECK_FALSE(find_prop_2_3_counterexample(make_cyclic(12)).has_value());
  CHECK_FALSE(find_prop_2_3_counterexample(make_abelian({{3, 1}, {3, 2}})).has_value());
}

TEST_CASE("projection counterexample exists in D6xD10") {
  const Group& g = corpus_group("D6xD10");
  auto hit = find_prop_2_3_counterexample(g);
  REQUIRE(hit.has_value());
  const auto& [h, k] = *hit;
  CHECK(quotient_solitary_family(g).contains(k.bits()));
  auto q = quotient(g, h);
  CHECK_FALSE(quotient_solitary_family(q.group).contains(project_subgroup(q, k).bits()));
}

TEST_CASE("solitary reports") {
  auto report = solitary_report(corpus_group("D8"));
  CHECK(report.label == "D8");
  CHECK(report.qsol_lattice.is_chain());
  CHECK_FALSE(report.quotient_solitary_free);
  CHECK_FALSE(report.qsol_equals_normal);
  CHECK_FALSE(report.sol_equals_qsol);

  auto free_report = solitary_report(corpus_group("Ab(2:[1,1])"));
  CHECK(free_report.quotient_solitary_free);
}

TEST_CASE("hamiltonian quotient-solitary lattices decompose over the coprime parts") {
  ScopedMaxOrder cap(512);
  for (const auto& spec : hamiltonian_specs()) {
    const Group& g = corpus_group(spec);
    REQUIRE((g.abelian() || is_hamiltonian(g)));
    auto lattice = FiniteLattice::from_subgroup_family(quotient_solitary_family(g));
    FiniteLattice expected = chain_lattice(0);
    for (const auto& part : sylow_decomposition(g)) {
      Group abstract = subgroup_abstract_group(g, part).first;
      expected = product_lattice(
          expected, FiniteLattice::from_subgroup_family(quotient_solitary_family(abstract)));
    }
    CHECK(lattice_isomorphic(lattice, expected));
    CHECK(lattice.is_distributive());
  }
}

TEST_CASE("all-distinct normal orders force qsol to equal the normal family") {
  // Sufficient condition only: no two normal subgroups of the same order
  // means every quotient isomorphism class is a singleton.
  for (const auto& spec : standard_corpus(64)) {
    const Group& g = corpus_group(spec);
    auto normals = normal_subgroups(g);
    std::set<int> orders;
    bool distinct = true;
    for (int i = 0; i < normals.size(); ++i)
      if (!orders.insert(normals[i].order()).second) distinct = false;
    if (distinct) CHECK(quotient_solitary_family(g) == normals);
  }
}

TEST_CASE("claim registry") {
  CHECK_THROWS_AS(run_claim("nope"), std::invalid_argument);
  CHECK(claim_catalog().size() >= 20);

  auto r = run_claim("prop-2.3");
  CHECK(r.status == VerifyStatus::refuted);
  CHECK(r.witness["group"] == "D6xD10");
  CHECK(r.witness["revalidated"] == true);
  CHECK(outcome_ok(r));

  auto probe = run_claim("s2n-remark");
  CHECK(probe.status == VerifyStatus::probe);
  CHECK(outcome_ok(probe));
  CHECK(probe.witness["observed"].size() == 2);
}
