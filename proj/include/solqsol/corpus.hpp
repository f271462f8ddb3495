#pragma once

#include <string>
#include <utility>
#include <vector>

#include "solqsol/group.hpp"

namespace solqsol {

// Frozen corpus definitions shared by the verification suite and the
// acceptance tests. Groups built from spec strings are cached per process so
// repeated claims reuse enumeration work.
const Group& corpus_group(const std::string& spec);

// Every isomorphism type of abelian group with order in [2, max_order],
// restricted to the given primes (all primes <= max_order when empty).
// Deterministic: ascending order, then label.
std::vector<std::string> abelian_specs(int max_order, const std::vector<int>& primes = {});

// Abelian p-groups only (all partitions with p^|partition| <= max_order).
std::vector<std::string> abelian_p_specs(int p, int max_order);

// The mixed constructor corpus: cyclic, dihedral, quaternion, semidihedral,
// symmetric, abelian, and a few coprime products.
std::vector<std::string> standard_corpus(int max_order);

std::vector<std::string> nilpotent_corpus(int max_order);

std::vector<std::string> p_group_corpus(int max_order);

// Coprime factor pairs used for the product-decomposition claims.
std::vector<std::pair<std::string, std::string>> coprime_pairs();

// Q8 x (Z2)^n x A for n <= 2 and odd abelian A of order 1, 3, 9, 5.
std::vector<std::string> hamiltonian_specs();

}  // namespace solqsol
