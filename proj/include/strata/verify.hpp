// Invariant suites shared by the CLI `verify` command and the acceptance
// tests: oracle equivalence of the signed-cycle combinatorics against brute
// force, and the fiber/centralizer counting laws for the classical strata.

#pragma once

#include "strata/brute_force.hpp"
#include "strata/signed_classes.hpp"

#include <string>
#include <vector>

namespace strata {

struct CheckResult {
    std::string name;
    std::size_t checks = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void merge(const CheckResult& other);
};

// Brute-force oracle comparison for one classical group: class counts agree;
// realized representatives induce a bijection between signed classes and
// enumerated classes preserving (char poly, mu); realized char polys equal
// prod (x^k - 1) prod (x^k + 1).
CheckResult oracle_equivalence(Kind kind, int n, std::uint64_t budget = 3000000);

// Counting laws over all strata of W(kind, n): enumerated fiber = computed
// fiber = prod (n_j + 1); fiber sizes partition the class count; mu multiset
// equals the minimum-shifted box law over the centralizer ranks; the elliptic
// classes biject onto the basic labels (with mu minimum 0 there).
CheckResult strata_laws(Kind kind, int n);

}  // namespace strata
