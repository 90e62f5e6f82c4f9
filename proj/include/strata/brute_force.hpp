// Independent oracle: full enumeration of small Weyl groups with Coxeter
// lengths (BFS word length from the identity) and conjugacy classes computed
// as orbits under conjugation by the generators.
//
// Elements are stored as packed int8 matrices (root-basis entries are bounded
// by the highest-root coefficients, <= 6 for every supported type), keyed by
// their bytes.  Enumeration order is deterministic: BFS layer by layer, with
// generators applied in index order.

#pragma once

#include "strata/root_system.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace strata {

struct GroupTable {
    const RootSystem* rs = nullptr;
    int n = 0;
    std::vector<std::string> elements;  // n*n int8 entries, row-major
    std::unordered_map<std::string, int> index;
    std::vector<int> length;

    IntMat matrix_of(int id) const;
    int find(const IntMat& m) const;  // -1 when absent
    int max_length() const;
};

struct ConjClass {
    std::vector<int> members;  // sorted element ids
    int representative;        // lowest id
    CyclotomicProduct charpoly;
    int mu;
    int min_length;

    std::size_t size() const { return members.size(); }
};

// Throws std::length_error when the known group order exceeds the budget.
GroupTable enumerate_group(const RootSystem& rs, std::uint64_t budget = 3000000);

std::vector<ConjClass> conjugacy_classes(const GroupTable& t);
std::vector<ConjClass> elliptic_classes(const std::vector<ConjClass>& classes);

}  // namespace strata
