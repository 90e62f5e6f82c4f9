// Conjugacy classes of the classical Weyl groups W(B_n) = W(C_n) and W(D_n)
// as signed cycle types, the map from classes to unipotent-class labels, the
// fibers of that map (the strata), and the modified centralizer types.
//
// A class is carried by a bipartition (alpha, beta): alpha lists the sizes of
// positive cycles, beta the sizes of negative cycles, |alpha| + |beta| = n.
// In type D the number of negative cycles is even, and cycle types with beta
// empty and every part of alpha even split into two classes tagged I / II.
//
// The 2n-point model: a positive k-cycle contributes two k-cycles of the
// point set, a negative k-cycle one 2k-cycle stable under the flip; CycleDatum
// records the resulting multiplicities (nu_i for odd i; nu'_i, nu''_i for
// even i, where nu'_i counts flip-stable cycles).

#pragma once

#include "strata/root_system.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace strata {

enum class SplitTag { I, II };

using Partition = std::vector<int>;  // parts in decreasing order

struct SignedClass {
    Partition alpha;
    Partition beta;
    std::optional<SplitTag> split;  // type D degenerate classes only

    int n() const;
    std::string str() const;
    bool operator==(const SignedClass& o) const = default;
    auto operator<=>(const SignedClass& o) const = default;
};

struct CycleDatum {
    std::map<int, int> nu_odd;     // odd i -> nu_i (even values)
    std::map<int, int> nu_prime;   // even i -> nu'_i
    std::map<int, int> nu_dprime;  // even i -> nu''_i (even values)
    std::optional<SplitTag> split;

    int total() const;  // sum over i of i * nu_i, equals 2n
    bool operator==(const CycleDatum& o) const = default;
    auto operator<=>(const CycleDatum& o) const = default;
};

struct StratumLabel {
    std::map<int, int> nu;        // Jordan multiplicities, sum i*nu_i = 2n
    std::map<int, int> eps;       // even i with nu_i > 0 even -> {0,1}
    std::optional<SplitTag> very_even;  // type D only

    std::string str() const;  // "2^4[1]", "6 2", "4^2[0] (I)", ...
    bool operator==(const StratumLabel& o) const = default;
    auto operator<=>(const StratumLabel& o) const = default;
};

struct CentralizerType {
    std::vector<int> ranks;  // n_j >= 1, sorted decreasing; empty = trivial group

    std::uint64_t predicted_fiber_size() const;  // prod (n_j + 1)
    std::string str() const;                     // "C1 x C1", "{1}"
    bool operator==(const CentralizerType& o) const = default;
    auto operator<=>(const CentralizerType& o) const = default;
};

// Complete duplicate-free class list; type D emits split pairs tagged I / II.
std::vector<SignedClass> classes_classical(Kind kind, int n);

CycleDatum to_cycle_datum(const SignedClass& c);
SignedClass from_cycle_datum(const CycleDatum& d);

StratumLabel phi(const CycleDatum& d);
std::vector<CycleDatum> fiber(const StratumLabel& s);
CentralizerType h_type(const StratumLabel& s);

// Number of positive cycles = dimension of the fixed space of any
// representative on the reflection representation.
int mu_of(const CycleDatum& d);

// All multiplicities even-sized with eps = 1 wherever defined: the image of
// the elliptic classes.
bool is_basic(const StratumLabel& s);

struct StratumRow {
    StratumLabel label;
    CentralizerType h;
    std::vector<SignedClass> members;  // the fiber, as classes
    std::vector<int> mu_values;        // sorted, one per member
    bool basic;
};

// One row per stratum of W(kind, n); fiber sizes sum to the class count.
std::vector<StratumRow> strata_table(Kind kind, int n);

// A representative matrix in the simple-root basis whose signed-permutation
// action has exactly the cycle type of c.  Tag II conjugates by the sign
// flip on the last coordinate.
WeylElement realize(const SignedClass& c, const RootSystem& rs);

// Expected char poly of any representative: prod (x^k - 1) prod (x^k + 1).
IntPoly class_char_poly(const SignedClass& c);

std::string partition_str(const Partition& p);

}  // namespace strata
