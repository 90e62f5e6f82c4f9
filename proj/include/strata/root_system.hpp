// Root systems and their Weyl groups acting on the root lattice.
//
// The reflection representation is realized by integer matrices in the
// simple-root basis so that all invariants (fixed-space dimension, exact
// characteristic polynomial) can be computed without rounding.  Simple roots
// are numbered as in Bourbaki; see docs/notation.md.

#pragma once

#include "strata/linalg.hpp"
#include "strata/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace strata {

enum class Kind { A, B, C, D, E, F, G };

char kind_letter(Kind k);
Kind kind_from_letter(char c);

struct RootSystem {
    Kind kind;
    int rank;
    IntMat cartan;                        // cartan.at(i,j) = <alpha_j, alpha_i^vee>
    std::vector<IntMat> simple_reflections;

    std::string name() const;             // "C3", "E8", ...
    std::uint64_t group_order() const;    // |W|, from the classical formulas
};

// Throws std::invalid_argument for (kind, rank) pairs that are not a simple
// type: A_n n>=1, B_n n>=2, C_n n>=2, D_n n>=4, E_6/7/8, F_4, G_2.
RootSystem build_root_system(Kind kind, int rank);

struct WeylElement {
    IntMat matrix;
};

IntPoly char_poly(const WeylElement& w);
// Dimension of the 1-eigenspace on the reflection representation.
int mu(const WeylElement& w);

}  // namespace strata
