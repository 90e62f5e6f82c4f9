// Exact dense linear algebra over Z and Q.
//
// Weyl group elements are small integer matrices in the simple-root basis;
// everything downstream (fixed-space dimensions, characteristic polynomials,
// centralizer ranks) needs exact answers, so ranks are computed by
// fraction-free (Bareiss) elimination over GMP integers and characteristic
// polynomials by Faddeev-LeVerrier over the rationals.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace strata {

// Square integer matrix, row-major.  Entries stay tiny for Weyl elements
// (bounded by the coefficients of the highest root), so int64 is ample.
struct IntMat {
    int n = 0;
    std::vector<std::int64_t> a;

    IntMat() = default;
    explicit IntMat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0) {}

    std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

    static IntMat identity(int dim);
    bool operator==(const IntMat& o) const = default;
};

IntMat mul(const IntMat& x, const IntMat& y);
bool is_identity(const IntMat& m);

// FNV-1a over the entries; used to key hash tables during group enumeration.
std::uint64_t hash_mat(const IntMat& m);

// Rank by fraction-free Gaussian elimination (Bareiss).  Exact.
int rank_bareiss(std::vector<std::vector<mpz_class>> m);
int rank_of(const IntMat& m);

// Rank of a rational matrix: rows are scaled integral, then Bareiss.
int rank_rational(const std::vector<std::vector<mpq_class>>& m);

// dim ker(m - id); the fixed-space dimension of the matrix.
int fixed_space_dim(const IntMat& m);

// Monic characteristic polynomial det(xI - m), coefficients lowest degree
// first, computed by Faddeev-LeVerrier over exact rationals.
std::vector<std::int64_t> char_poly_coeffs(const IntMat& m);

// Multiplicative order; throws if it exceeds the cap (non-finite input).
int matrix_order(const IntMat& m, int cap = 1000);

}  // namespace strata
