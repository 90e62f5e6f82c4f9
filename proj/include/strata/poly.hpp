// Integer polynomials and cyclotomic factorization.
//
// Characteristic polynomials of Weyl group elements factor completely into
// cyclotomic polynomials Phi_d; the factorization is found by exact trial
// division over the finite candidate set { d : phi(d) <= deg }.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace strata {

// Coefficients lowest degree first; normalized so the leading entry is nonzero.
struct IntPoly {
    std::vector<std::int64_t> c;

    IntPoly() : c{0} {}
    explicit IntPoly(std::vector<std::int64_t> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.size() == 1 && c[0] == 0; }
    bool monic() const { return c.back() == 1; }
    bool operator==(const IntPoly& o) const = default;

    static IntPoly one() { return IntPoly({1}); }
    static IntPoly x_pow_minus(int k, std::int64_t constant);  // x^k + constant
};

IntPoly mul(const IntPoly& p, const IntPoly& q);
// Exact division; second member of the pair is false when the remainder is nonzero.
std::pair<IntPoly, bool> div_exact(const IntPoly& p, const IntPoly& q);

int euler_phi(int d);
const IntPoly& cyclotomic(int d);  // Phi_d, memoized

// Multiset of (d, multiplicity) pairs with sum phi(d)*mult = source degree.
struct CyclotomicProduct {
    std::vector<std::pair<int, int>> factors;  // sorted by d

    int multiplicity_of(int d) const;
    IntPoly expand() const;
    std::string str() const;  // e.g. "Phi2^2 Phi6"
    bool operator==(const CyclotomicProduct& o) const = default;
    auto operator<=>(const CyclotomicProduct& o) const = default;
};

// Complete factorization into cyclotomics; throws std::invalid_argument when
// the input is not such a product (cannot happen for Weyl elements).
CyclotomicProduct cyclotomic_factor(const IntPoly& p);

std::string poly_str(const IntPoly& p);

}  // namespace strata
