#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/brute_force.hpp"
#include "strata/root_system.hpp"
#include "strata/signed_classes.hpp"

#include <random>

using namespace strata;

namespace {

std::int64_t det_of(const IntMat& m) {
    // det M = (-1)^n p(0) for p = det(xI - M)
    auto p = char_poly_coeffs(m);
    return (m.n % 2 == 0 ? 1 : -1) * p[0];
}

int braid_order(int cij, int cji) {
    switch (cij * cji) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
    }
    return -1;
}

const std::vector<std::pair<Kind, int>> kAllTypes = {
    {Kind::A, 1}, {Kind::A, 4}, {Kind::B, 2}, {Kind::B, 5}, {Kind::C, 3},
    {Kind::D, 4}, {Kind::D, 6}, {Kind::E, 6}, {Kind::E, 7}, {Kind::E, 8},
    {Kind::F, 4}, {Kind::G, 2}};

}  // namespace

TEST_CASE("simple reflections: involutions, det -1, braid relations") {
    for (auto [kind, rank] : kAllTypes) {
        RootSystem rs = build_root_system(kind, rank);
        CAPTURE(rs.name());
        for (int i = 0; i < rank; ++i) {
            const IntMat& s = rs.simple_reflections[i];
            CHECK(is_identity(mul(s, s)));
            CHECK(det_of(s) == -1);
            for (int j = i + 1; j < rank; ++j) {
                int m = braid_order(static_cast<int>(rs.cartan.at(i, j)),
                                    static_cast<int>(rs.cartan.at(j, i)));
                REQUIRE(m > 0);
                IntMat prod = mul(s, rs.simple_reflections[j]);
                CHECK(matrix_order(prod) == m);
            }
        }
    }
}

TEST_CASE("invalid type/rank pairs are rejected") {
    CHECK_THROWS_AS(build_root_system(Kind::A, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(Kind::B, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(Kind::D, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(Kind::E, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(Kind::F, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(Kind::G, 3), std::invalid_argument);
}

TEST_CASE("A1 is the sign flip; small closures have the right order") {
    RootSystem a1 = build_root_system(Kind::A, 1);
    CHECK(a1.simple_reflections[0].at(0, 0) == -1);
    CHECK(matrix_order(a1.simple_reflections[0]) == 2);

    CHECK(enumerate_group(build_root_system(Kind::G, 2)).elements.size() == 12);
    CHECK(enumerate_group(build_root_system(Kind::F, 4)).elements.size() == 1152);
}

TEST_CASE("char poly: identity, G2 Coxeter, negative n-cycle") {
    RootSystem g2 = build_root_system(Kind::G, 2);
    WeylElement cox{mul(g2.simple_reflections[0], g2.simple_reflections[1])};
    CHECK(char_poly(cox) == IntPoly({1, -1, 1}));  // Phi_6
    CHECK(cyclotomic_factor(char_poly(cox)).factors ==
          std::vector<std::pair<int, int>>{{6, 1}});

    for (int r : {2, 5}) {
        WeylElement id{IntMat::identity(r)};
        CyclotomicProduct cp = cyclotomic_factor(char_poly(id));
        CHECK(cp.factors == std::vector<std::pair<int, int>>{{1, r}});
    }

    for (int n : {2, 3, 5}) {
        RootSystem cn = build_root_system(Kind::C, n);
        WeylElement w = realize(SignedClass{{}, {n}, std::nullopt}, cn);
        CHECK(char_poly(w) == IntPoly::x_pow_minus(n, 1));  // x^n + 1
    }
}

TEST_CASE("cyclotomic factorization") {
    CHECK(cyclotomic_factor(IntPoly({1, 1, 1})).factors ==
          std::vector<std::pair<int, int>>{{3, 1}});
    CHECK(cyclotomic_factor(IntPoly({1, 2, 1})).factors ==
          std::vector<std::pair<int, int>>{{2, 2}});
    // Phi_12 expanded independently
    CHECK(cyclotomic(12) == IntPoly({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_factor(IntPoly({1, 0, -1, 0, 1})).factors ==
          std::vector<std::pair<int, int>>{{12, 1}});
    CHECK_THROWS_AS(cyclotomic_factor(IntPoly({-2, 0, 1})), std::invalid_argument);

    SUBCASE("expand round trip") {
        CyclotomicProduct cp{{{1, 1}, {2, 2}, {6, 1}}};
        CHECK(cyclotomic_factor(cp.expand()) == cp);
        CHECK(cp.str() == "Phi1 Phi2^2 Phi6");
    }
}

TEST_CASE("mu: identity, -1 in C4, mixed class in C3") {
    RootSystem c4 = build_root_system(Kind::C, 4);
    CHECK(mu(WeylElement{IntMat::identity(4)}) == 4);
    WeylElement minus_one = realize(SignedClass{{}, {1, 1, 1, 1}, std::nullopt}, c4);
    CHECK(mu(minus_one) == 0);

    RootSystem c3 = build_root_system(Kind::C, 3);
    WeylElement w = realize(SignedClass{{1}, {1, 1}, std::nullopt}, c3);
    CHECK(mu(w) == 1);
}

TEST_CASE("properties on random words: class function, mu = Phi_1 multiplicity, det") {
    std::mt19937_64 rng(7);
    for (auto [kind, rank] : kAllTypes) {
        RootSystem rs = build_root_system(kind, rank);
        std::uniform_int_distribution<int> pick(0, rank - 1);
        for (int trial = 0; trial < 8; ++trial) {
            IntMat w = IntMat::identity(rank);
            for (int k = 0; k < 12; ++k) w = mul(w, rs.simple_reflections[pick(rng)]);
            IntPoly cp = char_poly(WeylElement{w});
            CHECK(mu(WeylElement{w}) == cyclotomic_factor(cp).multiplicity_of(1));
            std::int64_t d = det_of(w);
            CHECK((d == 1 || d == -1));
            CHECK((cp.c[0] == 1 || cp.c[0] == -1));
            // conjugation by a generator fixes the char poly
            const IntMat& s = rs.simple_reflections[pick(rng)];
            CHECK(char_poly(WeylElement{mul(mul(s, w), s)}) == cp);
        }
    }
}
