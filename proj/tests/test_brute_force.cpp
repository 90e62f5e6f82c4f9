#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/brute_force.hpp"
#include "strata/signed_classes.hpp"

#include <numeric>
#include <stdexcept>

using namespace strata;

TEST_CASE("enumeration: orders, lengths, determinism") {
    RootSystem g2 = build_root_system(Kind::G, 2);
    GroupTable t = enumerate_group(g2);
    CHECK(t.elements.size() == 12);
    CHECK(t.max_length() == 6);  // number of positive roots
    CHECK(t.length[0] == 0);
    CHECK(is_identity(t.matrix_of(0)));
    for (int i = 0; i < 2; ++i) CHECK(t.length[t.find(g2.simple_reflections[i])] == 1);

    CHECK(enumerate_group(build_root_system(Kind::C, 3)).elements.size() == 48);

    GroupTable f4 = enumerate_group(build_root_system(Kind::F, 4));
    CHECK(f4.elements.size() == 1152);
    CHECK(f4.max_length() == 24);

    SUBCASE("two runs produce identical element order") {
        GroupTable t2 = enumerate_group(g2);
        CHECK(t2.elements == t.elements);
        CHECK(t2.length == t.length);
    }
}

TEST_CASE("budget refusal names the order") {
    RootSystem e6 = build_root_system(Kind::E, 6);
    CHECK_THROWS_AS(enumerate_group(e6, 1000), std::length_error);
    CHECK(enumerate_group(e6).elements.size() == 51840);
}

TEST_CASE("conjugacy classes: counts and partition property") {
    auto check_group = [](Kind kind, int rank, std::size_t order, std::size_t n_classes) {
        RootSystem rs = build_root_system(kind, rank);
        GroupTable t = enumerate_group(rs);
        auto classes = conjugacy_classes(t);
        CHECK(classes.size() == n_classes);
        std::size_t total = 0;
        bool identity_singleton = false;
        for (const auto& c : classes) {
            total += c.size();
            CHECK(order % c.size() == 0);
            if (c.representative == 0) {
                CHECK(c.size() == 1);
                CHECK(c.min_length == 0);
                identity_singleton = true;
            }
        }
        CHECK(total == order);
        CHECK(identity_singleton);
        return classes;
    };

    check_group(Kind::G, 2, 12, 6);
    check_group(Kind::C, 2, 8, 5);
    check_group(Kind::F, 4, 1152, 25);
    auto d4 = check_group(Kind::D, 4, 192, 13);

    SUBCASE("class invariants are genuinely constant on the class") {
        RootSystem rs = build_root_system(Kind::C, 3);
        GroupTable t = enumerate_group(rs);
        for (const auto& c : conjugacy_classes(t))
            for (int id : c.members) {
                WeylElement w{t.matrix_of(id)};
                CHECK(cyclotomic_factor(char_poly(w)) == c.charpoly);
                CHECK(mu(w) == c.mu);
            }
    }
}

TEST_CASE("elliptic classes") {
    auto count_elliptic = [](Kind kind, int rank) {
        RootSystem rs = build_root_system(kind, rank);
        GroupTable t = enumerate_group(rs);
        return elliptic_classes(conjugacy_classes(t)).size();
    };
    CHECK(count_elliptic(Kind::G, 2) == 3);
    CHECK(count_elliptic(Kind::C, 2) == 2);
    CHECK(count_elliptic(Kind::C, 3) == 3);

    SUBCASE("mu = 0 exactly on the filtered set") {
        RootSystem rs = build_root_system(Kind::D, 4);
        GroupTable t = enumerate_group(rs);
        auto classes = conjugacy_classes(t);
        auto ell = elliptic_classes(classes);
        std::size_t with_mu0 = 0;
        for (const auto& c : classes)
            if (c.mu == 0) ++with_mu0;
        CHECK(ell.size() == with_mu0);
        for (const auto& c : ell) CHECK(c.mu == 0);
    }
}

TEST_CASE("minimal length of the Coxeter class equals the rank") {
    for (auto [kind, rank] : {std::pair{Kind::G, 2}, {Kind::C, 2}, {Kind::C, 3},
                              {Kind::D, 4}, {Kind::F, 4}}) {
        RootSystem rs = build_root_system(kind, rank);
        GroupTable t = enumerate_group(rs);
        IntMat cox = IntMat::identity(rank);
        for (const auto& s : rs.simple_reflections) cox = mul(cox, s);
        int id = t.find(cox);
        REQUIRE(id >= 0);
        CHECK(t.length[id] == rank);
        for (const auto& c : conjugacy_classes(t))
            if (std::find(c.members.begin(), c.members.end(), id) != c.members.end())
                CHECK(c.min_length == rank);
    }
}
