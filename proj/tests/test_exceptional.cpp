#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "strata/exceptional.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>

using namespace strata;

TEST_CASE("row counts and global validation") {
    CHECK(exceptional_table("G2").size() == 3);
    CHECK(exceptional_table("F4").size() == 9);
    CHECK(exceptional_table("E6").size() == 5);
    CHECK(exceptional_table("E7").size() == 12);
    CHECK(exceptional_table("E8").size() == 30);
    CHECK_THROWS_AS(exceptional_table("H3"), std::invalid_argument);
    CHECK_NOTHROW(validate_tables());
}

TEST_CASE("named rows") {
    auto g2 = exceptional_table("G2");
    CHECK(g2[0].min_length == 2);
    CHECK(g2[0].charpoly.str() == "Phi6");
    CHECK(g2[0].gamma_name == "G_2");
    CHECK(g2[0].springer_degree == 1);
    CHECK(g2[0].springer_subscript == 0);
    CHECK(g2[0].h.ranks.empty());
    CHECK(g2[0].predicted_fiber_size() == 1);

    auto e8 = exceptional_table("E8");
    const EllipticRow& last = e8.back();
    CHECK(last.min_length == 120);
    CHECK(last.charpoly == CyclotomicProduct{{{2, 8}}});
    CHECK(last.gamma_name == "4A_1");
    CHECK(last.springer_degree == 50);
    CHECK(last.springer_subscript == 56);
    CHECK(last.h.ranks == std::vector<int>{4});
    CHECK(last.predicted_fiber_size() == 5);

    SUBCASE("the F4 pair at l = 10 is disambiguated") {
        std::vector<EllipticRow> pair;
        for (const auto& r : exceptional_table("F4"))
            if (r.min_length == 10) pair.push_back(r);
        REQUIRE(pair.size() == 2);
        CHECK(pair[0].charpoly == pair[1].charpoly);
        CHECK(pair[0].charpoly.str() == "Phi2^2 Phi6");
        std::set<std::string> tags;
        for (const auto& r : pair) {
            REQUIRE(r.disambiguator.has_value());
            tags.insert(*r.disambiguator);
        }
        CHECK(tags == std::set<std::string>{"'", "''"});
        CHECK(pair[0].gamma_name != pair[1].gamma_name);  // B_3 vs C_3
    }

    SUBCASE("the unique exceptional-fiber row") {
        int found = 0;
        for (const auto& name : {"G2", "F4", "E6", "E7", "E8"})
            for (const auto& r : exceptional_table(name))
                if (r.is_c_ex) {
                    ++found;
                    CHECK(r.min_length == 44);
                    CHECK(r.h.ranks == std::vector<int>{1, 1});
                    CHECK(r.predicted_fiber_size() == 3);  // not the generic 4
                }
        CHECK(found == 1);
    }
}

TEST_CASE("per-row invariants") {
    for (const auto& name : {"G2", "F4", "E6", "E7", "E8"}) {
        int rank = exceptional_rank(name);
        std::map<int, int> length_count;
        for (const auto& r : exceptional_table(name)) {
            int deg = 0;
            for (auto [d, m] : r.charpoly.factors) {
                CHECK(d != 1);  // elliptic: no fixed vectors
                deg += euler_phi(d) * m;
            }
            CHECK(deg == rank);
            CHECK(r.springer_subscript == (r.min_length - rank) / 2);
            CHECK((r.min_length - rank) % 2 == 0);
            CHECK((r.p_c == 0 || r.p_c == 2 || r.p_c == 3));
            ++length_count[r.min_length];
        }
        std::set<int> repeated;
        for (auto [l, cnt] : length_count)
            if (cnt > 1) repeated.insert(l);
        if (std::string(name) == "F4") CHECK(repeated == std::set<int>{10});
        else if (std::string(name) == "E8")
            CHECK(repeated == std::set<int>{16, 22, 24, 26, 44, 46});
        else CHECK(repeated.empty());
    }

    SUBCASE("nonzero p_C rows appear exactly where expected") {
        std::set<std::pair<std::string, int>> nonzero;
        for (const auto& name : {"G2", "F4", "E6", "E7", "E8"})
            for (const auto& r : exceptional_table(name))
                if (r.p_c != 0) nonzero.insert({name, r.min_length});
        CHECK(nonzero == std::set<std::pair<std::string, int>>{
                  {"G2", 6}, {"F4", 14}, {"F4", 16}, {"E8", 26}, {"E8", 30}, {"E8", 34}});
    }
}

TEST_CASE("brute-force crosschecks for the enumerable groups") {
    for (const auto& name : {"G2", "F4", "E6"}) {
        CrosscheckResult r = crosscheck(name);
        CAPTURE(r.name);
        for (const auto& f : r.failures) CAPTURE(f);
        CHECK(r.ok());
        CHECK(r.table_rows == r.elliptic_classes);
    }
}

TEST_CASE("table file integrity") {
    CHECK_NOTHROW(fnv1a_file(table_file_path()));
    CHECK_THROWS_AS(fnv1a_file("/nonexistent/tables.json"), std::runtime_error);

    SUBCASE("corrupted override file is rejected by row validation") {
        const char* tmp = "/tmp/strata_bad_tables.json";
        {
            std::ofstream out(tmp);
            out << R"({"tables":{"G2":[{"l":3,"cp":[[6,1]],"tag":null,)"
                << R"("gamma":"G_2","rep":[1,0],"h":[],"pC":0,"cex":false}]}})";
        }
        // Note: the loader caches the default document; the override path is
        // exercised through a fresh process in the acceptance suite.  Here we
        // check only the checksum primitive against the modified bytes.
        CHECK(fnv1a_file(tmp) != fnv1a_file(table_file_path()));
        std::remove(tmp);
    }
}
