#include "strata/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace strata {

void CheckResult::merge(const CheckResult& other) {
    checks += other.checks;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

CheckResult oracle_equivalence(Kind kind, int n, std::uint64_t budget) {
    CheckResult res;
    res.name = std::string(1, kind_letter(kind)) + std::to_string(n) + " oracle";
    auto fail = [&res](std::string m) { res.failures.push_back(std::move(m)); };

    RootSystem rs = build_root_system(kind, n);
    GroupTable table = enumerate_group(rs, budget);
    auto brute = conjugacy_classes(table);
    auto signed_classes = classes_classical(kind, n);
    ++res.checks;
    if (brute.size() != signed_classes.size()) {
        fail("class count: brute " + std::to_string(brute.size()) + " vs combinatorial " +
             std::to_string(signed_classes.size()));
        return res;
    }

    // map element id -> brute class index
    std::vector<int> class_of(table.elements.size(), -1);
    for (std::size_t ci = 0; ci < brute.size(); ++ci)
        for (int id : brute[ci].members) class_of[id] = static_cast<int>(ci);

    std::set<int> hit;
    for (const auto& c : signed_classes) {
        ++res.checks;
        WeylElement w = realize(c, rs);
        IntPoly expected_cp = class_char_poly(c);
        if (char_poly(w) != expected_cp) {
            fail(c.str() + ": realized char poly != product formula");
            continue;
        }
        int id = table.find(w.matrix);
        if (id < 0) {
            fail(c.str() + ": realized element not in the enumerated group");
            continue;
        }
        int ci = class_of[id];
        if (!hit.insert(ci).second) {
            fail(c.str() + ": two signed classes landed in one brute-force class");
            continue;
        }
        const auto& bc = brute[ci];
        if (bc.charpoly != cyclotomic_factor(expected_cp))
            fail(c.str() + ": char poly mismatch with brute-force class");
        int m = mu_of(to_cycle_datum(c));
        if (bc.mu != m || mu(w) != m)
            fail(c.str() + ": mu mismatch (combinatorial " + std::to_string(m) +
                 ", brute " + std::to_string(bc.mu) + ")");
    }
    ++res.checks;
    if (hit.size() != brute.size()) fail("realized classes do not cover all brute-force classes");
    return res;
}

CheckResult strata_laws(Kind kind, int n) {
    CheckResult res;
    res.name = std::string(1, kind_letter(kind)) + std::to_string(n) + " strata laws";
    auto fail = [&res](std::string m) { res.failures.push_back(std::move(m)); };

    auto rows = strata_table(kind, n);
    auto classes = classes_classical(kind, n);
    std::size_t total = 0;
    std::size_t basic_count = 0;
    std::size_t elliptic_count = 0;
    for (const auto& c : classes)
        if (mu_of(to_cycle_datum(c)) == 0) ++elliptic_count;

    for (const auto& row : rows) {
        ++res.checks;
        total += row.members.size();
        const std::string where = row.label.str();

        auto fib = fiber(row.label);
        std::set<CycleDatum> fib_set(fib.begin(), fib.end());
        std::set<CycleDatum> member_data;
        for (const auto& c : row.members) member_data.insert(to_cycle_datum(c));
        if (fib_set != member_data) fail(where + ": fiber enumeration != grouped classes");
        if (fib.size() != fib_set.size()) fail(where + ": duplicate cycle data in fiber");

        std::uint64_t predicted = row.h.predicted_fiber_size();
        if (predicted != row.members.size())
            fail(where + ": fiber size " + std::to_string(row.members.size()) +
                 " != predicted " + std::to_string(predicted));

        // mu multiset: the box law over centralizer ranks, shifted by the
        // stratum's minimum (zero on basic strata).
        std::vector<int> law{0};
        for (int r : row.h.ranks) {
            std::vector<int> next;
            for (int base : law)
                for (int i = 0; i <= r; ++i) next.push_back(base + i);
            law = std::move(next);
        }
        std::sort(law.begin(), law.end());
        int mu_min = row.mu_values.front();
        for (int& v : law) v += mu_min;
        if (law != row.mu_values) fail(where + ": mu multiset does not follow the box law");

        if (row.basic) {
            ++basic_count;
            if (mu_min != 0) fail(where + ": basic stratum without an elliptic class");
            bool has_elliptic = std::find(row.mu_values.begin(), row.mu_values.end(), 0) !=
                                row.mu_values.end();
            if (!has_elliptic) fail(where + ": basic stratum missing mu = 0 member");
        } else if (mu_min == 0) {
            fail(where + ": elliptic class in a non-basic stratum");
        }
    }
    ++res.checks;
    if (total != classes.size())
        fail("fiber sizes sum to " + std::to_string(total) + ", class count is " +
             std::to_string(classes.size()));
    ++res.checks;
    if (basic_count != elliptic_count)
        fail("elliptic classes (" + std::to_string(elliptic_count) +
             ") do not biject onto basic strata (" + std::to_string(basic_count) + ")");
    return res;
}

}  // namespace strata
