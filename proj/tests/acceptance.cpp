// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Criterion 7 exercises the installed CLI binary (path taken from
// the STRATA_CLI environment variable) as a black box.

#include "strata/exceptional.hpp"
#include "strata/signed_classes.hpp"
#include "strata/slodowy.hpp"
#include "strata/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace strata;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok,
            const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << name;
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

// --- criterion 1: elliptic census ------------------------------------------

void criterion_elliptic_census() {
    std::vector<std::string> names{"G2", "F4", "E6"};
    if (std::getenv("STRATA_OPT_IN_E7")) names.push_back("E7");
    std::string detail;
    bool ok = true;
    for (const auto& name : names) {
        CrosscheckResult r = crosscheck(name);
        if (!r.ok()) {
            ok = false;
            detail += name + ": " + r.failures.front() + "; ";
        }
    }
    report(1, "elliptic census vs tables (" + std::to_string(names.size()) + " groups)",
           ok, detail);
}

// --- criterion 2: table self-consistency ------------------------------------

void criterion_table_consistency() {
    std::string detail;
    bool ok = true;
    try {
        validate_tables();  // degree = rank, no Phi_1, subscript identity, unique C_ex
        std::size_t rows = 0;
        for (const auto& name : {"G2", "F4", "E6", "E7", "E8"})
            rows += exceptional_table(name).size();
        if (rows != 59) {
            ok = false;
            detail = "expected 59 rows, found " + std::to_string(rows);
        }
        for (const auto& r : exceptional_table("E8"))
            if (r.gamma_name == "4A_1" && r.predicted_fiber_size() != 5) {
                ok = false;
                detail = "4A_1 row predicts " + std::to_string(r.predicted_fiber_size());
            }
    } catch (const std::exception& ex) {
        ok = false;
        detail = ex.what();
    }
    report(2, "exceptional table self-consistency (59 rows)", ok, detail);
}

// --- criterion 3: classical worked examples ---------------------------------

struct BasicSummary {
    std::vector<std::string> h;
    std::vector<std::size_t> sizes;
};

BasicSummary basic_summary(Kind kind, int n) {
    BasicSummary s;
    std::multimap<std::size_t, std::string> ordered;
    for (const auto& row : strata_table(kind, n))
        if (row.basic) ordered.insert({row.members.size(), row.h.str()});
    for (const auto& [size, h] : ordered) {
        s.sizes.push_back(size);
        s.h.push_back(h);
    }
    return s;
}

void criterion_worked_examples() {
    bool ok = true;
    std::string detail;

    BasicSummary c2 = basic_summary(Kind::C, 2);
    if (c2.sizes != std::vector<std::size_t>{1, 1} ||
        c2.h != std::vector<std::string>{"{1}", "{1}"}) {
        ok = false;
        detail += "C2 basic strata off; ";
    }
    for (Kind kind : {Kind::C, Kind::D}) {
        int n = kind == Kind::C ? 3 : 4;
        BasicSummary s = basic_summary(kind, n);
        if (s.sizes != std::vector<std::size_t>{1, 1, 2} ||
            s.h != std::vector<std::string>{"{1}", "{1}", "C1"}) {
            ok = false;
            detail += std::string(kind == Kind::C ? "C3" : "D4") + " basic strata off; ";
        }
    }
    report(3, "classical worked examples (C2, C3, D4)", ok, detail);
}

// --- criteria 4 and 5: counting laws and oracle equivalence -----------------

void criterion_counting_laws() {
    CheckResult all;
    for (Kind kind : {Kind::B, Kind::C, Kind::D})
        for (int n = kind == Kind::D ? 4 : 2; n <= 8; ++n) all.merge(strata_laws(kind, n));
    report(4, "fiber and mu laws, B/C/D ranks <= 8 (" + std::to_string(all.checks) +
           " checks)", all.ok(), all.ok() ? "" : all.failures.front());
}

void criterion_oracle() {
    CheckResult all;
    for (Kind kind : {Kind::B, Kind::C, Kind::D})
        for (int n = kind == Kind::D ? 4 : 2; n <= 5; ++n)
            all.merge(oracle_equivalence(kind, n));
    report(5, "brute-force oracle equivalence, B/C/D ranks <= 5 (" +
           std::to_string(all.checks) + " checks)", all.ok(),
           all.ok() ? "" : all.failures.front());
}

// --- criterion 6: slice suite ------------------------------------------------

void criterion_slice() {
    SliceReport rep = slice_suite(20240817, 1000, 60);
    bool ok = rep.ok() && rep.samples >= 1000;
    report(6, "sp4 slice suite (" + std::to_string(rep.samples) + " samples, " +
           std::to_string(rep.preimage_checks) + " preimage checks)", ok,
           ok ? "" : rep.violations.front());
}

// --- criterion 7: determinism of the CLI -------------------------------------

std::string run_capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) {
        status = -1;
        return out;
    }
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    status = pclose(p);
    return out;
}

void criterion_determinism() {
    const char* cli = std::getenv("STRATA_CLI");
    if (!cli) {
        report(7, "CLI determinism", false, "STRATA_CLI not set");
        return;
    }
    std::vector<std::string> cmds{
        std::string(cli) + " strata --type C3 --format json",
        std::string(cli) + " strata --type D4 --format tsv",
        std::string(cli) + " elliptic --type E8 --format json",
        std::string(cli) + " verify slodowy --seed 99 --samples 150 --format json",
        std::string(cli) + " verify lengths:G2 --format text",
    };
    bool ok = true;
    std::string detail;
    for (const auto& cmd : cmds) {
        int s1 = 0, s2 = 0;
        std::string a = run_capture(cmd, s1);
        std::string b = run_capture(cmd, s2);
        if (a.empty() || a != b || s1 != s2 || s1 != 0) {
            ok = false;
            detail += "mismatch or failure for: " + cmd + "; ";
        }
    }
    report(7, "CLI determinism (byte-identical structured output)", ok, detail);
}

}  // namespace

int main() {
    criterion_elliptic_census();
    criterion_table_consistency();
    criterion_worked_examples();
    criterion_counting_laws();
    criterion_oracle();
    criterion_slice();
    criterion_determinism();
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
