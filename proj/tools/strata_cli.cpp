// Command-line surface: stratum tables, elliptic tables, verification suites.

#include "strata/exceptional.hpp"
#include "strata/report.hpp"
#include "strata/slodowy.hpp"
#include "strata/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

namespace {

using namespace strata;

constexpr std::uint64_t kDefaultSeed = 20240817;

std::string join_mu(const std::vector<int>& mu) {
    std::string out;
    for (int v : mu) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

Report cmd_strata(Kind kind, int rank) {
    Report rep;
    rep.command = "strata";
    rep.params["type"] = std::string(1, kind_letter(kind));
    rep.params["rank"] = std::to_string(rank);
    rep.columns = {"stratum", "basic", "H", "fiber", "predicted", "mu", "classes"};
    auto rows = strata_table(kind, rank);
    std::size_t total = 0;
    for (const auto& r : rows) {
        std::string members;
        for (const auto& c : r.members) {
            if (!members.empty()) members += ' ';
            members += c.str();
        }
        total += r.members.size();
        rep.rows.push_back({r.label.str(), r.basic ? "yes" : "no", r.h.str(),
                            std::to_string(r.members.size()),
                            std::to_string(r.h.predicted_fiber_size()), join_mu(r.mu_values),
                            members});
    }
    rep.params["strata"] = std::to_string(rows.size());
    rep.params["classes"] = std::to_string(total);
    return rep;
}

Report cmd_elliptic(Kind kind, int rank) {
    Report rep;
    rep.command = "elliptic";
    rep.params["type"] = std::string(1, kind_letter(kind)) + (rank ? std::to_string(rank) : "");
    if (kind == Kind::G || kind == Kind::F || kind == Kind::E) {
        std::string name = std::string(1, kind_letter(kind)) + std::to_string(rank);
        rep.columns = {"l", "charpoly", "gamma", "rep", "H", "p_C", "predicted_fiber"};
        for (const auto& r : exceptional_table(name)) {
            std::string cp = r.charpoly.str();
            if (r.disambiguator) cp = "(" + cp + ")" + *r.disambiguator;
            std::string predicted = std::to_string(r.predicted_fiber_size());
            if (r.is_c_ex) predicted += " (C_ex)";
            rep.rows.push_back({std::to_string(r.min_length), cp, r.gamma_name,
                                std::to_string(r.springer_degree) + "_" +
                                    std::to_string(r.springer_subscript),
                                r.h.str(), std::to_string(r.p_c), predicted});
        }
    } else {
        rep.columns = {"stratum", "H", "fiber", "mu", "classes"};
        for (const auto& r : strata_table(kind, rank)) {
            if (!r.basic) continue;
            std::string members;
            for (const auto& c : r.members) {
                if (!members.empty()) members += ' ';
                members += c.str();
            }
            rep.rows.push_back({r.label.str(), r.h.str(), std::to_string(r.members.size()),
                                join_mu(r.mu_values), members});
        }
    }
    return rep;
}

void add_check(Report& rep, const CheckResult& res) {
    std::string detail;
    for (const auto& f : res.failures) {
        if (!detail.empty()) detail += "; ";
        detail += f;
    }
    rep.assert_that(res.name, res.ok(), detail);
}

void verify_lengths(Report& rep, const std::string& name, std::uint64_t budget) {
    auto res = crosscheck(name, budget);
    std::string detail;
    for (const auto& f : res.failures) {
        if (!detail.empty()) detail += "; ";
        detail += f;
    }
    rep.assert_that("lengths:" + name + " (" + std::to_string(res.table_rows) + " rows, " +
                        std::to_string(res.elliptic_classes) + " elliptic classes)",
                    res.ok(), detail);
}

void verify_classical(Report& rep, int n, std::uint64_t budget) {
    for (Kind kind : {Kind::B, Kind::C, Kind::D}) {
        if (kind == Kind::D && n < 4) continue;
        add_check(rep, oracle_equivalence(kind, n, budget));
        add_check(rep, strata_laws(kind, n));
    }
}

void verify_slodowy(Report& rep, std::uint64_t seed, std::size_t samples) {
    auto res = slice_suite(seed, samples);
    std::string detail;
    for (const auto& v : res.violations) {
        if (!detail.empty()) detail += "; ";
        detail += v;
    }
    rep.params["seed"] = std::to_string(res.seed);
    rep.params["slice_samples"] = std::to_string(res.samples);
    std::string counts = "X=" + std::to_string(res.count_X) + " Y=" + std::to_string(res.count_Y);
    for (int k = 0; k < 6; ++k)
        counts += " X" + std::to_string(k + 1) + "=" + std::to_string(res.piece_counts[k]);
    rep.params["slice_counts"] = counts;
    rep.assert_that("slodowy slice suite (" + std::to_string(res.preimage_checks) +
                        " preimage checks)",
                    res.ok(), detail);
}

Report cmd_verify(const std::string& target, std::uint64_t seed, std::uint64_t budget,
                  std::size_t samples, bool opt_in_e7) {
    Report rep;
    rep.command = "verify";
    rep.params["target"] = target;
    if (target.rfind("lengths:", 0) == 0) {
        std::string name = target.substr(8);
        if (name == "E7") {
            if (!opt_in_e7)
                throw CLI::ValidationError(
                    "lengths:E7 enumerates 2,903,040 elements (several hundred MB); "
                    "pass --opt-in-e7 to allow it");
            budget = std::max<std::uint64_t>(budget, 3000000);
        }
        verify_lengths(rep, name, budget);
    } else if (target.rfind("classical-oracle:", 0) == 0) {
        int n = std::stoi(target.substr(17));
        verify_classical(rep, n, budget);
    } else if (target == "slodowy") {
        verify_slodowy(rep, seed, samples);
    } else if (target == "all") {
        for (const char* name : {"G2", "F4", "E6"}) verify_lengths(rep, name, budget);
        if (opt_in_e7) verify_lengths(rep, "E7", std::max<std::uint64_t>(budget, 3000000));
        for (int n = 2; n <= 5; ++n) verify_classical(rep, n, budget);
        for (int n = 6; n <= 8; ++n)
            for (Kind kind : {Kind::B, Kind::C, Kind::D}) add_check(rep, strata_laws(kind, n));
        verify_slodowy(rep, seed, samples);
    } else {
        throw CLI::ValidationError("unknown verify target: " + target);
    }
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weyl group strata tables and verification"};
    app.require_subcommand(1);

    std::string type_str = "C", format = "text", target;
    int rank = 0;
    std::uint64_t seed = kDefaultSeed, budget = 3000000;
    std::size_t samples = 1000;
    bool opt_in_e7 = false;

    auto add_common = [&](CLI::App* cmd, bool needs_type) {
        if (needs_type) {
            cmd->add_option("--type", type_str, "root system type: A,B,C,D,E,F,G or e.g. C3, E8");
            cmd->add_option("--rank", rank, "rank (may also be part of --type)");
        }
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "tsv"}));
    };

    auto* sc_strata = app.add_subcommand("strata", "strata of a classical Weyl group");
    add_common(sc_strata, true);
    auto* sc_elliptic = app.add_subcommand("elliptic", "elliptic strata / exceptional tables");
    add_common(sc_elliptic, true);
    auto* sc_verify = app.add_subcommand(
        "verify", "run a verification suite: lengths:G2|F4|E6|E7, classical-oracle:N, slodowy, all");
    sc_verify->add_option("target", target, "what to verify")->required();
    add_common(sc_verify, false);
    sc_verify->add_option("--seed", seed, "RNG seed for sampled suites");
    sc_verify->add_option("--budget", budget, "group enumeration budget");
    sc_verify->add_option("--samples", samples, "general slice samples");
    sc_verify->add_flag("--opt-in-e7", opt_in_e7, "allow the E7 enumeration");

    CLI11_PARSE(app, argc, argv);

    try {
        auto started = std::chrono::steady_clock::now();
        auto parse_type = [&](bool rank_required) {
            if (type_str.size() > 1 && rank == 0) rank = std::stoi(type_str.substr(1));
            Kind kind = kind_from_letter(type_str[0]);
            if (rank == 0 && rank_required)
                throw CLI::ValidationError("rank required for type " + type_str);
            build_root_system(kind, rank);  // validates the pair
            return kind;
        };

        Report rep;
        if (*sc_strata) {
            Kind kind = parse_type(true);
            if (kind != Kind::B && kind != Kind::C && kind != Kind::D)
                throw CLI::ValidationError("strata: classical type B/C/D expected");
            rep = cmd_strata(kind, rank);
        } else if (*sc_elliptic) {
            Kind kind = parse_type(true);
            rep = cmd_elliptic(kind, rank);
        } else {
            rep = cmd_verify(target, seed, budget, samples, opt_in_e7);
        }

        std::cout << rep.render(format);
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        std::cerr << "# runtime " << elapsed << " ms\n";
        return rep.all_pass() ? 0 : 1;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
