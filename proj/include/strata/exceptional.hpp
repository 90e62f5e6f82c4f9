// Machine-checkable elliptic class tables for G2, F4, E6, E7, E8.
//
// The rows live in one authoritative JSON file (data/elliptic_tables.json),
// guarded by a pinned checksum; this module only loads, validates, and
// cross-checks them against brute-force enumeration.  The default file path
// can be overridden with the STRATA_TABLE_FILE environment variable (the
// checksum pin is skipped for overridden files).

#pragma once

#include "strata/brute_force.hpp"
#include "strata/poly.hpp"
#include "strata/signed_classes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace strata {

struct EllipticRow {
    int min_length;
    CyclotomicProduct charpoly;
    std::optional<std::string> disambiguator;  // "'" or "''"
    std::string gamma_name;                    // Spaltenstein notation
    int springer_degree;
    int springer_subscript;                    // = (min_length - rank) / 2
    CentralizerType h;
    int p_c;                                   // 0, 2 or 3
    bool is_c_ex;

    std::uint64_t predicted_fiber_size() const;  // prod (n_j + 1); 3 for C_ex
};

// Rank of the group a table name refers to ("G2" -> 2, ..., "E8" -> 8).
int exceptional_rank(const std::string& name);

// Loads and validates one table; throws on checksum mismatch, invalid rows,
// or unknown name.  name is one of G2, F4, E6, E7, E8.
std::vector<EllipticRow> exceptional_table(const std::string& name);

// Validates the per-row invariants (degree = rank, no Phi_1 factor,
// subscript identity, the unique C_ex row); throws std::logic_error listing
// the first offending row.
void validate_tables();

struct CrosscheckResult {
    std::string name;
    std::size_t table_rows = 0;
    std::size_t elliptic_classes = 0;
    std::vector<std::string> failures;  // empty = pass

    bool ok() const { return failures.empty(); }
};

// Compares brute-force elliptic classes of W(name) against the table:
// class count, the multiset of (char poly, min length), mu = 0 throughout,
// and count 2 for the equal-polynomial pairs.
CrosscheckResult crosscheck(const std::string& name, std::uint64_t budget = 3000000);

std::string table_file_path();
std::uint64_t fnv1a_file(const std::string& path);

}  // namespace strata
