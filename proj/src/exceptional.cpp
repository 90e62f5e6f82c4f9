#include "strata/exceptional.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <stdexcept>

#ifndef STRATA_DATA_DIR
#define STRATA_DATA_DIR "."
#endif

namespace strata {

namespace {

constexpr std::uint64_t kTableChecksum = 0x59a803fcff1dc138ull;

const std::map<std::string, int>& rank_table() {
    static const std::map<std::string, int> t{
        {"G2", 2}, {"F4", 4}, {"E6", 6}, {"E7", 7}, {"E8", 8}};
    return t;
}

const std::map<std::string, std::size_t>& row_counts() {
    static const std::map<std::string, std::size_t> t{
        {"G2", 3}, {"F4", 9}, {"E6", 5}, {"E7", 12}, {"E8", 30}};
    return t;
}

}  // namespace

std::string table_file_path() {
    if (const char* env = std::getenv("STRATA_TABLE_FILE")) return env;
    return std::string(STRATA_DATA_DIR) + "/elliptic_tables.json";
}

std::uint64_t fnv1a_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open table file: " + path);
    std::uint64_t h = 14695981039346656037ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t EllipticRow::predicted_fiber_size() const {
    return is_c_ex ? 3 : h.predicted_fiber_size();
}

int exceptional_rank(const std::string& name) {
    auto it = rank_table().find(name);
    if (it == rank_table().end()) throw std::invalid_argument("unknown exceptional type: " + name);
    return it->second;
}

namespace {

nlohmann::json load_document() {
    const std::string path = table_file_path();
    const bool overridden = std::getenv("STRATA_TABLE_FILE") != nullptr;
    if (!overridden && fnv1a_file(path) != kTableChecksum)
        throw std::runtime_error("elliptic table file checksum mismatch: " + path);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file: " + path);
    return nlohmann::json::parse(in);
}

std::vector<EllipticRow> parse_table(const std::string& name) {
    static nlohmann::json doc = load_document();
    const auto& tables = doc.at("tables");
    if (!tables.contains(name)) throw std::invalid_argument("no table for type: " + name);
    std::vector<EllipticRow> rows;
    for (const auto& j : tables.at(name)) {
        EllipticRow r;
        r.min_length = j.at("l").get<int>();
        for (const auto& f : j.at("cp"))
            r.charpoly.factors.emplace_back(f.at(0).get<int>(), f.at(1).get<int>());
        std::sort(r.charpoly.factors.begin(), r.charpoly.factors.end());
        if (!j.at("tag").is_null()) r.disambiguator = j.at("tag").get<std::string>();
        r.gamma_name = j.at("gamma").get<std::string>();
        r.springer_degree = j.at("rep").at(0).get<int>();
        r.springer_subscript = j.at("rep").at(1).get<int>();
        r.h.ranks = j.at("h").get<std::vector<int>>();
        std::sort(r.h.ranks.rbegin(), r.h.ranks.rend());
        r.p_c = j.at("pC").get<int>();
        r.is_c_ex = j.at("cex").get<bool>();
        rows.push_back(std::move(r));
    }
    return rows;
}

void validate_rows(const std::string& name, const std::vector<EllipticRow>& rows) {
    const int rank = exceptional_rank(name);
    if (rows.size() != row_counts().at(name))
        throw std::logic_error(name + ": unexpected row count " + std::to_string(rows.size()));
    for (const auto& r : rows) {
        const std::string where = name + " row l=" + std::to_string(r.min_length) +
                                  " " + r.charpoly.str();
        int deg = 0;
        for (auto [d, m] : r.charpoly.factors) {
            if (d == 1) throw std::logic_error(where + ": Phi_1 factor in an elliptic row");
            deg += euler_phi(d) * m;
        }
        if (deg != rank) throw std::logic_error(where + ": charpoly degree != rank");
        if (r.springer_subscript != (r.min_length - rank) / 2 ||
            (r.min_length - rank) % 2 != 0)
            throw std::logic_error(where + ": subscript != (l - r)/2");
        if (r.p_c != 0 && r.p_c != 2 && r.p_c != 3)
            throw std::logic_error(where + ": p_C out of range");
    }
}

}  // namespace

std::vector<EllipticRow> exceptional_table(const std::string& name) {
    auto rows = parse_table(name);
    validate_rows(name, rows);
    return rows;
}

void validate_tables() {
    std::size_t cex_count = 0;
    for (const auto& [name, rank] : rank_table()) {
        auto rows = exceptional_table(name);
        for (const auto& r : rows) {
            if (!r.is_c_ex) continue;
            ++cex_count;
            if (name != "E8" || r.min_length != 44 ||
                r.h.ranks != std::vector<int>{1, 1} || r.predicted_fiber_size() != 3)
                throw std::logic_error("C_ex row has wrong data");
        }
    }
    if (cex_count != 1) throw std::logic_error("expected exactly one C_ex row");
}

CrosscheckResult crosscheck(const std::string& name, std::uint64_t budget) {
    CrosscheckResult res;
    res.name = name;
    auto rows = exceptional_table(name);
    res.table_rows = rows.size();

    const int rank = exceptional_rank(name);
    Kind kind = name[0] == 'G' ? Kind::G : name[0] == 'F' ? Kind::F : Kind::E;
    RootSystem rs = build_root_system(kind, rank);
    GroupTable table = enumerate_group(rs, budget);
    auto classes = conjugacy_classes(table);
    auto elliptic = elliptic_classes(classes);
    res.elliptic_classes = elliptic.size();

    if (elliptic.size() != rows.size())
        res.failures.push_back("elliptic class count " + std::to_string(elliptic.size()) +
                               " != table rows " + std::to_string(rows.size()));

    using Key = std::pair<CyclotomicProduct, int>;
    std::map<Key, int> expected, found;
    for (const auto& r : rows) ++expected[{r.charpoly, r.min_length}];
    for (const auto& c : elliptic) {
        ++found[{c.charpoly, c.min_length}];
        if (c.mu != 0)
            res.failures.push_back("class " + c.charpoly.str() + " has mu != 0");
    }
    for (const auto& [key, cnt] : expected) {
        auto it = found.find(key);
        int got = it == found.end() ? 0 : it->second;
        if (got != cnt)
            res.failures.push_back("row (" + key.first.str() + ", l=" +
                                   std::to_string(key.second) + "): expected " +
                                   std::to_string(cnt) + " class(es), found " +
                                   std::to_string(got));
    }
    for (const auto& [key, cnt] : found)
        if (!expected.count(key))
            res.failures.push_back("unexpected elliptic class (" + key.first.str() +
                                   ", l=" + std::to_string(key.second) + ")");
    // disambiguated pairs must account for the rows sharing an invariant pair
    for (const auto& r : rows)
        if (r.disambiguator && expected[{r.charpoly, r.min_length}] != 2)
            res.failures.push_back("disambiguated row not part of a pair: " + r.charpoly.str());
    return res;
}

}  // namespace strata
