#include "strata/brute_force.hpp"

#include <algorithm>
#include <stdexcept>

namespace strata {

namespace {

std::string pack(const IntMat& m) {
    std::string s(m.a.size(), '\0');
    for (std::size_t k = 0; k < m.a.size(); ++k) {
        std::int64_t v = m.a[k];
        if (v < -127 || v > 127) throw std::overflow_error("matrix entry out of int8 range");
        s[k] = static_cast<char>(static_cast<signed char>(v));
    }
    return s;
}

IntMat unpack(const std::string& s, int n) {
    IntMat m(n);
    for (std::size_t k = 0; k < s.size(); ++k) m.a[k] = static_cast<signed char>(s[k]);
    return m;
}

// z = x * y on packed matrices
std::string pmul(const std::string& x, const std::string& y, int n) {
    std::string z(x.size(), '\0');
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int acc = 0;
            for (int k = 0; k < n; ++k)
                acc += static_cast<signed char>(x[i * n + k]) * static_cast<signed char>(y[k * n + j]);
            if (acc < -127 || acc > 127) throw std::overflow_error("matrix entry out of int8 range");
            z[i * n + j] = static_cast<char>(static_cast<signed char>(acc));
        }
    return z;
}

}  // namespace

IntMat GroupTable::matrix_of(int id) const { return unpack(elements[id], n); }

int GroupTable::find(const IntMat& m) const {
    auto it = index.find(pack(m));
    return it == index.end() ? -1 : it->second;
}

int GroupTable::max_length() const {
    return *std::max_element(length.begin(), length.end());
}

GroupTable enumerate_group(const RootSystem& rs, std::uint64_t budget) {
    const std::uint64_t order = rs.group_order();
    if (order > budget)
        throw std::length_error("group order " + std::to_string(order) +
                                " exceeds enumeration budget " + std::to_string(budget));
    GroupTable t;
    t.rs = &rs;
    t.n = rs.rank;
    std::vector<std::string> gens;
    for (const auto& s : rs.simple_reflections) gens.push_back(pack(s));

    t.elements.reserve(order);
    t.index.reserve(order * 2);
    t.elements.push_back(pack(IntMat::identity(rs.rank)));
    t.index.emplace(t.elements[0], 0);
    t.length.push_back(0);

    std::size_t frontier_begin = 0;
    int depth = 0;
    while (frontier_begin < t.elements.size()) {
        std::size_t frontier_end = t.elements.size();
        ++depth;
        for (std::size_t e = frontier_begin; e < frontier_end; ++e) {
            for (const auto& g : gens) {
                std::string x = pmul(t.elements[e], g, t.n);
                auto [it, inserted] = t.index.emplace(std::move(x), static_cast<int>(t.elements.size()));
                if (inserted) {
                    t.elements.push_back(it->first);
                    t.length.push_back(depth);
                }
            }
        }
        frontier_begin = frontier_end;
    }
    if (t.elements.size() != order)
        throw std::logic_error("enumeration closed at " + std::to_string(t.elements.size()) +
                               " elements, expected " + std::to_string(order));
    return t;
}

std::vector<ConjClass> conjugacy_classes(const GroupTable& t) {
    std::vector<std::string> gens;
    for (const auto& s : t.rs->simple_reflections) gens.push_back(pack(s));

    std::vector<char> seen(t.elements.size(), 0);
    std::vector<ConjClass> out;
    for (std::size_t start = 0; start < t.elements.size(); ++start) {
        if (seen[start]) continue;
        ConjClass cls;
        std::vector<int> stack{static_cast<int>(start)};
        seen[start] = 1;
        while (!stack.empty()) {
            int id = stack.back();
            stack.pop_back();
            cls.members.push_back(id);
            for (const auto& g : gens) {
                // generators are involutions, so g^{-1} x g = g x g
                std::string y = pmul(pmul(g, t.elements[id], t.n), g, t.n);
                int j = t.index.at(y);
                if (!seen[j]) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
            }
        }
        std::sort(cls.members.begin(), cls.members.end());
        cls.representative = cls.members.front();
        WeylElement w{t.matrix_of(cls.representative)};
        cls.charpoly = cyclotomic_factor(char_poly(w));
        cls.mu = mu(w);
        cls.min_length = t.length[cls.members.front()];
        for (int id : cls.members) cls.min_length = std::min(cls.min_length, t.length[id]);
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<ConjClass> elliptic_classes(const std::vector<ConjClass>& classes) {
    std::vector<ConjClass> out;
    for (const auto& c : classes)
        if (c.mu == 0) out.push_back(c);
    return out;
}

}  // namespace strata
