#include "strata/root_system.hpp"

#include <stdexcept>

namespace strata {

char kind_letter(Kind k) {
    switch (k) {
        case Kind::A: return 'A';
        case Kind::B: return 'B';
        case Kind::C: return 'C';
        case Kind::D: return 'D';
        case Kind::E: return 'E';
        case Kind::F: return 'F';
        case Kind::G: return 'G';
    }
    throw std::logic_error("bad kind");
}

Kind kind_from_letter(char c) {
    switch (c) {
        case 'A': return Kind::A;
        case 'B': return Kind::B;
        case 'C': return Kind::C;
        case 'D': return Kind::D;
        case 'E': return Kind::E;
        case 'F': return Kind::F;
        case 'G': return Kind::G;
        default: throw std::invalid_argument(std::string("unknown type letter: ") + c);
    }
}

std::string RootSystem::name() const {
    return std::string(1, kind_letter(kind)) + std::to_string(rank);
}

std::uint64_t RootSystem::group_order() const {
    auto fact = [](int n) {
        std::uint64_t f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };
    switch (kind) {
        case Kind::A: return fact(rank + 1);
        case Kind::B:
        case Kind::C: return (std::uint64_t{1} << rank) * fact(rank);
        case Kind::D: return (std::uint64_t{1} << (rank - 1)) * fact(rank);
        case Kind::G: return 12;
        case Kind::F: return 1152;
        case Kind::E:
            if (rank == 6) return 51840;
            if (rank == 7) return 2903040;
            return 696729600;
    }
    throw std::logic_error("bad kind");
}

namespace {

void validate_type(Kind kind, int rank) {
    bool ok = false;
    switch (kind) {
        case Kind::A: ok = rank >= 1; break;
        case Kind::B: ok = rank >= 2; break;
        case Kind::C: ok = rank >= 2; break;
        case Kind::D: ok = rank >= 4; break;
        case Kind::E: ok = rank >= 6 && rank <= 8; break;
        case Kind::F: ok = rank == 4; break;
        case Kind::G: ok = rank == 2; break;
    }
    if (!ok)
        throw std::invalid_argument("invalid simple type: " + std::string(1, kind_letter(kind)) +
                                    std::to_string(rank));
}

// Bourbaki numbering throughout; cartan.at(i,j) = 2(alpha_i,alpha_j)/(alpha_i,alpha_i).
IntMat build_cartan(Kind kind, int n) {
    IntMat c(n);
    for (int i = 0; i < n; ++i) c.at(i, i) = 2;
    auto link = [&](int i, int j) { c.at(i, j) = -1; c.at(j, i) = -1; };
    switch (kind) {
        case Kind::A:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case Kind::B:  // alpha_n short
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            c.at(n - 1, n - 2) = -2;
            break;
        case Kind::C:  // alpha_n long
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            c.at(n - 2, n - 1) = -2;
            break;
        case Kind::D:
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case Kind::E:
            // chain 1-3-4-5-6(-7-8), node 2 attached to node 4
            link(0, 2);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            link(1, 3);
            break;
        case Kind::F:  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            link(0, 1);
            link(1, 2);
            link(2, 3);
            c.at(2, 1) = -2;
            break;
        case Kind::G:  // alpha_1 short
            c.at(0, 1) = -3;
            c.at(1, 0) = -1;
            break;
    }
    return c;
}

}  // namespace

RootSystem build_root_system(Kind kind, int rank) {
    validate_type(kind, rank);
    RootSystem rs;
    rs.kind = kind;
    rs.rank = rank;
    rs.cartan = build_cartan(kind, rank);
    for (int i = 0; i < rank; ++i) {
        // s_i(alpha_j) = alpha_j - <alpha_j, alpha_i^vee> alpha_i
        IntMat s = IntMat::identity(rank);
        for (int j = 0; j < rank; ++j) s.at(i, j) -= rs.cartan.at(i, j);
        rs.simple_reflections.push_back(std::move(s));
    }
    return rs;
}

IntPoly char_poly(const WeylElement& w) { return IntPoly(char_poly_coeffs(w.matrix)); }

int mu(const WeylElement& w) { return fixed_space_dim(w.matrix); }

}  // namespace strata
