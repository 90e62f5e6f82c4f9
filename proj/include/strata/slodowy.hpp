// Exact reproduction of the sp4 Slodowy-slice stratification.
//
// sp4 is carried by the ten coordinates (A..J) of the matrix pattern
//
//     [ A  B  C  D ]
//     [ E  F  G  C ]
//     [ H  I -F -B ]
//     [ J  H -E -A ]
//
// with the commutator bracket.  The slice through the subregular nilpotent
// consists of the points q(b,c,d,f,g,i) (pattern with A=E=H=0, J=1), and its
// intersection with the small centralizer-dimension locus decomposes into a
// double cover of affine 3-space (via pi) and a smooth piece.  All arithmetic
// is exact: rationals throughout, one adjoined square root for pi-preimages.

#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace strata {

using Rat = mpq_class;

struct Sp4Element {
    // order: A B C D E F G H I J
    std::array<Rat, 10> c{};

    static Sp4Element from_matrix(const std::array<std::array<Rat, 4>, 4>& m);
    std::array<std::array<Rat, 4>, 4> to_matrix() const;
    bool is_zero() const;
    bool operator==(const Sp4Element& o) const = default;
};

Sp4Element bracket(const Sp4Element& x, const Sp4Element& y);

// 10 - rank(ad x), by exact elimination on the 10x10 matrix of ad x.
int centralizer_dim(const Sp4Element& x);

struct SliceVector {
    Rat b, c, d, f, g, i;

    Rat x() const { return f * f + i * g - d; }
    Sp4Element to_sp4() const;
    std::string str() const;
    bool operator==(const SliceVector& o) const = default;
};

enum class SliceClass { X, Y };
enum class Piece { X1, X2, X3, X4, X5, X6 };
std::string piece_name(Piece p);

// Y iff centralizer dim 2, X iff 4 or 6; any other dimension throws
// (it would contradict the slice trichotomy).
SliceClass classify_slice(const SliceVector& q);

// Dimension of the solution space of the six linear centralizer equations in
// (E,F,G,H,I,J), derived directly from bracket(q, .) = 0 with A = 0 and
// B, C, D eliminated.  Equals centralizer_dim(q).
int centralizer_system_nullity(const SliceVector& q);

// The six centralizer equations as rows over (E,F,G,H,I,J), in the order
// (b)..(g).  Exposed so tests can pin them against the bracket derivation.
std::vector<std::array<Rat, 6>> centralizer_equations(const SliceVector& q);
// The same system read off bracket(q, .) = 0 (10 rows, rank-equivalent).
std::vector<std::array<Rat, 6>> derived_centralizer_system(const SliceVector& q);

bool in_Xtilde(const SliceVector& q);        // fd-bc = gd-c^2 = di+b^2 = gi+f^2 = 0
bool in_Xdoubleprime(const SliceVector& q);  // b = c = 0, f^2+ig-d = 0
std::optional<Piece> piece_of(const SliceVector& q);  // nullopt on Y; throws on overlap/gap

// (D,G,I) -> q(DI, GD, -D^2, -IG, -G^2, I^2); a double cover of X-tilde.
SliceVector pi(const Rat& D, const Rat& G, const Rat& I);

// Element of Q(sqrt(radicand)): a + b*sqrt(r), exact.  radicand may be any
// non-square rational (negative allowed; the arithmetic is formal).
struct QuadExtScalar {
    Rat a, b, radicand;  // b == 0 means rational, radicand then 0

    static QuadExtScalar rational(const Rat& v) { return {v, 0, 0}; }
    static QuadExtScalar sqrt_of(const Rat& v);  // exact square root of v
    bool is_rational() const { return b == 0; }
    Rat square() const;  // a^2 + b^2 r   (+ 2ab sqrt r, which must vanish)
    QuadExtScalar operator-() const { return {-a, -b, radicand}; }
    bool operator==(const QuadExtScalar& o) const;
    std::string str() const;
};

QuadExtScalar mul(const QuadExtScalar& x, const QuadExtScalar& y);
QuadExtScalar scale(const Rat& r, const QuadExtScalar& x);

using PreimageTriple = std::array<QuadExtScalar, 3>;  // (D, G, I)

// Preimages of q under pi; requires in_Xtilde(q).  Returns {(0,0,0)} at the
// origin of the cover, otherwise a pair closed under simultaneous negation.
// Every returned triple is verified to map back to q exactly.
std::vector<PreimageTriple> pi_preimage(const SliceVector& q);

// The three dimension-4 families off the slice: semisimple with eigenvalues
// (z,z,-z,-z), semisimple with (z,-z,0,0), and a Jordan-type (2,2) nilpotent.
struct G6Sample {
    std::string name;
    Sp4Element element;
    int dim;
};
std::vector<G6Sample> g6_family_samples();

// Seeded sampling sweep over the slice: general points plus constructed
// points on each piece, X-tilde (via pi) and X''.  Checks the trichotomy,
// the decomposition, piece uniqueness, the equation system, the double
// cover, and the intersection predicate.  Exact, zero tolerance.
struct SliceReport {
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::size_t count_X = 0, count_Y = 0;
    std::array<std::size_t, 6> piece_counts{};
    std::size_t preimage_checks = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

SliceReport slice_suite(std::uint64_t seed, std::size_t general_samples = 1000,
                        std::size_t per_piece = 60);

}  // namespace strata
