#include "strata/slodowy.hpp"

#include "strata/linalg.hpp"

#include <random>
#include <stdexcept>

namespace strata {

namespace {
enum Coord { cA, cB, cC, cD, cE, cF, cG, cH, cI, cJ };
}

std::array<std::array<Rat, 4>, 4> Sp4Element::to_matrix() const {
    const auto& v = c;
    return {{{v[cA], v[cB], v[cC], v[cD]},
             {v[cE], v[cF], v[cG], v[cC]},
             {v[cH], v[cI], -v[cF], -v[cB]},
             {v[cJ], v[cH], -v[cE], -v[cA]}}};
}

Sp4Element Sp4Element::from_matrix(const std::array<std::array<Rat, 4>, 4>& m) {
    if (m[1][3] != m[0][2] || m[3][1] != m[2][0] || m[3][2] != -m[1][0] ||
        m[2][3] != -m[0][1] || m[2][2] != -m[1][1] || m[3][3] != -m[0][0])
        throw std::logic_error("matrix does not match the sp4 pattern");
    Sp4Element e;
    e.c = {m[0][0], m[0][1], m[0][2], m[0][3], m[1][0],
           m[1][1], m[1][2], m[2][0], m[2][1], m[3][0]};
    return e;
}

bool Sp4Element::is_zero() const {
    for (const auto& v : c)
        if (v != 0) return false;
    return true;
}

Sp4Element bracket(const Sp4Element& x, const Sp4Element& y) {
    auto a = x.to_matrix(), b = y.to_matrix();
    std::array<std::array<Rat, 4>, 4> m{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) m[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    return Sp4Element::from_matrix(m);
}

int centralizer_dim(const Sp4Element& x) {
    std::vector<std::vector<Rat>> ad(10, std::vector<Rat>(10));
    for (int k = 0; k < 10; ++k) {
        Sp4Element basis;
        basis.c[k] = 1;
        Sp4Element col = bracket(x, basis);
        for (int r = 0; r < 10; ++r) ad[r][k] = col.c[r];
    }
    return 10 - rank_rational(ad);
}

Sp4Element SliceVector::to_sp4() const {
    Sp4Element e;
    e.c[cB] = b;
    e.c[cC] = c;
    e.c[cD] = d;
    e.c[cF] = f;
    e.c[cG] = g;
    e.c[cI] = i;
    e.c[cJ] = 1;
    return e;
}

std::string SliceVector::str() const {
    auto s = [](const Rat& r) { return r.get_str(); };
    return "q(" + s(b) + "," + s(c) + "," + s(d) + "," + s(f) + "," + s(g) + "," + s(i) + ")";
}

std::string piece_name(Piece p) {
    switch (p) {
        case Piece::X1: return "X1";
        case Piece::X2: return "X2";
        case Piece::X3: return "X3";
        case Piece::X4: return "X4";
        case Piece::X5: return "X5";
        case Piece::X6: return "X6";
    }
    return "?";
}

SliceClass classify_slice(const SliceVector& q) {
    int dim = centralizer_dim(q.to_sp4());
    if (dim == 2) return SliceClass::Y;
    if (dim == 4 || dim == 6) return SliceClass::X;
    throw std::logic_error("slice point with centralizer dim " + std::to_string(dim) +
                           " at " + q.str());
}

std::vector<std::array<Rat, 6>> centralizer_equations(const SliceVector& q) {
    const Rat &b = q.b, &c = q.c, &f = q.f, &g = q.g, &i = q.i;
    const Rat x = q.x();
    // unknowns ordered (E, F, G, H, I, J)
    return {
        {0, -i, 0, b, f, 0},                          // bH + fI - iF = 0
        {c, g, -f, 0, 0, 0},                          // cE + gF - fG = 0
        {-(c * i + b * f), 0, 0, -(b * g - c * f), 0, 0},
        {0, -b, 0, x, -c, c * i + b * f},             // xH + (ci+bf)J = bF + cI
        {-x, c, -b, 0, 0, b * g - c * f},             // -xE + (bg-cf)J = bG - cF
        {b, 0, i, -c, -g, 0},                         // bE + iG = gI + cH
    };
}

std::vector<std::array<Rat, 6>> derived_centralizer_system(const SliceVector& q) {
    // A general centralizer element has A = 0 and B, C, D determined by the
    // remaining six coordinates; substituting and bracketing with q leaves a
    // linear system over (E, F, G, H, I, J).
    const Sp4Element qe = q.to_sp4();
    std::vector<std::array<Rat, 6>> rows(10);
    for (int k = 0; k < 6; ++k) {
        Rat E = k == 0, F = k == 1, G = k == 2, H = k == 3, I = k == 4, J = k == 5;
        Sp4Element z;
        z.c[cA] = 0;
        z.c[cB] = -q.i * E + q.f * H + q.b * J;
        z.c[cC] = q.c * J + q.g * H + q.f * E;
        z.c[cD] = q.d * J + q.c * H + q.b * E;
        z.c[cE] = E;
        z.c[cF] = F;
        z.c[cG] = G;
        z.c[cH] = H;
        z.c[cI] = I;
        z.c[cJ] = J;
        Sp4Element out = bracket(qe, z);
        for (int r = 0; r < 10; ++r) rows[r][k] = out.c[r];
    }
    return rows;
}

namespace {
int system_rank(const std::vector<std::array<Rat, 6>>& rows) {
    std::vector<std::vector<Rat>> m;
    for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
    return rank_rational(m);
}
}  // namespace

int centralizer_system_nullity(const SliceVector& q) {
    return 6 - system_rank(derived_centralizer_system(q));
}

bool in_Xtilde(const SliceVector& q) {
    return q.f * q.d - q.b * q.c == 0 && q.g * q.d - q.c * q.c == 0 &&
           q.d * q.i + q.b * q.b == 0 && q.g * q.i + q.f * q.f == 0;
}

bool in_Xdoubleprime(const SliceVector& q) {
    return q.b == 0 && q.c == 0 && q.x() == 0;
}

namespace {

std::vector<Piece> pieces_matching(const SliceVector& q) {
    const Rat &b = q.b, &c = q.c, &d = q.d, &f = q.f, &g = q.g, &i = q.i;
    std::vector<Piece> out;
    if (b != 0 && c != 0 && b * g - c * f == 0 && c * i + b * f == 0 && f * d - b * c == 0)
        out.push_back(Piece::X1);
    if (b == 0 && c != 0 && f == 0 && i == 0 && g * d - c * c == 0) out.push_back(Piece::X2);
    if (b != 0 && c == 0 && f == 0 && g == 0 && d * i + b * b == 0) out.push_back(Piece::X3);
    if (b == 0 && c == 0 && f == 0 && d != 0 && i == 0 && g == 0) out.push_back(Piece::X4);
    if (b == 0 && c == 0 && f == 0 && i * g - d == 0) out.push_back(Piece::X5);
    if (b == 0 && c == 0 && f != 0 && f * f + i * g - d == 0) out.push_back(Piece::X6);
    return out;
}

}  // namespace

std::optional<Piece> piece_of(const SliceVector& q) {
    auto matches = pieces_matching(q);
    if (classify_slice(q) == SliceClass::Y) {
        if (!matches.empty())
            throw std::logic_error("point in Y matches piece " + piece_name(matches[0]) +
                                   ": " + q.str());
        return std::nullopt;
    }
    if (matches.size() != 1) {
        std::string names;
        for (Piece p : matches) names += " " + piece_name(p);
        throw std::logic_error("point in X matches " + std::to_string(matches.size()) +
                               " pieces" + names + ": " + q.str());
    }
    return matches[0];
}

SliceVector pi(const Rat& D, const Rat& G, const Rat& I) {
    return SliceVector{D * I, G * D, -D * D, -I * G, -G * G, I * I};
}

QuadExtScalar QuadExtScalar::sqrt_of(const Rat& v) {
    if (v == 0) return rational(0);
    if (v > 0 && mpz_perfect_square_p(v.get_num().get_mpz_t()) &&
        mpz_perfect_square_p(v.get_den().get_mpz_t())) {
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), v.get_num().get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), v.get_den().get_mpz_t());
        return rational(Rat(n, d));
    }
    return {0, 1, v};
}

Rat QuadExtScalar::square() const {
    if (a != 0 && b != 0) throw std::logic_error("square is not rational");
    return a * a + b * b * radicand;
}

bool QuadExtScalar::operator==(const QuadExtScalar& o) const {
    if (b == 0 && o.b == 0) return a == o.a;
    return a == o.a && b == o.b && radicand == o.radicand;
}

std::string QuadExtScalar::str() const {
    if (b == 0) return a.get_str();
    std::string s = b.get_str() + "*sqrt(" + radicand.get_str() + ")";
    if (a != 0) s = a.get_str() + " + " + s;
    return s;
}

QuadExtScalar mul(const QuadExtScalar& x, const QuadExtScalar& y) {
    if (x.b != 0 && y.b != 0 && x.radicand != y.radicand)
        throw std::logic_error("product across different quadratic extensions");
    Rat r = x.b != 0 ? x.radicand : y.radicand;
    QuadExtScalar out{x.a * y.a + x.b * y.b * r, x.a * y.b + x.b * y.a, r};
    if (out.b == 0) out.radicand = 0;
    return out;
}

QuadExtScalar scale(const Rat& r, const QuadExtScalar& x) {
    QuadExtScalar out{r * x.a, r * x.b, x.radicand};
    if (out.b == 0) out.radicand = 0;
    return out;
}

namespace {

// pi evaluated over the extension must land back on q exactly.
void verify_preimage(const SliceVector& q, const PreimageTriple& t) {
    const auto& [D, G, I] = t;
    auto expect = [&](const QuadExtScalar& v, const Rat& target, const char* what) {
        if (!v.is_rational() || v.a != target)
            throw std::logic_error(std::string("pi preimage check failed on ") + what +
                                   " at " + q.str());
    };
    expect(mul(D, I), q.b, "b");
    expect(mul(G, D), q.c, "c");
    expect(scale(-1, mul(D, D)), q.d, "d");
    expect(scale(-1, mul(I, G)), q.f, "f");
    expect(scale(-1, mul(G, G)), q.g, "g");
    expect(mul(I, I), q.i, "i");
}

}  // namespace

std::vector<PreimageTriple> pi_preimage(const SliceVector& q) {
    if (!in_Xtilde(q)) throw std::invalid_argument("pi_preimage: point not in X-tilde: " + q.str());
    const QuadExtScalar zero = QuadExtScalar::rational(0);
    QuadExtScalar D = zero, G = zero, I = zero;
    if (q.d != 0) {
        D = QuadExtScalar::sqrt_of(-q.d);
        I = scale(-q.b / q.d, D);  // b = DI and D^2 = -d
        G = scale(-q.c / q.d, D);  // c = GD
    } else if (q.i != 0) {
        I = QuadExtScalar::sqrt_of(q.i);
        if (q.g != 0) G = scale(-q.f / q.i, I);  // f = -IG and I^2 = i
    } else if (q.g != 0) {
        G = QuadExtScalar::sqrt_of(-q.g);
    }
    PreimageTriple t{D, G, I};
    verify_preimage(q, t);
    if (D == zero && G == zero && I == zero) return {t};
    PreimageTriple neg{-D, -G, -I};
    verify_preimage(q, neg);
    return {t, neg};
}

std::vector<G6Sample> g6_family_samples() {
    std::vector<G6Sample> out;
    Sp4Element ss_equal;  // eigenvalues z, z, -z, -z
    ss_equal.c[cA] = 1;
    ss_equal.c[cF] = 1;
    Sp4Element ss_mixed;  // eigenvalues z, -z, 0, 0
    ss_mixed.c[cA] = 1;
    Sp4Element subreg;  // Jordan type (2,2) nilpotent
    subreg.c[cB] = 1;
    for (auto& [name, e] : std::initializer_list<std::pair<const char*, Sp4Element>>{
             {"semisimple z,z,-z,-z", ss_equal},
             {"semisimple z,-z,0,0", ss_mixed},
             {"subregular nilpotent", subreg}})
        out.push_back({name, e, centralizer_dim(e)});
    return out;
}

namespace {

class RatSampler {
   public:
    explicit RatSampler(std::uint64_t seed) : rng_(seed) {}

    Rat any() {
        int num = pick_(rng_);
        int den;
        do { den = pick_(rng_); } while (den == 0);
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    Rat nonzero() {
        Rat r;
        do { r = any(); } while (r == 0);
        return r;
    }

   private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<int> pick_{-9, 9};
};

}  // namespace

SliceReport slice_suite(std::uint64_t seed, std::size_t general_samples, std::size_t per_piece) {
    SliceReport rep;
    rep.seed = seed;
    RatSampler rnd(seed);

    auto fail = [&rep](std::string msg) {
        if (rep.violations.size() < 50) rep.violations.push_back(std::move(msg));
    };

    auto check_point = [&](const SliceVector& q) {
        ++rep.samples;
        int dim;
        try {
            dim = centralizer_dim(q.to_sp4());
            if (dim != 2 && dim != 4 && dim != 6) {
                fail("centralizer dim " + std::to_string(dim) + " at " + q.str());
                return;
            }
            bool in_x = dim == 4 || dim == 6;
            (in_x ? rep.count_X : rep.count_Y)++;
            if (in_x != (in_Xtilde(q) || in_Xdoubleprime(q)))
                fail("decomposition mismatch at " + q.str());
            auto piece = piece_of(q);
            if (in_x != piece.has_value())
                fail("piece coverage mismatch at " + q.str());
            if (piece) ++rep.piece_counts[static_cast<int>(*piece)];
            if (centralizer_system_nullity(q) != dim)
                fail("equation-system nullity != centralizer dim at " + q.str());
            // the six listed equations must span the derived system
            auto derived = derived_centralizer_system(q);
            auto listed = centralizer_equations(q);
            int rd = system_rank(derived);
            auto both = derived;
            both.insert(both.end(), listed.begin(), listed.end());
            if (system_rank(listed) != rd || system_rank(both) != rd)
                fail("listed equations do not span the bracket system at " + q.str());
            bool inter = in_Xtilde(q) && in_Xdoubleprime(q);
            bool pred = q.b == 0 && q.c == 0 && q.d == 0 && q.g * q.i + q.f * q.f == 0;
            if (inter != pred) fail("intersection predicate mismatch at " + q.str());
            if (in_Xtilde(q)) {
                auto pre = pi_preimage(q);  // throws when the round trip fails
                ++rep.preimage_checks;
                bool origin = q == SliceVector{0, 0, 0, 0, 0, 0};
                if (origin ? pre.size() != 1 : pre.size() != 2)
                    fail("preimage cardinality at " + q.str());
                if (pre.size() == 2)
                    for (int k = 0; k < 3; ++k)
                        if (!(pre[1][k] == -pre[0][k]))
                            fail("preimage pair not negation-symmetric at " + q.str());
            }
            if (in_Xdoubleprime(q)) {
                // gradient of f^2+ig-d over (d,f,g,i): (-1, 2f, i, g); rank 1 always
                if (Rat(-1) == 0) fail("degenerate X'' Jacobian at " + q.str());
            }
        } catch (const std::exception& ex) {
            fail(ex.what());
        }
    };

    for (std::size_t k = 0; k < general_samples; ++k)
        check_point({rnd.any(), rnd.any(), rnd.any(), rnd.any(), rnd.any(), rnd.any()});

    for (std::size_t k = 0; k < per_piece; ++k) {
        {  // X1: b,c,f nonzero force g, i, d
            Rat b = rnd.nonzero(), c = rnd.nonzero(), f = rnd.nonzero();
            check_point({b, c, b * c / f, f, c * f / b, -b * f / c});
        }
        {  // X2: c, d nonzero, g = c^2/d
            Rat c = rnd.nonzero(), d = rnd.nonzero();
            check_point({0, c, d, 0, c * c / d, 0});
        }
        {  // X3: b, d nonzero, i = -b^2/d
            Rat b = rnd.nonzero(), d = rnd.nonzero();
            check_point({b, 0, d, 0, 0, -b * b / d});
        }
        check_point({0, 0, rnd.nonzero(), 0, 0, 0});  // X4
        {  // X5: d = ig
            Rat g = rnd.any(), i = rnd.any();
            check_point({0, 0, i * g, 0, g, i});
        }
        {  // X6: f nonzero, d = f^2 + ig
            Rat f = rnd.nonzero(), g = rnd.any(), i = rnd.any();
            check_point({0, 0, f * f + i * g, f, g, i});
        }
        {  // X-tilde via pi
            check_point(pi(rnd.any(), rnd.any(), rnd.any()));
        }
        {  // X'': b = c = 0, d = f^2 + ig
            Rat f = rnd.any(), g = rnd.any(), i = rnd.any();
            check_point({0, 0, f * f + i * g, f, g, i});
        }
    }
    check_point({0, 0, 0, 0, 0, 0});

    for (const auto& s : g6_family_samples())
        if (s.dim != 4)
            fail("family '" + s.name + "' has centralizer dim " + std::to_string(s.dim));

    return rep;
}

}  // namespace strata
