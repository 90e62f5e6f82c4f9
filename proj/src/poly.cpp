#include "strata/poly.hpp"

#include <map>
#include <stdexcept>

namespace strata {

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : c(std::move(coeffs)) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    if (c.empty()) c.push_back(0);
}

IntPoly IntPoly::x_pow_minus(int k, std::int64_t constant) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(k) + 1, 0);
    v[0] = constant;
    v[k] = 1;
    return IntPoly(std::move(v));
}

IntPoly mul(const IntPoly& p, const IntPoly& q) {
    std::vector<std::int64_t> out(p.c.size() + q.c.size() - 1, 0);
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] == 0) continue;
        for (std::size_t j = 0; j < q.c.size(); ++j) out[i + j] += p.c[i] * q.c[j];
    }
    return IntPoly(std::move(out));
}

std::pair<IntPoly, bool> div_exact(const IntPoly& p, const IntPoly& q) {
    if (q.is_zero() || !q.monic()) throw std::invalid_argument("divisor must be monic");
    std::vector<std::int64_t> rem = p.c;
    const int dq = q.degree();
    if (p.degree() < dq) return {IntPoly(), p.is_zero()};
    std::vector<std::int64_t> quo(p.c.size() - q.c.size() + 1, 0);
    for (int i = static_cast<int>(rem.size()) - 1; i >= dq; --i) {
        std::int64_t f = rem[i];
        if (f == 0) continue;
        quo[i - dq] = f;
        for (int j = 0; j <= dq; ++j) rem[i - dq + j] -= f * q.c[j];
    }
    for (std::int64_t v : rem)
        if (v != 0) return {IntPoly(), false};
    return {IntPoly(std::move(quo)), true};
}

int euler_phi(int d) {
    int result = d;
    for (int p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            result -= result / p;
            while (d % p == 0) d /= p;
        }
    }
    if (d > 1) result -= result / d;
    return result;
}

const IntPoly& cyclotomic(int d) {
    static std::map<int, IntPoly> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e
    IntPoly p = IntPoly::x_pow_minus(d, -1);
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        auto [q, ok] = div_exact(p, cyclotomic(e));
        if (!ok) throw std::logic_error("cyclotomic recursion failed");
        p = std::move(q);
    }
    return cache.emplace(d, std::move(p)).first->second;
}

int CyclotomicProduct::multiplicity_of(int d) const {
    for (auto [e, m] : factors)
        if (e == d) return m;
    return 0;
}

IntPoly CyclotomicProduct::expand() const {
    IntPoly p = IntPoly::one();
    for (auto [d, m] : factors)
        for (int k = 0; k < m; ++k) p = mul(p, cyclotomic(d));
    return p;
}

std::string CyclotomicProduct::str() const {
    if (factors.empty()) return "1";
    std::string out;
    for (auto [d, m] : factors) {
        if (!out.empty()) out += ' ';
        out += "Phi" + std::to_string(d);
        if (m > 1) out += "^" + std::to_string(m);
    }
    return out;
}

CyclotomicProduct cyclotomic_factor(const IntPoly& p) {
    if (!p.monic()) throw std::invalid_argument("cyclotomic_factor: polynomial must be monic");
    const int deg = p.degree();
    CyclotomicProduct out;
    IntPoly rest = p;
    const int cap = 2 * deg * deg;
    for (int d = 1; d <= cap && rest.degree() > 0; ++d) {
        if (euler_phi(d) > deg) continue;
        int mult = 0;
        for (;;) {
            auto [q, ok] = div_exact(rest, cyclotomic(d));
            if (!ok) break;
            rest = std::move(q);
            ++mult;
        }
        if (mult > 0) out.factors.emplace_back(d, mult);
    }
    if (rest.degree() != 0 || rest.c[0] != 1)
        throw std::invalid_argument("not a product of cyclotomic polynomials: " + poly_str(p));
    return out;
}

std::string poly_str(const IntPoly& p) {
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        std::int64_t v = p.c[i];
        if (v == 0 && p.degree() > 0) continue;
        if (!out.empty()) out += v < 0 ? " - " : " + ";
        else if (v < 0) out += "-";
        std::int64_t av = v < 0 ? -v : v;
        if (av != 1 || i == 0) out += std::to_string(av);
        if (i > 0) out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
}

}  // namespace strata
