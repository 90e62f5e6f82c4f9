#include "strata/linalg.hpp"

#include <stdexcept>

namespace strata {

IntMat IntMat::identity(int dim) {
    IntMat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMat mul(const IntMat& x, const IntMat& y) {
    if (x.n != y.n) throw std::invalid_argument("matrix size mismatch");
    IntMat z(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            std::int64_t v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < x.n; ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

bool is_identity(const IntMat& m) {
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (m.at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::uint64_t hash_mat(const IntMat& m) {
    std::uint64_t h = 14695981039346656037ull;
    for (std::int64_t v : m.a) {
        h ^= static_cast<std::uint64_t>(v);
        h *= 1099511628211ull;
    }
    return h;
}

int rank_bareiss(std::vector<std::vector<mpz_class>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    mpz_class prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                mpz_class t = m[rank][col] * m[r][c] - m[r][col] * m[rank][c];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[r][c] = t;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

int rank_of(const IntMat& m) {
    std::vector<std::vector<mpz_class>> z(m.n, std::vector<mpz_class>(m.n));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) z[i][j] = static_cast<long>(m.at(i, j));
    return rank_bareiss(std::move(z));
}

int rank_rational(const std::vector<std::vector<mpq_class>>& m) {
    if (m.empty()) return 0;
    std::vector<std::vector<mpz_class>> z(m.size(), std::vector<mpz_class>(m[0].size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        mpz_class lcm = 1;
        for (const auto& q : m[i]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            mpq_class scaled = m[i][j] * mpq_class(lcm);
            scaled.canonicalize();
            z[i][j] = scaled.get_num();
        }
    }
    return rank_bareiss(std::move(z));
}

int fixed_space_dim(const IntMat& m) {
    IntMat d = m;
    for (int i = 0; i < d.n; ++i) d.at(i, i) -= 1;
    return d.n - rank_of(d);
}

std::vector<std::int64_t> char_poly_coeffs(const IntMat& m) {
    const int n = m.n;
    std::vector<mpq_class> coef(static_cast<std::size_t>(n) + 1);
    coef[n] = 1;
    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
    std::vector<std::vector<mpq_class>> mk(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mk[i][j] = static_cast<long>(m.at(i, j));
    for (int k = 1; k <= n; ++k) {
        mpq_class tr = 0;
        for (int i = 0; i < n; ++i) tr += mk[i][i];
        mpq_class ck = -tr / k;
        coef[n - k] = ck;
        if (k == n) break;
        for (int i = 0; i < n; ++i) mk[i][i] += ck;
        std::vector<std::vector<mpq_class>> next(n, std::vector<mpq_class>(n));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (m.at(i, l) == 0) continue;
                mpq_class v = static_cast<long>(m.at(i, l));
                for (int j = 0; j < n; ++j) next[i][j] += v * mk[l][j];
            }
        mk = std::move(next);
    }
    std::vector<std::int64_t> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        coef[i].canonicalize();
        if (coef[i].get_den() != 1) throw std::logic_error("char poly coefficient not integral");
        if (!coef[i].get_num().fits_slong_p()) throw std::overflow_error("char poly coefficient overflow");
        out[i] = coef[i].get_num().get_si();
    }
    return out;
}

int matrix_order(const IntMat& m, int cap) {
    IntMat p = m;
    for (int k = 1; k <= cap; ++k) {
        if (is_identity(p)) return k;
        p = mul(p, m);
    }
    throw std::invalid_argument("matrix order exceeds cap");
}

}  // namespace strata
