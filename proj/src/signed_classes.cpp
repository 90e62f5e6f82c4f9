#include "strata/signed_classes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace strata {

namespace {

void enumerate_partitions(int n, int maxp, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxp); p >= 1; --p) {
        cur.push_back(p);
        enumerate_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    enumerate_partitions(n, n, cur, out);
    return out;
}

bool all_even(const Partition& p) {
    return std::all_of(p.begin(), p.end(), [](int k) { return k % 2 == 0; });
}

void require_classical(Kind kind) {
    if (kind != Kind::B && kind != Kind::C && kind != Kind::D)
        throw std::invalid_argument("classical type B/C/D expected");
}

}  // namespace

int SignedClass::n() const {
    return std::accumulate(alpha.begin(), alpha.end(), 0) +
           std::accumulate(beta.begin(), beta.end(), 0);
}

std::string partition_str(const Partition& p) {
    if (p.empty()) return "-";
    std::string out;
    for (int k : p) {
        if (!out.empty()) out += ',';
        out += std::to_string(k);
    }
    return out;
}

std::string SignedClass::str() const {
    std::string out = "(" + partition_str(alpha) + ";" + partition_str(beta) + ")";
    if (split) out += *split == SplitTag::I ? "I" : "II";
    return out;
}

std::vector<SignedClass> classes_classical(Kind kind, int n) {
    require_classical(kind);
    if ((kind == Kind::D && n < 4) || n < 2) throw std::invalid_argument("rank out of range");
    std::vector<SignedClass> out;
    for (int k = 0; k <= n; ++k) {
        for (const auto& a : partitions(k)) {
            for (const auto& b : partitions(n - k)) {
                if (kind == Kind::D && b.size() % 2 != 0) continue;
                if (kind == Kind::D && b.empty() && !a.empty() && all_even(a)) {
                    out.push_back({a, b, SplitTag::I});
                    out.push_back({a, b, SplitTag::II});
                } else {
                    out.push_back({a, b, std::nullopt});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int CycleDatum::total() const {
    int t = 0;
    for (auto [i, v] : nu_odd) t += i * v;
    for (auto [i, v] : nu_prime) t += i * v;
    for (auto [i, v] : nu_dprime) t += i * v;
    return t;
}

CycleDatum to_cycle_datum(const SignedClass& c) {
    CycleDatum d;
    for (int k : c.alpha) {
        if (k % 2 == 1) d.nu_odd[k] += 2;
        else d.nu_dprime[k] += 2;
    }
    for (int k : c.beta) d.nu_prime[2 * k] += 1;
    d.split = c.split;
    return d;
}

SignedClass from_cycle_datum(const CycleDatum& d) {
    SignedClass c;
    for (auto [i, v] : d.nu_odd)
        for (int t = 0; t < v / 2; ++t) c.alpha.push_back(i);
    for (auto [i, v] : d.nu_dprime)
        for (int t = 0; t < v / 2; ++t) c.alpha.push_back(i);
    for (auto [i, v] : d.nu_prime)
        for (int t = 0; t < v; ++t) c.beta.push_back(i / 2);
    std::sort(c.alpha.rbegin(), c.alpha.rend());
    std::sort(c.beta.rbegin(), c.beta.rend());
    c.split = d.split;
    return c;
}

StratumLabel phi(const CycleDatum& d) {
    StratumLabel s;
    s.nu = d.nu_odd;
    std::map<int, int> prime = d.nu_prime;
    for (auto [i, v] : d.nu_dprime) prime[i];  // ensure key exists for the loop below
    for (auto& [i, v] : prime) {
        int total = v + (d.nu_dprime.count(i) ? d.nu_dprime.at(i) : 0);
        if (total == 0) continue;
        s.nu[i] += total;
        if (total % 2 == 0) s.eps[i] = v > 0 ? 1 : 0;
    }
    s.very_even = d.split;
    return s;
}

std::vector<CycleDatum> fiber(const StratumLabel& s) {
    // For each even i: nu_i odd -> nu''_i in {0,2,...,nu_i-1};
    // nu_i even, eps=1 -> nu''_i in {0,2,...,nu_i-2}; eps=0 -> nu''_i = nu_i.
    std::vector<std::pair<int, std::vector<int>>> choices;
    for (auto [i, v] : s.nu) {
        if (i % 2 != 0 || v == 0) continue;
        std::vector<int> opts;
        if (v % 2 == 1) {
            for (int t = 0; t <= v - 1; t += 2) opts.push_back(t);
        } else if (s.eps.at(i) == 1) {
            for (int t = 0; t <= v - 2; t += 2) opts.push_back(t);
        } else {
            opts.push_back(v);
        }
        choices.emplace_back(i, std::move(opts));
    }
    std::vector<CycleDatum> out;
    std::vector<std::size_t> idx(choices.size(), 0);
    for (;;) {
        CycleDatum d;
        for (auto [i, v] : s.nu)
            if (i % 2 == 1) d.nu_odd[i] = v;
        for (std::size_t k = 0; k < choices.size(); ++k) {
            auto [i, opts] = choices[k];
            int dpp = opts[idx[k]];
            if (dpp > 0) d.nu_dprime[i] = dpp;
            int p = s.nu.at(i) - dpp;
            if (p > 0) d.nu_prime[i] = p;
        }
        d.split = s.very_even;
        out.push_back(std::move(d));
        std::size_t k = 0;
        while (k < choices.size() && ++idx[k] == choices[k].second.size()) idx[k++] = 0;
        if (k == choices.size()) break;
    }
    return out;
}

CentralizerType h_type(const StratumLabel& s) {
    CentralizerType h;
    for (auto [i, v] : s.nu) {
        if (i % 2 != 0 || v == 0) continue;
        int r = 0;
        if (v % 2 == 1) r = (v - 1) / 2;
        else if (s.eps.at(i) == 1) r = (v - 2) / 2;
        if (r > 0) h.ranks.push_back(r);
    }
    std::sort(h.ranks.rbegin(), h.ranks.rend());
    return h;
}

int mu_of(const CycleDatum& d) {
    int m = 0;
    for (auto [i, v] : d.nu_odd) m += v / 2;
    for (auto [i, v] : d.nu_dprime) m += v / 2;
    return m;
}

bool is_basic(const StratumLabel& s) {
    for (auto [i, v] : s.nu)
        if (v > 0 && i % 2 != 0) return false;
    for (auto [i, e] : s.eps)
        if (e != 1) return false;
    return true;
}

std::uint64_t CentralizerType::predicted_fiber_size() const {
    std::uint64_t p = 1;
    for (int r : ranks) p *= static_cast<std::uint64_t>(r) + 1;
    return p;
}

std::string CentralizerType::str() const {
    if (ranks.empty()) return "{1}";
    std::string out;
    for (int r : ranks) {
        if (!out.empty()) out += " x ";
        out += "C" + std::to_string(r);
    }
    return out;
}

std::string StratumLabel::str() const {
    std::string out;
    for (auto it = nu.rbegin(); it != nu.rend(); ++it) {
        auto [i, v] = *it;
        if (v == 0) continue;
        if (!out.empty()) out += ' ';
        out += std::to_string(i);
        if (v > 1) out += "^" + std::to_string(v);
        if (auto e = eps.find(i); e != eps.end()) out += "[" + std::to_string(e->second) + "]";
    }
    if (very_even) out += *very_even == SplitTag::I ? " (I)" : " (II)";
    return out;
}

std::vector<StratumRow> strata_table(Kind kind, int n) {
    auto classes = classes_classical(kind, n);
    std::map<StratumLabel, std::vector<SignedClass>> groups;
    for (const auto& c : classes) groups[phi(to_cycle_datum(c))].push_back(c);
    std::vector<StratumRow> rows;
    for (auto& [label, members] : groups) {
        StratumRow row;
        row.label = label;
        row.h = h_type(label);
        row.members = members;
        for (const auto& c : members) row.mu_values.push_back(mu_of(to_cycle_datum(c)));
        std::sort(row.mu_values.begin(), row.mu_values.end());
        row.basic = is_basic(label);
        rows.push_back(std::move(row));
    }
    return rows;
}

IntPoly class_char_poly(const SignedClass& c) {
    IntPoly p = IntPoly::one();
    for (int k : c.alpha) p = mul(p, IntPoly::x_pow_minus(k, -1));
    for (int k : c.beta) p = mul(p, IntPoly::x_pow_minus(k, 1));
    return p;
}

namespace {

// Simple roots in the standard basis e_1..e_n, as columns of an n x n matrix.
std::vector<std::vector<mpq_class>> root_basis_matrix(Kind kind, int n) {
    std::vector<std::vector<mpq_class>> p(n, std::vector<mpq_class>(n, 0));
    for (int j = 0; j + 1 < n; ++j) {
        p[j][j] = 1;
        p[j + 1][j] = -1;  // alpha_{j+1} = e_{j+1} - e_{j+2}
    }
    if (kind == Kind::B) p[n - 1][n - 1] = 1;       // alpha_n = e_n
    else if (kind == Kind::C) p[n - 1][n - 1] = 2;  // alpha_n = 2 e_n
    else {                                           // alpha_n = e_{n-1} + e_n
        p[n - 2][n - 1] = 1;
        p[n - 1][n - 1] = 1;
    }
    return p;
}

std::vector<std::vector<mpq_class>> invert(std::vector<std::vector<mpq_class>> m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw std::logic_error("singular change of basis");
        std::swap(m[col], m[piv]);
        std::swap(inv[col], inv[piv]);
        mpq_class d = m[col][col];
        for (int j = 0; j < n; ++j) { m[col][j] /= d; inv[col][j] /= d; }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            mpq_class f = m[r][col];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

WeylElement realize(const SignedClass& c, const RootSystem& rs) {
    if (rs.kind != Kind::B && rs.kind != Kind::C && rs.kind != Kind::D)
        throw std::invalid_argument("realize: classical root system expected");
    const int n = rs.rank;
    if (c.n() != n) throw std::invalid_argument("realize: rank mismatch");
    if (rs.kind == Kind::D && c.beta.size() % 2 != 0)
        throw std::invalid_argument("realize: odd number of negative cycles in type D");

    // Signed permutation in the standard basis: blocks in alpha/beta order.
    std::vector<std::vector<int>> std_mat(n, std::vector<int>(n, 0));
    int pos = 0;
    auto place_cycle = [&](int k, int sign) {
        for (int t = 0; t + 1 < k; ++t) std_mat[pos + t + 1][pos + t] = 1;
        std_mat[pos][pos + k - 1] = sign;
        pos += k;
    };
    for (int k : c.alpha) place_cycle(k, 1);
    for (int k : c.beta) place_cycle(k, -1);

    if (c.split && *c.split == SplitTag::II) {
        // conjugate by diag(1,...,1,-1)
        for (int i = 0; i < n; ++i) {
            std_mat[i][n - 1] = -std_mat[i][n - 1];
            std_mat[n - 1][i] = -std_mat[n - 1][i];
        }
    }

    auto p = root_basis_matrix(rs.kind, n);
    auto pinv = invert(p);
    // m_root = pinv * std_mat * p
    std::vector<std::vector<mpq_class>> tmp(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (std_mat[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) tmp[i][j] += std_mat[i][k] * p[k][j];
        }
    IntMat out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mpq_class v = 0;
            for (int k = 0; k < n; ++k) v += pinv[i][k] * tmp[k][j];
            v.canonicalize();
            if (v.get_den() != 1) throw std::logic_error("realize: non-integral root-basis matrix");
            out.at(i, j) = v.get_num().get_si();
        }
    return WeylElement{std::move(out)};
}

}  // namespace strata
