#pragma once

// Reference computations used to derive expected values. Nothing here calls
// into the library: integers mod p, dense integer vectors, and mpq_class
// arrays stand in for the library's types.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using IntVec = std::vector<int>;

inline int mod(long long x, int p) { return static_cast<int>(((x % p) + p) % p); }

inline int inv_mod(int a, int p) {
    for (int x = 1; x < p; ++x)
        if (mod(static_cast<long long>(a) * x, p) == 1) return x;
    return 0;
}

/// Points of PG(m-1, p): vectors whose first nonzero entry is 1.
inline std::vector<IntVec> projective_points(int p, int m) {
    std::vector<IntVec> out;
    IntVec v(m, 0);
    while (true) {
        int k = m - 1;
        while (k >= 0 && ++v[k] == p) v[k--] = 0;
        if (k < 0) break;
        int first = 0;
        while (first < m && v[first] == 0) ++first;
        if (v[first] == 1) out.push_back(v);
    }
    return out;
}

/// All x in F_p^n with H x = 0, H having the given columns.
inline std::vector<IntVec> nullspace_words(int p, const std::vector<IntVec>& cols) {
    const int n = static_cast<int>(cols.size()), m = static_cast<int>(cols[0].size());
    std::vector<IntVec> out;
    IntVec x(n, 0);
    while (true) {
        IntVec s(m, 0);
        for (int k = 0; k < n; ++k)
            for (int r = 0; r < m; ++r) s[r] = mod(s[r] + x[k] * cols[k][r], p);
        bool zero = true;
        for (int r = 0; r < m; ++r) zero = zero && s[r] == 0;
        if (zero) out.push_back(x);
        int k = 0;
        while (k < n && ++x[k] == p) x[k++] = 0;
        if (k == n) break;
    }
    return out;
}

inline int distance(const IntVec& a, const IntVec& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

inline int min_distance(const std::vector<IntVec>& code) {
    int best = 1 << 30;
    for (std::size_t i = 0; i < code.size(); ++i)
        for (std::size_t j = i + 1; j < code.size(); ++j) best = std::min(best, distance(code[i], code[j]));
    return best;
}

inline int weight(const IntVec& x) {
    int w = 0;
    for (int v : x) w += v != 0;
    return w;
}

/// Nearest codeword by exhaustive search; ties never occur in a perfect code.
inline IntVec nearest(const std::vector<IntVec>& code, const IntVec& y) {
    const IntVec* best = &code[0];
    for (const auto& c : code)
        if (distance(c, y) < distance(*best, y)) best = &c;
    return *best;
}

// ---- GF(p^k) by schoolbook polynomial arithmetic ---------------------------

struct Gf {
    int p;
    IntVec poly;  // monic, low degree first
    int k() const { return static_cast<int>(poly.size()) - 1; }

    IntVec mul(const IntVec& a, const IntVec& b) const {
        IntVec prod(2 * k(), 0);
        for (int i = 0; i < k(); ++i)
            for (int j = 0; j < k(); ++j) prod[i + j] = mod(prod[i + j] + a[i] * b[j], p);
        for (int d = 2 * k() - 1; d >= k(); --d) {
            const int f = prod[d];
            if (!f) continue;
            for (int i = 0; i <= k(); ++i) prod[d - k() + i] = mod(prod[d - k() + i] - f * poly[i], p);
        }
        prod.resize(k());
        return prod;
    }
    IntVec add(const IntVec& a, const IntVec& b) const {
        IntVec s(k());
        for (int i = 0; i < k(); ++i) s[i] = mod(a[i] + b[i], p);
        return s;
    }
    /// Element with coefficient index sum c_i p^i.
    IntVec from_index(int idx) const {
        IntVec v(k());
        for (int i = 0; i < k(); ++i) {
            v[i] = idx % p;
            idx /= p;
        }
        return v;
    }
    int index(const IntVec& v) const {
        int idx = 0;
        for (int i = k() - 1; i >= 0; --i) idx = idx * p + v[i];
        return idx;
    }
    int order() const {
        int q = 1;
        for (int i = 0; i < k(); ++i) q *= p;
        return q;
    }
};

/// Isotope of GF(p^2) along a, V = identity: U swaps the basis 1, a, and
/// x o y = U((U x) y). Elements by index.
struct Isotope2 {
    Gf f;
    int a;

    IntVec u(const IntVec& x) const {
        // x = c0 + c1 a, found by search over F_p^2
        const IntVec av = f.from_index(a);
        for (int c0 = 0; c0 < f.p; ++c0)
            for (int c1 = 0; c1 < f.p; ++c1) {
                IntVec cand(2);
                for (int i = 0; i < 2; ++i) cand[i] = mod((i == 0 ? c0 : 0) + c1 * av[i], f.p);
                if (cand == x) {
                    IntVec out(2);
                    for (int i = 0; i < 2; ++i) out[i] = mod(c0 * av[i] + (i == 0 ? c1 : 0), f.p);
                    return out;
                }
            }
        return {};
    }
    int mul(int x, int y) const { return f.index(u(f.mul(u(f.from_index(x)), f.from_index(y)))); }
};

// ---- quaternions and octonions over Q --------------------------------------

using Q4 = std::array<mpq_class, 4>;
using Q8 = std::array<mpq_class, 8>;

/// Hamilton product from i^2 = j^2 = k^2 = ijk = -1, expanded term by term.
inline Q4 qmul(const Q4& x, const Q4& y) {
    // sign/index table for e_a e_b = s e_c with e0 = 1, e1 = i, e2 = j, e3 = k
    static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    Q4 out{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) out[idx[a][b]] += sgn[a][b] * x[a] * y[b];
    return out;
}

inline Q4 qconj(const Q4& x) { return {x[0], -x[1], -x[2], -x[3]}; }
inline Q4 qadd(const Q4& x, const Q4& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]}; }
inline Q4 qsub(const Q4& x, const Q4& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]}; }

/// Doubling (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).
inline Q8 omul(const Q8& x, const Q8& y) {
    const Q4 a{x[0], x[1], x[2], x[3]}, b{x[4], x[5], x[6], x[7]};
    const Q4 c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
    const Q4 lo = qsub(qmul(a, c), qmul(qconj(d), b));
    const Q4 hi = qadd(qmul(d, a), qmul(b, qconj(c)));
    return {lo[0], lo[1], lo[2], lo[3], hi[0], hi[1], hi[2], hi[3]};
}

inline mpq_class onorm(const Q8& x) {
    mpq_class n = 0;
    for (const auto& v : x) n += v * v;
    return n;
}

}  // namespace oracle
