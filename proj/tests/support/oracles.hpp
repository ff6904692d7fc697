#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here is deliberately naive and shares no code with src/.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "laurent/lattice.hpp"
#include "laurent/poly.hpp"

namespace oracle {

using laurent::Integer;
using laurent::IntMatrix;
using laurent::IntVector;
using laurent::Rational;

inline Integer naive_gcd(Integer a, Integer b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Leibniz expansion.
inline Integer det(const IntMatrix& M)
{
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Integer total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Integer term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) term *= M(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Rank over Q by fraction Gaussian elimination.
inline std::size_t rank_q(const IntMatrix& M)
{
    std::vector<std::vector<Rational>> a(M.rows(), std::vector<Rational>(M.cols()));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) a[i][j] = M(i, j);
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t p = r;
        while (p < M.rows() && a[p][c] == 0) ++p;
        if (p == M.rows()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = 0; j < M.cols(); ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f)
{
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i]) idx.push_back(i);
        f(idx);
    } while (std::prev_permutation(mask.begin(), mask.end()));
}

// Smith invariants from determinantal divisors: d_k = gcd of k x k minors.
inline std::vector<Integer> smith_invariants(const IntMatrix& M)
{
    const std::size_t r = std::min(M.rows(), M.cols());
    std::vector<Integer> d{1};
    for (std::size_t k = 1; k <= r; ++k) {
        Integer g = 0;
        subsets(M.rows(), k, [&](const std::vector<std::size_t>& rows) {
            subsets(M.cols(), k, [&](const std::vector<std::size_t>& cols) {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = M(rows[i], cols[j]);
                g = naive_gcd(g, det(sub));
            });
        });
        if (g == 0) break;
        d.push_back(g);
    }
    std::vector<Integer> inv;
    for (std::size_t k = 1; k < d.size(); ++k) inv.push_back(d[k] / d[k - 1]);
    return inv;
}

// Row-style HNF shape: nonzero rows first, pivot columns strictly increasing,
// pivots positive, entries above a pivot reduced into [0, pivot), zeros below.
inline bool is_row_hnf(const IntMatrix& H)
{
    std::optional<std::size_t> last;
    bool zero_seen = false;
    for (std::size_t i = 0; i < H.rows(); ++i) {
        std::optional<std::size_t> piv;
        for (std::size_t j = 0; j < H.cols(); ++j)
            if (H(i, j) != 0) {
                piv = j;
                break;
            }
        if (!piv) {
            zero_seen = true;
            continue;
        }
        if (zero_seen) return false;
        if (last && *piv <= *last) return false;
        if (H(i, *piv) <= 0) return false;
        for (std::size_t k = 0; k < i; ++k)
            if (H(k, *piv) < 0 || H(k, *piv) >= H(i, *piv)) return false;
        for (std::size_t k = i + 1; k < H.rows(); ++k)
            if (H(k, *piv) != 0) return false;
        last = piv;
    }
    return true;
}

inline bool is_unimodular(const IntMatrix& U)
{
    if (!U.is_square()) return false;
    Integer d = det(U);
    return d == 1 || d == -1;
}

inline IntVector mat_vec(const IntMatrix& M, const IntVector& v)
{
    IntVector out(M.rows(), Integer(0));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) out[i] += M(i, j) * v[j];
    return out;
}

// Every integer vector with entries in [-bound, bound].
inline void box(std::size_t n, long bound, const std::function<void(const IntVector&)>& f)
{
    IntVector v(n, Integer(-bound));
    if (n == 0) {
        f(v);
        return;
    }
    for (;;) {
        f(v);
        std::size_t i = 0;
        while (i < n && v[i] == bound) v[i++] = -bound;
        if (i == n) return;
        v[i] += 1;
    }
}

inline std::vector<IntVector> kernel_search(const IntMatrix& M, long bound)
{
    std::vector<IntVector> out;
    box(M.cols(), bound, [&](const IntVector& v) {
        auto image = mat_vec(M, v);
        if (std::all_of(image.begin(), image.end(), [](const Integer& x) { return x == 0; })) out.push_back(v);
    });
    return out;
}

// v in the Z-span of rows, by exhaustive coefficient search.
inline bool span_search(const IntVector& v, const std::vector<IntVector>& rows, long bound)
{
    bool found = false;
    box(rows.size(), bound, [&](const IntVector& c) {
        if (found) return;
        IntVector s(v.size(), Integer(0));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) s[j] += c[i] * rows[i][j];
        found = s == v;
    });
    return found;
}

// Solve A x = b over Q; nullopt when inconsistent.
inline std::optional<std::vector<Rational>> solve_q(std::vector<std::vector<Rational>> A, std::vector<Rational> b)
{
    const std::size_t m = A.size(), n = m ? A[0].size() : 0;
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && A[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rational f = A[i][c] / A[r][c];
            for (std::size_t j = 0; j < n; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (b[i] != 0) return std::nullopt;
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[pivcol[i]] = b[i] / A[i][pivcol[i]];
    return x;
}

// Rank-1 Laurent polynomial over Q as degree -> coefficient.
using Dense1 = std::map<long, Rational>;

// Is there q supported in [-window, window] with p q = 1?
inline bool has_inverse_in_window(const Dense1& p, long window)
{
    if (p.empty()) return false;
    const long lo = p.begin()->first, hi = p.rbegin()->first;
    const std::size_t unknowns = static_cast<std::size_t>(2 * window + 1);
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (long k = lo - window; k <= hi + window; ++k) {
        std::vector<Rational> row(unknowns, Rational(0));
        for (long j = -window; j <= window; ++j) {
            auto it = p.find(k - j);
            if (it != p.end()) row[static_cast<std::size_t>(j + window)] = it->second;
        }
        A.push_back(row);
        b.push_back(k == 0 ? Rational(1) : Rational(0));
    }
    return solve_q(A, b).has_value();
}

// Evaluate a Laurent polynomial at a rational point with nonzero entries.
inline Rational evaluate(const laurent::LaurentPoly& p, const std::vector<Rational>& x)
{
    Rational total = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            long k = e[i].get_si();
            Rational base = k >= 0 ? x[i] : Rational(1) / x[i];
            for (long j = 0; j < std::labs(k); ++j) t *= base;
        }
        total += t;
    }
    return total;
}

}  // namespace oracle
