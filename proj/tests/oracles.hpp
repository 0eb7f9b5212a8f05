#pragma once

// Brute-force reference computations used to check the library. Nothing
// here calls into the library's face index, elimination or group code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "plmorse/complex.hpp"

namespace oracle {

using Cell = std::vector<int>;
using Big = boost::multiprecision::cpp_int;
using Dense = std::vector<std::vector<long long>>;

inline std::vector<Cell> facets_of(const plmorse::SimplicialComplex& c) {
    std::vector<Cell> out;
    for (const auto& f : c.facets()) out.emplace_back(f.begin(), f.end());
    return out;
}

/// All nonempty faces, by brute-force subset enumeration.
inline std::set<Cell> all_faces(const std::vector<Cell>& facets) {
    std::set<Cell> out;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        const std::size_t n = f.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            Cell s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) s.push_back(f[i]);
            out.insert(s);
        }
    }
    return out;
}

inline std::vector<std::vector<Cell>> faces_by_dim(const std::set<Cell>& faces) {
    std::vector<std::vector<Cell>> out;
    for (const auto& s : faces) {
        if (out.size() < s.size()) out.resize(s.size());
        out[s.size() - 1].push_back(s);
    }
    return out;
}

/// Rank over Z/p (p prime) by dense Gaussian elimination.
inline std::size_t rank_mod(Dense a, long long p) {
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (auto& row : a)
        for (auto& x : row) x = ((x % p) + p) % p;
    auto inv = [&](long long x) {
        long long r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        const long long iv = inv(a[rank][c]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const long long m = a[r][c] * iv % p;
            for (std::size_t j = c; j < cols; ++j) a[r][j] = ((a[r][j] - m * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// Rank over Q by fraction-free (Bareiss) elimination.
inline std::size_t rank_rational(const Dense& in) {
    std::vector<std::vector<Big>> a;
    for (const auto& row : in) a.emplace_back(row.begin(), row.end());
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::size_t rank = 0;
    Big prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t j = c + 1; j < cols; ++j) a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

inline std::size_t rank_over(const Dense& a, long long p) { return p == 0 ? rank_rational(a) : rank_mod(a, p); }

/// Dense boundary matrix from (k-1)-cells `lower` to k-cells `upper`,
/// sign (-1)^i for deleting the i-th vertex. Cells missing from `lower`
/// (a relative quotient) are dropped.
inline Dense boundary(const std::vector<Cell>& lower, const std::vector<Cell>& upper) {
    std::map<Cell, std::size_t> row;
    for (std::size_t i = 0; i < lower.size(); ++i) row[lower[i]] = i;
    Dense m(lower.size(), std::vector<long long>(upper.size(), 0));
    for (std::size_t j = 0; j < upper.size(); ++j)
        for (std::size_t i = 0; i < upper[j].size(); ++i) {
            Cell t = upper[j];
            t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
            auto it = row.find(t);
            if (it != row.end()) m[it->second][j] = i % 2 ? -1 : 1;
        }
    return m;
}

/// Betti numbers of the chain complex with k-cells cells[k].
inline std::vector<std::size_t> betti_of_cells(const std::vector<std::vector<Cell>>& cells, long long p) {
    const std::size_t n = cells.size();
    std::vector<std::size_t> rk(n + 1, 0);
    for (std::size_t k = 1; k < n; ++k)
        if (!cells[k].empty() && !cells[k - 1].empty()) rk[k] = rank_over(boundary(cells[k - 1], cells[k]), p);
    std::vector<std::size_t> b;
    for (std::size_t k = 0; k < n; ++k) b.push_back(cells[k].size() - rk[k] - rk[k + 1]);
    return b;
}

/// Unreduced Betti numbers over Q (p = 0) or Z/p.
inline std::vector<std::size_t> betti(const std::vector<Cell>& facets, long long p) {
    return betti_of_cells(faces_by_dim(all_faces(facets)), p);
}

/// Ranks of H_k(X, A) from the quotient chain complex C(X)/C(A).
inline std::vector<std::size_t> relative_betti(const std::vector<Cell>& x, const std::vector<Cell>& a, long long p,
                                               std::size_t top) {
    const auto fx = all_faces(x);
    const auto fa = all_faces(a);
    std::vector<std::vector<Cell>> cells(top + 1);
    for (const auto& s : fx)
        if (!fa.count(s) && s.size() - 1 <= top) cells[s.size() - 1].push_back(s);
    return betti_of_cells(cells, p);
}

/// Link of vertex v as a face set.
inline std::set<Cell> link_faces(const std::set<Cell>& faces, int v) {
    std::set<Cell> out;
    for (const auto& s : faces)
        if (std::find(s.begin(), s.end(), v) != s.end() && s.size() > 1) {
            Cell t;
            for (int x : s)
                if (x != v) t.push_back(x);
            out.insert(t);
        }
    return out;
}

/// Invariant factors of a small integer matrix from determinantal divisors:
/// d_k = gcd of all k x k minors, factor_k = d_k / d_{k-1}.
inline std::vector<Big> invariant_factors(const Dense& m) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    auto det = [&](const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) {
        std::vector<std::size_t> perm(r.size());
        std::iota(perm.begin(), perm.end(), 0);
        Big total = 0;
        do {
            Big term = 1;
            for (std::size_t i = 0; i < perm.size(); ++i) term *= m[r[i]][c[perm[i]]];
            std::size_t inversions = 0;
            for (std::size_t i = 0; i < perm.size(); ++i)
                for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
            total += inversions % 2 ? -term : term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return total;
    };
    auto subsets = [](std::size_t n, std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) s.push_back(i);
            out.push_back(s);
        }
        return out;
    };
    std::vector<Big> out;
    Big prev = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        Big g = 0;
        for (const auto& r : subsets(rows, k))
            for (const auto& c : subsets(cols, k)) {
                Big d = abs(det(r, c));
                g = boost::multiprecision::gcd(g, d);
            }
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

/// 2x2 matrices over Z/p modulo +-I, p prime.
struct Mat {
    long long a, b, c, d;
};

inline Mat mul(const Mat& x, const Mat& y, long long p) {
    return {(x.a * y.a + x.b * y.c) % p, (x.a * y.b + x.b * y.d) % p, (x.c * y.a + x.d * y.c) % p,
            (x.c * y.b + x.d * y.d) % p};
}

inline bool is_scalar_identity(const Mat& x, long long p) {
    return x.b == 0 && x.c == 0 && x.a == x.d && (x.a == 1 || x.a == p - 1);
}

/// Order of x in PSL(2, p).
inline int order(const Mat& x, long long p) {
    Mat y = x;
    int n = 1;
    while (!is_scalar_identity(y, p)) {
        y = mul(y, x, p);
        ++n;
    }
    return n;
}

/// Brute force: some u, v in PSL(2, p) with u^5 = v^7 = (uv)^2 = 1 and u != 1.
inline bool has_257_quotient(long long p) {
    std::vector<Mat> elements;
    for (long long a = 0; a < p; ++a)
        for (long long b = 0; b < p; ++b)
            for (long long c = 0; c < p; ++c)
                for (long long d = 0; d < p; ++d)
                    if (((a * d - b * c) % p + p) % p == 1) elements.push_back({a, b, c, d});
    std::vector<Mat> fives, sevens;
    for (const auto& x : elements) {
        const int o = order(x, p);
        if (o == 5) fives.push_back(x);
        if (o == 7) sevens.push_back(x);
    }
    for (const auto& u : fives)
        for (const auto& v : sevens) {
            const Mat uv = mul(u, v, p);
            if (is_scalar_identity(mul(uv, uv, p), p)) return true;
        }
    return false;
}

}  // namespace oracle
