#pragma once

// Exact sparse elimination over the integers, prime fields and the rationals.

#include <algorithm>
#include <queue>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "plmorse/sparse_matrix.hpp"

namespace plmorse {

using Rational = boost::multiprecision::cpp_rational;

/// Integers; only ±1 may be used as sparse pivots.
struct IntegerRing {
    using Scalar = Integer;
    Scalar from_int(const Integer& v) const { return v; }
    bool is_zero(const Scalar& a) const { return a == 0; }
    bool is_pivot(const Scalar& a) const { return a == 1 || a == -1; }
    // a - (a / p) * b with p a unit
    Scalar quotient(const Scalar& a, const Scalar& p) const { return p == 1 ? a : Scalar(-a); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
    Scalar neg(const Scalar& a) const { return -a; }
};

struct PrimeField {
    using Scalar = std::uint64_t;
    std::uint64_t p;
    Scalar from_int(const Integer& v) const {
        Integer r = v % p;
        if (r < 0) r += p;
        return static_cast<std::uint64_t>(r);
    }
    bool is_zero(Scalar a) const { return a == 0; }
    bool is_pivot(Scalar a) const { return a != 0; }
    Scalar inverse(Scalar a) const {
        // Fermat; p is prime.
        Scalar r = 1, b = a, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }
    Scalar quotient(Scalar a, Scalar piv) const { return a * inverse(piv) % p; }
    Scalar mul(Scalar a, Scalar b) const { return a * b % p; }
    Scalar sub(Scalar a, Scalar b) const { return (a + p - b) % p; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p - a; }
};

struct RationalField {
    using Scalar = Rational;
    Scalar from_int(const Integer& v) const { return Scalar(v); }
    bool is_zero(const Scalar& a) const { return a == 0; }
    bool is_pivot(const Scalar& a) const { return a != 0; }
    Scalar quotient(const Scalar& a, const Scalar& piv) const { return a / piv; }
    Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
    Scalar neg(const Scalar& a) const { return -a; }
};

/// Sparse Gaussian elimination with Markowitz-style pivot choice: the column
/// with fewest entries first, within it the shortest row holding a pivot.
/// Pivot rows and columns are removed. Columns whose entries are all
/// non-pivots (integer case) stay behind in the residual.
template <class Ring>
class SparseEliminator {
  public:
    using Scalar = typename Ring::Scalar;
    using Row = std::vector<std::pair<std::size_t, Scalar>>;

    SparseEliminator(const SparseIntMatrix& m, Ring ring = {}) : ring_(ring), ncols_(m.cols()) {
        rows_.resize(m.rows());
        col_rows_.resize(ncols_);
        col_count_.assign(ncols_, 0);
        col_state_.assign(ncols_, State::open);
        for (std::size_t c = 0; c < ncols_; ++c)
            for (const auto& [r, v] : m.column(c)) {
                Scalar s = ring_.from_int(v);
                if (ring_.is_zero(s)) continue;
                rows_[r].emplace_back(c, std::move(s));
                col_rows_[c].push_back(r);
                ++col_count_[c];
            }
    }

    /// Runs elimination; returns the number of pivots taken.
    std::size_t run() {
        for (std::size_t c = 0; c < ncols_; ++c) heap_.push({col_count_[c], c});
        while (!heap_.empty()) {
            auto [count, c] = heap_.top();
            heap_.pop();
            if (col_state_[c] != State::open || count != col_count_[c]) continue;
            if (count == 0) {
                col_state_[c] = State::done;
                continue;
            }
            std::size_t best = SIZE_MAX;
            for (auto r : live_rows(c)) {
                const auto& row = rows_[r];
                if (!ring_.is_pivot(entry(row, c))) continue;
                if (best == SIZE_MAX || row.size() < rows_[best].size()) best = r;
            }
            if (best == SIZE_MAX) {
                col_state_[c] = State::blocked;
                continue;
            }
            pivot(best, c);
        }
        return pivots_;
    }

    /// Remaining nonzero rows after run(), as (col, value) lists.
    std::vector<Row> residual() const {
        std::vector<Row> out;
        for (const auto& r : rows_)
            if (!r.empty()) out.push_back(r);
        return out;
    }

  private:
    enum class State : unsigned char { open, blocked, done };
    struct Key {
        std::size_t count, col;
        bool operator>(const Key& o) const { return count != o.count ? count > o.count : col > o.col; }
    };

    const Scalar& entry(const Row& row, std::size_t c) const {
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, std::size_t col) { return e.first < col; });
        return it->second;
    }

    bool row_has(std::size_t r, std::size_t c) const {
        const auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, std::size_t col) { return e.first < col; });
        return it != row.end() && it->first == c;
    }

    const std::vector<std::size_t>& live_rows(std::size_t c) {
        auto& list = col_rows_[c];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        list.erase(std::remove_if(list.begin(), list.end(), [&](std::size_t r) { return !row_has(r, c); }),
                   list.end());
        return list;
    }

    void touch(std::size_t c) {
        if (col_state_[c] == State::done) return;
        col_state_[c] = State::open;
        heap_.push({col_count_[c], c});
    }

    void pivot(std::size_t pr, std::size_t pc) {
        ++pivots_;
        Row prow = std::move(rows_[pr]);
        rows_[pr].clear();
        const Scalar pval = entry(prow, pc);
        std::vector<std::size_t> targets = col_rows_[pc];
        for (auto r : targets) {
            if (r == pr) continue;
            Row& row = rows_[r];
            const Scalar factor = ring_.quotient(entry(row, pc), pval);
            Row merged;
            merged.reserve(row.size() + prow.size());
            auto a = row.begin();
            auto b = prow.begin();
            while (a != row.end() || b != prow.end()) {
                if (b == prow.end() || (a != row.end() && a->first < b->first)) {
                    merged.push_back(std::move(*a++));
                } else if (a == row.end() || b->first < a->first) {
                    merged.emplace_back(b->first, ring_.neg(ring_.mul(factor, b->second)));
                    col_rows_[b->first].push_back(r);
                    ++col_count_[b->first];
                    touch(b->first);
                    ++b;
                } else {
                    Scalar v = ring_.sub(a->second, ring_.mul(factor, b->second));
                    if (ring_.is_zero(v)) {
                        --col_count_[a->first];
                        touch(a->first);
                    } else {
                        merged.emplace_back(a->first, std::move(v));
                        touch(a->first);
                    }
                    ++a;
                    ++b;
                }
            }
            row = std::move(merged);
        }
        for (const auto& [c, v] : prow) {
            --col_count_[c];
            touch(c);
        }
        col_state_[pc] = State::done;
        col_rows_[pc].clear();
    }

    Ring ring_;
    std::size_t ncols_;
    std::vector<Row> rows_;
    std::vector<std::vector<std::size_t>> col_rows_;
    std::vector<std::size_t> col_count_;
    std::vector<State> col_state_;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> heap_;
    std::size_t pivots_ = 0;
};

/// Rank over a field.
template <class Field>
std::size_t rank_over(const SparseIntMatrix& m, Field field = {}) {
    SparseEliminator<Field> e(m, field);
    return e.run();
}

struct SmithForm {
    std::vector<Integer> invariants;  // d1 | d2 | ..., all positive
    std::size_t rank = 0;
};

namespace detail {

inline std::vector<Integer> dense_diagonalize(std::vector<std::vector<Integer>> a) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::vector<Integer> diag;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        while (true) {
            std::size_t pi = SIZE_MAX, pj = SIZE_MAX;
            Integer best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 && (pi == SIZE_MAX || abs(a[i][j]) < best)) {
                        best = abs(a[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (pi == SIZE_MAX) return diag;
            std::swap(a[t], a[pi]);
            for (auto& row : a) std::swap(row[t], row[pj]);
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                Integer q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Integer q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (clean) break;
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

inline void to_divisibility_chain(std::vector<Integer>& d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            Integer g = gcd(d[i], d[j]);
            Integer l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
}

}  // namespace detail

/// Smith normal form invariants: unit pivots are eliminated sparsely, the
/// residual is diagonalized densely.
inline SmithForm smith_normal_form(const SparseIntMatrix& m) {
    SparseEliminator<IntegerRing> e(m);
    const std::size_t units = e.run();
    auto rest = e.residual();
    SmithForm out;
    out.invariants.assign(units, Integer(1));
    if (!rest.empty()) {
        std::vector<std::size_t> cols;
        for (const auto& r : rest)
            for (const auto& [c, v] : r) cols.push_back(c);
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        std::vector<std::vector<Integer>> dense(rest.size(), std::vector<Integer>(cols.size()));
        for (std::size_t i = 0; i < rest.size(); ++i)
            for (const auto& [c, v] : rest[i])
                dense[i][static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), c) - cols.begin())] = v;
        auto d = detail::dense_diagonalize(std::move(dense));
        detail::to_divisibility_chain(d);
        out.invariants.insert(out.invariants.end(), d.begin(), d.end());
    }
    out.rank = out.invariants.size();
    return out;
}

}  // namespace plmorse
