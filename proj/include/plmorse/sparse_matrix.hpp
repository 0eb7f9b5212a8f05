#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "plmorse/complex.hpp"

namespace plmorse {

using Integer = boost::multiprecision::cpp_int;

/// Sparse integer matrix in column-major form. No explicit zeros are stored.
class SparseIntMatrix {
  public:
    using Entry = std::pair<std::size_t, Integer>;

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }

    /// Entries of one column sorted by row.
    const std::vector<Entry>& column(std::size_t c) const { return columns_.at(c); }

    void set(std::size_t r, std::size_t c, Integer v) {
        if (r >= rows_ || c >= cols()) throw Error("matrix index out of range");
        auto& col = columns_[c];
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const Entry& e, std::size_t row) { return e.first < row; });
        if (it != col.end() && it->first == r) {
            if (v == 0)
                col.erase(it);
            else
                it->second = std::move(v);
        } else if (v != 0) {
            col.insert(it, Entry{r, std::move(v)});
        }
    }

    Integer get(std::size_t r, std::size_t c) const {
        const auto& col = columns_.at(c);
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const Entry& e, std::size_t row) { return e.first < row; });
        if (it != col.end() && it->first == r) return it->second;
        return 0;
    }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& c : columns_) n += c.size();
        return n;
    }

    bool is_zero() const { return nonzeros() == 0; }

    /// this * other
    SparseIntMatrix operator*(const SparseIntMatrix& other) const {
        if (cols() != other.rows()) throw Error("matrix dimension mismatch");
        SparseIntMatrix out(rows_, other.cols());
        std::vector<Integer> acc(rows_);
        std::vector<std::size_t> touched;
        std::vector<char> mark(rows_, 0);
        for (std::size_t j = 0; j < other.cols(); ++j) {
            for (const auto& [k, b] : other.column(j))
                for (const auto& [i, a] : columns_[k]) {
                    if (!mark[i]) {
                        mark[i] = 1;
                        touched.push_back(i);
                        acc[i] = 0;
                    }
                    acc[i] += a * b;
                }
            std::sort(touched.begin(), touched.end());
            for (auto i : touched) {
                if (acc[i] != 0) out.columns_[j].emplace_back(i, acc[i]);
                mark[i] = 0;
            }
            touched.clear();
        }
        return out;
    }

    static SparseIntMatrix from_dense(const std::vector<std::vector<long long>>& rows) {
        SparseIntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                if (rows[r][c] != 0) m.columns_[c].emplace_back(r, rows[r][c]);
        return m;
    }

    // Appends to column c; the caller keeps rows increasing.
    void push_back(std::size_t r, std::size_t c, Integer v) { columns_[c].emplace_back(r, std::move(v)); }

  private:
    std::size_t rows_ = 0;
    std::vector<std::vector<Entry>> columns_;
};

/// Boundary operator from k-faces to (k-1)-faces, both in lexicographic order.
/// Removing the i-th vertex of a sorted simplex carries the sign (-1)^i.
inline SparseIntMatrix boundary_matrix(const SimplicialComplex& c, int k) {
    if (k < 1 || k > c.dimension()) throw Error("boundary dimension " + std::to_string(k) + " out of range");
    const auto& upper = c.faces(k);
    const auto& lower = c.face_map(k - 1);
    SparseIntMatrix m(c.faces(k - 1).size(), upper.size());
    Simplex t(static_cast<std::size_t>(k));
    std::vector<std::pair<std::size_t, int>> col;
    for (std::size_t j = 0; j < upper.size(); ++j) {
        const auto& s = upper[j];
        col.clear();
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            for (std::size_t i = 0, w = 0; i < s.size(); ++i)
                if (i != drop) t[w++] = s[i];
            col.emplace_back(lower.at(t), drop % 2 == 0 ? 1 : -1);
        }
        std::sort(col.begin(), col.end());
        for (auto [r, v] : col) m.push_back(r, j, v);
    }
    return m;
}

}  // namespace plmorse
