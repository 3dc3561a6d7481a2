/*
   Copyright 2026 The vira authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Exact linear algebra over Q: dense matrices for the public surface, sparse
// incremental echelon forms for the solvers.

#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vira/scalar.hpp"

namespace vira {

class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("RationalMatrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> apply(const std::vector<Rational>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("RationalMatrix::apply: size mismatch");
        std::vector<Rational> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
        return out;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

template <class Key>
using SparseVector = std::map<Key, Rational>;

/// Row echelon form built one vector at a time. Each stored row has
/// coefficient 1 on its pivot, the smallest key present in it.
template <class Key>
class Echelon {
  public:
    /// Reduces v against the stored rows in place.
    void reduce(SparseVector<Key>& v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto p = rows_.find(it->first);
            if (p == rows_.end()) {
                ++it;
                continue;
            }
            const Rational factor = it->second;
            const Key key = it->first;
            for (const auto& [k, c] : p->second) {
                auto [slot, inserted] = v.try_emplace(k, -(factor * c));
                if (!inserted) {
                    slot->second -= factor * c;
                    if (slot->second.is_zero()) v.erase(slot);
                }
            }
            it = v.upper_bound(key);
        }
    }

    /// Adds v to the span; returns false when it was already dependent.
    bool insert(SparseVector<Key> v) {
        reduce(v);
        if (v.empty()) return false;
        const Rational lead = v.begin()->second;
        if (!(lead == Rational(1)))
            for (auto& [k, c] : v) c /= lead;
        const Key pivot = v.begin()->first;
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    bool contains(SparseVector<Key> v) const {
        reduce(v);
        return v.empty();
    }

    std::size_t rank() const noexcept { return rows_.size(); }
    const std::map<Key, SparseVector<Key>>& rows() const noexcept { return rows_; }

  private:
    std::map<Key, SparseVector<Key>> rows_;
};

/// Nullspace basis of the system whose rows are given sparsely over columns
/// 0..cols-1. One vector per free column, with a 1 there and 0 on the other
/// free columns (the reduced-echelon basis).
inline std::vector<SparseVector<std::size_t>> sparse_nullspace(const std::vector<SparseVector<std::size_t>>& rows,
                                                              std::size_t cols) {
    Echelon<std::size_t> ech;
    for (const auto& r : rows) ech.insert(r);
    std::vector<std::size_t> pivots;
    for (const auto& [p, row] : ech.rows()) pivots.push_back(p);

    std::vector<SparseVector<std::size_t>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (ech.rows().count(f)) continue;
        SparseVector<std::size_t> x;
        x[f] = Rational(1);
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            if (*it > f) continue;
            Rational acc;
            for (const auto& [c, v] : ech.rows().at(*it)) {
                if (c == *it) continue;
                auto xv = x.find(c);
                if (xv != x.end()) acc += v * xv->second;
            }
            if (!acc.is_zero()) x[*it] = -acc;
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Exact nullspace of a dense matrix, returned as column vectors.
inline std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    std::vector<SparseVector<std::size_t>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) rows[r][c] = m(r, c);
    std::vector<std::vector<Rational>> out;
    for (const auto& sv : sparse_nullspace(rows, m.cols())) {
        std::vector<Rational> v(m.cols());
        for (const auto& [c, x] : sv) v[c] = x;
        out.push_back(std::move(v));
    }
    return out;
}

inline std::size_t rank(const RationalMatrix& m) {
    Echelon<std::size_t> ech;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        SparseVector<std::size_t> row;
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) row[c] = m(r, c);
        ech.insert(std::move(row));
    }
    return ech.rank();
}

}  // namespace vira
