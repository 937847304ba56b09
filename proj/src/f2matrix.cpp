// Copyright 2026 The cliffordlearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cliffordlearn/f2matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cliffordlearn {

F2Matrix::F2Matrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), row_(rows, BitVec(cols)) {}

F2Matrix F2Matrix::identity(size_t n) {
    F2Matrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

F2Matrix F2Matrix::from_rows(std::vector<BitVec> rows, size_t cols) {
    for (const auto& r : rows) {
        if (r.size() != cols) {
            throw std::invalid_argument("row length mismatch");
        }
    }
    F2Matrix m;
    m.rows_ = rows.size();
    m.cols_ = cols;
    m.row_ = std::move(rows);
    return m;
}

F2Matrix F2Matrix::from_row_strings(const std::vector<std::string>& rows) {
    std::vector<BitVec> parsed;
    parsed.reserve(rows.size());
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (const auto& s : rows) {
        parsed.push_back(BitVec::from_string(s));
    }
    return from_rows(std::move(parsed), cols);
}

F2Matrix F2Matrix::from_columns(const std::vector<BitVec>& columns, size_t n) {
    F2Matrix m(n, columns.size());
    for (size_t c = 0; c < columns.size(); c++) {
        if (columns[c].size() != n) {
            throw std::invalid_argument("column length mismatch");
        }
        for (size_t r = 0; r < n; r++) {
            if (columns[c].get(r)) {
                m.set(r, c, true);
            }
        }
    }
    return m;
}

bool F2Matrix::get(size_t r, size_t c) const {
    if (r >= rows_) {
        throw std::out_of_range("row index out of range");
    }
    return row_[r].get(c);
}

void F2Matrix::set(size_t r, size_t c, bool v) {
    if (r >= rows_) {
        throw std::out_of_range("row index out of range");
    }
    row_[r].set(c, v);
}

BitVec F2Matrix::col(size_t c) const {
    BitVec v(rows_);
    for (size_t r = 0; r < rows_; r++) {
        if (row_[r].get(c)) {
            v.set(r, true);
        }
    }
    return v;
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (row_[r].get(c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

RrefResult F2Matrix::rref() const {
    RrefResult res{*this, {}};
    auto& m = res.matrix;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; c++) {
        size_t pivot = r;
        while (pivot < rows_ && !m.row_[pivot].get(c)) {
            pivot++;
        }
        if (pivot == rows_) {
            continue;
        }
        std::swap(m.row_[r], m.row_[pivot]);
        for (size_t j = 0; j < rows_; j++) {
            if (j != r && m.row_[j].get(c)) {
                m.row_[j] ^= m.row_[r];
            }
        }
        res.pivots.push_back(c);
        r++;
    }
    return res;
}

size_t F2Matrix::rank() const {
    return rref().pivots.size();
}

std::optional<BitVec> F2Matrix::solve(const BitVec& y) const {
    if (y.size() != rows_) {
        throw std::invalid_argument("right-hand side length mismatch");
    }
    // Eliminate on an augmented copy.
    std::vector<BitVec> m = row_;
    BitVec aug = y;
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; c++) {
        size_t pivot = r;
        while (pivot < rows_ && !m[pivot].get(c)) {
            pivot++;
        }
        if (pivot == rows_) {
            continue;
        }
        std::swap(m[r], m[pivot]);
        bool ar = aug.get(r), ap = aug.get(pivot);
        aug.set(r, ap);
        aug.set(pivot, ar);
        for (size_t j = 0; j < rows_; j++) {
            if (j != r && m[j].get(c)) {
                m[j] ^= m[r];
                aug.set(j, aug.get(j) ^ aug.get(r));
            }
        }
        pivots.emplace_back(r, c);
        r++;
    }
    for (size_t j = r; j < rows_; j++) {
        if (aug.get(j)) {
            return std::nullopt;
        }
    }
    BitVec b(cols_);
    for (auto [pr, pc] : pivots) {
        b.set(pc, aug.get(pr));
    }
    return b;
}

F2Matrix F2Matrix::nullspace() const {
    auto rr = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : rr.pivots) {
        is_pivot[p] = true;
    }
    std::vector<BitVec> basis;
    for (size_t f = 0; f < cols_; f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec v(cols_);
        v.set(f, true);
        for (size_t r = 0; r < rr.pivots.size(); r++) {
            if (rr.matrix.row(r).get(f)) {
                v.set(rr.pivots[r], true);
            }
        }
        basis.push_back(std::move(v));
    }
    return from_columns(basis, cols_);
}

BitVec F2Matrix::mul_vec(const BitVec& x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("vector length mismatch");
    }
    BitVec y(rows_);
    for (size_t r = 0; r < rows_; r++) {
        if (row_[r].dot(x)) {
            y.set(r, true);
        }
    }
    return y;
}

std::vector<std::string> F2Matrix::to_row_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (const auto& r : row_) {
        out.push_back(r.to_string());
    }
    return out;
}

F2Matrix independent_subset(const std::vector<BitVec>& vectors) {
    size_t n = vectors.empty() ? 0 : vectors[0].size();
    for (const auto& v : vectors) {
        if (v.size() != n) {
            throw std::invalid_argument("vector length mismatch");
        }
    }
    // Incremental elimination: keep reduced copies of the retained vectors.
    std::vector<BitVec> reduced;
    std::vector<size_t> pivot_of;  // pivot index of reduced[i]
    std::vector<BitVec> kept;
    for (const auto& v : vectors) {
        BitVec w = v;
        for (size_t i = 0; i < reduced.size(); i++) {
            if (w.get(pivot_of[i])) {
                w ^= reduced[i];
            }
        }
        if (w.none()) {
            continue;
        }
        size_t p = 0;
        while (!w.get(p)) {
            p++;
        }
        reduced.push_back(w);
        pivot_of.push_back(p);
        kept.push_back(v);
    }
    return F2Matrix::from_columns(kept, n);
}

F2Matrix orthogonal_complement(const F2Matrix& basis) {
    if (basis.rank() != basis.cols()) {
        throw std::invalid_argument("basis must have full column rank");
    }
    return basis.transpose().nullspace();
}

}  // namespace cliffordlearn
