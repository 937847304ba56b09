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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cliffordlearn/bitvec.hpp"

namespace cliffordlearn {

struct RrefResult;

// Dense binary matrix with packed rows. Row operations are word-wise XOR;
// elimination is the hot path of both the learner and the tableau simulator.
class F2Matrix {
  public:
    F2Matrix() = default;

    F2Matrix(size_t rows, size_t cols);

    static F2Matrix identity(size_t n);
    static F2Matrix from_rows(std::vector<BitVec> rows, size_t cols);
    static F2Matrix from_row_strings(const std::vector<std::string>& rows);
    static F2Matrix from_columns(const std::vector<BitVec>& columns, size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    bool get(size_t r, size_t c) const;
    void set(size_t r, size_t c, bool v);

    const BitVec& row(size_t r) const { return row_[r]; }
    BitVec col(size_t c) const;

    F2Matrix transpose() const;

    RrefResult rref() const;
    size_t rank() const;

    // Any solution b of (*this) b = y, or nullopt if the system is
    // inconsistent. Free variables are set to zero.
    std::optional<BitVec> solve(const BitVec& y) const;

    // Columns form a basis of {x : Mx = 0}.
    F2Matrix nullspace() const;

    BitVec mul_vec(const BitVec& x) const;

    std::vector<std::string> to_row_strings() const;

    bool operator==(const F2Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && row_ == other.row_;
    }

    bool operator!=(const F2Matrix& other) const { return !(*this == other); }

  private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<BitVec> row_;
};

struct RrefResult {
    F2Matrix matrix;
    std::vector<size_t> pivots;  // pivot column per nonzero row, ascending
};

// Maximal linearly independent subset of `vectors`, in first-seen order,
// returned as the columns of a matrix. Column span equals span of the input.
F2Matrix independent_subset(const std::vector<BitVec>& vectors);

// Basis of {s : s . u = 0 for every column u of basis}. Requires full column
// rank; the result has n - m columns.
F2Matrix orthogonal_complement(const F2Matrix& basis);

}  // namespace cliffordlearn
