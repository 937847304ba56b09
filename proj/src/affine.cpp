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

#include "cliffordlearn/affine.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace cliffordlearn {

AffineSubspace::AffineSubspace(size_t n, F2Matrix basis, BitVec offset)
    : n_(n), basis_(std::move(basis)), offset_(std::move(offset)) {
    if (basis_.rows() != n_ || offset_.size() != n_) {
        throw std::invalid_argument("basis and offset must live in the ambient space");
    }
    if (basis_.cols() > n_) {
        throw std::invalid_argument("subspace dimension exceeds ambient dimension");
    }
    if (basis_.rank() != basis_.cols()) {
        throw std::invalid_argument("basis must have full column rank");
    }
}

AffineSubspace AffineSubspace::full_space(size_t n) {
    return AffineSubspace(n, F2Matrix::identity(n), BitVec(n));
}

AffineSubspace AffineSubspace::point(const BitVec& t) {
    return AffineSubspace(t.size(), F2Matrix(t.size(), 0), t);
}

bool AffineSubspace::member(const BitVec& x) const {
    if (x.size() != n_) {
        throw std::invalid_argument("element length mismatch");
    }
    return basis_.solve(x ^ offset_).has_value();
}

std::vector<BitVec> AffineSubspace::enumerate() const {
    size_t m = dim();
    if (m > 30) {
        throw std::domain_error("subspace too large to enumerate");
    }
    std::vector<BitVec> cols;
    cols.reserve(m);
    for (size_t c = 0; c < m; c++) {
        cols.push_back(basis_.col(c));
    }
    std::vector<BitVec> out;
    out.reserve(size_t{1} << m);
    for (uint64_t b = 0; b < (uint64_t{1} << m); b++) {
        BitVec x = offset_;
        for (size_t c = 0; c < m; c++) {
            if ((b >> c) & 1u) {
                x ^= cols[c];
            }
        }
        out.push_back(std::move(x));
    }
    return out;
}

AffineSubspace AffineSubspace::translate(const BitVec& c) const {
    return AffineSubspace(n_, basis_, offset_ ^ c);
}

AffineSubspace AffineSubspace::canonical() const {
    auto rr = basis_.transpose().rref();
    size_t m = rr.pivots.size();  // equals dim(): basis has full column rank
    std::vector<BitVec> cols;
    cols.reserve(m);
    BitVec t = offset_;
    for (size_t r = 0; r < m; r++) {
        const BitVec& row = rr.matrix.row(r);
        if (t.get(rr.pivots[r])) {
            t ^= row;
        }
        cols.push_back(row);
    }
    return AffineSubspace(n_, F2Matrix::from_columns(cols, n_), t);
}

bool AffineSubspace::is_subspace_of(const AffineSubspace& other) const {
    if (n_ != other.n_) {
        return false;
    }
    if (!other.member(offset_)) {
        return false;
    }
    for (size_t c = 0; c < basis_.cols(); c++) {
        if (!other.basis_.solve(basis_.col(c)).has_value()) {
            return false;
        }
    }
    return true;
}

bool AffineSubspace::operator==(const AffineSubspace& other) const {
    if (n_ != other.n_ || dim() != other.dim()) {
        return false;
    }
    AffineSubspace a = canonical();
    AffineSubspace b = other.canonical();
    return a.basis_ == b.basis_ && a.offset_ == b.offset_;
}

double span_probability(size_t k, size_t n) {
    if (n == 0) {
        return 1.0;
    }
    if (k < n) {
        return 0.0;
    }
    double p = 1.0;
    for (size_t j = 0; j < n; j++) {
        p *= 1.0 - std::ldexp(1.0, static_cast<int>(j) - static_cast<int>(k));
    }
    return p;
}

}  // namespace cliffordlearn
