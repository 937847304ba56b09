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

#include <vector>

#include "cliffordlearn/f2matrix.hpp"

namespace cliffordlearn {

// Affine subspace {R b + t | b in GF(2)^m} of GF(2)^n, held as a full
// column rank basis R and an offset t. The pair (R, t) is not unique;
// equality compares canonical forms.
class AffineSubspace {
  public:
    AffineSubspace(size_t n, F2Matrix basis, BitVec offset);

    static AffineSubspace full_space(size_t n);
    static AffineSubspace point(const BitVec& t);

    size_t ambient_dim() const { return n_; }
    size_t dim() const { return basis_.cols(); }
    const F2Matrix& basis() const { return basis_; }
    const BitVec& offset() const { return offset_; }

    bool member(const BitVec& x) const;

    // All 2^m elements, in the order of basis coefficient vectors counted
    // little-endian. Refuses dimensions above 30.
    std::vector<BitVec> enumerate() const;

    AffineSubspace translate(const BitVec& c) const;

    // Column-reduced basis with the offset reduced modulo the column space.
    // Unique per subspace.
    AffineSubspace canonical() const;

    bool is_subspace_of(const AffineSubspace& other) const;

    bool operator==(const AffineSubspace& other) const;
    bool operator!=(const AffineSubspace& other) const { return !(*this == other); }

  private:
    size_t n_;
    F2Matrix basis_;
    BitVec offset_;
};

// Probability that k uniform random vectors span GF(2)^n:
// 0 for k < n, otherwise prod_{j=0}^{n-1} (1 - 2^(j-k)).
double span_probability(size_t k, size_t n);

}  // namespace cliffordlearn
