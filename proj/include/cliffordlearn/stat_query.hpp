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

#include <functional>
#include <string>
#include <vector>

#include "cliffordlearn/bitvec.hpp"

namespace cliffordlearn {

// Symmetric Gaussian kernel over bit strings; the squared distance is the
// Hamming distance.
struct GaussianKernel {
    std::vector<double> bandwidths;

    double operator()(const BitVec& x, const BitVec& y) const;
};

// A query function phi with a declared codomain [lo, hi]. Evaluation
// enforces the codomain; parity queries serialize as their s bit string.
class StatQuery {
  public:
    StatQuery(size_t n, double lo, double hi, std::string descriptor,
              std::function<double(const BitVec&)> fn);

    static StatQuery parity(const BitVec& s);
    static StatQuery indicator(size_t n, std::function<bool(const BitVec&)> predicate,
                               bool zero_one_codomain);
    static StatQuery table(size_t n, std::vector<double> values, double lo, double hi);
    static StatQuery kernel_section(const GaussianKernel& kernel, const BitVec& x0);

    size_t num_bits() const { return n_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }
    const std::string& descriptor() const { return descriptor_; }

    double eval(const BitVec& x) const;

    // phi rescaled by the affine bijection [lo, hi] -> [-1, 1].
    StatQuery rescaled_to_unit() const;

  private:
    size_t n_;
    double lo_;
    double hi_;
    std::string descriptor_;
    std::function<double(const BitVec&)> fn_;
};

}  // namespace cliffordlearn
