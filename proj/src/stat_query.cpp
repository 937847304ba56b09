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

#include "cliffordlearn/stat_query.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace cliffordlearn {

double GaussianKernel::operator()(const BitVec& x, const BitVec& y) const {
    if (bandwidths.empty()) {
        throw std::invalid_argument("kernel needs at least one bandwidth");
    }
    double h = static_cast<double>((x ^ y).popcount());
    double sum = 0.0;
    for (double sigma : bandwidths) {
        if (sigma <= 0.0) {
            throw std::invalid_argument("bandwidths must be positive");
        }
        sum += std::exp(-h / (2.0 * sigma));
    }
    return sum / static_cast<double>(bandwidths.size());
}

StatQuery::StatQuery(size_t n, double lo, double hi, std::string descriptor,
                     std::function<double(const BitVec&)> fn)
    : n_(n), lo_(lo), hi_(hi), descriptor_(std::move(descriptor)), fn_(std::move(fn)) {
    if (!(lo_ <= hi_)) {
        throw std::invalid_argument("query codomain must satisfy lo <= hi");
    }
}

StatQuery StatQuery::parity(const BitVec& s) {
    return StatQuery(s.size(), -1.0, 1.0, "parity:" + s.to_string(),
                     [s](const BitVec& x) { return s.dot(x) ? -1.0 : 1.0; });
}

StatQuery StatQuery::indicator(size_t n, std::function<bool(const BitVec&)> predicate,
                               bool zero_one_codomain) {
    double lo = zero_one_codomain ? 0.0 : -1.0;
    return StatQuery(n, lo, 1.0, zero_one_codomain ? "indicator01" : "indicatorspin",
                     [predicate = std::move(predicate), lo](const BitVec& x) {
                         return predicate(x) ? 1.0 : lo;
                     });
}

StatQuery StatQuery::table(size_t n, std::vector<double> values, double lo, double hi) {
    if (n > 20) {
        throw std::invalid_argument("table queries limited to n <= 20");
    }
    if (values.size() != (size_t{1} << n)) {
        throw std::invalid_argument("table size must be 2^n");
    }
    return StatQuery(n, lo, hi, "table",
                     [values = std::move(values)](const BitVec& x) {
                         return values[x.to_index_msb0()];
                     });
}

StatQuery StatQuery::kernel_section(const GaussianKernel& kernel, const BitVec& x0) {
    return StatQuery(x0.size(), 0.0, 1.0, "kernel:" + x0.to_string(),
                     [kernel, x0](const BitVec& y) { return kernel(x0, y); });
}

double StatQuery::eval(const BitVec& x) const {
    if (x.size() != n_) {
        throw std::invalid_argument("query input length mismatch");
    }
    double v = fn_(x);
    if (v < lo_ || v > hi_) {
        throw std::domain_error("query value escaped its declared codomain");
    }
    return v;
}

StatQuery StatQuery::rescaled_to_unit() const {
    if (lo_ == hi_) {
        throw std::invalid_argument("degenerate codomain cannot be rescaled");
    }
    double mid = (lo_ + hi_) / 2.0;
    double half = (hi_ - lo_) / 2.0;
    auto base = *this;
    return StatQuery(n_, -1.0, 1.0, descriptor_ + "|unit",
                     [base, mid, half](const BitVec& x) {
                         return (base.eval(x) - mid) / half;
                     });
}

}  // namespace cliffordlearn
