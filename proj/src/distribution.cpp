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

#include "cliffordlearn/distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "cliffordlearn/rng.hpp"

namespace cliffordlearn {

using json = nlohmann::ordered_json;

namespace {

constexpr double kDenseNormTolerance = 1e-12;
constexpr size_t kDenseMaxBits = 20;

double pow2_neg(size_t e) {
    return std::ldexp(1.0, -static_cast<int>(e));
}

}  // namespace

BornDistribution BornDistribution::affine(AffineSubspace support) {
    return BornDistribution(std::variant<AffineSubspace, Dense>(std::move(support)));
}

BornDistribution BornDistribution::dense(size_t n, std::vector<double> table) {
    if (n == 0 || n > kDenseMaxBits) {
        throw std::invalid_argument("dense distributions limited to 1 <= n <= 20");
    }
    if (table.size() != (size_t{1} << n)) {
        throw std::invalid_argument("dense table size must be 2^n");
    }
    double total = 0.0;
    for (double p : table) {
        if (p < 0.0) {
            throw std::invalid_argument("probabilities must be nonnegative");
        }
        total += p;
    }
    if (std::fabs(total - 1.0) > kDenseNormTolerance) {
        throw std::invalid_argument("dense table must sum to 1");
    }
    return BornDistribution(std::variant<AffineSubspace, Dense>(Dense{n, std::move(table)}));
}

BornDistribution BornDistribution::uniform(size_t n) {
    if (n == 0) {
        throw std::invalid_argument("n must be positive");
    }
    return affine(AffineSubspace::full_space(n));
}

BornDistribution BornDistribution::embedded_uniform(size_t k, size_t n) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("embedded uniform needs 1 <= k <= n");
    }
    std::vector<BitVec> cols;
    for (size_t j = 0; j < k; j++) {
        BitVec e(n);
        e.set(j, true);
        cols.push_back(std::move(e));
    }
    return affine(AffineSubspace(n, F2Matrix::from_columns(cols, n), BitVec(n)));
}

size_t BornDistribution::num_bits() const {
    if (is_affine()) {
        return std::get<AffineSubspace>(repr_).ambient_dim();
    }
    return std::get<Dense>(repr_).n;
}

const AffineSubspace& BornDistribution::support() const {
    return std::get<AffineSubspace>(repr_);
}

const BornDistribution::Dense& BornDistribution::dense_table() const {
    return std::get<Dense>(repr_);
}

double BornDistribution::prob(const BitVec& x) const {
    if (is_affine()) {
        return prob_dyadic(x).value();
    }
    const auto& d = std::get<Dense>(repr_);
    if (x.size() != d.n) {
        throw std::invalid_argument("event length mismatch");
    }
    return d.table[x.to_index_msb0()];
}

Dyadic BornDistribution::prob_dyadic(const BitVec& x) const {
    const auto& a = support();
    return a.member(x) ? Dyadic::pow2(a.dim()) : Dyadic::zero_value();
}

BitVec BornDistribution::sample(std::mt19937_64& rng) const {
    if (is_affine()) {
        const auto& a = support();
        BitVec b = BitVec::random(a.dim(), rng);
        return a.basis().mul_vec(b) ^ a.offset();
    }
    const auto& d = std::get<Dense>(repr_);
    double u = random_unit_double(rng);
    double acc = 0.0;
    for (size_t i = 0; i < d.table.size(); i++) {
        acc += d.table[i];
        if (u < acc) {
            return BitVec::from_index_msb0(d.n, i);
        }
    }
    return BitVec::from_index_msb0(d.n, d.table.size() - 1);
}

std::string BornDistribution::to_json_string() const {
    json doc;
    if (is_affine()) {
        const auto& a = support();
        doc["type"] = "affine";
        doc["n"] = a.ambient_dim();
        doc["basis"] = a.basis().to_row_strings();
        doc["offset"] = a.offset().to_string();
    } else {
        const auto& d = std::get<Dense>(repr_);
        doc["type"] = "dense";
        doc["n"] = d.n;
        doc["table"] = d.table;
    }
    return doc.dump();
}

BornDistribution BornDistribution::from_json_string(const std::string& text) {
    json doc = json::parse(text);
    std::string type = doc.at("type").get<std::string>();
    size_t n = doc.at("n").get<size_t>();
    if (type == "affine") {
        auto basis = F2Matrix::from_row_strings(doc.at("basis").get<std::vector<std::string>>());
        if (basis.rows() != n) {
            throw std::invalid_argument("basis row count must equal n");
        }
        auto offset = BitVec::from_string(doc.at("offset").get<std::string>());
        return affine(AffineSubspace(n, basis, offset));
    }
    if (type == "dense") {
        return dense(n, doc.at("table").get<std::vector<double>>());
    }
    throw std::invalid_argument("unknown distribution type: " + type);
}

namespace {

double tv_affine_affine(const AffineSubspace& a, const AffineSubspace& b) {
    size_t n = a.ambient_dim();
    size_t ma = a.dim(), mb = b.dim();
    // Columns of [Ra | Rb] against ta ^ tb decide whether the supports meet;
    // if they do, the intersection is affine of dimension ma + mb - rank.
    std::vector<BitVec> cols;
    for (size_t c = 0; c < ma; c++) {
        cols.push_back(a.basis().col(c));
    }
    for (size_t c = 0; c < mb; c++) {
        cols.push_back(b.basis().col(c));
    }
    F2Matrix joint = F2Matrix::from_columns(cols, n);
    if (!joint.solve(a.offset() ^ b.offset()).has_value()) {
        return 1.0;
    }
    size_t mi = ma + mb - joint.rank();
    double pa = pow2_neg(ma), pb = pow2_neg(mb);
    double shared = std::ldexp(1.0, static_cast<int>(mi)) * std::fabs(pa - pb);
    double only_a = 1.0 - std::ldexp(1.0, static_cast<int>(mi) - static_cast<int>(ma));
    double only_b = 1.0 - std::ldexp(1.0, static_cast<int>(mi) - static_cast<int>(mb));
    return 0.5 * (shared + only_a + only_b);
}

}  // namespace

double tv_distance(const BornDistribution& p, const BornDistribution& q) {
    if (p.num_bits() != q.num_bits()) {
        throw std::invalid_argument("distributions live on different bit counts");
    }
    if (p.is_affine() && q.is_affine()) {
        return tv_affine_affine(p.support(), q.support());
    }
    size_t n = p.num_bits();
    if (n > kDenseMaxBits) {
        throw std::invalid_argument("dense comparison limited to n <= 20");
    }
    double acc = 0.0;
    for (uint64_t i = 0; i < (uint64_t{1} << n); i++) {
        BitVec x = BitVec::from_index_msb0(n, i);
        acc += std::fabs(p.prob(x) - q.prob(x));
    }
    return 0.5 * acc;
}

double expectation(const BornDistribution& p, const StatQuery& phi) {
    if (phi.num_bits() != p.num_bits()) {
        throw std::invalid_argument("query length mismatch");
    }
    if (p.is_affine()) {
        const auto& a = p.support();
        double sum = 0.0;
        for (const auto& x : a.enumerate()) {
            sum += phi.eval(x);
        }
        return sum * pow2_neg(a.dim());
    }
    const auto& d = p.dense_table();
    double sum = 0.0;
    for (size_t i = 0; i < d.table.size(); i++) {
        if (d.table[i] != 0.0) {
            sum += d.table[i] * phi.eval(BitVec::from_index_msb0(d.n, i));
        }
    }
    return sum;
}

double parity_expectation(const AffineSubspace& a, const BitVec& s) {
    if (s.size() != a.ambient_dim()) {
        throw std::invalid_argument("parity vector length mismatch");
    }
    for (size_t c = 0; c < a.dim(); c++) {
        if (s.dot(a.basis().col(c))) {
            return 0.0;
        }
    }
    return s.dot(a.offset()) ? -1.0 : 1.0;
}

}  // namespace cliffordlearn
