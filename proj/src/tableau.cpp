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

#include "cliffordlearn/tableau.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include "cliffordlearn/f2matrix.hpp"
#include "cliffordlearn/rng.hpp"

namespace cliffordlearn {

void PauliRow::multiply_left(const PauliRow& rhs) {
    // Per-qubit phase of P(a,b) * P(c,d) relative to P(a^c, b^d) is a power
    // of i in {-1, 0, +1}; accumulate the exponents word-parallel.
    const auto& a = rhs.x.words();
    const auto& b = rhs.z.words();
    const auto& c = x.words();
    const auto& d = z.words();
    uint64_t plus = 0;
    uint64_t minus = 0;
    for (size_t k = 0; k < a.size(); k++) {
        uint64_t m1 = (~a[k] & b[k] & c[k] & ~d[k]) | (a[k] & ~b[k] & c[k] & d[k]) |
                      (a[k] & b[k] & ~c[k] & d[k]);
        uint64_t m3 = (~a[k] & b[k] & c[k] & d[k]) | (a[k] & ~b[k] & ~c[k] & d[k]) |
                      (a[k] & b[k] & c[k] & ~d[k]);
        plus += std::popcount(m1);
        minus += std::popcount(m3);
    }
    int total = static_cast<int>((2 * (sign + rhs.sign) + plus + 4 * minus - minus) & 3u);
    if (total & 1) {
        throw std::logic_error("pauli product phase is not real");
    }
    sign = total == 2;
    x ^= rhs.x;
    z ^= rhs.z;
}

namespace {

bool rows_commute(const PauliRow& a, const PauliRow& b) {
    return !(a.x.dot(b.z) ^ a.z.dot(b.x));
}

}  // namespace

StabilizerTableau::StabilizerTableau(size_t n) : n_(n), rows_(2 * n, PauliRow(n)) {}

StabilizerTableau StabilizerTableau::zero_state(size_t n) {
    if (n == 0) {
        throw std::invalid_argument("qubit count must be positive");
    }
    StabilizerTableau t(n);
    for (size_t i = 0; i < n; i++) {
        t.rows_[i].x.set(i, true);       // destabilizer +X_i
        t.rows_[n + i].z.set(i, true);   // stabilizer +Z_i
    }
    return t;
}

void StabilizerTableau::apply_gate(const CliffordGate2& g, size_t qubit) {
    if (qubit + 1 >= n_) {
        throw std::invalid_argument("gate pair out of range");
    }
    for (auto& row : rows_) {
        PauliVec4 local = static_cast<PauliVec4>(
            row.x.get(qubit) | (row.z.get(qubit) << 1) | (row.x.get(qubit + 1) << 2) |
            (row.z.get(qubit + 1) << 3));
        if (local == 0) {
            continue;
        }
        auto [vec, flip] = g.conjugate(local);
        row.x.set(qubit, vec & 1u);
        row.z.set(qubit, (vec >> 1) & 1u);
        row.x.set(qubit + 1, (vec >> 2) & 1u);
        row.z.set(qubit + 1, (vec >> 3) & 1u);
        row.sign ^= flip;
    }
#ifndef NDEBUG
    check_invariants();
#endif
}

BitVec StabilizerTableau::measure_all(std::mt19937_64& rng) const {
    StabilizerTableau t = *this;
    BitVec outcome(n_);
    for (size_t a = 0; a < n_; a++) {
        size_t p = n_;
        while (p < 2 * n_ && !t.rows_[p].x.get(a)) {
            p++;
        }
        if (p < 2 * n_) {
            // Random outcome: collapse onto +-Z_a. Row p - n is about to be
            // overwritten (and is the one row anticommuting with row p), so
            // it is skipped.
            for (size_t i = 0; i < 2 * n_; i++) {
                if (i != p && i != p - n_ && t.rows_[i].x.get(a)) {
                    t.rows_[i].multiply_left(t.rows_[p]);
                }
            }
            t.rows_[p - n_] = t.rows_[p];
            t.rows_[p] = PauliRow(n_);
            t.rows_[p].z.set(a, true);
            t.rows_[p].sign = random_bit(rng);
            outcome.set(a, t.rows_[p].sign);
        } else {
            // Deterministic outcome: accumulate the stabilizers matching
            // the destabilizers that anticommute with Z_a.
            PauliRow scratch(n_);
            for (size_t i = 0; i < n_; i++) {
                if (t.rows_[i].x.get(a)) {
                    scratch.multiply_left(t.rows_[n_ + i]);
                }
            }
            outcome.set(a, scratch.sign);
        }
    }
    return outcome;
}

AffineSubspace StabilizerTableau::affine_support() const {
    // Row-reduce the stabilizer x-block; rows left with x = 0 are the Z-only
    // generators +-Z^v, each contributing the constraint v.x = sign.
    std::vector<PauliRow> stab(rows_.begin() + static_cast<long>(n_), rows_.end());
    size_t r = 0;
    for (size_t c = 0; c < n_ && r < n_; c++) {
        size_t pivot = r;
        while (pivot < n_ && !stab[pivot].x.get(c)) {
            pivot++;
        }
        if (pivot == n_) {
            continue;
        }
        std::swap(stab[r], stab[pivot]);
        for (size_t j = 0; j < n_; j++) {
            if (j != r && stab[j].x.get(c)) {
                stab[j].multiply_left(stab[r]);
            }
        }
        r++;
    }
    std::vector<BitVec> constraints;
    BitVec rhs(n_ - r);
    for (size_t j = r; j < n_; j++) {
        constraints.push_back(stab[j].z);
        rhs.set(j - r, stab[j].sign);
    }
    F2Matrix v = F2Matrix::from_rows(std::move(constraints), n_);
    auto t = v.solve(rhs);
    if (!t.has_value()) {
        throw std::logic_error("stabilizer constraints are inconsistent");
    }
    return AffineSubspace(n_, v.nullspace(), *t);
}

void StabilizerTableau::check_invariants() const {
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = 0; j < n_; j++) {
            if (!rows_commute(stabilizer(i), stabilizer(j))) {
                throw std::logic_error("stabilizer rows must commute");
            }
            if (!rows_commute(destabilizer(i), destabilizer(j))) {
                throw std::logic_error("destabilizer rows must commute");
            }
            bool want_anti = (i == j);
            if (rows_commute(destabilizer(i), stabilizer(j)) == want_anti) {
                throw std::logic_error("destabilizer/stabilizer pairing broken");
            }
        }
    }
    // Pairing as checked above forces the 2n x 2n binary matrix to be
    // invertible: the symplectic Gram matrix of the rows is nondegenerate.
}

std::string StabilizerTableau::encode() const {
    std::string s;
    for (const auto& row : rows_) {
        s += row.x.to_string();
        s += '|';
        s += row.z.to_string();
        s += row.sign ? '-' : '+';
        s += ';';
    }
    return s;
}

bool StabilizerTableau::operator==(const StabilizerTableau& other) const {
    if (n_ != other.n_) {
        return false;
    }
    for (size_t i = 0; i < 2 * n_; i++) {
        if (rows_[i].x != other.rows_[i].x || rows_[i].z != other.rows_[i].z ||
            rows_[i].sign != other.rows_[i].sign) {
            return false;
        }
    }
    return true;
}

StabilizerTableau random_global_clifford(size_t n, std::mt19937_64& rng) {
    if (n == 0) {
        throw std::invalid_argument("qubit count must be positive");
    }
    // Work in GF(2)^(2n) with block layout (x | z); the functional
    // u -> <v, u> has coefficient vector swap(v) = (v_z | v_x).
    auto swap_halves = [n](const BitVec& v) {
        BitVec w(2 * n);
        for (size_t i = 0; i < n; i++) {
            w.set(i, v.get(n + i));
            w.set(n + i, v.get(i));
        }
        return w;
    };
    std::vector<BitVec> fixed_functionals;
    std::vector<BitVec> x_images, z_images;
    for (size_t j = 0; j < n; j++) {
        F2Matrix constraints = F2Matrix::from_rows(fixed_functionals, 2 * n);
        F2Matrix complement = constraints.nullspace();
        size_t dim = complement.cols();
        // Uniform nonzero vector of the symplectic complement.
        BitVec a(2 * n);
        do {
            a = complement.mul_vec(BitVec::random(dim, rng));
        } while (a.none());
        // Uniform partner with <a, b> = 1; rejection halves each time.
        BitVec fa = swap_halves(a);
        BitVec b(2 * n);
        do {
            b = complement.mul_vec(BitVec::random(dim, rng));
        } while (!fa.dot(b));
        x_images.push_back(a);
        z_images.push_back(b);
        fixed_functionals.push_back(fa);
        fixed_functionals.push_back(swap_halves(b));
    }
    StabilizerTableau t = StabilizerTableau::zero_state(n);
    for (size_t j = 0; j < n; j++) {
        for (size_t q = 0; q < n; q++) {
            t.rows_[j].x.set(q, x_images[j].get(q));
            t.rows_[j].z.set(q, x_images[j].get(n + q));
            t.rows_[n + j].x.set(q, z_images[j].get(q));
            t.rows_[n + j].z.set(q, z_images[j].get(n + q));
        }
        t.rows_[j].sign = random_bit(rng);
        t.rows_[n + j].sign = random_bit(rng);
    }
#ifndef NDEBUG
    t.check_invariants();
#endif
    return t;
}

std::array<StabilizerTableau, 6> single_qubit_stabilizer_states() {
    // Stabilizers +-Z, +-X, +-Y with a fixed anticommuting destabilizer.
    auto make = [](bool sx, bool sz, bool sign) {
        StabilizerTableau t = StabilizerTableau::zero_state(1);
        t.rows_[1].x.set(0, sx);
        t.rows_[1].z.set(0, sz);
        t.rows_[1].sign = sign;
        t.rows_[0].x.set(0, !sx);  // X against Z, else Z: anticommutes in all cases
        t.rows_[0].z.set(0, sx);
        t.rows_[0].sign = false;
        t.check_invariants();
        return t;
    };
    return {make(false, true, false), make(false, true, true),   // |0>, |1>
            make(true, false, false), make(true, false, true),   // |+>, |->
            make(true, true, false),  make(true, true, true)};   // |i>, |-i>
}

}  // namespace cliffordlearn
