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

#include "cliffordlearn/clifford_gate.hpp"

#include <algorithm>
#include <stdexcept>

#include "cliffordlearn/rng.hpp"

namespace cliffordlearn {

namespace {

constexpr uint8_t x_part(PauliVec4 v) { return v & 0b0101u; }
constexpr uint8_t z_part(PauliVec4 v) { return v & 0b1010u; }

int popcnt4(uint8_t v) { return std::popcount(static_cast<unsigned>(v)); }

// Phase exponent of i in the XZ normal form of a Hermitian signed Pauli:
// (-1)^sign i^(|x&z|) X^x Z^z  =  i^(2*sign + |x&z|) X^x Z^z.
int xz_phase(PauliVec4 vec, bool sign) {
    return (2 * static_cast<int>(sign) + popcnt4(x_part(vec) & (z_part(vec) >> 1))) & 3;
}

// Multiply XZ normal forms: i^p X^x Z^z times i^q X^c Z^d. Commuting Z^z
// past X^c contributes (-1)^|z & c|.
void xz_multiply(PauliVec4& vec, int& phase, PauliVec4 rhs_vec, int rhs_phase) {
    int hops = popcnt4((z_part(vec) >> 1) & x_part(rhs_vec));
    phase = (phase + rhs_phase + 2 * hops) & 3;
    vec ^= rhs_vec;
}

bool preserves_symplectic_form(const std::array<PauliVec4, 4>& img) {
    // Generator order (X0, Z0, X1, Z1): the Gram matrix of the images must
    // match that of the generators.
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = i + 1; j < 4; j++) {
            bool want = (i / 2 == j / 2);  // anticommuting only within a qubit's pair
            if (symplectic_product4(img[i], img[j]) != want) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

const std::vector<uint32_t>& CliffordGate2::encoding_table() {
    static const std::vector<uint32_t> table = [] {
        std::vector<uint32_t> t;
        for (uint32_t sym = 0; sym < (1u << 16); sym++) {
            std::array<PauliVec4, 4> img{};
            for (size_t r = 0; r < 4; r++) {
                img[r] = static_cast<PauliVec4>((sym >> (4 * r)) & 0xFu);
            }
            if (!preserves_symplectic_form(img)) {
                continue;
            }
            for (uint32_t ph = 0; ph < 16; ph++) {
                t.push_back(sym | (ph << 16));
            }
        }
        std::sort(t.begin(), t.end());
        if (t.size() != kGroupSize) {
            throw std::logic_error("two-qubit Clifford enumeration size mismatch");
        }
        return t;
    }();
    return table;
}

uint32_t CliffordGate2::encode() const {
    uint32_t e = 0;
    for (size_t r = 0; r < 4; r++) {
        e |= static_cast<uint32_t>(images_[r]) << (4 * r);
        e |= static_cast<uint32_t>(signs_[r]) << (16 + r);
    }
    return e;
}

CliffordGate2 CliffordGate2::identity() {
    return from_images({0b0001, 0b0010, 0b0100, 0b1000}, {false, false, false, false});
}

CliffordGate2 CliffordGate2::from_index(uint32_t canonical_index) {
    const auto& table = encoding_table();
    if (canonical_index >= table.size()) {
        throw std::out_of_range("clifford gate index out of range");
    }
    uint32_t e = table[canonical_index];
    CliffordGate2 g;
    for (size_t r = 0; r < 4; r++) {
        g.images_[r] = static_cast<PauliVec4>((e >> (4 * r)) & 0xFu);
        g.signs_[r] = (e >> (16 + r)) & 1u;
    }
    g.index_ = canonical_index;
    return g;
}

CliffordGate2 CliffordGate2::from_images(const std::array<PauliVec4, 4>& images,
                                         const std::array<bool, 4>& signs) {
    if (!preserves_symplectic_form(images)) {
        throw std::invalid_argument("images do not preserve the symplectic form");
    }
    CliffordGate2 g;
    g.images_ = images;
    g.signs_ = signs;
    const auto& table = encoding_table();
    auto it = std::lower_bound(table.begin(), table.end(), g.encode());
    g.index_ = static_cast<uint32_t>(it - table.begin());
    return g;
}

std::pair<PauliVec4, bool> CliffordGate2::conjugate(PauliVec4 vec) const {
    // Conjugate X^x Z^z generator by generator. X factors commute among
    // themselves and with Z factors of other qubits, so the operator order
    // X0 X1 Z0 Z1 is a valid normal form; images multiply in that order.
    PauliVec4 out = 0;
    int phase = 0;
    static constexpr size_t order[4] = {0, 2, 1, 3};  // X0, X1, Z0, Z1
    for (size_t gen : order) {
        if (vec & (1u << gen)) {
            xz_multiply(out, phase, images_[gen], xz_phase(images_[gen], signs_[gen]));
        }
    }
    int in_phase = xz_phase(vec, false);
    int out_norm = xz_phase(out, false);
    int delta = (in_phase + phase - out_norm) & 3;
    if (delta & 1) {
        throw std::logic_error("conjugation produced a non-Hermitian phase");
    }
    return {out, delta == 2};
}

CliffordGate2 operator*(const CliffordGate2& a, const CliffordGate2& b) {
    std::array<PauliVec4, 4> images{};
    std::array<bool, 4> signs{};
    for (size_t gen = 0; gen < 4; gen++) {
        auto [vec, flip] = a.conjugate(b.images_[gen]);
        images[gen] = vec;
        signs[gen] = b.signs_[gen] ^ flip;
    }
    return CliffordGate2::from_images(images, signs);
}

CliffordGate2 random_clifford2(std::mt19937_64& rng) {
    return CliffordGate2::from_index(
        static_cast<uint32_t>(uniform_below(rng, CliffordGate2::kGroupSize)));
}

}  // namespace cliffordlearn
