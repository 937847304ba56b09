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

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace cliffordlearn {

// Two-qubit Pauli operators are packed into 4 bits: bit 0 = x on qubit 0,
// bit 1 = z on qubit 0, bit 2 = x on qubit 1, bit 3 = z on qubit 1. The
// Hermitian operator behind (vec, sign) is (-1)^sign i^(|x&z|) X^x Z^z.
using PauliVec4 = uint8_t;

inline bool symplectic_product4(PauliVec4 a, PauliVec4 b) {
    PauliVec4 cross = static_cast<PauliVec4>(((a & 0b0101u) << 1) & b) |
                      static_cast<PauliVec4>(((a & 0b1010u) >> 1) & b);
    return std::popcount(static_cast<unsigned>(cross)) & 1;
}

// A two-qubit Clifford gate modulo global phase: the images of the
// generators (X0, Z0, X1, Z1) under conjugation, each a signed Pauli.
// There are 720 * 16 = 11520 such gates; `canonical_index` is the rank of
// the gate's 20-bit encoding (16 symplectic bits row-major, then 4 sign
// bits) in the sorted list of valid encodings.
class CliffordGate2 {
  public:
    static constexpr size_t kGroupSize = 11520;

    static CliffordGate2 identity();
    static CliffordGate2 from_index(uint32_t canonical_index);
    static CliffordGate2 from_images(const std::array<PauliVec4, 4>& images,
                                     const std::array<bool, 4>& signs);

    uint32_t canonical_index() const { return index_; }
    PauliVec4 image_vec(size_t generator) const { return images_[generator]; }
    bool image_sign(size_t generator) const { return signs_[generator]; }

    // Conjugates the Hermitian Pauli with symplectic vector `vec`; returns
    // the new vector and whether the sign flips. The caller owns the sign.
    std::pair<PauliVec4, bool> conjugate(PauliVec4 vec) const;

    // Composition: (a * b) acts as b followed by a.
    friend CliffordGate2 operator*(const CliffordGate2& a, const CliffordGate2& b);

    bool operator==(const CliffordGate2& other) const { return index_ == other.index_; }
    bool operator!=(const CliffordGate2& other) const { return index_ != other.index_; }

    // Sorted 20-bit encodings of all valid gates; built once.
    static const std::vector<uint32_t>& encoding_table();

  private:
    CliffordGate2() = default;

    uint32_t encode() const;

    std::array<PauliVec4, 4> images_{};
    std::array<bool, 4> signs_{};
    uint32_t index_ = 0;
};

// Uniform over the 11520 two-qubit Cliffords modulo phase.
CliffordGate2 random_clifford2(std::mt19937_64& rng);

}  // namespace cliffordlearn
