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
#include <random>
#include <string>
#include <vector>

#include "cliffordlearn/affine.hpp"
#include "cliffordlearn/bitvec.hpp"
#include "cliffordlearn/clifford_gate.hpp"

namespace cliffordlearn {

// Signed n-qubit Pauli: (-1)^sign prod_j P(x_j, z_j) with P(1,1) = Y.
struct PauliRow {
    BitVec x;
    BitVec z;
    bool sign = false;

    explicit PauliRow(size_t n) : x(n), z(n) {}

    // In-place product: *this <- rhs * *this, tracking the sign.
    void multiply_left(const PauliRow& rhs);
};

// Destabilizer/stabilizer tableau of a stabilizer state: rows 0..n-1 are
// destabilizers, rows n..2n-1 stabilizers, each a signed Pauli.
class StabilizerTableau {
  public:
    static StabilizerTableau zero_state(size_t n);

    size_t num_qubits() const { return n_; }
    const PauliRow& destabilizer(size_t i) const { return rows_[i]; }
    const PauliRow& stabilizer(size_t i) const { return rows_[n_ + i]; }

    // Conjugates the state by a two-qubit Clifford on the adjacent pair
    // (qubit, qubit + 1).
    void apply_gate(const CliffordGate2& g, size_t qubit);

    // Computational-basis measurement of every qubit, in index order, on a
    // working copy; the tableau itself is left untouched. Exactly Born
    // distributed.
    BitVec measure_all(std::mt19937_64& rng) const;

    // Exact support of the Born distribution, extracted from the Z-only
    // stabilizer constraints. Deterministic.
    AffineSubspace affine_support() const;

    // Throws std::logic_error if the rows do not form a valid symplectic
    // basis with the destabilizer/stabilizer pairing.
    void check_invariants() const;

    // Canonical text encoding, usable as a dictionary key in tests.
    std::string encode() const;

    bool operator==(const StabilizerTableau& other) const;

    // Direct row access for samplers and tests that build states by hand.
    PauliRow& mutable_row(size_t i) { return rows_[i]; }
    const PauliRow& row(size_t i) const { return rows_[i]; }

  private:
    explicit StabilizerTableau(size_t n);

    size_t n_ = 0;
    std::vector<PauliRow> rows_;

    friend StabilizerTableau random_global_clifford(size_t n, std::mt19937_64& rng);
    friend std::array<StabilizerTableau, 6> single_qubit_stabilizer_states();
};

// Tableau of U|0^n> for U exactly uniform over the n-qubit Clifford group
// modulo phase: a qubit-by-qubit sweep draws a uniform anticommuting
// image pair for (X_j, Z_j) inside the symplectic complement of the pairs
// already fixed, with uniform sign bits.
StabilizerTableau random_global_clifford(size_t n, std::mt19937_64& rng);

// The six single-qubit stabilizer states.
std::array<StabilizerTableau, 6> single_qubit_stabilizer_states();

}  // namespace cliffordlearn
