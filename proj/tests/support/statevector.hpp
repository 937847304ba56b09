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

// Test-only dense state-vector simulator. Serves as the independent oracle
// for the tableau simulator: gates are decomposed into H/S/CNOT words by a
// breadth-first search over the two-qubit Clifford group, then applied as
// explicit unitaries. Amplitude index bit layout matches
// BitVec::to_index_msb0 (qubit 0 is the most significant bit).

#pragma once

#include <complex>
#include <vector>

#include "cliffordlearn/circuit.hpp"
#include "cliffordlearn/clifford_gate.hpp"

namespace cliffordlearn::testsupport {

enum class Elementary { H0, H1, S0, S1, CX01, CX10 };

struct DenseState {
    size_t n;
    std::vector<std::complex<double>> amps;

    explicit DenseState(size_t n_qubits);
};

void apply_h(DenseState& state, size_t qubit);
void apply_s(DenseState& state, size_t qubit);
void apply_cnot(DenseState& state, size_t control, size_t target);

// Elementary-gate word implementing the gate, first-applied first.
const std::vector<Elementary>& gate_word(const CliffordGate2& gate);

void apply_clifford2(DenseState& state, const CliffordGate2& gate, size_t qubit);

DenseState run_circuit_dense(const BrickworkCircuit& circuit);

std::vector<double> born_probabilities(const DenseState& state);

// The tableau of one of the six elementary generators, for cross-checks.
CliffordGate2 elementary_gate(Elementary e);

}  // namespace cliffordlearn::testsupport
