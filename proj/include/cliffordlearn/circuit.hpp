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

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cliffordlearn/clifford_gate.hpp"
#include "cliffordlearn/tableau.hpp"

namespace cliffordlearn {

struct GatePlacement {
    size_t qubit;  // acts on the pair (qubit, qubit + 1)
    CliffordGate2 gate;
};

// Brickwork circuit: layer l places gates on pairs (0,1),(2,3),... when l is
// even and (1,2),(3,4),... when l is odd. With odd n the unpaired boundary
// qubit idles in the layers where it has no partner. Every pattern pair of a
// layer carries a gate (possibly the identity).
class BrickworkCircuit {
  public:
    BrickworkCircuit(size_t n, std::vector<std::vector<GatePlacement>> layers);

    static std::vector<size_t> pattern_pairs(size_t n, size_t layer);

    size_t num_qubits() const { return n_; }
    size_t depth() const { return layers_.size(); }
    const std::vector<std::vector<GatePlacement>>& layers() const { return layers_; }

    std::string to_json_string() const;

    // Strict parse of the circuit file format: top-level fields n, d, layers
    // only; unknown fields are rejected.
    static BrickworkCircuit from_json_string(const std::string& text);

  private:
    size_t n_;
    std::vector<std::vector<GatePlacement>> layers_;
};

// Gates i.i.d. uniform over the two-qubit Clifford group. When
// restrict_to_first_k is given, gates touching any qubit >= k are the
// identity, so only the first k qubits are acted on non-trivially.
BrickworkCircuit random_brickwork(size_t n, size_t d, std::mt19937_64& rng,
                                  std::optional<size_t> restrict_to_first_k = std::nullopt);

// Tableau of the circuit applied to |0^n>, layers in index order.
StabilizerTableau run_circuit(const BrickworkCircuit& c);

}  // namespace cliffordlearn
