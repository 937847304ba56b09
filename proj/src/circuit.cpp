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

#include "cliffordlearn/circuit.hpp"

#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace cliffordlearn {

using json = nlohmann::ordered_json;

BrickworkCircuit::BrickworkCircuit(size_t n, std::vector<std::vector<GatePlacement>> layers)
    : n_(n), layers_(std::move(layers)) {
    if (n_ < 2) {
        throw std::invalid_argument("brickwork circuits need at least two qubits");
    }
    for (size_t l = 0; l < layers_.size(); l++) {
        auto pattern = pattern_pairs(n_, l);
        if (layers_[l].size() != pattern.size()) {
            throw std::invalid_argument("layer does not match the brick pattern");
        }
        for (size_t k = 0; k < pattern.size(); k++) {
            if (layers_[l][k].qubit != pattern[k]) {
                throw std::invalid_argument("layer does not match the brick pattern");
            }
        }
    }
}

std::vector<size_t> BrickworkCircuit::pattern_pairs(size_t n, size_t layer) {
    std::vector<size_t> pairs;
    for (size_t q = layer % 2; q + 1 < n; q += 2) {
        pairs.push_back(q);
    }
    return pairs;
}

std::string BrickworkCircuit::to_json_string() const {
    json doc;
    doc["n"] = n_;
    doc["d"] = depth();
    json layers = json::array();
    for (const auto& layer : layers_) {
        json placements = json::array();
        for (const auto& p : layer) {
            placements.push_back({{"pair", {p.qubit, p.qubit + 1}},
                                  {"gate", p.gate.canonical_index()}});
        }
        layers.push_back(std::move(placements));
    }
    doc["layers"] = std::move(layers);
    return doc.dump(2);
}

BrickworkCircuit BrickworkCircuit::from_json_string(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed circuit file: ") + e.what());
    }
    if (!doc.is_object()) {
        throw std::invalid_argument("circuit file must be a JSON object");
    }
    for (const auto& item : doc.items()) {
        if (item.key() != "n" && item.key() != "d" && item.key() != "layers") {
            throw std::invalid_argument("unknown circuit field: " + item.key());
        }
    }
    if (!doc.contains("n") || !doc.contains("d") || !doc.contains("layers")) {
        throw std::invalid_argument("circuit file needs fields n, d, layers");
    }
    if (!doc["n"].is_number_unsigned() || !doc["d"].is_number_unsigned() ||
        !doc["layers"].is_array()) {
        throw std::invalid_argument("circuit fields have the wrong type");
    }
    size_t n = doc["n"].get<size_t>();
    size_t d = doc["d"].get<size_t>();
    if (doc["layers"].size() != d) {
        throw std::invalid_argument("layer count does not match d");
    }
    std::vector<std::vector<GatePlacement>> layers;
    for (const auto& layer : doc["layers"]) {
        if (!layer.is_array()) {
            throw std::invalid_argument("each layer must be an array");
        }
        std::vector<GatePlacement> placements;
        for (const auto& entry : layer) {
            if (!entry.is_object()) {
                throw std::invalid_argument("each placement must be an object");
            }
            for (const auto& item : entry.items()) {
                if (item.key() != "pair" && item.key() != "gate") {
                    throw std::invalid_argument("unknown placement field: " + item.key());
                }
            }
            if (!entry.contains("pair") || !entry.contains("gate") ||
                !entry["pair"].is_array() || entry["pair"].size() != 2 ||
                !entry["pair"][0].is_number_unsigned() ||
                !entry["pair"][1].is_number_unsigned() ||
                !entry["gate"].is_number_unsigned()) {
                throw std::invalid_argument("placement needs pair [i, i+1] and gate index");
            }
            size_t a = entry["pair"][0].get<size_t>();
            size_t b = entry["pair"][1].get<size_t>();
            if (b != a + 1) {
                throw std::invalid_argument("gate pairs must be adjacent");
            }
            uint64_t gate = entry["gate"].get<uint64_t>();
            if (gate >= CliffordGate2::kGroupSize) {
                throw std::invalid_argument("gate index out of range");
            }
            placements.push_back({a, CliffordGate2::from_index(static_cast<uint32_t>(gate))});
        }
        layers.push_back(std::move(placements));
    }
    return BrickworkCircuit(n, std::move(layers));
}

BrickworkCircuit random_brickwork(size_t n, size_t d, std::mt19937_64& rng,
                                  std::optional<size_t> restrict_to_first_k) {
    if (n < 2) {
        throw std::invalid_argument("brickwork circuits need at least two qubits");
    }
    if (restrict_to_first_k.has_value() &&
        (*restrict_to_first_k < 2 || *restrict_to_first_k > n)) {
        throw std::invalid_argument("restriction k must satisfy 2 <= k <= n");
    }
    std::vector<std::vector<GatePlacement>> layers;
    for (size_t l = 0; l < d; l++) {
        std::vector<GatePlacement> placements;
        for (size_t q : BrickworkCircuit::pattern_pairs(n, l)) {
            bool restricted = restrict_to_first_k.has_value() && q + 1 >= *restrict_to_first_k;
            placements.push_back(
                {q, restricted ? CliffordGate2::identity() : random_clifford2(rng)});
        }
        layers.push_back(std::move(placements));
    }
    return BrickworkCircuit(n, std::move(layers));
}

StabilizerTableau run_circuit(const BrickworkCircuit& c) {
    StabilizerTableau t = StabilizerTableau::zero_state(c.num_qubits());
    for (const auto& layer : c.layers()) {
        for (const auto& p : layer) {
            t.apply_gate(p.gate, p.qubit);
        }
    }
    return t;
}

}  // namespace cliffordlearn
