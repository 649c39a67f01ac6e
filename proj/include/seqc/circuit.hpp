// Copyright 2026 The SEQC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace seqc {

enum class GateKind : std::uint8_t {
    X,
    SX,
    Rz,
    H,
    CX,
    CZ,
    Swap,
    Ry,
    Rzz,
    Measure,
    Reset,
    Barrier,
};

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);

constexpr int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CX:
        case GateKind::CZ:
        case GateKind::Swap:
        case GateKind::Rzz:
            return 2;
        default:
            return 1;
    }
}

constexpr bool gate_has_param(GateKind kind) {
    return kind == GateKind::Rz || kind == GateKind::Ry || kind == GateKind::Rzz;
}

/// Angle comparisons throughout the compiler use this tolerance (radians).
inline constexpr double kAngleTolerance = 1e-10;

/// A single gate occurrence. Operand order is significant (control first for
/// CX); `param` is meaningful only for parameterized kinds.
struct Gate {
    GateKind kind{GateKind::X};
    std::array<std::uint32_t, 2> qubits{0, 0};
    double param = 0.0;

    int arity() const { return gate_arity(kind); }
    bool has_param() const { return gate_has_param(kind); }
    bool is_two_qubit() const { return arity() == 2; }

    static Gate one(GateKind kind, std::uint32_t q, double param = 0.0);
    static Gate two(GateKind kind, std::uint32_t a, std::uint32_t b, double param = 0.0);

    static Gate x(std::uint32_t q) { return one(GateKind::X, q); }
    static Gate sx(std::uint32_t q) { return one(GateKind::SX, q); }
    static Gate rz(double theta, std::uint32_t q) { return one(GateKind::Rz, q, theta); }
    static Gate h(std::uint32_t q) { return one(GateKind::H, q); }
    static Gate ry(double theta, std::uint32_t q) { return one(GateKind::Ry, q, theta); }
    static Gate cx(std::uint32_t c, std::uint32_t t) { return two(GateKind::CX, c, t); }
    static Gate cz(std::uint32_t a, std::uint32_t b) { return two(GateKind::CZ, a, b); }
    static Gate swap(std::uint32_t a, std::uint32_t b) { return two(GateKind::Swap, a, b); }
    static Gate rzz(double theta, std::uint32_t a, std::uint32_t b) {
        return two(GateKind::Rzz, a, b, theta);
    }
    static Gate measure(std::uint32_t q) { return one(GateKind::Measure, q); }
    static Gate reset(std::uint32_t q) { return one(GateKind::Reset, q); }
    static Gate barrier(std::uint32_t q) { return one(GateKind::Barrier, q); }

    bool operator==(const Gate& other) const;
};

/// An ordered gate list over a fixed qubit register. Immutable by convention
/// once built; passes construct new circuits instead of mutating.
class Circuit {
public:
    Circuit() = default;
    Circuit(std::string name, std::uint32_t num_qubits)
        : name_(std::move(name)), num_qubits_(num_qubits) {}

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    std::uint32_t num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    /// Appends a gate, checking operand indices and arity.
    void add(const Gate& g);
    void reserve(std::size_t n) { gates_.reserve(n); }

    std::string to_json_string(int indent = -1) const;
    static Circuit from_json_string(const std::string& text);

private:
    std::string name_;
    std::uint32_t num_qubits_ = 0;
    std::vector<Gate> gates_;
};

/// Immediate-precedence DAG over gate occurrences: an edge g1 -> g2 exists
/// iff the two gates share a qubit and no gate between them touches it.
struct DependencyGraph {
    std::size_t node_count = 0;
    std::vector<std::vector<std::uint32_t>> successors;
    std::vector<std::vector<std::uint32_t>> predecessors;

    std::size_t edge_count() const;
};

/// Qubit pairs weighted by the number of two-qubit gates between them.
struct InteractionGraph {
    std::uint32_t num_qubits = 0;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> edges;  // key a < b

    std::uint64_t total_weight() const;
    std::uint32_t weight(std::uint32_t a, std::uint32_t b) const;
};

DependencyGraph build_dependency_graph(const Circuit& c);
InteractionGraph interaction_graph(const Circuit& c);

/// Longest dependency chain; every non-Barrier gate counts 1, Barriers are
/// zero-width synchronizers.
int depth(const Circuit& c);

/// Number of non-Barrier gates.
int gate_count(const Circuit& c);

}  // namespace seqc
