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

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "seqc/circuit.hpp"

namespace seqc {

struct PhysicalQubitSpec {
    double t1_s = 20e-6;
    double t2_s = 30e-6;
    double frequency_hz = 6e9;
};

struct InstructionSpec {
    double duration_ns = 0.0;
    double error = 0.0;
};

enum class LinkScope : std::uint8_t { Intra, Inter };

/// A two-qubit coupler. Intra links admit {CZ, SWAP}; inter links admit only
/// SWAP. `duration_ns`/`error` describe the link's native two-qubit gate
/// (CZ for intra, SWAP for inter).
struct Link {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    LinkScope scope = LinkScope::Intra;
    double duration_ns = 0.0;
    double error = 0.0;

    bool allows(GateKind kind) const {
        if (scope == LinkScope::Inter) return kind == GateKind::Swap;
        return kind == GateKind::CZ || kind == GateKind::Swap;
    }
};

struct Chiplet {
    int id = 0;
    std::vector<std::uint32_t> qubits;
    std::vector<std::uint32_t> halo;
    std::pair<int, int> grid_pos{0, 0};
};

enum class DistanceWeighting : std::uint8_t { Hops, Fidelity };

struct DistanceMatrix {
    DistanceWeighting weighting = DistanceWeighting::Hops;
    std::size_t size = 0;
    std::vector<double> d;  // row-major size x size

    double at(std::uint32_t a, std::uint32_t b) const { return d[a * size + b]; }
    double& at(std::uint32_t a, std::uint32_t b) { return d[a * size + b]; }
};

/// Chiplet adjacency, annotated with the inter links joining each pair.
struct ChipletGraph {
    std::size_t num_chiplets = 0;
    std::vector<std::vector<int>> neighbors;                       // sorted per chiplet
    std::map<std::pair<int, int>, std::vector<std::uint32_t>> links;  // key a < b -> link indices

    std::size_t edge_count() const { return links.size(); }
    const std::vector<std::uint32_t>& links_between(int a, int b) const;
    /// All-pairs hop distances between chiplets (BFS on the chiplet graph).
    std::vector<std::vector<int>> hop_distances() const;
};

class Backend {
public:
    std::string name;
    std::pair<int, int> grid{1, 1};
    PhysicalQubitSpec qubit_spec;
    std::map<GateKind, InstructionSpec> single_qubit_instrs;  // X, SX, Rz, Measure, Reset
    InstructionSpec intra_cz;
    InstructionSpec intra_swap;
    InstructionSpec inter_swap;
    std::vector<Link> links;
    std::vector<Chiplet> chiplets;

    std::uint32_t num_qubits() const { return num_qubits_; }
    void finalize();  // rebuilds adjacency/lookup structures after edits

    int chiplet_of(std::uint32_t qubit) const { return chiplet_of_[qubit]; }
    /// Link index joining a and b, or -1.
    int link_between(std::uint32_t a, std::uint32_t b) const;
    const std::vector<std::uint32_t>& links_of(std::uint32_t qubit) const {
        return links_of_[qubit];
    }

    /// Lookup for two-qubit gate properties by kind and link scope.
    const InstructionSpec& two_qubit_spec(GateKind kind, LinkScope scope) const;
    /// Duration/error of a gate as placed in a compiled circuit.
    double gate_duration_ns(const Gate& g) const;
    double gate_error(const Gate& g) const;

    std::string to_json_string(int indent = -1) const;
    static Backend from_json_string(const std::string& text);

private:
    std::uint32_t num_qubits_ = 0;
    std::vector<int> chiplet_of_;
    std::vector<std::vector<std::uint32_t>> links_of_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> link_lookup_;
};

/// Factor pair (rows, cols) of c with minimal |rows - cols| and rows <= cols.
std::pair<int, int> most_square_grid(int num_chiplets);

/// Builds the simulated chiplet device: a rows x cols grid of congruent
/// heavy-hex tiles (10k qubits each), cut from one global heavy-hexagon
/// lattice so that inter links are exactly the lattice edges crossing tile
/// boundaries. Inter SWAPs take `inter_penalty` times the intra SWAP
/// duration.
Backend generate_backend(int num_chiplets, int qubits_per_chiplet = 10,
                         double inter_penalty = 4.0);

/// All-pairs shortest path costs over the full device. Hops weighting uses
/// unit edges; Fidelity weighting uses -ln(1 - error) per link so that the
/// shortest path is the highest-fidelity path.
DistanceMatrix distance_matrix(const Backend& b, DistanceWeighting w);

/// All-pairs shortest path costs restricted to one chiplet's intra links.
/// Indexed locally by position within the chiplet's sorted qubit list.
DistanceMatrix chiplet_distance_matrix(const Backend& b, int chiplet, DistanceWeighting w);

ChipletGraph chiplet_graph(const Backend& b);

}  // namespace seqc
