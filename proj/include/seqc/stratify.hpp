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
#include <string>
#include <vector>

#include "seqc/backend.hpp"
#include "seqc/circuit.hpp"

namespace seqc {

/// Qubit-to-subcircuit assignment. Slots beyond the circuit's qubit count are
/// idle filler qubits padding every subcircuit to exactly `capacity` members,
/// so exchanges are always well-defined.
struct Partition {
    std::vector<int> assignment;  // slot qubit -> subcircuit id
    int num_subcircuits = 0;
    int capacity = 0;
    std::uint32_t num_real = 0;  // slot ids >= num_real are fillers

    std::uint32_t num_slots() const { return static_cast<std::uint32_t>(assignment.size()); }
};

/// Annealing schedule. Each round proposes max(1, round(T/50)) exchanges per
/// slot qubit, following the usual place-and-route convention of scaling the
/// move budget with instance size. The reference setup runs 5 trials per
/// core; `trials` is the resolved total so results do not depend on the
/// machine.
struct AnnealingConfig {
    double t0 = 200.0;
    double cooling = 0.005;         // T <- T * (1 - cooling) each round
    double min_temperature = 0.005; // low tail does the plateau walking
    int moves_divisor = 50;
    int trials = 10;
};

/// Number of two-qubit gates whose operands live in different subcircuits.
int partition_cost(const Circuit& c, const Partition& p);

/// Simulated annealing over random qubit exchanges between subcircuits.
/// Each trial runs independently from a derived seed; the best final cost
/// wins with lowest-trial-index tie-break. Deterministic in `seed` and
/// independent of `workers`.
Partition anneal_partition(const Circuit& c, int num_subcircuits, int capacity,
                           const AnnealingConfig& cfg, std::uint64_t seed, unsigned workers = 1);

enum class SwapTier : std::uint8_t { Symbiotic, Commensalistic, Neutral, Parasitic };

std::string_view to_string(SwapTier tier);

struct SwapClass {
    SwapTier tier = SwapTier::Neutral;
    int net_gain = 0;  // summed chiplet-distance reduction over front gates
    int improved = 0;
    int harmed = 0;
};

/// A proposed exchange of two logical qubits across a chiplet-graph edge.
struct ExchangeCandidate {
    std::uint32_t qubit_a = 0;
    std::uint32_t qubit_b = 0;
    int chiplet_a = 0;
    int chiplet_b = 0;
};

/// Tiers a candidate by its effect on the front layer's chiplet distances:
/// Symbiotic helps two or more gates harming none, Commensalistic helps at
/// least one harming none, Neutral changes nothing, Parasitic harms at least
/// one gate (usually while helping another).
SwapClass classify_swap(const ExchangeCandidate& cand,
                        const std::vector<std::pair<std::uint32_t, std::uint32_t>>& front_gates,
                        const std::vector<int>& qubit_chiplet,
                        const std::vector<std::vector<int>>& chiplet_dist);

/// One inter-chiplet SWAP event: qubit_a (leaving chiplet_a) trades places
/// with qubit_b (leaving chiplet_b). Ids are dense and globally ordered.
struct BoundaryEvent {
    std::uint32_t id = 0;
    int chiplet_a = 0;
    int chiplet_b = 0;
    std::uint32_t qubit_a = 0;
    std::uint32_t qubit_b = 0;
};

struct ChipletAllocation {
    std::vector<int> subcircuit_chiplet;                    // subcircuit -> chiplet id
    std::vector<std::vector<std::uint32_t>> initial_occupancy;  // chiplet -> slot qubits
    std::vector<BoundaryEvent> events;

    struct RoutedOp {
        bool is_event = false;
        std::uint32_t index = 0;  // gate index or event id
    };
    std::vector<RoutedOp> routed;  // execution order mixing gates and events
};

/// Maps subcircuits onto chiplets and routes cross-chiplet gates with the
/// tiered SWAP heuristic; best of `trials` random placements by event count.
/// Trials run as independent parallel tasks with a deterministic reduction.
ChipletAllocation allocate_chiplets(const Circuit& c, const Partition& p, const Backend& b,
                                    int trials, std::uint64_t seed, unsigned workers = 1);

struct ProgramItem {
    bool is_event = false;
    Gate gate;                    // logical operands; valid when !is_event
    std::uint32_t event_id = 0;   // valid when is_event
};

struct StratifiedCircuit {
    std::string circuit_name;
    std::uint32_t num_real_qubits = 0;
    std::uint32_t num_slots = 0;  // logical id space including fillers
    std::string backend_id;
    int capacity = 0;
    std::uint64_t seed = 0;
    Partition partition;
    ChipletAllocation allocation;
    std::vector<std::vector<ProgramItem>> programs;  // per chiplet

    std::string to_json_string(int indent = -1) const;
    static StratifiedCircuit from_json_string(const std::string& text);
};

struct StratifyConfig {
    AnnealingConfig annealing;
    int allocation_trials = 4;
};

/// SEQC stage 1: anneal the qubit-to-subcircuit partition, allocate
/// subcircuits to chiplets, and emit one synchronized program per chiplet.
StratifiedCircuit stratify(const Circuit& c, const Backend& b, const StratifyConfig& cfg,
                           std::uint64_t seed, unsigned workers = 1);

}  // namespace seqc
