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
#include <vector>

#include "seqc/backend.hpp"
#include "seqc/circuit.hpp"
#include "seqc/layout.hpp"

namespace seqc {

/// Heuristic parameters of the SWAP-search. Defaults follow the published
/// SABRE configuration; recorded here so they are overridable in one place.
struct SabreConfig {
    int extended_set_size = 20;
    double extended_set_weight = 0.5;
    double decay_increment = 0.001;
    int decay_reset_interval = 5;
};

/// One schedulable unit. Gates carry logical operands; anchors pin a logical
/// qubit to a fixed node and, once reached, hand the slot over to an
/// incoming qubit (used for inter-chiplet SWAP events).
struct RouteItem {
    Gate gate;  // valid when !is_anchor
    bool is_anchor = false;
    std::uint32_t anchor_qubit = 0;     // qubit that must reach anchor_node
    std::uint32_t anchor_in_qubit = 0;  // qubit materializing at anchor_node after
    std::uint32_t anchor_node = 0;
    std::uint64_t tag = 0;  // passed through to the output entry

    static RouteItem from_gate(const Gate& g, std::uint64_t tag = 0);
    static RouteItem anchor(std::uint32_t out_qubit, std::uint32_t in_qubit, std::uint32_t node,
                            std::uint64_t tag);
};

struct RouteEntry {
    Gate gate;               // node-space operands; unused for anchors
    bool is_anchor = false;
    bool inserted = false;   // true for router-inserted SWAPs
    std::uint64_t tag = 0;
};

struct RouteResult {
    std::vector<RouteEntry> entries;
    Layout final_layout;
    int inserted_swaps = 0;
    double inserted_swap_cost = 0.0;  // sum of swapped-edge weights under `dist`
};

/// The routing graph: a compact node space with candidate SWAP edges and a
/// shortest-path distance matrix in the chosen weighting.
struct RoutingGraph {
    std::size_t num_nodes = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    const DistanceMatrix* dist = nullptr;

    bool adjacent(std::uint32_t a, std::uint32_t b) const;
    void build_adjacency();

private:
    friend class SabreRouter;
    std::vector<std::uint8_t> adj_;
    std::vector<std::vector<std::uint32_t>> edges_of_;
};

/// SABRE-style router over an item DAG. Deterministic: all tie-breaks fall
/// back to the lowest edge/item index.
class SabreRouter {
public:
    SabreRouter(const RoutingGraph& graph, SabreConfig config = {});

    /// Routes `items` starting from `layout` (logical -> node). The layout
    /// must cover every qubit present before its first item executes.
    RouteResult route(const std::vector<RouteItem>& items, Layout layout) const;

private:
    const RoutingGraph& graph_;
    SabreConfig config_;
};

/// SABRE layout search over plain gate items: per trial, a seeded random
/// placement is refined by a forward and a reverse routing pass, and trials
/// are ranked by the inserted-SWAP cost of a final forward pass. The
/// returned layout spans `num_logical_ids` so callers can later map qubits
/// outside `logical_ids` (e.g. arrivals) into it.
Layout sabre_layout_search(const RoutingGraph& graph, const std::vector<RouteItem>& items,
                           const std::vector<std::uint32_t>& logical_ids,
                           std::size_t num_logical_ids, int trials, std::uint64_t seed,
                           SabreConfig config = {});

/// Chiplet-ignorant routing over the whole device: every link is a candidate
/// SWAP edge and any two-qubit gate may land on any link.
std::pair<Circuit, Layout> sabre_route(const Circuit& c, const Backend& b,
                                       const DistanceMatrix& d, const Layout& init,
                                       std::uint64_t seed, SabreConfig config = {});

/// Whole-device layout search for the baseline pipeline (Hops weighting).
Layout sabre_layout(const Circuit& c, const Backend& b, const DistanceMatrix& d, int trials,
                    std::uint64_t seed, SabreConfig config = {});

}  // namespace seqc
