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
#include "seqc/compiled.hpp"
#include "seqc/sabre.hpp"
#include "seqc/stratify.hpp"

namespace seqc {

struct ElaborateConfig {
    int layout_trials = 4;
    SabreConfig sabre;
};

/// A boundary event lowered onto a concrete inter link. endpoint_a is the
/// physical halo qubit on the event's chiplet_a side. Once placed, the SWAP
/// is immutable: routing may only deliver operands to these endpoints.
struct PinnedInterSwap {
    std::uint32_t event_id = 0;
    std::uint32_t link_index = 0;
    std::uint32_t endpoint_a = 0;
    std::uint32_t endpoint_b = 0;
};

/// Per-chiplet layout: SABRE refinement over the program's gates among the
/// chiplet's initial residents, restricted to the chiplet subgraph and
/// scored by fidelity-weighted inserted-SWAP cost.
Layout chiplet_layout(const StratifiedCircuit& strat, const Backend& b, int chiplet, int trials,
                      std::uint64_t seed, const SabreConfig& config = {});

/// Serial greedy halo placement: events in global order each take the inter
/// link minimizing the fidelity-weighted distance from both operands'
/// current positions to the link's halo endpoints (ties to the lowest link
/// index); operand positions then move to those endpoints.
std::vector<PinnedInterSwap> place_inter_swaps(const StratifiedCircuit& strat,
                                               const std::vector<Layout>& layouts,
                                               const Backend& b);

/// A chiplet's routed (or routed+translated+optimized) gate stream over
/// global physical qubits, with boundary events left as markers.
struct ChipletStream {
    struct Item {
        bool is_event = false;
        std::uint32_t event_id = 0;
        Gate gate;  // valid when !is_event
    };
    std::vector<Item> items;
};

/// Per-chiplet routing over intra links only, with each boundary event
/// anchored to its pinned halo endpoint. Inserted gates are intra SWAPs.
ChipletStream route_chiplet(const StratifiedCircuit& strat, const Backend& b, int chiplet,
                            const Layout& layout, const std::vector<PinnedInterSwap>& pins,
                            const SabreConfig& config = {});

/// Merges per-chiplet streams into one physical circuit. Each boundary SWAP
/// appears once; every stream's internal order is preserved, with
/// cross-stream order induced by shared event ids.
Circuit stitch(const std::vector<ChipletStream>& streams,
               const std::vector<PinnedInterSwap>& pins, const Backend& b,
               const std::string& name);

/// SEQC stage 2: parallel per-chiplet layout, serial halo placement,
/// parallel restricted routing, parallel translation and optimization, then
/// stitching. Output is byte-identical for a fixed seed at any worker count.
CompiledCircuit elaborate(const StratifiedCircuit& strat, const Backend& b, unsigned workers,
                          std::uint64_t seed, const ElaborateConfig& config = {});

struct SeqcResult {
    StratifiedCircuit strat;
    CompiledCircuit compiled;
    double stratify_seconds = 0.0;
    double elaborate_seconds = 0.0;
};

/// Full SEQC pipeline with per-stage wall-clock timing.
SeqcResult seqc_compile(const Circuit& c, const Backend& b, std::uint64_t seed, unsigned workers,
                        const StratifyConfig& stratify_cfg = {},
                        const ElaborateConfig& elaborate_cfg = {});

}  // namespace seqc
