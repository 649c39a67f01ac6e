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

#include "seqc/elaborate.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <stdexcept>

#include "seqc/parallel.hpp"
#include "seqc/rng.hpp"
#include "seqc/translate.hpp"

namespace seqc {

namespace {

/// Local node index of a global qubit within its chiplet.
std::uint32_t local_index(const Chiplet& chip, std::uint32_t global) {
    auto it = std::find(chip.qubits.begin(), chip.qubits.end(), global);
    if (it == chip.qubits.end()) throw std::logic_error("qubit not in chiplet");
    return static_cast<std::uint32_t>(it - chip.qubits.begin());
}

RoutingGraph chiplet_routing_graph(const Backend& b, int chiplet, const DistanceMatrix& dist) {
    const Chiplet& chip = b.chiplets.at(chiplet);
    RoutingGraph graph;
    graph.num_nodes = chip.qubits.size();
    for (const auto& link : b.links) {
        if (link.scope != LinkScope::Intra) continue;
        if (b.chiplet_of(link.a) != chiplet) continue;
        graph.edges.push_back({local_index(chip, link.a), local_index(chip, link.b)});
    }
    graph.dist = &dist;
    graph.build_adjacency();
    return graph;
}

}  // namespace

Layout chiplet_layout(const StratifiedCircuit& strat, const Backend& b, int chiplet, int trials,
                      std::uint64_t seed, const SabreConfig& config) {
    const auto& roster = strat.allocation.initial_occupancy.at(chiplet);
    const Chiplet& chip = b.chiplets.at(chiplet);
    if (roster.size() > chip.qubits.size()) {
        throw std::invalid_argument("subcircuit does not fit on chiplet");
    }

    // The layout trials rehearse the full program. Boundary events are not
    // pinned yet at this stage, so each one is anchored provisionally to
    // this side's endpoint of the lowest-indexed link to the partner; the
    // serial placement stage later sees the resulting positions and tends to
    // confirm that choice.
    ChipletGraph cg = chiplet_graph(b);
    std::vector<RouteItem> items;
    for (const ProgramItem& item : strat.programs.at(chiplet)) {
        if (!item.is_event) {
            items.push_back(RouteItem::from_gate(item.gate));
            continue;
        }
        const BoundaryEvent& ev = strat.allocation.events.at(item.event_id);
        bool is_side_a = ev.chiplet_a == chiplet;
        std::uint32_t out = is_side_a ? ev.qubit_a : ev.qubit_b;
        std::uint32_t in = is_side_a ? ev.qubit_b : ev.qubit_a;
        std::uint32_t link_index = cg.links_between(ev.chiplet_a, ev.chiplet_b).front();
        const Link& link = b.links[link_index];
        std::uint32_t endpoint = b.chiplet_of(link.a) == chiplet ? link.a : link.b;
        items.push_back(
            RouteItem::anchor(out, in, local_index(chip, endpoint), item.event_id));
    }

    DistanceMatrix dist = chiplet_distance_matrix(b, chiplet, DistanceWeighting::Fidelity);
    RoutingGraph graph = chiplet_routing_graph(b, chiplet, dist);
    return sabre_layout_search(graph, items, roster, strat.num_slots, trials, seed, config);
}

std::vector<PinnedInterSwap> place_inter_swaps(const StratifiedCircuit& strat,
                                               const std::vector<Layout>& layouts,
                                               const Backend& b) {
    ChipletGraph cg = chiplet_graph(b);
    std::vector<DistanceMatrix> fid(b.chiplets.size());
    std::vector<bool> have_fid(b.chiplets.size(), false);
    auto fid_of = [&](int chiplet) -> const DistanceMatrix& {
        if (!have_fid[chiplet]) {
            fid[chiplet] = chiplet_distance_matrix(b, chiplet, DistanceWeighting::Fidelity);
            have_fid[chiplet] = true;
        }
        return fid[chiplet];
    };

    // Tracked positions: local node of each qubit in its current chiplet.
    std::vector<int> pos(strat.num_slots, -1);
    for (std::size_t chip = 0; chip < strat.allocation.initial_occupancy.size(); ++chip) {
        for (std::uint32_t q : strat.allocation.initial_occupancy[chip]) {
            pos[q] = layouts.at(chip).physical_of(q);
        }
    }

    std::vector<PinnedInterSwap> pins;
    pins.reserve(strat.allocation.events.size());
    for (const BoundaryEvent& ev : strat.allocation.events) {
        const auto& candidates = cg.links_between(ev.chiplet_a, ev.chiplet_b);
        const Chiplet& chip_a = b.chiplets[ev.chiplet_a];
        const Chiplet& chip_b = b.chiplets[ev.chiplet_b];
        PinnedInterSwap best;
        double best_cost = std::numeric_limits<double>::infinity();
        for (std::uint32_t li : candidates) {
            const Link& link = b.links[li];
            std::uint32_t end_a = b.chiplet_of(link.a) == ev.chiplet_a ? link.a : link.b;
            std::uint32_t end_b = end_a == link.a ? link.b : link.a;
            double cost =
                fid_of(ev.chiplet_a)
                    .at(static_cast<std::uint32_t>(pos[ev.qubit_a]), local_index(chip_a, end_a)) +
                fid_of(ev.chiplet_b)
                    .at(static_cast<std::uint32_t>(pos[ev.qubit_b]), local_index(chip_b, end_b));
            if (cost < best_cost) {
                best_cost = cost;
                best = {ev.id, li, end_a, end_b};
            }
        }
        pins.push_back(best);
        // The operands ride the SWAP to the opposite halo endpoints.
        pos[ev.qubit_a] = static_cast<int>(local_index(chip_b, best.endpoint_b));
        pos[ev.qubit_b] = static_cast<int>(local_index(chip_a, best.endpoint_a));
    }
    return pins;
}

ChipletStream route_chiplet(const StratifiedCircuit& strat, const Backend& b, int chiplet,
                            const Layout& layout, const std::vector<PinnedInterSwap>& pins,
                            const SabreConfig& config) {
    const Chiplet& chip = b.chiplets.at(chiplet);
    DistanceMatrix dist = chiplet_distance_matrix(b, chiplet, DistanceWeighting::Fidelity);
    RoutingGraph graph = chiplet_routing_graph(b, chiplet, dist);

    std::vector<RouteItem> items;
    for (const ProgramItem& item : strat.programs.at(chiplet)) {
        if (!item.is_event) {
            items.push_back(RouteItem::from_gate(item.gate));
            continue;
        }
        const BoundaryEvent& ev = strat.allocation.events.at(item.event_id);
        const PinnedInterSwap& pin = pins.at(item.event_id);
        bool is_side_a = ev.chiplet_a == chiplet;
        std::uint32_t out = is_side_a ? ev.qubit_a : ev.qubit_b;
        std::uint32_t in = is_side_a ? ev.qubit_b : ev.qubit_a;
        std::uint32_t endpoint = is_side_a ? pin.endpoint_a : pin.endpoint_b;
        items.push_back(RouteItem::anchor(out, in, local_index(chip, endpoint), item.event_id));
    }

    SabreRouter router(graph, config);
    RouteResult result = router.route(items, layout);

    ChipletStream stream;
    stream.items.reserve(result.entries.size());
    for (const RouteEntry& entry : result.entries) {
        ChipletStream::Item item;
        if (entry.is_anchor) {
            item.is_event = true;
            item.event_id = static_cast<std::uint32_t>(entry.tag);
        } else {
            Gate g = entry.gate;
            g.qubits[0] = chip.qubits[g.qubits[0]];
            if (g.is_two_qubit()) g.qubits[1] = chip.qubits[g.qubits[1]];
            item.gate = g;
        }
        stream.items.push_back(item);
    }
    return stream;
}

Circuit stitch(const std::vector<ChipletStream>& streams,
               const std::vector<PinnedInterSwap>& pins, const Backend& b,
               const std::string& name) {
    Circuit out(name, b.num_qubits());
    std::vector<std::size_t> cursor(streams.size(), 0);

    auto exhausted = [&](std::size_t s) { return cursor[s] >= streams[s].items.size(); };

    while (true) {
        bool flushed = true;
        while (flushed) {
            flushed = false;
            for (std::size_t s = 0; s < streams.size(); ++s) {
                while (!exhausted(s) && !streams[s].items[cursor[s]].is_event) {
                    out.add(streams[s].items[cursor[s]].gate);
                    ++cursor[s];
                    flushed = true;
                }
            }
        }
        // Every live stream now waits on an event; take the globally oldest.
        std::uint32_t next_event = std::numeric_limits<std::uint32_t>::max();
        for (std::size_t s = 0; s < streams.size(); ++s) {
            if (!exhausted(s)) {
                next_event = std::min(next_event, streams[s].items[cursor[s]].event_id);
            }
        }
        if (next_event == std::numeric_limits<std::uint32_t>::max()) break;

        int participants = 0;
        for (std::size_t s = 0; s < streams.size(); ++s) {
            if (!exhausted(s) && streams[s].items[cursor[s]].event_id == next_event) {
                ++cursor[s];
                ++participants;
            }
        }
        if (participants != 2) {
            throw std::invalid_argument("boundary event is not bilaterally consistent");
        }
        const PinnedInterSwap& pin = pins.at(next_event);
        out.add(Gate::swap(pin.endpoint_a, pin.endpoint_b));
    }
    return out;
}

namespace {

/// Converts an optimized per-chiplet circuit back into a stream, re-marking
/// the k-th inter-scope SWAP as the chiplet's k-th boundary event (their
/// order is preserved through translation and optimization).
ChipletStream circuit_to_stream(const Circuit& c, const Backend& b,
                                const std::vector<std::uint32_t>& event_order) {
    ChipletStream stream;
    std::size_t next_event = 0;
    for (const Gate& g : c.gates()) {
        ChipletStream::Item item;
        if (g.kind == GateKind::Swap) {
            int li = b.link_between(g.qubits[0], g.qubits[1]);
            if (li >= 0 && b.links[li].scope == LinkScope::Inter) {
                if (next_event >= event_order.size()) {
                    throw std::logic_error("more inter SWAPs than boundary events");
                }
                item.is_event = true;
                item.event_id = event_order[next_event++];
                stream.items.push_back(item);
                continue;
            }
        }
        item.gate = g;
        stream.items.push_back(item);
    }
    if (next_event != event_order.size()) {
        throw std::logic_error("boundary event lost in translation");
    }
    return stream;
}

}  // namespace

CompiledCircuit elaborate(const StratifiedCircuit& strat, const Backend& b, unsigned workers,
                          std::uint64_t seed, const ElaborateConfig& config) {
    // Reuse on a compatible (equal or superset) topology is allowed; the
    // chiplet count and capacity still have to line up.
    if (strat.allocation.initial_occupancy.size() > b.chiplets.size()) {
        throw std::invalid_argument("stratification needs more chiplets than the backend has");
    }
    if (static_cast<std::uint32_t>(strat.capacity) != b.chiplets.front().qubits.size()) {
        throw std::invalid_argument("stratification capacity does not match backend chiplets");
    }
    const std::size_t num_chiplets = strat.programs.size();

    // Stage 1: per-chiplet layout (parallel).
    std::vector<Layout> layouts(num_chiplets);
    parallel_for(num_chiplets, workers, [&](std::size_t chip) {
        layouts[chip] = chiplet_layout(strat, b, static_cast<int>(chip), config.layout_trials,
                                       child_seed(seed, chip), config.sabre);
    });

    // Stage 2: greedy halo placement (serial by construction).
    std::vector<PinnedInterSwap> pins = place_inter_swaps(strat, layouts, b);

    // Stage 3 and 4: restricted routing, then translation and optimization,
    // independently per chiplet (parallel).
    std::vector<ChipletStream> routed_streams(num_chiplets);
    std::vector<ChipletStream> final_streams(num_chiplets);
    parallel_for(num_chiplets, workers, [&](std::size_t chip) {
        ChipletStream routed =
            route_chiplet(strat, b, static_cast<int>(chip), layouts[chip], pins, config.sabre);

        std::vector<std::uint32_t> event_order;
        Circuit chiplet_circuit("chiplet", b.num_qubits());
        for (const auto& item : routed.items) {
            if (item.is_event) {
                const PinnedInterSwap& pin = pins.at(item.event_id);
                chiplet_circuit.add(Gate::swap(pin.endpoint_a, pin.endpoint_b));
                event_order.push_back(item.event_id);
            } else {
                chiplet_circuit.add(item.gate);
            }
        }
        Circuit optimized = optimize(translate_basis(chiplet_circuit, b), b);
        final_streams[chip] = circuit_to_stream(optimized, b, event_order);
        routed_streams[chip] = std::move(routed);
    });

    // Stage 5: stitch both views and reconstruct the layout bookkeeping.
    CompiledCircuit cc;
    cc.routed = stitch(routed_streams, pins, b, strat.circuit_name);
    cc.circuit = stitch(final_streams, pins, b, strat.circuit_name);
    cc.backend_id = b.name;
    cc.pipeline = Pipeline::Seqc;
    cc.seed = seed;

    // Initial/final layouts over the real circuit qubits. The replay walks
    // every SWAP in the routed view, which includes the boundary events.
    Layout occupancy(strat.num_slots, b.num_qubits());
    for (std::size_t chip = 0; chip < strat.allocation.initial_occupancy.size(); ++chip) {
        const Chiplet& chiplet = b.chiplets[chip];
        for (std::uint32_t q : strat.allocation.initial_occupancy[chip]) {
            occupancy.assign(q, chiplet.qubits[layouts[chip].physical_of(q)]);
        }
    }
    Layout initial(strat.num_real_qubits, b.num_qubits());
    for (std::uint32_t q = 0; q < strat.num_real_qubits; ++q) {
        initial.assign(q, static_cast<std::uint32_t>(occupancy.physical_of(q)));
    }
    for (const Gate& g : cc.routed.gates()) {
        if (g.kind == GateKind::Swap) occupancy.swap_physical(g.qubits[0], g.qubits[1]);
    }
    Layout final_layout(strat.num_real_qubits, b.num_qubits());
    for (std::uint32_t q = 0; q < strat.num_real_qubits; ++q) {
        final_layout.assign(q, static_cast<std::uint32_t>(occupancy.physical_of(q)));
    }
    cc.initial_layout = std::move(initial);
    cc.final_layout = std::move(final_layout);
    return cc;
}

SeqcResult seqc_compile(const Circuit& c, const Backend& b, std::uint64_t seed, unsigned workers,
                        const StratifyConfig& stratify_cfg, const ElaborateConfig& elaborate_cfg) {
    using Clock = std::chrono::steady_clock;
    SeqcResult result;

    auto t0 = Clock::now();
    result.strat = stratify(c, b, stratify_cfg, seed, workers);
    auto t1 = Clock::now();
    result.compiled = elaborate(result.strat, b, workers, child_seed(seed, 0xe1ab), elaborate_cfg);
    auto t2 = Clock::now();

    result.stratify_seconds = std::chrono::duration<double>(t1 - t0).count();
    result.elaborate_seconds = std::chrono::duration<double>(t2 - t1).count();
    return result;
}

}  // namespace seqc
