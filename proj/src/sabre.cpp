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

#include "seqc/sabre.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>

#include "seqc/rng.hpp"

namespace seqc {

RouteItem RouteItem::from_gate(const Gate& g, std::uint64_t tag) {
    RouteItem item;
    item.gate = g;
    item.tag = tag;
    return item;
}

RouteItem RouteItem::anchor(std::uint32_t out_qubit, std::uint32_t in_qubit, std::uint32_t node,
                            std::uint64_t tag) {
    RouteItem item;
    item.is_anchor = true;
    item.anchor_qubit = out_qubit;
    item.anchor_in_qubit = in_qubit;
    item.anchor_node = node;
    item.tag = tag;
    return item;
}

bool RoutingGraph::adjacent(std::uint32_t a, std::uint32_t b) const {
    return adj_[a * num_nodes + b] != 0;
}

void RoutingGraph::build_adjacency() {
    adj_.assign(num_nodes * num_nodes, 0);
    edges_of_.assign(num_nodes, {});
    for (std::uint32_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        adj_[a * num_nodes + b] = 1;
        adj_[b * num_nodes + a] = 1;
        edges_of_[a].push_back(i);
        edges_of_[b].push_back(i);
    }
}

SabreRouter::SabreRouter(const RoutingGraph& graph, SabreConfig config)
    : graph_(graph), config_(config) {
    if (graph_.dist == nullptr || graph_.dist->size != graph_.num_nodes) {
        throw std::invalid_argument("routing graph missing a matching distance matrix");
    }
}

namespace {

struct ItemDag {
    std::vector<std::vector<std::uint32_t>> successors;
    std::vector<int> indegree;
};

/// Per-qubit chains in item order. Anchors touch both their outgoing and
/// incoming qubit so later uses of the incoming qubit wait for the event.
std::vector<std::uint32_t> item_qubits(const RouteItem& item) {
    if (item.is_anchor) {
        if (item.anchor_qubit == item.anchor_in_qubit) return {item.anchor_qubit};
        return {item.anchor_qubit, item.anchor_in_qubit};
    }
    std::vector<std::uint32_t> qs{item.gate.qubits[0]};
    if (item.gate.is_two_qubit()) qs.push_back(item.gate.qubits[1]);
    return qs;
}

ItemDag build_item_dag(const std::vector<RouteItem>& items) {
    ItemDag dag;
    dag.successors.resize(items.size());
    dag.indegree.assign(items.size(), 0);
    std::map<std::uint32_t, std::uint32_t> last;
    int last_anchor = -1;
    auto link = [&](std::uint32_t from, std::uint32_t to) {
        auto& succ = dag.successors[from];
        if (std::find(succ.begin(), succ.end(), to) == succ.end()) {
            succ.push_back(to);
            ++dag.indegree[to];
        }
    };
    for (std::uint32_t i = 0; i < items.size(); ++i) {
        for (std::uint32_t q : item_qubits(items[i])) {
            auto it = last.find(q);
            if (it != last.end() && it->second != i) link(it->second, i);
            last[q] = i;
        }
        // Anchors are pinned boundary SWAPs; their relative order is part of
        // the cross-chiplet synchronization contract and must not float.
        if (items[i].is_anchor) {
            if (last_anchor >= 0) link(static_cast<std::uint32_t>(last_anchor), i);
            last_anchor = static_cast<int>(i);
        }
    }
    return dag;
}

}  // namespace

RouteResult SabreRouter::route(const std::vector<RouteItem>& items, Layout layout) const {
    RouteResult result;
    const DistanceMatrix& dist = *graph_.dist;
    ItemDag dag = build_item_dag(items);

    std::vector<std::uint32_t> front;
    for (std::uint32_t i = 0; i < items.size(); ++i) {
        if (dag.indegree[i] == 0) front.push_back(i);
    }
    std::size_t remaining = items.size();
    std::vector<double> decay(graph_.num_nodes, 1.0);
    int swaps_since_reset = 0;
    int swaps_since_execute = 0;
    const int stall_limit = 3 * static_cast<int>(graph_.num_nodes) + 8;

    auto node_of = [&](std::uint32_t logical) {
        int n = layout.physical_of(logical);
        if (n < 0) throw std::logic_error("routing touched an unmapped qubit");
        return static_cast<std::uint32_t>(n);
    };

    auto resolvable = [&](const RouteItem& item) {
        if (item.is_anchor) {
            return layout.physical_of(item.anchor_qubit) ==
                   static_cast<int>(item.anchor_node);
        }
        if (!item.gate.is_two_qubit()) return true;
        return graph_.adjacent(node_of(item.gate.qubits[0]), node_of(item.gate.qubits[1]));
    };

    // Executes every currently resolvable front item in index order until
    // none remain resolvable.
    auto drain_front = [&]() {
        bool progress = true;
        while (progress) {
            progress = false;
            std::sort(front.begin(), front.end());
            std::vector<std::uint32_t> still_blocked;
            for (std::uint32_t idx : front) {
                if (!resolvable(items[idx])) {
                    still_blocked.push_back(idx);
                    continue;
                }
                const RouteItem& item = items[idx];
                RouteEntry entry;
                entry.tag = item.tag;
                if (item.is_anchor) {
                    entry.is_anchor = true;
                    result.entries.push_back(entry);
                    // Hand the node over from the outgoing to the incoming qubit.
                    layout.replace_occupant(item.anchor_node, item.anchor_in_qubit);
                } else {
                    Gate g = item.gate;
                    g.qubits[0] = node_of(g.qubits[0]);
                    if (g.is_two_qubit()) g.qubits[1] = node_of(g.qubits[1]);
                    entry.gate = g;
                    result.entries.push_back(entry);
                }
                --remaining;
                swaps_since_execute = 0;
                for (std::uint32_t succ : dag.successors[idx]) {
                    if (--dag.indegree[succ] == 0) still_blocked.push_back(succ);
                }
                progress = true;
            }
            front = std::move(still_blocked);
        }
    };

    auto front_targets = [&](std::uint32_t idx) -> std::pair<std::uint32_t, std::uint32_t> {
        const RouteItem& item = items[idx];
        if (item.is_anchor) return {node_of(item.anchor_qubit), item.anchor_node};
        return {node_of(item.gate.qubits[0]), node_of(item.gate.qubits[1])};
    };

    auto apply_swap = [&](std::uint32_t edge_index) {
        auto [a, b] = graph_.edges[edge_index];
        layout.swap_physical(a, b);
        RouteEntry entry;
        entry.gate = Gate::swap(a, b);
        entry.inserted = true;
        result.entries.push_back(entry);
        ++result.inserted_swaps;
        result.inserted_swap_cost += dist.at(a, b);
        decay[a] += config_.decay_increment;
        decay[b] += config_.decay_increment;
        if (++swaps_since_reset >= config_.decay_reset_interval) {
            std::fill(decay.begin(), decay.end(), 1.0);
            swaps_since_reset = 0;
        }
        ++swaps_since_execute;
    };

    while (true) {
        drain_front();
        if (remaining == 0) break;

        // Blocked: every front item is a two-qubit gate or anchor out of place.
        std::sort(front.begin(), front.end());
        std::vector<std::uint32_t> blocked = front;

        if (swaps_since_execute > stall_limit) {
            // Safety valve: march the first blocked item one step along its
            // shortest path, ignoring the heuristic.
            auto [from, to] = front_targets(blocked.front());
            std::uint32_t best_edge = 0;
            double best = std::numeric_limits<double>::infinity();
            for (std::uint32_t e : graph_.edges_of_[from]) {
                auto [a, b] = graph_.edges[e];
                std::uint32_t other = a == from ? b : a;
                double d = dist.at(other, to);
                if (d < best) {
                    best = d;
                    best_edge = e;
                }
            }
            apply_swap(best_edge);
            continue;
        }

        // Candidate SWAPs: edges touching any blocked operand node.
        std::vector<std::uint32_t> candidates;
        for (std::uint32_t idx : blocked) {
            const RouteItem& item = items[idx];
            std::vector<std::uint32_t> nodes;
            if (item.is_anchor) {
                nodes.push_back(node_of(item.anchor_qubit));
            } else {
                nodes.push_back(node_of(item.gate.qubits[0]));
                nodes.push_back(node_of(item.gate.qubits[1]));
            }
            for (std::uint32_t n : nodes) {
                for (std::uint32_t e : graph_.edges_of_[n]) candidates.push_back(e);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        if (candidates.empty()) {
            throw std::logic_error("router blocked with no candidate swaps");
        }

        // Extended set: upcoming two-qubit/anchor items behind the front.
        std::vector<std::uint32_t> extended;
        {
            std::vector<int> indeg = dag.indegree;
            std::deque<std::uint32_t> queue(blocked.begin(), blocked.end());
            std::vector<bool> seen(items.size(), false);
            for (auto b : blocked) seen[b] = true;
            while (!queue.empty() &&
                   extended.size() < static_cast<std::size_t>(config_.extended_set_size)) {
                std::uint32_t idx = queue.front();
                queue.pop_front();
                for (std::uint32_t succ : dag.successors[idx]) {
                    if (seen[succ]) continue;
                    seen[succ] = true;
                    const RouteItem& it = items[succ];
                    if (it.is_anchor || it.gate.is_two_qubit()) {
                        extended.push_back(succ);
                        if (extended.size() >= static_cast<std::size_t>(config_.extended_set_size)) {
                            break;
                        }
                    }
                    queue.push_back(succ);
                }
            }
        }

        auto node_after = [&](std::uint32_t logical, std::uint32_t sa, std::uint32_t sb) -> int {
            int n = layout.physical_of(logical);
            if (n < 0) return -1;
            if (n == static_cast<int>(sa)) return static_cast<int>(sb);
            if (n == static_cast<int>(sb)) return static_cast<int>(sa);
            return n;
        };
        auto item_distance_after = [&](std::uint32_t idx, std::uint32_t sa,
                                       std::uint32_t sb) -> double {
            const RouteItem& item = items[idx];
            if (item.is_anchor) {
                int n = node_after(item.anchor_qubit, sa, sb);
                if (n < 0) return -1.0;
                return dist.at(static_cast<std::uint32_t>(n), item.anchor_node);
            }
            int na = node_after(item.gate.qubits[0], sa, sb);
            int nb = node_after(item.gate.qubits[1], sa, sb);
            if (na < 0 || nb < 0) return -1.0;
            return dist.at(static_cast<std::uint32_t>(na), static_cast<std::uint32_t>(nb));
        };

        std::uint32_t best_edge = candidates.front();
        double best_score = std::numeric_limits<double>::infinity();
        for (std::uint32_t e : candidates) {
            auto [sa, sb] = graph_.edges[e];
            double front_sum = 0.0;
            for (std::uint32_t idx : blocked) front_sum += item_distance_after(idx, sa, sb);
            double score = front_sum / static_cast<double>(blocked.size());
            if (!extended.empty()) {
                double ext_sum = 0.0;
                int counted = 0;
                for (std::uint32_t idx : extended) {
                    double d = item_distance_after(idx, sa, sb);
                    if (d >= 0.0) {
                        ext_sum += d;
                        ++counted;
                    }
                }
                if (counted > 0) {
                    score += config_.extended_set_weight * ext_sum /
                             static_cast<double>(counted);
                }
            }
            score *= std::max(decay[sa], decay[sb]);
            if (score < best_score) {
                best_score = score;
                best_edge = e;
            }
        }
        apply_swap(best_edge);
    }

    result.final_layout = std::move(layout);
    return result;
}

Layout sabre_layout_search(const RoutingGraph& graph, const std::vector<RouteItem>& items,
                           const std::vector<std::uint32_t>& logical_ids,
                           std::size_t num_logical_ids, int trials, std::uint64_t seed,
                           SabreConfig config) {
    if (trials < 1) throw std::invalid_argument("layout search needs at least one trial");
    if (logical_ids.size() > graph.num_nodes) {
        throw std::invalid_argument("more logical qubits than routing nodes");
    }
    SabreRouter router(graph, config);

    // In reversed time an anchor's incoming qubit is the one that leaves.
    std::vector<RouteItem> reversed(items.rbegin(), items.rend());
    for (RouteItem& item : reversed) {
        if (item.is_anchor) std::swap(item.anchor_qubit, item.anchor_in_qubit);
    }

    Layout best_layout;
    double best_cost = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(child_seed(seed, static_cast<std::uint64_t>(trial)));
        std::vector<std::uint32_t> nodes(graph.num_nodes);
        for (std::uint32_t i = 0; i < nodes.size(); ++i) nodes[i] = i;
        rng.shuffle(nodes);
        Layout layout(num_logical_ids, graph.num_nodes);
        for (std::size_t i = 0; i < logical_ids.size(); ++i) {
            layout.assign(logical_ids[i], nodes[i]);
        }
        Layout refined = std::move(layout);
        for (int round = 0; round < 2; ++round) {
            RouteResult forward = router.route(items, std::move(refined));
            RouteResult reverse = router.route(reversed, std::move(forward.final_layout));
            refined = std::move(reverse.final_layout);
        }
        RouteResult eval = router.route(items, refined);
        if (eval.inserted_swap_cost < best_cost) {
            best_cost = eval.inserted_swap_cost;
            best_layout = std::move(refined);
        }
    }
    return best_layout;
}

std::pair<Circuit, Layout> sabre_route(const Circuit& c, const Backend& b,
                                       const DistanceMatrix& d, const Layout& init,
                                       [[maybe_unused]] std::uint64_t seed, SabreConfig config) {
    RoutingGraph graph;
    graph.num_nodes = b.num_qubits();
    for (const auto& link : b.links) graph.edges.push_back({link.a, link.b});
    graph.dist = &d;
    graph.build_adjacency();

    std::vector<RouteItem> items;
    items.reserve(c.size());
    for (const Gate& g : c.gates()) items.push_back(RouteItem::from_gate(g));

    SabreRouter router(graph, config);
    RouteResult result = router.route(items, init);

    Circuit out(c.name(), b.num_qubits());
    for (const auto& entry : result.entries) out.add(entry.gate);
    return {std::move(out), std::move(result.final_layout)};
}

Layout sabre_layout(const Circuit& c, const Backend& b, const DistanceMatrix& d, int trials,
                    std::uint64_t seed, SabreConfig config) {
    RoutingGraph graph;
    graph.num_nodes = b.num_qubits();
    for (const auto& link : b.links) graph.edges.push_back({link.a, link.b});
    graph.dist = &d;
    graph.build_adjacency();

    std::vector<RouteItem> items;
    items.reserve(c.size());
    for (const Gate& g : c.gates()) items.push_back(RouteItem::from_gate(g));

    std::vector<std::uint32_t> logical(c.num_qubits());
    for (std::uint32_t i = 0; i < logical.size(); ++i) logical[i] = i;
    return sabre_layout_search(graph, items, logical, c.num_qubits(), trials, seed, config);
}

}  // namespace seqc
