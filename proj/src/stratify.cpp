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

#include "seqc/stratify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "seqc/parallel.hpp"
#include "seqc/rng.hpp"

namespace seqc {

std::string_view to_string(SwapTier tier) {
    switch (tier) {
        case SwapTier::Symbiotic: return "symbiotic";
        case SwapTier::Commensalistic: return "commensalistic";
        case SwapTier::Neutral: return "neutral";
        case SwapTier::Parasitic: return "parasitic";
    }
    throw std::logic_error("unknown swap tier");
}

int partition_cost(const Circuit& c, const Partition& p) {
    int cost = 0;
    for (const Gate& g : c.gates()) {
        if (!g.is_two_qubit()) continue;
        if (p.assignment.at(g.qubits[0]) != p.assignment.at(g.qubits[1])) ++cost;
    }
    return cost;
}

namespace {

struct AnnealOutcome {
    std::vector<int> assignment;
    long long cost = 0;
};

/// One independent annealing run over the interaction graph.
AnnealOutcome anneal_trial(const InteractionGraph& ig,
                           const std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>& adj,
                           std::uint32_t num_slots, int num_subcircuits, int capacity,
                           const AnnealingConfig& cfg, std::uint64_t trial_seed) {
    SplitMix64 rng(trial_seed);

    // Seeded random balanced assignment: deal shuffled slots into subcircuits.
    std::vector<std::uint32_t> slots(num_slots);
    for (std::uint32_t i = 0; i < num_slots; ++i) slots[i] = i;
    rng.shuffle(slots);
    std::vector<int> assign(num_slots);
    for (std::uint32_t i = 0; i < num_slots; ++i) {
        assign[slots[i]] = static_cast<int>(i / capacity);
    }

    auto full_cost = [&] {
        long long cost = 0;
        for (const auto& [pair, w] : ig.edges) {
            if (assign[pair.first] != assign[pair.second]) cost += w;
        }
        return cost;
    };
    long long cost = full_cost();
    AnnealOutcome best{assign, cost};
    if (num_subcircuits < 2) return best;

    for (double t = cfg.t0; t >= cfg.min_temperature; t *= (1.0 - cfg.cooling)) {
        long long moves =
            std::max<long long>(1, std::llround(t / cfg.moves_divisor)) * num_slots;
        for (long long move = 0; move < moves; ++move) {
            std::uint32_t u = static_cast<std::uint32_t>(rng.next_below(num_slots));
            std::uint32_t v = static_cast<std::uint32_t>(rng.next_below(num_slots));
            while (assign[u] == assign[v]) {
                v = static_cast<std::uint32_t>(rng.next_below(num_slots));
            }
            int pu = assign[u], pv = assign[v];
            long long delta = 0;
            for (auto [x, w] : adj[u]) {
                if (x == v) continue;  // the exchanged pair stays split either way
                delta += static_cast<long long>(w) *
                         ((pv != assign[x] ? 1 : 0) - (pu != assign[x] ? 1 : 0));
            }
            for (auto [x, w] : adj[v]) {
                if (x == u) continue;
                delta += static_cast<long long>(w) *
                         ((pu != assign[x] ? 1 : 0) - (pv != assign[x] ? 1 : 0));
            }
            bool accept = delta <= 0 || rng.next_double() < std::exp(-static_cast<double>(delta) / t);
            if (accept) {
                assign[u] = pv;
                assign[v] = pu;
                cost += delta;
                if (cost < best.cost) {
                    best.cost = cost;
                    best.assignment = assign;
                }
            }
        }
    }
    return best;
}

}  // namespace

Partition anneal_partition(const Circuit& c, int num_subcircuits, int capacity,
                           const AnnealingConfig& cfg, std::uint64_t seed, unsigned workers) {
    if (num_subcircuits < 1 || capacity < 1) {
        throw std::invalid_argument("partition shape must be positive");
    }
    std::uint32_t num_slots = static_cast<std::uint32_t>(num_subcircuits) * capacity;
    if (num_slots < c.num_qubits()) {
        throw std::invalid_argument("subcircuit capacity cannot hold the circuit");
    }
    if (cfg.trials < 1) throw std::invalid_argument("annealing needs at least one trial");

    InteractionGraph ig = interaction_graph(c);
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(num_slots);
    for (const auto& [pair, w] : ig.edges) {
        adj[pair.first].push_back({pair.second, w});
        adj[pair.second].push_back({pair.first, w});
    }

    std::vector<AnnealOutcome> outcomes(cfg.trials);
    parallel_for(static_cast<std::size_t>(cfg.trials), workers, [&](std::size_t t) {
        outcomes[t] = anneal_trial(ig, adj, num_slots, num_subcircuits, capacity, cfg,
                                   child_seed(seed, t));
    });

    std::size_t winner = 0;
    for (std::size_t t = 1; t < outcomes.size(); ++t) {
        if (outcomes[t].cost < outcomes[winner].cost) winner = t;
    }

    Partition p;
    p.assignment = std::move(outcomes[winner].assignment);
    p.num_subcircuits = num_subcircuits;
    p.capacity = capacity;
    p.num_real = c.num_qubits();
    return p;
}

SwapClass classify_swap(const ExchangeCandidate& cand,
                        const std::vector<std::pair<std::uint32_t, std::uint32_t>>& front_gates,
                        const std::vector<int>& qubit_chiplet,
                        const std::vector<std::vector<int>>& chiplet_dist) {
    SwapClass cls;
    auto chiplet_after = [&](std::uint32_t q) {
        if (q == cand.qubit_a) return cand.chiplet_b;
        if (q == cand.qubit_b) return cand.chiplet_a;
        return qubit_chiplet[q];
    };
    for (const auto& [a, b] : front_gates) {
        int before = chiplet_dist[qubit_chiplet[a]][qubit_chiplet[b]];
        int after = chiplet_dist[chiplet_after(a)][chiplet_after(b)];
        if (after < before) ++cls.improved;
        if (after > before) ++cls.harmed;
        cls.net_gain += before - after;
    }
    if (cls.harmed > 0) {
        cls.tier = SwapTier::Parasitic;
    } else if (cls.improved >= 2) {
        cls.tier = SwapTier::Symbiotic;
    } else if (cls.improved == 1) {
        cls.tier = SwapTier::Commensalistic;
    } else {
        cls.tier = SwapTier::Neutral;
    }
    return cls;
}

namespace {

struct AllocationTrial {
    ChipletAllocation allocation;
};

AllocationTrial run_allocation_trial(const Circuit& c, const Partition& p, const Backend& b,
                                     const ChipletGraph& cg,
                                     const std::vector<std::vector<int>>& chiplet_dist,
                                     std::uint64_t trial_seed) {
    const int num_chiplets = static_cast<int>(b.chiplets.size());
    const int capacity = p.capacity;
    SplitMix64 rng(trial_seed);

    AllocationTrial trial;
    ChipletAllocation& alloc = trial.allocation;

    // Random injective placement of subcircuits onto chiplets.
    std::vector<int> chiplet_ids(num_chiplets);
    for (int i = 0; i < num_chiplets; ++i) chiplet_ids[i] = i;
    rng.shuffle(chiplet_ids);
    alloc.subcircuit_chiplet.assign(p.num_subcircuits, -1);
    for (int s = 0; s < p.num_subcircuits; ++s) alloc.subcircuit_chiplet[s] = chiplet_ids[s];

    // Occupancy: partition slots land on their subcircuit's chiplet; every
    // other chiplet is padded with fresh filler ids so exchanges always have
    // a counterpart.
    std::uint32_t total_slots = static_cast<std::uint32_t>(num_chiplets) * capacity;
    std::vector<int> qubit_chiplet(total_slots, -1);
    for (std::uint32_t q = 0; q < p.num_slots(); ++q) {
        qubit_chiplet[q] = alloc.subcircuit_chiplet[p.assignment[q]];
    }
    std::uint32_t next_filler = p.num_slots();
    for (int chip = 0; chip < num_chiplets; ++chip) {
        int used = 0;
        for (std::uint32_t q = 0; q < p.num_slots(); ++q) {
            if (qubit_chiplet[q] == chip) ++used;
        }
        for (int k = used; k < capacity; ++k) qubit_chiplet[next_filler++] = chip;
    }

    std::vector<std::vector<std::uint32_t>> occupants(num_chiplets);
    for (std::uint32_t q = 0; q < total_slots; ++q) {
        occupants[qubit_chiplet[q]].push_back(q);
    }
    for (auto& o : occupants) std::sort(o.begin(), o.end());
    alloc.initial_occupancy = occupants;

    // Front-layer walk over the circuit DAG.
    DependencyGraph dag = build_dependency_graph(c);
    std::vector<int> indegree(dag.node_count);
    for (std::size_t i = 0; i < dag.node_count; ++i) indegree[i] = static_cast<int>(dag.predecessors[i].size());
    std::vector<std::uint32_t> front;
    for (std::uint32_t i = 0; i < dag.node_count; ++i) {
        if (indegree[i] == 0) front.push_back(i);
    }
    std::size_t remaining = dag.node_count;

    auto executable = [&](std::uint32_t gi) {
        const Gate& g = c.gates()[gi];
        if (!g.is_two_qubit()) return true;
        return qubit_chiplet[g.qubits[0]] == qubit_chiplet[g.qubits[1]];
    };

    auto is_filler = [&](std::uint32_t q) { return q >= p.num_real; };

    int stall = 0;
    bool forcing = false;
    const int stall_bound = 3 * num_chiplets;

    while (true) {
        // Execute everything currently executable, in circuit order.
        bool progress = true;
        while (progress) {
            progress = false;
            std::sort(front.begin(), front.end());
            std::vector<std::uint32_t> blocked;
            for (std::uint32_t gi : front) {
                if (!executable(gi)) {
                    blocked.push_back(gi);
                    continue;
                }
                alloc.routed.push_back({false, gi});
                --remaining;
                stall = 0;
                forcing = false;
                for (std::uint32_t succ : dag.successors[gi]) {
                    if (--indegree[succ] == 0) blocked.push_back(succ);
                }
                progress = true;
            }
            front = std::move(blocked);
        }
        if (remaining == 0) break;

        std::sort(front.begin(), front.end());
        std::vector<std::pair<std::uint32_t, std::uint32_t>> front_gates;
        for (std::uint32_t gi : front) {
            const Gate& g = c.gates()[gi];
            front_gates.push_back({g.qubits[0], g.qubits[1]});
        }

        // Candidates: exchanges of a front operand with an occupant of an
        // adjacent chiplet; filler occupants (idle slots) enumerate first.
        std::vector<ExchangeCandidate> candidates;
        std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
        auto add_candidate = [&](std::uint32_t u, std::uint32_t v) {
            std::pair<std::uint32_t, std::uint32_t> key{std::min(u, v), std::max(u, v)};
            if (!seen.insert(key).second) return;
            candidates.push_back({u, v, qubit_chiplet[u], qubit_chiplet[v]});
        };
        for (const auto& [qa, qb] : front_gates) {
            for (std::uint32_t u : {qa, qb}) {
                int cu = qubit_chiplet[u];
                for (int nb : cg.neighbors[cu]) {
                    for (std::uint32_t v : occupants[nb]) {
                        if (is_filler(v)) add_candidate(u, v);
                    }
                    for (std::uint32_t v : occupants[nb]) {
                        if (!is_filler(v)) add_candidate(u, v);
                    }
                }
            }
        }
        if (candidates.empty()) {
            throw std::logic_error("chiplet allocation blocked with no candidates");
        }

        std::vector<SwapClass> classes(candidates.size());
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            classes[i] = classify_swap(candidates[i], front_gates, qubit_chiplet, chiplet_dist);
        }

        std::size_t chosen = 0;
        if (forcing) {
            // Stalled: commit to a candidate that strictly improves the first
            // blocked gate, so its distance falls every step and it executes.
            const auto& [ga, gb] = front_gates.front();
            int before = chiplet_dist[qubit_chiplet[ga]][qubit_chiplet[gb]];
            bool found = false;
            int best_gain = std::numeric_limits<int>::min();
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                const auto& cand = candidates[i];
                auto after_of = [&](std::uint32_t q) {
                    if (q == cand.qubit_a) return cand.chiplet_b;
                    if (q == cand.qubit_b) return cand.chiplet_a;
                    return qubit_chiplet[q];
                };
                if (chiplet_dist[after_of(ga)][after_of(gb)] >= before) continue;
                if (!found || classes[i].net_gain > best_gain) {
                    found = true;
                    best_gain = classes[i].net_gain;
                    chosen = i;
                }
            }
            if (!found) {
                throw std::logic_error("no candidate advances the stalled gate");
            }
        } else {
            auto rank = [&](std::size_t i) {
                return std::make_pair(static_cast<int>(classes[i].tier), -classes[i].net_gain);
            };
            for (std::size_t i = 1; i < candidates.size(); ++i) {
                if (rank(i) < rank(chosen)) chosen = i;
            }
            if (classes[chosen].improved == 0) {
                if (++stall >= stall_bound) forcing = true;
            } else {
                stall = 0;
            }
        }

        const ExchangeCandidate& cand = candidates[chosen];
        BoundaryEvent event;
        event.id = static_cast<std::uint32_t>(alloc.events.size());
        event.chiplet_a = cand.chiplet_a;
        event.chiplet_b = cand.chiplet_b;
        event.qubit_a = cand.qubit_a;
        event.qubit_b = cand.qubit_b;
        alloc.events.push_back(event);
        alloc.routed.push_back({true, event.id});

        qubit_chiplet[cand.qubit_a] = cand.chiplet_b;
        qubit_chiplet[cand.qubit_b] = cand.chiplet_a;
        auto& oa = occupants[cand.chiplet_a];
        auto& ob = occupants[cand.chiplet_b];
        oa.erase(std::find(oa.begin(), oa.end(), cand.qubit_a));
        ob.erase(std::find(ob.begin(), ob.end(), cand.qubit_b));
        oa.insert(std::lower_bound(oa.begin(), oa.end(), cand.qubit_b), cand.qubit_b);
        ob.insert(std::lower_bound(ob.begin(), ob.end(), cand.qubit_a), cand.qubit_a);
    }

    return trial;
}

}  // namespace

ChipletAllocation allocate_chiplets(const Circuit& c, const Partition& p, const Backend& b,
                                    int trials, std::uint64_t seed, unsigned workers) {
    if (trials < 1) throw std::invalid_argument("allocation needs at least one trial");
    if (p.num_subcircuits > static_cast<int>(b.chiplets.size())) {
        throw std::invalid_argument("more subcircuits than chiplets");
    }
    for (const auto& chip : b.chiplets) {
        if (static_cast<int>(chip.qubits.size()) != p.capacity) {
            throw std::invalid_argument("partition capacity does not match chiplet size");
        }
    }
    ChipletGraph cg = chiplet_graph(b);
    std::vector<std::vector<int>> chiplet_dist = cg.hop_distances();
    for (const auto& row : chiplet_dist) {
        for (int d : row) {
            if (d < 0) throw std::invalid_argument("chiplet graph is disconnected");
        }
    }

    std::vector<AllocationTrial> results(trials);
    parallel_for(static_cast<std::size_t>(trials), workers, [&](std::size_t trial) {
        results[trial] = run_allocation_trial(c, p, b, cg, chiplet_dist,
                                              child_seed(seed, trial));
    });
    std::size_t winner = 0;
    for (std::size_t t = 1; t < results.size(); ++t) {
        if (results[t].allocation.events.size() < results[winner].allocation.events.size()) {
            winner = t;
        }
    }
    return std::move(results[winner].allocation);
}

StratifiedCircuit stratify(const Circuit& c, const Backend& b, const StratifyConfig& cfg,
                           std::uint64_t seed, unsigned workers) {
    if (c.num_qubits() > b.num_qubits()) {
        throw std::invalid_argument("circuit does not fit on backend");
    }
    const int capacity = static_cast<int>(b.chiplets.front().qubits.size());
    const int num_subcircuits =
        static_cast<int>((c.num_qubits() + capacity - 1) / capacity);

    Partition p = anneal_partition(c, num_subcircuits, capacity, cfg.annealing,
                                   child_seed(seed, 0x5eed), workers);
    ChipletAllocation alloc = allocate_chiplets(c, p, b, cfg.allocation_trials,
                                                child_seed(seed, 0xa110c), workers);

    StratifiedCircuit strat;
    strat.circuit_name = c.name();
    strat.num_real_qubits = c.num_qubits();
    strat.num_slots = static_cast<std::uint32_t>(b.chiplets.size()) * capacity;
    strat.backend_id = b.name;
    strat.capacity = capacity;
    strat.seed = seed;

    // Project the routed stream into per-chiplet programs, tracking where
    // each logical qubit lives as events hand qubits across links.
    std::vector<int> qubit_chiplet(strat.num_slots, -1);
    for (int chip = 0; chip < static_cast<int>(alloc.initial_occupancy.size()); ++chip) {
        for (std::uint32_t q : alloc.initial_occupancy[chip]) qubit_chiplet[q] = chip;
    }
    strat.programs.assign(b.chiplets.size(), {});
    for (const auto& op : alloc.routed) {
        if (op.is_event) {
            const BoundaryEvent& ev = alloc.events[op.index];
            ProgramItem item;
            item.is_event = true;
            item.event_id = ev.id;
            strat.programs[ev.chiplet_a].push_back(item);
            strat.programs[ev.chiplet_b].push_back(item);
            qubit_chiplet[ev.qubit_a] = ev.chiplet_b;
            qubit_chiplet[ev.qubit_b] = ev.chiplet_a;
        } else {
            const Gate& g = c.gates()[op.index];
            ProgramItem item;
            item.gate = g;
            strat.programs[qubit_chiplet[g.qubits[0]]].push_back(item);
        }
    }

    strat.partition = std::move(p);
    strat.allocation = std::move(alloc);
    return strat;
}

std::string StratifiedCircuit::to_json_string(int indent) const {
    nlohmann::json j;
    j["circuit_name"] = circuit_name;
    j["num_real_qubits"] = num_real_qubits;
    j["num_slots"] = num_slots;
    j["backend_id"] = backend_id;
    j["capacity"] = capacity;
    j["seed"] = seed;
    j["partition"] = {{"assignment", partition.assignment},
                      {"num_subcircuits", partition.num_subcircuits},
                      {"capacity", partition.capacity},
                      {"num_real", partition.num_real}};
    nlohmann::json events = nlohmann::json::array();
    for (const auto& ev : allocation.events) {
        events.push_back({{"id", ev.id},
                          {"chiplet_a", ev.chiplet_a},
                          {"chiplet_b", ev.chiplet_b},
                          {"qubit_a", ev.qubit_a},
                          {"qubit_b", ev.qubit_b}});
    }
    nlohmann::json routed = nlohmann::json::array();
    for (const auto& op : allocation.routed) {
        routed.push_back({{"event", op.is_event}, {"index", op.index}});
    }
    j["allocation"] = {{"subcircuit_chiplet", allocation.subcircuit_chiplet},
                       {"initial_occupancy", allocation.initial_occupancy},
                       {"events", events},
                       {"routed", routed}};
    nlohmann::json jprograms = nlohmann::json::array();
    for (const auto& program : programs) {
        nlohmann::json jp = nlohmann::json::array();
        for (const auto& item : program) {
            if (item.is_event) {
                jp.push_back({{"type", "event"}, {"id", item.event_id}});
            } else {
                nlohmann::json jg;
                jg["type"] = "gate";
                jg["kind"] = std::string(to_string(item.gate.kind));
                auto& qs = jg["qubits"] = nlohmann::json::array();
                for (int k = 0; k < item.gate.arity(); ++k) qs.push_back(item.gate.qubits[k]);
                if (item.gate.has_param()) jg["param"] = item.gate.param;
                jp.push_back(std::move(jg));
            }
        }
        jprograms.push_back(std::move(jp));
    }
    j["programs"] = std::move(jprograms);
    return indent >= 0 ? j.dump(indent) : j.dump();
}

StratifiedCircuit StratifiedCircuit::from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    StratifiedCircuit s;
    s.circuit_name = j.at("circuit_name").get<std::string>();
    s.num_real_qubits = j.at("num_real_qubits").get<std::uint32_t>();
    s.num_slots = j.at("num_slots").get<std::uint32_t>();
    s.backend_id = j.at("backend_id").get<std::string>();
    s.capacity = j.at("capacity").get<int>();
    s.seed = j.at("seed").get<std::uint64_t>();
    const auto& jp = j.at("partition");
    s.partition.assignment = jp.at("assignment").get<std::vector<int>>();
    s.partition.num_subcircuits = jp.at("num_subcircuits").get<int>();
    s.partition.capacity = jp.at("capacity").get<int>();
    s.partition.num_real = jp.at("num_real").get<std::uint32_t>();
    const auto& ja = j.at("allocation");
    s.allocation.subcircuit_chiplet = ja.at("subcircuit_chiplet").get<std::vector<int>>();
    s.allocation.initial_occupancy =
        ja.at("initial_occupancy").get<std::vector<std::vector<std::uint32_t>>>();
    for (const auto& je : ja.at("events")) {
        BoundaryEvent ev;
        ev.id = je.at("id").get<std::uint32_t>();
        ev.chiplet_a = je.at("chiplet_a").get<int>();
        ev.chiplet_b = je.at("chiplet_b").get<int>();
        ev.qubit_a = je.at("qubit_a").get<std::uint32_t>();
        ev.qubit_b = je.at("qubit_b").get<std::uint32_t>();
        s.allocation.events.push_back(ev);
    }
    for (const auto& jo : ja.at("routed")) {
        s.allocation.routed.push_back(
            {jo.at("event").get<bool>(), jo.at("index").get<std::uint32_t>()});
    }
    for (const auto& jprogram : j.at("programs")) {
        std::vector<ProgramItem> program;
        for (const auto& ji : jprogram) {
            ProgramItem item;
            if (ji.at("type").get<std::string>() == "event") {
                item.is_event = true;
                item.event_id = ji.at("id").get<std::uint32_t>();
            } else {
                GateKind kind = gate_kind_from_string(ji.at("kind").get<std::string>());
                const auto& qs = ji.at("qubits");
                double param = gate_has_param(kind) ? ji.at("param").get<double>() : 0.0;
                if (gate_arity(kind) == 1) {
                    item.gate = Gate::one(kind, qs[0].get<std::uint32_t>(), param);
                } else {
                    item.gate = Gate::two(kind, qs[0].get<std::uint32_t>(),
                                          qs[1].get<std::uint32_t>(), param);
                }
            }
            program.push_back(item);
        }
        s.programs.push_back(std::move(program));
    }
    return s;
}

}  // namespace seqc
