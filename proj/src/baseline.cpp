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

#include "seqc/baseline.hpp"

#include <limits>
#include <stdexcept>

#include "seqc/translate.hpp"

namespace seqc {

namespace {

/// Intra neighbors of a halo qubit, in link-index order.
std::vector<std::uint32_t> intra_neighbors(const Backend& b, std::uint32_t q) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t li : b.links_of(q)) {
        const Link& link = b.links[li];
        if (link.scope != LinkScope::Intra) continue;
        out.push_back(link.a == q ? link.b : link.a);
    }
    return out;
}

}  // namespace

CompiledCircuit peephole_correct(const CompiledCircuit& cc, const Backend& b) {
    CompiledCircuit out = cc;
    Circuit corrected(cc.routed.name(), cc.routed.num_qubits());

    // Track occupancy while replaying so "idle neighbor" means idle at the
    // point of correction.
    Layout occupancy = cc.initial_layout;

    for (const Gate& g : cc.routed.gates()) {
        if (g.is_two_qubit()) {
            int li = b.link_between(g.qubits[0], g.qubits[1]);
            if (li < 0) throw std::invalid_argument("routed gate off any link");
            if (b.links[li].scope == LinkScope::Inter && g.kind != GateKind::Swap) {
                // Choose which side to displace: prefer a side with an idle
                // intra neighbor, then the lowest-indexed neighbor qubit.
                std::uint32_t best_halo = 0, best_nbr = 0;
                bool found = false, best_idle = false;
                for (int side = 0; side < 2; ++side) {
                    std::uint32_t halo = g.qubits[side];
                    for (std::uint32_t nbr : intra_neighbors(b, halo)) {
                        bool idle = !occupancy.is_occupied(nbr);
                        bool better = !found || (idle && !best_idle) ||
                                      (idle == best_idle && nbr < best_nbr);
                        if (better) {
                            best_halo = halo;
                            best_nbr = nbr;
                            best_idle = idle;
                            found = true;
                        }
                    }
                }
                if (!found) {
                    throw std::invalid_argument("halo qubit has no intra neighbor");
                }
                std::uint32_t other = g.qubits[0] == best_halo ? g.qubits[1] : g.qubits[0];
                // Displace, cross, run the gate inside the chiplet, undo.
                corrected.add(Gate::swap(best_halo, best_nbr));
                corrected.add(Gate::swap(other, best_halo));
                Gate moved = g;
                moved.qubits[0] = g.qubits[0] == best_halo ? best_nbr : best_halo;
                moved.qubits[1] = g.qubits[1] == best_halo ? best_nbr : best_halo;
                corrected.add(moved);
                corrected.add(Gate::swap(other, best_halo));
                corrected.add(Gate::swap(best_halo, best_nbr));
                continue;
            }
            if (g.kind == GateKind::Swap) {
                occupancy.swap_physical(g.qubits[0], g.qubits[1]);
            }
        }
        corrected.add(g);
    }

    out.routed = std::move(corrected);
    return out;
}

CompiledCircuit baseline_compile(const Circuit& c, const Backend& b, std::uint64_t seed,
                                 const BaselineConfig& config) {
    if (c.num_qubits() > b.num_qubits()) {
        throw std::invalid_argument("circuit does not fit on backend");
    }
    DistanceMatrix hops = distance_matrix(b, DistanceWeighting::Hops);
    Layout init = sabre_layout(c, b, hops, config.layout_trials, seed, config.sabre);
    auto [routed, final_layout] = sabre_route(c, b, hops, init, seed, config.sabre);

    CompiledCircuit cc;
    cc.routed = std::move(routed);
    cc.initial_layout = init;
    cc.final_layout = std::move(final_layout);
    cc.backend_id = b.name;
    cc.pipeline = Pipeline::Baseline;
    cc.seed = seed;

    cc = peephole_correct(cc, b);
    cc.circuit = optimize(translate_basis(cc.routed, b), b);
    return cc;
}

}  // namespace seqc
