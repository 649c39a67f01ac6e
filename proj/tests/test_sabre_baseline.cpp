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

#include <doctest.h>

#include "seqc/baseline.hpp"
#include "seqc/benchmarks.hpp"
#include "seqc/verify.hpp"
#include "test_helpers.hpp"

using namespace seqc;
using seqc::testing::line_backend;

namespace {

Layout identity_layout(std::uint32_t n, std::uint32_t physical) {
    Layout l(n, physical);
    for (std::uint32_t q = 0; q < n; ++q) l.assign(q, q);
    return l;
}

int count_swaps(const Circuit& c) {
    int n = 0;
    for (const auto& g : c.gates()) {
        if (g.kind == GateKind::Swap) ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("routing an already-adjacent circuit inserts nothing") {
    Backend b = line_backend(1, 4);
    DistanceMatrix d = distance_matrix(b, DistanceWeighting::Hops);
    Circuit c("adj", 4);
    c.add(Gate::cx(0, 1));
    c.add(Gate::cx(2, 3));
    auto [routed, final_layout] = sabre_route(c, b, d, identity_layout(4, 4), 1);
    CHECK(count_swaps(routed) == 0);
    CHECK(routed.size() == 2);
    CHECK(final_layout == identity_layout(4, 4));
}

TEST_CASE("routing a two-hop gate inserts exactly one swap") {
    Backend b = line_backend(1, 3);
    DistanceMatrix d = distance_matrix(b, DistanceWeighting::Hops);
    Circuit c("hop", 3);
    c.add(Gate::cx(0, 2));
    auto [routed, final_layout] = sabre_route(c, b, d, identity_layout(3, 3), 1);
    CHECK(count_swaps(routed) == 1);
}

TEST_CASE("routing preserves per-qubit order on a real benchmark") {
    Backend b = generate_backend(2);
    DistanceMatrix d = distance_matrix(b, DistanceWeighting::Hops);
    Circuit c = ghz(20);
    Layout init = sabre_layout(c, b, d, 4, 7);
    auto [routed, final_layout] = sabre_route(c, b, d, init, 7);

    CompiledCircuit cc;
    cc.circuit = routed;
    cc.routed = routed;
    cc.initial_layout = init;
    cc.final_layout = final_layout;
    CHECK(permutation_equiv(c, cc));
}

TEST_CASE("layout search is deterministic in the seed") {
    Backend b = generate_backend(2);
    DistanceMatrix d = distance_matrix(b, DistanceWeighting::Hops);
    Circuit c = ghz(20);
    Layout a = sabre_layout(c, b, d, 4, 99);
    Layout bb = sabre_layout(c, b, d, 4, 99);
    CHECK(a == bb);
}

TEST_CASE("single-qubit circuits get a deterministic singleton layout") {
    Backend b = line_backend(1, 3);
    DistanceMatrix d = distance_matrix(b, DistanceWeighting::Hops);
    Circuit c("one", 1);
    c.add(Gate::x(0));
    Layout l1 = sabre_layout(c, b, d, 2, 5);
    Layout l2 = sabre_layout(c, b, d, 2, 5);
    CHECK(l1 == l2);
    CHECK(l1.physical_of(0) >= 0);
}

TEST_CASE("peephole rewrites an inter-link gate into the 4-swap pattern") {
    Backend b = line_backend(2, 2);  // qubits 0-1 | 2-3, inter link 1-2
    Circuit routed("manual", 4);
    routed.add(Gate::cx(1, 2));

    CompiledCircuit cc;
    cc.routed = routed;
    cc.circuit = routed;
    cc.initial_layout = identity_layout(4, 4);
    cc.final_layout = identity_layout(4, 4);

    CompiledCircuit fixed = peephole_correct(cc, b);
    REQUIRE(fixed.routed.size() == 5);
    int inter_swaps = 0, intra_swaps = 0;
    for (const auto& g : fixed.routed.gates()) {
        if (g.kind != GateKind::Swap) continue;
        int li = b.link_between(g.qubits[0], g.qubits[1]);
        REQUIRE(li >= 0);
        if (b.links[li].scope == LinkScope::Inter) ++inter_swaps;
        else ++intra_swaps;
    }
    CHECK(inter_swaps == 2);
    CHECK(intra_swaps == 2);

    // The corrected gate sits inside one chiplet.
    bool found_gate = false;
    for (const auto& g : fixed.routed.gates()) {
        if (g.kind == GateKind::CX) {
            int li = b.link_between(g.qubits[0], g.qubits[1]);
            REQUIRE(li >= 0);
            CHECK(b.links[li].scope == LinkScope::Intra);
            found_gate = true;
        }
    }
    CHECK(found_gate);

    // Net layout unchanged: folding the pattern's swaps is the identity.
    CHECK(permutation_equiv(routed, fixed));
}

TEST_CASE("peephole leaves legal circuits alone") {
    Backend b = line_backend(2, 2);
    Circuit routed("legal", 4);
    routed.add(Gate::cx(0, 1));
    routed.add(Gate::swap(1, 2));  // SWAPs are allowed across chiplets

    CompiledCircuit cc;
    cc.routed = routed;
    cc.initial_layout = identity_layout(4, 4);
    cc.final_layout = identity_layout(4, 4);
    CompiledCircuit fixed = peephole_correct(cc, b);
    CHECK(fixed.routed.size() == 2);
}

TEST_CASE("baseline compile produces a valid, equivalent circuit") {
    Backend b = generate_backend(2);
    Circuit c = ghz(20);
    CompiledCircuit cc = baseline_compile(c, b, 7);
    CHECK(validate_compiled(cc, b).empty());
    std::string why;
    CHECK_MESSAGE(permutation_equiv(c, cc, &why), why);

    // Post-peephole, no inter link carries a non-SWAP gate even in the
    // routed (pre-translation) view.
    for (const auto& g : cc.routed.gates()) {
        if (!g.is_two_qubit()) continue;
        int li = b.link_between(g.qubits[0], g.qubits[1]);
        REQUIRE(li >= 0);
        if (b.links[li].scope == LinkScope::Inter) CHECK(g.kind == GateKind::Swap);
    }

    // At least one crossing is unavoidable for a chain spanning chiplets,
    // and the peephole turns non-SWAP crossings into 2 inter SWAPs each.
    int inter = 0;
    for (const auto& g : cc.circuit.gates()) {
        if (!g.is_two_qubit()) continue;
        int li = b.link_between(g.qubits[0], g.qubits[1]);
        if (li >= 0 && b.links[li].scope == LinkScope::Inter) ++inter;
    }
    CHECK(inter >= 2);
}

TEST_CASE("baseline on one chiplet never crosses") {
    Backend b = generate_backend(1);
    Circuit c = ghz(10);
    CompiledCircuit cc = baseline_compile(c, b, 3);
    CHECK(validate_compiled(cc, b).empty());
    for (const auto& g : cc.circuit.gates()) {
        if (!g.is_two_qubit()) continue;
        int li = b.link_between(g.qubits[0], g.qubits[1]);
        CHECK(b.links[li].scope == LinkScope::Intra);
    }
}

TEST_CASE("baseline compile is deterministic") {
    Backend b = generate_backend(2);
    Circuit c = vqe(20, 3);
    CompiledCircuit a = baseline_compile(c, b, 11);
    CompiledCircuit bb = baseline_compile(c, b, 11);
    CHECK(a.to_json_string() == bb.to_json_string());
}
