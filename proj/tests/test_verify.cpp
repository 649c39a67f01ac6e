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
#include "seqc/elaborate.hpp"
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

}  // namespace

TEST_CASE("validate_compiled flags structural problems") {
    Backend b = line_backend(2, 2);
    SUBCASE("legal circuit is clean") {
        Circuit c("ok", 4);
        c.add(Gate::x(0));
        c.add(Gate::cz(0, 1));
        c.add(Gate::swap(1, 2));
        CompiledCircuit cc;
        cc.circuit = c;
        cc.routed = c;
        cc.initial_layout = identity_layout(4, 4);
        cc.final_layout = identity_layout(4, 4);
        CHECK(validate_compiled(cc, b).empty());
    }
    SUBCASE("cz on an inter link is rejected") {
        Circuit c("bad", 4);
        c.add(Gate::cz(1, 2));
        CompiledCircuit cc;
        cc.circuit = c;
        cc.initial_layout = identity_layout(4, 4);
        cc.final_layout = identity_layout(4, 4);
        CHECK(validate_compiled(cc, b).size() == 1);
    }
    SUBCASE("gates between unlinked qubits are rejected") {
        Circuit c("far", 4);
        c.add(Gate::cz(0, 3));
        CompiledCircuit cc;
        cc.circuit = c;
        cc.initial_layout = identity_layout(4, 4);
        cc.final_layout = identity_layout(4, 4);
        CHECK(validate_compiled(cc, b).size() == 1);
    }
    SUBCASE("non-basis single-qubit kinds are rejected") {
        Circuit c("h", 4);
        c.add(Gate::h(0));
        CompiledCircuit cc;
        cc.circuit = c;
        cc.initial_layout = identity_layout(4, 4);
        cc.final_layout = identity_layout(4, 4);
        CHECK(validate_compiled(cc, b).size() == 1);
    }
}

TEST_CASE("permutation folding detects corruption") {
    Backend b = generate_backend(2);
    Circuit c = ghz(20);
    CompiledCircuit cc = baseline_compile(c, b, 5);
    REQUIRE(permutation_equiv(c, cc));

    // Deleting one SWAP from the routed view corrupts the permutation.
    SUBCASE("dropped swap") {
        Circuit broken(cc.routed.name(), cc.routed.num_qubits());
        bool dropped = false;
        for (const auto& g : cc.routed.gates()) {
            if (!dropped && g.kind == GateKind::Swap) {
                dropped = true;
                continue;
            }
            broken.add(g);
        }
        REQUIRE(dropped);
        CompiledCircuit tampered = cc;
        tampered.routed = broken;
        std::string why;
        CHECK_FALSE(permutation_equiv(c, tampered, &why));
        CHECK_FALSE(why.empty());
    }
    SUBCASE("extra gate") {
        Circuit broken = cc.routed;
        broken.add(Gate::x(0));
        CompiledCircuit tampered = cc;
        tampered.routed = broken;
        CHECK_FALSE(permutation_equiv(c, tampered));
    }
}

TEST_CASE("identity compile on a toy backend passes the oracles") {
    Backend b = line_backend(1, 3);
    Circuit c("toy", 3);
    c.add(Gate::h(0));
    c.add(Gate::cx(0, 1));
    CompiledCircuit cc;
    cc.circuit = c;
    cc.routed = c;
    cc.initial_layout = identity_layout(3, 3);
    cc.final_layout = identity_layout(3, 3);
    CHECK(permutation_equiv(c, cc));
    CHECK(statevector_equiv(c, cc) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("statevector oracle certifies both pipelines at desk scale") {
    Backend b = generate_backend(2);
    SUBCASE("baseline ghz") {
        Circuit c = ghz(12);
        CompiledCircuit cc = baseline_compile(c, b, 3);
        CHECK(statevector_equiv(c, cc) >= 1.0 - 1e-9);
    }
    SUBCASE("seqc ghz") {
        Circuit c = ghz(12);
        SeqcResult result = seqc_compile(c, b, 3, 2);
        CHECK(statevector_equiv(c, result.compiled) >= 1.0 - 1e-9);
    }
}

TEST_CASE("statevector oracle notices a perturbed angle") {
    Backend b = generate_backend(2);
    Circuit c = tfim_sim(8, 1);
    CompiledCircuit cc = baseline_compile(c, b, 11);
    REQUIRE(statevector_equiv(c, cc) >= 1.0 - 1e-9);

    // Perturb the last Rz: it acts on the evolved (superposed) state, so the
    // extra rotation is not a global phase.
    int last_rz = -1;
    for (std::size_t i = 0; i < cc.circuit.size(); ++i) {
        if (cc.circuit.gates()[i].kind == GateKind::Rz) last_rz = static_cast<int>(i);
    }
    REQUIRE(last_rz >= 0);
    Circuit perturbed(cc.circuit.name(), cc.circuit.num_qubits());
    for (std::size_t i = 0; i < cc.circuit.size(); ++i) {
        Gate copy = cc.circuit.gates()[i];
        if (static_cast<int>(i) == last_rz) copy.param += 0.1;
        perturbed.add(copy);
    }
    CompiledCircuit tampered = cc;
    tampered.circuit = perturbed;
    CHECK(statevector_equiv(c, tampered) < 1.0 - 1e-4);
}

TEST_CASE("statevector oracle rejects non-unitary circuits and big actives") {
    Backend b = line_backend(1, 2);
    Circuit c("m", 2);
    c.add(Gate::measure(0));
    CompiledCircuit cc;
    cc.circuit = c;
    cc.initial_layout = identity_layout(2, 2);
    cc.final_layout = identity_layout(2, 2);
    CHECK_THROWS(statevector_equiv(c, cc));

    Backend big = generate_backend(2);
    Circuit wide = ghz(16);
    CompiledCircuit cw;
    cw.circuit = Circuit("wide", big.num_qubits());
    for (const auto& g : wide.gates()) cw.circuit.add(g);
    cw.routed = cw.circuit;
    cw.initial_layout = identity_layout(16, big.num_qubits());
    cw.final_layout = identity_layout(16, big.num_qubits());
    CHECK_THROWS(statevector_equiv(wide, cw));
}
