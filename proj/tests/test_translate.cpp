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

#include <cmath>

#include "seqc/rng.hpp"
#include "seqc/translate.hpp"
#include "test_helpers.hpp"

using namespace seqc;
using seqc::testing::line_backend;
using seqc::testing::pair_unitary;
using seqc::testing::single_unitary;

namespace {

constexpr double kTol = 1e-10;

/// Gates of `out` restricted to one qubit.
std::vector<Gate> gates_on(const Circuit& c, std::uint32_t q) {
    std::vector<Gate> result;
    for (const Gate& g : c.gates()) {
        if (g.qubits[0] == q && g.arity() == 1) result.push_back(g);
    }
    return result;
}

bool kinds_in_basis(const Circuit& c) {
    for (const Gate& g : c.gates()) {
        switch (g.kind) {
            case GateKind::X:
            case GateKind::SX:
            case GateKind::Rz:
            case GateKind::CZ:
            case GateKind::Swap:
            case GateKind::Measure:
            case GateKind::Reset:
            case GateKind::Barrier:
                break;
            default:
                return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("single-qubit translation rules are unitary-exact") {
    Backend b = line_backend(1, 2);
    SUBCASE("x and sx pass through") {
        Circuit c("t", 2);
        c.add(Gate::x(0));
        c.add(Gate::sx(0));
        Circuit out = translate_basis(c, b);
        REQUIRE(out.size() == 2);
        CHECK(out.gates()[0] == Gate::x(0));
        CHECK(out.gates()[1] == Gate::sx(0));
    }
    SUBCASE("h decomposes into rz sx rz") {
        Circuit c("t", 1);
        c.add(Gate::h(0));
        Circuit out = translate_basis(c, b);
        CHECK(out.size() == 3);
        CHECK(distance_up_to_phase(single_unitary(out.gates()), mat_h()) < kTol);
    }
    SUBCASE("ry decomposes into the euler form for many angles") {
        for (double theta : {0.0, 0.3, M_PI / 2, 1.7, M_PI, -2.4, 5.9, 2 * M_PI}) {
            CAPTURE(theta);
            Circuit c("t", 1);
            c.add(Gate::ry(theta, 0));
            Circuit out = translate_basis(c, b);
            Mat2 u = out.empty() ? Mat2::identity() : single_unitary(out.gates());
            CHECK(distance_up_to_phase(u, mat_ry(theta)) < kTol);
        }
    }
}

TEST_CASE("two-qubit translation rules are unitary-exact") {
    Backend b = line_backend(1, 2);
    SUBCASE("cx becomes one cz with dressing") {
        Circuit c("t", 2);
        c.add(Gate::cx(0, 1));
        Circuit out = translate_basis(c, b);
        int cz = 0;
        for (const auto& g : out.gates()) {
            if (g.kind == GateKind::CZ) ++cz;
        }
        CHECK(cz == 1);
        CHECK(distance_up_to_phase(pair_unitary(out.gates(), 0, 1), mat_cx()) < kTol);
    }
    SUBCASE("reversed cx") {
        Circuit c("t", 2);
        c.add(Gate::cx(1, 0));
        Circuit out = translate_basis(c, b);
        Mat4 want = mat_swap() * mat_cx() * mat_swap();
        CHECK(distance_up_to_phase(pair_unitary(out.gates(), 0, 1), want) < kTol);
    }
    SUBCASE("intra swap becomes three cz blocks") {
        Circuit c("t", 2);
        c.add(Gate::swap(0, 1));
        Circuit out = translate_basis(c, b);
        int cz = 0;
        for (const auto& g : out.gates()) {
            if (g.kind == GateKind::CZ) ++cz;
            CHECK(g.kind != GateKind::Swap);
        }
        CHECK(cz == 3);
        CHECK(distance_up_to_phase(pair_unitary(out.gates(), 0, 1), mat_swap()) < kTol);
    }
    SUBCASE("rzz sandwich") {
        for (double theta : {-1.0, 0.7, M_PI}) {
            Circuit c("t", 2);
            c.add(Gate::rzz(theta, 0, 1));
            Circuit out = translate_basis(c, b);
            CHECK(distance_up_to_phase(pair_unitary(out.gates(), 0, 1), mat_rzz(theta)) < kTol);
        }
    }
    SUBCASE("cz passes through") {
        Circuit c("t", 2);
        c.add(Gate::cz(0, 1));
        Circuit out = translate_basis(c, b);
        REQUIRE(out.size() == 1);
        CHECK(out.gates()[0] == Gate::cz(0, 1));
    }
}

TEST_CASE("inter swaps pass through untouched; other inter gates are rejected") {
    Backend b = line_backend(2, 2);  // inter link between 1 and 2
    Circuit c("t", 4);
    c.add(Gate::swap(1, 2));
    Circuit out = translate_basis(c, b);
    REQUIRE(out.size() == 1);
    CHECK(out.gates()[0] == Gate::swap(1, 2));

    Circuit bad("t", 4);
    bad.add(Gate::cx(1, 2));
    CHECK_THROWS(translate_basis(bad, b));
}

TEST_CASE("measure, reset and barrier pass through") {
    Backend b = line_backend(1, 2);
    Circuit c("t", 2);
    c.add(Gate::measure(0));
    c.add(Gate::reset(0));
    c.add(Gate::barrier(1));
    Circuit out = translate_basis(c, b);
    REQUIRE(out.size() == 3);
    CHECK(out.gates()[0].kind == GateKind::Measure);
    CHECK(out.gates()[1].kind == GateKind::Reset);
    CHECK(out.gates()[2].kind == GateKind::Barrier);
}

TEST_CASE("translation emits only device basis kinds") {
    Backend b = line_backend(1, 6);
    Circuit c("t", 6);
    c.add(Gate::h(0));
    c.add(Gate::ry(0.3, 1));
    c.add(Gate::cx(0, 1));
    c.add(Gate::rzz(0.5, 2, 3));
    c.add(Gate::swap(4, 5));
    c.add(Gate::measure(0));
    CHECK(kinds_in_basis(translate_basis(c, b)));
}

TEST_CASE("optimize cancels self-inverse pairs") {
    Backend b = line_backend(1, 3);
    SUBCASE("x x vanishes") {
        Circuit c("t", 1);
        c.add(Gate::x(0));
        c.add(Gate::x(0));
        CHECK(optimize(c, b).empty());
    }
    SUBCASE("cz cz vanishes regardless of operand order") {
        Circuit c("t", 2);
        c.add(Gate::cz(0, 1));
        c.add(Gate::cz(1, 0));
        CHECK(optimize(c, b).empty());
    }
    SUBCASE("intra swap swap vanishes") {
        Circuit c("t", 2);
        c.add(Gate::swap(0, 1));
        c.add(Gate::swap(0, 1));
        CHECK(optimize(c, b).empty());
    }
    SUBCASE("an intervening gate blocks cancellation") {
        Circuit c("t", 2);
        c.add(Gate::cz(0, 1));
        c.add(Gate::x(0));
        c.add(Gate::cz(0, 1));
        CHECK(optimize(c, b).size() == 3);
    }
}

TEST_CASE("optimize merges rotations and drops zero angles") {
    Backend b = line_backend(1, 2);
    Circuit c("t", 1);
    c.add(Gate::rz(0.3, 0));
    c.add(Gate::rz(0.5, 0));
    Circuit out = optimize(c, b);
    REQUIRE(out.size() == 1);
    CHECK(out.gates()[0].param == doctest::Approx(0.8).epsilon(1e-12));

    Circuit zero("t", 1);
    zero.add(Gate::rz(1.1, 0));
    zero.add(Gate::rz(-1.1 + 4 * M_PI, 0));
    CHECK(optimize(zero, b).empty());
}

TEST_CASE("optimize never touches inter swaps") {
    Backend b = line_backend(2, 2);
    Circuit c("t", 4);
    c.add(Gate::swap(1, 2));
    c.add(Gate::swap(1, 2));
    Circuit out = optimize(c, b);
    CHECK(out.size() == 2);  // pinned boundary SWAPs are retained
}

TEST_CASE("optimize consolidates single-qubit runs") {
    Backend b = line_backend(1, 2);
    Circuit c("t", 1);
    c.add(Gate::sx(0));
    c.add(Gate::sx(0));
    Circuit out = optimize(c, b);
    REQUIRE(out.size() == 1);
    CHECK(out.gates()[0] == Gate::x(0));

    // A long scramble still collapses to at most five basis gates.
    Circuit scramble("t", 1);
    SplitMix64 rng(9);
    for (int i = 0; i < 12; ++i) {
        int pick = static_cast<int>(rng.next_below(3));
        if (pick == 0) scramble.add(Gate::x(0));
        if (pick == 1) scramble.add(Gate::sx(0));
        if (pick == 2) scramble.add(Gate::rz(rng.next_double() * 6.28, 0));
    }
    Circuit collapsed = optimize(scramble, b);
    CHECK(collapsed.size() <= 5);
    CHECK(distance_up_to_phase(single_unitary(collapsed.gates()),
                               single_unitary(scramble.gates())) < 1e-9);
}

TEST_CASE("optimize respects measurement fences") {
    Backend b = line_backend(1, 2);
    Circuit c("t", 1);
    c.add(Gate::x(0));
    c.add(Gate::measure(0));
    c.add(Gate::x(0));
    CHECK(optimize(c, b).size() == 3);
}

TEST_CASE("optimize is idempotent and never grows circuits") {
    Backend b = line_backend(1, 8);
    SplitMix64 rng(1234);
    for (int round = 0; round < 50; ++round) {
        Circuit c("fuzz", 8);
        int len = 5 + static_cast<int>(rng.next_below(40));
        for (int i = 0; i < len; ++i) {
            std::uint32_t q = static_cast<std::uint32_t>(rng.next_below(8));
            switch (rng.next_below(6)) {
                case 0: c.add(Gate::x(q)); break;
                case 1: c.add(Gate::sx(q)); break;
                case 2: c.add(Gate::rz(rng.next_double() * 6.28 - 3.14, q)); break;
                case 3: {
                    std::uint32_t p = q == 7 ? 6 : q + 1;
                    c.add(Gate::cz(q, p));
                    break;
                }
                case 4: c.add(Gate::measure(q)); break;
                default: c.add(Gate::barrier(q)); break;
            }
        }
        Circuit once = optimize(c, b);
        Circuit twice = optimize(once, b);
        CHECK(gate_count(once) <= gate_count(c));
        CHECK(once.to_json_string() == twice.to_json_string());
    }
}

TEST_CASE("optimize preserves the state on fuzzed unitary circuits") {
    // Small-register fuzz: the optimized circuit must map a fixed entangled
    // input to the same state up to global phase.
    Backend b = line_backend(1, 3);
    SplitMix64 rng(777);
    for (int round = 0; round < 60; ++round) {
        Circuit c("fuzz", 3);
        c.add(Gate::h(0));  // decorrelate from |000>
        c.add(Gate::cx(0, 1));
        int len = 4 + static_cast<int>(rng.next_below(24));
        for (int i = 0; i < len; ++i) {
            std::uint32_t q = static_cast<std::uint32_t>(rng.next_below(3));
            switch (rng.next_below(5)) {
                case 0: c.add(Gate::x(q)); break;
                case 1: c.add(Gate::sx(q)); break;
                case 2: c.add(Gate::rz(rng.next_double() * 6.28 - 3.14, q)); break;
                case 3: {
                    std::uint32_t p = q == 2 ? 1 : q + 1;
                    c.add(Gate::cz(q, p));
                    break;
                }
                default: {
                    std::uint32_t p = q == 2 ? 1 : q + 1;
                    c.add(Gate::swap(q, p));
                    break;
                }
            }
        }
        Circuit opt = optimize(c, b);

        seqc::testing::OracleSim before(3), after(3);
        before.run(c);
        after.run(opt);
        Complex overlap = 0.0;
        for (std::size_t i = 0; i < 8; ++i) {
            overlap += std::conj(before.amplitude(i)) * after.amplitude(i);
        }
        CHECK(std::norm(overlap) == doctest::Approx(1.0).epsilon(1e-9));
    }
}
