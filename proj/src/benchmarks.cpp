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

#include "seqc/benchmarks.hpp"

#include <cmath>
#include <stdexcept>

#include "seqc/rng.hpp"

namespace seqc {

namespace {

constexpr double kTfimZzAngle = -1.0;
constexpr double kTfimXAngle = 1.0;

void barrier_row(Circuit& c) {
    for (std::uint32_t q = 0; q < c.num_qubits(); ++q) c.add(Gate::barrier(q));
}

/// Shared skeleton of the two codes; `phase` adds the basis conjugation.
Circuit code_circuit(int n, int rounds, bool phase) {
    if (n < 3) throw std::invalid_argument("code benchmarks need at least 3 qubits");
    if (rounds < 1) throw std::invalid_argument("code benchmarks need at least 1 round");
    const int num_data = (n + 1) / 2;     // data at even indices
    const int num_ancilla = n - num_data; // ancilla at odd indices
    Circuit c(phase ? "phasecode" : "bitcode", static_cast<std::uint32_t>(n));

    // Prepare |1010...> over the data register.
    for (int j = 0; j < num_data; j += 2) c.add(Gate::x(static_cast<std::uint32_t>(2 * j)));
    if (phase) {
        for (int j = 0; j < num_data; ++j) c.add(Gate::h(static_cast<std::uint32_t>(2 * j)));
    }

    for (int round = 0; round < rounds; ++round) {
        for (int i = 0; i < num_ancilla; ++i) {
            std::uint32_t ancilla = static_cast<std::uint32_t>(2 * i + 1);
            if (phase) c.add(Gate::h(ancilla));
            c.add(Gate::cx(static_cast<std::uint32_t>(2 * i), ancilla));
            if (2 * i + 2 < n) c.add(Gate::cx(static_cast<std::uint32_t>(2 * i + 2), ancilla));
            if (phase) c.add(Gate::h(ancilla));
        }
        for (int i = 0; i < num_ancilla; ++i) {
            std::uint32_t ancilla = static_cast<std::uint32_t>(2 * i + 1);
            c.add(Gate::measure(ancilla));
            c.add(Gate::reset(ancilla));
        }
        barrier_row(c);
    }

    for (int j = 0; j < num_data; ++j) {
        std::uint32_t data = static_cast<std::uint32_t>(2 * j);
        if (phase) c.add(Gate::h(data));
        c.add(Gate::measure(data));
    }
    return c;
}

}  // namespace

std::string_view to_string(BenchFamily family) {
    switch (family) {
        case BenchFamily::GHZ: return "ghz";
        case BenchFamily::BitCode: return "bitcode";
        case BenchFamily::PhaseCode: return "phasecode";
        case BenchFamily::VQE: return "vqe";
        case BenchFamily::HamiltonianSim: return "tfim";
    }
    throw std::logic_error("unknown benchmark family");
}

BenchFamily bench_family_from_string(std::string_view name) {
    for (auto family : {BenchFamily::GHZ, BenchFamily::BitCode, BenchFamily::PhaseCode,
                        BenchFamily::VQE, BenchFamily::HamiltonianSim}) {
        if (to_string(family) == name) return family;
    }
    throw std::invalid_argument("unknown benchmark family: " + std::string(name));
}

Circuit ghz(int n) {
    if (n < 1) throw std::invalid_argument("ghz needs at least 1 qubit");
    Circuit c("ghz", static_cast<std::uint32_t>(n));
    c.add(Gate::h(0));
    for (int i = 0; i + 1 < n; ++i) {
        c.add(Gate::cx(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + 1)));
    }
    return c;
}

Circuit bit_code(int n, int rounds) { return code_circuit(n, rounds, false); }

Circuit phase_code(int n, int rounds) { return code_circuit(n, rounds, true); }

Circuit vqe(int n, std::uint64_t seed, int layers) {
    if (n < 2) throw std::invalid_argument("vqe needs at least 2 qubits");
    if (layers < 0) throw std::invalid_argument("vqe layer count must be non-negative");
    Circuit c("vqe", static_cast<std::uint32_t>(n));
    SplitMix64 rng(seed);
    auto ry_layer = [&] {
        for (int q = 0; q < n; ++q) {
            c.add(Gate::ry(2.0 * M_PI * rng.next_double(), static_cast<std::uint32_t>(q)));
        }
    };
    for (int layer = 0; layer < layers; ++layer) {
        ry_layer();
        for (int i = 0; i + 1 < n; ++i) {
            c.add(Gate::cx(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + 1)));
        }
    }
    ry_layer();
    return c;
}

Circuit tfim_sim(int n, int steps) {
    if (n < 2) throw std::invalid_argument("tfim needs at least 2 qubits");
    if (steps < 0) throw std::invalid_argument("tfim step count must be non-negative");
    Circuit c("tfim", static_cast<std::uint32_t>(n));
    for (int step = 0; step < steps; ++step) {
        for (int i = 0; i + 1 < n; ++i) {
            auto a = static_cast<std::uint32_t>(i);
            auto b = static_cast<std::uint32_t>(i + 1);
            c.add(Gate::cx(a, b));
            c.add(Gate::rz(kTfimZzAngle, b));
            c.add(Gate::cx(a, b));
        }
        for (int q = 0; q < n; ++q) {
            auto qq = static_cast<std::uint32_t>(q);
            c.add(Gate::h(qq));
            c.add(Gate::rz(kTfimXAngle, qq));
            c.add(Gate::h(qq));
        }
    }
    return c;
}

Circuit make_benchmark(const BenchSpec& spec) {
    switch (spec.family) {
        case BenchFamily::GHZ: return ghz(spec.n);
        case BenchFamily::BitCode: return bit_code(spec.n, spec.rounds);
        case BenchFamily::PhaseCode: return phase_code(spec.n, spec.rounds);
        case BenchFamily::VQE: return vqe(spec.n, spec.seed, spec.layers);
        case BenchFamily::HamiltonianSim: return tfim_sim(spec.n, spec.steps);
    }
    throw std::logic_error("unknown benchmark family");
}

}  // namespace seqc
