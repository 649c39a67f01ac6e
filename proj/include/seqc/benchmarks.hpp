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

#include "seqc/circuit.hpp"

namespace seqc {

enum class BenchFamily : std::uint8_t { GHZ, BitCode, PhaseCode, VQE, HamiltonianSim };

std::string_view to_string(BenchFamily family);
BenchFamily bench_family_from_string(std::string_view name);

struct BenchSpec {
    BenchFamily family = BenchFamily::GHZ;
    int n = 1;
    std::uint64_t seed = 0;  // VQE only
    int rounds = 2;          // codes
    int layers = 2;          // VQE
    int steps = 1;           // Hamiltonian simulation
};

/// H on qubit 0 followed by a CX chain; depth and gate count are both n.
Circuit ghz(int n);

/// Repetition code over interleaved data (even) and ancilla (odd) qubits.
/// Data qubits are prepared in |1010...>; each round runs the parity checks
/// into the ancillas, measures and resets them; data is measured at the end.
Circuit bit_code(int n, int rounds = 2);

/// bit_code conjugated into the phase basis: data prepared by X then H, each
/// ancilla check wrapped in H, and a final H before the data measurement.
Circuit phase_code(int n, int rounds = 2);

/// Hardware-efficient ansatz: `layers` repetitions of an Ry layer plus a CX
/// ladder, then a closing Ry layer. Angles come from a SplitMix64 stream in
/// layer-major, qubit-minor order, uniform over [0, 2*pi).
Circuit vqe(int n, std::uint64_t seed, int layers = 2);

/// First-order Trotter circuit for the 1D transverse-field Ising model with
/// fixed angles (zz = -1.0, x = 1.0 rad). ZZ terms are emitted pre-decomposed
/// as CX-Rz-CX; the transverse term as H-Rz-H.
Circuit tfim_sim(int n, int steps = 1);

Circuit make_benchmark(const BenchSpec& spec);

}  // namespace seqc
