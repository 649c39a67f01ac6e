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

#include <vector>

#include "seqc/backend.hpp"
#include "seqc/circuit.hpp"
#include "seqc/unitary.hpp"

namespace seqc {

/// The disjoint device gate sets: {X, SX, Rz} plus CZ inside a chiplet, and
/// SWAP alone across chiplets.
struct BasisSet {
    std::vector<GateKind> intra_single{GateKind::X, GateKind::SX, GateKind::Rz};
    std::vector<GateKind> intra_two{GateKind::CZ};
    std::vector<GateKind> inter_two{GateKind::Swap};
};

/// Rewrites every gate into the device basis. Two-qubit gates must already
/// sit on links; SWAPs on inter links pass through untouched, SWAPs on intra
/// links decompose into three CX (each a CZ with single-qubit dressing).
/// Every rewrite is unitary-equal to its source up to global phase.
Circuit translate_basis(const Circuit& c, const Backend& b);

/// Fixpoint peephole optimization: adjacent self-inverse cancellation (X.X,
/// CZ.CZ, intra SWAP.SWAP), Rz merging and Rz(0) elimination, and Euler
/// resynthesis of maximal single-qubit runs. Never touches SWAPs on inter
/// links and never merges across Measure/Reset/Barrier. Gate count is
/// non-increasing and the pass is idempotent.
Circuit optimize(const Circuit& c, const Backend& b);

/// Shortest {Rz, SX, X} realization of a single-qubit unitary, up to global
/// phase. Zero-angle rotations are dropped.
std::vector<Gate> euler_synthesize(const Mat2& u, std::uint32_t qubit);

}  // namespace seqc
