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

#include <string>
#include <vector>

#include "seqc/backend.hpp"
#include "seqc/compiled.hpp"

namespace seqc {

/// Structural validity of the final circuit: two-qubit gates on existing
/// links, gate kinds allowed per link, single-qubit kinds in the device
/// basis, layouts injective. Returns diagnostics; empty means valid.
std::vector<std::string> validate_compiled(const CompiledCircuit& cc, const Backend& b);

/// Folds every SWAP in the routed view into a running permutation and
/// compares the residual per-logical-qubit gate sequences against the
/// original circuit's (whose own SWAPs, if any, fold the same way). Exact
/// up to the angle tolerance; scales to any size.
bool permutation_equiv(const Circuit& original, const CompiledCircuit& cc,
                       std::string* diagnostic = nullptr);

/// Desk-scale ground truth: |<psi_orig | P^dagger psi_cc>|^2 on the all-zeros
/// input, where P is the compiled circuit's net output permutation. Supports
/// unitary-only circuits with at most `kMaxActiveQubits` active qubits after
/// idle-qubit elision.
double statevector_equiv(const Circuit& original, const CompiledCircuit& cc);

inline constexpr int kMaxActiveQubits = 14;

}  // namespace seqc
