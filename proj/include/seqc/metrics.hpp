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

#include <optional>
#include <string>
#include <vector>

#include "seqc/backend.hpp"
#include "seqc/compiled.hpp"

namespace seqc {

struct MetricsReport {
    double esp = 1.0;
    double exec_time_ns = 0.0;
    int inter_chiplet_gates = 0;
    int depth = 0;
    int gate_count = 0;
    std::optional<double> stratify_time_s;
    std::optional<double> elaborate_time_s;
    std::optional<double> solve_time_s;

    std::string to_json_string(int indent = -1) const;
};

/// Estimated success probability: per touched qubit, the product of
/// (1 - error) over its gates; aggregated as the geometric mean over touched
/// qubits. With `with_decoherence`, each per-qubit term is additionally
/// damped by exp(-t/T1) * exp(-t/T2) over the qubit's busy span.
double esp(const CompiledCircuit& cc, const Backend& b, bool with_decoherence = false);

/// ASAP schedule length over the dependency graph with device durations.
/// Rz and Barrier contribute zero time.
double exec_time_ns(const CompiledCircuit& cc, const Backend& b);

/// Number of gates sitting on inter-chiplet links.
int inter_chiplet_gates(const CompiledCircuit& cc, const Backend& b);

/// Geometric mean of per-entry ratios metric/baseline. Baselines must be
/// positive.
double geomean_ratio(const std::vector<std::pair<double, double>>& suite);

MetricsReport compute_metrics(const CompiledCircuit& cc, const Backend& b);

}  // namespace seqc
