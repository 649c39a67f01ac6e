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

#include <complex>
#include <vector>

#include "seqc/backend.hpp"
#include "seqc/circuit.hpp"
#include "seqc/unitary.hpp"

namespace seqc::testing {

/// Line-topology toy device: `chiplets` chiplets of `per` qubits each,
/// qubits chained 0-1-2-..., with the chiplet-crossing edges as inter links.
inline Backend line_backend(int chiplets, int per) {
    Backend b;
    b.name = "line-c" + std::to_string(chiplets) + "-q" + std::to_string(per);
    b.grid = {1, chiplets};
    b.single_qubit_instrs[GateKind::X] = {25.0, 0.00109};
    b.single_qubit_instrs[GateKind::SX] = {25.0, 0.00109};
    b.single_qubit_instrs[GateKind::Rz] = {0.0, 0.0};
    b.single_qubit_instrs[GateKind::Measure] = {500.0, 0.00196};
    b.single_qubit_instrs[GateKind::Reset] = {500.0, 0.00186};
    b.intra_cz = {34.0, 0.00605};
    b.intra_swap = {175.6, 0.025575};
    b.inter_swap = {702.4, 0.1023};
    for (int c = 0; c < chiplets; ++c) {
        Chiplet chip;
        chip.id = c;
        chip.grid_pos = {0, c};
        for (int q = 0; q < per; ++q) {
            chip.qubits.push_back(static_cast<std::uint32_t>(c * per + q));
        }
        b.chiplets.push_back(chip);
    }
    int total = chiplets * per;
    for (int q = 0; q + 1 < total; ++q) {
        Link link;
        link.a = static_cast<std::uint32_t>(q);
        link.b = static_cast<std::uint32_t>(q + 1);
        bool crossing = (q + 1) % per == 0;
        link.scope = crossing ? LinkScope::Inter : LinkScope::Intra;
        link.duration_ns = crossing ? b.inter_swap.duration_ns : b.intra_cz.duration_ns;
        link.error = crossing ? b.inter_swap.error : b.intra_cz.error;
        b.links.push_back(link);
        if (crossing) {
            b.chiplets[q / per].halo.push_back(link.a);
            b.chiplets[q / per + 1].halo.push_back(link.b);
        }
    }
    b.finalize();
    return b;
}

/// Independent little simulator used as a test oracle: expands each gate to
/// a full 2^n matrix-vector product. Slow on purpose; keep n small.
class OracleSim {
public:
    explicit OracleSim(int n) : n_(n), amps_(std::size_t{1} << n) { amps_[0] = 1.0; }

    void apply(const Gate& g) {
        if (g.kind == GateKind::Barrier) return;
        std::vector<Complex> next(amps_.size(), Complex{0.0, 0.0});
        if (g.is_two_qubit()) {
            Mat4 u = gate_matrix_2q(g);
            for (std::size_t i = 0; i < amps_.size(); ++i) {
                int hi = static_cast<int>((i >> g.qubits[0]) & 1);
                int lo = static_cast<int>((i >> g.qubits[1]) & 1);
                int col = hi * 2 + lo;
                for (int row = 0; row < 4; ++row) {
                    std::size_t j = i;
                    j = (row & 2) ? (j | (std::size_t{1} << g.qubits[0]))
                                  : (j & ~(std::size_t{1} << g.qubits[0]));
                    j = (row & 1) ? (j | (std::size_t{1} << g.qubits[1]))
                                  : (j & ~(std::size_t{1} << g.qubits[1]));
                    next[j] += u.at(row, col) * amps_[i];
                }
            }
        } else {
            Mat2 u = gate_matrix_1q(g);
            for (std::size_t i = 0; i < amps_.size(); ++i) {
                int bit = static_cast<int>((i >> g.qubits[0]) & 1);
                for (int row = 0; row < 2; ++row) {
                    std::size_t j = row ? (i | (std::size_t{1} << g.qubits[0]))
                                        : (i & ~(std::size_t{1} << g.qubits[0]));
                    next[j] += u.at(row, bit) * amps_[i];
                }
            }
        }
        amps_ = std::move(next);
    }

    void run(const Circuit& c) {
        for (const Gate& g : c.gates()) apply(g);
    }

    Complex amplitude(std::size_t basis) const { return amps_[basis]; }
    int num_qubits() const { return n_; }

private:
    int n_;
    std::vector<Complex> amps_;
};

/// Unitary of a gate sequence over the ordered qubit pair (qa, qb), with qa
/// as the high matrix bit. Gates may touch qa, qb, or both.
inline Mat4 pair_unitary(const std::vector<Gate>& gates, std::uint32_t qa, std::uint32_t qb) {
    Mat4 u = Mat4::identity();
    for (const Gate& g : gates) {
        if (g.kind == GateKind::Barrier) continue;
        Mat4 step;
        if (g.is_two_qubit()) {
            if (g.qubits[0] == qa && g.qubits[1] == qb) {
                step = gate_matrix_2q(g);
            } else if (g.qubits[0] == qb && g.qubits[1] == qa) {
                step = mat_swap() * gate_matrix_2q(g) * mat_swap();
            } else {
                throw std::invalid_argument("gate outside the qubit pair");
            }
        } else if (g.qubits[0] == qa) {
            step = lift_first(gate_matrix_1q(g));
        } else if (g.qubits[0] == qb) {
            step = lift_second(gate_matrix_1q(g));
        } else {
            throw std::invalid_argument("gate outside the qubit pair");
        }
        u = step * u;
    }
    return u;
}

/// Unitary of a single-qubit gate sequence.
inline Mat2 single_unitary(const std::vector<Gate>& gates) {
    Mat2 u = Mat2::identity();
    for (const Gate& g : gates) u = gate_matrix_1q(g) * u;
    return u;
}

}  // namespace seqc::testing
