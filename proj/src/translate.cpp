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

#include "seqc/translate.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace seqc {

namespace {

double wrap_angle(double theta) {
    theta = std::fmod(theta, 2.0 * M_PI);
    if (theta > M_PI) theta -= 2.0 * M_PI;
    if (theta <= -M_PI) theta += 2.0 * M_PI;
    return theta;
}

bool is_zero_angle(double theta) { return std::abs(wrap_angle(theta)) < kAngleTolerance; }

void emit_h(Circuit& out, std::uint32_t q) {
    out.add(Gate::rz(M_PI / 2.0, q));
    out.add(Gate::sx(q));
    out.add(Gate::rz(M_PI / 2.0, q));
}

void emit_cx(Circuit& out, std::uint32_t control, std::uint32_t target) {
    emit_h(out, target);
    out.add(Gate::cz(control, target));
    emit_h(out, target);
}

bool scope_is_inter(const Backend& b, const Gate& g) {
    int link = b.link_between(g.qubits[0], g.qubits[1]);
    if (link < 0) throw std::invalid_argument("two-qubit gate off any link");
    return b.links[link].scope == LinkScope::Inter;
}

}  // namespace

std::vector<Gate> euler_synthesize(const Mat2& u, std::uint32_t qubit) {
    const auto [theta, phi, lam] = euler_angles(u);
    std::vector<Gate> out;
    auto push_rz = [&](double angle) {
        if (!is_zero_angle(angle)) out.push_back(Gate::rz(wrap_angle(angle), qubit));
    };
    constexpr double kThetaTol = 1e-9;
    if (std::abs(theta) < kThetaTol) {
        push_rz(phi + lam);
    } else if (std::abs(theta - M_PI / 2.0) < kThetaTol) {
        // U3(pi/2, phi, lam) ~ Rz(phi+pi/2) SX Rz(lam-pi/2)
        push_rz(lam - M_PI / 2.0);
        out.push_back(Gate::sx(qubit));
        push_rz(phi + M_PI / 2.0);
    } else if (std::abs(theta - M_PI) < kThetaTol) {
        // U3(pi, phi, lam) ~ Rz(phi+pi) X Rz(lam)
        push_rz(lam);
        out.push_back(Gate::x(qubit));
        push_rz(phi + M_PI);
    } else {
        // U3(theta, phi, lam) ~ Rz(phi+pi) SX Rz(theta+pi) SX Rz(lam)
        push_rz(lam);
        out.push_back(Gate::sx(qubit));
        out.push_back(Gate::rz(wrap_angle(theta + M_PI), qubit));
        out.push_back(Gate::sx(qubit));
        push_rz(phi + M_PI);
    }
    return out;
}

Circuit translate_basis(const Circuit& c, const Backend& b) {
    Circuit out(c.name(), c.num_qubits());
    out.reserve(c.size() * 2);
    for (const Gate& g : c.gates()) {
        switch (g.kind) {
            case GateKind::X:
            case GateKind::SX:
            case GateKind::Measure:
            case GateKind::Reset:
            case GateKind::Barrier:
                out.add(g);
                break;
            case GateKind::Rz:
                if (!is_zero_angle(g.param)) out.add(g);
                break;
            case GateKind::H:
                emit_h(out, g.qubits[0]);
                break;
            case GateKind::Ry:
                for (const Gate& eg : euler_synthesize(mat_ry(g.param), g.qubits[0])) out.add(eg);
                break;
            case GateKind::CZ:
                if (scope_is_inter(b, g)) {
                    throw std::invalid_argument("CZ on an inter-chiplet link");
                }
                out.add(g);
                break;
            case GateKind::CX:
                if (scope_is_inter(b, g)) {
                    throw std::invalid_argument("CX on an inter-chiplet link");
                }
                emit_cx(out, g.qubits[0], g.qubits[1]);
                break;
            case GateKind::Rzz:
                if (scope_is_inter(b, g)) {
                    throw std::invalid_argument("Rzz on an inter-chiplet link");
                }
                emit_cx(out, g.qubits[0], g.qubits[1]);
                if (!is_zero_angle(g.param)) out.add(Gate::rz(wrap_angle(g.param), g.qubits[1]));
                emit_cx(out, g.qubits[0], g.qubits[1]);
                break;
            case GateKind::Swap:
                if (scope_is_inter(b, g)) {
                    out.add(g);  // pinned inter-chiplet SWAP
                } else {
                    emit_cx(out, g.qubits[0], g.qubits[1]);
                    emit_cx(out, g.qubits[1], g.qubits[0]);
                    emit_cx(out, g.qubits[0], g.qubits[1]);
                }
                break;
        }
    }
    return out;
}

namespace {

bool is_run_kind(GateKind kind) {
    return kind == GateKind::X || kind == GateKind::SX || kind == GateKind::Rz;
}

/// One sweep of cancellation and Rz merging. Returns true if anything changed.
bool cancel_and_merge(std::vector<Gate>& gates, const Backend& b) {
    bool changed = false;
    std::vector<bool> dead(gates.size(), false);
    // Per-qubit stacks of live gate indices, so deleting a pair re-exposes
    // what came before it.
    std::vector<std::vector<std::size_t>> stack(
        [&] {
            std::uint32_t max_q = 0;
            for (const auto& g : gates) {
                for (int k = 0; k < g.arity(); ++k) max_q = std::max(max_q, g.qubits[k]);
            }
            return gates.empty() ? std::size_t{0} : static_cast<std::size_t>(max_q) + 1;
        }());

    auto top = [&](std::uint32_t q) -> int {
        auto& s = stack[q];
        while (!s.empty() && dead[s.back()]) s.pop_back();
        return s.empty() ? -1 : static_cast<int>(s.back());
    };

    for (std::size_t i = 0; i < gates.size(); ++i) {
        Gate& g = gates[i];
        if (g.kind == GateKind::Barrier || g.kind == GateKind::Measure ||
            g.kind == GateKind::Reset) {
            stack[g.qubits[0]].push_back(i);  // fence
            continue;
        }
        if (!g.is_two_qubit()) {
            int prev = top(g.qubits[0]);
            if (prev >= 0 && !gates[prev].is_two_qubit()) {
                Gate& p = gates[prev];
                if (g.kind == GateKind::X && p.kind == GateKind::X) {
                    dead[i] = dead[prev] = true;
                    changed = true;
                    continue;
                }
                if (g.kind == GateKind::Rz && p.kind == GateKind::Rz) {
                    p.param = wrap_angle(p.param + g.param);
                    dead[i] = true;
                    if (is_zero_angle(p.param)) dead[prev] = true;
                    changed = true;
                    continue;
                }
            }
            if (g.kind == GateKind::Rz && is_zero_angle(g.param)) {
                dead[i] = true;
                changed = true;
                continue;
            }
            stack[g.qubits[0]].push_back(i);
            continue;
        }
        // Two-qubit gate. Inter-chiplet SWAPs are pinned fences.
        bool inter = g.kind == GateKind::Swap && scope_is_inter(b, g);
        if (!inter && (g.kind == GateKind::CZ || g.kind == GateKind::Swap)) {
            int pa = top(g.qubits[0]);
            int pb = top(g.qubits[1]);
            if (pa >= 0 && pa == pb && gates[pa].kind == g.kind) {
                const Gate& p = gates[pa];
                bool same_pair = (p.qubits[0] == g.qubits[0] && p.qubits[1] == g.qubits[1]) ||
                                 (p.qubits[0] == g.qubits[1] && p.qubits[1] == g.qubits[0]);
                bool prev_inter = p.kind == GateKind::Swap && scope_is_inter(b, p);
                if (same_pair && !prev_inter) {
                    dead[i] = dead[pa] = true;
                    changed = true;
                    continue;
                }
            }
        }
        stack[g.qubits[0]].push_back(i);
        stack[g.qubits[1]].push_back(i);
    }

    if (changed) {
        std::vector<Gate> kept;
        kept.reserve(gates.size());
        for (std::size_t i = 0; i < gates.size(); ++i) {
            if (!dead[i]) kept.push_back(gates[i]);
        }
        gates = std::move(kept);
    }
    return changed;
}

/// Replaces maximal single-qubit {X, SX, Rz} runs with a shorter Euler form
/// when one exists. Returns true if anything changed.
bool consolidate_runs(std::vector<Gate>& gates) {
    std::uint32_t max_q = 0;
    for (const auto& g : gates) {
        for (int k = 0; k < g.arity(); ++k) max_q = std::max(max_q, g.qubits[k]);
    }
    std::size_t num_q = gates.empty() ? 0 : static_cast<std::size_t>(max_q) + 1;

    // run_id per gate, -1 for gates outside any run.
    std::vector<int> run_of(gates.size(), -1);
    std::vector<std::vector<std::size_t>> runs;
    std::vector<int> open_run(num_q, -1);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        if (g.arity() == 1 && is_run_kind(g.kind)) {
            std::uint32_t q = g.qubits[0];
            if (open_run[q] < 0) {
                open_run[q] = static_cast<int>(runs.size());
                runs.emplace_back();
            }
            run_of[i] = open_run[q];
            runs[open_run[q]].push_back(i);
        } else {
            for (int k = 0; k < g.arity(); ++k) open_run[g.qubits[k]] = -1;
        }
    }

    std::vector<std::optional<std::vector<Gate>>> replacement(runs.size());
    bool changed = false;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        if (runs[r].size() < 2) continue;
        Mat2 u = Mat2::identity();
        for (std::size_t idx : runs[r]) u = gate_matrix_1q(gates[idx]) * u;
        auto synth = euler_synthesize(u, gates[runs[r].front()].qubits[0]);
        if (synth.size() < runs[r].size()) {
            replacement[r] = std::move(synth);
            changed = true;
        }
    }
    if (!changed) return false;

    std::vector<Gate> out;
    out.reserve(gates.size());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        int r = run_of[i];
        if (r >= 0 && replacement[r].has_value()) {
            if (i == runs[r].front()) {
                for (const Gate& g : *replacement[r]) out.push_back(g);
            }
            continue;  // drop original run members
        }
        out.push_back(gates[i]);
    }
    gates = std::move(out);
    return true;
}

}  // namespace

Circuit optimize(const Circuit& c, const Backend& b) {
    std::vector<Gate> gates = c.gates();
    bool changed = true;
    while (changed) {
        changed = cancel_and_merge(gates, b);
        changed = consolidate_runs(gates) || changed;
    }
    Circuit out(c.name(), c.num_qubits());
    out.reserve(gates.size());
    for (const Gate& g : gates) out.add(g);
    return out;
}

}  // namespace seqc
