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

#include "seqc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "seqc/unitary.hpp"

namespace seqc {

namespace {

bool layout_injective(const Layout& layout, std::string& problem) {
    std::set<int> seen;
    for (std::size_t l = 0; l < layout.num_logical(); ++l) {
        int p = layout.physical_of(static_cast<std::uint32_t>(l));
        if (p < 0) {
            problem = "logical qubit " + std::to_string(l) + " is unmapped";
            return false;
        }
        if (!seen.insert(p).second) {
            problem = "physical qubit " + std::to_string(p) + " is mapped twice";
            return false;
        }
    }
    return true;
}

bool is_basis_single(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::SX:
        case GateKind::Rz:
        case GateKind::Measure:
        case GateKind::Reset:
        case GateKind::Barrier:
            return true;
        default:
            return false;
    }
}

/// One step of a residual per-qubit trace: the gate kind, its angle, and for
/// two-qubit gates the logical partner and operand position.
struct TraceStep {
    GateKind kind;
    double param;
    int partner;  // -1 for single-qubit gates
    int role;

    bool matches(const TraceStep& other) const {
        return kind == other.kind && partner == other.partner && role == other.role &&
               std::abs(param - other.param) <= kAngleTolerance;
    }
};

/// Folds all SWAPs of `c` into a running permutation (seeded by `occupant`:
/// physical slot -> logical qubit) and returns the residual gate trace per
/// logical qubit.
std::vector<std::vector<TraceStep>> fold_traces(const Circuit& c, std::vector<int> occupant,
                                                std::uint32_t num_logical, bool* ok,
                                                std::string* diagnostic) {
    std::vector<std::vector<TraceStep>> traces(num_logical);
    *ok = true;
    for (std::size_t gi = 0; gi < c.size(); ++gi) {
        const Gate& g = c.gates()[gi];
        if (g.kind == GateKind::Swap) {
            std::swap(occupant[g.qubits[0]], occupant[g.qubits[1]]);
            continue;
        }
        int la = occupant[g.qubits[0]];
        int lb = g.is_two_qubit() ? occupant[g.qubits[1]] : -1;
        if (la < 0 || (g.is_two_qubit() && lb < 0)) {
            if (diagnostic) {
                std::ostringstream msg;
                msg << "gate " << gi << " (" << to_string(g.kind)
                    << ") touches a qubit holding no logical state";
                *diagnostic = msg.str();
            }
            *ok = false;
            return traces;
        }
        double param = g.has_param() ? g.param : 0.0;
        traces[la].push_back({g.kind, param, lb, 0});
        if (g.is_two_qubit()) traces[lb].push_back({g.kind, param, la, 1});
    }
    return traces;
}

}  // namespace

std::vector<std::string> validate_compiled(const CompiledCircuit& cc, const Backend& b) {
    std::vector<std::string> diagnostics;
    for (std::size_t gi = 0; gi < cc.circuit.size(); ++gi) {
        const Gate& g = cc.circuit.gates()[gi];
        if (g.is_two_qubit()) {
            int li = b.link_between(g.qubits[0], g.qubits[1]);
            if (li < 0) {
                diagnostics.push_back("gate " + std::to_string(gi) + " (" +
                                      std::string(to_string(g.kind)) + ") between " +
                                      std::to_string(g.qubits[0]) + " and " +
                                      std::to_string(g.qubits[1]) + " is off every link");
                continue;
            }
            if (!b.links[li].allows(g.kind)) {
                diagnostics.push_back("gate " + std::to_string(gi) + " (" +
                                      std::string(to_string(g.kind)) +
                                      ") is not allowed on its link");
            }
        } else if (!is_basis_single(g.kind)) {
            diagnostics.push_back("gate " + std::to_string(gi) + " (" +
                                  std::string(to_string(g.kind)) +
                                  ") is outside the device basis");
        }
    }
    std::string problem;
    if (!layout_injective(cc.initial_layout, problem)) {
        diagnostics.push_back("initial layout: " + problem);
    }
    if (!layout_injective(cc.final_layout, problem)) {
        diagnostics.push_back("final layout: " + problem);
    }
    return diagnostics;
}

bool permutation_equiv(const Circuit& original, const CompiledCircuit& cc,
                       std::string* diagnostic) {
    const std::uint32_t n = original.num_qubits();
    if (cc.initial_layout.num_logical() != n) {
        if (diagnostic) *diagnostic = "layout qubit count differs from the original circuit";
        return false;
    }

    bool ok = false;
    std::vector<int> identity(n);
    for (std::uint32_t q = 0; q < n; ++q) identity[q] = static_cast<int>(q);
    auto want = fold_traces(original, identity, n, &ok, diagnostic);
    if (!ok) return false;

    std::vector<int> occupant(cc.routed.num_qubits(), -1);
    for (std::uint32_t l = 0; l < n; ++l) {
        occupant[cc.initial_layout.physical_of(l)] = static_cast<int>(l);
    }
    auto got = fold_traces(cc.routed, std::move(occupant), n, &ok, diagnostic);
    if (!ok) return false;

    for (std::uint32_t q = 0; q < n; ++q) {
        if (want[q].size() != got[q].size()) {
            if (diagnostic) {
                *diagnostic = "qubit " + std::to_string(q) + ": expected " +
                              std::to_string(want[q].size()) + " residual gates, found " +
                              std::to_string(got[q].size());
            }
            return false;
        }
        for (std::size_t i = 0; i < want[q].size(); ++i) {
            if (!want[q][i].matches(got[q][i])) {
                if (diagnostic) {
                    *diagnostic = "qubit " + std::to_string(q) + ": residual gate " +
                                  std::to_string(i) + " differs (" +
                                  std::string(to_string(got[q][i].kind)) + " vs " +
                                  std::string(to_string(want[q][i].kind)) + ")";
                }
                return false;
            }
        }
    }
    return true;
}

namespace {

/// Fixed-width register used for the reference circuit.
class Statevector {
public:
    explicit Statevector(int num_qubits) : amps_(std::size_t{1} << num_qubits) {
        amps_[0] = 1.0;
    }

    void apply1(const Mat2& u, int q) {
        const std::size_t mask = std::size_t{1} << q;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (i & mask) continue;
            Complex a0 = amps_[i];
            Complex a1 = amps_[i | mask];
            amps_[i] = u.at(0, 0) * a0 + u.at(0, 1) * a1;
            amps_[i | mask] = u.at(1, 0) * a0 + u.at(1, 1) * a1;
        }
    }

    /// Applies a 4x4 unitary with `high` as the high bit of the matrix index.
    void apply2(const Mat4& u, int high, int low) {
        const std::size_t mh = std::size_t{1} << high;
        const std::size_t ml = std::size_t{1} << low;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & mh) || (i & ml)) continue;
            std::size_t idx[4] = {i, i | ml, i | mh, i | mh | ml};
            Complex in[4];
            for (int k = 0; k < 4; ++k) in[k] = amps_[idx[k]];
            for (int r = 0; r < 4; ++r) {
                Complex sum = 0.0;
                for (int k = 0; k < 4; ++k) sum += u.at(r, k) * in[k];
                amps_[idx[r]] = sum;
            }
        }
    }

    std::vector<Complex>& amplitudes() { return amps_; }
    const std::vector<Complex>& amplitudes() const { return amps_; }

private:
    std::vector<Complex> amps_;
};

/// Register over the compiled circuit's wires with idle-qubit elision: wires
/// enter the register only when a non-SWAP gate touches them; SWAP gates are
/// exact wire relabelings (junk wires always hold |0>), and wires that have
/// verifiably returned to |0> are retired when space is needed.
class ElidedStatevector {
public:
    ElidedStatevector(std::size_t num_wires, int max_slots)
        : max_slots_(max_slots), slot_of_(num_wires, -1), amps_(1, Complex{1.0, 0.0}) {}

    void apply_gate(const Gate& g) {
        if (g.kind == GateKind::Barrier) return;
        if (g.kind == GateKind::Measure || g.kind == GateKind::Reset) {
            throw std::invalid_argument("statevector oracle supports unitary circuits only");
        }
        if (g.kind == GateKind::Swap) {
            int sa = slot_of_[g.qubits[0]];
            int sb = slot_of_[g.qubits[1]];
            std::swap(slot_of_[g.qubits[0]], slot_of_[g.qubits[1]]);
            if (sa >= 0) wire_of_[sa] = g.qubits[1];
            if (sb >= 0) wire_of_[sb] = g.qubits[0];
            return;
        }
        if (g.is_two_qubit()) {
            ensure_capacity(g.qubits[0], g.qubits[1]);
            apply2(gate_matrix_2q(g), slot(g.qubits[0]), slot(g.qubits[1]));
        } else {
            ensure_capacity(g.qubits[0], g.qubits[0]);
            apply1(gate_matrix_1q(g), slot(g.qubits[0]));
        }
    }

    /// Slot of a wire, or -1 when the wire provably holds |0>.
    int slot_or_zero(std::uint32_t wire) const { return slot_of_[wire]; }
    int num_slots() const { return static_cast<int>(wire_of_.size()); }
    const std::vector<Complex>& amplitudes() const { return amps_; }

private:
    /// Retires stale slots up front so that materializing the given wires
    /// cannot shuffle slot numbers mid-gate.
    void ensure_capacity(std::uint32_t a, std::uint32_t b) {
        int missing = (slot_of_[a] < 0 ? 1 : 0) + (a != b && slot_of_[b] < 0 ? 1 : 0);
        if (num_slots() + missing > max_slots_) {
            retire_zero_slots();
            missing = (slot_of_[a] < 0 ? 1 : 0) + (a != b && slot_of_[b] < 0 ? 1 : 0);
            if (num_slots() + missing > max_slots_) {
                throw std::invalid_argument("too many active qubits for the statevector oracle");
            }
        }
    }

    int slot(std::uint32_t wire) {
        if (slot_of_[wire] >= 0) return slot_of_[wire];
        // Materialize in |0>: amplitudes double with the new bit clear.
        slot_of_[wire] = num_slots();
        wire_of_.push_back(wire);
        amps_.resize(amps_.size() * 2, Complex{0.0, 0.0});
        return slot_of_[wire];
    }

    /// Drops every slot whose |1> mass is numerically zero.
    void retire_zero_slots() {
        for (int s = num_slots() - 1; s >= 0; --s) {
            const std::size_t mask = std::size_t{1} << s;
            double mass = 0.0;
            for (std::size_t i = 0; i < amps_.size(); ++i) {
                if (i & mask) mass += std::norm(amps_[i]);
            }
            if (mass > 1e-18) continue;
            std::vector<Complex> next(amps_.size() / 2);
            for (std::size_t i = 0; i < amps_.size(); ++i) {
                if (i & mask) continue;
                next[(i & (mask - 1)) | ((i >> 1) & ~(mask - 1))] = amps_[i];
            }
            amps_ = std::move(next);
            slot_of_[wire_of_[s]] = -1;
            wire_of_.erase(wire_of_.begin() + s);
            for (std::size_t w = 0; w < slot_of_.size(); ++w) {
                if (slot_of_[w] > s) --slot_of_[w];
            }
        }
    }

    void apply1(const Mat2& u, int q) {
        const std::size_t mask = std::size_t{1} << q;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (i & mask) continue;
            Complex a0 = amps_[i];
            Complex a1 = amps_[i | mask];
            amps_[i] = u.at(0, 0) * a0 + u.at(0, 1) * a1;
            amps_[i | mask] = u.at(1, 0) * a0 + u.at(1, 1) * a1;
        }
    }

    void apply2(const Mat4& u, int high, int low) {
        const std::size_t mh = std::size_t{1} << high;
        const std::size_t ml = std::size_t{1} << low;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & mh) || (i & ml)) continue;
            std::size_t idx[4] = {i, i | ml, i | mh, i | mh | ml};
            Complex in[4];
            for (int k = 0; k < 4; ++k) in[k] = amps_[idx[k]];
            for (int r = 0; r < 4; ++r) {
                Complex sum = 0.0;
                for (int k = 0; k < 4; ++k) sum += u.at(r, k) * in[k];
                amps_[idx[r]] = sum;
            }
        }
    }

    int max_slots_;
    std::vector<int> slot_of_;            // wire -> slot, -1 = |0>
    std::vector<std::uint32_t> wire_of_;  // slot -> wire
    std::vector<Complex> amps_;
};

}  // namespace

double statevector_equiv(const Circuit& original, const CompiledCircuit& cc) {
    const std::uint32_t n = original.num_qubits();
    if (n > static_cast<std::uint32_t>(kMaxActiveQubits)) {
        throw std::invalid_argument("too many active qubits for the statevector oracle");
    }

    ElidedStatevector compiled(cc.circuit.num_qubits(), kMaxActiveQubits);
    for (const Gate& g : cc.circuit.gates()) compiled.apply_gate(g);

    Statevector reference(static_cast<int>(n));
    for (const Gate& g : original.gates()) {
        if (g.kind == GateKind::Barrier) continue;
        if (g.kind == GateKind::Measure || g.kind == GateKind::Reset) {
            throw std::invalid_argument("statevector oracle supports unitary circuits only");
        }
        if (g.is_two_qubit()) {
            reference.apply2(gate_matrix_2q(g), static_cast<int>(g.qubits[0]),
                             static_cast<int>(g.qubits[1]));
        } else {
            reference.apply1(gate_matrix_1q(g), static_cast<int>(g.qubits[0]));
        }
    }

    // Undo the output permutation: logical qubit l sits on the wire named by
    // the final layout. Wires without a register slot provably hold |0>.
    std::vector<int> out_slot(n);
    std::size_t logical_mask = 0;
    for (std::uint32_t l = 0; l < n; ++l) {
        int phys = cc.final_layout.physical_of(l);
        if (phys < 0) throw std::invalid_argument("final layout is incomplete");
        out_slot[l] = compiled.slot_or_zero(static_cast<std::uint32_t>(phys));
        if (out_slot[l] >= 0) logical_mask |= std::size_t{1} << out_slot[l];
    }

    Complex overlap = 0.0;
    const auto& amps = compiled.amplitudes();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        if ((idx & ~logical_mask) != 0) continue;  // junk slots must stay |0>
        std::size_t j = 0;
        for (std::uint32_t l = 0; l < n; ++l) {
            if (out_slot[l] >= 0 && (idx & (std::size_t{1} << out_slot[l]))) {
                j |= std::size_t{1} << l;
            }
        }
        overlap += std::conj(reference.amplitudes()[j]) * amps[idx];
    }
    return std::norm(overlap);
}

}  // namespace seqc
