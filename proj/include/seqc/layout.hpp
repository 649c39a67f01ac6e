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
#include <stdexcept>
#include <vector>

namespace seqc {

/// Injective map from logical qubits to physical qubits, with the inverse
/// view maintained alongside. Unused physical slots map to no logical qubit.
class Layout {
public:
    Layout() = default;
    Layout(std::size_t num_logical, std::size_t num_physical)
        : log_to_phys_(num_logical, -1), phys_to_log_(num_physical, -1) {}

    std::size_t num_logical() const { return log_to_phys_.size(); }
    std::size_t num_physical() const { return phys_to_log_.size(); }

    void assign(std::uint32_t logical, std::uint32_t physical) {
        if (log_to_phys_.at(logical) != -1 || phys_to_log_.at(physical) != -1) {
            throw std::invalid_argument("layout slot already occupied");
        }
        log_to_phys_[logical] = static_cast<int>(physical);
        phys_to_log_[physical] = static_cast<int>(logical);
    }

    int physical_of(std::uint32_t logical) const { return log_to_phys_.at(logical); }
    int logical_at(std::uint32_t physical) const { return phys_to_log_.at(physical); }
    bool is_mapped(std::uint32_t logical) const { return log_to_phys_.at(logical) != -1; }
    bool is_occupied(std::uint32_t physical) const { return phys_to_log_.at(physical) != -1; }

    /// Hands a physical slot over to a new logical qubit, unmapping whoever
    /// held it. Used when an inter-chiplet SWAP event trades qubit states
    /// across a link.
    void replace_occupant(std::uint32_t physical, std::uint32_t new_logical) {
        int old = phys_to_log_.at(physical);
        if (old != -1) log_to_phys_[old] = -1;
        if (log_to_phys_.at(new_logical) != -1) {
            throw std::invalid_argument("incoming qubit is already mapped");
        }
        phys_to_log_[physical] = static_cast<int>(new_logical);
        log_to_phys_[new_logical] = static_cast<int>(physical);
    }

    /// Exchanges the occupants of two physical slots (either may be empty).
    void swap_physical(std::uint32_t p, std::uint32_t q) {
        int lp = phys_to_log_.at(p);
        int lq = phys_to_log_.at(q);
        phys_to_log_[p] = lq;
        phys_to_log_[q] = lp;
        if (lp != -1) log_to_phys_[lp] = static_cast<int>(q);
        if (lq != -1) log_to_phys_[lq] = static_cast<int>(p);
    }

    const std::vector<int>& log_to_phys() const { return log_to_phys_; }

    bool operator==(const Layout& other) const = default;

private:
    std::vector<int> log_to_phys_;
    std::vector<int> phys_to_log_;
};

}  // namespace seqc
