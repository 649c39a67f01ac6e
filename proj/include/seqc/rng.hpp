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
#include <vector>

namespace seqc {

/// SplitMix64 generator. Every random decision in the compiler flows through
/// this generator so that independent implementations can reproduce results
/// bit-for-bit from a seed (see README for the reference stream).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). Modulo reduction; the bias is irrelevant at
    /// the range sizes used here and keeps the stream portable.
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

/// Derives an independent child seed for a numbered subtask (annealing trial,
/// layout trial, chiplet worker). The constant is an arbitrary odd mixer; the
/// derivation is part of the reproducibility contract.
inline std::uint64_t child_seed(std::uint64_t parent, std::uint64_t index) {
    return SplitMix64(parent ^ (0xD1B54A32D192ED03ull * (index + 1))).next();
}

}  // namespace seqc
