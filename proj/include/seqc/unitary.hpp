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

#include <array>
#include <complex>
#include <cstdint>

#include "seqc/circuit.hpp"

namespace seqc {

using Complex = std::complex<double>;

/// Dense 2x2 unitary, row-major.
struct Mat2 {
    std::array<Complex, 4> m{};

    Complex& at(int r, int c) { return m[r * 2 + c]; }
    const Complex& at(int r, int c) const { return m[r * 2 + c]; }

    static Mat2 identity();
    Mat2 operator*(const Mat2& rhs) const;
};

/// Dense 4x4 unitary, row-major. Basis index = 2*q_first + q_second, i.e.
/// the first operand is the high bit.
struct Mat4 {
    std::array<Complex, 16> m{};

    Complex& at(int r, int c) { return m[r * 4 + c]; }
    const Complex& at(int r, int c) const { return m[r * 4 + c]; }

    static Mat4 identity();
    Mat4 operator*(const Mat4& rhs) const;
};

Mat2 mat_x();
Mat2 mat_sx();
Mat2 mat_h();
Mat2 mat_rz(double theta);
Mat2 mat_ry(double theta);
Mat4 mat_cx();
Mat4 mat_cz();
Mat4 mat_swap();
Mat4 mat_rzz(double theta);

/// 2x2 matrix of a single-qubit unitary gate kind.
Mat2 gate_matrix_1q(const Gate& g);
/// 4x4 matrix of a two-qubit gate in (first, second) operand order.
Mat4 gate_matrix_2q(const Gate& g);

/// Lifts a 2x2 matrix to 4x4 acting on the high (first) or low (second) bit.
Mat4 lift_first(const Mat2& u);
Mat4 lift_second(const Mat2& u);

/// Largest absolute deviation between a and e^{i phi} b over the optimal
/// global phase phi.
double distance_up_to_phase(const Mat2& a, const Mat2& b);
double distance_up_to_phase(const Mat4& a, const Mat4& b);

/// ZXZXZ Euler angles (theta, phi, lam) with U ~ Rz(phi+pi) SX Rz(theta+pi)
/// SX Rz(lam) up to global phase; equivalently U ~ U3(theta, phi, lam).
struct EulerAngles {
    double theta;
    double phi;
    double lam;
};

EulerAngles euler_angles(const Mat2& u);

/// Matrix of U3(theta, phi, lam).
Mat2 mat_u3(double theta, double phi, double lam);

}  // namespace seqc
