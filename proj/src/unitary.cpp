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

#include "seqc/unitary.hpp"

#include <cmath>
#include <stdexcept>

namespace seqc {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Mat2 Mat2::identity() {
    Mat2 u;
    u.at(0, 0) = 1.0;
    u.at(1, 1) = 1.0;
    return u;
}

Mat2 Mat2::operator*(const Mat2& rhs) const {
    Mat2 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            Complex sum = 0.0;
            for (int k = 0; k < 2; ++k) sum += at(r, k) * rhs.at(k, c);
            out.at(r, c) = sum;
        }
    }
    return out;
}

Mat4 Mat4::identity() {
    Mat4 u;
    for (int i = 0; i < 4; ++i) u.at(i, i) = 1.0;
    return u;
}

Mat4 Mat4::operator*(const Mat4& rhs) const {
    Mat4 out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            Complex sum = 0.0;
            for (int k = 0; k < 4; ++k) sum += at(r, k) * rhs.at(k, c);
            out.at(r, c) = sum;
        }
    }
    return out;
}

Mat2 mat_x() {
    Mat2 u;
    u.at(0, 1) = 1.0;
    u.at(1, 0) = 1.0;
    return u;
}

Mat2 mat_sx() {
    Mat2 u;
    u.at(0, 0) = Complex(0.5, 0.5);
    u.at(0, 1) = Complex(0.5, -0.5);
    u.at(1, 0) = Complex(0.5, -0.5);
    u.at(1, 1) = Complex(0.5, 0.5);
    return u;
}

Mat2 mat_h() {
    const double s = 1.0 / std::sqrt(2.0);
    Mat2 u;
    u.at(0, 0) = s;
    u.at(0, 1) = s;
    u.at(1, 0) = s;
    u.at(1, 1) = -s;
    return u;
}

Mat2 mat_rz(double theta) {
    Mat2 u;
    u.at(0, 0) = std::exp(-kI * (theta / 2.0));
    u.at(1, 1) = std::exp(kI * (theta / 2.0));
    return u;
}

Mat2 mat_ry(double theta) {
    Mat2 u;
    u.at(0, 0) = std::cos(theta / 2.0);
    u.at(0, 1) = -std::sin(theta / 2.0);
    u.at(1, 0) = std::sin(theta / 2.0);
    u.at(1, 1) = std::cos(theta / 2.0);
    return u;
}

Mat4 mat_cx() {
    Mat4 u;
    u.at(0, 0) = 1.0;
    u.at(1, 1) = 1.0;
    u.at(2, 3) = 1.0;
    u.at(3, 2) = 1.0;
    return u;
}

Mat4 mat_cz() {
    Mat4 u = Mat4::identity();
    u.at(3, 3) = -1.0;
    return u;
}

Mat4 mat_swap() {
    Mat4 u;
    u.at(0, 0) = 1.0;
    u.at(1, 2) = 1.0;
    u.at(2, 1) = 1.0;
    u.at(3, 3) = 1.0;
    return u;
}

Mat4 mat_rzz(double theta) {
    Mat4 u;
    Complex neg = std::exp(-kI * (theta / 2.0));
    Complex pos = std::exp(kI * (theta / 2.0));
    u.at(0, 0) = neg;
    u.at(1, 1) = pos;
    u.at(2, 2) = pos;
    u.at(3, 3) = neg;
    return u;
}

Mat2 gate_matrix_1q(const Gate& g) {
    switch (g.kind) {
        case GateKind::X: return mat_x();
        case GateKind::SX: return mat_sx();
        case GateKind::H: return mat_h();
        case GateKind::Rz: return mat_rz(g.param);
        case GateKind::Ry: return mat_ry(g.param);
        default: throw std::invalid_argument("gate has no single-qubit unitary");
    }
}

Mat4 gate_matrix_2q(const Gate& g) {
    switch (g.kind) {
        case GateKind::CX: return mat_cx();
        case GateKind::CZ: return mat_cz();
        case GateKind::Swap: return mat_swap();
        case GateKind::Rzz: return mat_rzz(g.param);
        default: throw std::invalid_argument("gate has no two-qubit unitary");
    }
}

Mat4 lift_first(const Mat2& u) {
    Mat4 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out.at(r * 2 + 0, c * 2 + 0) = u.at(r, c);
            out.at(r * 2 + 1, c * 2 + 1) = u.at(r, c);
        }
    }
    return out;
}

Mat4 lift_second(const Mat2& u) {
    Mat4 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out.at(r, c) = u.at(r, c);
            out.at(r + 2, c + 2) = u.at(r, c);
        }
    }
    return out;
}

namespace {

template <typename Mat, int N>
double phase_distance(const Mat& a, const Mat& b) {
    // Align the global phase on the largest entry of b, then compare.
    int best = 0;
    double best_mag = 0.0;
    for (int i = 0; i < N * N; ++i) {
        double mag = std::abs(b.m[i]);
        if (mag > best_mag) {
            best_mag = mag;
            best = i;
        }
    }
    if (best_mag < 1e-14) throw std::invalid_argument("zero matrix in phase comparison");
    Complex phase = a.m[best] / b.m[best];
    double norm = std::abs(phase);
    if (norm < 1e-14) return 1.0;
    phase /= norm;
    double worst = 0.0;
    for (int i = 0; i < N * N; ++i) {
        worst = std::max(worst, std::abs(a.m[i] - phase * b.m[i]));
    }
    return worst;
}

}  // namespace

double distance_up_to_phase(const Mat2& a, const Mat2& b) {
    return phase_distance<Mat2, 2>(a, b);
}

double distance_up_to_phase(const Mat4& a, const Mat4& b) {
    return phase_distance<Mat4, 4>(a, b);
}

Mat2 mat_u3(double theta, double phi, double lam) {
    Mat2 u;
    u.at(0, 0) = std::cos(theta / 2.0);
    u.at(0, 1) = -std::exp(kI * lam) * std::sin(theta / 2.0);
    u.at(1, 0) = std::exp(kI * phi) * std::sin(theta / 2.0);
    u.at(1, 1) = std::exp(kI * (phi + lam)) * std::cos(theta / 2.0);
    return u;
}

EulerAngles euler_angles(const Mat2& u) {
    double a00 = std::abs(u.at(0, 0));
    double a10 = std::abs(u.at(1, 0));
    double theta = 2.0 * std::atan2(a10, a00);
    constexpr double kEps = 1e-12;
    if (a10 < kEps) {
        // Diagonal: only phi + lam is determined.
        double sum = std::arg(u.at(1, 1)) - std::arg(u.at(0, 0));
        return {0.0, sum, 0.0};
    }
    if (a00 < kEps) {
        // Anti-diagonal: only phi - lam is determined.
        double diff = std::arg(u.at(1, 0)) - std::arg(-u.at(0, 1));
        return {M_PI, diff, 0.0};
    }
    double phi = std::arg(u.at(1, 0)) - std::arg(u.at(0, 0));
    double lam = std::arg(-u.at(0, 1)) - std::arg(u.at(0, 0));
    return {theta, phi, lam};
}

}  // namespace seqc
