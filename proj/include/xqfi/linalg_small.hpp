// Copyright 2026 The xqfi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Fixed-size complex matrices for the 2x2 blocks and the dense 8x8 three-qubit
 * operator, a cyclic Jacobi eigensolver for Hermitian input, the PSD square
 * root built on it, and a central-difference helper.
 *
 * Nothing here is meant to scale; dimensions stay at or below 8.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>

#include "xqfi/error.hpp"

namespace xqfi {

using cplx = std::complex<double>;

template <std::size_t N>
class Matrix {
   public:
    static constexpr std::size_t dim = N;

    constexpr Matrix() = default;

    Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
        std::size_t i = 0;
        for (const auto &row : rows) {
            std::size_t j = 0;
            for (const auto &v : row) {
                (*this)(i, j++) = v;
            }
            ++i;
        }
    }

    static Matrix identity() {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix diagonal(const std::array<double, N> &d) {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
        return m;
    }

    cplx &operator()(std::size_t i, std::size_t j) { return a_[i * N + j]; }
    const cplx &operator()(std::size_t i, std::size_t j) const { return a_[i * N + j]; }

    Matrix adjoint() const {
        Matrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto &v : a_) m = std::max(m, std::abs(v));
        return m;
    }

    double frobenius() const {
        double s = 0.0;
        for (const auto &v : a_) s += std::norm(v);
        return std::sqrt(s);
    }

    Matrix &operator+=(const Matrix &o) {
        for (std::size_t k = 0; k < N * N; ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix &operator-=(const Matrix &o) {
        for (std::size_t k = 0; k < N * N; ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Matrix &operator*=(cplx s) {
        for (auto &v : a_) v *= s;
        return *this;
    }
    Matrix &operator/=(cplx s) {
        for (auto &v : a_) v /= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
    friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
    friend Matrix operator/(Matrix a, cplx s) { return a /= s; }

    // Zero entries of the left factor are skipped; Kraus products and
    // X-form states are mostly zeros.
    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        Matrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) continue;
                for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

   private:
    std::array<cplx, N * N> a_{};
};

template <std::size_t A, std::size_t B>
Matrix<A * B> kron(const Matrix<A> &x, const Matrix<B> &y) {
    Matrix<A * B> r;
    for (std::size_t i = 0; i < A; ++i)
        for (std::size_t j = 0; j < A; ++j) {
            const cplx xij = x(i, j);
            if (xij == cplx{}) continue;
            for (std::size_t k = 0; k < B; ++k)
                for (std::size_t l = 0; l < B; ++l) r(i * B + k, j * B + l) = xij * y(k, l);
        }
    return r;
}

/// Identity (k = 0) and the three Pauli matrices (k = 1, 2, 3).
inline Matrix<2> pauli(int k) {
    using namespace std::complex_literals;
    switch (k) {
        case 0: return {{1.0, 0.0}, {0.0, 1.0}};
        case 1: return {{0.0, 1.0}, {1.0, 0.0}};
        case 2: return {{0.0, -1i}, {1i, 0.0}};
        case 3: return {{1.0, 0.0}, {0.0, -1.0}};
        default: throw Error(ErrorKind::BadParameter, "pauli index out of range");
    }
}

template <std::size_t N>
double hermiticity_error(const Matrix<N> &m) {
    double e = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i; j < N; ++j) e = std::max(e, std::abs(m(i, j) - std::conj(m(j, i))));
    return e;
}

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kJacobiTolerance = 1e-14;
inline constexpr double kNegativeClamp = 1e-12;

template <std::size_t N>
struct EigenDecomposition {
    std::array<double, N> values{};  // ascending
    Matrix<N> vectors;               // column k pairs with values[k]

    Matrix<N> reconstruct() const {
        return vectors * Matrix<N>::diagonal(values) * vectors.adjoint();
    }
};

/// Cyclic complex Jacobi. Each rotation first removes the phase of the
/// pivot so the 2x2 subproblem is real symmetric.
template <std::size_t N>
EigenDecomposition<N> eigh(const Matrix<N> &h) {
    const double scale = std::max(1.0, h.max_abs());
    if (hermiticity_error(h) > kHermitianTolerance * scale) {
        throw Error(ErrorKind::NotHermitian,
                    "asymmetry " + std::to_string(hermiticity_error(h)) + " exceeds tolerance");
    }
    Matrix<N> a = (h + h.adjoint()) * 0.5;
    Matrix<N> v = Matrix<N>::identity();

    constexpr int kMaxSweeps = 64;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                if (i != j) off += std::norm(a(i, j));
        if (std::sqrt(off) <= kJacobiTolerance * scale) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const cplx phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // U = diag(1, conj(phase)) * [[c, s], [-s, c]]
                const cplx upp = c, upq = s;
                const cplx uqp = -s * std::conj(phase), uqq = c * std::conj(phase);

                for (std::size_t k = 0; k < N; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * upp + akq * uqp;
                    a(k, q) = akp * upq + akq * uqq;
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * upp + vkq * uqp;
                    v(k, q) = vkp * upq + vkq * uqq;
                }
                for (std::size_t k = 0; k < N; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }
    if (!converged) throw Error(ErrorKind::NoConvergence, "Jacobi sweeps exhausted");

    std::array<std::size_t, N> order;
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    EigenDecomposition<N> out;
    for (std::size_t k = 0; k < N; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < N; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

/// Eigenvalues in [-1e-12, 0) are clamped to zero; anything lower is
/// rejected as NotPSD.
template <std::size_t N>
Matrix<N> psd_sqrt(const Matrix<N> &h) {
    const auto eig = eigh(h);
    if (eig.values.front() < -kNegativeClamp) {
        throw Error(ErrorKind::NotPSD,
                    "eigenvalue " + std::to_string(eig.values.front()) + " below clamp window");
    }
    std::array<double, N> roots{};
    for (std::size_t k = 0; k < N; ++k) roots[k] = std::sqrt(std::max(0.0, eig.values[k]));
    return eig.vectors * Matrix<N>::diagonal(roots) * eig.vectors.adjoint();
}

inline double default_step(double x) { return 1e-6 * std::max(1.0, std::abs(x)); }

/// (f(x + h) - f(x - h)) / 2h for any f whose result supports subtraction
/// and scalar division.
template <class F>
auto central_diff(F &&f, double x, double h) {
    auto hi = f(x + h);
    auto lo = f(x - h);
    return (hi - lo) / (2.0 * h);
}

}  // namespace xqfi
