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
 * Three-qubit X-states in their three equivalent coordinate systems:
 *
 *  - compact entries (8 populations, 4 anti-diagonal coherences),
 *  - the real 4x4x4 Fano-Bloch correlation tensor T_abc = Tr(rho s_a s_b s_c),
 *  - per-block Bloch 4-vectors w^j = (w_0, w_1, w_2, w_3).
 *
 * Basis index i encodes |b2 b1 b0> with qubit A as the most significant bit.
 * Block j (0-based) pairs |j> with its bit complement |7 - j>, so the blocks
 * are {000,111}, {001,110}, {010,101}, {011,100}. Inside a block the first
 * basis vector is |j>, and
 *
 *     rho_block = (w_0 I + w_1 X + w_2 Y + w_3 Z) / 2,
 *
 * which fixes w_1 - i w_2 = 2 rho(j, 7 - j).
 */

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "xqfi/error.hpp"
#include "xqfi/linalg_small.hpp"

namespace xqfi {

inline constexpr std::size_t kBlockCount = 4;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-12;
inline constexpr double kXPatternTolerance = 1e-10;

constexpr std::size_t block_upper(std::size_t j) { return j; }
constexpr std::size_t block_lower(std::size_t j) { return 7 - j; }

/// Raw X-pattern entries with no invariants attached. Doubles as the
/// tangent type for parameter derivatives.
struct XEntries {
    std::array<double, 8> diag{};
    std::array<cplx, 4> anti{};  // anti[j] = rho(j, 7 - j)

    XEntries &operator+=(const XEntries &o) {
        for (std::size_t i = 0; i < 8; ++i) diag[i] += o.diag[i];
        for (std::size_t j = 0; j < 4; ++j) anti[j] += o.anti[j];
        return *this;
    }
    XEntries &operator-=(const XEntries &o) {
        for (std::size_t i = 0; i < 8; ++i) diag[i] -= o.diag[i];
        for (std::size_t j = 0; j < 4; ++j) anti[j] -= o.anti[j];
        return *this;
    }
    XEntries &operator*=(double s) {
        for (auto &d : diag) d *= s;
        for (auto &c : anti) c *= s;
        return *this;
    }
    friend XEntries operator+(XEntries a, const XEntries &b) { return a += b; }
    friend XEntries operator-(XEntries a, const XEntries &b) { return a -= b; }
    friend XEntries operator*(XEntries a, double s) { return a *= s; }
    friend XEntries operator*(double s, XEntries a) { return a *= s; }
    friend XEntries operator/(XEntries a, double s) { return a *= 1.0 / s; }
};

/// A validated X-state: unit trace, non-negative populations, and every
/// 2x2 block positive semidefinite.
class XState {
   public:
    static XState from_entries(const XEntries &e) {
        double trace = 0.0;
        for (std::size_t i = 0; i < 8; ++i) {
            if (!std::isfinite(e.diag[i])) throw Error(ErrorKind::BadParameter, "non-finite population");
            if (e.diag[i] < -kPsdTolerance) {
                throw Error(ErrorKind::BlockNotPSD, "negative population at index " + std::to_string(i));
            }
            trace += e.diag[i];
        }
        if (std::abs(trace - 1.0) > kTraceTolerance) {
            throw Error(ErrorKind::TraceViolation, "trace " + std::to_string(trace));
        }
        for (std::size_t j = 0; j < kBlockCount; ++j) {
            const double det = e.diag[block_upper(j)] * e.diag[block_lower(j)] - std::norm(e.anti[j]);
            if (!std::isfinite(det)) throw Error(ErrorKind::BadParameter, "non-finite coherence");
            if (det < -kPsdTolerance) {
                throw Error(ErrorKind::BlockNotPSD, "block " + std::to_string(j + 1) + " has negative determinant");
            }
        }
        return XState(e);
    }

    const XEntries &entries() const { return e_; }
    double population(std::size_t i) const { return e_.diag[i]; }
    cplx coherence(std::size_t j) const { return e_.anti[j]; }

   private:
    explicit XState(const XEntries &e) : e_(e) {}
    XEntries e_;
};

inline Matrix<8> to_dense(const XEntries &e) {
    Matrix<8> m;
    for (std::size_t i = 0; i < 8; ++i) m(i, i) = e.diag[i];
    for (std::size_t j = 0; j < kBlockCount; ++j) {
        m(block_upper(j), block_lower(j)) = e.anti[j];
        m(block_lower(j), block_upper(j)) = std::conj(e.anti[j]);
    }
    return m;
}

inline Matrix<8> to_dense(const XState &s) { return to_dense(s.entries()); }

/// Reads the X-pattern entries of any 8x8 matrix without validation.
inline XEntries x_entries_of(const Matrix<8> &m) {
    XEntries e;
    for (std::size_t i = 0; i < 8; ++i) e.diag[i] = m(i, i).real();
    for (std::size_t j = 0; j < kBlockCount; ++j) e.anti[j] = m(block_upper(j), block_lower(j));
    return e;
}

inline bool in_x_pattern(std::size_t i, std::size_t k) { return i == k || i + k == 7; }

/// Compacts a dense 8x8 matrix, rejecting anything outside the X pattern.
inline XState validate_xstate(const Matrix<8> &dense) {
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t k = 0; k < 8; ++k)
            if (!in_x_pattern(i, k) && std::abs(dense(i, k)) > kXPatternTolerance) {
                throw Error(ErrorKind::NotXForm,
                            "entry (" + std::to_string(i) + "," + std::to_string(k) + ") is off the X pattern");
            }
    XEntries e;
    for (std::size_t i = 0; i < 8; ++i) {
        if (std::abs(dense(i, i).imag()) > kXPatternTolerance) {
            throw Error(ErrorKind::NotHermitian, "complex diagonal entry");
        }
        e.diag[i] = dense(i, i).real();
    }
    for (std::size_t j = 0; j < kBlockCount; ++j) {
        const cplx upper = dense(block_upper(j), block_lower(j));
        const cplx lower = dense(block_lower(j), block_upper(j));
        if (std::abs(upper - std::conj(lower)) > kXPatternTolerance) {
            throw Error(ErrorKind::NotHermitian, "coherence partners disagree in block " + std::to_string(j + 1));
        }
        e.anti[j] = 0.5 * (upper + std::conj(lower));
    }
    return XState::from_entries(e);
}

struct CorrelationTensor {
    std::array<double, 64> t{};

    double &operator()(int a, int b, int c) { return t[static_cast<std::size_t>(16 * a + 4 * b + c)]; }
    double operator()(int a, int b, int c) const { return t[static_cast<std::size_t>(16 * a + 4 * b + c)]; }
};

namespace detail {

inline const std::array<Matrix<2>, 4> &paulis() {
    static const std::array<Matrix<2>, 4> p{pauli(0), pauli(1), pauli(2), pauli(3)};
    return p;
}

// <row| s_a (x) s_b (x) s_c |col>
inline cplx pauli_product_entry(int a, int b, int c, std::size_t row, std::size_t col) {
    const auto &p = paulis();
    return p[a]((row >> 2) & 1, (col >> 2) & 1) * p[b]((row >> 1) & 1, (col >> 1) & 1) *
           p[c](row & 1, col & 1);
}

}  // namespace detail

/// T_abc = Tr(rho s_a s_b s_c), summed over the 16 X-pattern entries only.
inline CorrelationTensor correlation_tensor(const XEntries &e) {
    const Matrix<8> rho = to_dense(e);
    CorrelationTensor out;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                cplx acc = 0.0;
                for (std::size_t i = 0; i < 8; ++i) {
                    acc += rho(i, i) * detail::pauli_product_entry(a, b, c, i, i);
                    acc += rho(i, 7 - i) * detail::pauli_product_entry(a, b, c, 7 - i, i);
                }
                out(a, b, c) = acc.real();
            }
    return out;
}

inline CorrelationTensor correlation_tensor(const XState &s) { return correlation_tensor(s.entries()); }

/// rho = (1/8) sum_abc T_abc s_a s_b s_c
inline Matrix<8> dense_from_tensor(const CorrelationTensor &t) {
    const auto &p = detail::paulis();
    Matrix<8> rho;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                const double v = t(a, b, c);
                if (v == 0.0) continue;
                rho += kron(kron(p[a], p[b]), p[c]) * (v / 8.0);
            }
    return rho;
}

using Bloch4 = std::array<double, 4>;

/// Four blocks, each a 4-vector (w_0, w_1, w_2, w_3). Carries no invariants
/// so the same type holds states, tangents, and damped coordinates.
struct BlockBloch {
    std::array<Bloch4, 4> w{};

    Bloch4 &operator[](std::size_t j) { return w[j]; }
    const Bloch4 &operator[](std::size_t j) const { return w[j]; }
};

namespace detail {

struct TensorTerm {
    int sign;
    int a, b, c;
};

// w^j_alpha = (1/4) sum sign * T_abc. The generators are I, X, Y, Z in each
// block's (|j>, |7-j>) basis; every row below equals Tr(block_j s_alpha).
inline constexpr TensorTerm kBlochTerms[4][4][4] = {
    {
        {{+1, 0, 0, 0}, {+1, 0, 3, 3}, {+1, 3, 0, 3}, {+1, 3, 3, 0}},
        {{+1, 1, 1, 1}, {-1, 1, 2, 2}, {-1, 2, 1, 2}, {-1, 2, 2, 1}},
        {{+1, 1, 1, 2}, {+1, 1, 2, 1}, {+1, 2, 1, 1}, {-1, 2, 2, 2}},
        {{+1, 0, 0, 3}, {+1, 0, 3, 0}, {+1, 3, 0, 0}, {+1, 3, 3, 3}},
    },
    {
        {{+1, 0, 0, 0}, {-1, 0, 3, 3}, {-1, 3, 0, 3}, {+1, 3, 3, 0}},
        {{+1, 1, 1, 1}, {+1, 1, 2, 2}, {+1, 2, 1, 2}, {-1, 2, 2, 1}},
        {{-1, 1, 1, 2}, {+1, 1, 2, 1}, {+1, 2, 1, 1}, {+1, 2, 2, 2}},
        {{-1, 0, 0, 3}, {+1, 0, 3, 0}, {+1, 3, 0, 0}, {-1, 3, 3, 3}},
    },
    {
        {{+1, 0, 0, 0}, {-1, 0, 3, 3}, {+1, 3, 0, 3}, {-1, 3, 3, 0}},
        {{+1, 1, 1, 1}, {+1, 1, 2, 2}, {-1, 2, 1, 2}, {+1, 2, 2, 1}},
        {{+1, 1, 1, 2}, {-1, 1, 2, 1}, {+1, 2, 1, 1}, {+1, 2, 2, 2}},
        {{+1, 0, 0, 3}, {-1, 0, 3, 0}, {+1, 3, 0, 0}, {-1, 3, 3, 3}},
    },
    {
        {{+1, 0, 0, 0}, {+1, 0, 3, 3}, {-1, 3, 0, 3}, {-1, 3, 3, 0}},
        {{+1, 1, 1, 1}, {-1, 1, 2, 2}, {+1, 2, 1, 2}, {+1, 2, 2, 1}},
        {{-1, 1, 1, 2}, {-1, 1, 2, 1}, {+1, 2, 1, 1}, {-1, 2, 2, 2}},
        {{-1, 0, 0, 3}, {-1, 0, 3, 0}, {+1, 3, 0, 0}, {+1, 3, 3, 3}},
    },
};

}  // namespace detail

inline BlockBloch bloch_from_tensor(const CorrelationTensor &t) {
    BlockBloch out;
    for (std::size_t j = 0; j < kBlockCount; ++j)
        for (std::size_t alpha = 0; alpha < 4; ++alpha) {
            double acc = 0.0;
            for (const auto &term : detail::kBlochTerms[j][alpha]) acc += term.sign * t(term.a, term.b, term.c);
            out[j][alpha] = 0.25 * acc;
        }
    return out;
}

/// Block coordinates through the correlation tensor. Linear, so it maps
/// tangents as well as states.
inline BlockBloch block_bloch(const XEntries &e) { return bloch_from_tensor(correlation_tensor(e)); }
inline BlockBloch block_bloch(const XState &s) { return block_bloch(s.entries()); }

/// (w_0 I + w_1 X + w_2 Y + w_3 Z) / 2 in the block basis.
inline Matrix<2> block_matrix(const Bloch4 &w) {
    const auto &p = detail::paulis();
    Matrix<2> m;
    for (std::size_t a = 0; a < 4; ++a) m += p[a] * (0.5 * w[a]);
    return m;
}

inline std::array<Matrix<2>, 4> block_decompose(const XState &s) {
    const auto &e = s.entries();
    std::array<Matrix<2>, 4> blocks;
    for (std::size_t j = 0; j < kBlockCount; ++j) {
        blocks[j](0, 0) = e.diag[block_upper(j)];
        blocks[j](1, 1) = e.diag[block_lower(j)];
        blocks[j](0, 1) = e.anti[j];
        blocks[j](1, 0) = std::conj(e.anti[j]);
    }
    return blocks;
}

/// Linear inverse of block_bloch with no validation.
inline XEntries entries_from_bloch(const BlockBloch &w) {
    XEntries e;
    for (std::size_t j = 0; j < kBlockCount; ++j) {
        e.diag[block_upper(j)] = 0.5 * (w[j][0] + w[j][3]);
        e.diag[block_lower(j)] = 0.5 * (w[j][0] - w[j][3]);
        e.anti[j] = 0.5 * cplx(w[j][1], -w[j][2]);
    }
    return e;
}

inline XState xstate_from_bloch(const BlockBloch &w) {
    for (std::size_t j = 0; j < kBlockCount; ++j) {
        const double r2 = w[j][1] * w[j][1] + w[j][2] * w[j][2] + w[j][3] * w[j][3];
        if (w[j][0] < -kPsdTolerance || w[j][0] * w[j][0] < r2 - kPsdTolerance) {
            throw Error(ErrorKind::BlockNotPSD, "block " + std::to_string(j + 1) + " outside the Bloch cone");
        }
    }
    return XState::from_entries(entries_from_bloch(w));
}

}  // namespace xqfi
