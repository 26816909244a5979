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
 * Block closed forms for quantum Fisher information and skew information,
 * plus the GHZ-class X concurrence.
 *
 * An X-state is a direct sum of four 2x2 blocks, so both metrics are sums of
 * per-block values. A block with Bloch coordinates w and derivative dw is
 *
 *     rho = (w_0 I + w.sigma) / 2,    d rho = (dw_0 I + dw.sigma) / 2,
 *
 * and everything below is written through the Minkowski form
 * <a, b> = a_0 b_0 - a_1 b_1 - a_2 b_2 - a_3 b_3. A block is "mixed" when
 * <w, w> is strictly positive, "pure" when it vanishes (rank one).
 *
 * Skew information uses the normalization I = 4 Tr[(d sqrt(rho))^2].
 * This is eight times the common -1/2 Tr[sqrt(rho), K]^2 convention for a
 * unitary family generated by K.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "xqfi/error.hpp"
#include "xqfi/family.hpp"
#include "xqfi/linalg_small.hpp"
#include "xqfi/xstate.hpp"

namespace xqfi {

/// Relative purity threshold: a block counts as pure when
/// <w, w> <= kSingularThreshold * w_0^2.
inline constexpr double kSingularThreshold = 1e-10;
/// Blocks with w_0 at or below this carry no support and contribute zero.
inline constexpr double kEmptyBlock = 1e-12;

struct MinkowskiMetric {
    static constexpr std::array<double, 4> diagonal{1.0, -1.0, -1.0, -1.0};

    static constexpr double inner(const Bloch4 &a, const Bloch4 &b) {
        return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
    }
};

inline double transverse_dot(const Bloch4 &a, const Bloch4 &b) { return a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

enum class BlockRegime { Empty, Mixed, Pure, Invalid };

inline BlockRegime classify_block(const Bloch4 &w) {
    if (w[0] <= kEmptyBlock) return w[0] < -kPsdTolerance ? BlockRegime::Invalid : BlockRegime::Empty;
    const double norm = MinkowskiMetric::inner(w, w);
    const double eps = kSingularThreshold * w[0] * w[0];
    if (norm > eps) return BlockRegime::Mixed;
    if (norm >= -eps) return BlockRegime::Pure;
    return BlockRegime::Invalid;
}

// ---------------------------------------------------------------------------
// Quantum Fisher information
// ---------------------------------------------------------------------------

/// (dw_0)^2 / w_0 + [<w, dw>^2 / <w, w> - <dw, dw>] / w_0
inline double qfi_block_mixed(const Bloch4 &w, const Bloch4 &dw) {
    if (classify_block(w) != BlockRegime::Mixed) {
        throw Error(ErrorKind::SingularBlock, "Minkowski norm of block at or below threshold");
    }
    const double norm = MinkowskiMetric::inner(w, w);
    const double cross = MinkowskiMetric::inner(w, dw);
    return dw[0] * dw[0] / w[0] + (cross * cross / norm - MinkowskiMetric::inner(dw, dw)) / w[0];
}

struct PureBlockQfi {
    /// w_0^2 + |w|^2, a formula with no derivative in it. Kept for reporting.
    double printed = 0.0;
    /// Tr(d rho L) with L = 2 d rho; only meaningful for a unit-trace block.
    double sld_pure = 0.0;
    /// Support-restricted spectral value; this is what the totals use.
    double rank_aware = 0.0;
};

/// For rho = c |psi><psi| the support-restricted QFI is
/// (dc)^2 / c + 4 |<psi| d rho |psi_perp>|^2 / c, with c = w_0,
/// dc = (dw_0 + n.dw) / 2 and n = w / |w|.
inline PureBlockQfi qfi_block_pure(const Bloch4 &w, const Bloch4 &dw) {
    const auto regime = classify_block(w);
    if (regime != BlockRegime::Pure && regime != BlockRegime::Empty) {
        throw Error(ErrorKind::NotPure, "block has <w, w> away from zero");
    }
    PureBlockQfi out;
    out.printed = w[0] * w[0] + transverse_dot(w, w);
    out.sld_pure = dw[0] * dw[0] + transverse_dot(dw, dw);
    if (regime == BlockRegime::Empty) return out;

    const double length = std::sqrt(transverse_dot(w, w));
    const double along = transverse_dot(w, dw) / length;
    const double dc = 0.5 * (dw[0] + along);
    const double perp2 = std::max(0.0, transverse_dot(dw, dw) - along * along);
    out.rank_aware = dc * dc / w[0] + perp2 / w[0];
    return out;
}

/// L = p_0 I + p.sigma in the block basis, with
/// p_0 = <w, dw> / <w, w> and p_i = (dw_i - p_0 w_i) / w_0.
inline Matrix<2> sld_block(const Bloch4 &w, const Bloch4 &dw) {
    if (classify_block(w) != BlockRegime::Mixed) {
        throw Error(ErrorKind::SingularBlock, "SLD closed form needs a mixed block");
    }
    const double p0 = MinkowskiMetric::inner(w, dw) / MinkowskiMetric::inner(w, w);
    Bloch4 coeffs{p0, 0.0, 0.0, 0.0};
    for (std::size_t i = 1; i < 4; ++i) coeffs[i] = (dw[i] - p0 * w[i]) / w[0];
    // block_matrix halves its argument.
    for (auto &c : coeffs) c *= 2.0;
    return block_matrix(coeffs);
}

/// Spectral QFI on one 2x2 block, dropping pairs whose eigenvalue sum is
/// below 1e-12. Used only when neither closed form applies.
inline double qfi_block_spectral(const Bloch4 &w, const Bloch4 &dw) {
    const auto eig = eigh(block_matrix(w));
    const Matrix<2> rotated = eig.vectors.adjoint() * block_matrix(dw) * eig.vectors;
    double f = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k) {
            const double denom = eig.values[i] + eig.values[k];
            if (denom > 1e-12) f += 2.0 * std::norm(rotated(i, k)) / denom;
        }
    return f;
}

inline double qfi_block(const Bloch4 &w, const Bloch4 &dw) {
    switch (classify_block(w)) {
        case BlockRegime::Empty: return 0.0;
        case BlockRegime::Mixed: return qfi_block_mixed(w, dw);
        case BlockRegime::Pure: return qfi_block_pure(w, dw).rank_aware;
        case BlockRegime::Invalid: break;
    }
    return qfi_block_spectral(w, dw);
}

inline double qfi_from_bloch(const BlockBloch &w, const BlockBloch &dw) {
    double f = 0.0;
    for (std::size_t j = 0; j < kBlockCount; ++j) f += qfi_block(w[j], dw[j]);
    return f;
}

inline double qfi_total(const ParamFamily &family, double phi) {
    return qfi_from_bloch(block_bloch(family.at(phi)), block_bloch(family.derivative(phi)));
}

// ---------------------------------------------------------------------------
// Skew information
// ---------------------------------------------------------------------------

/// With r = sqrt(<w, w>) and k = w_0 + r:
/// lambda = k^{-1/2}, sigma = r^{-1} k^{-1/2}, gamma = r^{-1} k^{-3/2}.
struct SkewIntermediates {
    double r = 0.0;
    double k = 0.0;
    double sigma = 0.0;
    double lambda = 0.0;
    double gamma = 0.0;
};

inline SkewIntermediates skew_intermediates(const Bloch4 &w) {
    SkewIntermediates s;
    s.r = std::sqrt(MinkowskiMetric::inner(w, w));
    s.k = w[0] + s.r;
    s.lambda = 1.0 / std::sqrt(s.k);
    s.sigma = s.lambda / s.r;
    s.gamma = s.lambda * s.lambda * s.lambda / s.r;
    return s;
}

/// sqrt(rho_block) = d_0 I + d.sigma with d_0 = sqrt(k) / 2 and
/// d_i = w_i / (2 sqrt(k)); the block skew information is
/// 8 [(d d_0)^2 + |d d|^2].
inline double skew_block_mixed(const Bloch4 &w, const Bloch4 &dw) {
    if (classify_block(w) != BlockRegime::Mixed) {
        throw Error(ErrorKind::SingularBlock, "skew closed form diverges on a pure block");
    }
    const auto s = skew_intermediates(w);
    const double sqrt_k = std::sqrt(s.k);
    const double wdw = transverse_dot(w, dw);
    const double dd0 = (sqrt_k * dw[0] - wdw / sqrt_k) / (4.0 * s.r);
    double sum = dd0 * dd0;
    for (std::size_t i = 1; i < 4; ++i) {
        const double ddi = -0.25 * s.sigma * w[i] * dw[0] + 0.5 * s.lambda * dw[i] + 0.25 * s.gamma * w[i] * wdw;
        sum += ddi * ddi;
    }
    return 8.0 * sum;
}

/// Pure-block limit: sqrt(rho) = sqrt(c) P, giving (dc)^2 / c + 2 |dw_perp|^2 / c.
/// Reduces to 4 Tr[(d rho)^2] for a unit-trace block.
inline double skew_block_pure(const Bloch4 &w, const Bloch4 &dw) {
    const auto regime = classify_block(w);
    if (regime == BlockRegime::Empty) return 0.0;
    if (regime != BlockRegime::Pure) throw Error(ErrorKind::NotPure, "block has <w, w> away from zero");
    const double length = std::sqrt(transverse_dot(w, w));
    const double along = transverse_dot(w, dw) / length;
    const double dc = 0.5 * (dw[0] + along);
    const double perp2 = std::max(0.0, transverse_dot(dw, dw) - along * along);
    return dc * dc / w[0] + 2.0 * perp2 / w[0];
}

inline double skew_block(const Bloch4 &w, const Bloch4 &dw) {
    switch (classify_block(w)) {
        case BlockRegime::Empty: return 0.0;
        case BlockRegime::Mixed: return skew_block_mixed(w, dw);
        case BlockRegime::Pure: return skew_block_pure(w, dw);
        case BlockRegime::Invalid: break;
    }
    throw Error(ErrorKind::SingularBlock, "block lies outside the Bloch cone");
}

inline double skew_from_bloch(const BlockBloch &w, const BlockBloch &dw) {
    double total = 0.0;
    for (std::size_t j = 0; j < kBlockCount; ++j) total += skew_block(w[j], dw[j]);
    return total;
}

inline double skew_total(const ParamFamily &family, double phi) {
    return skew_from_bloch(block_bloch(family.at(phi)), block_bloch(family.derivative(phi)));
}

// ---------------------------------------------------------------------------
// Concurrence
// ---------------------------------------------------------------------------

/// 2 max{0, |rho_18| - sum_{j=2..4} sqrt(rho_jj rho_(9-j)(9-j))}
inline double concurrence_x_ghz(const XState &s) {
    double c = std::abs(s.coherence(0));
    for (std::size_t j = 1; j < kBlockCount; ++j) {
        c -= std::sqrt(std::max(0.0, s.population(block_upper(j)) * s.population(block_lower(j))));
    }
    return 2.0 * std::max(0.0, c);
}

}  // namespace xqfi
