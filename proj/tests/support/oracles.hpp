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

// Independent reference computations used only by the test suites. None of
// these go through the tensor, damped_bloch or the block closed forms.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

#include "xqfi/linalg_small.hpp"
#include "xqfi/xstate.hpp"

namespace xqfi::testing {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

/// w_alpha^j = Tr(block_j sigma_alpha), read straight off the dense matrix.
inline BlockBloch block_trace_bloch(const Matrix<8> &rho) {
    BlockBloch out;
    for (std::size_t j = 0; j < kBlockCount; ++j) {
        const std::size_t u = j, v = 7 - j;
        const Matrix<2> block{{rho(u, u), rho(u, v)}, {rho(v, u), rho(v, v)}};
        for (int a = 0; a < 4; ++a) out.w[j][static_cast<std::size_t>(a)] = (block * pauli(a)).trace().real();
    }
    return out;
}

/// Werner-GHZ concurrence after phase damping: S^3 (1 - q) - 3q/4, clipped.
inline double ghz_pdc_concurrence(double s, double q) { return std::max(0.0, s * s * s * (1.0 - q) - 0.75 * q); }

/// Phase flip keeps |2S - 1|^3 on the coherence, so it revives past p = 1/2.
inline double ghz_pfc_concurrence(double s, double q) {
    const double a = std::abs(2.0 * s - 1.0);
    return std::max(0.0, a * a * a * (1.0 - q) - 0.75 * q);
}

/// Random Hermitian 8x8 with entries in [-1, 1].
template <class Rng>
Matrix<8> random_hermitian(Rng &rng) {
    Matrix<8> h;
    for (std::size_t i = 0; i < 8; ++i) {
        h(i, i) = rng.uniform(-1.0, 1.0);
        for (std::size_t k = i + 1; k < 8; ++k) {
            h(i, k) = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
            h(k, i) = std::conj(h(i, k));
        }
    }
    return h;
}

}  // namespace xqfi::testing
