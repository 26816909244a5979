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
 * Brute-force ground truth on the full 8x8 matrix. Nothing in here touches
 * block coordinates: QFI comes from a full eigendecomposition and skew
 * information from a finite difference of the matrix square root.
 */

#pragma once

#include <string>

#include "xqfi/error.hpp"
#include "xqfi/family.hpp"
#include "xqfi/linalg_small.hpp"
#include "xqfi/xstate.hpp"

namespace xqfi {

struct OracleConfig {
    double fd_step = 1e-6;       // relative: h = fd_step * max(1, |phi|)
    double rank_cutoff = 1e-12;  // pairs with lambda_i + lambda_j below this are dropped
};

/// F = sum over lambda_i + lambda_j > cutoff of 2 |<i| d rho |j>|^2 / (lambda_i + lambda_j).
inline double qfi_eigen_oracle(const Matrix<8> &rho, const Matrix<8> &drho, const OracleConfig &cfg = {}) {
    const auto eig = eigh(rho);
    if (eig.values.front() < -kNegativeClamp) {
        throw Error(ErrorKind::NotPSD, "state has eigenvalue " + std::to_string(eig.values.front()));
    }
    const Matrix<8> rotated = eig.vectors.adjoint() * drho * eig.vectors;
    double f = 0.0;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t k = 0; k < 8; ++k) {
            const double denom = eig.values[i] + eig.values[k];
            if (denom > cfg.rank_cutoff) f += 2.0 * std::norm(rotated(i, k)) / denom;
        }
    return f;
}

inline double qfi_eigen_oracle(const ParamFamily &family, double phi, const OracleConfig &cfg = {}) {
    return qfi_eigen_oracle(to_dense(family.at(phi)), to_dense(family.derivative(phi)), cfg);
}

/// I = 4 Tr(D^2) with D the central difference of sqrt(rho) at phi.
inline double skew_sqrt_oracle(const ParamFamily &family, double phi, const OracleConfig &cfg = {}) {
    const double h = cfg.fd_step * std::max(1.0, std::abs(phi));
    const Matrix<8> d =
        central_diff([&](double x) { return psd_sqrt(to_dense(family.at(x))); }, phi, h);
    return 4.0 * (d * d).trace().real();
}

}  // namespace xqfi
