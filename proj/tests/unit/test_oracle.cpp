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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "xqfi/ghz.hpp"
#include "xqfi/metrics.hpp"
#include "xqfi/oracle.hpp"
#include "xqfi/random.hpp"

namespace xqfi {
namespace {

Matrix<8> permute(const Matrix<8> &m, const std::array<std::size_t, 8> &perm) {
    Matrix<8> out;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t k = 0; k < 8; ++k) out(perm[i], perm[k]) = m(i, k);
    return out;
}

TEST(Oracle, PdcFullyMixedLine) {
    for (double p : {0.0, 0.3, 0.7}) {
        const auto fam = ghz_kraus_family(ChannelKind::PhaseDamping, ChannelParam::make(p));
        EXPECT_NEAR(qfi_eigen_oracle(fam, 1.0), 3.0 + 4.0 * std::pow(1.0 - p, 6), 1e-10);
    }
}

TEST(Oracle, DiagonalFamilyIsClassical) {
    // rho(q) diagonal: both oracles reduce to sum (d lambda)^2 / lambda.
    const double q = 0.5;
    const auto fam = ParamFamily::analytic(
        [](double x) {
            XEntries e = werner_ghz_entries(x);
            e.anti[0] = 0.0;
            return XState::from_entries(e);
        },
        [](double) {
            XEntries e = werner_ghz_tangent();
            e.anti[0] = 0.0;
            return e;
        });
    const double expected = 3.0 / (4.0 * q) + 2.0 * (9.0 / 64.0) / ((4.0 - 3.0 * q) / 8.0);
    EXPECT_NEAR(qfi_eigen_oracle(fam, q), expected, 1e-12);
    EXPECT_NEAR(skew_sqrt_oracle(fam, q), expected, 1e-6);
}

TEST(Oracle, RejectsNonPsd) {
    const Matrix<8> rho = Matrix<8>::diagonal({0.5, 0.5, 0.1, -0.1, 0.0, 0.0, 0.0, 0.0});
    EXPECT_THROW(qfi_eigen_oracle(rho, Matrix<8>::identity()), Error);
}

TEST(OracleProperty, PermutationInvariance) {
    Rng rng(testing::kDefaultSeed);
    for (int n = 0; n < 100; ++n) {
        const auto curve = random_curve(rng);
        const double phi = random_curve_point(rng);
        const Matrix<8> rho = to_dense(curve.entries_at(phi)), drho = to_dense(curve.derivative_at(phi));
        std::array<std::size_t, 8> perm;
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = 7; i > 0; --i) std::swap(perm[i], perm[static_cast<std::size_t>(rng.uniform() * static_cast<double>(i + 1))]);
        const double a = qfi_eigen_oracle(rho, drho), b = qfi_eigen_oracle(permute(rho, perm), permute(drho, perm));
        EXPECT_NEAR(a, b, 1e-9 * std::max(1.0, a));
    }
}

TEST(OracleProperty, AnalyticMatchesFiniteDifference) {
    Rng rng(testing::kDefaultSeed + 1);
    for (int n = 0; n < 100; ++n) {
        const auto curve = random_curve(rng);
        const double phi = random_curve_point(rng);
        const double a = qfi_eigen_oracle(curve.analytic_family(), phi);
        const double f = qfi_eigen_oracle(curve.finite_difference_family(), phi);
        EXPECT_NEAR(a, f, 1e-4 * std::max(a, 1e-9));
        EXPECT_NEAR(qfi_total(curve.finite_difference_family(), phi), a, 1e-4 * std::max(a, 1e-9));
    }
}

TEST(OracleProperty, NonNegativeAndVanishOnConstantFamily) {
    Rng rng(testing::kDefaultSeed + 2);
    for (int n = 0; n < 50; ++n) {
        const XState s = random_xstate(rng);
        const auto constant = ParamFamily::analytic([s](double) { return s; }, [](double) { return XEntries{}; });
        EXPECT_EQ(qfi_eigen_oracle(constant, 1.0), 0.0);
        EXPECT_NEAR(skew_sqrt_oracle(constant, 1.0), 0.0, 1e-20);
        const auto curve = random_curve(rng);
        EXPECT_GE(qfi_eigen_oracle(curve.analytic_family(), 1.0), 0.0);
        EXPECT_GE(skew_sqrt_oracle(curve.analytic_family(), 1.0), 0.0);
    }
}

TEST(OracleProperty, BlockSumsMatchOracles) {
    Rng rng(testing::kDefaultSeed + 3);
    for (int n = 0; n < 200; ++n) {
        const auto curve = random_curve(rng);
        const double phi = random_curve_point(rng);
        const auto fam = curve.analytic_family();
        const double fq = qfi_eigen_oracle(fam, phi), fs = skew_sqrt_oracle(fam, phi);
        EXPECT_LE(std::abs(qfi_total(fam, phi) - fq) / std::max(fq, 1e-9), 1e-6);
        EXPECT_LE(std::abs(skew_total(fam, phi) - fs) / std::max(fs, 1e-9), 1e-5);
    }
}

}  // namespace
}  // namespace xqfi
