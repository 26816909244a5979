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

#include "oracles.hpp"
#include "xqfi/ghz.hpp"
#include "xqfi/random.hpp"
#include "xqfi/xstate.hpp"

namespace xqfi {
namespace {

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::BadParameter;
}

XEntries uniform_entries() {
    XEntries e;
    e.diag.fill(0.125);
    return e;
}

TEST(XState, FromEntriesErrors) {
    auto e = uniform_entries();
    e.diag[0] += 0.01;
    EXPECT_EQ(kind_of([&] { XState::from_entries(e); }), ErrorKind::TraceViolation);

    e = uniform_entries();
    e.diag[0] = -0.01;
    e.diag[1] = 0.135;
    EXPECT_EQ(kind_of([&] { XState::from_entries(e); }), ErrorKind::BlockNotPSD);

    e = uniform_entries();
    e.anti[2] = 0.2;
    EXPECT_EQ(kind_of([&] { XState::from_entries(e); }), ErrorKind::BlockNotPSD);

    e = uniform_entries();
    e.diag[3] = std::nan("");
    EXPECT_EQ(kind_of([&] { XState::from_entries(e); }), ErrorKind::BadParameter);
}

TEST(XState, ValidateRejectsOffPattern) {
    Matrix<8> m = to_dense(uniform_entries());
    m(0, 1) = m(1, 0) = 0.01;
    EXPECT_EQ(kind_of([&] { validate_xstate(m); }), ErrorKind::NotXForm);

    m = to_dense(uniform_entries());
    m(0, 7) = 0.05;
    m(7, 0) = 0.02;
    EXPECT_EQ(kind_of([&] { validate_xstate(m); }), ErrorKind::NotHermitian);
}

TEST(XState, WernerGhzHalf) {
    const XState s = validate_xstate(to_dense(werner_ghz(0.5)));
    EXPECT_DOUBLE_EQ(s.population(0), 5.0 / 16.0);
    EXPECT_DOUBLE_EQ(s.population(7), 5.0 / 16.0);
    for (std::size_t i = 1; i < 7; ++i) EXPECT_DOUBLE_EQ(s.population(i), 1.0 / 16.0);
    EXPECT_EQ(s.coherence(0), cplx(0.25));
    for (std::size_t j = 1; j < 4; ++j) EXPECT_EQ(s.coherence(j), cplx(0.0));
}

TEST(XState, WernerGhzTensor) {
    for (double q : {0.0, 0.3, 1.0}) {
        const auto t = correlation_tensor(werner_ghz(q));
        EXPECT_NEAR(t(0, 0, 0), 1.0, 1e-15);
        EXPECT_NEAR(t(0, 3, 3), 1.0 - q, 1e-15);
        EXPECT_NEAR(t(3, 0, 3), 1.0 - q, 1e-15);
        EXPECT_NEAR(t(3, 3, 0), 1.0 - q, 1e-15);
        EXPECT_NEAR(t(1, 1, 1), 1.0 - q, 1e-15);
        EXPECT_NEAR(t(1, 2, 2), -(1.0 - q), 1e-15);
        EXPECT_NEAR(t(2, 1, 2), -(1.0 - q), 1e-15);
        EXPECT_NEAR(t(2, 2, 1), -(1.0 - q), 1e-15);
        int nonzero = 0;
        for (double v : t.t) nonzero += std::abs(v) > 1e-14;
        EXPECT_EQ(nonzero, q == 1.0 ? 1 : 8);
    }
}

TEST(XState, WernerGhzBlocks) {
    const double q = 0.4;
    const auto blocks = block_decompose(werner_ghz(q));
    EXPECT_NEAR(blocks[0](0, 0).real(), (4.0 - 3.0 * q) / 8.0, 1e-15);
    EXPECT_NEAR(blocks[0](0, 1).real(), (1.0 - q) / 2.0, 1e-15);
    for (std::size_t j = 1; j < 4; ++j) {
        EXPECT_LE((blocks[j] - Matrix<2>::identity() * (q / 8.0)).max_abs(), 1e-15);
    }
    const auto w = block_bloch(werner_ghz(q));
    EXPECT_NEAR(w[0][0], (4.0 - 3.0 * q) / 4.0, 1e-15);
    EXPECT_NEAR(w[0][1], 1.0 - q, 1e-15);
    EXPECT_NEAR(w[0][2], 0.0, 1e-15);
    EXPECT_NEAR(w[0][3], 0.0, 1e-15);
    for (std::size_t j = 1; j < 4; ++j) {
        EXPECT_NEAR(w[j][0], q / 4.0, 1e-15);
        for (std::size_t a = 1; a < 4; ++a) EXPECT_NEAR(w[j][a], 0.0, 1e-15);
    }
}

TEST(XState, FromBlochRejectsOutsideCone) {
    BlockBloch w;
    w[0] = {0.5, 0.6, 0.0, 0.0};
    w[1] = {0.5, 0.0, 0.0, 0.0};
    EXPECT_EQ(kind_of([&] { xstate_from_bloch(w); }), ErrorKind::BlockNotPSD);
}

TEST(XStateProperty, BlockBlochMatchesBlockTrace) {
    Rng rng(testing::kDefaultSeed);
    for (int n = 0; n < 1000; ++n) {
        const XState s = random_xstate(rng);
        const auto w = block_bloch(s);
        const auto ref = testing::block_trace_bloch(to_dense(s));
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t a = 0; a < 4; ++a) ASSERT_NEAR(w[j][a], ref[j][a], 1e-13) << j << a;
    }
}

TEST(XStateProperty, Roundtrips) {
    Rng rng(testing::kDefaultSeed + 7);
    for (int n = 0; n < 500; ++n) {
        const XState s = random_xstate(rng);
        const Matrix<8> dense = to_dense(s);
        EXPECT_LE((to_dense(validate_xstate(dense)) - dense).max_abs(), 1e-15);
        EXPECT_LE((dense_from_tensor(correlation_tensor(s)) - dense).max_abs(), 1e-14);
        EXPECT_LE((to_dense(xstate_from_bloch(block_bloch(s))) - dense).max_abs(), 1e-14);
        EXPECT_NEAR(dense.trace().real(), 1.0, 1e-14);
        EXPECT_GE(eigh(dense).values.front(), -1e-12);
    }
}

TEST(XStateProperty, TensorSupportIsXPattern) {
    Rng rng(testing::kDefaultSeed + 3);
    for (int n = 0; n < 200; ++n) {
        const auto t = correlation_tensor(random_xstate(rng));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    const int flips = (a == 1 || a == 2) + (b == 1 || b == 2) + (c == 1 || c == 2);
                    if (flips != 0 && flips != 3) {
                        EXPECT_EQ(t(a, b, c), 0.0);
                    }
                }
        EXPECT_NEAR(t(0, 0, 0), 1.0, 1e-14);
    }
}

}  // namespace
}  // namespace xqfi
