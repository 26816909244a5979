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
 * Seeded random X-states and one-parameter X-state families.
 *
 * The generator is std::mt19937_64, whose output sequence is fixed by the
 * C++ standard. Doubles are formed from the top 53 bits of each draw rather
 * than through std::uniform_real_distribution, whose algorithm is left to
 * the library vendor. A seed therefore names the same corpus everywhere.
 */

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "xqfi/family.hpp"
#include "xqfi/xstate.hpp"

namespace xqfi {

class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

   private:
    std::mt19937_64 engine_;
};

/// Populations are a flat Dirichlet draw; each coherence is r e^{i theta}
/// with r uniform on [0, sqrt(rho_uu rho_vv)], so the result is valid by
/// construction.
inline XEntries random_xentries(Rng &rng) {
    XEntries e;
    double total = 0.0;
    for (auto &d : e.diag) {
        d = -std::log1p(-rng.uniform());
        total += d;
    }
    for (auto &d : e.diag) d /= total;
    for (std::size_t j = 0; j < kBlockCount; ++j) {
        const double bound = std::sqrt(e.diag[block_upper(j)] * e.diag[block_lower(j)]);
        const double r = rng.uniform(0.0, bound);
        const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        e.anti[j] = std::polar(r, theta);
    }
    return e;
}

inline XState random_xstate(Rng &rng) { return XState::from_entries(random_xentries(rng)); }

/// rho(phi) = (1 - t) A + t B with t = (1 - cos phi) / 2, and coherence j
/// additionally rotated by exp(i k_j phi). Convexity keeps every point valid.
struct RandomCurve {
    XEntries start;
    XEntries end;
    std::array<double, 4> rates{};

    XEntries entries_at(double phi) const {
        const double t = 0.5 * (1.0 - std::cos(phi));
        XEntries e = start * (1.0 - t) + end * t;
        for (std::size_t j = 0; j < kBlockCount; ++j) e.anti[j] *= std::polar(1.0, rates[j] * phi);
        return e;
    }

    XEntries derivative_at(double phi) const {
        const double t = 0.5 * (1.0 - std::cos(phi));
        const double dt = 0.5 * std::sin(phi);
        XEntries d = (end - start) * dt;
        for (std::size_t j = 0; j < kBlockCount; ++j) {
            const cplx rot = std::polar(1.0, rates[j] * phi);
            const cplx base = (1.0 - t) * start.anti[j] + t * end.anti[j];
            d.anti[j] = d.anti[j] * rot + cplx(0.0, rates[j]) * base * rot;
        }
        return d;
    }

    ParamFamily analytic_family() const {
        return ParamFamily::analytic([c = *this](double phi) { return XState::from_entries(c.entries_at(phi)); },
                                     [c = *this](double phi) { return c.derivative_at(phi); });
    }

    ParamFamily finite_difference_family(double step = 0.0) const {
        return ParamFamily::finite_difference(
            [c = *this](double phi) { return XState::from_entries(c.entries_at(phi)); }, step);
    }
};

inline RandomCurve random_curve(Rng &rng) {
    RandomCurve c;
    c.start = random_xentries(rng);
    c.end = random_xentries(rng);
    for (auto &k : c.rates) k = rng.uniform(-2.0, 2.0);
    return c;
}

/// Evaluation points stay away from t = 0 and t = 1 where dt/dphi vanishes.
inline double random_curve_point(Rng &rng) { return rng.uniform(0.3, 2.8); }

}  // namespace xqfi
