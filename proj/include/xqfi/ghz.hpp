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
 * Werner-GHZ states rho(q) = q I / 8 + (1 - q) |GHZ><GHZ| sent through one
 * of the three channels. The estimated parameter is the mixing weight q;
 * every derivative here is taken with respect to q at fixed p.
 */

#pragma once

#include <string>

#include "xqfi/channels.hpp"
#include "xqfi/error.hpp"
#include "xqfi/family.hpp"
#include "xqfi/metrics.hpp"
#include "xqfi/xstate.hpp"

namespace xqfi {

/// Interior guard: blocks 2-4 lose their support at q = 0 and the QFI for q
/// diverges like 1/q there.
inline constexpr double kGhzQMin = 1e-3;

/// Unchecked entries; the formula stays a valid state slightly beyond q = 1,
/// which finite differences at the edge rely on.
inline XEntries werner_ghz_entries(double q) {
    XEntries e;
    e.diag.fill(q / 8.0);
    e.diag[0] = e.diag[7] = (4.0 - 3.0 * q) / 8.0;
    e.anti[0] = (1.0 - q) / 2.0;
    return e;
}

/// d rho / dq, independent of q.
inline XEntries werner_ghz_tangent() {
    XEntries e;
    e.diag.fill(1.0 / 8.0);
    e.diag[0] = e.diag[7] = -3.0 / 8.0;
    e.anti[0] = -0.5;
    return e;
}

inline XState werner_ghz(double q) {
    if (!(q >= 0.0 && q <= 1.0)) throw Error(ErrorKind::BadParameter, "q = " + std::to_string(q) + " outside [0, 1]");
    return XState::from_entries(werner_ghz_entries(q));
}

struct GhzPoint {
    double q = 0.5;
    double p = 0.0;
    ChannelKind channel = ChannelKind::PhaseDamping;

    void validate() const {
        if (!(q >= kGhzQMin && q <= 1.0)) {
            throw Error(ErrorKind::BadParameter, "q = " + std::to_string(q) + " outside [1e-3, 1]");
        }
        if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::BadParameter, "p = " + std::to_string(p) + " outside [0, 1]");
    }
};

/// Closed-form route: block coordinates of the GHZ state, damped in Bloch form.
inline ParamFamily ghz_family(ChannelKind kind, const ChannelParam &param) {
    return ParamFamily::analytic(
        [kind, param](double q) {
            return xstate_from_bloch(damped_bloch(kind, block_bloch(werner_ghz_entries(q)), param));
        },
        [kind, param](double) {
            return entries_from_bloch(damped_bloch(kind, block_bloch(werner_ghz_tangent()), param));
        });
}

/// Kraus route on the dense matrix; the channel is linear so the tangent is
/// pushed through the same map.
inline ParamFamily ghz_kraus_family(ChannelKind kind, const ChannelParam &param) {
    return ParamFamily::analytic(
        [kind, param](double q) { return validate_xstate(apply_kraus_dense(to_dense(werner_ghz_entries(q)), kind, param)); },
        [kind, param](double) { return x_entries_of(apply_kraus_dense(to_dense(werner_ghz_tangent()), kind, param)); });
}

struct GhzMetrics {
    double qfi = 0.0;
    double skew = 0.0;
    double concurrence = 0.0;
};

/// The trusted pipeline: damped_bloch plus block closed forms, analytic d/dq.
inline GhzMetrics pipeline_metrics(const GhzPoint &pt) {
    pt.validate();
    const auto param = ChannelParam::make(pt.p);
    const BlockBloch w = damped_bloch(pt.channel, block_bloch(werner_ghz_entries(pt.q)), param);
    const BlockBloch dw = damped_bloch(pt.channel, block_bloch(werner_ghz_tangent()), param);
    return {qfi_from_bloch(w, dw), skew_from_bloch(w, dw), concurrence_x_ghz(xstate_from_bloch(w))};
}

}  // namespace xqfi
