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
 * Three-way comparison at one GHZ point: trusted pipeline, published closed
 * form, and full-matrix oracle on the Kraus route.
 *
 * Pipeline against oracle is a hard invariant. Pipeline against closed form
 * is only reported.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string_view>

#include "xqfi/channels.hpp"
#include "xqfi/closed_form.hpp"
#include "xqfi/error.hpp"
#include "xqfi/ghz.hpp"
#include "xqfi/metrics.hpp"
#include "xqfi/oracle.hpp"

namespace xqfi {

inline constexpr double kClosedFormTolerance = 1e-8;
inline constexpr double kQfiOracleTolerance = 1e-6;
/// The skew oracle differentiates sqrt(rho) numerically.
inline constexpr double kSkewOracleTolerance = 1e-5;
inline constexpr double kRelativeFloor = 1e-9;

enum class Verdict { Agree, FormulaDeviates, OracleMismatch, Singular };

constexpr std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Agree: return "agree";
        case Verdict::FormulaDeviates: return "formula-deviates";
        case Verdict::OracleMismatch: return "oracle-mismatch";
        case Verdict::Singular: return "singular";
    }
    return "?";
}

enum class Metric { Qfi, Skew, Concurrence };

inline constexpr std::array<Metric, 3> kAllMetrics{Metric::Qfi, Metric::Skew, Metric::Concurrence};

constexpr std::string_view to_string(Metric m) {
    switch (m) {
        case Metric::Qfi: return "qfi";
        case Metric::Skew: return "skew";
        case Metric::Concurrence: return "concurrence";
    }
    return "?";
}

struct MetricCheck {
    std::optional<double> pipeline;
    std::optional<double> closed_form;
    std::optional<double> oracle;
    double closed_form_delta = 0.0;  // |pipeline - closed form|
    double oracle_delta = 0.0;       // |pipeline - oracle| / max(|oracle|, 1e-9)
    Verdict verdict = Verdict::Singular;

    /// The hard invariant: pipeline and oracle both exist and agree.
    bool oracle_ok() const { return pipeline && oracle && verdict != Verdict::OracleMismatch; }
};

struct CrosscheckReport {
    GhzPoint point;
    MetricCheck qfi;
    MetricCheck skew;
    MetricCheck concurrence;

    const MetricCheck &operator[](Metric m) const {
        switch (m) {
            case Metric::Qfi: return qfi;
            case Metric::Skew: return skew;
            case Metric::Concurrence: break;
        }
        return concurrence;
    }

    bool oracle_ok() const { return qfi.oracle_ok() && skew.oracle_ok() && concurrence.oracle_ok(); }
};

namespace detail {

inline std::optional<double> attempt(const std::function<double()> &f) {
    try {
        const double v = f();
        if (std::isfinite(v)) return v;
    } catch (const Error &) {
    }
    return std::nullopt;
}

inline MetricCheck judge(std::optional<double> pipeline, std::optional<double> printed, std::optional<double> oracle,
                         double oracle_tol) {
    MetricCheck m;
    m.pipeline = pipeline;
    m.closed_form = printed;
    m.oracle = oracle;
    if (!pipeline || !oracle) {
        m.verdict = Verdict::Singular;
        return m;
    }
    m.oracle_delta = std::abs(*pipeline - *oracle) / std::max(std::abs(*oracle), kRelativeFloor);
    if (m.oracle_delta > oracle_tol) {
        m.verdict = Verdict::OracleMismatch;
        return m;
    }
    if (!printed) {
        m.verdict = Verdict::Singular;
        return m;
    }
    m.closed_form_delta = std::abs(*pipeline - *printed);
    m.verdict = m.closed_form_delta <= kClosedFormTolerance ? Verdict::Agree : Verdict::FormulaDeviates;
    return m;
}

}  // namespace detail

inline CrosscheckReport crosscheck(const GhzPoint &pt, const OracleConfig &cfg = {}) {
    pt.validate();
    CrosscheckReport r;
    r.point = pt;
    const auto param = ChannelParam::make(pt.p);
    const BlockBloch w = damped_bloch(pt.channel, block_bloch(werner_ghz_entries(pt.q)), param);
    const BlockBloch dw = damped_bloch(pt.channel, block_bloch(werner_ghz_tangent()), param);
    const ParamFamily kraus = ghz_kraus_family(pt.channel, param);

    r.qfi = detail::judge(detail::attempt([&] { return qfi_from_bloch(w, dw); }),
                          detail::attempt([&] { return closed_form::qfi(pt); }),
                          detail::attempt([&] { return qfi_eigen_oracle(kraus, pt.q, cfg); }), kQfiOracleTolerance);
    r.skew = detail::judge(detail::attempt([&] { return skew_from_bloch(w, dw); }),
                           detail::attempt([&] { return closed_form::skew(pt); }),
                           detail::attempt([&] { return skew_sqrt_oracle(kraus, pt.q, cfg); }), kSkewOracleTolerance);
    r.concurrence = detail::judge(detail::attempt([&] { return concurrence_x_ghz(xstate_from_bloch(w)); }),
                                  detail::attempt([&] { return closed_form::concurrence(pt); }),
                                  detail::attempt([&] { return concurrence_x_ghz(kraus.at(pt.q)); }),
                                  kQfiOracleTolerance);
    return r;
}

/// Ratio between the diagonal-block QFI implied by the pipeline and the
/// printed depolarizing diagonal term. Empty when S = 0.
inline std::optional<double> dpc_diagonal_factor(double q, double p) {
    const double s = 1.0 - p;
    const auto printed = closed_form::dpc_qfi_terms(s, q);
    if (!(printed.diagonal > 0.0)) return std::nullopt;
    const auto m = pipeline_metrics({q, p, ChannelKind::Depolarizing});
    return (m.qfi - printed.coherent - printed.population) / printed.diagonal;
}

}  // namespace xqfi
