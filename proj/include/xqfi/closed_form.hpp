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
 * Published closed forms for the Werner-GHZ family, transcribed as printed.
 *
 * These are reference expressions, not trusted code. Nothing in the
 * pipeline calls into this namespace; crosscheck.hpp compares them against
 * the pipeline and the oracles and reports the verdict.
 *
 * All functions take S = 1 - p and the mixing weight q, and differentiate
 * with respect to q.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "xqfi/channels.hpp"
#include "xqfi/error.hpp"
#include "xqfi/ghz.hpp"

namespace xqfi::closed_form {

namespace detail {

inline double checked(double v, const char *what) {
    if (!std::isfinite(v)) throw Error(ErrorKind::SingularBlock, std::string(what) + " is not finite");
    return v;
}

inline double pow3(double x) { return x * x * x; }
inline double pow6(double x) { return pow3(x) * pow3(x); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Phase damping
// ---------------------------------------------------------------------------

inline double pdc_qfi(double s, double q) {
    const double s6 = detail::pow6(s);
    const double a = 4.0 - 3.0 * q;
    const double num = -3.0 * a / 16.0 + s6 * (1.0 - q);
    const double den = a * a / 16.0 - s6 * (1.0 - q) * (1.0 - q);
    return 9.0 / (4.0 * a) + 3.0 / (4.0 * q) + 4.0 / a * (num * num / den - (9.0 / 16.0 - s6));
}

inline double pdc_concurrence(double s, double q) {
    const double s3 = detail::pow3(s);
    return std::max(0.0, -3.0 * q / 4.0 + (4.0 - 3.0 * q + 4.0 * s3 - 4.0 * q * s3) / 8.0 +
                             (-4.0 + 3.0 * q + 4.0 * s3 - 4.0 * q * s3) / 8.0);
}

struct SkewTerms {
    double g = 0.0;  // radicand
    double k = 0.0;
    double lambda = 0.0;
    double theta = 0.0;
    double gamma = 0.0;
};

inline SkewTerms skew_terms(double w0_plus, double g) {
    SkewTerms t;
    t.g = g;
    t.k = w0_plus + std::sqrt(g);
    t.lambda = 1.0 / std::sqrt(t.k);
    t.theta = t.lambda / std::sqrt(g);
    t.gamma = t.lambda * t.lambda * t.lambda / std::sqrt(g);
    return t;
}

inline double pdc_skew(double s, double q) {
    const double s3 = detail::pow3(s);
    const double s6 = s3 * s3;
    const double a = 4.0 - 3.0 * q;
    const auto t = skew_terms(a / 4.0, a * a / 16.0 - s6 * (1.0 - q) * (1.0 - q));
    const double d0 = 1.0 / (4.0 * std::sqrt(t.g)) * (-3.0 * std::sqrt(t.k) / 4.0 + s6 * (1.0 - q) / std::sqrt(t.k));
    const double d1 = 3.0 * t.theta / 16.0 * s3 * (1.0 - q) - t.lambda / 2.0 * s3 -
                      t.gamma / 4.0 * s6 * s3 * (1.0 - q) * (1.0 - q);
    return 3.0 / (4.0 * q) + 8.0 * (d0 * d0 + d1 * d1);
}

// ---------------------------------------------------------------------------
// Phase flip
// ---------------------------------------------------------------------------

/// The fragment "(2S^6(1 - q)" is read as (2S - 1)^6 (1 - q).
inline double pfc_qfi(double s, double q) {
    const double b = detail::pow6(2.0 * s - 1.0);
    const double a = 4.0 - 3.0 * q;
    const double num = (-12.0 + 9.0 * q) / 16.0 + b * (1.0 - q);
    const double den = a * a / 16.0 - b * (1.0 - q) * (1.0 - q);
    return 3.0 / (4.0 * q) + 9.0 / (4.0 * a) + 4.0 / a * (num * num / den - (9.0 / 16.0 - b));
}

inline double pfc_concurrence(double s, double q) {
    return std::max(0.0, detail::pow3(2.0 * s - 1.0) + q * (0.25 - 6.0 * s + 12.0 * s * s - 8.0 * detail::pow3(s)));
}

inline double pfc_skew(double s, double q) {
    const double a3 = detail::pow3(2.0 * s - 1.0);
    const double a = 4.0 - 3.0 * q;
    const auto t = skew_terms(a / 4.0, a * a / 16.0 - a3 * a3 * (1.0 - q) * (1.0 - q));
    const double x = 2.0 * s - 1.0;
    const double d1 = 3.0 * t.theta / 16.0 * a3 * (1.0 - q) - t.lambda / 2.0 * a3 -
                      t.gamma / 4.0 * a3 * a3 * a3 * (1.0 - q) * (1.0 - q);
    const double d0 = -3.0 * std::sqrt(t.k) / 4.0 + x * x * (1.0 - q) / std::sqrt(t.k);
    return 8.0 * (d1 * d1 + 3.0 / (32.0 * q) + 1.0 / (16.0 * t.g) * d0 * d0);
}

// ---------------------------------------------------------------------------
// Depolarizing
// ---------------------------------------------------------------------------

struct DpcQfiTerms {
    double coherent = 0.0;    // block 1, the 4 / a [...] bracket
    double diagonal = 0.0;    // 3 S^4 / (16 (1 - S^2 + q S^2))
    double population = 0.0;  // 9 S^4 / (4 a)

    double total() const { return coherent + diagonal + population; }
};

inline DpcQfiTerms dpc_qfi_terms(double s, double q) {
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double a = 1.0 + 3.0 * s2 - 3.0 * q * s2;
    const double b = s3 - q * s3;
    const double num = -3.0 * s2 * a / 16.0 + s3 * b;
    DpcQfiTerms t;
    t.coherent = 4.0 / a * (num * num / (a * a / 16.0 - b * b) - (9.0 * s2 * s2 / 16.0 - s3 * s3));
    t.diagonal = 3.0 * s2 * s2 / (16.0 * (1.0 - s2 + q * s2));
    t.population = 9.0 * s2 * s2 / (4.0 * a);
    return t;
}

inline double dpc_qfi(double s, double q) { return dpc_qfi_terms(s, q).total(); }

inline double dpc_concurrence(double s, double q) {
    const double s3 = detail::pow3(s);
    const double s6 = s3 * s3;
    const double root = std::sqrt(16.0 * (1.0 - 2.0 * s3 + 5.0 * s6) - 8.0 * q * (3.0 - 6.0 * s3 + 19.0 * s6) +
                                  q * q * (9.0 - 18.0 * s3 + 73.0 * s6));
    return std::max(0.0, (-3.0 * q * s * (1.0 + s) + root) / 8.0);
}

inline double dpc_skew(double s, double q) {
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double a = 1.0 + 3.0 * s2 - 3.0 * q * s2;
    const double b = s3 - q * s3;
    const auto t = skew_terms((1.0 + s2) / 4.0 - 3.0 * q * s2 / 4.0, a * a / 16.0 - b * b);
    const double d0 = -3.0 * s2 / 4.0 / t.lambda + t.lambda * s3 * b;
    const double d1 = 3.0 * t.theta / 16.0 * s2 * b - t.lambda / 2.0 * s3 - t.gamma / 4.0 * s3 * b;
    return 8.0 * (d0 * d0 / (a * a - 16.0 * b * b) + d1 * d1) + 3.0 * s2 * s2 / (4.0 * (1.0 - s2 + q * s2));
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

inline double qfi(const GhzPoint &pt) {
    pt.validate();
    const double s = 1.0 - pt.p;
    switch (pt.channel) {
        case ChannelKind::PhaseDamping: return detail::checked(pdc_qfi(s, pt.q), "printed QFI");
        case ChannelKind::Depolarizing: return detail::checked(dpc_qfi(s, pt.q), "printed QFI");
        case ChannelKind::PhaseFlip: return detail::checked(pfc_qfi(s, pt.q), "printed QFI");
    }
    return 0.0;
}

inline double concurrence(const GhzPoint &pt) {
    pt.validate();
    const double s = 1.0 - pt.p;
    switch (pt.channel) {
        case ChannelKind::PhaseDamping: return detail::checked(pdc_concurrence(s, pt.q), "printed concurrence");
        case ChannelKind::Depolarizing: return detail::checked(dpc_concurrence(s, pt.q), "printed concurrence");
        case ChannelKind::PhaseFlip: return detail::checked(pfc_concurrence(s, pt.q), "printed concurrence");
    }
    return 0.0;
}

inline double skew(const GhzPoint &pt) {
    pt.validate();
    const double s = 1.0 - pt.p;
    switch (pt.channel) {
        case ChannelKind::PhaseDamping: return detail::checked(pdc_skew(s, pt.q), "printed skew");
        case ChannelKind::Depolarizing: return detail::checked(dpc_skew(s, pt.q), "printed skew");
        case ChannelKind::PhaseFlip: return detail::checked(pfc_skew(s, pt.q), "printed skew");
    }
    return 0.0;
}

}  // namespace xqfi::closed_form
