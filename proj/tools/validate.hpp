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
 * The `validate` report. Hard invariants (oracle agreement, channel
 * equivalence) decide the exit code; closed-form deviations are printed as
 * warnings. No timings or addresses go into the report, so the same flags
 * give byte-identical output.
 */

#pragma once

#include <algorithm>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "sweep.hpp"
#include "xqfi/channels.hpp"
#include "xqfi/crosscheck.hpp"
#include "xqfi/metrics.hpp"
#include "xqfi/oracle.hpp"
#include "xqfi/random.hpp"

namespace xqfi::cli {

inline constexpr double kChannelEquivalenceTolerance = 1e-12;
inline constexpr double kCompletenessTolerance = 1e-14;

struct ValidateResult {
    std::string report;
    int exit_code = 0;
};

namespace detail {

class Report {
   public:
    void line(const char *fmt, ...) __attribute__((format(printf, 2, 3))) {
        char buf[512];
        va_list args;
        va_start(args, fmt);
        std::vsnprintf(buf, sizeof buf, fmt, args);
        va_end(args);
        text_ += buf;
        text_ += '\n';
    }
    std::string take() { return std::move(text_); }

   private:
    std::string text_;
};

inline const char *status(bool ok) { return ok ? "PASS" : "FAIL"; }

inline double max_entry_error(const XEntries &a, const XEntries &b) {
    double e = 0.0;
    for (std::size_t i = 0; i < 8; ++i) e = std::max(e, std::abs(a.diag[i] - b.diag[i]));
    for (std::size_t j = 0; j < kBlockCount; ++j) e = std::max(e, std::abs(a.anti[j] - b.anti[j]));
    return e;
}

}  // namespace detail

/// q = 0.1 .. 0.9 over `grid` points, p = 0, 0.9/grid, .., 0.9.
inline std::vector<GhzPoint> ghz_grid(int grid) {
    std::vector<GhzPoint> pts;
    for (auto kind : kAllChannels)
        for (int i = 0; i < grid; ++i)
            for (int k = 0; k <= grid; ++k) pts.push_back({0.1 + 0.8 * i / (grid - 1), 0.9 * k / grid, kind});
    return pts;
}

inline ValidateResult run_validate(int grid, std::uint64_t seed) {
    if (grid < 2) throw SpecError("grid", "must be at least 2");
    detail::Report out;
    bool ok = true;
    out.line("xqfi validate grid=%d seed=%llu", grid, static_cast<unsigned long long>(seed));

    // Channel equivalence.
    {
        Rng rng(seed);
        const int states = 100 * grid;
        double worst = 0.0, completeness = 0.0;
        for (auto kind : kAllChannels)
            for (int k = 0; k <= 10; ++k)
                completeness = std::max(completeness, completeness_residual(kraus_set(kind, ChannelParam::make(k / 10.0))));
        for (int n = 0; n < states; ++n) {
            const XState s = random_xstate(rng);
            const BlockBloch w = block_bloch(s);
            for (auto kind : kAllChannels)
                for (int k = 0; k <= 10; ++k) {
                    const auto param = ChannelParam::make(k / 10.0);
                    const XEntries dense = apply_kraus(s, kind, param).entries();
                    const XEntries closed = entries_from_bloch(damped_bloch(kind, w, param));
                    worst = std::max(worst, detail::max_entry_error(dense, closed));
                }
        }
        const bool pass = worst <= kChannelEquivalenceTolerance && completeness <= kCompletenessTolerance;
        ok = ok && pass;
        out.line("[suite] channel-equivalence states=%d p-values=11 max-entry-error=%.3e max-completeness=%.3e %s",
                 states, worst, completeness, detail::status(pass));
    }

    // Oracle equivalence on random families.
    {
        Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
        const int families = 20 * grid;
        double qfi_worst = 0.0, skew_worst = 0.0;
        for (int n = 0; n < families; ++n) {
            const auto curve = random_curve(rng);
            const double phi = random_curve_point(rng);
            const auto family = curve.analytic_family();
            const double fq = qfi_eigen_oracle(family, phi);
            const double fs = skew_sqrt_oracle(family, phi);
            qfi_worst = std::max(qfi_worst, std::abs(qfi_total(family, phi) - fq) / std::max(fq, kRelativeFloor));
            skew_worst = std::max(skew_worst, std::abs(skew_total(family, phi) - fs) / std::max(fs, kRelativeFloor));
        }
        const bool qfi_pass = qfi_worst <= kQfiOracleTolerance;
        const bool skew_pass = skew_worst <= kSkewOracleTolerance;
        ok = ok && qfi_pass && skew_pass;
        out.line("[suite] qfi-oracle families=%d max-rel-error=%.3e %s", families, qfi_worst, detail::status(qfi_pass));
        out.line("[suite] skew-oracle families=%d max-rel-error=%.3e %s", families, skew_worst,
                 detail::status(skew_pass));
    }

    // GHZ crosschecks.
    auto points = ghz_grid(grid);
    for (auto kind : kAllChannels)
        for (double p : {0.0, 0.5}) points.push_back({kGhzQMin, p, kind});
    std::vector<CrosscheckReport> reports;
    reports.reserve(points.size());
    for (const auto &pt : points) reports.push_back(crosscheck(pt));
    {
        bool pass = true;
        double worst[3] = {0.0, 0.0, 0.0};
        for (const auto &r : reports)
            for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
                const auto &c = r[kAllMetrics[m]];
                pass = pass && c.oracle_ok();
                worst[m] = std::max(worst[m], c.oracle_delta);
            }
        ok = ok && pass;
        out.line("[suite] ghz-oracle points=%zu max-rel-error qfi=%.3e skew=%.3e concurrence=%.3e %s", reports.size(),
                 worst[0], worst[1], worst[2], detail::status(pass));
        for (const auto &r : reports)
            for (auto m : kAllMetrics)
                if (!r[m].oracle_ok()) {
                    out.line("  mismatch %s q=%.6g p=%.6g %s", std::string(short_name(r.point.channel)).c_str(),
                             r.point.q, r.point.p, std::string(to_string(m)).c_str());
                }
    }

    // Closed-form ledger.
    for (auto kind : kAllChannels)
        for (auto m : kAllMetrics) {
            int total = 0, deviating = 0, singular = 0;
            double worst = 0.0;
            for (const auto &r : reports) {
                if (r.point.channel != kind) continue;
                ++total;
                const auto &c = r[m];
                if (c.verdict == Verdict::FormulaDeviates) {
                    ++deviating;
                    worst = std::max(worst, c.closed_form_delta);
                } else if (c.verdict == Verdict::Singular) {
                    ++singular;
                }
            }
            const std::string ch(short_name(kind)), name(to_string(m));
            if (deviating == 0 && singular == 0) {
                out.line("[closed-form] %s %s agree at %d/%d points", ch.c_str(), name.c_str(), total, total);
            } else {
                out.line("[warning] %s %s closed form deviates at %d/%d points (singular %d), max |delta|=%.3e",
                         ch.c_str(), name.c_str(), deviating, total, singular, worst);
            }
        }

    {
        double lo = 0.0, hi = 0.0;
        bool any = false;
        for (const auto &pt : points) {
            if (pt.channel != ChannelKind::Depolarizing) continue;
            const auto f = dpc_diagonal_factor(pt.q, pt.p);
            if (!f) continue;
            lo = any ? std::min(lo, *f) : *f;
            hi = any ? std::max(hi, *f) : *f;
            any = true;
        }
        if (any) {
            out.line("[warning] dpc qfi diagonal term: pipeline/oracle value is factor %.6f of the printed "
                     "3S^4/(16(1-S^2+qS^2)) (range %.6f..%.6f)",
                     0.5 * (lo + hi), lo, hi);
        }
    }

    out.line("result: %s", detail::status(ok));
    return {out.take(), ok ? 0 : 1};
}

}  // namespace xqfi::cli
