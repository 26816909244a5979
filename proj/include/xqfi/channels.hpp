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
 * Phase damping, depolarizing and phase flip noise, applied identically
 * and independently to all three qubits.
 *
 * Two routes are provided and deliberately share nothing beyond the data
 * model: apply_kraus() works on the dense 8x8 matrix with the 27 or 64
 * three-fold Kraus products, damped_bloch() rescales block coordinates in
 * closed form.
 *
 * Survival factor convention: S = 1 - p, so S = 1 means no noise.
 */

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xqfi/error.hpp"
#include "xqfi/linalg_small.hpp"
#include "xqfi/xstate.hpp"

namespace xqfi {

enum class ChannelKind { PhaseDamping, Depolarizing, PhaseFlip };

inline constexpr std::array<ChannelKind, 3> kAllChannels{ChannelKind::PhaseDamping, ChannelKind::Depolarizing,
                                                          ChannelKind::PhaseFlip};

constexpr std::string_view short_name(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::PhaseDamping: return "pdc";
        case ChannelKind::Depolarizing: return "dpc";
        case ChannelKind::PhaseFlip: return "pfc";
    }
    return "?";
}

inline std::optional<ChannelKind> parse_channel(std::string_view name) {
    for (auto kind : kAllChannels)
        if (short_name(kind) == name) return kind;
    return std::nullopt;
}

class ChannelParam {
   public:
    static ChannelParam make(double p) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw Error(ErrorKind::BadProbability, "p = " + std::to_string(p) + " outside [0, 1]");
        }
        return ChannelParam(p);
    }

    double p() const { return p_; }
    double survival() const { return 1.0 - p_; }
    /// p' = 3p/4, the depolarizing weight on the non-identity Paulis.
    double depolarizing_weight() const { return 0.75 * p_; }

   private:
    explicit ChannelParam(double p) : p_(p) {}
    double p_;
};

struct KrausSet {
    std::vector<Matrix<2>> operators;
};

inline KrausSet kraus_set(ChannelKind kind, const ChannelParam &param) {
    const double p = param.p();
    KrausSet k;
    switch (kind) {
        case ChannelKind::PhaseDamping: {
            const double s = param.survival();
            k.operators.push_back(pauli(0) * std::sqrt(s));
            k.operators.push_back(Matrix<2>{{std::sqrt(p), 0.0}, {0.0, 0.0}});
            k.operators.push_back(Matrix<2>{{0.0, 0.0}, {0.0, std::sqrt(p)}});
            break;
        }
        case ChannelKind::Depolarizing: {
            const double w = param.depolarizing_weight();
            k.operators.push_back(pauli(0) * std::sqrt(1.0 - w));
            for (int a = 1; a <= 3; ++a) k.operators.push_back(pauli(a) * std::sqrt(w / 3.0));
            break;
        }
        case ChannelKind::PhaseFlip:
            k.operators.push_back(pauli(0) * std::sqrt(1.0 - p));
            k.operators.push_back(pauli(3) * std::sqrt(p));
            break;
    }
    return k;
}

/// max |sum K^dagger K - I|
inline double completeness_residual(const KrausSet &k) {
    Matrix<2> acc;
    for (const auto &op : k.operators) acc += op.adjoint() * op;
    return (acc - Matrix<2>::identity()).max_abs();
}

/// The raw map rho -> sum (Ka Kb Kc) rho (Ka Kb Kc)^dagger on any 8x8 input,
/// including tangents that are not states.
inline Matrix<8> apply_kraus_dense(const Matrix<8> &rho, ChannelKind kind, const ChannelParam &param) {
    const auto set = kraus_set(kind, param);
    Matrix<8> out;
    for (const auto &ka : set.operators)
        for (const auto &kb : set.operators)
            for (const auto &kc : set.operators) {
                const Matrix<8> k = kron(kron(ka, kb), kc);
                out += k * rho * k.adjoint();
            }
    return out;
}

/// Kraus route. The output is re-validated as an X-state; a failure here
/// would be a bug and is surfaced as NotXForm, never repaired.
inline XState apply_kraus(const XState &s, ChannelKind kind, const ChannelParam &param) {
    return validate_xstate(apply_kraus_dense(to_dense(s), kind, param));
}

/// Closed-form route on block coordinates. Linear in w, so tangents damp
/// the same way.
inline BlockBloch damped_bloch(ChannelKind kind, const BlockBloch &w, const ChannelParam &param) {
    const double s = param.survival();
    BlockBloch out = w;
    switch (kind) {
        case ChannelKind::PhaseDamping: {
            const double f = s * s * s;
            for (auto &b : out.w) {
                b[1] *= f;
                b[2] *= f;
            }
            break;
        }
        case ChannelKind::Depolarizing: {
            const double s2 = s * s;
            const double f = s2 * s;
            // Each Pauli index contributes one factor S, so the z-parts of
            // w_3 split into one-body (S) and three-body (S^3) terms.
            // T_333 is recovered from the w_3 column with signs (+,-,-,+).
            constexpr std::array<double, 4> kZzzSign{+1.0, -1.0, -1.0, +1.0};
            double total = 0.0;
            double t333 = 0.0;
            for (std::size_t j = 0; j < kBlockCount; ++j) {
                total += w[j][0];
                t333 += kZzzSign[j] * w[j][3];
            }
            for (std::size_t j = 0; j < kBlockCount; ++j) {
                const double others = total - w[j][0];
                out[j][0] = 0.25 * ((1.0 + 3.0 * s2) * w[j][0] + (1.0 - s2) * others);
                out[j][1] = f * w[j][1];
                out[j][2] = f * w[j][2];
                out[j][3] = s * w[j][3] + 0.25 * (f - s) * kZzzSign[j] * t333;
            }
            break;
        }
        case ChannelKind::PhaseFlip: {
            const double a = 2.0 * s - 1.0;
            const double f = a * a * a;
            for (auto &b : out.w) {
                b[1] *= f;
                b[2] *= f;
            }
            break;
        }
    }
    return out;
}

/// Factor multiplying every transverse block coordinate.
inline double coherence_factor(ChannelKind kind, const ChannelParam &param) {
    const double s = param.survival();
    switch (kind) {
        case ChannelKind::PhaseDamping:
        case ChannelKind::Depolarizing: return s * s * s;
        case ChannelKind::PhaseFlip: return (2.0 * s - 1.0) * (2.0 * s - 1.0) * (2.0 * s - 1.0);
    }
    return 0.0;
}

}  // namespace xqfi
