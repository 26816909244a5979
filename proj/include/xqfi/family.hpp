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

#pragma once

#include <functional>
#include <utility>

#include "xqfi/linalg_small.hpp"
#include "xqfi/xstate.hpp"

namespace xqfi {

/// A one-parameter curve phi -> XState together with a way to obtain its
/// derivative. Both callables must be re-entrant.
class ParamFamily {
   public:
    using Eval = std::function<XState(double)>;
    using Derivative = std::function<XEntries(double)>;

    enum class Mode { Analytic, FiniteDifference };

    static ParamFamily analytic(Eval eval, Derivative derivative) {
        return ParamFamily(std::move(eval), std::move(derivative), 0.0);
    }

    /// step <= 0 selects default_step(phi) at each evaluation point.
    static ParamFamily finite_difference(Eval eval, double step = 0.0) {
        return ParamFamily(std::move(eval), nullptr, step);
    }

    XState at(double phi) const { return eval_(phi); }

    XEntries derivative(double phi) const {
        if (derivative_) return derivative_(phi);
        const double h = step_ > 0.0 ? step_ : default_step(phi);
        return central_diff([this](double x) { return eval_(x).entries(); }, phi, h);
    }

    Mode mode() const { return derivative_ ? Mode::Analytic : Mode::FiniteDifference; }

   private:
    ParamFamily(Eval eval, Derivative derivative, double step)
        : eval_(std::move(eval)), derivative_(std::move(derivative)), step_(step) {}

    Eval eval_;
    Derivative derivative_;
    double step_;
};

}  // namespace xqfi
