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

// Werner-GHZ state under phase damping: QFI and skew information for q,
// checked against the full-matrix oracle.

#include <cstdio>

#include "xqfi/ghz.hpp"
#include "xqfi/oracle.hpp"

int main() {
    const double q = 0.5;
    std::printf("%5s %14s %14s %14s %12s\n", "p", "qfi", "qfi(oracle)", "skew", "concurrence");
    for (int k = 0; k <= 10; ++k) {
        const double p = k / 10.0;
        const auto param = xqfi::ChannelParam::make(p);
        const auto m = xqfi::pipeline_metrics({q, p, xqfi::ChannelKind::PhaseDamping});
        const double oracle = xqfi::qfi_eigen_oracle(xqfi::ghz_kraus_family(xqfi::ChannelKind::PhaseDamping, param), q);
        std::printf("%5.2f %14.10f %14.10f %14.10f %12.8f\n", p, m.qfi, oracle, m.skew, m.concurrence);
    }
}
