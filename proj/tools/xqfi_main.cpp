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

// xqfi command line: sweep, validate, ghz-point.
// Exit codes: 0 success, 1 validation failure, 2 usage error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sweep.hpp"
#include "validate.hpp"
#include "xqfi/crosscheck.hpp"

namespace {

constexpr int kUsageError = 2;

std::string cell(const std::optional<double> &v) { return v ? xqfi::cli::format_value(*v) : "n/a"; }

int ghz_point(const std::string &channel, double q, double p) {
    const xqfi::GhzPoint pt{q, p, xqfi::cli::parse_channel_or_throw(channel)};
    try {
        pt.validate();
    } catch (const xqfi::Error &e) {
        throw xqfi::cli::SpecError(q < xqfi::kGhzQMin || q > 1.0 ? "q" : "p", e.what());
    }
    const auto r = xqfi::crosscheck(pt);
    std::printf("channel=%s q=%s p=%s\n", channel.c_str(), xqfi::cli::format_value(q).c_str(),
                xqfi::cli::format_value(p).c_str());
    std::printf("%-12s %-20s %-20s %-20s %s\n", "metric", "pipeline", "closed-form", "oracle", "verdict");
    for (auto m : xqfi::kAllMetrics) {
        const auto &c = r[m];
        std::printf("%-12s %-20s %-20s %-20s %s\n", std::string(xqfi::to_string(m)).c_str(), cell(c.pipeline).c_str(),
                    cell(c.closed_form).c_str(), cell(c.oracle).c_str(), std::string(xqfi::to_string(c.verdict)).c_str());
    }
    return r.oracle_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum Fisher and skew information for three-qubit X-states"};
    app.require_subcommand(1);

    std::string channel = "pdc", metrics = "qfi,skew,concurrence", q_list = "0.5", p_grid = "0:1:11";
    std::string format = "csv", output;
    auto *sweep = app.add_subcommand("sweep", "Metric sweep over q and p as CSV or JSON");
    sweep->add_option("--channel", channel, "pdc, dpc or pfc");
    sweep->add_option("--metrics", metrics, "Comma list of qfi, skew, concurrence");
    sweep->add_option("--q", q_list, "Comma list of mixing weights in [1e-3, 1]");
    sweep->add_option("--p", p_grid, "Inclusive grid start:stop:count");
    sweep->add_option("--format", format, "csv or json");
    sweep->add_option("-o,--output", output, "Output file (default: stdout)");

    int grid = 9;
    std::uint64_t seed = 42;
    auto *validate = app.add_subcommand("validate", "Oracle equivalence suites and closed-form crosschecks");
    validate->add_option("--grid", grid, "GHZ grid density and corpus scale");
    validate->add_option("--seed", seed, "Random corpus seed");

    std::string point_channel;
    double point_q = 0.0, point_p = 0.0;
    auto *point = app.add_subcommand("ghz-point", "Pipeline, closed form and oracle side by side");
    point->add_option("--channel", point_channel, "pdc, dpc or pfc")->required();
    point->add_option("--q", point_q, "Mixing weight")->required();
    point->add_option("--p", point_p, "Decoherence probability")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*sweep) {
            xqfi::cli::SweepSpec spec;
            spec.channel = xqfi::cli::parse_channel_or_throw(channel);
            xqfi::cli::parse_metrics(metrics, spec);
            spec.q_values = xqfi::cli::parse_q_list(q_list);
            spec.p_grid = xqfi::cli::parse_p_grid(p_grid);
            if (format == "csv") spec.format = xqfi::cli::Format::Csv;
            else if (format == "json") spec.format = xqfi::cli::Format::Json;
            else throw xqfi::cli::SpecError("format", "expected csv or json");
            spec.validate();
            if (output.empty()) {
                xqfi::cli::run_sweep(spec, std::cout);
            } else {
                std::ofstream file(output);
                if (!file) throw xqfi::cli::SpecError("output", "cannot open '" + output + "'");
                xqfi::cli::run_sweep(spec, file);
            }
            return 0;
        }
        if (*validate) {
            const auto result = xqfi::cli::run_validate(grid, seed);
            std::cout << result.report;
            return result.exit_code;
        }
        return ghz_point(point_channel, point_q, point_p);
    } catch (const xqfi::cli::SpecError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const xqfi::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
