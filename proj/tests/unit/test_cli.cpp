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

#include <sstream>

#include "json.hpp"
#include "sweep.hpp"
#include "validate.hpp"

namespace xqfi::cli {
namespace {

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string line; std::getline(ss, line);) out.push_back(line);
    return out;
}

std::string field_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const SpecError &e) {
        return e.field();
    }
    return "";
}

TEST(Cli, PGridInclusive) {
    const auto g = parse_p_grid("0:0.95:96");
    EXPECT_EQ(g.count, 96);
    const auto v = g.values();
    EXPECT_EQ(v.front(), 0.0);
    EXPECT_EQ(v.back(), 0.95);
    EXPECT_NEAR(v[1], 0.01, 1e-15);
}

TEST(Cli, SpecErrorsNameTheField) {
    EXPECT_EQ(field_of([] { parse_p_grid("0:1"); }), "p");
    EXPECT_EQ(field_of([] { parse_p_grid("0:1:x"); }), "p");
    EXPECT_EQ(field_of([] { parse_q_list("0.1,abc"); }), "q");
    EXPECT_EQ(field_of([] { parse_channel_or_throw("adc"); }), "channel");
    SweepSpec spec;
    EXPECT_EQ(field_of([&] { parse_metrics("qfi,fidelity", spec); }), "metrics");

    spec = SweepSpec{};
    spec.q_values = {0.0};
    EXPECT_EQ(field_of([&] { spec.validate(); }), "q");
    spec = SweepSpec{};
    spec.p_grid = {0.0, 1.5, 5};
    EXPECT_EQ(field_of([&] { spec.validate(); }), "p");
    spec = SweepSpec{};
    spec.p_grid = {0.0, 1.0, 1};
    EXPECT_EQ(field_of([&] { spec.validate(); }), "p");
    EXPECT_EQ(field_of([] { run_validate(1, 1); }), "grid");
}

TEST(Cli, Figure1Csv) {
    SweepSpec spec;
    spec.q_values = parse_q_list("0.1,0.5,0.9");
    spec.p_grid = parse_p_grid("0:0.95:96");
    std::ostringstream out;
    run_sweep(spec, out);
    const auto rows = lines_of(out.str());
    ASSERT_EQ(rows.size(), 289u);
    EXPECT_EQ(rows[0], "channel,q,p,qfi,skew,concurrence");
    EXPECT_EQ(rows[1].rfind("pdc,0.1,0,", 0), 0u);
    EXPECT_EQ(rows[97].rfind("pdc,0.5,0,", 0), 0u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = split(rows[i], ',');
        ASSERT_EQ(cells.size(), 6u);
        for (std::size_t c = 1; c < 6; ++c) EXPECT_TRUE(std::isfinite(std::stod(cells[c])));
    }
}

TEST(Cli, AbsentMetricsLeaveEmptyCells) {
    SweepSpec spec;
    spec.channel = ChannelKind::Depolarizing;
    parse_metrics("concurrence", spec);
    spec.q_values = {0.2};
    spec.p_grid = parse_p_grid("0:1:11");
    std::ostringstream out;
    run_sweep(spec, out);
    const auto rows = lines_of(out.str());
    ASSERT_EQ(rows.size(), 12u);
    double prev = 2.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto cells = split(rows[i], ',');
        ASSERT_EQ(cells.size(), 6u);
        EXPECT_TRUE(cells[3].empty());
        EXPECT_TRUE(cells[4].empty());
        const double c = std::stod(cells[5]);
        EXPECT_LE(c, prev);
        prev = c;
    }
}

TEST(Cli, JsonMirrorsCsv) {
    SweepSpec spec;
    spec.channel = ChannelKind::PhaseFlip;
    parse_metrics("qfi,skew", spec);
    spec.q_values = {0.3, 0.7};
    spec.p_grid = {0.0, 0.5, 3};
    spec.format = Format::Json;
    std::ostringstream out;
    run_sweep(spec, out);
    const auto doc = nlohmann::json::parse(out.str());
    ASSERT_EQ(doc.size(), 6u);
    EXPECT_EQ(doc[0]["channel"], "pfc");
    EXPECT_TRUE(doc[0]["concurrence"].is_null());
    EXPECT_DOUBLE_EQ(doc[4]["p"].get<double>(), 0.25);
    EXPECT_NEAR(doc[0]["qfi"].get<double>(), pipeline_metrics({0.3, 0.0, ChannelKind::PhaseFlip}).qfi, 1e-11);
}

TEST(Cli, ZeroNoiseRowIsUndamped) {
    for (auto k : kAllChannels) {
        const auto a = pipeline_metrics({0.4, 0.0, k});
        const auto b = pipeline_metrics({0.4, 0.0, ChannelKind::PhaseDamping});
        EXPECT_DOUBLE_EQ(a.qfi, b.qfi);
        EXPECT_DOUBLE_EQ(a.skew, b.skew);
        EXPECT_DOUBLE_EQ(a.concurrence, b.concurrence);
    }
}

TEST(Cli, ValidateSmallGridDeterministic) {
    const auto a = run_validate(2, 1), b = run_validate(2, 1);
    EXPECT_EQ(a.report, b.report);
    EXPECT_EQ(a.exit_code, 0) << a.report;
    EXPECT_NE(a.report.find("factor 4.000000"), std::string::npos) << a.report;
    EXPECT_NE(run_validate(2, 2).report, a.report);
}

}  // namespace
}  // namespace xqfi::cli
