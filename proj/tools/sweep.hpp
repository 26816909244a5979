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

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "xqfi/channels.hpp"
#include "xqfi/ghz.hpp"

namespace xqfi::cli {

/// Invalid user input; `field` names the offending option.
class SpecError : public std::invalid_argument {
   public:
    SpecError(std::string field, const std::string &what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
    const std::string &field() const noexcept { return field_; }

   private:
    std::string field_;
};

struct PGrid {
    double start = 0.0;
    double stop = 1.0;
    int count = 11;

    /// Inclusive linear grid.
    std::vector<double> values() const {
        std::vector<double> v(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = start + (stop - start) * i / (count - 1);
        v.back() = stop;
        return v;
    }
};

enum class Format { Csv, Json };

struct SweepSpec {
    ChannelKind channel = ChannelKind::PhaseDamping;
    bool qfi = true;
    bool skew = true;
    bool concurrence = true;
    std::vector<double> q_values{0.5};
    PGrid p_grid;
    Format format = Format::Csv;

    void validate() const {
        if (!qfi && !skew && !concurrence) throw SpecError("metrics", "at least one metric required");
        if (q_values.empty()) throw SpecError("q", "at least one value required");
        for (double q : q_values)
            if (!(q >= kGhzQMin && q <= 1.0)) throw SpecError("q", "value " + std::to_string(q) + " outside [1e-3, 1]");
        if (!(p_grid.start >= 0.0 && p_grid.start <= 1.0)) throw SpecError("p", "start outside [0, 1]");
        if (!(p_grid.stop >= 0.0 && p_grid.stop <= 1.0)) throw SpecError("p", "stop outside [0, 1]");
        if (p_grid.count < 2) throw SpecError("p", "count must be at least 2");
    }
};

inline double parse_number(const std::string &field, const std::string &text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        throw SpecError(field, "cannot parse '" + text + "'");
    }
    if (used != text.size()) throw SpecError(field, "cannot parse '" + text + "'");
    return v;
}

inline std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

inline std::vector<double> parse_q_list(const std::string &text) {
    std::vector<double> out;
    for (const auto &item : split(text, ',')) out.push_back(parse_number("q", item));
    return out;
}

/// start:stop:count
inline PGrid parse_p_grid(const std::string &text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw SpecError("p", "expected start:stop:count, got '" + text + "'");
    PGrid g{parse_number("p", parts[0]), parse_number("p", parts[1]), 0};
    const double count = parse_number("p", parts[2]);
    if (count != static_cast<double>(static_cast<int>(count))) throw SpecError("p", "count must be an integer");
    g.count = static_cast<int>(count);
    return g;
}

inline void parse_metrics(const std::string &text, SweepSpec &spec) {
    spec.qfi = spec.skew = spec.concurrence = false;
    for (const auto &m : split(text, ',')) {
        if (m == "qfi") spec.qfi = true;
        else if (m == "skew") spec.skew = true;
        else if (m == "concurrence") spec.concurrence = true;
        else throw SpecError("metrics", "unknown metric '" + m + "'");
    }
}

inline ChannelKind parse_channel_or_throw(const std::string &text) {
    if (auto k = parse_channel(text)) return *k;
    throw SpecError("channel", "unknown channel '" + text + "' (pdc, dpc, pfc)");
}

inline std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct SweepRow {
    double q;
    double p;
    GhzMetrics m;
};

inline std::vector<SweepRow> sweep_rows(const SweepSpec &spec) {
    spec.validate();
    std::vector<SweepRow> rows;
    for (double q : spec.q_values)
        for (double p : spec.p_grid.values()) rows.push_back({q, p, pipeline_metrics({q, p, spec.channel})});
    return rows;
}

inline void run_sweep(const SweepSpec &spec, std::ostream &out) {
    const auto rows = sweep_rows(spec);
    const std::string channel(short_name(spec.channel));
    if (spec.format == Format::Csv) {
        out << "channel,q,p,qfi,skew,concurrence\n";
        for (const auto &r : rows) {
            out << channel << ',' << format_value(r.q) << ',' << format_value(r.p) << ','
                << (spec.qfi ? format_value(r.m.qfi) : "") << ',' << (spec.skew ? format_value(r.m.skew) : "") << ','
                << (spec.concurrence ? format_value(r.m.concurrence) : "") << '\n';
        }
        return;
    }
    const auto rounded = [](bool on, double v) -> nlohmann::ordered_json {
        if (!on) return nullptr;
        return std::strtod(format_value(v).c_str(), nullptr);
    };
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
        doc.push_back({{"channel", channel},
                       {"q", rounded(true, r.q)},
                       {"p", rounded(true, r.p)},
                       {"qfi", rounded(spec.qfi, r.m.qfi)},
                       {"skew", rounded(spec.skew, r.m.skew)},
                       {"concurrence", rounded(spec.concurrence, r.m.concurrence)}});
    }
    out << doc.dump(2) << '\n';
}

}  // namespace xqfi::cli
