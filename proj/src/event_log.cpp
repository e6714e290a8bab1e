// Copyright 2026 the actemb authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "event_log.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "csv.hpp"
#include "error.hpp"

namespace actemb {

Alphabet::Alphabet() {
    labels_.emplace_back(kPadLabel);
    ids_.emplace(std::string(kPadLabel), kPad);
}

ActivityId Alphabet::intern(std::string_view label) {
    if (label == kPadLabel) {
        fail(ErrorCode::Format, "activity label '" + std::string(label) + "' is reserved");
    }
    auto it = ids_.find(std::string(label));
    if (it != ids_.end()) return it->second;
    auto id = static_cast<ActivityId>(labels_.size());
    labels_.emplace_back(label);
    ids_.emplace(std::string(label), id);
    return id;
}

std::optional<ActivityId> Alphabet::find(std::string_view label) const {
    auto it = ids_.find(std::string(label));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

const std::string& Alphabet::label(ActivityId id) const {
    if (id >= labels_.size()) {
        fail(ErrorCode::Parameter, "activity id " + std::to_string(id) + " out of range");
    }
    return labels_[id];
}

EventLog::EventLog(Alphabet alphabet, std::vector<Trace> traces)
    : alphabet_(std::move(alphabet)), traces_(std::move(traces)) {
    for (std::size_t t = 0; t < traces_.size(); ++t) {
        const auto& trace = traces_[t];
        if (trace.empty()) {
            fail(ErrorCode::Data, "trace " + std::to_string(t + 1) + " is empty");
        }
        for (ActivityId a : trace) {
            if (a == kPad || a >= alphabet_.size()) {
                fail(ErrorCode::Data, "trace " + std::to_string(t + 1) +
                                          " holds an unregistered activity id");
            }
        }
        events_ += trace.size();
    }
}

EventLog EventLog::from_labels(const std::vector<std::vector<std::string>>& traces) {
    Alphabet alphabet;
    std::vector<Trace> out;
    out.reserve(traces.size());
    for (const auto& labels : traces) {
        Trace trace;
        trace.reserve(labels.size());
        for (const auto& l : labels) trace.push_back(alphabet.intern(l));
        out.push_back(std::move(trace));
    }
    return EventLog(std::move(alphabet), std::move(out));
}

std::vector<std::vector<std::string>> EventLog::labeled_traces() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(traces_.size());
    for (const auto& trace : traces_) {
        auto& row = out.emplace_back();
        row.reserve(trace.size());
        for (ActivityId a : trace) row.push_back(alphabet_.label(a));
    }
    return out;
}

std::optional<double> parse_iso8601(std::string_view s) {
    auto number = [&](std::size_t pos, std::size_t len, int& value) {
        if (pos + len > s.size()) return false;
        auto [p, ec] = std::from_chars(s.data() + pos, s.data() + pos + len, value);
        return ec == std::errc() && p == s.data() + pos + len;
    };
    int year = 0, month = 0, day = 0;
    if (!number(0, 4, year) || s.size() < 10 || s[4] != '-' || !number(5, 2, month) ||
        s[7] != '-' || !number(8, 2, day)) {
        return std::nullopt;
    }
    std::chrono::year_month_day ymd{std::chrono::year{year},
                                    std::chrono::month{static_cast<unsigned>(month)},
                                    std::chrono::day{static_cast<unsigned>(day)}};
    if (!ymd.ok()) return std::nullopt;
    double seconds = static_cast<double>(
        std::chrono::sys_days{ymd}.time_since_epoch().count()) * 86400.0;

    std::size_t pos = 10;
    if (pos == s.size()) return seconds;
    if (s[pos] != 'T' && s[pos] != ' ') return std::nullopt;
    ++pos;
    int hour = 0, minute = 0, second = 0;
    if (!number(pos, 2, hour) || pos + 2 >= s.size() || s[pos + 2] != ':' ||
        !number(pos + 3, 2, minute)) {
        return std::nullopt;
    }
    pos += 5;
    if (pos < s.size() && s[pos] == ':') {
        if (!number(pos + 1, 2, second)) return std::nullopt;
        pos += 3;
    }
    if (hour > 23 || minute > 59 || second > 60) return std::nullopt;
    seconds += hour * 3600.0 + minute * 60.0 + second;
    if (pos < s.size() && (s[pos] == '.' || s[pos] == ',')) {
        std::size_t start = ++pos;
        double scale = 0.1;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            seconds += (s[pos] - '0') * scale;
            scale /= 10.0;
            ++pos;
        }
        if (pos == start) return std::nullopt;
    }
    if (pos == s.size()) return seconds;
    if (s[pos] == 'Z' && pos + 1 == s.size()) return seconds;
    if (s[pos] == '+' || s[pos] == '-') {
        int sign = s[pos] == '+' ? 1 : -1;
        int oh = 0, om = 0;
        if (!number(pos + 1, 2, oh)) return std::nullopt;
        std::size_t rest = pos + 3;
        if (rest < s.size() && s[rest] == ':') ++rest;
        if (rest < s.size()) {
            if (!number(rest, 2, om) || rest + 2 != s.size()) return std::nullopt;
        }
        return seconds - sign * (oh * 3600.0 + om * 60.0);
    }
    return std::nullopt;
}

namespace {

std::size_t column_index(const std::vector<std::string>& header, const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) fail(ErrorCode::Format, "missing column '" + name + "'");
    return static_cast<std::size_t>(it - header.begin());
}

// Interns labels in trace order so identical trace lists always yield identical ids.
EventLog build_log(const std::vector<std::vector<std::string>>& traces) {
    if (traces.empty()) fail(ErrorCode::EmptyLog, "empty log");
    return EventLog::from_labels(traces);
}

}  // namespace

EventLog parse_csv(std::string_view text, const CsvColumns& columns) {
    auto rows = csv::parse(text);
    if (rows.empty()) fail(ErrorCode::EmptyLog, "empty log");
    const auto& header = rows.front();
    std::size_t case_idx = column_index(header, columns.case_column);
    std::size_t act_idx = column_index(header, columns.activity_column);
    std::optional<std::size_t> time_idx;
    if (columns.timestamp_column) time_idx = column_index(header, *columns.timestamp_column);

    struct Event {
        std::string label;
        double time;
    };
    std::vector<std::vector<Event>> cases;
    std::unordered_map<std::string, std::size_t> case_slot;
    std::size_t needed = std::max(case_idx, act_idx);
    if (time_idx) needed = std::max(needed, *time_idx);

    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() <= needed) {
            fail(ErrorCode::Format, "row " + std::to_string(r + 1) + " has " +
                                        std::to_string(row.size()) + " fields, expected " +
                                        std::to_string(header.size()));
        }
        double time = 0.0;
        if (time_idx) {
            auto parsed = parse_iso8601(row[*time_idx]);
            if (!parsed) {
                fail(ErrorCode::Format, "row " + std::to_string(r + 1) +
                                            ": unparseable timestamp '" + row[*time_idx] + "'");
            }
            time = *parsed;
        }
        auto [it, inserted] = case_slot.emplace(row[case_idx], cases.size());
        if (inserted) cases.emplace_back();
        cases[it->second].push_back({row[act_idx], time});
    }

    std::vector<std::vector<std::string>> traces;
    traces.reserve(cases.size());
    for (auto& events : cases) {
        if (time_idx) {
            std::stable_sort(events.begin(), events.end(),
                             [](const Event& a, const Event& b) { return a.time < b.time; });
        }
        auto& trace = traces.emplace_back();
        trace.reserve(events.size());
        for (auto& e : events) trace.push_back(std::move(e.label));
    }
    return build_log(traces);
}

EventLog parse_xes(std::string_view text) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        std::istringstream in{std::string(text)};
        pt::read_xml(in, tree);
    } catch (const pt::xml_parser_error& e) {
        fail(ErrorCode::Format, std::string("malformed XES: ") + e.what());
    }
    auto root = tree.get_child_optional("log");
    if (!root) fail(ErrorCode::Format, "XES document has no <log> root element");

    std::vector<std::vector<std::string>> traces;
    std::size_t trace_index = 0;
    for (const auto& [name, trace] : *root) {
        if (name != "trace") continue;
        ++trace_index;
        std::vector<std::string> labels;
        for (const auto& [ename, event] : trace) {
            if (ename != "event") continue;
            std::optional<std::string> label;
            for (const auto& [aname, attr] : event) {
                if (aname == "string" &&
                    attr.get<std::string>("<xmlattr>.key", "") == "concept:name") {
                    if (auto v = attr.get_optional<std::string>("<xmlattr>.value")) label = *v;
                    break;
                }
            }
            if (!label) {
                fail(ErrorCode::Format, "trace " + std::to_string(trace_index) +
                                            ": event " + std::to_string(labels.size() + 1) +
                                            " has no concept:name");
            }
            labels.push_back(std::move(*label));
        }
        if (!labels.empty()) traces.push_back(std::move(labels));
    }
    return build_log(traces);
}

void write_canonical_csv(std::ostream& out, const EventLog& log) {
    out << "case,activity\n";
    std::size_t case_id = 0;
    for (const auto& trace : log.traces()) {
        ++case_id;
        for (ActivityId a : trace) {
            out << case_id << ',' << csv::quote(log.alphabet().label(a)) << '\n';
        }
    }
}

LogStats compute_stats(const EventLog& log) {
    if (log.empty()) fail(ErrorCode::EmptyLog, "empty log");
    LogStats stats;
    stats.trace_count = log.traces().size();
    stats.event_count = log.event_count();

    std::vector<std::size_t> counts(log.alphabet().size(), 0);
    std::set<Trace> variants;
    for (const auto& trace : log.traces()) {
        for (ActivityId a : trace) ++counts[a];
        variants.insert(trace);
    }
    stats.variant_count = variants.size();
    stats.variant_ratio =
        static_cast<double>(stats.variant_count) / static_cast<double>(stats.trace_count);
    stats.avg_trace_length =
        static_cast<double>(stats.event_count) / static_cast<double>(stats.trace_count);

    std::vector<ActivityId> order;
    for (ActivityId a = 1; a < counts.size(); ++a) {
        if (counts[a] > 0) order.push_back(a);
    }
    stats.activity_count = order.size();
    // Ties keep ascending id order.
    std::stable_sort(order.begin(), order.end(),
                     [&](ActivityId x, ActivityId y) { return counts[x] > counts[y]; });
    const auto n = static_cast<double>(stats.event_count);
    for (std::size_t i = 0; i < order.size(); ++i) {
        stats.rank_frequency.push_back(
            {i + 1, order[i], counts[order[i]], static_cast<double>(counts[order[i]]) / n});
    }
    return stats;
}

void write_stats_csv(std::ostream& out, const EventLog& log, const LogStats& stats) {
    out << "rank,activity,frequency,relative_frequency\n";
    char buf[32];
    for (const auto& e : stats.rank_frequency) {
        std::snprintf(buf, sizeof buf, "%.17g", e.relative_frequency);
        out << e.rank << ',' << csv::quote(log.alphabet().label(e.activity)) << ','
            << e.frequency << ',' << buf << '\n';
    }
}

}  // namespace actemb
