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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace actemb {

/// Dense index into an Alphabet. Id 0 is always the padding symbol.
using ActivityId = std::uint32_t;

inline constexpr ActivityId kPad = 0;
inline constexpr std::string_view kPadLabel = "__PAD__";

/// Bidirectional label <-> id map. PAD is registered on construction.
class Alphabet {
public:
    Alphabet();

    /// Returns the id of `label`, registering it if unseen. Throws on "__PAD__".
    ActivityId intern(std::string_view label);
    std::optional<ActivityId> find(std::string_view label) const;
    const std::string& label(ActivityId id) const;

    /// Number of registered ids including PAD.
    std::size_t size() const noexcept { return labels_.size(); }
    /// Number of real activities (PAD excluded).
    std::size_t activity_count() const noexcept { return labels_.size() - 1; }

    bool operator==(const Alphabet& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, ActivityId> ids_;
};

using Trace = std::vector<ActivityId>;

/// Ordered list of non-empty traces over an alphabet. Immutable once built.
class EventLog {
public:
    EventLog() = default;
    EventLog(Alphabet alphabet, std::vector<Trace> traces);

    /// Builds a log from label sequences, interning labels in trace order.
    static EventLog from_labels(const std::vector<std::vector<std::string>>& traces);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<Trace>& traces() const noexcept { return traces_; }
    bool empty() const noexcept { return traces_.empty(); }
    std::size_t event_count() const noexcept { return events_; }

    /// Trace contents rendered back to labels.
    std::vector<std::vector<std::string>> labeled_traces() const;

    bool operator==(const EventLog& other) const {
        return alphabet_ == other.alphabet_ && traces_ == other.traces_;
    }

private:
    Alphabet alphabet_;
    std::vector<Trace> traces_;
    std::size_t events_ = 0;
};

struct RankEntry {
    std::size_t rank = 0;  // 1-based
    ActivityId activity = kPad;
    std::size_t frequency = 0;
    double relative_frequency = 0.0;
};

struct LogStats {
    std::size_t activity_count = 0;
    std::size_t trace_count = 0;
    std::size_t variant_count = 0;
    double variant_ratio = 0.0;
    double avg_trace_length = 0.0;
    std::size_t event_count = 0;
    std::vector<RankEntry> rank_frequency;
};

struct CsvColumns {
    std::string case_column = "case";
    std::string activity_column = "activity";
    std::optional<std::string> timestamp_column;
};

EventLog parse_csv(std::string_view text, const CsvColumns& columns);
EventLog parse_xes(std::string_view text);

/// Writes the log as "case,activity" rows with 1-based trace indices as case ids.
void write_canonical_csv(std::ostream& out, const EventLog& log);

LogStats compute_stats(const EventLog& log);

/// rank,activity,frequency,relative_frequency
void write_stats_csv(std::ostream& out, const EventLog& log, const LogStats& stats);

/// Seconds since the Unix epoch for an ISO-8601 date or date-time.
std::optional<double> parse_iso8601(std::string_view text);

}  // namespace actemb
