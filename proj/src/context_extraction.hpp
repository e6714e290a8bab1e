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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "event_log.hpp"

namespace actemb {

enum class ContextKind { Multiset, Sequence };

std::string_view to_string(ContextKind kind);
ContextKind parse_context_kind(std::string_view text);

using ContextId = std::uint32_t;

/// Aggregated (center activity, context) counts of one log for one window size
/// and context kind.
///
/// Context ids follow first appearance in a scan of the log (trace order, then
/// position), so column order is reproducible. Per-activity entries are kept
/// sorted by context id.
class OccurrenceTable {
public:
    struct Entry {
        ContextId context;
        std::uint64_t count;

        bool operator==(const Entry&) const = default;
    };

    int window_size() const noexcept { return window_size_; }
    ContextKind kind() const noexcept { return kind_; }
    std::size_t context_width() const noexcept { return static_cast<std::size_t>(window_size_ - 1); }
    std::size_t context_count() const noexcept { return context_totals_.size(); }
    std::size_t alphabet_size() const noexcept { return activity_totals_.size(); }
    std::uint64_t total_events() const noexcept { return total_events_; }

    /// Canonical symbols of a context (sorted for multisets).
    std::span<const ActivityId> context(ContextId id) const;
    std::uint64_t context_total(ContextId id) const { return context_totals_.at(id); }
    /// #(a); zero for PAD and for registered activities that never occur.
    std::uint64_t activity_total(ActivityId a) const { return activity_totals_.at(a); }
    std::span<const Entry> entries(ActivityId a) const;
    std::uint64_t count(ActivityId a, ContextId c) const;

    /// Activities with #(a) > 0, ascending.
    std::vector<ActivityId> activities() const;

    bool operator==(const OccurrenceTable&) const = default;

private:
    friend OccurrenceTable extract_occurrences(const EventLog&, int, ContextKind, unsigned);

    int window_size_ = 0;
    ContextKind kind_ = ContextKind::Multiset;
    std::vector<ActivityId> context_symbols_;
    std::vector<std::uint64_t> context_totals_;
    std::vector<std::uint64_t> activity_totals_;
    std::vector<std::size_t> row_offsets_;
    std::vector<Entry> row_entries_;
    std::uint64_t total_events_ = 0;
};

/// Slides a window of `window_size` over every PAD-padded trace and records each
/// event with its context. Left subwindow holds floor((n-1)/2) symbols, right
/// holds ceil((n-1)/2). `threads` > 1 splits the trace list into chunks; the
/// result is identical to the sequential scan.
OccurrenceTable extract_occurrences(const EventLog& log, int window_size, ContextKind kind,
                                    unsigned threads = 1);

/// "{x,y}" (labels sorted) for multisets, "<x,y>" for sequences.
std::string render_context(const OccurrenceTable& table, ContextId id, const Alphabet& alphabet);

}  // namespace actemb
