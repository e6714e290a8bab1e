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

#include "context_extraction.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "error.hpp"

namespace actemb {

std::string_view to_string(ContextKind kind) {
    return kind == ContextKind::Multiset ? "mset" : "seq";
}

ContextKind parse_context_kind(std::string_view text) {
    if (text == "mset" || text == "multiset") return ContextKind::Multiset;
    if (text == "seq" || text == "sequence") return ContextKind::Sequence;
    fail(ErrorCode::Parameter, "unknown context kind '" + std::string(text) + "'");
}

std::span<const ActivityId> OccurrenceTable::context(ContextId id) const {
    if (id >= context_count()) fail(ErrorCode::Parameter, "context id out of range");
    return {context_symbols_.data() + id * context_width(), context_width()};
}

std::span<const OccurrenceTable::Entry> OccurrenceTable::entries(ActivityId a) const {
    if (a >= alphabet_size()) return {};
    return {row_entries_.data() + row_offsets_[a], row_offsets_[a + 1] - row_offsets_[a]};
}

std::uint64_t OccurrenceTable::count(ActivityId a, ContextId c) const {
    auto row = entries(a);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, ContextId id) { return e.context < id; });
    return it != row.end() && it->context == c ? it->count : 0;
}

std::vector<ActivityId> OccurrenceTable::activities() const {
    std::vector<ActivityId> out;
    for (ActivityId a = 1; a < activity_totals_.size(); ++a) {
        if (activity_totals_[a] > 0) out.push_back(a);
    }
    return out;
}

namespace {

// Contexts and (activity, context) counts gathered from a contiguous range of
// traces. Local context ids follow first appearance within the range.
struct PartialScan {
    std::vector<std::string> keys;
    std::vector<ActivityId> symbols;
    std::unordered_map<std::uint64_t, std::uint64_t> pair_counts;
};

std::uint64_t pair_key(ActivityId a, ContextId c) {
    return (static_cast<std::uint64_t>(a) << 32) | c;
}

void scan_range(const EventLog& log, std::size_t begin, std::size_t end, int window_size,
                ContextKind kind, PartialScan& out) {
    const std::size_t width = static_cast<std::size_t>(window_size - 1);
    const std::size_t left = width / 2;
    std::unordered_map<std::string, ContextId> local_ids;
    std::vector<ActivityId> ctx(width);
    std::string key;

    for (std::size_t t = begin; t < end; ++t) {
        const auto& trace = log.traces()[t];
        const auto len = static_cast<std::ptrdiff_t>(trace.size());
        auto at = [&](std::ptrdiff_t pos) { return pos < 0 || pos >= len ? kPad : trace[pos]; };
        for (std::ptrdiff_t i = 0; i < len; ++i) {
            std::size_t k = 0;
            for (std::ptrdiff_t j = i - static_cast<std::ptrdiff_t>(left); j < i; ++j) ctx[k++] = at(j);
            for (std::ptrdiff_t j = i + 1; k < width; ++j) ctx[k++] = at(j);
            if (kind == ContextKind::Multiset) std::sort(ctx.begin(), ctx.end());

            key.assign(1, kind == ContextKind::Multiset ? 'm' : 's');
            key.append(reinterpret_cast<const char*>(ctx.data()), width * sizeof(ActivityId));
            auto [it, inserted] = local_ids.try_emplace(key, static_cast<ContextId>(out.keys.size()));
            if (inserted) {
                out.keys.push_back(key);
                out.symbols.insert(out.symbols.end(), ctx.begin(), ctx.end());
            }
            ++out.pair_counts[pair_key(trace[i], it->second)];
        }
    }
}

}  // namespace

OccurrenceTable extract_occurrences(const EventLog& log, int window_size, ContextKind kind,
                                    unsigned threads) {
    if (log.empty()) fail(ErrorCode::EmptyLog, "empty log");
    if (window_size < 2) {
        fail(ErrorCode::Parameter, "window size must be >= 2, got " + std::to_string(window_size));
    }
    const std::size_t width = static_cast<std::size_t>(window_size - 1);
    const std::size_t trace_count = log.traces().size();
    std::size_t chunks = std::clamp<std::size_t>(threads, 1, trace_count);

    std::vector<PartialScan> parts(chunks);
    auto bounds = [&](std::size_t part) { return part * trace_count / chunks; };
    if (chunks == 1) {
        scan_range(log, 0, trace_count, window_size, kind, parts[0]);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(chunks);
        for (std::size_t p = 0; p < chunks; ++p) {
            workers.emplace_back(scan_range, std::cref(log), bounds(p), bounds(p + 1), window_size,
                                 kind, std::ref(parts[p]));
        }
        for (auto& w : workers) w.join();
    }

    // Merging chunks in trace order preserves global first-appearance order.
    OccurrenceTable table;
    table.window_size_ = window_size;
    table.kind_ = kind;
    table.activity_totals_.assign(log.alphabet().size(), 0);
    std::unordered_map<std::string, ContextId> global_ids;
    std::vector<std::vector<OccurrenceTable::Entry>> rows(log.alphabet().size());
    for (auto& part : parts) {
        std::vector<ContextId> remap(part.keys.size());
        for (std::size_t local = 0; local < part.keys.size(); ++local) {
            auto [it, inserted] = global_ids.try_emplace(
                std::move(part.keys[local]), static_cast<ContextId>(table.context_totals_.size()));
            if (inserted) {
                table.context_totals_.push_back(0);
                auto first = part.symbols.begin() + static_cast<std::ptrdiff_t>(local * width);
                table.context_symbols_.insert(table.context_symbols_.end(), first,
                                              first + static_cast<std::ptrdiff_t>(width));
            }
            remap[local] = it->second;
        }
        for (const auto& [key, n] : part.pair_counts) {
            auto a = static_cast<ActivityId>(key >> 32);
            ContextId c = remap[static_cast<ContextId>(key & 0xffffffffu)];
            rows[a].push_back({c, n});
            table.context_totals_[c] += n;
            table.activity_totals_[a] += n;
            table.total_events_ += n;
        }
    }

    table.row_offsets_.assign(rows.size() + 1, 0);
    for (std::size_t a = 0; a < rows.size(); ++a) {
        auto& row = rows[a];
        std::sort(row.begin(), row.end(),
                  [](const auto& x, const auto& y) { return x.context < y.context; });
        // Chunks can report the same (activity, context) pair; fold duplicates.
        std::size_t out = 0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (out > 0 && row[out - 1].context == row[i].context) {
                row[out - 1].count += row[i].count;
            } else {
                row[out++] = row[i];
            }
        }
        row.resize(out);
        table.row_offsets_[a + 1] = table.row_offsets_[a] + out;
        table.row_entries_.insert(table.row_entries_.end(), row.begin(), row.end());
    }
    return table;
}

std::string render_context(const OccurrenceTable& table, ContextId id, const Alphabet& alphabet) {
    std::vector<std::string> labels;
    for (ActivityId a : table.context(id)) labels.push_back(alphabet.label(a));
    bool multiset = table.kind() == ContextKind::Multiset;
    if (multiset) std::sort(labels.begin(), labels.end());
    std::string out = multiset ? "{" : "<";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) out += ',';
        out += labels[i];
    }
    out += multiset ? '}' : '>';
    return out;
}

}  // namespace actemb
