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

#include "groundtruth.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <string>

#include <json.hpp>

#include "error.hpp"

namespace actemb {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::initializer_list<std::uint64_t> words) {
    std::uint64_t h = 0;
    for (auto w : words) h = splitmix64(h ^ w);
    return h;
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) fail(ErrorCode::Parameter, "draw bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t x = rng();
        if (x >= threshold) return x % bound;
    }
}

GroundTruthLog generate_ground_truth_log(const EventLog& log, std::vector<ActivityId> selected,
                                         int w, std::uint64_t seed, std::size_t sample_index) {
    if (log.empty()) fail(ErrorCode::EmptyLog, "empty log");
    if (w < 2) fail(ErrorCode::Parameter, "pool size w must be >= 2");
    if (selected.empty()) fail(ErrorCode::Parameter, "no activities selected");
    std::sort(selected.begin(), selected.end());
    if (std::adjacent_find(selected.begin(), selected.end()) != selected.end()) {
        fail(ErrorCode::Parameter, "selected activities contain duplicates");
    }

    const Alphabet& original = log.alphabet();
    std::vector<bool> present(original.size(), false);
    for (const auto& trace : log.traces()) {
        for (ActivityId a : trace) present[a] = true;
    }

    GroundTruthLog gt;
    gt.params = {selected.size(), w, sample_index, seed};
    Alphabet alphabet = original;
    std::vector<std::size_t> slot(original.size(), selected.size());
    for (std::size_t s = 0; s < selected.size(); ++s) {
        ActivityId x = selected[s];
        if (x == kPad || x >= original.size() || !present[x]) {
            fail(ErrorCode::Parameter, "selected activity " + std::to_string(x) +
                                           " does not occur in the log");
        }
        slot[x] = s;
        auto& members = gt.classes.psi[x];
        for (int k = 1; k <= w; ++k) {
            std::string label = original.label(x) + "__" + std::to_string(k);
            if (alphabet.find(label)) {
                fail(ErrorCode::Data, "replacement label '" + label + "' already exists");
            }
            ActivityId id = alphabet.intern(label);
            members.push_back(id);
            gt.classes.phi[id] = x;
        }
    }

    std::mt19937_64 rng(seed);
    std::vector<std::vector<ActivityId>> pools(selected.size());
    std::vector<ActivityId> chosen(selected.size(), kPad);
    std::vector<Trace> traces;
    traces.reserve(log.traces().size());
    for (const auto& trace : log.traces()) {
        std::fill(chosen.begin(), chosen.end(), kPad);
        for (ActivityId a : trace) {
            if (slot[a] < selected.size()) chosen[slot[a]] = a;
        }
        // Draw in ascending order of the selected ids so the stream is reproducible.
        for (std::size_t s = 0; s < selected.size(); ++s) {
            if (chosen[s] == kPad) continue;
            auto& pool = pools[s];
            if (pool.empty()) pool = gt.classes.psi[selected[s]];
            auto pick = static_cast<std::ptrdiff_t>(draw_below(rng, pool.size()));
            chosen[s] = pool[static_cast<std::size_t>(pick)];
            pool.erase(pool.begin() + pick);
        }
        Trace out = trace;
        for (ActivityId& a : out) {
            if (slot[a] < selected.size()) a = chosen[slot[a]];
        }
        traces.push_back(std::move(out));
    }
    gt.log = EventLog(std::move(alphabet), std::move(traces));
    return gt;
}

EventLog reconstruct_original(const GroundTruthLog& gt, const EventLog& original) {
    std::vector<Trace> traces = gt.log.traces();
    for (auto& trace : traces) {
        for (ActivityId& a : trace) {
            if (auto it = gt.classes.phi.find(a); it != gt.classes.phi.end()) a = it->second;
        }
    }
    return EventLog(original.alphabet(), std::move(traces));
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    // C(n, i) grows with i up to n/2, so once past the cap it stays past it.
    unsigned __int128 value = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        value = value * (n - k + i) / i;
        if (value > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(value);
}

namespace {

constexpr std::uint64_t kSubsetStream = ~std::uint64_t{0};

void all_subsets(const std::vector<ActivityId>& items, std::size_t r,
                 std::vector<std::vector<ActivityId>>& out) {
    std::vector<std::size_t> idx(r);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    const std::size_t n = items.size();
    for (;;) {
        auto& subset = out.emplace_back();
        for (auto i : idx) subset.push_back(items[i]);
        std::size_t pos = r;
        while (pos > 0 && idx[pos - 1] == n - r + pos - 1) --pos;
        if (pos == 0) return;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<std::vector<ActivityId>> sample_subsets(const std::vector<ActivityId>& items,
                                                    std::size_t r, std::size_t count,
                                                    std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<std::vector<ActivityId>> seen;
    std::vector<std::vector<ActivityId>> out;
    std::vector<ActivityId> scratch;
    while (out.size() < count) {
        scratch = items;
        for (std::size_t i = 0; i < r; ++i) {
            auto j = i + static_cast<std::size_t>(draw_below(rng, scratch.size() - i));
            std::swap(scratch[i], scratch[j]);
        }
        std::vector<ActivityId> subset(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(r));
        std::sort(subset.begin(), subset.end());
        if (seen.insert(subset).second) out.push_back(std::move(subset));
    }
    return out;
}

}  // namespace

BenchmarkPlan enumerate_benchmark_plan(const EventLog& log, std::size_t samples,
                                       std::uint64_t master_seed) {
    if (log.empty()) fail(ErrorCode::EmptyLog, "empty log");
    if (samples == 0) fail(ErrorCode::Parameter, "samples per (r, w) must be >= 1");

    std::vector<bool> present(log.alphabet().size(), false);
    for (const auto& trace : log.traces()) {
        for (ActivityId a : trace) present[a] = true;
    }
    std::vector<ActivityId> activities;
    for (ActivityId a = 1; a < present.size(); ++a) {
        if (present[a]) activities.push_back(a);
    }

    BenchmarkPlan plan;
    std::set<std::uint64_t> seeds;
    const std::size_t max_r = std::min(activities.size(), kMaxReplaced);
    for (std::size_t r = 1; r <= max_r; ++r) {
        for (int w = kMinPool; w <= kMaxPool; ++w) {
            std::vector<std::vector<ActivityId>> subsets;
            if (binomial_capped(activities.size(), r, samples) <= samples) {
                all_subsets(activities, r, subsets);
            } else {
                subsets = sample_subsets(activities, r, samples,
                                         mix_seed({master_seed, r, static_cast<std::uint64_t>(w),
                                                   kSubsetStream}));
            }
            for (std::size_t i = 0; i < subsets.size(); ++i) {
                BenchmarkJob job{r, w, std::move(subsets[i]), i,
                                 mix_seed({master_seed, r, static_cast<std::uint64_t>(w), i})};
                if (!seeds.insert(job.seed).second) {
                    fail(ErrorCode::Data, "job seed collision; choose another master seed");
                }
                plan.jobs.push_back(std::move(job));
            }
        }
    }
    return plan;
}

void write_class_json(std::ostream& out, const GroundTruthLog& gt) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [id, original] : gt.classes.phi) {
        j[gt.log.alphabet().label(id)] = gt.log.alphabet().label(original);
    }
    out << j.dump(2) << '\n';
}

}  // namespace actemb
