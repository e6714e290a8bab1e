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
#include <map>
#include <random>
#include <vector>

#include "event_log.hpp"

namespace actemb {

/// splitmix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x);

/// Folds `words` into one seed: h = splitmix64(h ^ word) starting from h = 0.
std::uint64_t mix_seed(std::initializer_list<std::uint64_t> words);

/// Uniform integer in [0, bound) by rejection; independent of the standard
/// library's distribution implementation.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

/// Replacement classes: `phi` maps each new activity to the original it
/// replaced, `psi` maps each replaced original to its w new activities (ascending).
struct ClassAssignment {
    std::map<ActivityId, ActivityId> phi;
    std::map<ActivityId, std::vector<ActivityId>> psi;
};

struct GroundTruthParams {
    std::size_t r = 0;
    int w = 0;
    std::size_t sample_index = 0;
    std::uint64_t seed = 0;
};

/// A derived log whose alphabet extends the original one: original ids are kept
/// and the new activities "<label>__k" are appended.
struct GroundTruthLog {
    EventLog log;
    ClassAssignment classes;
    GroundTruthParams params;
};

/// Replaces every selected activity by members of its own pool of w new
/// activities. Traces are visited in order; a trace containing x draws one
/// member uniformly from x's current pool and uses it for all of its
/// x-occurrences. Drawn members leave the pool until it empties and is refilled.
GroundTruthLog generate_ground_truth_log(const EventLog& log, std::vector<ActivityId> selected,
                                         int w, std::uint64_t seed, std::size_t sample_index = 0);

/// Maps every new activity back through phi.
EventLog reconstruct_original(const GroundTruthLog& gt, const EventLog& original);

struct BenchmarkJob {
    std::size_t r = 0;
    int w = 0;
    std::vector<ActivityId> selected;
    std::size_t sample_index = 0;
    std::uint64_t seed = 0;
};

struct BenchmarkPlan {
    std::vector<BenchmarkJob> jobs;
};

inline constexpr std::size_t kMaxReplaced = 10;
inline constexpr int kMinPool = 2;
inline constexpr int kMaxPool = 5;

/// n choose k, saturating at `cap` + 1.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

/// All (r, w) combinations with r in 1..min(|A_L|, 10) and w in 2..5. When at
/// most `samples` r-subsets exist they are all listed in lexicographic order,
/// otherwise `samples` distinct subsets are drawn. Job seeds are
/// mix_seed({master, r, w, sample_index}).
BenchmarkPlan enumerate_benchmark_plan(const EventLog& log, std::size_t samples,
                                       std::uint64_t master_seed);

/// {"new_label": "original_label", ...}
void write_class_json(std::ostream& out, const GroundTruthLog& gt);

}  // namespace actemb
