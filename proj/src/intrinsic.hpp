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
#include <string>
#include <vector>

#include "groundtruth.hpp"
#include "pipeline.hpp"
#include "similarity.hpp"

namespace actemb {

struct IntrinsicScores {
    double comp = 0.0;
    double nn = 0.0;
    double prec = 0.0;
    double tri = 0.0;
};

// Scoring conventions shared by all four metrics:
//  - candidates for a class member are every other activity in `sim`,
//    unreplaced originals included;
//  - a class with an empty out-of-class set scores 1 on the ranking metrics.

/// Mean over classes of the mean min-max-normalised similarity over unordered
/// in-class pairs. Normalisation spans all off-diagonal cells; a constant
/// matrix normalises to 0.
double score_compactness(const PairwiseSimilarity& sim, const ClassAssignment& classes);

/// Fraction of members whose most similar candidate is in-class. Any
/// out-of-class candidate tied at the maximum makes the member fail.
double score_nearest_neighbor(const PairwiseSimilarity& sim, const ClassAssignment& classes);

/// In-class share of each member's top w-1 candidates, ranked by similarity
/// descending and ActivityId ascending.
double score_precision_at_k(const PairwiseSimilarity& sim, const ClassAssignment& classes);

/// For ordered in-class pairs (a, b): share of out-of-class c with
/// s(a, c) < s(a, b), strictly.
double score_triplet(const PairwiseSimilarity& sim, const ClassAssignment& classes);

IntrinsicScores score_all(const PairwiseSimilarity& sim, const ClassAssignment& classes);

struct ScoreRecord {
    std::string log_id;
    MethodConfig config;
    std::size_t r = 0;
    int w = 0;
    std::size_t sample = 0;
    IntrinsicScores scores;
};

struct FailureRecord {
    std::string log_id;
    MethodConfig config;
    std::size_t r = 0;
    int w = 0;
    std::size_t sample = 0;
    std::string message;
};

struct AggregateRow {
    MethodConfig config;
    std::size_t logs = 0;
    std::size_t jobs = 0;
    std::size_t failed = 0;
    IntrinsicScores mean;
};

/// Per method config: mean over each log's jobs, then unweighted mean over logs.
/// Rows are ordered by config. Failures only contribute to the `failed` count.
std::vector<AggregateRow> aggregate_scores(const std::vector<ScoreRecord>& scores,
                                           const std::vector<FailureRecord>& failures = {});

struct IntrinsicOptions {
    std::string log_id = "log";
    std::size_t samples = 5;
    std::uint64_t seed = 42;
    unsigned threads = 1;
};

struct IntrinsicRun {
    std::size_t job_count = 0;
    std::vector<ScoreRecord> scores;
    std::vector<FailureRecord> failures;
};

/// Runs the full ground-truth plan for every config. Output order is plan order,
/// then config order, independent of `threads`.
IntrinsicRun run_intrinsic(const EventLog& log, const std::vector<MethodConfig>& configs,
                           const IntrinsicOptions& options);

}  // namespace actemb
