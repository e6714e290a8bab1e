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

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bench.hpp"
#include "count_matrices.hpp"
#include "event_log.hpp"
#include "intrinsic.hpp"
#include "pipeline.hpp"
#include "similarity.hpp"

namespace actemb {

inline constexpr int kSchemaVersion = 1;

struct ScoreReport {
    std::string log_id;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    IntrinsicRun run;
};

struct AggregateReport {
    std::vector<AggregateRow> rows;
};

struct BenchReport {
    std::string log_id;
    int repetitions = 0;
    unsigned threads = 1;
    std::size_t activity_count = 0;
    std::vector<TimingRecord> records;
};

using Report = std::variant<ScoreReport, AggregateReport, BenchReport>;

/// Serialises with fixed key order and number formatting; identical inputs
/// give identical bytes. `format` is "json" or "csv".
void write_report(std::ostream& out, const Report& report, std::string_view format);
void export_report(const Report& report, const std::filesystem::path& path,
                   std::string_view format);

/// Reads the "scores" and "failures" arrays of a score report written by
/// write_report(..., "json").
ScoreReport read_score_report(std::istream& in);

/// Upper bound on distinct contexts: (|A| + 1)^(n - 1), saturating.
std::uint64_t context_dimension_bound(std::size_t activity_count, int window);

void write_stats_json(std::ostream& out, const LogStats& stats);
void write_embedding_meta(std::ostream& out, const EmbeddingMatrix& matrix,
                          const OccurrenceTable& table);
void write_distance_meta(std::ostream& out, const PairwiseSimilarity& sim,
                         const MethodConfig& config);

/// Opens `path` for writing or throws Error(Io) naming the path.
std::ofstream open_output(const std::filesystem::path& path);
std::string read_file(const std::filesystem::path& path);

}  // namespace actemb
