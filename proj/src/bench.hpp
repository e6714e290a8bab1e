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

#include "event_log.hpp"
#include "pipeline.hpp"

namespace actemb {

struct TimingRecord {
    MethodConfig config;
    bool ok = true;
    std::string error;
    /// Median over repetitions; the raw samples are kept alongside.
    double embed_seconds = 0.0;
    double distance_seconds = 0.0;
    std::vector<double> embed_samples;
    std::vector<double> distance_samples;
    std::size_t rows = 0;
    std::size_t embedding_dimension = 0;
    std::size_t nonzeros = 0;
    double nonzero_ratio = 0.0;
    /// rows x dimension x 8 bytes.
    std::uint64_t dense_bytes = 0;
    /// nonzeros x (8 + 4) bytes: value plus 32-bit column index.
    std::uint64_t sparse_bytes = 0;
};

struct BenchOptions {
    int repetitions = 10;
    /// Worker count for extraction and distances; 1 keeps timings comparable.
    unsigned threads = 1;
};

double median(std::vector<double> xs);

/// Times extract+build+weight ("embed") and the full pairwise cosine matrix
/// ("distance") per config. Substitution configs time the score computation as
/// embed and record zero distance time. An invalid config yields a record with
/// ok = false and the run continues.
std::vector<TimingRecord> run_runtime_bench(const EventLog& log,
                                            const std::vector<MethodConfig>& configs,
                                            const BenchOptions& options);

}  // namespace actemb
