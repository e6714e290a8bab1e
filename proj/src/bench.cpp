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

#include "bench.hpp"

#include <algorithm>
#include <chrono>

#include "error.hpp"

namespace actemb {

double median(std::vector<double> xs) {
    if (xs.empty()) fail(ErrorCode::Parameter, "median of an empty sample");
    std::sort(xs.begin(), xs.end());
    std::size_t mid = xs.size() / 2;
    return xs.size() % 2 == 1 ? xs[mid] : 0.5 * (xs[mid - 1] + xs[mid]);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

TimingRecord time_config(const EventLog& log, const MethodConfig& config,
                         const BenchOptions& options) {
    TimingRecord rec;
    rec.config = config;
    config.validate();
    for (int rep = 0; rep < options.repetitions; ++rep) {
        if (config.method == Method::Substitution) {
            auto start = Clock::now();
            auto sim = substitution_scores(
                extract_occurrences(log, config.window, ContextKind::Sequence, options.threads));
            rec.embed_samples.push_back(seconds_since(start));
            rec.distance_samples.push_back(0.0);
            rec.rows = rec.embedding_dimension = sim.size();
            std::size_t nz = 0;
            for (std::size_t i = 0; i < sim.size(); ++i) {
                for (std::size_t j = 0; j < sim.size(); ++j) nz += sim.at(i, j) != 0.0;
            }
            rec.nonzeros = nz;
            continue;
        }
        auto start = Clock::now();
        auto e = embed(log, config, options.threads);
        rec.embed_samples.push_back(seconds_since(start));
        start = Clock::now();
        auto sim = pairwise_distance_matrix(e.matrix, options.threads);
        rec.distance_samples.push_back(seconds_since(start));
        rec.rows = e.matrix.rows();
        rec.embedding_dimension = e.matrix.cols();
        rec.nonzeros = e.matrix.nonzeros();
    }
    rec.embed_seconds = median(rec.embed_samples);
    rec.distance_seconds = median(rec.distance_samples);
    const auto cells = static_cast<std::uint64_t>(rec.rows) * rec.embedding_dimension;
    rec.nonzero_ratio = cells ? static_cast<double>(rec.nonzeros) / static_cast<double>(cells) : 0.0;
    rec.dense_bytes = cells * sizeof(double);
    rec.sparse_bytes = static_cast<std::uint64_t>(rec.nonzeros) * (sizeof(double) + sizeof(std::uint32_t));
    return rec;
}

}  // namespace

std::vector<TimingRecord> run_runtime_bench(const EventLog& log,
                                            const std::vector<MethodConfig>& configs,
                                            const BenchOptions& options) {
    if (log.empty()) fail(ErrorCode::EmptyLog, "empty log");
    if (configs.empty()) fail(ErrorCode::Parameter, "no method configs given");
    if (options.repetitions < 1) fail(ErrorCode::Parameter, "repetitions must be >= 1");
    std::vector<TimingRecord> out;
    for (const auto& config : configs) {
        try {
            out.push_back(time_config(log, config, options));
        } catch (const Error& e) {
            TimingRecord rec;
            rec.config = config;
            rec.ok = false;
            rec.error = e.what();
            out.push_back(std::move(rec));
        }
    }
    return out;
}

}  // namespace actemb
