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

#include "intrinsic.hpp"

#include <algorithm>
#include <atomic>
#include <iterator>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

#include "error.hpp"

namespace actemb {

namespace {

struct Classes {
    std::vector<std::vector<std::size_t>> members;  // positions in sim
    std::vector<int> class_of;                      // -1 when out of every class
};

Classes resolve(const PairwiseSimilarity& sim, const ClassAssignment& assignment) {
    Classes out;
    out.class_of.assign(sim.size(), -1);
    for (const auto& [original, members] : assignment.psi) {
        if (members.size() < 2) {
            fail(ErrorCode::Data, "class of activity " + std::to_string(original) +
                                      " has fewer than 2 members");
        }
        auto& positions = out.members.emplace_back();
        for (ActivityId m : members) {
            std::size_t pos = sim.index_of(m);
            if (pos == sim.size()) {
                fail(ErrorCode::Data, "class member " + std::to_string(m) +
                                          " has no row in the similarity matrix");
            }
            out.class_of[pos] = static_cast<int>(out.members.size() - 1);
            positions.push_back(pos);
        }
    }
    if (out.members.empty()) fail(ErrorCode::Data, "no classes to score");
    return out;
}

double mean(const std::vector<double>& xs) {
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

}  // namespace

double score_compactness(const PairwiseSimilarity& sim, const ClassAssignment& classes) {
    auto cls = resolve(sim, classes);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < sim.size(); ++i) {
        for (std::size_t j = 0; j < sim.size(); ++j) {
            if (i == j) continue;
            lo = std::min(lo, sim.at(i, j));
            hi = std::max(hi, sim.at(i, j));
        }
    }
    const double range = hi - lo;
    std::vector<double> per_class;
    for (const auto& members : cls.members) {
        std::vector<double> pairs;
        for (std::size_t x = 0; x < members.size(); ++x) {
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                double s = sim.at(members[x], members[y]);
                pairs.push_back(range > 0.0 ? (s - lo) / range : 0.0);
            }
        }
        per_class.push_back(mean(pairs));
    }
    return mean(per_class);
}

double score_nearest_neighbor(const PairwiseSimilarity& sim, const ClassAssignment& classes) {
    auto cls = resolve(sim, classes);
    std::vector<double> per_class;
    for (std::size_t c = 0; c < cls.members.size(); ++c) {
        std::size_t hits = 0;
        for (std::size_t i : cls.members[c]) {
            double best = -std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < sim.size(); ++j) {
                if (j != i) best = std::max(best, sim.at(i, j));
            }
            bool rival = false;
            for (std::size_t j = 0; j < sim.size() && !rival; ++j) {
                rival = j != i && cls.class_of[j] != static_cast<int>(c) && sim.at(i, j) == best;
            }
            if (!rival) ++hits;
        }
        per_class.push_back(static_cast<double>(hits) /
                            static_cast<double>(cls.members[c].size()));
    }
    return mean(per_class);
}

double score_precision_at_k(const PairwiseSimilarity& sim, const ClassAssignment& classes) {
    auto cls = resolve(sim, classes);
    std::vector<double> per_class;
    std::vector<std::size_t> candidates;
    for (std::size_t c = 0; c < cls.members.size(); ++c) {
        const std::size_t k = cls.members[c].size() - 1;
        std::vector<double> per_member;
        for (std::size_t i : cls.members[c]) {
            candidates.clear();
            for (std::size_t j = 0; j < sim.size(); ++j) {
                if (j != i) candidates.push_back(j);
            }
            auto ranked_before = [&](std::size_t x, std::size_t y) {
                if (sim.at(i, x) != sim.at(i, y)) return sim.at(i, x) > sim.at(i, y);
                return sim.labels()[x] < sim.labels()[y];
            };
            std::partial_sort(candidates.begin(),
                              candidates.begin() + static_cast<std::ptrdiff_t>(k),
                              candidates.end(), ranked_before);
            std::size_t hits = 0;
            for (std::size_t t = 0; t < k; ++t) {
                if (cls.class_of[candidates[t]] == static_cast<int>(c)) ++hits;
            }
            per_member.push_back(static_cast<double>(hits) / static_cast<double>(k));
        }
        per_class.push_back(mean(per_member));
    }
    return mean(per_class);
}

double score_triplet(const PairwiseSimilarity& sim, const ClassAssignment& classes) {
    auto cls = resolve(sim, classes);
    std::vector<double> per_class;
    for (std::size_t c = 0; c < cls.members.size(); ++c) {
        std::vector<std::size_t> outside;
        for (std::size_t j = 0; j < sim.size(); ++j) {
            if (cls.class_of[j] != static_cast<int>(c)) outside.push_back(j);
        }
        std::vector<double> per_pair;
        for (std::size_t anchor : cls.members[c]) {
            for (std::size_t positive : cls.members[c]) {
                if (positive == anchor) continue;
                if (outside.empty()) {
                    per_pair.push_back(1.0);
                    continue;
                }
                const double s_pos = sim.at(anchor, positive);
                std::size_t ok = 0;
                for (std::size_t neg : outside) {
                    if (sim.at(anchor, neg) < s_pos) ++ok;
                }
                per_pair.push_back(static_cast<double>(ok) / static_cast<double>(outside.size()));
            }
        }
        per_class.push_back(mean(per_pair));
    }
    return mean(per_class);
}

IntrinsicScores score_all(const PairwiseSimilarity& sim, const ClassAssignment& classes) {
    return {score_compactness(sim, classes), score_nearest_neighbor(sim, classes),
            score_precision_at_k(sim, classes), score_triplet(sim, classes)};
}

std::vector<AggregateRow> aggregate_scores(const std::vector<ScoreRecord>& scores,
                                           const std::vector<FailureRecord>& failures) {
    if (scores.empty()) fail(ErrorCode::Parameter, "no scores to aggregate");

    struct Sums {
        IntrinsicScores total;
        std::size_t jobs = 0;
    };
    // config -> log -> sums; std::map keeps both levels in a fixed order.
    std::map<MethodConfig, std::map<std::string, Sums>> groups;
    for (const auto& s : scores) {
        auto& sums = groups[s.config][s.log_id];
        sums.total.comp += s.scores.comp;
        sums.total.nn += s.scores.nn;
        sums.total.prec += s.scores.prec;
        sums.total.tri += s.scores.tri;
        ++sums.jobs;
    }
    std::map<MethodConfig, std::size_t> failed;
    for (const auto& f : failures) ++failed[f.config];

    std::vector<AggregateRow> rows;
    for (const auto& [config, logs] : groups) {
        AggregateRow row;
        row.config = config;
        row.logs = logs.size();
        row.failed = failed.count(config) ? failed[config] : 0;
        for (const auto& [log_id, sums] : logs) {
            const double n = static_cast<double>(sums.jobs);
            row.mean.comp += sums.total.comp / n;
            row.mean.nn += sums.total.nn / n;
            row.mean.prec += sums.total.prec / n;
            row.mean.tri += sums.total.tri / n;
            row.jobs += sums.jobs;
        }
        const double l = static_cast<double>(row.logs);
        row.mean.comp /= l;
        row.mean.nn /= l;
        row.mean.prec /= l;
        row.mean.tri /= l;
        rows.push_back(row);
    }
    return rows;
}

IntrinsicRun run_intrinsic(const EventLog& log, const std::vector<MethodConfig>& configs,
                           const IntrinsicOptions& options) {
    if (configs.empty()) fail(ErrorCode::Parameter, "no method configs given");
    for (const auto& c : configs) c.validate();
    auto plan = enumerate_benchmark_plan(log, options.samples, options.seed);

    struct JobResult {
        std::vector<ScoreRecord> scores;
        std::vector<FailureRecord> failures;
    };
    std::vector<JobResult> results(plan.jobs.size());

    auto run_job = [&](std::size_t index) {
        const auto& job = plan.jobs[index];
        auto& result = results[index];
        GroundTruthLog gt;
        std::string gen_error;
        try {
            gt = generate_ground_truth_log(log, job.selected, job.w, job.seed, job.sample_index);
        } catch (const Error& e) {
            gen_error = e.what();
        }
        for (const auto& config : configs) {
            if (!gen_error.empty()) {
                result.failures.push_back(
                    {options.log_id, config, job.r, job.w, job.sample_index, gen_error});
                continue;
            }
            try {
                auto sim = similarity_for(gt.log, config);
                result.scores.push_back({options.log_id, config, job.r, job.w, job.sample_index,
                                         score_all(sim, gt.classes)});
            } catch (const Error& e) {
                result.failures.push_back(
                    {options.log_id, config, job.r, job.w, job.sample_index, e.what()});
            }
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(options.threads, 1,
                                                        std::max<std::size_t>(plan.jobs.size(), 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < plan.jobs.size(); ++i) run_job(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < plan.jobs.size(); i = next++) run_job(i);
            });
        }
        for (auto& t : pool) t.join();
    }

    IntrinsicRun run;
    run.job_count = plan.jobs.size();
    for (auto& r : results) {
        std::move(r.scores.begin(), r.scores.end(), std::back_inserter(run.scores));
        std::move(r.failures.begin(), r.failures.end(), std::back_inserter(run.failures));
    }
    return run;
}

}  // namespace actemb
