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

// Acceptance checks A1-A9. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "context_extraction.hpp"
#include "count_matrices.hpp"
#include "groundtruth.hpp"
#include "intrinsic.hpp"
#include "pipeline.hpp"
#include "report.hpp"
#include "similarity.hpp"
#include "support/oracle.hpp"
#include "support/synthetic.hpp"
#include "weighting.hpp"

using namespace actemb;
namespace fs = std::filesystem;

namespace {

// Tolerances and limits.
constexpr double kA1MaxSeconds = 1e-3;
constexpr double kA2Target = -0.3365;
constexpr double kA2Tolerance = 5e-3;
constexpr int kA3Logs = 200;
constexpr double kA3CosineTolerance = 1e-12;
constexpr double kA3MaxSeconds = 30.0;
constexpr int kA5Logs = 3;
constexpr int kA5Activities = 10;
constexpr int kA5Traces = 500;
constexpr double kA5MaxSeconds = 300.0;
constexpr int kA7Traces = 100000;
constexpr int kA7Activities = 40;
constexpr double kA7MeanLength = 6.0;
constexpr double kA7MaxSeconds = 30.0;
constexpr double kA8SubstitutionCD = 0.9445;
constexpr double kA8SubstitutionDD = 2.1484;
constexpr double kA8Tolerance = 1e-3;
constexpr int kA9Cases = 100;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::size_t row_of(const EmbeddingMatrix& m, ActivityId a) {
    return static_cast<std::size_t>(std::find(m.row_labels().begin(), m.row_labels().end(), a) -
                                    m.row_labels().begin());
}

oracle::Labels context_labels(const OccurrenceTable& t, ContextId c, const Alphabet& al) {
    oracle::Labels out;
    for (ActivityId a : t.context(c)) out.push_back(al.label(a));
    if (t.kind() == ContextKind::Multiset) std::sort(out.begin(), out.end());
    return out;
}

Outcome a1() {
    Outcome o;
    auto log = EventLog::from_labels(synthetic::example_log());
    const std::vector<std::vector<double>> expected{
        {5, 0, 0, 0, 1, 0, 0}, {0, 5, 0, 0, 0, 0, 1}, {0, 0, 5, 0, 0, 0, 0},
        {0, 0, 1, 5, 0, 1, 0}, {1, 0, 0, 0, 5, 0, 0}};
    std::vector<double> times;
    EmbeddingMatrix ac;
    for (int i = 0; i < 11; ++i) {
        auto start = Clock::now();
        ac = build_ac(extract_occurrences(log, 3, ContextKind::Multiset));
        times.push_back(seconds_since(start));
    }
    o.require(ac.to_dense() == expected, "matrix differs from the printed 5x7 matrix");
    double t = median(times);
    o.require(t < kA1MaxSeconds, "runtime " + fmt("%.6f", t) + " s");
    if (o.pass) o.detail = "5x7 exact, median " + fmt("%.1f", t * 1e6) + " us";
    return o;
}

Outcome a2() {
    Outcome o;
    auto log = EventLog::from_labels(synthetic::example_log());
    auto t = extract_occurrences(log, 3, ContextKind::Multiset);
    auto ac = build_ac(t);
    auto d = row_of(ac, *log.alphabet().find("d"));
    const std::size_t bd = 2;
    o.require(render_context(t, bd, log.alphabet()) == "{b,d}", "column 2 is not {b,d}");
    double pmi = apply_pmi(ac, t).value(d, bd);
    double ppmi = apply_ppmi(ac, t).value(d, bd);
    o.require(std::abs(pmi - kA2Target) <= kA2Tolerance, "PMI " + fmt("%.6f", pmi));
    o.require(ppmi == 0.0, "PPMI " + fmt("%.6f", ppmi));
    if (o.pass) o.detail = "PMI(d,{b,d}) = " + fmt("%.4f", pmi) + ", PPMI = 0";
    return o;
}

Outcome a3() {
    Outcome o;
    auto start = Clock::now();
    std::mt19937_64 rng(20240101);
    std::size_t mismatches = 0, cosine_mismatches = 0;
    double worst = 0;
    for (int i = 0; i < kA3Logs; ++i) {
        auto labeled = synthetic::random_log(rng, 10, 6);
        auto log = EventLog::from_labels(labeled);
        const auto& al = log.alphabet();
        int n = 2 + static_cast<int>(rng() % 4);
        for (auto kind : {ContextKind::Multiset, ContextKind::Sequence}) {
            auto t = extract_occurrences(log, n, kind);
            auto windows = oracle::enumerate_windows(labeled, n, kind == ContextKind::Multiset);
            auto counts = oracle::context_counts(windows);
            auto ac = build_ac(t);
            auto aa = build_aa(t);
            std::size_t nonzero = 0;
            for (std::size_t r = 0; r < ac.rows(); ++r) {
                for (std::size_t c = 0; c < ac.cols(); ++c) {
                    auto it = counts.find({al.label(ac.row_labels()[r]),
                                           context_labels(t, ac.column_labels()[c], al)});
                    double want = it == counts.end() ? 0.0 : double(it->second);
                    mismatches += ac.value(r, c) != want;
                    nonzero += want != 0;
                }
                for (std::size_t c = 0; c < aa.cols(); ++c) {
                    double want = double(oracle::activity_activity(
                        windows, al.label(aa.row_labels()[r]), al.label(aa.column_labels()[c])));
                    mismatches += aa.value(r, c) != want;
                }
            }
            mismatches += nonzero != counts.size();
            for (const auto* m : {&ac, &aa}) {
                auto dense = m->to_dense();
                auto sim = pairwise_distance_matrix(*m);
                for (std::size_t x = 0; x < m->rows(); ++x) {
                    for (std::size_t y = 0; y < m->rows(); ++y) {
                        double err = std::abs(sim.at(x, y) - oracle::cosine_similarity(dense[x], dense[y]));
                        worst = std::max(worst, err);
                        cosine_mismatches += err > kA3CosineTolerance;
                    }
                }
            }
        }
    }
    double t = seconds_since(start);
    o.require(mismatches == 0, std::to_string(mismatches) + " count mismatches");
    o.require(cosine_mismatches == 0, std::to_string(cosine_mismatches) + " cosine mismatches");
    o.require(t < kA3MaxSeconds, "runtime " + fmt("%.2f", t) + " s");
    if (o.pass) {
        o.detail = std::to_string(kA3Logs) + " logs x 2 kinds exact, max cosine error " +
                   fmt("%.1e", worst) + ", " + fmt("%.2f", t) + " s";
    }
    return o;
}

Outcome a4() {
    Outcome o;
    auto log = EventLog::from_labels(synthetic::clone_log(4));
    auto x = *log.alphabet().find("x");
    auto gt = generate_ground_truth_log(log, {x}, 2, 42);
    MethodConfig cfg{Method::ActivityActivity, ContextKind::Sequence, Weighting::None, 3};
    auto e = embed(gt.log, cfg);
    const auto& clones = gt.classes.psi.at(x);
    auto r1 = row_of(e.matrix, clones[0]), r2 = row_of(e.matrix, clones[1]);
    o.require(r1 < e.matrix.rows() && r2 < e.matrix.rows(), "clone rows missing");
    if (!o.pass) return o;
    auto dense = e.matrix.to_dense();
    double ratio = 0;
    bool proportional = true;
    for (std::size_t c = 0; c < dense[r1].size(); ++c) {
        if ((dense[r1][c] == 0) != (dense[r2][c] == 0)) proportional = false;
        if (dense[r1][c] != 0) {
            double q = dense[r2][c] / dense[r1][c];
            if (ratio == 0) ratio = q;
            proportional = proportional && q > 0 && q == ratio;
        }
    }
    o.require(proportional && ratio > 0, "clone rows are not positively proportional");
    auto sim = pairwise_distance_matrix(e.matrix);
    double distance = 1.0 - sim.at(sim.index_of(clones[0]), sim.index_of(clones[1]));
    o.require(distance == 0.0, "clone distance " + fmt("%.3e", distance));
    auto s = score_all(sim, gt.classes);
    o.require(s.nn == 1.0 && s.prec == 1.0 && s.tri == 1.0,
              "I_nn " + fmt("%.4f", s.nn) + " I_prec " + fmt("%.4f", s.prec) + " I_tri " + fmt("%.4f", s.tri));
    if (o.pass) o.detail = "distance 0, I_nn = I_prec = I_tri = 1";
    return o;
}

Outcome a5() {
    Outcome o;
    auto start = Clock::now();
    const MethodConfig none{Method::ActivityActivity, ContextKind::Sequence, Weighting::None, 3};
    const MethodConfig pmi{Method::ActivityActivity, ContextKind::Sequence, Weighting::Pmi, 3};
    std::vector<ScoreRecord> scores;
    std::vector<FailureRecord> failures;
    for (int i = 0; i < kA5Logs; ++i) {
        auto log = EventLog::from_labels(
            synthetic::structured_log(1000 + static_cast<std::uint64_t>(i), kA5Activities, kA5Traces));
        IntrinsicOptions opts;
        opts.log_id = "synthetic" + std::to_string(i);
        auto run = run_intrinsic(log, {none, pmi}, opts);
        scores.insert(scores.end(), run.scores.begin(), run.scores.end());
        failures.insert(failures.end(), run.failures.begin(), run.failures.end());
    }
    auto rows = aggregate_scores(scores, failures);
    double nn_none = -1, nn_pmi = -1;
    for (const auto& r : rows) {
        if (r.config == none) nn_none = r.mean.nn;
        if (r.config == pmi) nn_pmi = r.mean.nn;
    }
    double t = seconds_since(start);
    o.require(nn_pmi >= nn_none, "mean I_nn pmi " + fmt("%.4f", nn_pmi) + " < none " + fmt("%.4f", nn_none));
    o.require(t < kA5MaxSeconds, "runtime " + fmt("%.1f", t) + " s");
    std::string summary = "mean I_nn pmi " + fmt("%.4f", nn_pmi) + " vs none " + fmt("%.4f", nn_none) +
                          ", " + std::to_string(failures.size()) + " failed jobs, " + fmt("%.1f", t) + " s";
    o.detail = o.pass ? summary : o.detail + " (" + summary + ")";
    return o;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome a6() {
    Outcome o;
    auto dir = fs::temp_directory_path() / "actemb_acceptance_a6";
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto input = dir / "structured.csv";
    std::ofstream(input) << synthetic::to_csv(synthetic::structured_log(77, 8, 200));
    std::vector<std::string> outputs;
    int n = 0;
    for (const char* flag : {"", "", " --parallel", " --parallel"}) {
        auto out = dir / ("run" + std::to_string(n++));
        std::string cmd = std::string(ACTEMB_CLI) + " intrinsic --input " + input.string() +
                          " --method all --context all --weight all --window 3 --out-dir " + out.string() +
                          flag + " >/dev/null 2>&1";
        int status = std::system(cmd.c_str());
        o.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "cli exit status " + std::to_string(status));
        outputs.push_back(slurp(out / "scores.json") + slurp(out / "aggregate.csv"));
    }
    for (std::size_t i = 1; i < outputs.size(); ++i) {
        o.require(outputs[i] == outputs[0], "run " + std::to_string(i) + " differs from run 0");
    }
    o.require(outputs[0].size() > 100, "empty report");
    if (o.pass) o.detail = "4 runs (2 serial, 2 parallel) byte-identical";
    return o;
}

Outcome a7() {
    Outcome o;
    auto log = EventLog::from_labels(
        synthetic::markov_log(7, kA7Activities, kA7Traces, kA7MeanLength));
    double avg = double(log.event_count()) / double(log.traces().size());
    MethodConfig cfg{Method::ActivityActivity, ContextKind::Multiset, Weighting::None, 3};
    auto start = Clock::now();
    auto e = embed(log, cfg);
    auto sim = pairwise_distance_matrix(e.matrix);
    double t = seconds_since(start);
    o.require(sim.size() == e.matrix.rows(), "distance matrix size");
    o.require(t < kA7MaxSeconds, "runtime " + fmt("%.2f", t) + " s");

    std::size_t checked = 0;
    auto check_bound = [&](const EventLog& l, int n, ContextKind kind) {
        auto ac = embed(l, {Method::ActivityContext, kind, Weighting::None, n});
        std::size_t activities = ac.table.activities().size();
        ++checked;
        o.require(ac.matrix.cols() <= context_dimension_bound(activities, n),
                  "AC dimension above bound for n=" + std::to_string(n));
    };
    for (int n : {3, 5, 9}) {
        for (auto kind : {ContextKind::Multiset, ContextKind::Sequence}) {
            check_bound(log, n, kind);
            check_bound(EventLog::from_labels(synthetic::example_log()), n, kind);
        }
    }
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        check_bound(EventLog::from_labels(synthetic::random_log(rng, 10, 3)), 2 + static_cast<int>(rng() % 4),
                    rng() % 2 ? ContextKind::Multiset : ContextKind::Sequence);
    }
    if (o.pass) {
        o.detail = std::to_string(kA7Traces) + " traces, avg length " + fmt("%.2f", avg) +
                   ", embed+distances " + fmt("%.2f", t) + " s; bound held on " +
                   std::to_string(checked) + " AC runs";
    }
    return o;
}

Outcome a8() {
    Outcome o;
    auto log = EventLog::from_labels(synthetic::example_log());
    const auto& al = log.alphabet();
    auto s = substitution_scores(extract_occurrences(log, 3, ContextKind::Sequence));
    auto c = s.index_of(*al.find("c")), d = s.index_of(*al.find("d"));
    double cd = s.at(c, d), dd = s.at(d, d);
    o.require(std::abs(cd - kA8SubstitutionCD) <= kA8Tolerance,
              "SS(c,d) = " + fmt("%.4f", cd) + ", expected " + fmt("%.4f", kA8SubstitutionCD) +
                  " (c and d share no ordered context)");
    o.require(std::abs(dd - kA8SubstitutionDD) <= kA8Tolerance, "SS(d,d) = " + fmt("%.4f", dd));
    if (o.pass) o.detail = "SS(c,d) = " + fmt("%.4f", cd) + ", SS(d,d) = " + fmt("%.4f", dd);
    else if (std::abs(dd - kA8SubstitutionDD) <= kA8Tolerance) o.detail += "; SS(d,d) = " + fmt("%.4f", dd) + " ok";
    return o;
}

Outcome a9() {
    Outcome o;
    std::mt19937_64 rng(31337);
    std::size_t imbalanced = 0, inversion_failures = 0;
    for (int i = 0; i < kA9Cases; ++i) {
        auto log = EventLog::from_labels(synthetic::random_log(rng, 12, 8));
        std::vector<ActivityId> pool;
        for (ActivityId a = 1; a < log.alphabet().size(); ++a) pool.push_back(a);
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(1 + rng() % pool.size());
        int w = kMinPool + static_cast<int>(rng() % (kMaxPool - kMinPool + 1));
        auto gt = generate_ground_truth_log(log, pool, w, rng());

        std::map<ActivityId, std::size_t> used;
        for (const auto& trace : gt.log.traces()) {
            std::set<ActivityId> seen(trace.begin(), trace.end());
            for (auto a : seen) used[a] += gt.classes.phi.count(a);
        }
        for (const auto& [orig, members] : gt.classes.psi) {
            std::size_t lo = SIZE_MAX, hi = 0;
            for (auto m : members) {
                lo = std::min(lo, used[m]);
                hi = std::max(hi, used[m]);
            }
            imbalanced += hi - lo > 1;
        }
        std::ostringstream a, b;
        write_canonical_csv(a, log);
        write_canonical_csv(b, reconstruct_original(gt, log));
        inversion_failures += a.str() != b.str();
    }
    o.require(imbalanced == 0, std::to_string(imbalanced) + " unbalanced pools");
    o.require(inversion_failures == 0, std::to_string(inversion_failures) + " inversion failures");
    if (o.pass) o.detail = std::to_string(kA9Cases) + " cases balanced and inverted exactly";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5},
        {"A6", a6}, {"A7", a7}, {"A8", a8}, {"A9", a9}};
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += !o.pass;
        std::printf("%s %s  %s\n", name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
