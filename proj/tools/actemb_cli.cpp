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

// Command-line driver over the libactemb C API.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "actemb/actemb.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitUsage = 2;

struct InputOptions {
    std::string input;
    std::string format = "csv";
    std::string case_col = "case";
    std::string activity_col = "activity";
    std::string time_col;
    std::string out_dir = ".";
};

struct GridOptions {
    std::vector<std::string> methods;
    std::vector<std::string> contexts;
    std::vector<std::string> weights;
    std::vector<int> windows;
};

struct UsageError {
    std::string message;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--input", in.input, "Event log file")->required();
    cmd->add_option("--format", in.format, "Log format")
        ->check(CLI::IsMember({"csv", "xes"}))
        ->capture_default_str();
    cmd->add_option("--case-col", in.case_col, "CSV case id column")->capture_default_str();
    cmd->add_option("--activity-col", in.activity_col, "CSV activity column")
        ->capture_default_str();
    cmd->add_option("--time-col", in.time_col,
                    "CSV timestamp column (ISO-8601); events are sorted per case");
    cmd->add_option("--out-dir", in.out_dir, "Output directory")->capture_default_str();
}

void add_grid_options(CLI::App* cmd, GridOptions& g) {
    cmd->add_option("--method", g.methods, "aa, ac, substitution or all (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--context", g.contexts, "mset, seq or all")->delimiter(',')->capture_default_str();
    cmd->add_option("--weight", g.weights, "none, pmi, ppmi or all")
        ->delimiter(',')
        ->capture_default_str();
    cmd->add_option("--window", g.windows, "Window size(s) n >= 2")
        ->delimiter(',')
        ->capture_default_str();
}

std::vector<std::string> expand_all(const std::vector<std::string>& values,
                                    const std::vector<std::string>& all) {
    if (std::find(values.begin(), values.end(), "all") != values.end()) return all;
    return values;
}

actemb_method to_method(const std::string& s) {
    if (s == "aa") return ACTEMB_METHOD_AA;
    if (s == "ac") return ACTEMB_METHOD_AC;
    if (s == "substitution") return ACTEMB_METHOD_SUBSTITUTION;
    throw UsageError{"unknown method '" + s + "'"};
}

actemb_context to_context(const std::string& s) {
    if (s == "mset") return ACTEMB_CONTEXT_MSET;
    if (s == "seq") return ACTEMB_CONTEXT_SEQ;
    throw UsageError{"unknown context '" + s + "'"};
}

actemb_weighting to_weighting(const std::string& s) {
    if (s == "none") return ACTEMB_WEIGHT_NONE;
    if (s == "pmi") return ACTEMB_WEIGHT_PMI;
    if (s == "ppmi") return ACTEMB_WEIGHT_PPMI;
    throw UsageError{"unknown weighting '" + s + "'"};
}

// Cartesian product of the option lists. Substitution scores always use
// sequence contexts without weighting, so they contribute one config per window.
std::vector<actemb_config> build_grid(const GridOptions& g, bool context_given,
                                      bool weight_given) {
    auto methods = expand_all(g.methods, {"aa", "ac", "substitution"});
    auto contexts = expand_all(g.contexts, {"mset", "seq"});
    auto weights = expand_all(g.weights, {"none", "pmi", "ppmi"});
    if (g.windows.empty()) throw UsageError{"no window size given"};

    bool only_substitution =
        std::all_of(methods.begin(), methods.end(), [](auto& m) { return m == "substitution"; });
    if (only_substitution) {
        if (context_given && std::find(contexts.begin(), contexts.end(), "seq") == contexts.end()) {
            throw UsageError{"substitution scores require --context seq"};
        }
        if (weight_given && std::find(weights.begin(), weights.end(), "none") == weights.end()) {
            throw UsageError{"substitution scores require --weight none"};
        }
    }

    std::vector<actemb_config> out;
    for (const auto& m : methods) {
        actemb_method method = to_method(m);
        if (method == ACTEMB_METHOD_SUBSTITUTION) {
            for (int n : g.windows) out.push_back({method, ACTEMB_CONTEXT_SEQ, ACTEMB_WEIGHT_NONE, n});
            continue;
        }
        for (const auto& c : contexts) {
            for (const auto& w : weights) {
                for (int n : g.windows) out.push_back({method, to_context(c), to_weighting(w), n});
            }
        }
    }
    for (const auto& c : out) {
        if (actemb_config_validate(&c) != ACTEMB_OK) throw UsageError{actemb_last_error()};
    }
    return out;
}

// Exactly one config: a single value per option.
actemb_config single_config(const GridOptions& g) {
    if (g.methods.size() != 1 || g.contexts.size() != 1 || g.weights.size() != 1 ||
        g.windows.size() != 1 || g.methods[0] == "all" || g.contexts[0] == "all" ||
        g.weights[0] == "all") {
        throw UsageError{"this command takes exactly one method, context, weight and window"};
    }
    actemb_config c{to_method(g.methods[0]), to_context(g.contexts[0]),
                    to_weighting(g.weights[0]), g.windows[0]};
    if (actemb_config_validate(&c) != ACTEMB_OK) throw UsageError{actemb_last_error()};
    return c;
}

struct LogHandle {
    actemb_log* ptr = nullptr;
    ~LogHandle() { actemb_log_free(ptr); }
};

std::string out_path(const InputOptions& in, const char* name) {
    return (std::filesystem::path(in.out_dir) / name).string();
}

std::string log_id(const InputOptions& in) {
    return std::filesystem::path(in.input).stem().string();
}

unsigned thread_count(bool parallel) {
    if (!parallel) return 1;
    return std::max(2u, std::thread::hardware_concurrency());
}

int report_error(actemb_status status) {
    std::fprintf(stderr, "error: %s\n", actemb_last_error());
    return status == ACTEMB_ERR_INTERNAL ? kExitPartial : kExitUsage;
}

int load(const InputOptions& in, LogHandle& log) {
    std::error_code ec;
    std::filesystem::create_directories(in.out_dir, ec);
    if (ec) {
        std::fprintf(stderr, "error: cannot create '%s': %s\n", in.out_dir.c_str(),
                     ec.message().c_str());
        return kExitUsage;
    }
    auto status = actemb_log_load(in.input.c_str(), in.format.c_str(), in.case_col.c_str(),
                                  in.activity_col.c_str(),
                                  in.time_col.empty() ? nullptr : in.time_col.c_str(), &log.ptr);
    return status == ACTEMB_OK ? kExitOk : report_error(status);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Count-based activity embeddings for event logs (report schema " +
                 std::to_string(actemb_schema_version()) + ")"};
    app.set_version_flag("--version", std::string(actemb_version()));
    app.require_subcommand(1);

    InputOptions in;
    GridOptions grid{{"aa"}, {"seq"}, {"pmi"}, {3}};
    std::uint64_t seed = 42;
    std::size_t samples = 5;
    int reps = 10;
    bool parallel = false;
    std::vector<std::string> inputs;
    std::vector<std::string> selected;
    int pool = 2;

    auto* stats = app.add_subcommand("stats", "Activity counts, variant ratio and rank-frequency table"
                                              " (stats.csv, stats.json)");
    add_input_options(stats, in);

    auto* embed = app.add_subcommand("embed", "Write one embedding matrix (embedding.csv, embedding.json)");
    add_input_options(embed, in);
    add_grid_options(embed, grid);
    embed->add_flag("--parallel", parallel, "Parallel context extraction");

    auto* distances = app.add_subcommand(
        "distances", "Write the pairwise distance matrix (distances.csv, distances.json)");
    add_input_options(distances, in);
    add_grid_options(distances, grid);
    distances->add_flag("--parallel", parallel, "Parallel extraction and distances");

    auto* intrinsic = app.add_subcommand(
        "intrinsic", "Ground-truth benchmark: per-job scores (scores.json) and aggregate.csv");
    add_input_options(intrinsic, in);
    add_grid_options(intrinsic, grid);
    intrinsic->add_option("--seed", seed, "Master seed")->capture_default_str();
    intrinsic->add_option("--samples", samples, "Ground-truth logs per (r, w)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    intrinsic->add_flag("--parallel", parallel, "Run jobs in parallel (output is unchanged)");

    auto* bench = app.add_subcommand("bench", "Runtime benchmark (bench.json, bench.csv)");
    add_input_options(bench, in);
    add_grid_options(bench, grid);
    bench->add_option("--reps", reps, "Repetitions per config (median reported)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_flag("--parallel", parallel, "Parallel extraction and distances");

    auto* aggregate = app.add_subcommand(
        "aggregate", "Average several scores.json files (one per log) into aggregate.csv");
    aggregate->add_option("--inputs", inputs, "scores.json files")->required();
    aggregate->add_option("--out-dir", in.out_dir, "Output directory")->capture_default_str();

    auto* groundtruth = app.add_subcommand(
        "groundtruth", "Write one ground-truth log (groundtruth.csv, classes.json)");
    add_input_options(groundtruth, in);
    groundtruth->add_option("--select", selected, "Activities to replace")
        ->delimiter(',')
        ->required();
    groundtruth->add_option("--pool", pool, "Replacements per activity (w >= 2)")
        ->capture_default_str();
    groundtruth->add_option("--seed", seed, "Seed")->capture_default_str();

    // Bench defaults to the full grid unless options are given.
    bench->preparse_callback([&](std::size_t) {
        grid = {{"all"}, {"all"}, {"all"}, {3, 5, 9}};
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        LogHandle log;
        if (*stats) {
            if (int rc = load(in, log)) return rc;
            auto status = actemb_log_write_stats(log.ptr, out_path(in, "stats.csv").c_str(),
                                                 out_path(in, "stats.json").c_str());
            if (status != ACTEMB_OK) return report_error(status);
            std::printf("activities %zu, traces %zu, events %zu\n",
                        actemb_log_activity_count(log.ptr), actemb_log_trace_count(log.ptr),
                        actemb_log_event_count(log.ptr));
            return kExitOk;
        }
        if (*embed) {
            auto config = single_config(grid);
            if (config.method == ACTEMB_METHOD_SUBSTITUTION) {
                throw UsageError{"substitution scores have no embedding; use 'distances'"};
            }
            if (int rc = load(in, log)) return rc;
            actemb_embedding* e = nullptr;
            auto status = actemb_embed(log.ptr, &config, thread_count(parallel), &e);
            if (status != ACTEMB_OK) return report_error(status);
            status = actemb_embedding_write(e, out_path(in, "embedding.csv").c_str(),
                                            out_path(in, "embedding.json").c_str());
            std::printf("%zu x %zu embedding\n", actemb_embedding_rows(e), actemb_embedding_cols(e));
            actemb_embedding_free(e);
            return status == ACTEMB_OK ? kExitOk : report_error(status);
        }
        if (*distances) {
            auto config = single_config(grid);
            if (int rc = load(in, log)) return rc;
            actemb_similarity* s = nullptr;
            auto status = actemb_similarity_compute(log.ptr, &config, thread_count(parallel), &s);
            if (status != ACTEMB_OK) return report_error(status);
            status = actemb_similarity_write(s, out_path(in, "distances.csv").c_str(),
                                             out_path(in, "distances.json").c_str());
            actemb_similarity_free(s);
            return status == ACTEMB_OK ? kExitOk : report_error(status);
        }
        if (*intrinsic) {
            auto configs = build_grid(grid, intrinsic->count("--context") > 0,
                                      intrinsic->count("--weight") > 0);
            if (int rc = load(in, log)) return rc;
            actemb_intrinsic_summary summary{};
            auto status = actemb_run_intrinsic(
                log.ptr, log_id(in).c_str(), configs.data(), configs.size(), seed, samples,
                thread_count(parallel), out_path(in, "scores.json").c_str(),
                out_path(in, "aggregate.csv").c_str(), &summary);
            std::printf("%zu ground-truth logs, %zu scored, %zu failed\n", summary.jobs,
                        summary.scored, summary.failed);
            if (status == ACTEMB_ERR_DATA && summary.jobs > 0) {
                std::fprintf(stderr, "error: %s\n", actemb_last_error());
                return kExitPartial;
            }
            return status == ACTEMB_OK ? kExitOk : report_error(status);
        }
        if (*bench) {
            auto configs =
                build_grid(grid, bench->count("--context") > 0, bench->count("--weight") > 0);
            if (int rc = load(in, log)) return rc;
            actemb_bench_summary summary{};
            auto status = actemb_run_bench(log.ptr, log_id(in).c_str(), configs.data(),
                                           configs.size(), reps, thread_count(parallel),
                                           out_path(in, "bench.json").c_str(),
                                           out_path(in, "bench.csv").c_str(), &summary);
            if (status != ACTEMB_OK) return report_error(status);
            std::printf("%zu configs timed, %zu failed\n", summary.records, summary.failed);
            return summary.failed > 0 ? kExitPartial : kExitOk;
        }
        if (*aggregate) {
            std::filesystem::create_directories(in.out_dir);
            std::vector<const char*> paths;
            for (const auto& p : inputs) paths.push_back(p.c_str());
            auto status = actemb_aggregate_reports(paths.data(), paths.size(),
                                                   out_path(in, "aggregate.csv").c_str());
            return status == ACTEMB_OK ? kExitOk : report_error(status);
        }
        if (*groundtruth) {
            if (int rc = load(in, log)) return rc;
            std::vector<const char*> labels;
            for (const auto& s : selected) labels.push_back(s.c_str());
            auto status = actemb_ground_truth_write(log.ptr, labels.data(), labels.size(), pool,
                                                    seed, out_path(in, "groundtruth.csv").c_str(),
                                                    out_path(in, "classes.json").c_str());
            return status == ACTEMB_OK ? kExitOk : report_error(status);
        }
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
