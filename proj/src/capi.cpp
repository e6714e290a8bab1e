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

#include "actemb/actemb.h"

#include <exception>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "bench.hpp"
#include "error.hpp"
#include "event_log.hpp"
#include "groundtruth.hpp"
#include "intrinsic.hpp"
#include "pipeline.hpp"
#include "report.hpp"
#include "similarity.hpp"

struct actemb_log {
    actemb::EventLog log;
};

struct actemb_embedding {
    actemb::Embedding embedding;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    actemb::Alphabet alphabet;
};

struct actemb_similarity {
    actemb::PairwiseSimilarity sim;
    actemb::MethodConfig config;
    std::vector<std::string> labels;
    actemb::Alphabet alphabet;
};

namespace {

thread_local std::string last_error;

actemb_status to_status(actemb::ErrorCode code) {
    switch (code) {
        case actemb::ErrorCode::Format: return ACTEMB_ERR_FORMAT;
        case actemb::ErrorCode::EmptyLog: return ACTEMB_ERR_EMPTY_LOG;
        case actemb::ErrorCode::Parameter: return ACTEMB_ERR_PARAMETER;
        case actemb::ErrorCode::Data: return ACTEMB_ERR_DATA;
        case actemb::ErrorCode::Io: return ACTEMB_ERR_IO;
    }
    return ACTEMB_ERR_INTERNAL;
}

// Runs `fn`, translating exceptions into status codes and last_error.
template <typename Fn>
actemb_status guarded(Fn&& fn) {
    try {
        last_error.clear();
        return fn();
    } catch (const actemb::Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
    } catch (const std::exception& e) {
        last_error = e.what();
    } catch (...) {
        last_error = "unknown error";
    }
    return ACTEMB_ERR_INTERNAL;
}

void require(const void* p, const char* what) {
    if (!p) actemb::fail(actemb::ErrorCode::Parameter, std::string(what) + " must not be null");
}

actemb::MethodConfig to_config(const actemb_config* c) {
    require(c, "config");
    actemb::MethodConfig out;
    switch (c->method) {
        case ACTEMB_METHOD_AA: out.method = actemb::Method::ActivityActivity; break;
        case ACTEMB_METHOD_AC: out.method = actemb::Method::ActivityContext; break;
        case ACTEMB_METHOD_SUBSTITUTION: out.method = actemb::Method::Substitution; break;
        default: actemb::fail(actemb::ErrorCode::Parameter, "unknown method");
    }
    switch (c->context) {
        case ACTEMB_CONTEXT_MSET: out.context = actemb::ContextKind::Multiset; break;
        case ACTEMB_CONTEXT_SEQ: out.context = actemb::ContextKind::Sequence; break;
        default: actemb::fail(actemb::ErrorCode::Parameter, "unknown context kind");
    }
    switch (c->weighting) {
        case ACTEMB_WEIGHT_NONE: out.weighting = actemb::Weighting::None; break;
        case ACTEMB_WEIGHT_PMI: out.weighting = actemb::Weighting::Pmi; break;
        case ACTEMB_WEIGHT_PPMI: out.weighting = actemb::Weighting::Ppmi; break;
        default: actemb::fail(actemb::ErrorCode::Parameter, "unknown weighting");
    }
    out.window = c->window;
    out.validate();
    return out;
}

std::vector<actemb::MethodConfig> to_configs(const actemb_config* configs, std::size_t n) {
    if (n == 0) actemb::fail(actemb::ErrorCode::Parameter, "no configs given");
    require(configs, "configs");
    std::vector<actemb::MethodConfig> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(to_config(configs + i));
    return out;
}

actemb::CsvColumns csv_columns(const char* case_col, const char* activity_col,
                               const char* time_col) {
    actemb::CsvColumns cols;
    if (case_col) cols.case_column = case_col;
    if (activity_col) cols.activity_column = activity_col;
    if (time_col && *time_col) cols.timestamp_column = time_col;
    return cols;
}

template <typename Writer>
void write_to(const char* path, Writer&& writer) {
    if (!path) return;
    std::ostringstream buffer;
    writer(buffer);
    auto out = actemb::open_output(path);
    out << buffer.str();
    if (!out.flush()) actemb::fail(actemb::ErrorCode::Io, std::string("failed writing '") + path + "'");
}

}  // namespace

extern "C" {

const char* actemb_version(void) { return ACTEMB_VERSION; }

int actemb_schema_version(void) { return actemb::kSchemaVersion; }

const char* actemb_last_error(void) { return last_error.c_str(); }

const char* actemb_status_string(actemb_status status) {
    switch (status) {
        case ACTEMB_OK: return "ok";
        case ACTEMB_ERR_FORMAT: return "format error";
        case ACTEMB_ERR_EMPTY_LOG: return "empty log";
        case ACTEMB_ERR_PARAMETER: return "parameter error";
        case ACTEMB_ERR_DATA: return "data error";
        case ACTEMB_ERR_IO: return "i/o error";
        case ACTEMB_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

actemb_status actemb_log_parse_csv(const char* text, size_t len, const char* case_col,
                                   const char* activity_col, const char* time_col,
                                   actemb_log** out) {
    return guarded([&] {
        require(out, "out");
        if (!text && len > 0) actemb::fail(actemb::ErrorCode::Parameter, "text must not be null");
        auto log = actemb::parse_csv({text ? text : "", text ? len : 0},
                                     csv_columns(case_col, activity_col, time_col));
        *out = new actemb_log{std::move(log)};
        return ACTEMB_OK;
    });
}

actemb_status actemb_log_parse_xes(const char* text, size_t len, actemb_log** out) {
    return guarded([&] {
        require(out, "out");
        auto log = actemb::parse_xes({text ? text : "", text ? len : 0});
        *out = new actemb_log{std::move(log)};
        return ACTEMB_OK;
    });
}

actemb_status actemb_log_load(const char* path, const char* format, const char* case_col,
                              const char* activity_col, const char* time_col, actemb_log** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        std::string fmt = format ? format : "csv";
        if (fmt != "csv" && fmt != "xes") {
            actemb::fail(actemb::ErrorCode::Parameter, "unknown log format '" + fmt + "'");
        }
        auto text = actemb::read_file(path);
        auto log = fmt == "csv"
                       ? actemb::parse_csv(text, csv_columns(case_col, activity_col, time_col))
                       : actemb::parse_xes(text);
        *out = new actemb_log{std::move(log)};
        return ACTEMB_OK;
    });
}

void actemb_log_free(actemb_log* log) { delete log; }

size_t actemb_log_trace_count(const actemb_log* log) { return log ? log->log.traces().size() : 0; }

size_t actemb_log_event_count(const actemb_log* log) { return log ? log->log.event_count() : 0; }

size_t actemb_log_activity_count(const actemb_log* log) {
    return log ? log->log.alphabet().activity_count() : 0;
}

actemb_status actemb_log_write_stats(const actemb_log* log, const char* csv_path,
                                     const char* json_path) {
    return guarded([&] {
        require(log, "log");
        auto stats = actemb::compute_stats(log->log);
        write_to(csv_path, [&](std::ostream& o) { actemb::write_stats_csv(o, log->log, stats); });
        write_to(json_path, [&](std::ostream& o) { actemb::write_stats_json(o, stats); });
        return ACTEMB_OK;
    });
}

actemb_status actemb_log_write_csv(const actemb_log* log, const char* path) {
    return guarded([&] {
        require(log, "log");
        require(path, "path");
        write_to(path, [&](std::ostream& o) { actemb::write_canonical_csv(o, log->log); });
        return ACTEMB_OK;
    });
}

actemb_status actemb_ground_truth_write(const actemb_log* log, const char* const* selected,
                                        size_t n_selected, int w, uint64_t seed,
                                        const char* csv_path, const char* classes_json_path) {
    return guarded([&] {
        require(log, "log");
        if (n_selected > 0) require(selected, "selected");
        std::vector<actemb::ActivityId> ids;
        for (size_t i = 0; i < n_selected; ++i) {
            require(selected[i], "selected label");
            auto id = log->log.alphabet().find(selected[i]);
            if (!id || *id == actemb::kPad) {
                actemb::fail(actemb::ErrorCode::Parameter,
                             std::string("unknown activity '") + selected[i] + "'");
            }
            ids.push_back(*id);
        }
        auto gt = actemb::generate_ground_truth_log(log->log, ids, w, seed);
        write_to(csv_path, [&](std::ostream& o) { actemb::write_canonical_csv(o, gt.log); });
        write_to(classes_json_path, [&](std::ostream& o) { actemb::write_class_json(o, gt); });
        return ACTEMB_OK;
    });
}

actemb_status actemb_config_validate(const actemb_config* config) {
    return guarded([&] {
        to_config(config);
        return ACTEMB_OK;
    });
}

actemb_status actemb_embed(const actemb_log* log, const actemb_config* config, unsigned threads,
                           actemb_embedding** out) {
    return guarded([&] {
        require(log, "log");
        require(out, "out");
        auto cfg = to_config(config);
        auto handle = std::make_unique<actemb_embedding>();
        handle->embedding = actemb::embed(log->log, cfg, threads);
        handle->alphabet = log->log.alphabet();
        const auto& m = handle->embedding.matrix;
        for (auto a : m.row_labels()) handle->row_labels.push_back(handle->alphabet.label(a));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            handle->col_labels.push_back(
                actemb::column_label(m, j, handle->embedding.table, handle->alphabet));
        }
        *out = handle.release();
        return ACTEMB_OK;
    });
}

void actemb_embedding_free(actemb_embedding* embedding) { delete embedding; }

size_t actemb_embedding_rows(const actemb_embedding* e) {
    return e ? e->embedding.matrix.rows() : 0;
}

size_t actemb_embedding_cols(const actemb_embedding* e) {
    return e ? e->embedding.matrix.cols() : 0;
}

double actemb_embedding_value(const actemb_embedding* e, size_t row, size_t col) {
    if (!e || row >= e->embedding.matrix.rows() || col >= e->embedding.matrix.cols()) return 0.0;
    return e->embedding.matrix.value(row, col);
}

const char* actemb_embedding_row_label(const actemb_embedding* e, size_t row) {
    return e && row < e->row_labels.size() ? e->row_labels[row].c_str() : nullptr;
}

const char* actemb_embedding_col_label(const actemb_embedding* e, size_t col) {
    return e && col < e->col_labels.size() ? e->col_labels[col].c_str() : nullptr;
}

actemb_status actemb_embedding_write(const actemb_embedding* e, const char* csv_path,
                                     const char* meta_path) {
    return guarded([&] {
        require(e, "embedding");
        require(csv_path, "csv_path");
        const auto& emb = e->embedding;
        write_to(csv_path, [&](std::ostream& o) {
            actemb::write_embedding_csv(o, emb.matrix, emb.table, e->alphabet);
        });
        write_to(meta_path,
                 [&](std::ostream& o) { actemb::write_embedding_meta(o, emb.matrix, emb.table); });
        return ACTEMB_OK;
    });
}

actemb_status actemb_similarity_compute(const actemb_log* log, const actemb_config* config,
                                        unsigned threads, actemb_similarity** out) {
    return guarded([&] {
        require(log, "log");
        require(out, "out");
        auto cfg = to_config(config);
        auto handle = std::make_unique<actemb_similarity>();
        handle->sim = actemb::similarity_for(log->log, cfg, threads);
        handle->config = cfg;
        handle->alphabet = log->log.alphabet();
        for (auto a : handle->sim.labels()) handle->labels.push_back(handle->alphabet.label(a));
        *out = handle.release();
        return ACTEMB_OK;
    });
}

void actemb_similarity_free(actemb_similarity* sim) { delete sim; }

size_t actemb_similarity_size(const actemb_similarity* s) { return s ? s->sim.size() : 0; }

actemb_flavor actemb_similarity_flavor(const actemb_similarity* s) {
    return s && s->sim.flavor() == actemb::SimilarityFlavor::Substitution
               ? ACTEMB_FLAVOR_SUBSTITUTION
               : ACTEMB_FLAVOR_COSINE;
}

double actemb_similarity_value(const actemb_similarity* s, size_t i, size_t j) {
    if (!s || i >= s->sim.size() || j >= s->sim.size()) return 0.0;
    return s->sim.at(i, j);
}

const char* actemb_similarity_label(const actemb_similarity* s, size_t i) {
    return s && i < s->labels.size() ? s->labels[i].c_str() : nullptr;
}

actemb_status actemb_similarity_write(const actemb_similarity* s, const char* csv_path,
                                      const char* meta_path) {
    return guarded([&] {
        require(s, "similarity");
        require(csv_path, "csv_path");
        write_to(csv_path, [&](std::ostream& o) { actemb::write_distance_csv(o, s->sim, s->alphabet); });
        write_to(meta_path, [&](std::ostream& o) { actemb::write_distance_meta(o, s->sim, s->config); });
        return ACTEMB_OK;
    });
}

actemb_status actemb_cosine_distance(const double* u, const double* v, size_t n, double* out) {
    return guarded([&] {
        require(out, "out");
        if (n > 0) {
            require(u, "u");
            require(v, "v");
        }
        *out = actemb::cosine_distance({u, n}, {v, n});
        return ACTEMB_OK;
    });
}

actemb_status actemb_run_intrinsic(const actemb_log* log, const char* log_id,
                                   const actemb_config* configs, size_t n_configs, uint64_t seed,
                                   size_t samples, unsigned threads, const char* scores_json_path,
                                   const char* aggregate_csv_path,
                                   actemb_intrinsic_summary* summary) {
    return guarded([&] {
        require(log, "log");
        require(scores_json_path, "scores_json_path");
        auto cfgs = to_configs(configs, n_configs);
        actemb::IntrinsicOptions options;
        if (log_id) options.log_id = log_id;
        options.samples = samples;
        options.seed = seed;
        options.threads = threads;

        actemb::ScoreReport report{options.log_id, seed, samples,
                                   actemb::run_intrinsic(log->log, cfgs, options)};
        if (summary) {
            *summary = {report.run.job_count, report.run.scores.size(),
                        report.run.failures.size()};
        }
        actemb::export_report(report, scores_json_path, "json");
        if (report.run.scores.empty()) {
            actemb::fail(actemb::ErrorCode::Data,
                         "every job failed; first error: " +
                             (report.run.failures.empty() ? std::string("none")
                                                          : report.run.failures.front().message));
        }
        if (aggregate_csv_path) {
            actemb::AggregateReport agg{
                actemb::aggregate_scores(report.run.scores, report.run.failures)};
            actemb::export_report(agg, aggregate_csv_path, "csv");
        }
        return ACTEMB_OK;
    });
}

actemb_status actemb_aggregate_reports(const char* const* paths, size_t n_paths,
                                       const char* aggregate_csv_path) {
    return guarded([&] {
        require(aggregate_csv_path, "aggregate_csv_path");
        if (n_paths == 0) actemb::fail(actemb::ErrorCode::Parameter, "no score reports given");
        require(paths, "paths");
        std::vector<actemb::ScoreRecord> scores;
        std::vector<actemb::FailureRecord> failures;
        for (size_t i = 0; i < n_paths; ++i) {
            require(paths[i], "path");
            std::ifstream in(paths[i], std::ios::binary);
            if (!in) {
                actemb::fail(actemb::ErrorCode::Io, std::string("cannot open '") + paths[i] + "'");
            }
            auto r = actemb::read_score_report(in);
            scores.insert(scores.end(), r.run.scores.begin(), r.run.scores.end());
            failures.insert(failures.end(), r.run.failures.begin(), r.run.failures.end());
        }
        actemb::AggregateReport agg{actemb::aggregate_scores(scores, failures)};
        actemb::export_report(agg, aggregate_csv_path, "csv");
        return ACTEMB_OK;
    });
}

actemb_status actemb_run_bench(const actemb_log* log, const char* log_id,
                               const actemb_config* configs, size_t n_configs, int repetitions,
                               unsigned threads, const char* json_path, const char* csv_path,
                               actemb_bench_summary* summary) {
    return guarded([&] {
        require(log, "log");
        require(json_path, "json_path");
        if (n_configs == 0) actemb::fail(actemb::ErrorCode::Parameter, "no configs given");
        require(configs, "configs");
        // Invalid combinations become per-record errors instead of aborting the run.
        std::vector<actemb::MethodConfig> cfgs;
        for (size_t i = 0; i < n_configs; ++i) {
            actemb::MethodConfig c;
            c.method = static_cast<actemb::Method>(configs[i].method);
            c.context = configs[i].context == ACTEMB_CONTEXT_MSET ? actemb::ContextKind::Multiset
                                                                   : actemb::ContextKind::Sequence;
            c.weighting = static_cast<actemb::Weighting>(configs[i].weighting);
            c.window = configs[i].window;
            if (configs[i].method > ACTEMB_METHOD_SUBSTITUTION ||
                configs[i].weighting > ACTEMB_WEIGHT_PPMI) {
                actemb::fail(actemb::ErrorCode::Parameter, "unknown method or weighting");
            }
            cfgs.push_back(c);
        }
        actemb::BenchOptions options{repetitions, threads};
        actemb::BenchReport report{log_id ? log_id : "log", repetitions, threads,
                                   log->log.alphabet().activity_count(),
                                   actemb::run_runtime_bench(log->log, cfgs, options)};
        std::size_t failed = 0;
        for (const auto& r : report.records) failed += r.ok ? 0 : 1;
        if (summary) *summary = {report.records.size(), failed};
        actemb::export_report(report, json_path, "json");
        if (csv_path) actemb::export_report(report, csv_path, "csv");
        return ACTEMB_OK;
    });
}

}  // extern "C"
