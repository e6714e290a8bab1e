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

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "csv.hpp"
#include "error.hpp"

namespace actemb {

using Json = nlohmann::ordered_json;

namespace {

double round6(double seconds) { return std::round(seconds * 1e6) / 1e6; }

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

Json config_json(const MethodConfig& c) {
    return Json{{"method", to_string(c.method)},
                {"context", to_string(c.context)},
                {"weighting", to_string(c.weighting)},
                {"window", c.window}};
}

MethodConfig config_from_json(const Json& j) {
    MethodConfig c;
    c.method = parse_method(j.at("method").get<std::string>());
    c.context = parse_context_kind(j.at("context").get<std::string>());
    c.weighting = parse_weighting(j.at("weighting").get<std::string>());
    c.window = j.at("window").get<int>();
    return c;
}

void write_scores(std::ostream& out, const ScoreReport& r, bool as_json) {
    if (!as_json) {
        out << "log,method,context,weighting,window,r,w,sample,i_comp,i_nn,i_prec,i_tri\n";
        char buf[160];
        for (const auto& s : r.run.scores) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g", s.scores.comp, s.scores.nn,
                          s.scores.prec, s.scores.tri);
            out << csv::quote(s.log_id) << ',' << to_string(s.config.method) << ','
                << to_string(s.config.context) << ',' << to_string(s.config.weighting) << ','
                << s.config.window << ',' << s.r << ',' << s.w << ',' << s.sample << ',' << buf
                << '\n';
        }
        return;
    }
    Json scores = Json::array();
    for (const auto& s : r.run.scores) {
        Json j = config_json(s.config);
        j["r"] = s.r;
        j["w"] = s.w;
        j["sample"] = s.sample;
        j["i_comp"] = s.scores.comp;
        j["i_nn"] = s.scores.nn;
        j["i_prec"] = s.scores.prec;
        j["i_tri"] = s.scores.tri;
        scores.push_back(std::move(j));
    }
    Json failures = Json::array();
    for (const auto& f : r.run.failures) {
        Json j = config_json(f.config);
        j["r"] = f.r;
        j["w"] = f.w;
        j["sample"] = f.sample;
        j["error"] = f.message;
        failures.push_back(std::move(j));
    }
    Json doc{{"schema", kSchemaVersion},
             {"log", r.log_id},
             {"seed", r.seed},
             {"samples", r.samples},
             {"jobs", r.run.job_count},
             {"conventions",
              {{"candidates", "all other activities, unreplaced originals included"},
               {"ties", "smallest activity id first; in-class/out-of-class ties fail"},
               {"triplet", "strict inequality"},
               {"compactness", "min-max over off-diagonal similarities"}}},
             {"scores", std::move(scores)},
             {"failures", std::move(failures)}};
    out << doc.dump(2) << '\n';
}

void write_aggregate(std::ostream& out, const AggregateReport& r, bool as_json) {
    if (as_json) {
        Json rows = Json::array();
        for (const auto& row : r.rows) {
            Json j = config_json(row.config);
            j["logs"] = row.logs;
            j["jobs"] = row.jobs;
            j["failed"] = row.failed;
            j["i_comp"] = row.mean.comp;
            j["i_nn"] = row.mean.nn;
            j["i_prec"] = row.mean.prec;
            j["i_tri"] = row.mean.tri;
            rows.push_back(std::move(j));
        }
        out << Json{{"schema", kSchemaVersion}, {"rows", std::move(rows)}}.dump(2) << '\n';
        return;
    }
    out << "method,context,weighting,window,logs,jobs,failed,i_comp,i_nn,i_prec,i_tri\n";
    for (const auto& row : r.rows) {
        out << to_string(row.config.method) << ',' << to_string(row.config.context) << ','
            << to_string(row.config.weighting) << ',' << row.config.window << ',' << row.logs
            << ',' << row.jobs << ',' << row.failed << ',' << fixed6(row.mean.comp) << ','
            << fixed6(row.mean.nn) << ',' << fixed6(row.mean.prec) << ','
            << fixed6(row.mean.tri) << '\n';
    }
}

void write_bench(std::ostream& out, const BenchReport& r, bool as_json) {
    if (!as_json) {
        out << "method,context,weighting,window,ok,embed_seconds,distance_seconds,rows,"
               "embedding_dimension,nonzero_ratio,dense_bytes,sparse_bytes\n";
        for (const auto& rec : r.records) {
            out << to_string(rec.config.method) << ',' << to_string(rec.config.context) << ','
                << to_string(rec.config.weighting) << ',' << rec.config.window << ','
                << (rec.ok ? 1 : 0) << ',' << fixed6(rec.embed_seconds) << ','
                << fixed6(rec.distance_seconds) << ',' << rec.rows << ','
                << rec.embedding_dimension << ',' << fixed6(rec.nonzero_ratio) << ','
                << rec.dense_bytes << ',' << rec.sparse_bytes << '\n';
        }
        return;
    }
    Json records = Json::array();
    for (const auto& rec : r.records) {
        Json j = config_json(rec.config);
        j["ok"] = rec.ok;
        if (!rec.ok) {
            j["error"] = rec.error;
            records.push_back(std::move(j));
            continue;
        }
        j["embed_seconds"] = round6(rec.embed_seconds);
        j["distance_seconds"] = round6(rec.distance_seconds);
        Json es = Json::array(), ds = Json::array();
        for (double x : rec.embed_samples) es.push_back(round6(x));
        for (double x : rec.distance_samples) ds.push_back(round6(x));
        j["embed_samples"] = std::move(es);
        j["distance_samples"] = std::move(ds);
        j["rows"] = rec.rows;
        j["embedding_dimension"] = rec.embedding_dimension;
        j["nonzeros"] = rec.nonzeros;
        j["nonzero_ratio"] = rec.nonzero_ratio;
        j["estimated_bytes"] = rec.dense_bytes;
        j["sparse_bytes"] = rec.sparse_bytes;
        if (rec.config.method == Method::ActivityContext) {
            j["dimension_bound"] = context_dimension_bound(r.activity_count, rec.config.window);
        }
        records.push_back(std::move(j));
    }
    Json doc{{"schema", kSchemaVersion},
             {"log", r.log_id},
             {"repetitions", r.repetitions},
             {"statistic", "median"},
             {"threads", r.threads},
             {"activity_count", r.activity_count},
             {"records", std::move(records)}};
    out << doc.dump(2) << '\n';
}

}  // namespace

void write_report(std::ostream& out, const Report& report, std::string_view format) {
    if (format != "json" && format != "csv") {
        fail(ErrorCode::Parameter, "unknown report format '" + std::string(format) + "'");
    }
    const bool as_json = format == "json";
    std::visit(
        [&](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, ScoreReport>) write_scores(out, r, as_json);
            else if constexpr (std::is_same_v<T, AggregateReport>) write_aggregate(out, r, as_json);
            else write_bench(out, r, as_json);
        },
        report);
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::Io, "cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void export_report(const Report& report, const std::filesystem::path& path,
                   std::string_view format) {
    std::ostringstream buffer;
    write_report(buffer, report, format);
    auto out = open_output(path);
    out << buffer.str();
    if (!out.flush()) fail(ErrorCode::Io, "failed writing '" + path.string() + "'");
}

ScoreReport read_score_report(std::istream& in) {
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::exception& e) {
        fail(ErrorCode::Format, std::string("score report is not valid JSON: ") + e.what());
    }
    try {
        if (doc.at("schema").get<int>() != kSchemaVersion) {
            fail(ErrorCode::Format, "unsupported score report schema");
        }
        ScoreReport r;
        r.log_id = doc.at("log").get<std::string>();
        r.seed = doc.at("seed").get<std::uint64_t>();
        r.samples = doc.at("samples").get<std::size_t>();
        r.run.job_count = doc.at("jobs").get<std::size_t>();
        for (const auto& j : doc.at("scores")) {
            r.run.scores.push_back({r.log_id, config_from_json(j), j.at("r").get<std::size_t>(),
                                    j.at("w").get<int>(), j.at("sample").get<std::size_t>(),
                                    {j.at("i_comp").get<double>(), j.at("i_nn").get<double>(),
                                     j.at("i_prec").get<double>(), j.at("i_tri").get<double>()}});
        }
        for (const auto& j : doc.at("failures")) {
            r.run.failures.push_back({r.log_id, config_from_json(j), j.at("r").get<std::size_t>(),
                                      j.at("w").get<int>(), j.at("sample").get<std::size_t>(),
                                      j.at("error").get<std::string>()});
        }
        return r;
    } catch (const Json::exception& e) {
        fail(ErrorCode::Format, std::string("malformed score report: ") + e.what());
    }
}

std::uint64_t context_dimension_bound(std::size_t activity_count, int window) {
    std::uint64_t bound = 1;
    const std::uint64_t base = activity_count + 1;
    for (int i = 0; i < window - 1; ++i) {
        if (bound > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        bound *= base;
    }
    return bound;
}

void write_stats_json(std::ostream& out, const LogStats& stats) {
    Json doc{{"schema", kSchemaVersion},
             {"activity_count", stats.activity_count},
             {"trace_count", stats.trace_count},
             {"variant_count", stats.variant_count},
             {"variant_ratio", stats.variant_ratio},
             {"avg_trace_length", stats.avg_trace_length},
             {"event_count", stats.event_count},
             {"rank_tie_order", "ascending activity id (first appearance)"}};
    out << doc.dump(2) << '\n';
}

void write_embedding_meta(std::ostream& out, const EmbeddingMatrix& matrix,
                          const OccurrenceTable& table) {
    const auto& p = matrix.provenance();
    Json doc{{"schema", kSchemaVersion},
             {"method", to_string(p.matrix)},
             {"context", to_string(p.context)},
             {"weighting", to_string(p.weighting)},
             {"window", p.window_size},
             {"rows", matrix.rows()},
             {"columns", matrix.cols()},
             {"nonzeros", matrix.nonzeros()},
             {"events", table.total_events()},
             {"log_base", "e"}};
    if (p.matrix == MatrixKind::ActivityContext) {
        doc["dimension_bound"] = context_dimension_bound(matrix.rows(), p.window_size);
    }
    out << doc.dump(2) << '\n';
}

void write_distance_meta(std::ostream& out, const PairwiseSimilarity& sim,
                         const MethodConfig& config) {
    const bool cosine = sim.flavor() == SimilarityFlavor::Cosine;
    Json doc{{"schema", kSchemaVersion},
             {"flavor", to_string(sim.flavor())},
             {"values", cosine ? "cosine distance (1 - similarity)" : "raw substitution score"},
             {"size", sim.size()}};
    doc.update(config_json(config));
    if (cosine) doc["zero_vector"] = "distance 1 against a non-zero vector, 0 between two";
    out << doc.dump(2) << '\n';
}

}  // namespace actemb
