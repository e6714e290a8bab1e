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

#include "similarity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "csv.hpp"
#include "error.hpp"

namespace actemb {

std::string_view to_string(SimilarityFlavor flavor) {
    return flavor == SimilarityFlavor::Cosine ? "cosine" : "substitution";
}

PairwiseSimilarity::PairwiseSimilarity(std::vector<ActivityId> labels, SimilarityFlavor flavor)
    : labels_(std::move(labels)), flavor_(flavor), values_(labels_.size() * labels_.size(), 0.0) {}

PairwiseSimilarity::PairwiseSimilarity(std::vector<ActivityId> labels, SimilarityFlavor flavor,
                                       std::vector<double> values)
    : labels_(std::move(labels)), flavor_(flavor), values_(std::move(values)) {
    if (values_.size() != labels_.size() * labels_.size()) {
        fail(ErrorCode::Parameter, "similarity values must form a square matrix");
    }
}

void PairwiseSimilarity::set(std::size_t i, std::size_t j, double v) {
    values_[i * labels_.size() + j] = v;
    values_[j * labels_.size() + i] = v;
}

std::size_t PairwiseSimilarity::index_of(ActivityId activity) const {
    return static_cast<std::size_t>(std::find(labels_.begin(), labels_.end(), activity) -
                                    labels_.begin());
}

namespace {

// Cosine similarity from a dot product and squared norms.
double cosine(double dot, double norm_u, double norm_v) {
    bool zero_u = norm_u == 0.0, zero_v = norm_v == 0.0;
    if (zero_u && zero_v) return 1.0;
    if (zero_u || zero_v) return 0.0;
    // sqrt(x * x) == x, so identical vectors come out at exactly 1.
    return std::clamp(dot / std::sqrt(norm_u * norm_v), -1.0, 1.0);
}

}  // namespace

double cosine_distance(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) fail(ErrorCode::Parameter, "vector lengths differ");
    if (u.empty()) fail(ErrorCode::Parameter, "vectors must not be empty");
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!std::isfinite(u[i]) || !std::isfinite(v[i])) {
            fail(ErrorCode::Parameter, "non-finite vector component");
        }
        dot += u[i] * v[i];
        nu += u[i] * u[i];
        nv += v[i] * v[i];
    }
    return 1.0 - cosine(dot, nu, nv);
}

PairwiseSimilarity pairwise_distance_matrix(const EmbeddingMatrix& embeddings, unsigned threads) {
    const std::size_t n = embeddings.rows();
    if (n == 0) fail(ErrorCode::Parameter, "no embeddings to compare");
    std::vector<double> norms(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (double x : embeddings.row(i).values) {
            if (!std::isfinite(x)) fail(ErrorCode::Parameter, "non-finite embedding value");
            norms[i] += x * x;
        }
    }

    PairwiseSimilarity sim(embeddings.row_labels(), SimilarityFlavor::Cosine);
    auto work = [&](std::size_t worker, std::size_t workers) {
        std::vector<double> scratch(embeddings.cols(), 0.0);
        for (std::size_t i = worker; i < n; i += workers) {
            auto ri = embeddings.row(i);
            for (std::size_t k = 0; k < ri.columns.size(); ++k) scratch[ri.columns[k]] = ri.values[k];
            for (std::size_t j = i; j < n; ++j) {
                auto rj = embeddings.row(j);
                double dot = 0.0;
                for (std::size_t k = 0; k < rj.columns.size(); ++k) {
                    dot += scratch[rj.columns[k]] * rj.values[k];
                }
                sim.set(i, j, cosine(dot, norms[i], norms[j]));
            }
            for (auto c : ri.columns) scratch[c] = 0.0;
        }
    };
    // Rows are dealt round-robin; every cell is written by exactly one worker.
    std::size_t workers = std::clamp<std::size_t>(threads, 1, n);
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
        for (auto& t : pool) t.join();
    }
    return sim;
}

PairwiseSimilarity substitution_scores(const OccurrenceTable& table) {
    if (table.kind() != ContextKind::Sequence) {
        fail(ErrorCode::Parameter, "substitution scores require sequence contexts");
    }
    auto aa = build_aa(table);
    const double n = static_cast<double>(table.total_events());
    PairwiseSimilarity sim(aa.row_labels(), SimilarityFlavor::Substitution);
    for (std::size_t i = 0; i < aa.rows(); ++i) {
        auto r = aa.row(i);
        double pa = static_cast<double>(table.activity_total(aa.row_labels()[i])) / n;
        for (std::size_t k = 0; k < r.columns.size(); ++k) {
            std::size_t j = r.columns[k];
            double pb = static_cast<double>(table.activity_total(aa.row_labels()[j])) / n;
            double expected = (i == j ? 1.0 : 2.0) * pa * pb;
            sim.set(i, j, std::log((r.values[k] / n) / expected));
        }
    }
    return sim;
}

void write_distance_csv(std::ostream& out, const PairwiseSimilarity& sim,
                        const Alphabet& alphabet) {
    out << "activity";
    for (auto a : sim.labels()) out << ',' << csv::quote(alphabet.label(a));
    out << '\n';
    const bool cosine_flavor = sim.flavor() == SimilarityFlavor::Cosine;
    char buf[32];
    for (std::size_t i = 0; i < sim.size(); ++i) {
        out << csv::quote(alphabet.label(sim.labels()[i]));
        for (std::size_t j = 0; j < sim.size(); ++j) {
            double v = cosine_flavor ? 1.0 - sim.at(i, j) : sim.at(i, j);
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << ',' << buf;
        }
        out << '\n';
    }
}

}  // namespace actemb
