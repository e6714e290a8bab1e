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

#include "count_matrices.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "csv.hpp"
#include "error.hpp"

namespace actemb {

std::string_view to_string(MatrixKind kind) {
    return kind == MatrixKind::ActivityActivity ? "aa" : "ac";
}

std::string_view to_string(Weighting weighting) {
    switch (weighting) {
        case Weighting::None: return "none";
        case Weighting::Pmi: return "pmi";
        case Weighting::Ppmi: return "ppmi";
    }
    return "none";
}

Weighting parse_weighting(std::string_view text) {
    if (text == "none") return Weighting::None;
    if (text == "pmi") return Weighting::Pmi;
    if (text == "ppmi") return Weighting::Ppmi;
    fail(ErrorCode::Parameter, "unknown weighting '" + std::string(text) + "'");
}

EmbeddingMatrix::EmbeddingMatrix(Provenance provenance, std::vector<ActivityId> row_labels,
                                 std::vector<std::uint32_t> column_labels)
    : provenance_(provenance),
      row_labels_(std::move(row_labels)),
      column_labels_(std::move(column_labels)) {
    offsets_.reserve(row_labels_.size() + 1);
}

EmbeddingMatrix::Row EmbeddingMatrix::row(std::size_t i) const {
    if (i + 1 >= offsets_.size()) fail(ErrorCode::Parameter, "row index out of range");
    std::size_t b = offsets_[i], e = offsets_[i + 1];
    return {{columns_.data() + b, e - b}, {values_.data() + b, e - b}};
}

double EmbeddingMatrix::value(std::size_t i, std::size_t j) const {
    auto r = row(i);
    auto it = std::lower_bound(r.columns.begin(), r.columns.end(), j);
    if (it == r.columns.end() || *it != j) return 0.0;
    return r.values[static_cast<std::size_t>(it - r.columns.begin())];
}

std::vector<std::vector<double>> EmbeddingMatrix::to_dense() const {
    std::vector<std::vector<double>> out(rows(), std::vector<double>(cols(), 0.0));
    for (std::size_t i = 0; i < rows(); ++i) {
        auto r = row(i);
        for (std::size_t k = 0; k < r.columns.size(); ++k) out[i][r.columns[k]] = r.values[k];
    }
    return out;
}

void EmbeddingMatrix::push_row(std::span<const std::uint32_t> columns,
                               std::span<const double> values) {
    if (offsets_.size() > rows()) fail(ErrorCode::Parameter, "matrix already has all rows");
    if (columns.size() != values.size()) fail(ErrorCode::Parameter, "row size mismatch");
    columns_.insert(columns_.end(), columns.begin(), columns.end());
    values_.insert(values_.end(), values.begin(), values.end());
    offsets_.push_back(columns_.size());
}

namespace {

void require_nonempty(const OccurrenceTable& table) {
    if (table.total_events() == 0) fail(ErrorCode::EmptyLog, "empty occurrence table");
}

}  // namespace

EmbeddingMatrix build_aa(const OccurrenceTable& table) {
    require_nonempty(table);
    auto activities = table.activities();
    const std::size_t n = activities.size();
    std::vector<std::size_t> position(table.alphabet_size(), n);
    for (std::size_t i = 0; i < n; ++i) position[activities[i]] = i;

    // Column view: for each context, the activities observed in it.
    struct Member {
        std::uint32_t row;
        std::uint64_t count;
    };
    std::vector<std::vector<Member>> by_context(table.context_count());
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& e : table.entries(activities[i])) {
            by_context[e.context].push_back({static_cast<std::uint32_t>(i), e.count});
        }
    }

    std::vector<std::uint64_t> dense(n * n, 0);
    for (const auto& members : by_context) {
        for (const auto& x : members) {
            for (const auto& y : members) dense[x.row * n + y.row] += x.count + y.count;
        }
    }

    Provenance p{MatrixKind::ActivityActivity, table.kind(), table.window_size(), Weighting::None};
    EmbeddingMatrix m(p, activities,
                      std::vector<std::uint32_t>(activities.begin(), activities.end()));
    std::vector<std::uint32_t> cols;
    std::vector<double> vals;
    for (std::size_t i = 0; i < n; ++i) {
        cols.clear();
        vals.clear();
        for (std::size_t j = 0; j < n; ++j) {
            if (auto v = dense[i * n + j]; v != 0) {
                cols.push_back(static_cast<std::uint32_t>(j));
                vals.push_back(static_cast<double>(v));
            }
        }
        m.push_row(cols, vals);
    }
    return m;
}

EmbeddingMatrix build_ac(const OccurrenceTable& table) {
    require_nonempty(table);
    auto activities = table.activities();
    std::vector<std::uint32_t> contexts(table.context_count());
    for (std::size_t c = 0; c < contexts.size(); ++c) contexts[c] = static_cast<std::uint32_t>(c);

    Provenance p{MatrixKind::ActivityContext, table.kind(), table.window_size(), Weighting::None};
    EmbeddingMatrix m(p, activities, std::move(contexts));
    std::vector<std::uint32_t> cols;
    std::vector<double> vals;
    for (ActivityId a : activities) {
        cols.clear();
        vals.clear();
        for (const auto& e : table.entries(a)) {
            cols.push_back(e.context);
            vals.push_back(static_cast<double>(e.count));
        }
        m.push_row(cols, vals);
    }
    return m;
}

std::string column_label(const EmbeddingMatrix& matrix, std::size_t column,
                         const OccurrenceTable& table, const Alphabet& alphabet) {
    auto id = matrix.column_labels().at(column);
    if (matrix.provenance().matrix == MatrixKind::ActivityActivity) return alphabet.label(id);
    return render_context(table, id, alphabet);
}

void write_embedding_csv(std::ostream& out, const EmbeddingMatrix& matrix,
                         const OccurrenceTable& table, const Alphabet& alphabet) {
    out << "activity";
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
        out << ',' << csv::quote(column_label(matrix, j, table, alphabet));
    }
    out << '\n';
    char buf[32];
    std::vector<double> dense(matrix.cols());
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        std::fill(dense.begin(), dense.end(), 0.0);
        auto r = matrix.row(i);
        for (std::size_t k = 0; k < r.columns.size(); ++k) dense[r.columns[k]] = r.values[k];
        out << csv::quote(alphabet.label(matrix.row_labels()[i]));
        for (double v : dense) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << ',' << buf;
        }
        out << '\n';
    }
}

}  // namespace actemb
