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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "context_extraction.hpp"
#include "event_log.hpp"

namespace actemb {

enum class MatrixKind { ActivityActivity, ActivityContext };
enum class Weighting { None, Pmi, Ppmi };

std::string_view to_string(MatrixKind kind);
std::string_view to_string(Weighting weighting);
Weighting parse_weighting(std::string_view text);

struct Provenance {
    MatrixKind matrix = MatrixKind::ActivityActivity;
    ContextKind context = ContextKind::Sequence;
    int window_size = 3;
    Weighting weighting = Weighting::None;

    bool operator==(const Provenance&) const = default;
};

/// Row-compressed real matrix: one row per activity, columns are activities (AA)
/// or context ids (AC). Column indices within a row are ascending.
class EmbeddingMatrix {
public:
    struct Row {
        std::span<const std::uint32_t> columns;
        std::span<const double> values;
    };

    EmbeddingMatrix() = default;
    EmbeddingMatrix(Provenance provenance, std::vector<ActivityId> row_labels,
                    std::vector<std::uint32_t> column_labels);

    const Provenance& provenance() const noexcept { return provenance_; }
    const std::vector<ActivityId>& row_labels() const noexcept { return row_labels_; }
    /// ActivityId per column for AA, ContextId per column for AC.
    const std::vector<std::uint32_t>& column_labels() const noexcept { return column_labels_; }

    std::size_t rows() const noexcept { return row_labels_.size(); }
    std::size_t cols() const noexcept { return column_labels_.size(); }
    std::size_t nonzeros() const noexcept { return values_.size(); }

    Row row(std::size_t i) const;
    double value(std::size_t i, std::size_t j) const;
    std::vector<std::vector<double>> to_dense() const;

    /// Appends the next row; rows must be pushed in order with ascending columns.
    void push_row(std::span<const std::uint32_t> columns, std::span<const double> values);

    /// Returns a copy with every stored value mapped through `fn(row, column, value)`.
    /// Results equal to zero are dropped from storage.
    template <typename Fn>
    EmbeddingMatrix transformed(Weighting weighting, Fn&& fn) const {
        Provenance p = provenance_;
        p.weighting = weighting;
        EmbeddingMatrix out(p, row_labels_, column_labels_);
        std::vector<std::uint32_t> cols;
        std::vector<double> vals;
        for (std::size_t i = 0; i < rows(); ++i) {
            cols.clear();
            vals.clear();
            auto r = row(i);
            for (std::size_t k = 0; k < r.columns.size(); ++k) {
                double v = fn(i, r.columns[k], r.values[k]);
                if (v != 0.0) {
                    cols.push_back(r.columns[k]);
                    vals.push_back(v);
                }
            }
            out.push_row(cols, vals);
        }
        return out;
    }

private:
    Provenance provenance_;
    std::vector<ActivityId> row_labels_;
    std::vector<std::uint32_t> column_labels_;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::uint32_t> columns_;
    std::vector<double> values_;
};

/// AA(a,a') = sum over contexts shared by a and a' of #(a,c) + #(a',c).
/// The diagonal follows the same formula: AA(a,a) = 2 * #(a).
EmbeddingMatrix build_aa(const OccurrenceTable& table);

/// AC(a,c) = #(a,c), columns in context-id order.
EmbeddingMatrix build_ac(const OccurrenceTable& table);

/// Header "activity,<column labels>", one row per activity, %.17g values.
void write_embedding_csv(std::ostream& out, const EmbeddingMatrix& matrix,
                         const OccurrenceTable& table, const Alphabet& alphabet);

std::string column_label(const EmbeddingMatrix& matrix, std::size_t column,
                         const OccurrenceTable& table, const Alphabet& alphabet);

}  // namespace actemb
