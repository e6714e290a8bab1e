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

#include "weighting.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace actemb {

namespace {

void check_provenance(const EmbeddingMatrix& matrix, const OccurrenceTable& table) {
    const auto& p = matrix.provenance();
    if (p.weighting != Weighting::None) {
        fail(ErrorCode::Parameter, "matrix is already weighted (" +
                                       std::string(to_string(p.weighting)) + ")");
    }
    if (p.context != table.kind() || p.window_size != table.window_size()) {
        fail(ErrorCode::Parameter, "matrix and occurrence table come from different "
                                   "context settings");
    }
    if (matrix.row_labels() != table.activities()) {
        fail(ErrorCode::Parameter, "matrix rows do not match the occurrence table");
    }
    if (p.matrix == MatrixKind::ActivityContext && matrix.cols() != table.context_count()) {
        fail(ErrorCode::Parameter, "matrix columns do not match the occurrence table");
    }
}

template <typename Clamp>
EmbeddingMatrix pmi(const EmbeddingMatrix& matrix, const OccurrenceTable& table,
                    Weighting weighting, Clamp clamp) {
    check_provenance(matrix, table);
    const double n = static_cast<double>(table.total_events());
    const bool aa = matrix.provenance().matrix == MatrixKind::ActivityActivity;
    return matrix.transformed(weighting, [&](std::size_t row, std::uint32_t col, double value) {
        double row_mass = static_cast<double>(table.activity_total(matrix.row_labels()[row]));
        auto label = matrix.column_labels()[col];
        double col_mass = static_cast<double>(aa ? table.activity_total(label)
                                                 : table.context_total(label));
        return clamp(std::log((value / n) / ((row_mass / n) * (col_mass / n))));
    });
}

}  // namespace

EmbeddingMatrix apply_pmi(const EmbeddingMatrix& matrix, const OccurrenceTable& table) {
    return pmi(matrix, table, Weighting::Pmi, [](double v) { return v; });
}

EmbeddingMatrix apply_ppmi(const EmbeddingMatrix& matrix, const OccurrenceTable& table) {
    return pmi(matrix, table, Weighting::Ppmi, [](double v) { return std::max(0.0, v); });
}

EmbeddingMatrix apply_weighting(const EmbeddingMatrix& matrix, const OccurrenceTable& table,
                                Weighting weighting) {
    switch (weighting) {
        case Weighting::Pmi: return apply_pmi(matrix, table);
        case Weighting::Ppmi: return apply_ppmi(matrix, table);
        case Weighting::None: break;
    }
    return matrix;
}

}  // namespace actemb
