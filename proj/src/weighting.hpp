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

#include "context_extraction.hpp"
#include "count_matrices.hpp"

namespace actemb {

/// PMI re-weighting of a raw AA or AC matrix built from `table`, natural log.
/// Non-zero cells become ln((x/N) / (p(a) p(y))) where y is the column
/// activity (AA) or context (AC); zero cells stay zero.
EmbeddingMatrix apply_pmi(const EmbeddingMatrix& matrix, const OccurrenceTable& table);

/// apply_pmi followed by clamping negatives to zero.
EmbeddingMatrix apply_ppmi(const EmbeddingMatrix& matrix, const OccurrenceTable& table);

/// Dispatches on `weighting`; Weighting::None returns a copy.
EmbeddingMatrix apply_weighting(const EmbeddingMatrix& matrix, const OccurrenceTable& table,
                                Weighting weighting);

}  // namespace actemb
