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
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "context_extraction.hpp"
#include "count_matrices.hpp"
#include "event_log.hpp"

namespace actemb {

enum class SimilarityFlavor { Cosine, Substitution };

std::string_view to_string(SimilarityFlavor flavor);

/// Square, symmetric activity-by-activity similarity matrix.
class PairwiseSimilarity {
public:
    PairwiseSimilarity() = default;
    PairwiseSimilarity(std::vector<ActivityId> labels, SimilarityFlavor flavor);
    PairwiseSimilarity(std::vector<ActivityId> labels, SimilarityFlavor flavor,
                       std::vector<double> values);

    const std::vector<ActivityId>& labels() const noexcept { return labels_; }
    SimilarityFlavor flavor() const noexcept { return flavor_; }
    std::size_t size() const noexcept { return labels_.size(); }

    double at(std::size_t i, std::size_t j) const { return values_[i * labels_.size() + j]; }
    void set(std::size_t i, std::size_t j, double v);

    /// Position of `activity` in labels(), or size() when absent.
    std::size_t index_of(ActivityId activity) const;

private:
    std::vector<ActivityId> labels_;
    SimilarityFlavor flavor_ = SimilarityFlavor::Cosine;
    std::vector<double> values_;
};

/// 1 - u.v / (|u| |v|). One all-zero vector gives 1, two give 0.
double cosine_distance(std::span<const double> u, std::span<const double> v);

/// Cosine similarity between all embedding rows, in row order.
PairwiseSimilarity pairwise_distance_matrix(const EmbeddingMatrix& embeddings,
                                            unsigned threads = 1);

/// Log-ratio scores over the sequence-context AA matrix, read directly as
/// similarities: denominator p(a)p(b) on the diagonal, 2 p(a)p(b) off it.
PairwiseSimilarity substitution_scores(const OccurrenceTable& table);

/// Square CSV with activity labels on both axes. Cosine matrices are written as
/// distances (1 - s), substitution matrices as raw scores.
void write_distance_csv(std::ostream& out, const PairwiseSimilarity& sim,
                        const Alphabet& alphabet);

}  // namespace actemb
