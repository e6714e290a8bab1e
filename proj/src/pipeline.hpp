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

#include <string>
#include <string_view>
#include <vector>

#include "context_extraction.hpp"
#include "count_matrices.hpp"
#include "event_log.hpp"
#include "similarity.hpp"

namespace actemb {

enum class Method { ActivityActivity, ActivityContext, Substitution };

std::string_view to_string(Method method);
Method parse_method(std::string_view text);

/// One embedding method: matrix type x context kind x weighting, plus the window.
struct MethodConfig {
    Method method = Method::ActivityActivity;
    ContextKind context = ContextKind::Sequence;
    Weighting weighting = Weighting::None;
    int window = 3;

    /// Throws Error(Parameter) for window < 2 or substitution with anything
    /// other than sequence contexts and no weighting.
    void validate() const;
    /// "aa/seq/pmi/3"
    std::string label() const;

    auto operator<=>(const MethodConfig&) const = default;
};

struct Embedding {
    OccurrenceTable table;
    EmbeddingMatrix matrix;
};

/// Extract -> build -> weight. Substitution configs are rejected here; use
/// similarity_for().
Embedding embed(const EventLog& log, const MethodConfig& config, unsigned threads = 1);

/// Cosine similarity of the embedding rows, or the substitution scores.
PairwiseSimilarity similarity_for(const EventLog& log, const MethodConfig& config,
                                  unsigned threads = 1);

/// Cartesian product; substitution contributes one (seq, none) config per window.
std::vector<MethodConfig> expand_grid(const std::vector<Method>& methods,
                                      const std::vector<ContextKind>& contexts,
                                      const std::vector<Weighting>& weightings,
                                      const std::vector<int>& windows);

}  // namespace actemb
