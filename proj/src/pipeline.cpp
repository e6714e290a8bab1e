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

#include "pipeline.hpp"

#include "error.hpp"
#include "weighting.hpp"

namespace actemb {

std::string_view to_string(Method method) {
    switch (method) {
        case Method::ActivityActivity: return "aa";
        case Method::ActivityContext: return "ac";
        case Method::Substitution: return "substitution";
    }
    return "aa";
}

Method parse_method(std::string_view text) {
    if (text == "aa") return Method::ActivityActivity;
    if (text == "ac") return Method::ActivityContext;
    if (text == "substitution" || text == "ss") return Method::Substitution;
    fail(ErrorCode::Parameter, "unknown method '" + std::string(text) + "'");
}

void MethodConfig::validate() const {
    if (window < 2) {
        fail(ErrorCode::Parameter, "window size must be >= 2, got " + std::to_string(window));
    }
    if (method == Method::Substitution &&
        (context != ContextKind::Sequence || weighting != Weighting::None)) {
        fail(ErrorCode::Parameter, "substitution scores require context=seq and weight=none");
    }
}

std::string MethodConfig::label() const {
    return std::string(to_string(method)) + "/" + std::string(to_string(context)) + "/" +
           std::string(to_string(weighting)) + "/" + std::to_string(window);
}

Embedding embed(const EventLog& log, const MethodConfig& config, unsigned threads) {
    config.validate();
    if (config.method == Method::Substitution) {
        fail(ErrorCode::Parameter, "substitution scores have no embedding matrix");
    }
    auto table = extract_occurrences(log, config.window, config.context, threads);
    auto raw = config.method == Method::ActivityActivity ? build_aa(table) : build_ac(table);
    auto weighted = apply_weighting(raw, table, config.weighting);
    return {std::move(table), std::move(weighted)};
}

PairwiseSimilarity similarity_for(const EventLog& log, const MethodConfig& config,
                                  unsigned threads) {
    config.validate();
    if (config.method == Method::Substitution) {
        return substitution_scores(
            extract_occurrences(log, config.window, ContextKind::Sequence, threads));
    }
    return pairwise_distance_matrix(embed(log, config, threads).matrix, threads);
}

std::vector<MethodConfig> expand_grid(const std::vector<Method>& methods,
                                      const std::vector<ContextKind>& contexts,
                                      const std::vector<Weighting>& weightings,
                                      const std::vector<int>& windows) {
    std::vector<MethodConfig> out;
    for (Method m : methods) {
        if (m == Method::Substitution) {
            for (int n : windows) out.push_back({m, ContextKind::Sequence, Weighting::None, n});
            continue;
        }
        for (ContextKind c : contexts) {
            for (Weighting w : weightings) {
                for (int n : windows) out.push_back({m, c, w, n});
            }
        }
    }
    return out;
}

}  // namespace actemb
