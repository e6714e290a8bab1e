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

// Naive reference implementations used to cross-check the optimized paths.
// They work on labels only and share no code with the library.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Labels = std::vector<std::string>;
using LabeledLog = std::vector<Labels>;

inline const std::string kPad = "__PAD__";

struct Window {
    std::string center;
    Labels context;  // left then right; sorted by label when multiset
};

// Every window of the padded log, in trace order.
std::vector<Window> enumerate_windows(const LabeledLog& log, int n, bool multiset);

// (activity, context) -> count.
std::map<std::pair<std::string, Labels>, std::uint64_t> context_counts(
    const std::vector<Window>& windows);

// Sum of #(a,c) + #(b,c) over the contexts both a and b occur in.
std::uint64_t activity_activity(const std::vector<Window>& windows, const std::string& a,
                                const std::string& b);

double cosine_similarity(const std::vector<double>& u, const std::vector<double>& v);

// ln((x/N) / (p(a) p(y))) for x > 0, else 0.
double pmi(double x, double n, double count_a, double count_y);

}  // namespace oracle
