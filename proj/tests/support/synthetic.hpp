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

// Event log generators for tests.

#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "oracle.hpp"

namespace synthetic {

using oracle::LabeledLog;

// [<a,b,c,d,e> x5, <a,d,d,b,e>]
LabeledLog example_log();

// Up to max_traces traces of length 1..8 over at most max_activities labels.
LabeledLog random_log(std::mt19937_64& rng, int max_traces = 10, int max_activities = 6);

// Process-like log: a random sequence of blocks (single step, exclusive
// choice, parallel, loop, optional) over `activities` labels.
LabeledLog structured_log(std::uint64_t seed, int activities, int traces);

// First-order Markov log with geometric trace lengths of the given mean.
LabeledLog markov_log(std::uint64_t seed, int activities, int traces, double mean_length);

// <a,x,b> x x_traces and <c,d> x other_traces: x occurs in one context only
// and shares it with no other activity.
LabeledLog clone_log(int x_traces = 4, int other_traces = 2);

std::string to_csv(const LabeledLog& log);

}  // namespace synthetic
