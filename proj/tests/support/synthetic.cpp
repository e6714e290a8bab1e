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

#include "synthetic.hpp"

#include <algorithm>
#include <cstdio>

namespace synthetic {

namespace {

std::string name(int i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "t%02d", i);
    return buf;
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

enum class BlockKind { Step, Choice, Parallel, Loop, Optional };

struct Block {
    BlockKind kind;
    std::vector<std::string> members;
    std::vector<double> weights;
};

}  // namespace

LabeledLog example_log() {
    LabeledLog log(5, {"a", "b", "c", "d", "e"});
    log.push_back({"a", "d", "d", "b", "e"});
    return log;
}

LabeledLog random_log(std::mt19937_64& rng, int max_traces, int max_activities) {
    const int activities = uniform(rng, 1, max_activities);
    LabeledLog log(static_cast<std::size_t>(uniform(rng, 1, max_traces)));
    for (auto& trace : log) {
        int len = uniform(rng, 1, 8);
        for (int i = 0; i < len; ++i) trace.push_back(std::string(1, static_cast<char>('a' + uniform(rng, 0, activities - 1))));
    }
    return log;
}

LabeledLog structured_log(std::uint64_t seed, int activities, int traces) {
    std::mt19937_64 rng(seed);
    std::vector<std::string> labels;
    for (int i = 1; i <= activities; ++i) labels.push_back(name(i));
    std::shuffle(labels.begin(), labels.end(), rng);

    std::vector<Block> blocks;
    for (std::size_t next = 0; next < labels.size();) {
        Block b;
        b.kind = static_cast<BlockKind>(uniform(rng, 0, 4));
        std::size_t size = b.kind == BlockKind::Choice || b.kind == BlockKind::Parallel
                               ? static_cast<std::size_t>(uniform(rng, 2, 3))
                               : 1;
        size = std::min(size, labels.size() - next);
        if (size == 1 && (b.kind == BlockKind::Choice || b.kind == BlockKind::Parallel)) {
            b.kind = BlockKind::Step;
        }
        for (std::size_t k = 0; k < size; ++k) {
            b.members.push_back(labels[next++]);
            b.weights.push_back(std::uniform_real_distribution<double>(0.2, 1.0)(rng));
        }
        blocks.push_back(std::move(b));
    }

    LabeledLog log(static_cast<std::size_t>(traces));
    for (auto& trace : log) {
        for (const auto& b : blocks) {
            switch (b.kind) {
                case BlockKind::Step:
                    trace.push_back(b.members[0]);
                    break;
                case BlockKind::Choice: {
                    std::discrete_distribution<std::size_t> pick(b.weights.begin(), b.weights.end());
                    trace.push_back(b.members[pick(rng)]);
                    break;
                }
                case BlockKind::Parallel: {
                    auto order = b.members;
                    std::shuffle(order.begin(), order.end(), rng);
                    trace.insert(trace.end(), order.begin(), order.end());
                    break;
                }
                case BlockKind::Loop: {
                    int times = uniform(rng, 1, 3);
                    for (int k = 0; k < times; ++k) trace.push_back(b.members[0]);
                    break;
                }
                case BlockKind::Optional:
                    if (uniform(rng, 0, 1) == 1) trace.push_back(b.members[0]);
                    break;
            }
        }
        if (trace.empty()) trace.push_back(blocks.front().members.front());
    }
    return log;
}

LabeledLog markov_log(std::uint64_t seed, int activities, int traces, double mean_length) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> successors(static_cast<std::size_t>(activities));
    for (auto& s : successors) {
        for (int k = 0; k < 3; ++k) s.push_back(uniform(rng, 0, activities - 1));
    }
    std::bernoulli_distribution stop(1.0 / mean_length);
    LabeledLog log(static_cast<std::size_t>(traces));
    for (auto& trace : log) {
        int a = uniform(rng, 0, std::min(activities, 5) - 1);
        trace.push_back(name(a + 1));
        while (!stop(rng)) {
            a = successors[static_cast<std::size_t>(a)][static_cast<std::size_t>(uniform(rng, 0, 2))];
            trace.push_back(name(a + 1));
        }
    }
    return log;
}

LabeledLog clone_log(int x_traces, int other_traces) {
    LabeledLog log(static_cast<std::size_t>(x_traces), {"a", "x", "b"});
    for (int i = 0; i < other_traces; ++i) log.push_back({"c", "d"});
    return log;
}

std::string to_csv(const LabeledLog& log) {
    std::string out = "case,activity\n";
    for (std::size_t t = 0; t < log.size(); ++t) {
        for (const auto& a : log[t]) out += std::to_string(t + 1) + "," + a + "\n";
    }
    return out;
}

}  // namespace synthetic
