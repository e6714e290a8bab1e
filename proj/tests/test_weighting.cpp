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

#include <doctest.h>

#include <cmath>
#include <random>

#include "context_extraction.hpp"
#include "count_matrices.hpp"
#include "error.hpp"
#include "support/oracle.hpp"
#include "support/synthetic.hpp"
#include "weighting.hpp"

using namespace actemb;

namespace {

struct Example {
    EventLog log = EventLog::from_labels(synthetic::example_log());
    OccurrenceTable table = extract_occurrences(log, 3, ContextKind::Multiset);
    EmbeddingMatrix ac = build_ac(table);

    std::size_t row(const char* a) const {
        auto id = *log.alphabet().find(a);
        return static_cast<std::size_t>(
            std::find(ac.row_labels().begin(), ac.row_labels().end(), id) - ac.row_labels().begin());
    }
    // Column {b,d} is the third context to appear.
    static constexpr std::size_t kBD = 2;
};

oracle::Labels context_labels(const OccurrenceTable& t, ContextId c, const Alphabet& al) {
    oracle::Labels out;
    for (ActivityId a : t.context(c)) out.push_back(al.label(a));
    if (t.kind() == ContextKind::Multiset) std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("weighting") {

TEST_CASE("PMI of the worked example") {
    Example ex;
    REQUIRE(render_context(ex.table, Example::kBD, ex.log.alphabet()) == "{b,d}");
    auto pmi = apply_pmi(ex.ac, ex.table);
    CHECK(std::abs(pmi.value(ex.row("d"), Example::kBD) - -0.3365) < 1e-4);
    CHECK(pmi.value(ex.row("d"), Example::kBD) == doctest::Approx(std::log((1.0 / 30) / ((7.0 / 30) * (6.0 / 30)))));
    CHECK(pmi.value(ex.row("c"), Example::kBD) == doctest::Approx(std::log(5.0)));
    CHECK(pmi.value(ex.row("a"), Example::kBD) == 0.0);
    CHECK(pmi.provenance().weighting == Weighting::Pmi);

    auto ppmi = apply_ppmi(ex.ac, ex.table);
    CHECK(ppmi.value(ex.row("d"), Example::kBD) == 0.0);
    CHECK(ppmi.value(ex.row("c"), Example::kBD) == pmi.value(ex.row("c"), Example::kBD));
}

TEST_CASE("provenance is checked") {
    Example ex;
    auto pmi = apply_pmi(ex.ac, ex.table);
    CHECK_THROWS_AS(apply_pmi(pmi, ex.table), Error);
    auto other = extract_occurrences(ex.log, 5, ContextKind::Multiset);
    CHECK_THROWS_AS(apply_pmi(ex.ac, other), Error);
    auto seq = extract_occurrences(ex.log, 3, ContextKind::Sequence);
    CHECK_THROWS_AS(apply_ppmi(ex.ac, seq), Error);
    CHECK(apply_weighting(ex.ac, ex.table, Weighting::None).to_dense() == ex.ac.to_dense());
}

TEST_CASE("literal formula, sparsity and clamping on random logs") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 80; ++i) {
        auto labeled = synthetic::random_log(rng);
        auto log = EventLog::from_labels(labeled);
        const auto& al = log.alphabet();
        for (int n = 2; n <= 4; ++n) {
            for (auto kind : {ContextKind::Multiset, ContextKind::Sequence}) {
                auto t = extract_occurrences(log, n, kind);
                auto windows = oracle::enumerate_windows(labeled, n, kind == ContextKind::Multiset);
                std::map<std::string, double> center_count;
                std::map<oracle::Labels, double> context_count;
                for (const auto& w : windows) {
                    ++center_count[w.center];
                    ++context_count[w.context];
                }
                const double big_n = double(windows.size());

                for (bool aa : {false, true}) {
                    auto raw = aa ? build_aa(t) : build_ac(t);
                    auto pmi = apply_pmi(raw, t);
                    auto ppmi = apply_ppmi(raw, t);
                    for (std::size_t r = 0; r < raw.rows(); ++r) {
                        const auto& a = al.label(raw.row_labels()[r]);
                        for (std::size_t c = 0; c < raw.cols(); ++c) {
                            double y = aa ? center_count[al.label(raw.column_labels()[c])]
                                          : context_count[context_labels(t, raw.column_labels()[c], al)];
                            double expected = oracle::pmi(raw.value(r, c), big_n, center_count[a], y);
                            CHECK(pmi.value(r, c) == doctest::Approx(expected).epsilon(1e-12));
                            if (raw.value(r, c) == 0.0) {
                                CHECK(pmi.value(r, c) == 0.0);
                                CHECK(ppmi.value(r, c) == 0.0);
                            }
                            CHECK(ppmi.value(r, c) == std::max(0.0, pmi.value(r, c)));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("duplicating every trace leaves PMI unchanged") {
    auto labeled = synthetic::structured_log(4, 8, 30);
    auto tripled = labeled;
    for (int k = 0; k < 2; ++k) tripled.insert(tripled.end(), labeled.begin(), labeled.end());
    auto a = EventLog::from_labels(labeled), b = EventLog::from_labels(tripled);
    for (auto kind : {ContextKind::Multiset, ContextKind::Sequence}) {
        auto ta = extract_occurrences(a, 3, kind), tb = extract_occurrences(b, 3, kind);
        for (bool aa : {false, true}) {
            auto pa = apply_pmi(aa ? build_aa(ta) : build_ac(ta), ta).to_dense();
            auto pb = apply_pmi(aa ? build_aa(tb) : build_ac(tb), tb).to_dense();
            REQUIRE(pa.size() == pb.size());
            for (std::size_t r = 0; r < pa.size(); ++r) {
                REQUIRE(pa[r].size() == pb[r].size());
                for (std::size_t c = 0; c < pa[r].size(); ++c) {
                    CHECK(pa[r][c] == doctest::Approx(pb[r][c]).epsilon(1e-12));
                }
            }
        }
    }
}

}
