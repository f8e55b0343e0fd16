/*
 * Copyright 2026 The pgsolve Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "pg/instrument.hpp"
#include "pg/report.hpp"
#include "support/fixtures.hpp"

using namespace pg;
using namespace pg::testing;

namespace {

/**
 * Checks the shape of a post-order trace: every record's children are the
 * records one level deeper that precede it back to the previous record at
 * its own depth or above.
 */
void check_trace(const std::vector<CallRecord>& trace, bool qpt, bool clamped = false)
{
    for (std::size_t i = 0; i < trace.size(); i++) {
        const CallRecord& r = trace[i];
        std::uint64_t below = 0;
        std::size_t children = 0;
        for (std::size_t j = i; j-- > 0 && trace[j].depth > r.depth;) {
            const CallRecord& c = trace[j];
            if (c.depth != r.depth + 1) continue;
            children++;
            below += c.subtree_calls;
            EXPECT_EQ(c.h, r.h - 1);
            EXPECT_LE(c.live_nodes, r.live_nodes);
            if (qpt && !clamped) {
                EXPECT_EQ(c.p_opp, r.p_self);
                EXPECT_TRUE(c.p_self == r.p_opp || c.p_self == r.p_opp / 2);
            } else if (qpt) {
                // clamping only ever lowers the recorded precisions
                EXPECT_LE(c.p_opp, r.p_self);
                EXPECT_LE(c.p_self, r.p_opp);
                EXPECT_LE(c.p_self, c.live_nodes);
            }
        }
        EXPECT_EQ(r.subtree_calls, below + 1);
        if (qpt) {
            EXPECT_EQ(children, r.reduced_nontrivial + r.full_nontrivial);
            EXPECT_LE(r.full_children, 1u);
            EXPECT_LE(r.full_nontrivial, r.full_children);
            EXPECT_LE(r.reduced_nontrivial, r.reduced_children);
            EXPECT_LE(r.reduced_children, r.live_nodes + 2);
            EXPECT_GE(r.p_self, 2u);
        }
    }
    if (!trace.empty()) {
        EXPECT_EQ(trace.back().depth, 0);
    }
}

} // namespace

TEST(BoundTest, Formula)
{
    CallStats none;
    BoundCheck b = check_call_bound(none, 2, 2);
    EXPECT_EQ(b.l, 2u);
    EXPECT_EQ(b.bound, 23);  // 2^2 * C(4, 2) - 1
    EXPECT_TRUE(b.ok);

    EXPECT_EQ(check_call_bound(none, 1, 5).bound, 0);
    EXPECT_EQ(check_call_bound(none, 0, 0).bound, 0);

    CallStats one;
    one.nontrivial_calls = 1;
    EXPECT_FALSE(check_call_bound(one, 1, 5).ok);
}

TEST(BoundTest, Helpers)
{
    EXPECT_EQ(floor_log2(1), 0u);
    EXPECT_EQ(floor_log2(2), 1u);
    EXPECT_EQ(floor_log2(63), 5u);
    EXPECT_EQ(floor_log2(64), 6u);
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(binomial(3, 5), 0);
    // 64^12 * C(76, 12) needs more than 64 bits
    BigInt big = check_call_bound(CallStats{}, 64, 64).bound;
    EXPECT_GT(big, BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST(BoundTest, DegenerateRuns)
{
    Game empty = Game::build({});
    InstrumentedRun r = run_instrumented(empty, {.algorithm = Algorithm::QPT});
    EXPECT_EQ(r.result.stats.nontrivial_calls, 0u);
    ASSERT_TRUE(r.bound);
    EXPECT_TRUE(r.bound->ok);

    CallStats stats;
    Game g = g1();
    solve_qpt_player(SubgameView(g), 2, {1, 2}, Owner::Even, {}, &stats);
    EXPECT_EQ(stats.nontrivial_calls, 0u);
}

TEST(BoundTest, RandomSuite)
{
    for (std::uint64_t seed = 1; seed <= 200; seed++) {
        Game g = random_game(suite_params(seed));
        for (int flags = 0; flags < 4; flags++) {
            SolverConfig c{.algorithm = Algorithm::QPT, .clamp_precision = bool(flags & 1),
                           .exactness_flag = bool(flags & 2)};
            InstrumentedRun r = run_instrumented(g, c);
            ASSERT_TRUE(r.bound);
            EXPECT_TRUE(r.bound->ok) << "seed " << seed;
            EXPECT_EQ(r.bound->observed, r.result.stats.nontrivial_calls);
        }
    }
}

TEST(StatsTest, CallsPerLevelSum)
{
    for (Algorithm a : {Algorithm::Classic, Algorithm::QPT}) {
        for (std::uint64_t seed = 1; seed <= 100; seed++) {
            Game g = random_game(suite_params(seed));
            CallStats s = solve(g, {.algorithm = a}).stats;
            std::uint64_t sum = 0;
            for (auto c : s.calls_per_level) sum += c;
            EXPECT_EQ(sum, s.nontrivial_calls);
        }
    }
}

TEST(TraceTest, QptShape)
{
    for (std::uint64_t seed = 1; seed <= 200; seed++) {
        Game g = random_game(suite_params(seed));
        for (int flags = 0; flags < 4; flags++) {
            CallStats stats;
            QptOptions o{.clamp_precision = bool(flags & 1), .exactness_flag = bool(flags & 2), .trace = true};
            solve_qpt_player(SubgameView(g), top_level(g, Owner::Even), {g.size(), g.size()}, Owner::Even, o,
                             &stats);
            ASSERT_EQ(stats.trace.size(), stats.nontrivial_calls);
            check_trace(stats.trace, true, o.clamp_precision);
            if (!stats.trace.empty()) EXPECT_EQ(stats.trace.back().live_nodes, g.size());
        }
    }
}

TEST(TraceTest, ClassicShape)
{
    for (bool guard : {false, true}) {
        for (std::uint64_t seed = 1; seed <= 200; seed++) {
            Game g = random_game(suite_params(seed));
            CallStats stats;
            solve_classic(SubgameView(g), top_level(g, Owner::Even), Owner::Even,
                          {.attractor_guard = guard, .trace = true}, &stats);
            ASSERT_EQ(stats.trace.size(), stats.nontrivial_calls);
            check_trace(stats.trace, false);
        }
    }
}

TEST(TraceTest, PeakLiveSets)
{
    for (std::uint64_t seed = 1; seed <= 300; seed++) {
        Game g = random_game(suite_params(seed));
        const auto cap = static_cast<std::size_t>(g.max_priority() + 1);
        for (Algorithm a : {Algorithm::Classic, Algorithm::QPT}) {
            CallStats s = solve(g, {.algorithm = a}).stats;
            EXPECT_LE(s.peak_live_sets, cap);
            EXPECT_LE(s.max_depth, g.max_priority() + 1);
        }
    }
}

TEST(ReportTest, JsonFields)
{
    NamedGame ng = make_named(g2());
    SolverConfig c{.algorithm = Algorithm::QPT};
    SolveRecord rec = make_record("g2.pg", ng, c, run_instrumented(ng.game, c));
    nlohmann::json j = to_json(rec);
    EXPECT_EQ(j["input"], "g2.pg");
    EXPECT_EQ(j["algorithm"], "qpt");
    EXPECT_TRUE(j["win_even"].empty());
    EXPECT_EQ(j["win_odd"], nlohmann::json({0, 1}));
    EXPECT_GE(j["stats"]["nontrivial_calls"].get<std::uint64_t>(), 1u);
    EXPECT_TRUE(j["bound_ok"].get<bool>());
    EXPECT_TRUE(j["bound"]["bound"].is_string());
    EXPECT_TRUE(j.contains("wall_time_us"));
    EXPECT_FALSE(j["flags"]["guard"].get<bool>());

    SolverConfig classic{.algorithm = Algorithm::Classic};
    nlohmann::json k = to_json(make_record("g2.pg", ng, classic, run_instrumented(ng.game, classic)));
    EXPECT_FALSE(k.contains("bound"));
}

TEST(ReportTest, OrderedArray)
{
    NamedGame a = make_named(g1());
    NamedGame b = make_named(g2());
    SolverConfig q{.algorithm = Algorithm::QPT};
    SolverConfig c{.algorithm = Algorithm::Classic};
    std::vector<SolveRecord> recs{make_record("b", b, q, run_instrumented(b.game, q)),
                                  make_record("a", a, q, run_instrumented(a.game, q)),
                                  make_record("a", a, c, run_instrumented(a.game, c))};
    nlohmann::json j = nlohmann::json::parse(emit_report(recs));
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[0]["input"], "a");
    EXPECT_EQ(j[0]["algorithm"], "classic");
    EXPECT_EQ(j[1]["algorithm"], "qpt");
    EXPECT_EQ(j[2]["input"], "b");
}
