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

#include "pg/attractor.hpp"
#include "pg/oracle.hpp"
#include "support/fixtures.hpp"

using namespace pg;
using namespace pg::testing;

TEST(BadCycleTest, Examples)
{
    RestrictedGraph even_cycle{{2, 1}, {{1}, {0}}};
    EXPECT_FALSE(has_bad_cycle(even_cycle, Owner::Even));
    EXPECT_TRUE(has_bad_cycle(even_cycle, Owner::Odd));

    // 0 -> 1 -> 0 is Even's, 0 -> 2 -> 0 is Odd's
    RestrictedGraph both{{0, 2, 3}, {{1, 2}, {0}, {0}}};
    EXPECT_TRUE(has_bad_cycle(both, Owner::Even));
    EXPECT_TRUE(has_bad_cycle(both, Owner::Odd));

    RestrictedGraph acyclic{{1, 2, 3}, {{1}, {2}, {}}};
    EXPECT_FALSE(has_bad_cycle(acyclic, Owner::Even));
    EXPECT_FALSE(has_bad_cycle(acyclic, Owner::Odd));
}

TEST(BadCycleTest, NestedCycleBelowTop)
{
    // the odd 1-2 cycle avoids the priority-4 node
    RestrictedGraph g{{4, 1, 3}, {{1}, {2, 0}, {1}}};
    EXPECT_TRUE(has_bad_cycle(g, Owner::Even));
    EXPECT_TRUE(has_bad_cycle(g, Owner::Odd));  // 0 -> 1 -> 0 has top 4
}

TEST(OracleTest, SpecGames)
{
    EXPECT_EQ(solve_bruteforce(g1()).win_even, set_of(2, {0, 1}));
    EXPECT_EQ(solve_bruteforce(g2()).win_odd, set_of(2, {0, 1}));
    EXPECT_EQ(solve_bruteforce(g3()).win_even, set_of(3, {0, 1, 2}));
}

TEST(OracleTest, Limits)
{
    EXPECT_THROW(solve_bruteforce(family_clique(65)), OracleError);
    // Even owns 32 nodes with 63 choices each
    EXPECT_THROW(solve_bruteforce(family_clique(64)), OracleError);
    EXPECT_THROW(enumerate_dominions(family_clique(13), Owner::Even, 2), OracleError);
}

TEST(OracleTest, AgreesWithLoopAwareReference)
{
    for (std::uint64_t seed = 1; seed <= 300; seed++) {
        Game g = random_game(suite_params(seed, 7));
        Regions r = solve_bruteforce(g);
        EXPECT_TRUE(r.is_partition_of(g.size()));
        const auto winners = raw_winners(g.specs());
        for (NodeId v = 0; v < g.size(); v++) EXPECT_EQ(r.winner(v), winners[v]) << "seed " << seed;
    }
}

TEST(OracleTest, StrategiesAreWinning)
{
    for (std::uint64_t seed = 1; seed <= 200; seed++) {
        Game g = random_game(suite_params(seed));
        BruteforceSolution s = solve_bruteforce_with_strategies(g);
        EXPECT_TRUE(verify_strategy(g, Owner::Even, s.regions.win_even, s.even)) << "seed " << seed;
        EXPECT_TRUE(verify_strategy(g, Owner::Odd, s.regions.win_odd, s.odd)) << "seed " << seed;
    }
}

TEST(DominionTest, Examples)
{
    Game a = g1();
    EXPECT_FALSE(is_dominion(a, {set_of(2, {0}), Owner::Even}));
    EXPECT_TRUE(is_dominion(a, {set_of(2, {0, 1}), Owner::Even}));
    EXPECT_FALSE(is_dominion(a, {set_of(2, {0, 1}), Owner::Odd}));
    // vacuously
    EXPECT_TRUE(is_dominion(a, {NodeSet(2), Owner::Even}));

    Game c = g3();
    EXPECT_TRUE(is_dominion(c, {set_of(3, {0, 1}), Owner::Even}));
    // closed, but the only cycle inside has top priority 3
    EXPECT_FALSE(is_dominion(c, {set_of(3, {0, 2}), Owner::Even}));
}

TEST(DominionTest, EnumerateG3)
{
    const auto even = enumerate_dominions(g3(), Owner::Even, 3);
    ASSERT_EQ(even.size(), 2u);
    EXPECT_EQ(even[0], set_of(3, {0, 1}));
    EXPECT_EQ(even[1], set_of(3, {0, 1, 2}));
    EXPECT_TRUE(enumerate_dominions(g3(), Owner::Odd, 3).empty());
}

TEST(DominionTest, ViewAndGameAgree)
{
    for (std::uint64_t seed = 1; seed <= 50; seed++) {
        Game g = random_game(suite_params(seed, 6));
        SubgameView full(g);
        for (Owner p : {Owner::Even, Owner::Odd}) {
            for (const auto& s : enumerate_dominions(g, p, g.size())) {
                EXPECT_TRUE(is_dominion(full, {s, p}));
            }
        }
    }
}

TEST(DominionTest, Consistency)
{
    for (std::uint64_t seed = 1; seed <= 150; seed++) {
        Game g = random_game(suite_params(seed, 7));
        Regions r = solve_bruteforce(g);
        const auto even = enumerate_dominions(g, Owner::Even, g.size());
        const auto odd = enumerate_dominions(g, Owner::Odd, g.size());
        for (const auto& s : even) {
            EXPECT_GE(s.size(), 2u);
            EXPECT_TRUE(s.is_subset_of(r.win_even));
            for (const auto& t : odd) EXPECT_FALSE(s.intersects(t)) << "seed " << seed;
        }
        for (const auto& t : odd) {
            EXPECT_GE(t.size(), 2u);
            EXPECT_TRUE(t.is_subset_of(r.win_odd));
        }
        // nonempty winning regions are dominions
        if (!r.win_even.empty()) EXPECT_TRUE(is_dominion(g, {r.win_even, Owner::Even}));
        if (!r.win_odd.empty()) EXPECT_TRUE(is_dominion(g, {r.win_odd, Owner::Odd}));
    }
}

TEST(FactsTest, SpecGames)
{
    for (const Game& g : {g1(), g2(), g3()}) {
        const auto samples = singletons_and_pairs(g.size());
        FactsReport rep = check_facts(g, samples);
        EXPECT_TRUE(rep.ok());
        EXPECT_GT(rep.fact1_checked, 0u);
    }
}

TEST(FactsTest, SamplesShape)
{
    const auto s = singletons_and_pairs(4);
    EXPECT_EQ(s.size(), 4u + 6u);
    for (const auto& x : s) EXPECT_TRUE(x.size() == 1 || x.size() == 2);
}

TEST(FactsTest, RandomGames)
{
    std::size_t fact2 = 0;
    for (std::uint64_t seed = 1; seed <= 40; seed++) {
        Game g = random_game(suite_params(seed, 6));
        const auto samples = singletons_and_pairs(g.size());
        FactsReport rep = check_facts(g, samples);
        EXPECT_TRUE(rep.ok()) << "seed " << seed;
        fact2 += rep.fact2_checked;
    }
    EXPECT_GT(fact2, 0u);
}
