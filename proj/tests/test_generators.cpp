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

#include "pg/generators.hpp"
#include "pg/pgsolver_io.hpp"
#include "pg/solver.hpp"
#include "support/fixtures.hpp"

using namespace pg;
using namespace pg::testing;

TEST(GeneratorTest, TwoNodesFormCycle)
{
    for (std::uint64_t seed = 1; seed <= 20; seed++) {
        Game g = random_game({.n = 2, .max_priority = 3, .min_out = 1, .max_out = 1, .seed = seed});
        ASSERT_EQ(g.size(), 2u);
        EXPECT_EQ(g.successors(0)[0], 1u);
        EXPECT_EQ(g.successors(1)[0], 0u);
    }
}

TEST(GeneratorTest, Deterministic)
{
    for (std::uint64_t seed = 1; seed <= 50; seed++) {
        GenParams p = suite_params(seed, 30);
        EXPECT_TRUE(same_game(random_game(p), random_game(p)));
        Game a = random_game(p);
        Game b = random_game(p);
        for (NodeId v = 0; v < a.size(); v++) {
            EXPECT_TRUE(std::ranges::equal(a.successors(v), b.successors(v)));
        }
    }
    GenParams p;
    GenParams q = p;
    q.seed = 2;
    EXPECT_FALSE(same_game(random_game(p), random_game(q)));
}

TEST(GeneratorTest, FixedOutput)
{
    // pins the sequence for this generator version
    static_assert(kGeneratorVersion == 1);
    Game g = random_game({.n = 4, .max_priority = 3, .min_out = 1, .max_out = 2, .seed = 7});
    EXPECT_EQ(emit_pgsolver(make_named(g)), "parity 3;\n0 3 1 3;\n1 0 0 2,3;\n2 2 1 0,1;\n3 3 0 0,2;\n");
}

TEST(GeneratorTest, ValidOverManySeeds)
{
    for (std::uint64_t seed = 1; seed <= 1000; seed++) {
        GenParams p = suite_params(seed, 16);
        Game g = random_game(p);
        ASSERT_EQ(g.size(), p.n);
        for (NodeId v = 0; v < g.size(); v++) {
            const auto succ = g.successors(v);
            EXPECT_GE(succ.size(), p.min_out);
            EXPECT_LE(succ.size(), p.max_out);
            EXPECT_GE(g.priority(v), 0);
            EXPECT_LE(g.priority(v), p.max_priority);
            for (NodeId u : succ) EXPECT_NE(u, v);
        }
    }
}

TEST(GeneratorTest, OwnerBias)
{
    std::size_t even = 0, total = 0;
    for (std::uint64_t seed = 1; seed <= 100; seed++) {
        Game g = random_game({.n = 20, .owner_bias = 0.25, .seed = seed});
        for (NodeId v = 0; v < g.size(); v++) even += g.owner(v) == Owner::Even;
        total += g.size();
    }
    const double share = static_cast<double>(even) / total;
    EXPECT_GT(share, 0.2);
    EXPECT_LT(share, 0.3);
}

TEST(GeneratorTest, SuiteCoversBothWinners)
{
    std::size_t even = 0, odd = 0;
    const std::uint64_t seeds = 1000;
    for (std::uint64_t seed = 1; seed <= seeds; seed++) {
        Regions r = solve(random_game(suite_params(seed)), {}).regions;
        even += !r.win_even.empty();
        odd += !r.win_odd.empty();
    }
    EXPECT_GE(even * 10, seeds);
    EXPECT_GE(odd * 10, seeds);
}

TEST(GeneratorTest, RejectsBadParams)
{
    EXPECT_THROW(random_game({.n = 1}), GeneratorError);
    EXPECT_THROW(random_game({.n = 4, .min_out = 0, .max_out = 2}), GeneratorError);
    EXPECT_THROW(random_game({.n = 4, .min_out = 3, .max_out = 2}), GeneratorError);
    EXPECT_THROW(random_game({.n = 4, .min_out = 1, .max_out = 4}), GeneratorError);
    EXPECT_THROW(random_game({.n = 4, .max_priority = -1}), GeneratorError);
}

TEST(FamilyTest, Chain)
{
    Game g = family_chain(3);
    ASSERT_EQ(g.size(), 6u);
    for (NodeId v = 0; v < 6; v++) {
        EXPECT_EQ(g.priority(v), static_cast<Priority>(v));
        EXPECT_EQ(g.owner(v), opponent(parity_owner(g.priority(v))));
    }
    EXPECT_EQ(g.successors(0).size(), 1u);
    EXPECT_EQ(g.successors(2).size(), 2u);
    EXPECT_EQ(g.successors(5).size(), 1u);
    EXPECT_EQ(solve(g, {}).regions, solve_bruteforce(g));
}

TEST(FamilyTest, Clique)
{
    Game g = family_clique(5);
    ASSERT_EQ(g.size(), 5u);
    EXPECT_EQ(g.edge_count(), 20u);
    EXPECT_EQ(g.owner(0), Owner::Even);
    EXPECT_EQ(g.owner(1), Owner::Odd);
    EXPECT_EQ(g.priority(4), 4);
    EXPECT_EQ(solve(g, {}).regions, solve_bruteforce(g));
}
