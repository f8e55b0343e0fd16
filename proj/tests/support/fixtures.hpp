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

#ifndef PG_TESTS_FIXTURES_HPP
#define PG_TESTS_FIXTURES_HPP

#include <algorithm>
#include <vector>

#include "pg/game.hpp"
#include "pg/generators.hpp"
#include "pg/oracle.hpp"
#include "pg/subgame.hpp"

namespace pg::testing {

// 0:(Even,2,[1]) 1:(Even,1,[0])
inline Game g1()
{
    return Game::build({{Owner::Even, 2, {1}}, {Owner::Even, 1, {0}}});
}

// two-node cycle with both priorities 1
inline Game g2(Owner owner = Owner::Even)
{
    return Game::build({{owner, 1, {1}}, {owner, 1, {0}}});
}

// 0:(Even,1,[1,2]) 1:(Odd,2,[0]) 2:(Odd,3,[0])
inline Game g3()
{
    return Game::build({{Owner::Even, 1, {1, 2}}, {Owner::Odd, 2, {0}}, {Owner::Odd, 3, {0}}});
}

inline NodeSet set_of(std::size_t n, std::initializer_list<NodeId> members)
{
    return NodeSet(n, members);
}

// Parameters of the standard random suite: n in [2, 8], priorities <= 6,
// out-degree <= 3.
inline GenParams suite_params(std::uint64_t seed, std::size_t max_n = 8)
{
    GenParams p;
    p.n = 2 + static_cast<std::size_t>(seed % (max_n - 1));
    p.max_priority = static_cast<Priority>(seed % 7);
    p.min_out = 1;
    p.max_out = std::min<std::size_t>(3, p.n - 1);
    p.owner_bias = 0.5;
    p.seed = seed;
    return p;
}

/**
 * Attractor by repeated application of the three closure rules until
 * nothing changes. Quadratic, for cross-checking only.
 */
inline NodeSet naive_attractor(const SubgameView& view, Owner player, const NodeSet& targets)
{
    const Game& g = view.game();
    NodeSet attr = targets;
    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeId v : view.live()) {
            if (attr.contains(v)) continue;
            bool any = false, all = true;
            for (NodeId u : g.successors(v)) {
                if (!view.contains(u)) continue;
                any = any || attr.contains(u);
                all = all && attr.contains(u);
            }
            if (g.owner(v) == player ? any : all) {
                attr.insert(v);
                changed = true;
            }
        }
    }
    return attr;
}

// Games are equal up to the order of successor lists.
inline bool same_game(const Game& a, const Game& b)
{
    if (a.size() != b.size()) return false;
    for (NodeId v = 0; v < a.size(); v++) {
        if (a.owner(v) != b.owner(v) || a.priority(v) != b.priority(v)) return false;
        std::vector<NodeId> sa(a.successors(v).begin(), a.successors(v).end());
        std::vector<NodeId> sb(b.successors(v).begin(), b.successors(v).end());
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    return true;
}

/**
 * Winner of every node of a possibly self-looping list of node specs, straight from
 * the definition: P wins v iff some positional strategy of P leaves no
 * opponent-favoured cycle reachable from v. Works on raw specs, so it
 * does not depend on the self-loop transform.
 */
inline std::vector<Owner> raw_winners(const std::vector<NodeSpec>& specs)
{
    const std::size_t n = specs.size();
    std::vector<Owner> winner(n, Owner::Odd);
    std::vector<char> even_wins(n, 0);

    std::vector<NodeId> choosers;
    for (NodeId v = 0; v < n; v++) {
        if (specs[v].owner == Owner::Even) choosers.push_back(v);
    }
    std::vector<std::size_t> choice(choosers.size(), 0);
    while (true) {
        RestrictedGraph g;
        g.priority.resize(n);
        g.successors.resize(n);
        for (NodeId v = 0; v < n; v++) {
            g.priority[v] = specs[v].priority;
            g.successors[v] = specs[v].successors;
        }
        for (std::size_t i = 0; i < choosers.size(); i++) {
            g.successors[choosers[i]] = {specs[choosers[i]].successors[choice[i]]};
        }
        for (NodeId v = 0; v < n; v++) {
            if (even_wins[v]) continue;
            // the part of the graph reachable from v
            std::vector<char> seen(n, 0);
            std::vector<NodeId> stack{v};
            seen[v] = 1;
            while (!stack.empty()) {
                NodeId x = stack.back();
                stack.pop_back();
                for (NodeId u : g.successors[x]) {
                    if (!seen[u]) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
                }
            }
            RestrictedGraph reach = g;
            for (NodeId x = 0; x < n; x++) {
                if (!seen[x]) reach.successors[x].clear();
            }
            if (!has_bad_cycle(reach, Owner::Even)) even_wins[v] = 1;
        }
        std::size_t i = 0;
        for (; i < choosers.size(); i++) {
            if (++choice[i] < specs[choosers[i]].successors.size()) break;
            choice[i] = 0;
        }
        if (i == choosers.size()) break;
    }
    for (NodeId v = 0; v < n; v++) winner[v] = even_wins[v] ? Owner::Even : Owner::Odd;
    return winner;
}

} // namespace pg::testing

#endif
