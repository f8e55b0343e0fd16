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

#ifndef PG_ORACLE_HPP
#define PG_ORACLE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "pg/regions.hpp"
#include "pg/subgame.hpp"

namespace pg {

/*
 * Exponential ground truth, kept independent of the recursive solvers: it
 * enumerates positional strategies and inspects cycles directly.
 */

class OracleError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kMaxStrategies = 10'000'000;
inline constexpr std::size_t kMaxOracleNodes = 64;
inline constexpr std::size_t kMaxEnumerationNodes = 12;

// A graph in which every node keeps only some of its game edges, e.g. the
// game graph with one player's choices fixed by a strategy.
struct RestrictedGraph
{
    std::vector<Priority> priority;
    std::vector<std::vector<NodeId>> successors;
};

// Restriction of `game` to `region` where nodes of `player` follow `strat`
// and opponent nodes keep their edges into the region.
RestrictedGraph restrict_by_strategy(const Game& game, const NodeSet& region, const Strategy& strat);

/**
 * True iff the graph has a cycle whose maximal priority has the parity of
 * the opponent of `player`. For each such priority p we look for a cycle
 * through a priority-p node among the nodes of priority <= p.
 */
bool has_bad_cycle(const RestrictedGraph& graph, Owner player);

struct BruteforceSolution
{
    Regions regions;
    // Uniform positional winning strategies on the respective regions.
    Strategy even;
    Strategy odd;
};

/**
 * Solves by enumerating positional strategies of each player; a node is won
 * by P iff some strategy of P keeps every reachable cycle P-favoured. Both
 * sides are enumerated and must complement each other.
 * Throws OracleError if the game has more than kMaxOracleNodes nodes or
 * either player has more than kMaxStrategies positional strategies.
 */
Regions solve_bruteforce(const Game& game);
BruteforceSolution solve_bruteforce_with_strategies(const Game& game);

struct DominionQuery
{
    NodeSet set;
    Owner player = Owner::Even;
};

/**
 * S is a dominion for P when the opponent cannot leave S, P can always stay
 * in S, and P wins every node of the game induced by S.
 */
bool is_dominion(const Game& game, const DominionQuery& q);
bool is_dominion(const SubgameView& view, const DominionQuery& q);

// All dominions of `player` with 2..max_size nodes, ordered by size and then
// lexicographically. Throws OracleError for games with more than
// kMaxEnumerationNodes nodes.
std::vector<NodeSet> enumerate_dominions(const Game& game, Owner player, std::size_t max_size);

// True iff `strat` keeps every play from `region` inside it and all cycles
// it allows there are won by `player`.
bool verify_strategy(const Game& game, Owner player, const NodeSet& region, const Strategy& strat);

struct FactViolation
{
    int fact = 0;
    Owner player = Owner::Even;
    NodeSet dominion;
    NodeSet removed_from;
};

struct FactsReport
{
    std::size_t fact1_checked = 0;
    std::size_t fact2_checked = 0;
    std::vector<FactViolation> violations;

    bool ok() const { return violations.empty(); }
};

/**
 * Checks, for every dominion S of either player P and every X in `samples`:
 *   - S \ Atr_P(X) is a dominion for P in G \ Atr_P(X);
 *   - if S and X are disjoint, S survives in G \ Atr_opp(X) and is still a
 *     dominion for P there.
 */
FactsReport check_facts(const Game& game, std::span<const NodeSet> samples);

// All singleton and two-element node sets of a game with n nodes.
std::vector<NodeSet> singletons_and_pairs(std::size_t n);

} // namespace pg

#endif
