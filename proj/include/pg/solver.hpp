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

#ifndef PG_SOLVER_HPP
#define PG_SOLVER_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "pg/regions.hpp"
#include "pg/stats.hpp"
#include "pg/subgame.hpp"

namespace pg {

enum class Algorithm { Classic, QPT, Oracle };

const char* to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(const std::string& name);

#ifdef NDEBUG
inline constexpr bool kDebugBuild = false;
#else
inline constexpr bool kDebugBuild = true;
#endif

struct SolverConfig
{
    Algorithm algorithm = Algorithm::Classic;
    // Classic: leave the loop once Atr_opp(W_opp) adds nothing to W_opp.
    bool attractor_guard = false;
    // QPT: clamp both precisions to the live node count on entry.
    bool clamp_precision = false;
    // QPT: track exactness and skip the full-precision call when the last
    // decreased-precision call was exact and empty.
    bool exactness_flag = false;
    // Classic and Oracle only.
    bool collect_strategy = false;
    // Record one CallRecord per nontrivial execution.
    bool trace = false;
    // Also solve from the Odd side and check that the regions complement.
    bool cross_check = kDebugBuild;
};

// Precision bounds on the dominion sizes a QPT call must detect.
struct Precision
{
    std::size_t self = 0;
    std::size_t opp = 0;
};

class SolverError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

struct SolveResult
{
    Regions regions;
    std::optional<Strategy> even_strategy;
    std::optional<Strategy> odd_strategy;
    CallStats stats;
};

/**
 * Solves the whole game with the configured algorithm. The recursive solvers
 * compute Win_Even from the top with h = max priority rounded up to even;
 * Win_Odd is the complement.
 */
SolveResult solve(const Game& game, const SolverConfig& config = {});

// Smallest h >= max priority with the parity of `player` (0 or 1 for the
// empty game).
Priority top_level(const Game& game, Owner player);

struct ClassicOptions
{
    bool attractor_guard = false;
    bool trace = false;
};

/**
 * Zielonka's recursive procedure for `player` at level h: returns
 * Win_player of the live subgame. Requires h to have the parity of `player`
 * and to bound every live priority; throws SolverError otherwise.
 */
NodeSet solve_classic(const SubgameView& view, Priority h, Owner player, const ClassicOptions& options = {},
                      CallStats* stats = nullptr);

struct QptOptions
{
    bool clamp_precision = false;
    bool exactness_flag = false;
    bool trace = false;
};

struct QptResult
{
    NodeSet won;
    // The result is known to be the full winning region of `player`.
    bool exact = false;
};

/**
 * The precision-bounded variant of the recursive procedure. The returned set
 * contains every dominion of `player` with at most prec.self nodes and is
 * disjoint from every opponent dominion with at most prec.opp nodes. With
 * prec = (n, n) it is exactly Win_player.
 */
QptResult solve_qpt_player(const SubgameView& view, Priority h, Precision prec, Owner player,
                           const QptOptions& options = {}, CallStats* stats = nullptr);

struct StrategySolution
{
    Regions regions;
    Strategy even;
    Strategy odd;
};

// Classic solve that also records positional winning strategies for both
// players on their winning regions.
StrategySolution extract_strategy_classic(const Game& game);

} // namespace pg

#endif
