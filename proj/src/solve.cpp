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

#include <algorithm>

#include "pg/oracle.hpp"
#include "pg/solver.hpp"

namespace pg {

const char*
to_string(Algorithm a)
{
    switch (a) {
    case Algorithm::Classic: return "classic";
    case Algorithm::QPT: return "qpt";
    case Algorithm::Oracle: return "oracle";
    }
    return "?";
}

std::optional<Algorithm>
parse_algorithm(const std::string& name)
{
    if (name == "classic") return Algorithm::Classic;
    if (name == "qpt") return Algorithm::QPT;
    if (name == "oracle") return Algorithm::Oracle;
    return std::nullopt;
}

Priority
top_level(const Game& game, Owner player)
{
    Priority h = std::max<Priority>(game.max_priority(), 0);
    if (parity_owner(h) != player) h++;
    return h;
}

namespace {

NodeSet
recursive_win(const Game& game, const SolverConfig& config, Owner player, CallStats* stats)
{
    const SubgameView full(game);
    const Priority h = top_level(game, player);
    if (config.algorithm == Algorithm::Classic) {
        return solve_classic(full, h, player, {config.attractor_guard, config.trace}, stats);
    }
    const Precision prec{game.size(), game.size()};
    return solve_qpt_player(full, h, prec, player, {config.clamp_precision, config.exactness_flag, config.trace}, stats)
        .won;
}

} // namespace

SolveResult
solve(const Game& game, const SolverConfig& config)
{
    SolveResult result;
    if (config.algorithm == Algorithm::Oracle) {
        if (config.collect_strategy) {
            auto sol = solve_bruteforce_with_strategies(game);
            result.regions = std::move(sol.regions);
            result.even_strategy = std::move(sol.even);
            result.odd_strategy = std::move(sol.odd);
        } else {
            result.regions = solve_bruteforce(game);
        }
        return result;
    }

    result.regions = regions_from(Owner::Even, recursive_win(game, config, Owner::Even, &result.stats));

    if (config.cross_check) {
        const NodeSet odd = recursive_win(game, config, Owner::Odd, nullptr);
        if (!(odd == result.regions.win_odd)) {
            throw SolverError(std::string("Even- and Odd-rooted ") + to_string(config.algorithm) +
                              " solves do not complement each other");
        }
    }

    if (config.collect_strategy && config.algorithm == Algorithm::Classic) {
        auto sol = extract_strategy_classic(game);
        if (!(sol.regions == result.regions)) throw SolverError("strategy extraction disagrees with the solve");
        result.even_strategy = std::move(sol.even);
        result.odd_strategy = std::move(sol.odd);
    }
    return result;
}

} // namespace pg
