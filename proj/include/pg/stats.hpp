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

#ifndef PG_STATS_HPP
#define PG_STATS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pg/game.hpp"

namespace pg {

/**
 * One nontrivial execution of a recursive solver procedure, recorded when
 * tracing is enabled. Children are the recursive calls made directly by it.
 */
struct CallRecord
{
    Priority h = 0;
    int depth = 0;
    std::size_t live_nodes = 0;
    std::size_t p_self = 0;
    std::size_t p_opp = 0;
    std::size_t reduced_children = 0;     // decreased-precision calls, trivial or not
    std::size_t reduced_nontrivial = 0;
    std::size_t full_children = 0;        // full-precision calls, trivial or not
    std::size_t full_nontrivial = 0;
    std::uint64_t subtree_calls = 0;      // nontrivial executions in this subtree, itself included
};

struct CallStats
{
    // Executions that get past the base case.
    std::uint64_t nontrivial_calls = 0;
    // Nesting level of the deepest nontrivial execution; the root is level 0.
    int max_depth = 0;
    // Nontrivial executions per level h.
    std::vector<std::uint64_t> calls_per_level;
    // Most nonempty subgames simultaneously held by the recursion stack.
    std::size_t peak_live_sets = 0;
    // Filled only when tracing was requested, in post-order.
    std::vector<CallRecord> trace;
};

} // namespace pg

#endif
