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

#ifndef PG_SRC_PROBE_HPP
#define PG_SRC_PROBE_HPP

#include <algorithm>

#include "pg/stats.hpp"
#include "pg/subgame.hpp"

namespace pg::detail {

// Call counting shared by the recursive solvers. A null stats pointer turns
// every operation into a no-op.
class Probe
{
public:
    Probe(CallStats* stats, bool trace) : stats_(stats), trace_(trace && stats != nullptr) {}

    std::uint64_t calls() const { return stats_ ? stats_->nontrivial_calls : 0; }
    bool tracing() const { return trace_; }

    CallRecord enter(Priority h, int depth, std::size_t live, std::size_t p_self, std::size_t p_opp)
    {
        CallRecord rec;
        if (!stats_) return rec;
        stats_->nontrivial_calls++;
        stats_->max_depth = std::max(stats_->max_depth, depth);
        auto level = static_cast<std::size_t>(h);
        if (stats_->calls_per_level.size() <= level) stats_->calls_per_level.resize(level + 1, 0);
        stats_->calls_per_level[level]++;
        rec.h = h;
        rec.depth = depth;
        rec.live_nodes = live;
        rec.p_self = p_self;
        rec.p_opp = p_opp;
        rec.subtree_calls = stats_->nontrivial_calls - 1;  // start mark, fixed up in leave()
        return rec;
    }

    void child(CallRecord& rec, bool reduced, std::uint64_t mark) const
    {
        if (!trace_) return;
        const bool nontrivial = stats_->nontrivial_calls > mark;
        if (reduced) {
            rec.reduced_children++;
            rec.reduced_nontrivial += nontrivial;
        } else {
            rec.full_children++;
            rec.full_nontrivial += nontrivial;
        }
    }

    void leave(CallRecord& rec)
    {
        if (!trace_) return;
        rec.subtree_calls = stats_->nontrivial_calls - rec.subtree_calls;
        stats_->trace.push_back(rec);
    }

    // Brackets a nonempty subgame handed down to a recursive call.
    void push_set()
    {
        if (!stats_) return;
        live_sets_++;
        stats_->peak_live_sets = std::max(stats_->peak_live_sets, live_sets_);
    }
    void pop_set()
    {
        if (stats_) live_sets_--;
    }

private:
    CallStats* stats_;
    bool trace_;
    std::size_t live_sets_ = 0;
};

// Throws SolverError unless h has the parity of `player` and bounds every
// live priority.
void check_level(const SubgameView& view, Priority h, Owner player);

} // namespace pg::detail

#endif
