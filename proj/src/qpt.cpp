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

#include "pg/attractor.hpp"
#include "pg/solver.hpp"
#include "probe.hpp"

namespace pg {

namespace {

/**
 * The three stages of one execution share a single loop:
 *   Decreased  -- search opponent dominions of size <= p_opp/2 until none is found;
 *   Full       -- one search with the full opponent precision;
 *   After      -- decreased precision again, until nothing is found.
 * Every recursive call passes the (possibly halved) opponent precision as
 * the callee's own precision and p_self as the callee's opponent precision.
 */
enum class Stage { Decreased, Full, After };

class Qpt
{
public:
    Qpt(const QptOptions& options, CallStats* stats)
        : clamp_(options.clamp_precision), exactness_(options.exactness_flag), probe_(stats, options.trace)
    {
    }

    QptResult run(SubgameView view, Priority h, std::size_t p_self, std::size_t p_opp, Owner player, int depth)
    {
        if (clamp_) {
            p_self = std::min(p_self, view.size());
            p_opp = std::min(p_opp, view.size());
        }
        if (view.empty()) return {NodeSet(view.game().size()), true};
        if (p_self <= 1) return {NodeSet(view.game().size()), false};

        CallRecord rec = probe_.enter(h, depth, view.size(), p_self, p_opp);
        const Owner opp = opponent(player);
        bool exact = true;
        Stage stage = Stage::Decreased;

        while (true) {
            const NodeSet top = nodes_with_priority(view, h);
            SubgameView sub = view.restrict(attractor(view, player, top));

            const bool reduced = stage != Stage::Full;
            const std::size_t child_self = reduced ? p_opp / 2 : p_opp;

            const auto mark = probe_.calls();
            const bool pushed = !sub.empty();
            if (pushed) probe_.push_set();
            QptResult child = run(std::move(sub), h - 1, child_self, p_self, opp, depth + 1);
            if (pushed) probe_.pop_set();
            probe_.child(rec, reduced, mark);
            exact = exact && child.exact;

            if (!child.won.empty()) {
                view.remove(attractor(view, opp, child.won));
                if (stage == Stage::Full) stage = Stage::After;
                continue;
            }
            if (stage == Stage::Decreased) {
                // an exact empty answer already settles the level
                if (exactness_ && child.exact) break;
                stage = Stage::Full;
                continue;
            }
            break;
        }

        probe_.leave(rec);
        return {view.live(), exact};
    }

private:
    bool clamp_;
    bool exactness_;
    detail::Probe probe_;
};

} // namespace

QptResult
solve_qpt_player(const SubgameView& view, Priority h, Precision prec, Owner player, const QptOptions& options,
                 CallStats* stats)
{
    detail::check_level(view, h, player);
    Qpt solver(options, stats);
    return solver.run(view, h, prec.self, prec.opp, player, 0);
}

} // namespace pg
