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

#include <string>
#include <vector>

#include "pg/attractor.hpp"
#include "pg/solver.hpp"
#include "probe.hpp"

namespace pg {

namespace {

// Attractor that also records, for every attracted node of `player` outside
// `targets`, the successor that pulled it in.
NodeSet
attract_recording(const SubgameView& view, Owner player, const NodeSet& targets, std::vector<NodeId>& moves)
{
    const Game& game = view.game();
    NodeSet attr = targets;
    std::vector<NodeId> queue = targets.to_vector();
    std::vector<std::uint32_t> remaining(game.size(), 0);
    while (!queue.empty()) {
        const NodeId u = queue.back();
        queue.pop_back();
        for (NodeId v : view.live_predecessors(u)) {
            if (attr.contains(v)) continue;
            if (game.owner(v) != player) {
                if (remaining[v] == 0) remaining[v] = static_cast<std::uint32_t>(view.live_out_degree(v));
                if (--remaining[v] != 0) continue;
            } else {
                moves[v] = u;
            }
            attr.insert(v);
            queue.push_back(v);
        }
    }
    return attr;
}

class Classic
{
public:
    Classic(const ClassicOptions& options, CallStats* stats, std::vector<NodeId>* moves)
        : guard_(options.attractor_guard), probe_(stats, options.trace), moves_(moves)
    {
    }

    // moves_, when set, receives for every node of the view a successor that
    // is winning for its owner if the owner wins it.
    NodeSet run(SubgameView view, Priority h, Owner player, int depth)
    {
        if (view.empty()) return NodeSet(view.game().size());

        CallRecord rec = probe_.enter(h, depth, view.size(), 0, 0);
        const Owner opp = opponent(player);
        NodeSet top(view.game().size());
        NodeSet top_attr(view.game().size());

        while (true) {
            top = nodes_with_priority(view, h);
            top_attr = attract(view, player, top);
            SubgameView sub = view.restrict(top_attr);

            const auto mark = probe_.calls();
            const bool pushed = !sub.empty();
            if (pushed) probe_.push_set();
            NodeSet opp_won = run(std::move(sub), h - 1, opp, depth + 1);
            if (pushed) probe_.pop_set();
            probe_.child(rec, false, mark);

            if (guard_) {
                NodeSet lost = attract(view, opp, opp_won);
                view.remove(lost);
                if (lost == opp_won) break;
            } else {
                if (opp_won.empty()) break;
                view.remove(attract(view, opp, opp_won));
            }
        }

        if (moves_) {
            for (NodeId v : top) {
                if (view.contains(v) && view.game().owner(v) == player) {
                    for (NodeId u : view.live_successors(v)) {
                        (*moves_)[v] = u;
                        break;
                    }
                }
            }
        }
        probe_.leave(rec);
        return view.live();
    }

private:
    NodeSet attract(const SubgameView& view, Owner player, const NodeSet& targets)
    {
        if (moves_) return attract_recording(view, player, targets, *moves_);
        return attractor(view, player, targets);
    }

    bool guard_;
    detail::Probe probe_;
    std::vector<NodeId>* moves_;
};

} // namespace

void
detail::check_level(const SubgameView& view, Priority h, Owner player)
{
    if (parity_owner(h) != player) {
        throw SolverError("level " + std::to_string(h) + " does not have the parity of " + to_string(player));
    }
    if (!view.empty() && max_priority(view) > h) {
        throw SolverError("level " + std::to_string(h) + " is below the maximal live priority");
    }
}

NodeSet
solve_classic(const SubgameView& view, Priority h, Owner player, const ClassicOptions& options, CallStats* stats)
{
    detail::check_level(view, h, player);
    Classic solver(options, stats, nullptr);
    return solver.run(view, h, player, 0);
}

StrategySolution
extract_strategy_classic(const Game& game)
{
    std::vector<NodeId> moves(game.size(), kNoNode);
    Classic solver(ClassicOptions{}, nullptr, &moves);
    NodeSet even_won = solver.run(SubgameView(game), top_level(game, Owner::Even), Owner::Even, 0);

    StrategySolution out{regions_from(Owner::Even, even_won), Strategy(Owner::Even, game.size()),
                         Strategy(Owner::Odd, game.size())};
    for (NodeId v = 0; v < game.size(); v++) {
        const Owner p = game.owner(v);
        if (out.regions.winner(v) != p) continue;
        (p == Owner::Even ? out.even : out.odd).set(v, moves[v]);
    }
    return out;
}

} // namespace pg
