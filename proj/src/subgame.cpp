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

#include "pg/subgame.hpp"

#include <algorithm>

namespace pg {

std::size_t
SubgameView::live_out_degree(NodeId v) const
{
    std::size_t d = 0;
    for (NodeId u : game_->successors(v)) d += live_.contains(u);
    return d;
}

SubgameView
SubgameView::restrict(const NodeSet& to_remove) const
{
    SubgameView out = *this;
    out.remove(to_remove);
    return out;
}

void
SubgameView::remove(const NodeSet& to_remove)
{
    // only live predecessors of removed nodes can lose their last successor
    NodeSet checked(live_.universe());
    for (NodeId u : to_remove) {
        if (!live_.contains(u)) continue;
        for (NodeId v : game_->predecessors(u)) {
            if (!live_.contains(v) || to_remove.contains(v) || !checked.insert(v)) continue;
            const auto succ = game_->successors(v);
            const bool keeps_one = std::any_of(succ.begin(), succ.end(), [&](NodeId w) {
                return live_.contains(w) && !to_remove.contains(w);
            });
            if (!keeps_one) {
                throw SubgameError(SubgameError::Kind::NotAttractorClosed, v,
                                   "removal is not attractor-closed: node " + std::to_string(v) +
                                       " loses all successors");
            }
        }
    }
    for (NodeId u : to_remove) live_.erase(u);
}

Priority
max_priority(const SubgameView& view)
{
    if (view.empty()) throw SubgameError(SubgameError::Kind::EmptyView, kNoNode, "max_priority of an empty view");
    Priority best = -1;
    for (NodeId v : view.live()) best = std::max(best, view.game().priority(v));
    return best;
}

NodeSet
nodes_with_priority(const SubgameView& view, Priority p)
{
    NodeSet out(view.game().size());
    for (NodeId v : view.live()) {
        if (view.game().priority(v) == p) out.insert(v);
    }
    return out;
}

} // namespace pg
