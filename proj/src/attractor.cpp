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

#include "pg/attractor.hpp"

#include <vector>

namespace pg {

NodeSet
attractor(const SubgameView& view, Owner player, const NodeSet& targets, AttractorCounters* counters)
{
    const Game& game = view.game();
    NodeSet attr(game.size());
    std::vector<NodeId> queue;
    queue.reserve(targets.size());
    for (NodeId v : targets) {
        if (!view.contains(v)) throw AttractorError(v);
        attr.insert(v);
        queue.push_back(v);
    }

    // remaining[v] = live successors of opponent node v not yet attracted;
    // zero means not yet initialised
    std::vector<std::uint32_t> remaining(game.size(), 0);
    std::uint64_t visits = 0;

    while (!queue.empty()) {
        const NodeId u = queue.back();
        queue.pop_back();
        for (NodeId v : game.predecessors(u)) {
            visits++;
            if (attr.contains(v) || !view.contains(v)) continue;
            if (game.owner(v) != player) {
                if (remaining[v] == 0) {
                    for (NodeId w : game.successors(v)) {
                        visits++;
                        remaining[v] += view.contains(w);
                    }
                }
                if (--remaining[v] != 0) continue;
            }
            attr.insert(v);
            queue.push_back(v);
        }
    }

    if (counters) counters->edge_visits += visits;
    return attr;
}

} // namespace pg
