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

#ifndef PG_ATTRACTOR_HPP
#define PG_ATTRACTOR_HPP

#include <cstdint>
#include <stdexcept>

#include "pg/subgame.hpp"

namespace pg {

class AttractorError : public std::invalid_argument
{
public:
    explicit AttractorError(NodeId node)
        : std::invalid_argument("attractor target " + std::to_string(node) + " is not live"), node_(node)
    {
    }
    NodeId node() const { return node_; }

private:
    NodeId node_;
};

struct AttractorCounters
{
    // Adjacency entries scanned, including entries of masked-out neighbours.
    std::uint64_t edge_visits = 0;
};

/**
 * Atr_player(view, targets): the least set containing `targets` that also
 * holds every live node of `player` with a live successor in it and every
 * live opponent node whose live successors all lie in it.
 *
 * Backward worklist with a countdown of remaining live successors for
 * opponent nodes, so the cost is linear in the adjacency of the live nodes.
 * Throws AttractorError if a target is not live.
 */
NodeSet attractor(const SubgameView& view, Owner player, const NodeSet& targets,
                  AttractorCounters* counters = nullptr);

} // namespace pg

#endif
