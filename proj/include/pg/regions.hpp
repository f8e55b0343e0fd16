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

#ifndef PG_REGIONS_HPP
#define PG_REGIONS_HPP

#include <vector>

#include "pg/game.hpp"

namespace pg {

// Winning regions of a solved game; a partition of its nodes.
struct Regions
{
    NodeSet win_even;
    NodeSet win_odd;

    const NodeSet& of(Owner p) const { return p == Owner::Even ? win_even : win_odd; }
    Owner winner(NodeId v) const { return win_even.contains(v) ? Owner::Even : Owner::Odd; }

    bool is_partition_of(std::size_t n) const
    {
        return win_even.universe() == n && win_odd.universe() == n && !win_even.intersects(win_odd) &&
               win_even.size() + win_odd.size() == n;
    }

    friend bool operator==(const Regions&, const Regions&) = default;
};

// Regions where `won_by` is Win_player and everything else goes to the opponent.
Regions regions_from(Owner player, const NodeSet& won_by);

/// Positional strategy of one player: a partial map from nodes to successors.
class Strategy
{
public:
    Strategy() = default;
    Strategy(Owner player, std::size_t n) : player_(player), moves_(n, kNoNode) {}

    Owner player() const { return player_; }
    std::size_t universe() const { return moves_.size(); }

    bool has(NodeId v) const { return v < moves_.size() && moves_[v] != kNoNode; }
    NodeId at(NodeId v) const { return moves_[v]; }
    void set(NodeId v, NodeId to) { moves_[v] = to; }
    void unset(NodeId v) { moves_[v] = kNoNode; }

    std::size_t defined() const;

    friend bool operator==(const Strategy&, const Strategy&) = default;

private:
    Owner player_ = Owner::Even;
    std::vector<NodeId> moves_;
};

} // namespace pg

#endif
