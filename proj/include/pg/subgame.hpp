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

#ifndef PG_SUBGAME_HPP
#define PG_SUBGAME_HPP

#include <ranges>
#include <stdexcept>

#include "pg/game.hpp"

namespace pg {

class SubgameError : public std::logic_error
{
public:
    enum class Kind { NotAttractorClosed, EmptyView };

    SubgameError(Kind kind, NodeId node, const std::string& what)
        : std::logic_error(what), kind_(kind), node_(node)
    {
    }

    Kind kind() const { return kind_; }
    NodeId node() const { return node_; }

private:
    Kind kind_;
    NodeId node_;
};

/**
 * A game with some nodes masked out. Removals must be attractor-closed so
 * that every live node keeps a live successor; a view never gains nodes.
 * The base game must outlive the view.
 */
class SubgameView
{
public:
    explicit SubgameView(const Game& game) : game_(&game), live_(NodeSet::full(game.size())) {}

    const Game& game() const { return *game_; }
    const NodeSet& live() const { return live_; }
    std::size_t size() const { return live_.size(); }
    bool empty() const { return live_.empty(); }
    bool contains(NodeId v) const { return live_.contains(v); }

    auto live_successors(NodeId v) const
    {
        return game_->successors(v) | std::views::filter([this](NodeId u) { return live_.contains(u); });
    }
    auto live_predecessors(NodeId v) const
    {
        return game_->predecessors(v) | std::views::filter([this](NodeId u) { return live_.contains(u); });
    }

    std::size_t live_out_degree(NodeId v) const;

    // Live nodes minus `to_remove`. Throws NotAttractorClosed if a remaining
    // node would be left without a live successor.
    SubgameView restrict(const NodeSet& to_remove) const;

    // In-place form of restrict().
    void remove(const NodeSet& to_remove);

private:
    const Game* game_;
    NodeSet live_;
};

// Throws SubgameError(EmptyView) on an empty view.
Priority max_priority(const SubgameView& view);

NodeSet nodes_with_priority(const SubgameView& view, Priority p);

} // namespace pg

#endif
