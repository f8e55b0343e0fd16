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

#ifndef PG_GAME_HPP
#define PG_GAME_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pg/node_set.hpp"

namespace pg {

enum class Owner : unsigned char { Even = 0, Odd = 1 };

constexpr Owner opponent(Owner p) { return p == Owner::Even ? Owner::Odd : Owner::Even; }

// Priorities are non-negative; the solvers use signed levels because the
// recursion may step one below zero on an empty subgame.
using Priority = int;

// The player favoured by a priority (or by a solver level h).
constexpr Owner parity_owner(Priority p) { return (p & 1) ? Owner::Odd : Owner::Even; }

const char* to_string(Owner p);

struct NodeSpec
{
    Owner owner = Owner::Even;
    Priority priority = 0;
    std::vector<NodeId> successors;

    friend bool operator==(const NodeSpec&, const NodeSpec&) = default;
};

class GameError : public std::runtime_error
{
public:
    enum class Kind { EmptySuccessors, DanglingEdge, SelfLoop, DuplicateEdge, NegativePriority };

    GameError(Kind kind, NodeId node, NodeId target = kNoNode);

    Kind kind() const { return kind_; }
    NodeId node() const { return node_; }
    NodeId target() const { return target_; }

private:
    Kind kind_;
    NodeId node_;
    NodeId target_;
};

/**
 * Immutable game graph. Every node has at least one successor, there are no
 * self-loops and no duplicate edges; predecessor lists are derived.
 */
class Game
{
public:
    Game() = default;

    // Validates the specs and throws GameError on the first violation.
    static Game build(std::vector<NodeSpec> specs);

    std::size_t size() const { return owner_.size(); }
    bool empty() const { return owner_.empty(); }

    Owner owner(NodeId v) const { return owner_[v]; }
    Priority priority(NodeId v) const { return priority_[v]; }

    std::span<const NodeId> successors(NodeId v) const
    {
        return {succ_.data() + succ_start_[v], succ_start_[v + 1] - succ_start_[v]};
    }
    std::span<const NodeId> predecessors(NodeId v) const
    {
        return {pred_.data() + pred_start_[v], pred_start_[v + 1] - pred_start_[v]};
    }

    std::size_t edge_count() const { return succ_.size(); }

    // -1 for the empty game.
    Priority max_priority() const { return max_priority_; }

    NodeSpec spec(NodeId v) const;
    std::vector<NodeSpec> specs() const;

    /**
     * The subgame induced by `keep`: kept nodes with only the edges between
     * kept nodes. Throws GameError(EmptySuccessors) if some kept node has no
     * successor inside `keep`. The second component maps new ids to ids of
     * this game.
     */
    std::pair<Game, std::vector<NodeId>> induced(const NodeSet& keep) const;

private:
    std::vector<Owner> owner_;
    std::vector<Priority> priority_;
    std::vector<std::size_t> succ_start_{0};
    std::vector<NodeId> succ_;
    std::vector<std::size_t> pred_start_{0};
    std::vector<NodeId> pred_;
    Priority max_priority_ = -1;
};

struct NormalizationReport
{
    std::size_t self_loops_removed = 0;
    std::size_t duplicate_edges_removed = 0;
};

struct NormalizedSpecs
{
    std::vector<NodeSpec> specs;
    // old id -> new id. Original nodes keep their ids; subdivision nodes are
    // appended after them.
    std::vector<NodeId> mapping;
    NormalizationReport report;
};

/**
 * Replaces every self-loop v->v by v->v'->v through a fresh node v' carrying
 * v's priority, and drops duplicate edges. Winners of the original nodes are
 * unchanged.
 */
NormalizedSpecs normalize_self_loops(std::vector<NodeSpec> specs);

} // namespace pg

#endif
