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

#include "pg/game.hpp"

#include <algorithm>

namespace pg {

const char*
to_string(Owner p)
{
    return p == Owner::Even ? "Even" : "Odd";
}

static std::string
describe(GameError::Kind kind, NodeId node, NodeId target)
{
    const std::string v = std::to_string(node);
    switch (kind) {
    case GameError::Kind::EmptySuccessors:
        return "node " + v + " has no successors";
    case GameError::Kind::DanglingEdge:
        return "node " + v + " has an edge to unknown node " + std::to_string(target);
    case GameError::Kind::SelfLoop:
        return "node " + v + " has a self-loop";
    case GameError::Kind::DuplicateEdge:
        return "node " + v + " has a duplicate edge to " + std::to_string(target);
    case GameError::Kind::NegativePriority:
        return "node " + v + " has a negative priority";
    }
    return "invalid game";
}

GameError::GameError(Kind kind, NodeId node, NodeId target)
    : std::runtime_error(describe(kind, node, target)), kind_(kind), node_(node), target_(target)
{
}

Game
Game::build(std::vector<NodeSpec> specs)
{
    const std::size_t n = specs.size();
    Game g;
    g.owner_.reserve(n);
    g.priority_.reserve(n);
    g.succ_start_.reserve(n + 1);

    std::vector<NodeId> last_seen(n, kNoNode);
    std::vector<std::size_t> indegree(n, 0);
    for (NodeId v = 0; v < n; v++) {
        const NodeSpec& s = specs[v];
        if (s.priority < 0) throw GameError(GameError::Kind::NegativePriority, v);
        if (s.successors.empty()) throw GameError(GameError::Kind::EmptySuccessors, v);
        for (NodeId u : s.successors) {
            if (u >= n) throw GameError(GameError::Kind::DanglingEdge, v, u);
            if (u == v) throw GameError(GameError::Kind::SelfLoop, v);
            if (last_seen[u] == v) throw GameError(GameError::Kind::DuplicateEdge, v, u);
            last_seen[u] = v;
            indegree[u]++;
            g.succ_.push_back(u);
        }
        g.owner_.push_back(s.owner);
        g.priority_.push_back(s.priority);
        g.succ_start_.push_back(g.succ_.size());
        g.max_priority_ = std::max(g.max_priority_, s.priority);
    }

    g.pred_start_.assign(n + 1, 0);
    for (NodeId v = 0; v < n; v++) g.pred_start_[v + 1] = g.pred_start_[v] + indegree[v];
    g.pred_.resize(g.succ_.size());
    std::vector<std::size_t> fill(g.pred_start_.begin(), g.pred_start_.end() - 1);
    for (NodeId v = 0; v < n; v++) {
        for (NodeId u : g.successors(v)) g.pred_[fill[u]++] = v;
    }
    return g;
}

NodeSpec
Game::spec(NodeId v) const
{
    auto succ = successors(v);
    return NodeSpec{owner_[v], priority_[v], std::vector<NodeId>(succ.begin(), succ.end())};
}

std::vector<NodeSpec>
Game::specs() const
{
    std::vector<NodeSpec> out;
    out.reserve(size());
    for (NodeId v = 0; v < size(); v++) out.push_back(spec(v));
    return out;
}

std::pair<Game, std::vector<NodeId>>
Game::induced(const NodeSet& keep) const
{
    std::vector<NodeId> to_old = keep.to_vector();
    std::vector<NodeId> to_new(size(), kNoNode);
    for (NodeId i = 0; i < to_old.size(); i++) to_new[to_old[i]] = i;

    std::vector<NodeSpec> specs;
    specs.reserve(to_old.size());
    for (NodeId v : to_old) {
        NodeSpec s{owner_[v], priority_[v], {}};
        for (NodeId u : successors(v)) {
            if (keep.contains(u)) s.successors.push_back(to_new[u]);
        }
        if (s.successors.empty()) throw GameError(GameError::Kind::EmptySuccessors, v);
        specs.push_back(std::move(s));
    }
    return {build(std::move(specs)), std::move(to_old)};
}

NormalizedSpecs
normalize_self_loops(std::vector<NodeSpec> specs)
{
    NormalizedSpecs out;
    const auto n = static_cast<NodeId>(specs.size());
    out.mapping.resize(n);
    for (NodeId v = 0; v < n; v++) out.mapping[v] = v;

    std::vector<NodeSpec> extra;
    std::vector<NodeId> last_seen(n, kNoNode);
    for (NodeId v = 0; v < n; v++) {
        auto& succ = specs[v].successors;
        std::vector<NodeId> kept;
        kept.reserve(succ.size());
        bool looped = false;
        for (NodeId u : succ) {
            if (u == v) {
                if (looped) {
                    out.report.duplicate_edges_removed++;
                    continue;
                }
                looped = true;
                out.report.self_loops_removed++;
                continue;
            }
            // dangling targets are left for Game::build to report
            if (u < n) {
                if (last_seen[u] == v) {
                    out.report.duplicate_edges_removed++;
                    continue;
                }
                last_seen[u] = v;
            }
            kept.push_back(u);
        }
        if (looped) {
            const NodeId fresh = n + static_cast<NodeId>(extra.size());
            kept.push_back(fresh);
            extra.push_back(NodeSpec{Owner::Even, specs[v].priority, {v}});
        }
        succ = std::move(kept);
    }
    for (auto& s : extra) specs.push_back(std::move(s));
    out.specs = std::move(specs);
    return out;
}

} // namespace pg
