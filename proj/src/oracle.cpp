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

#include "pg/oracle.hpp"

#include <algorithm>
#include <bit>

#include "pg/attractor.hpp"

namespace pg {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(NodeId v) { return Mask{1} << v; }

// Transitive closure (paths of length >= 1) of the graph restricted to
// `allowed`, by Warshall's algorithm on bit rows.
void
closure(const std::vector<Mask>& succ, Mask allowed, std::vector<Mask>& reach)
{
    const auto n = succ.size();
    for (std::size_t v = 0; v < n; v++) reach[v] = (allowed & bit(v)) ? succ[v] & allowed : 0;
    for (Mask ks = allowed; ks; ks &= ks - 1) {
        const int k = std::countr_zero(ks);
        const Mask via = reach[k];
        for (Mask is = allowed; is; is &= is - 1) {
            const int i = std::countr_zero(is);
            if (reach[i] & bit(k)) reach[i] |= via;
        }
    }
}

/**
 * Positional-strategy enumeration for one player over a game of at most 64
 * nodes. For a fixed strategy the player loses exactly the nodes that can
 * reach a bad node: a node of opponent-parity priority p lying on a cycle
 * that uses only priorities <= p.
 */
class Enumerator
{
public:
    Enumerator(const Game& game, Owner player) : game_(game), player_(player), n_(game.size())
    {
        full_succ_.resize(n_, 0);
        for (NodeId v = 0; v < n_; v++) {
            for (NodeId u : game.successors(v)) full_succ_[v] |= bit(u);
            if (game.owner(v) == player) choosers_.push_back(v);
        }
        for (NodeId v = 0; v < n_; v++) {
            const Priority p = game.priority(v);
            if (parity_owner(p) == player) continue;
            if (std::find(bad_levels_.begin(), bad_levels_.end(), p) == bad_levels_.end()) bad_levels_.push_back(p);
        }
        for (Priority p : bad_levels_) {
            Mask allowed = 0, at = 0;
            for (NodeId v = 0; v < n_; v++) {
                if (game.priority(v) <= p) allowed |= bit(v);
                if (game.priority(v) == p) at |= bit(v);
            }
            level_allowed_.push_back(allowed);
            level_nodes_.push_back(at);
        }
    }

    // Union of the winning sets over all strategies; best_ receives a
    // strategy that wins on the largest set.
    Mask run()
    {
        std::vector<std::size_t> choice(choosers_.size(), 0);
        std::vector<Mask> succ = full_succ_;
        std::vector<Mask> reach(n_);
        const Mask all = n_ == 64 ? ~Mask{0} : bit(static_cast<NodeId>(n_)) - 1;
        Mask won_any = 0;
        int best_count = -1;

        while (true) {
            for (std::size_t i = 0; i < choosers_.size(); i++) {
                const NodeId v = choosers_[i];
                succ[v] = bit(game_.successors(v)[choice[i]]);
            }

            Mask bad = 0;
            for (std::size_t l = 0; l < bad_levels_.size(); l++) {
                closure(succ, level_allowed_[l], reach);
                for (Mask vs = level_nodes_[l]; vs; vs &= vs - 1) {
                    const int v = std::countr_zero(vs);
                    if (reach[v] & bit(v)) bad |= bit(v);
                }
            }
            Mask lost = 0;
            if (bad) {
                closure(succ, all, reach);
                for (std::size_t v = 0; v < n_; v++) {
                    if (reach[v] & bad) lost |= bit(v);
                }
            }
            const Mask won = all & ~lost;
            won_any |= won;
            if (std::popcount(won) > best_count) {
                best_count = std::popcount(won);
                best_won_ = won;
                best_choice_ = choice;
            }

            // odometer over the choosers' successor indices
            std::size_t i = 0;
            for (; i < choosers_.size(); i++) {
                if (++choice[i] < game_.successors(choosers_[i]).size()) break;
                choice[i] = 0;
            }
            if (i == choosers_.size()) break;
        }
        return won_any;
    }

    Mask best_won() const { return best_won_; }

    Strategy best_strategy(Mask region) const
    {
        Strategy s(player_, n_);
        for (std::size_t i = 0; i < choosers_.size(); i++) {
            const NodeId v = choosers_[i];
            if (region & bit(v)) s.set(v, game_.successors(v)[best_choice_[i]]);
        }
        return s;
    }

private:
    const Game& game_;
    Owner player_;
    std::size_t n_;
    std::vector<Mask> full_succ_;
    std::vector<NodeId> choosers_;
    std::vector<Priority> bad_levels_;
    std::vector<Mask> level_allowed_;
    std::vector<Mask> level_nodes_;
    Mask best_won_ = 0;
    std::vector<std::size_t> best_choice_;
};

std::uint64_t
strategy_count(const Game& game, Owner player)
{
    std::uint64_t count = 1;
    for (NodeId v = 0; v < game.size(); v++) {
        if (game.owner(v) != player) continue;
        count *= game.successors(v).size();
        if (count > kMaxStrategies) return count;
    }
    return count;
}

NodeSet
to_node_set(Mask m, std::size_t n)
{
    NodeSet s(n);
    for (; m; m &= m - 1) s.insert(static_cast<NodeId>(std::countr_zero(m)));
    return s;
}

// Iterative Tarjan; true iff some node in `targets` lies in a strongly
// connected component with at least one edge, within nodes where `allowed`.
bool
on_cycle(const RestrictedGraph& g, const std::vector<char>& allowed, const std::vector<char>& targets)
{
    const std::size_t n = g.successors.size();
    std::vector<std::size_t> index(n, 0), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<NodeId> stack;
    std::vector<std::pair<NodeId, std::size_t>> work;
    std::size_t counter = 0;

    for (NodeId root = 0; root < n; root++) {
        if (!allowed[root] || index[root] != 0) continue;
        work.emplace_back(root, 0);
        index[root] = low[root] = ++counter;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!work.empty()) {
            auto& [v, next] = work.back();
            const auto& succ = g.successors[v];
            if (next < succ.size()) {
                const NodeId u = succ[next++];
                if (!allowed[u]) continue;
                if (index[u] == 0) {
                    index[u] = low[u] = ++counter;
                    stack.push_back(u);
                    on_stack[u] = 1;
                    work.emplace_back(u, 0);
                } else if (on_stack[u]) {
                    low[v] = std::min(low[v], index[u]);
                }
                continue;
            }
            const NodeId done = v;
            work.pop_back();
            if (!work.empty()) low[work.back().first] = std::min(low[work.back().first], low[done]);
            if (low[done] != index[done]) continue;

            std::vector<NodeId> component;
            NodeId w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                component.push_back(w);
            } while (w != done);
            const bool cyclic = component.size() > 1 ||
                                std::find(succ.begin(), succ.end(), done) != succ.end();
            if (!cyclic) continue;
            for (NodeId c : component) {
                if (targets[c]) return true;
            }
        }
    }
    return false;
}

} // namespace

RestrictedGraph
restrict_by_strategy(const Game& game, const NodeSet& region, const Strategy& strat)
{
    RestrictedGraph g;
    g.priority.resize(game.size());
    g.successors.resize(game.size());
    for (NodeId v = 0; v < game.size(); v++) {
        g.priority[v] = game.priority(v);
        if (!region.contains(v)) continue;
        if (game.owner(v) == strat.player()) {
            if (strat.has(v) && region.contains(strat.at(v))) g.successors[v].push_back(strat.at(v));
            continue;
        }
        for (NodeId u : game.successors(v)) {
            if (region.contains(u)) g.successors[v].push_back(u);
        }
    }
    return g;
}

bool
has_bad_cycle(const RestrictedGraph& graph, Owner player)
{
    const std::size_t n = graph.priority.size();
    std::vector<Priority> levels;
    for (Priority p : graph.priority) {
        if (parity_owner(p) != player) levels.push_back(p);
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::vector<char> allowed(n), targets(n);
    for (Priority p : levels) {
        for (std::size_t v = 0; v < n; v++) {
            allowed[v] = graph.priority[v] <= p;
            targets[v] = graph.priority[v] == p;
        }
        if (on_cycle(graph, allowed, targets)) return true;
    }
    return false;
}

BruteforceSolution
solve_bruteforce_with_strategies(const Game& game)
{
    const std::size_t n = game.size();
    if (n > kMaxOracleNodes) throw OracleError("game too large for the brute-force oracle");
    if (strategy_count(game, Owner::Even) > kMaxStrategies || strategy_count(game, Owner::Odd) > kMaxStrategies) {
        throw OracleError("too many positional strategies for the brute-force oracle");
    }
    if (n == 0) return {Regions{NodeSet(0), NodeSet(0)}, Strategy(Owner::Even, 0), Strategy(Owner::Odd, 0)};

    Enumerator even(game, Owner::Even);
    Enumerator odd(game, Owner::Odd);
    const Mask even_won = even.run();
    const Mask odd_won = odd.run();

    const Mask all = n == 64 ? ~Mask{0} : bit(static_cast<NodeId>(n)) - 1;
    if ((even_won & odd_won) != 0 || (even_won | odd_won) != all) {
        throw OracleError("Even and Odd strategy enumerations do not complement each other");
    }
    if (even.best_won() != even_won || odd.best_won() != odd_won) {
        throw OracleError("no uniform positional strategy found");
    }

    return {Regions{to_node_set(even_won, n), to_node_set(odd_won, n)}, even.best_strategy(even_won),
            odd.best_strategy(odd_won)};
}

Regions
solve_bruteforce(const Game& game)
{
    return solve_bruteforce_with_strategies(game).regions;
}

bool
is_dominion(const SubgameView& view, const DominionQuery& q)
{
    const Game& game = view.game();
    if (q.set.empty()) return true;
    if (!q.set.is_subset_of(view.live())) return false;
    for (NodeId v : q.set) {
        bool stays = false, leaves = false;
        for (NodeId u : view.live_successors(v)) {
            (q.set.contains(u) ? stays : leaves) = true;
        }
        if (game.owner(v) == q.player ? !stays : leaves) return false;
    }
    const auto [sub, ids] = game.induced(q.set);
    return solve_bruteforce(sub).of(q.player).size() == sub.size();
}

bool
is_dominion(const Game& game, const DominionQuery& q)
{
    return is_dominion(SubgameView(game), q);
}

std::vector<NodeSet>
enumerate_dominions(const Game& game, Owner player, std::size_t max_size)
{
    const std::size_t n = game.size();
    if (n > kMaxEnumerationNodes) throw OracleError("game too large for dominion enumeration");
    std::vector<NodeSet> out;
    for (std::size_t k = 2; k <= std::min(max_size, n); k++) {
        std::vector<NodeId> pick(k);
        for (std::size_t i = 0; i < k; i++) pick[i] = static_cast<NodeId>(i);
        while (true) {
            NodeSet s(n);
            for (NodeId v : pick) s.insert(v);
            if (is_dominion(game, {s, player})) out.push_back(std::move(s));

            // next k-combination in lexicographic order
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == n - k + i - 1) i--;
            if (i == 0) break;
            pick[i - 1]++;
            for (std::size_t j = i; j < k; j++) pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

bool
verify_strategy(const Game& game, Owner player, const NodeSet& region, const Strategy& strat)
{
    if (region.empty()) return true;
    if (strat.player() != player || region.universe() != game.size()) return false;
    for (NodeId v : region) {
        const auto succ = game.successors(v);
        if (game.owner(v) == player) {
            if (!strat.has(v)) return false;
            const NodeId to = strat.at(v);
            if (std::find(succ.begin(), succ.end(), to) == succ.end() || !region.contains(to)) return false;
        } else if (std::any_of(succ.begin(), succ.end(), [&](NodeId u) { return !region.contains(u); })) {
            return false;
        }
    }
    return !has_bad_cycle(restrict_by_strategy(game, region, strat), player);
}

FactsReport
check_facts(const Game& game, std::span<const NodeSet> samples)
{
    FactsReport report;
    const SubgameView full(game);
    for (Owner player : {Owner::Even, Owner::Odd}) {
        const auto dominions = enumerate_dominions(game, player, game.size());
        for (const NodeSet& x : samples) {
            const NodeSet own = attractor(full, player, x);
            const SubgameView without_own = full.restrict(own);
            const NodeSet theirs = attractor(full, opponent(player), x);
            const SubgameView without_theirs = full.restrict(theirs);

            for (const NodeSet& s : dominions) {
                report.fact1_checked++;
                if (!is_dominion(without_own, {s - own, player})) {
                    report.violations.push_back({1, player, s, x});
                }
                if (s.intersects(x)) continue;
                report.fact2_checked++;
                if (!s.is_subset_of(without_theirs.live()) || !is_dominion(without_theirs, {s, player})) {
                    report.violations.push_back({2, player, s, x});
                }
            }
        }
    }
    return report;
}

std::vector<NodeSet>
singletons_and_pairs(std::size_t n)
{
    std::vector<NodeSet> out;
    for (NodeId a = 0; a < n; a++) out.push_back(NodeSet(n, {a}));
    for (NodeId a = 0; a < n; a++) {
        for (NodeId b = a + 1; b < n; b++) out.push_back(NodeSet(n, {a, b}));
    }
    return out;
}

} // namespace pg
