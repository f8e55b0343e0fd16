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

#include "pg/generators.hpp"

#include <random>
#include <vector>

namespace pg {

namespace {

class Draw
{
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t uniform(std::uint64_t k)
    {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(engine_()) * k) >> 64);
    }

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

} // namespace

Game
random_game(const GenParams& p)
{
    if (p.n < 2) throw GeneratorError("random game needs at least 2 nodes");
    if (p.min_out < 1 || p.min_out > p.max_out || p.max_out > p.n - 1) {
        throw GeneratorError("out-degree bounds must satisfy 1 <= min_out <= max_out <= n-1");
    }
    if (p.max_priority < 0) throw GeneratorError("max_priority must be non-negative");

    Draw draw(p.seed);
    std::vector<NodeSpec> specs(p.n);
    std::vector<NodeId> others;
    for (NodeId v = 0; v < p.n; v++) {
        NodeSpec& s = specs[v];
        s.priority = static_cast<Priority>(draw.uniform(static_cast<std::uint64_t>(p.max_priority) + 1));
        s.owner = draw.unit() < p.owner_bias ? Owner::Even : Owner::Odd;
        const std::size_t degree = p.min_out + draw.uniform(p.max_out - p.min_out + 1);

        others.clear();
        for (NodeId u = 0; u < p.n; u++) {
            if (u != v) others.push_back(u);
        }
        for (std::size_t i = 0; i < degree; i++) {
            const std::size_t j = i + draw.uniform(others.size() - i);
            std::swap(others[i], others[j]);
            s.successors.push_back(others[i]);
        }
    }
    return Game::build(std::move(specs));
}

Game
family_chain(std::size_t k)
{
    if (k < 1) throw GeneratorError("chain needs k >= 1");
    const std::size_t n = 2 * k;
    std::vector<NodeSpec> specs(n);
    for (NodeId i = 0; i < n; i++) {
        specs[i].priority = static_cast<Priority>(i);
        specs[i].owner = opponent(parity_owner(static_cast<Priority>(i)));
        if (i > 0) specs[i].successors.push_back(i - 1);
        if (i + 1 < n) specs[i].successors.push_back(i + 1);
    }
    return Game::build(std::move(specs));
}

Game
family_clique(std::size_t n)
{
    if (n < 2) throw GeneratorError("clique needs n >= 2");
    std::vector<NodeSpec> specs(n);
    for (NodeId i = 0; i < n; i++) {
        specs[i].priority = static_cast<Priority>(i);
        specs[i].owner = (i % 2 == 0) ? Owner::Even : Owner::Odd;
        for (NodeId u = 0; u < n; u++) {
            if (u != i) specs[i].successors.push_back(u);
        }
    }
    return Game::build(std::move(specs));
}

} // namespace pg
