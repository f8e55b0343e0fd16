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

#ifndef PG_GENERATORS_HPP
#define PG_GENERATORS_HPP

#include <cstdint>
#include <stdexcept>

#include "pg/game.hpp"

namespace pg {

// Bumped whenever the output of the generators changes for a fixed input.
inline constexpr int kGeneratorVersion = 1;

class GeneratorError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct GenParams
{
    std::size_t n = 8;
    Priority max_priority = 6;
    std::size_t min_out = 1;
    std::size_t max_out = 3;
    double owner_bias = 0.5;  // probability that a node is owned by Even
    std::uint64_t seed = 1;
};

/**
 * Seeded random game. Randomness comes from std::mt19937_64 seeded with
 * `seed`, whose output sequence is fixed by the C++ standard; values are
 * drawn in this order for each node v = 0..n-1:
 *   priority  = uniform(max_priority + 1)
 *   owner     = Even iff unit() < owner_bias
 *   out-degree = min_out + uniform(max_out - min_out + 1)
 *   successors: partial Fisher-Yates over the other n-1 nodes in ascending
 *               order, one uniform(remaining) draw per successor
 * where uniform(k) = (x * k) >> 64 on the next 64-bit output x (128-bit
 * product) and unit() = (x >> 11) * 2^-53.
 * Throws GeneratorError unless n >= 2 and 1 <= min_out <= max_out <= n-1.
 */
Game random_game(const GenParams& p);

// 2k nodes with priorities 0..2k-1 on a ladder: node i moves to i-1 or i+1,
// and is owned by the player its own priority does not favour.
Game family_chain(std::size_t k);

// Complete graph on n nodes, node i with priority i, owners alternating
// starting with Even.
Game family_clique(std::size_t n);

} // namespace pg

#endif
