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

#include "pg/instrument.hpp"

#include <bit>

namespace pg {

unsigned
floor_log2(std::size_t n)
{
    return n == 0 ? 0 : static_cast<unsigned>(std::bit_width(n) - 1);
}

BigInt
binomial(unsigned top, unsigned k)
{
    if (k > top) return 0;
    k = std::min(k, top - k);
    BigInt r = 1;
    // r stays an integer: after step i it equals C(top - k + i, i)
    for (unsigned i = 1; i <= k; i++) {
        r *= top - k + i;
        r /= i;
    }
    return r;
}

BoundCheck
check_call_bound(const CallStats& stats, std::size_t n, Priority h)
{
    BoundCheck b;
    b.n = n;
    b.h = h;
    b.l = n == 0 ? 0 : 2 * floor_log2(n);
    b.bound = boost::multiprecision::pow(BigInt(n), b.l) * binomial(static_cast<unsigned>(h) + b.l, b.l) - 1;
    b.observed = stats.nontrivial_calls;
    b.ok = BigInt(b.observed) <= b.bound;
    return b;
}

InstrumentedRun
run_instrumented(const Game& game, const SolverConfig& config)
{
    InstrumentedRun run;
    const auto start = std::chrono::steady_clock::now();
    run.result = solve(game, config);
    run.wall = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    if (config.algorithm == Algorithm::QPT) {
        run.bound = check_call_bound(run.result.stats, game.size(), top_level(game, Owner::Even));
    }
    return run;
}

} // namespace pg
