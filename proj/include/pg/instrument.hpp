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

#ifndef PG_INSTRUMENT_HPP
#define PG_INSTRUMENT_HPP

#include <chrono>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "pg/solver.hpp"

namespace pg {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Quasi-polynomial call bound for a precision-bounded solve started at
 * precision (n, n) and level h:
 *   nontrivial_calls <= n^l * C(h + l, l) - 1,   l = 2 * floor(log2 n).
 * Exact integer arithmetic; n = 0 gives l = 0 and a bound of 0.
 */
struct BoundCheck
{
    std::size_t n = 0;
    Priority h = 0;
    unsigned l = 0;
    BigInt bound = 0;
    std::uint64_t observed = 0;
    bool ok = false;
};

unsigned floor_log2(std::size_t n);
BigInt binomial(unsigned top, unsigned k);
BoundCheck check_call_bound(const CallStats& stats, std::size_t n, Priority h);

struct InstrumentedRun
{
    SolveResult result;
    std::chrono::microseconds wall{0};
    // Present for QPT runs only.
    std::optional<BoundCheck> bound;
};

InstrumentedRun run_instrumented(const Game& game, const SolverConfig& config);

} // namespace pg

#endif
