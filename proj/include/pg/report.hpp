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

#ifndef PG_REPORT_HPP
#define PG_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "pg/instrument.hpp"
#include "pg/pgsolver_io.hpp"

namespace pg {

// One solver run on one input, as written to the JSON report.
struct SolveRecord
{
    std::string input;
    SolverConfig config;
    std::vector<ExternalId> win_even;  // sorted
    std::vector<ExternalId> win_odd;   // sorted
    CallStats stats;
    std::chrono::microseconds wall{0};
    std::optional<BoundCheck> bound;
};

SolveRecord make_record(const std::string& input, const NamedGame& ng, const SolverConfig& config,
                        const InstrumentedRun& run);

nlohmann::json to_json(const SolveRecord& r);

// Keys are sorted, so equal records always serialise identically.
std::string emit_report(const SolveRecord& r);

// Array of records ordered by input name, then algorithm.
std::string emit_report(std::vector<SolveRecord> records);

} // namespace pg

#endif
