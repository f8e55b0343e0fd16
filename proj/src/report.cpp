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

#include "pg/report.hpp"

#include <algorithm>

namespace pg {

SolveRecord
make_record(const std::string& input, const NamedGame& ng, const SolverConfig& config, const InstrumentedRun& run)
{
    SolveRecord r;
    r.input = input;
    r.config = config;
    for (NodeId v : run.result.regions.win_even) r.win_even.push_back(ng.original_ids[v]);
    for (NodeId v : run.result.regions.win_odd) r.win_odd.push_back(ng.original_ids[v]);
    std::sort(r.win_even.begin(), r.win_even.end());
    std::sort(r.win_odd.begin(), r.win_odd.end());
    r.stats = run.result.stats;
    r.stats.trace.clear();
    r.wall = run.wall;
    r.bound = run.bound;
    return r;
}

nlohmann::json
to_json(const SolveRecord& r)
{
    nlohmann::json j;
    j["input"] = r.input;
    j["algorithm"] = to_string(r.config.algorithm);
    j["flags"] = {
        {"guard", r.config.attractor_guard},
        {"clamp", r.config.clamp_precision},
        {"exact_flag", r.config.exactness_flag},
    };
    j["win_even"] = r.win_even;
    j["win_odd"] = r.win_odd;
    j["stats"] = {
        {"nontrivial_calls", r.stats.nontrivial_calls},
        {"max_depth", r.stats.max_depth},
        {"calls_per_level", r.stats.calls_per_level},
        {"peak_live_sets", r.stats.peak_live_sets},
    };
    j["wall_time_us"] = r.wall.count();
    if (r.bound) {
        // the bound overflows 64 bits quickly, so it is written as a decimal string
        j["bound"] = {
            {"n", r.bound->n},
            {"h", r.bound->h},
            {"l", r.bound->l},
            {"bound", r.bound->bound.str()},
            {"observed", r.bound->observed},
            {"ok", r.bound->ok},
        };
        j["bound_ok"] = r.bound->ok;
    }
    return j;
}

std::string
emit_report(const SolveRecord& r)
{
    return to_json(r).dump(2) + "\n";
}

std::string
emit_report(std::vector<SolveRecord> records)
{
    std::stable_sort(records.begin(), records.end(), [](const SolveRecord& a, const SolveRecord& b) {
        if (a.input != b.input) return a.input < b.input;
        return static_cast<int>(a.config.algorithm) < static_cast<int>(b.config.algorithm);
    });
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
}

} // namespace pg
