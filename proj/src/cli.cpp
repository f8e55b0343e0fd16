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

#include "pg/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pg/generators.hpp"
#include "pg/oracle.hpp"
#include "pg/report.hpp"

namespace pg {

namespace {

namespace fs = std::filesystem;

class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string
read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void
write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
    if (!out) throw InputError("error writing " + path);
}

NamedGame
load_game(const std::string& path)
{
    try {
        return parse_pgsolver(read_file(path));
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const GameError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string
join_ids(const NamedGame& ng, const NodeSet& set)
{
    std::vector<ExternalId> ids;
    for (NodeId v : set) ids.push_back(ng.original_ids[v]);
    std::sort(ids.begin(), ids.end());
    std::string s;
    for (ExternalId id : ids) s += " " + std::to_string(id);
    return s;
}

struct Flags
{
    bool guard = false;
    bool clamp = false;
    bool exact = false;
    bool no_cross_check = false;

    void add_to(CLI::App* cmd)
    {
        cmd->add_flag("--guard", guard, "classic: stop once the opponent attractor adds nothing");
        cmd->add_flag("--clamp", clamp, "qpt: clamp precisions to the subgame size");
        cmd->add_flag("--exact-flag", exact, "qpt: skip the full-precision call after an exact empty result");
        cmd->add_flag("--no-cross-check", no_cross_check, "skip the Odd-rooted consistency solve");
    }

    SolverConfig config(Algorithm a) const
    {
        SolverConfig c;
        c.algorithm = a;
        c.attractor_guard = guard;
        c.clamp_precision = clamp;
        c.exactness_flag = exact;
        c.cross_check = !no_cross_check;
        return c;
    }
};

Algorithm
algorithm_or_throw(const std::string& name)
{
    auto a = parse_algorithm(name);
    if (!a) throw InputError("unknown algorithm '" + name + "' (expected classic, qpt or oracle)");
    return *a;
}

void
print_strategy(std::ostream& out, const char* label, const NamedGame& ng, const Strategy& s)
{
    out << "strategy " << label << ":";
    for (NodeId v = 0; v < s.universe(); v++) {
        if (s.has(v)) out << " " << ng.original_ids[v] << "->" << ng.original_ids[s.at(v)];
    }
    out << "\n";
}

int
run_solve(const std::string& file, const std::string& algorithm, const Flags& flags, bool strategy,
          const std::string& json_out, std::ostream& out, std::ostream& err)
{
    const NamedGame ng = load_game(file);
    SolverConfig config = flags.config(algorithm_or_throw(algorithm));
    config.collect_strategy = strategy;
    if (strategy && config.algorithm == Algorithm::QPT) {
        throw InputError("--strategy is available for classic and oracle only");
    }

    const InstrumentedRun run = run_instrumented(ng.game, config);
    const Regions& regions = run.result.regions;
    out << "win_even:" << join_ids(ng, regions.win_even) << "\n";
    out << "win_odd:" << join_ids(ng, regions.win_odd) << "\n";
    out << "nontrivial_calls: " << run.result.stats.nontrivial_calls << " max_depth: " << run.result.stats.max_depth
        << " time_us: " << run.wall.count() << "\n";
    if (run.bound) {
        out << "bound: " << run.bound->observed << " <= " << run.bound->bound.str() << " "
            << (run.bound->ok ? "ok" : "VIOLATED") << "\n";
    }

    int code = kExitOk;
    if (strategy) {
        print_strategy(out, "even", ng, *run.result.even_strategy);
        print_strategy(out, "odd", ng, *run.result.odd_strategy);
        const bool even_ok = verify_strategy(ng.game, Owner::Even, regions.win_even, *run.result.even_strategy);
        const bool odd_ok = verify_strategy(ng.game, Owner::Odd, regions.win_odd, *run.result.odd_strategy);
        if (!even_ok || !odd_ok) {
            err << "strategy verification failed\n";
            code = kExitFailure;
        }
    }
    if (run.bound && !run.bound->ok) code = kExitFailure;
    if (!json_out.empty()) write_file(json_out, emit_report(make_record(file, ng, config, run)));
    return code;
}

NodeSet
read_region(const nlohmann::json& doc, const char* key, const NamedGame& ng)
{
    if (!doc.contains(key) || !doc[key].is_array()) throw InputError(std::string("regions file lacks '") + key + "'");
    NodeSet s(ng.game.size());
    for (const auto& item : doc[key]) {
        if (!item.is_number_unsigned()) throw InputError(std::string("non-integer id in '") + key + "'");
        const auto id = item.get<ExternalId>();
        auto it = std::find(ng.original_ids.begin(), ng.original_ids.end(), id);
        if (it == ng.original_ids.end()) throw InputError("unknown node id " + std::to_string(id));
        s.insert(static_cast<NodeId>(it - ng.original_ids.begin()));
    }
    return s;
}

int
run_verify(const std::string& file, const std::string& regions_file, std::ostream& out, std::ostream& err)
{
    const NamedGame ng = load_game(file);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(regions_file));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(regions_file + ": " + e.what());
    }
    if (!doc.is_object()) throw InputError(regions_file + ": expected a JSON object");
    const Regions claimed{read_region(doc, "win_even", ng), read_region(doc, "win_odd", ng)};

    if (!claimed.is_partition_of(ng.game.size())) {
        err << "verification failed: regions do not partition the nodes\n";
        return kExitFailure;
    }
    SolverConfig config;
    config.collect_strategy = true;
    const SolveResult truth = solve(ng.game, config);
    if (!(truth.regions == claimed)) {
        err << "verification failed: expected win_even:" << join_ids(ng, truth.regions.win_even)
            << " win_odd:" << join_ids(ng, truth.regions.win_odd) << "\n";
        return kExitFailure;
    }
    if (!verify_strategy(ng.game, Owner::Even, claimed.win_even, *truth.even_strategy) ||
        !verify_strategy(ng.game, Owner::Odd, claimed.win_odd, *truth.odd_strategy)) {
        err << "verification failed: no winning strategy witnesses the regions\n";
        return kExitFailure;
    }
    out << "ok\n";
    return kExitOk;
}

std::vector<std::string>
expand_inputs(const std::vector<std::string>& paths)
{
    std::vector<std::string> files;
    for (const auto& p : paths) {
        if (fs::is_directory(p)) {
            std::vector<std::string> inside;
            for (const auto& entry : fs::directory_iterator(p)) {
                if (entry.is_regular_file()) inside.push_back(entry.path().string());
            }
            std::sort(inside.begin(), inside.end());
            files.insert(files.end(), inside.begin(), inside.end());
        } else if (fs::exists(p)) {
            files.push_back(p);
        } else {
            throw InputError("no such file or directory: " + p);
        }
    }
    return files;
}

int
run_bench(const std::vector<std::string>& paths, const std::string& algorithms, const Flags& flags,
          const std::string& json_out, std::ostream& out, std::ostream& err)
{
    std::vector<Algorithm> algs;
    std::stringstream ss(algorithms);
    for (std::string name; std::getline(ss, name, ',');) {
        if (!name.empty()) algs.push_back(algorithm_or_throw(name));
    }
    if (algs.empty()) throw InputError("no algorithms given");

    std::vector<SolveRecord> records;
    int code = kExitOk;
    for (const auto& file : expand_inputs(paths)) {
        const NamedGame ng = load_game(file);
        std::optional<Regions> reference;
        for (Algorithm a : algs) {
            const SolverConfig config = flags.config(a);
            const InstrumentedRun run = run_instrumented(ng.game, config);
            out << file << " " << to_string(a) << " n=" << ng.game.size()
                << " calls=" << run.result.stats.nontrivial_calls << " depth=" << run.result.stats.max_depth
                << " time_us=" << run.wall.count();
            if (run.bound) out << " bound=" << (run.bound->ok ? "ok" : "VIOLATED");
            out << "\n";
            if (run.bound && !run.bound->ok) code = kExitFailure;
            if (!reference) {
                reference = run.result.regions;
            } else if (!(*reference == run.result.regions)) {
                err << file << ": " << to_string(a) << " disagrees with " << to_string(algs.front()) << "\n";
                code = kExitFailure;
            }
            records.push_back(make_record(file, ng, config, run));
        }
    }
    if (!json_out.empty()) write_file(json_out, emit_report(std::move(records)));
    return code;
}

} // namespace

int
cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Parity game solver: classic and quasi-polynomial recursive algorithms"};
    app.name("pgsolve");
    app.require_subcommand(1);

    std::string file, algorithm = "classic", json_out, regions_file, output, input;
    bool strategy = false;
    Flags flags;

    auto* solve_cmd = app.add_subcommand("solve", "solve a game in PGSolver format");
    solve_cmd->add_option("file", file, "game file")->required();
    solve_cmd->add_option("--algorithm", algorithm, "classic, qpt or oracle");
    solve_cmd->add_flag("--strategy", strategy, "print and verify winning strategies (classic, oracle)");
    solve_cmd->add_option("--json", json_out, "write a JSON report");
    flags.add_to(solve_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "check claimed winning regions");
    verify_cmd->add_option("file", file, "game file")->required();
    verify_cmd->add_option("--regions", regions_file, "JSON with win_even and win_odd")->required();

    GenParams gen;
    std::size_t chain_k = 1, clique_n = 2;
    auto* gen_cmd = app.add_subcommand("gen", "generate games");
    gen_cmd->require_subcommand(1);
    auto* gen_random = gen_cmd->add_subcommand("random", "seeded random game");
    gen_random->add_option("--n", gen.n, "node count");
    gen_random->add_option("--max-priority", gen.max_priority, "largest priority");
    gen_random->add_option("--min-out", gen.min_out, "minimal out-degree");
    gen_random->add_option("--max-out", gen.max_out, "maximal out-degree");
    gen_random->add_option("--bias", gen.owner_bias, "fraction of Even nodes");
    gen_random->add_option("--seed", gen.seed, "64-bit seed");
    gen_random->add_option("-o,--output", output, "output file")->required();
    auto* gen_chain = gen_cmd->add_subcommand("chain", "ladder of 2k nodes");
    gen_chain->add_option("--k", chain_k, "half the node count");
    gen_chain->add_option("-o,--output", output, "output file")->required();
    auto* gen_clique = gen_cmd->add_subcommand("clique", "complete graph");
    gen_clique->add_option("--n", clique_n, "node count");
    gen_clique->add_option("-o,--output", output, "output file")->required();

    auto* convert_cmd = app.add_subcommand("convert", "rewrite a game in canonical form");
    convert_cmd->add_option("in", input, "input game")->required();
    convert_cmd->add_option("out", output, "output game")->required();

    std::vector<std::string> bench_paths;
    std::string bench_algs = "classic,qpt";
    auto* bench_cmd = app.add_subcommand("bench", "run several algorithms on files or directories");
    bench_cmd->add_option("paths", bench_paths, "files or directories")->required();
    bench_cmd->add_option("--algorithms", bench_algs, "comma-separated list");
    bench_cmd->add_option("--json", json_out, "write a JSON report");
    flags.add_to(bench_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*solve_cmd) return run_solve(file, algorithm, flags, strategy, json_out, out, err);
        if (*verify_cmd) return run_verify(file, regions_file, out, err);
        if (*gen_cmd) {
            Game g;
            if (*gen_random) g = random_game(gen);
            else if (*gen_chain) g = family_chain(chain_k);
            else g = family_clique(clique_n);
            write_file(output, emit_pgsolver(make_named(std::move(g))));
            return kExitOk;
        }
        if (*convert_cmd) {
            write_file(output, emit_pgsolver(load_game(input)));
            return kExitOk;
        }
        if (*bench_cmd) return run_bench(bench_paths, bench_algs, flags, json_out, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const GeneratorError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const OracleError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const SolverError& e) {
        err << "solver failure: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitInputError;
}

} // namespace pg
