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

#ifndef PG_PGSOLVER_IO_HPP
#define PG_PGSOLVER_IO_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pg/game.hpp"

namespace pg {

using ExternalId = std::uint64_t;

// A game together with the identifiers and labels it had in a file.
struct NamedGame
{
    Game game;
    std::vector<ExternalId> original_ids;  // dense id -> external id
    std::map<NodeId, std::string> names;
    NormalizationReport report;
};

// Identity external ids, no names.
NamedGame make_named(Game game);

class ParseError : public std::runtime_error
{
public:
    enum class Kind { Syntax, UnknownOwner, DanglingEdge, DuplicateNode };

    ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& detail);

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
};

/**
 * Reads the PGSolver text format:
 *
 *   [parity <max-id>;]
 *   <id> <priority> <owner> <succ>(,<succ>)* ["name"];   (repeated)
 *
 * Owner 0 is Even and 1 is Odd. Tokens may be separated by any whitespace,
 * including newlines. Ids may be sparse; dense ids follow ascending external
 * id. The header value is not checked. Self-loops are subdivided and
 * duplicate edges dropped (see normalize_self_loops); subdivision nodes get
 * fresh external ids above the largest one in the file.
 */
NamedGame parse_pgsolver(std::string_view text);

/**
 * Canonical text: header with the true maximal id, one node per line in
 * ascending external id, successors ascending, names quoted, LF endings.
 */
std::string emit_pgsolver(const NamedGame& ng);

} // namespace pg

#endif
