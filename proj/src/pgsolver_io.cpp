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

#include "pg/pgsolver_io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>

namespace pg {

NamedGame
make_named(Game game)
{
    NamedGame ng;
    ng.original_ids.resize(game.size());
    for (NodeId v = 0; v < game.size(); v++) ng.original_ids[v] = v;
    ng.game = std::move(game);
    return ng;
}

static std::string
kind_name(ParseError::Kind kind)
{
    switch (kind) {
    case ParseError::Kind::Syntax: return "syntax error";
    case ParseError::Kind::UnknownOwner: return "unknown owner";
    case ParseError::Kind::DanglingEdge: return "dangling edge";
    case ParseError::Kind::DuplicateNode: return "duplicate node";
    }
    return "parse error";
}

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         kind_name(kind) + ": " + detail),
      kind_(kind), line_(line), column_(column)
{
}

namespace {

struct Position
{
    std::size_t line = 1;
    std::size_t column = 1;
};

class Reader
{
public:
    explicit Reader(std::string_view text) : text_(text) {}

    // Position of the next token.
    Position peek_position()
    {
        skip_space();
        return pos_;
    }

    bool at_end()
    {
        skip_space();
        return i_ == text_.size();
    }

    bool next_is(char c)
    {
        skip_space();
        return i_ < text_.size() && text_[i_] == c;
    }

    bool next_is_digit()
    {
        skip_space();
        return i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]));
    }

    void expect(char c, const char* what)
    {
        if (!next_is(c)) fail(what);
        advance();
    }

    std::optional<std::string> keyword()
    {
        skip_space();
        std::size_t j = i_;
        while (j < text_.size() && std::isalpha(static_cast<unsigned char>(text_[j]))) j++;
        if (j == i_) return std::nullopt;
        std::string word(text_.substr(i_, j - i_));
        while (i_ < j) advance();
        return word;
    }

    // Unsigned decimal integer.
    std::uint64_t number(const char* what)
    {
        if (!next_is_digit()) fail(what);
        const Position start = pos_;
        std::uint64_t value = 0;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
            const auto digit = static_cast<std::uint64_t>(text_[i_] - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
                throw ParseError(ParseError::Kind::Syntax, start.line, start.column, "number out of range");
            }
            value = value * 10 + digit;
            advance();
        }
        return value;
    }

    // Optionally signed integer, used only for the advisory header value.
    void signed_number(const char* what)
    {
        if (next_is('-')) advance();
        number(what);
    }

    std::string quoted()
    {
        const Position start = peek_position();
        advance();  // opening quote
        std::string out;
        while (true) {
            if (i_ == text_.size()) {
                throw ParseError(ParseError::Kind::Syntax, start.line, start.column, "unterminated name");
            }
            char c = text_[i_];
            advance();
            if (c == '"') break;
            if (c == '\\' && i_ < text_.size()) {
                c = text_[i_];
                advance();
            }
            out.push_back(c);
        }
        return out;
    }

    [[noreturn]] void fail(const char* expected)
    {
        const Position p = peek_position();
        std::string found = i_ < text_.size() ? "'" + std::string(1, text_[i_]) + "'" : "end of input";
        throw ParseError(ParseError::Kind::Syntax, p.line, p.column,
                         std::string("expected ") + expected + ", found " + found);
    }

private:
    void skip_space()
    {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) advance();
    }

    void advance()
    {
        if (text_[i_] == '\n') {
            pos_.line++;
            pos_.column = 1;
        } else {
            pos_.column++;
        }
        i_++;
    }

    std::string_view text_;
    std::size_t i_ = 0;
    Position pos_;
};

struct RawEdge
{
    ExternalId target;
    Position at;
};

struct RawNode
{
    ExternalId id;
    Priority priority;
    Owner owner;
    std::vector<RawEdge> successors;
    std::optional<std::string> name;
    Position at;
};

} // namespace

NamedGame
parse_pgsolver(std::string_view text)
{
    Reader in(text);
    std::vector<RawNode> raw;

    if (!in.at_end() && !in.next_is_digit()) {
        const Position at = in.peek_position();
        auto word = in.keyword();
        if (!word || *word != "parity") {
            throw ParseError(ParseError::Kind::Syntax, at.line, at.column, "expected 'parity' header or node id");
        }
        in.signed_number("maximal node id");
        in.expect(';', "';' after header");
    }

    while (!in.at_end()) {
        RawNode node;
        node.at = in.peek_position();
        node.id = in.number("node id");
        const Position prio_at = in.peek_position();
        const std::uint64_t prio = in.number("priority");
        if (prio > static_cast<std::uint64_t>(std::numeric_limits<Priority>::max())) {
            throw ParseError(ParseError::Kind::Syntax, prio_at.line, prio_at.column, "priority out of range");
        }
        node.priority = static_cast<Priority>(prio);

        const Position owner_at = in.peek_position();
        const std::uint64_t owner = in.number("owner");
        if (owner > 1) {
            throw ParseError(ParseError::Kind::UnknownOwner, owner_at.line, owner_at.column,
                             "owner " + std::to_string(owner) + " is neither 0 nor 1");
        }
        node.owner = owner == 0 ? Owner::Even : Owner::Odd;

        do {
            const Position at = in.peek_position();
            node.successors.push_back({in.number("successor id"), at});
            if (!in.next_is(',')) break;
            in.expect(',', "','");
        } while (true);

        if (in.next_is('"')) node.name = in.quoted();
        in.expect(';', "';' at end of node");
        raw.push_back(std::move(node));
    }

    std::sort(raw.begin(), raw.end(), [](const RawNode& a, const RawNode& b) {
        return a.id != b.id ? a.id < b.id : a.at.line < b.at.line;
    });
    for (std::size_t i = 1; i < raw.size(); i++) {
        if (raw[i].id == raw[i - 1].id) {
            throw ParseError(ParseError::Kind::DuplicateNode, raw[i].at.line, raw[i].at.column,
                             "node " + std::to_string(raw[i].id) + " defined twice");
        }
    }

    const auto dense_of = [&](ExternalId id) -> std::optional<NodeId> {
        auto it = std::lower_bound(raw.begin(), raw.end(), id, [](const RawNode& a, ExternalId x) { return a.id < x; });
        if (it == raw.end() || it->id != id) return std::nullopt;
        return static_cast<NodeId>(it - raw.begin());
    };

    std::vector<NodeSpec> specs;
    specs.reserve(raw.size());
    NamedGame ng;
    for (NodeId v = 0; v < raw.size(); v++) {
        const RawNode& r = raw[v];
        NodeSpec s{r.owner, r.priority, {}};
        for (const RawEdge& e : r.successors) {
            auto target = dense_of(e.target);
            if (!target) {
                throw ParseError(ParseError::Kind::DanglingEdge, e.at.line, e.at.column,
                                 "node " + std::to_string(r.id) + " has an edge to undefined node " +
                                     std::to_string(e.target));
            }
            s.successors.push_back(*target);
        }
        specs.push_back(std::move(s));
        ng.original_ids.push_back(r.id);
        if (r.name) ng.names.emplace(v, *r.name);
    }

    NormalizedSpecs norm = normalize_self_loops(std::move(specs));
    ExternalId next_id = raw.empty() ? 0 : raw.back().id + 1;
    while (ng.original_ids.size() < norm.specs.size()) ng.original_ids.push_back(next_id++);
    ng.report = norm.report;
    ng.game = Game::build(std::move(norm.specs));
    return ng;
}

static void
append_quoted(std::string& out, const std::string& name)
{
    out.push_back('"');
    for (char c : name) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
}

std::string
emit_pgsolver(const NamedGame& ng)
{
    const Game& g = ng.game;
    std::vector<NodeId> order(g.size());
    for (NodeId v = 0; v < g.size(); v++) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](NodeId a, NodeId b) { return ng.original_ids[a] < ng.original_ids[b]; });

    std::string out = "parity ";
    out += g.empty() ? std::string("-1") : std::to_string(ng.original_ids[order.back()]);
    out += ";\n";

    std::vector<ExternalId> succ;
    for (NodeId v : order) {
        out += std::to_string(ng.original_ids[v]);
        out += ' ';
        out += std::to_string(g.priority(v));
        out += g.owner(v) == Owner::Even ? " 0 " : " 1 ";
        succ.clear();
        for (NodeId u : g.successors(v)) succ.push_back(ng.original_ids[u]);
        std::sort(succ.begin(), succ.end());
        for (std::size_t i = 0; i < succ.size(); i++) {
            if (i) out += ',';
            out += std::to_string(succ[i]);
        }
        if (auto it = ng.names.find(v); it != ng.names.end()) {
            out += ' ';
            append_quoted(out, it->second);
        }
        out += ";\n";
    }
    return out;
}

} // namespace pg
