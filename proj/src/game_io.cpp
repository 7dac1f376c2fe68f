/*
 * Copyright 2026 The mppg Authors
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

#include "mppg/game_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace mppg {

namespace {

std::vector<std::string> tokenize(std::string_view line)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename Int>
Int parse_field(const std::string& token, std::string_view key, std::size_t line)
{
    std::string prefix = std::string(key) + "=";
    if (token.rfind(prefix, 0) != 0) throw ParseError(line, "expected '" + prefix + "...', got '" + token + "'");
    std::string_view num(token);
    num.remove_prefix(prefix.size());
    Int out{};
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), out);
    if (num.empty() || ec != std::errc() || ptr != num.data() + num.size()) {
        throw ParseError(line, "bad number in '" + token + "'");
    }
    return out;
}

struct PendingEdge
{
    std::string src, dst;
    Weight weight;
    std::size_t line;
};

} // namespace

Game parse_game(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    int stage = 0; // 0: want header, 1: want kind, 2: body
    GameKind kind = GameKind::MeanPayoffParity;
    std::vector<std::tuple<std::string, Owner, Priority, std::size_t>> states;
    std::vector<PendingEdge> edges;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tok = tokenize(line);
        if (tok.empty()) continue;

        if (stage == 0) {
            if (tok.size() != 2 || tok[0] != "mppg" || tok[1] != "v1") throw ParseError(line_no, "expected header 'mppg v1'");
            stage = 1;
        } else if (stage == 1) {
            if (tok.size() != 2 || tok[0] != "kind") throw ParseError(line_no, "expected 'kind ...'");
            if (tok[1] == "mean-payoff-parity") {
                kind = GameKind::MeanPayoffParity;
            } else if (tok[1] == "mean-penalty-parity") {
                kind = GameKind::MeanPenaltyParity;
            } else {
                throw ParseError(line_no, "unknown kind '" + tok[1] + "'");
            }
            stage = 2;
        } else if (tok[0] == "state") {
            if (tok.size() != 4) throw ParseError(line_no, "expected 'state <name> owner=<1|2> priority=<uint>'");
            auto owner = parse_field<int>(tok[2], "owner", line_no);
            if (owner != 1 && owner != 2) throw ParseError(line_no, "owner must be 1 or 2");
            auto prio = parse_field<Priority>(tok[3], "priority", line_no);
            states.emplace_back(tok[1], owner == 1 ? Owner::P1 : Owner::P2, prio, line_no);
        } else if (tok[0] == "edge") {
            if (tok.size() != 4) throw ParseError(line_no, "expected 'edge <src> <dst> weight=<int>'");
            edges.push_back({tok[1], tok[2], parse_field<Weight>(tok[3], "weight", line_no), line_no});
        } else {
            throw ParseError(line_no, "unknown declaration '" + tok[0] + "'");
        }
    }
    if (stage < 2) throw ParseError(line_no, "missing header or kind line");

    GameBuilder b(kind);
    std::unordered_map<std::string, std::size_t> decl_line;
    for (const auto& [name, owner, prio, ln] : states) {
        if (decl_line.count(name)) throw ParseError(ln, "duplicate state name '" + name + "'");
        decl_line[name] = ln;
        b.add_state(name, owner, prio);
    }
    std::vector<bool> has_succ(states.size(), false);
    std::unordered_map<std::string, StateId> ids;
    for (std::size_t i = 0; i < states.size(); ++i) ids[std::get<0>(states[i])] = static_cast<StateId>(i);
    for (const auto& e : edges) {
        auto s = ids.find(e.src);
        auto d = ids.find(e.dst);
        if (s == ids.end()) throw ParseError(e.line, "dangling edge endpoint '" + e.src + "'");
        if (d == ids.end()) throw ParseError(e.line, "dangling edge endpoint '" + e.dst + "'");
        if (kind == GameKind::MeanPenaltyParity && e.weight < 0) {
            throw ParseError(e.line, "negative weight in a mean-penalty game");
        }
        try {
            b.add_edge(s->second, d->second, e.weight);
        } catch (const InvalidGame& err) {
            throw ParseError(e.line, err.what());
        }
        has_succ[s->second] = true;
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (!has_succ[i]) {
            throw ParseError(std::get<3>(states[i]), "state without successor: '" + std::get<0>(states[i]) + "'");
        }
    }
    return std::move(b).build();
}

std::string serialize_game(const Game& g)
{
    std::ostringstream out;
    out << "mppg v1\n";
    out << "kind " << (g.kind() == GameKind::MeanPayoffParity ? "mean-payoff-parity" : "mean-penalty-parity") << "\n";
    for (StateId q = 0; q < g.size(); ++q) {
        out << "state " << g.name(q) << " owner=" << (g.owner(q) == Owner::P1 ? 1 : 2)
            << " priority=" << g.priority(q) << "\n";
    }
    for (StateId q = 0; q < g.size(); ++q) {
        for (const auto& e : g.successors(q)) {
            out << "edge " << g.name(q) << " " << g.name(e.dst) << " weight=" << e.weight << "\n";
        }
    }
    return out.str();
}

Game load_game(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw GameError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_game(buf.str());
}

void save_game(const Game& g, const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw GameError("cannot write '" + path + "'");
    out << serialize_game(g);
}

} // namespace mppg
