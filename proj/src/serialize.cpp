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

#include "mppg/serialize.hpp"

#include <sstream>

namespace mppg {

namespace {

std::string trim(std::string_view s)
{
    const char* ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return std::string(s.substr(b, e - b + 1));
}

StateId lookup(const Game& g, const std::string& name, std::size_t line)
{
    if (!g.has_state(name)) throw ParseError(line, "unknown state '" + name + "'");
    return g.id(name);
}

// Calls fn(line_no, lhs, rhs) for every `lhs -> rhs` line.
template <typename Fn>
void for_each_arrow(std::string_view text, Fn fn)
{
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (trim(line).empty()) continue;
        auto arrow = line.find("->");
        if (arrow == std::string_view::npos) throw ParseError(line_no, "expected 'state -> successor'");
        fn(line_no, trim(line.substr(0, arrow)), trim(line.substr(arrow + 2)));
    }
}

Json names(const Game& g, const StateSet& s)
{
    Json a = Json::array();
    for (auto q : s.members()) a.push_back(g.name(q));
    return a;
}

StateSet set_from_json(const Game& g, const Json& j)
{
    if (!j.is_array()) throw FormatError("expected an array of state names");
    StateSet s(g.size());
    for (const auto& e : j) {
        if (!e.is_string() || !g.has_state(e.get<std::string>())) throw FormatError("unknown state in set");
        s.insert(g.id(e.get<std::string>()));
    }
    return s;
}

Json node_to_json(const Game& g, const NpNode& n)
{
    Json j;
    switch (n.kind) {
    case NpNode::Kind::Even: {
        j["parity"] = "even";
        Json strat = Json::object();
        for (StateId q = 0; q < n.strategy.choice.size(); ++q) {
            if (n.strategy.choice[q] != kNoState) strat[g.name(q)] = g.name(n.strategy.choice[q]);
        }
        j["strategy"] = strat;
        break;
    }
    case NpNode::Kind::Odd:
        j["parity"] = "odd";
        j["trapT"] = names(g, n.trap);
        break;
    case NpNode::Kind::Leaf:
        j["parity"] = "leaf";
        break;
    }
    j["children"] = Json::array();
    for (const auto& c : n.children) j["children"].push_back(node_to_json(g, c));
    return j;
}

NpNode node_from_json(const Game& g, const Json& j)
{
    if (!j.is_object() || !j.contains("parity") || !j["parity"].is_string()) {
        throw FormatError("witness node needs a 'parity' field");
    }
    NpNode n;
    const std::string parity = j["parity"].get<std::string>();
    if (parity == "even") {
        n.kind = NpNode::Kind::Even;
        n.strategy = MemorylessStrategy{Owner::P1, std::vector<StateId>(g.size(), kNoState)};
        if (!j.contains("strategy") || !j["strategy"].is_object()) throw FormatError("even node needs a strategy");
        for (const auto& [src, dst] : j["strategy"].items()) {
            if (!dst.is_string() || !g.has_state(src) || !g.has_state(dst.get<std::string>())) {
                throw FormatError("strategy mentions an unknown state");
            }
            n.strategy.choice[g.id(src)] = g.id(dst.get<std::string>());
        }
    } else if (parity == "odd") {
        n.kind = NpNode::Kind::Odd;
        if (!j.contains("trapT")) throw FormatError("odd node needs 'trapT'");
        n.trap = set_from_json(g, j["trapT"]);
    } else if (parity == "leaf") {
        n.kind = NpNode::Kind::Leaf;
    } else {
        throw FormatError("unknown parity '" + parity + "'");
    }
    if (j.contains("children")) {
        if (!j["children"].is_array()) throw FormatError("'children' must be an array");
        for (const auto& c : j["children"]) n.children.push_back(node_from_json(g, c));
    }
    return n;
}

} // namespace

Json values_to_json(const Game& g, const ValueFunction& vals)
{
    Json v = Json::object();
    for (StateId q = 0; q < g.size(); ++q) v[g.name(q)] = vals[q].str();
    Json out;
    out["values"] = v;
    return out;
}

MemorylessStrategy parse_strategy(const Game& g, std::string_view text)
{
    std::vector<std::pair<StateId, StateId>> moves;
    std::vector<std::size_t> lines;
    for_each_arrow(text, [&](std::size_t ln, const std::string& lhs, const std::string& rhs) {
        StateId src = lookup(g, lhs, ln);
        StateId dst = lookup(g, rhs, ln);
        if (!g.has_edge(src, dst)) throw ParseError(ln, "no edge " + lhs + " -> " + rhs);
        moves.emplace_back(src, dst);
        lines.push_back(ln);
    });
    if (moves.empty()) throw ParseError(0, "empty strategy file");
    const Owner owner = g.owner(moves.front().first);
    MemorylessStrategy s{owner, std::vector<StateId>(g.size(), kNoState)};
    for (std::size_t i = 0; i < moves.size(); ++i) {
        auto [src, dst] = moves[i];
        if (g.owner(src) != owner) throw ParseError(lines[i], "state '" + g.name(src) + "' belongs to the other player");
        if (s.choice[src] != kNoState) throw ParseError(lines[i], "state '" + g.name(src) + "' listed twice");
        s.choice[src] = dst;
    }
    for (StateId q = 0; q < g.size(); ++q) {
        if (g.owner(q) == owner && s.choice[q] == kNoState) {
            throw ParseError(0, "no move for state '" + g.name(q) + "'");
        }
    }
    return s;
}

std::string serialize_strategy(const Game& g, const MemorylessStrategy& s)
{
    std::string out;
    for (StateId q = 0; q < g.size(); ++q) {
        if (s.choice[q] != kNoState) out += g.name(q) + " -> " + g.name(s.choice[q]) + "\n";
    }
    return out;
}

MultiStrategy parse_multi_strategy(const Game& g, std::string_view text)
{
    MultiStrategy s;
    s.allowed.resize(g.size());
    std::vector<bool> seen(g.size(), false);
    for_each_arrow(text, [&](std::size_t ln, const std::string& lhs, const std::string& rhs) {
        StateId src = lookup(g, lhs, ln);
        if (g.owner(src) != Owner::P1) throw ParseError(ln, "multi-strategies only act on Pl1 states");
        if (seen[src]) throw ParseError(ln, "state '" + lhs + "' listed twice");
        seen[src] = true;
        if (rhs.size() < 2 || rhs.front() != '{' || rhs.back() != '}') throw ParseError(ln, "expected '{a,b,...}'");
        std::string body = rhs.substr(1, rhs.size() - 2);
        std::istringstream parts(body);
        std::string item;
        while (std::getline(parts, item, ',')) {
            std::string name = trim(item);
            StateId dst = lookup(g, name, ln);
            if (!g.has_edge(src, dst)) throw ParseError(ln, "no edge " + lhs + " -> " + name);
            s.allowed[src].push_back(dst);
        }
        if (s.allowed[src].empty()) throw ParseError(ln, "empty allowed set");
    });
    for (StateId q = 0; q < g.size(); ++q) {
        if (g.owner(q) == Owner::P1 && !seen[q]) throw ParseError(0, "no entry for state '" + g.name(q) + "'");
    }
    try {
        check_multi_strategy(g, s);
    } catch (const StrategyDomainMismatch& e) {
        throw ParseError(0, e.what());
    }
    return s;
}

std::string serialize_multi_strategy(const Game& g, const MultiStrategy& s)
{
    std::string out;
    for (StateId q = 0; q < g.size(); ++q) {
        if (s.allowed[q].empty()) continue;
        out += g.name(q) + " -> {";
        for (std::size_t i = 0; i < s.allowed[q].size(); ++i) {
            if (i) out += ",";
            out += g.name(s.allowed[q][i]);
        }
        out += "}\n";
    }
    return out;
}

Json witness_to_json(const Game& g, const NpWitness& w)
{
    Json j;
    j["threshold"] = w.threshold.str();
    j["trap"] = names(g, w.trap);
    j["node"] = node_to_json(g, w.root);
    return j;
}

NpWitness witness_from_json(const Game& g, const Json& j)
{
    if (!j.is_object() || !j.contains("threshold") || !j.contains("trap") || !j.contains("node")) {
        throw FormatError("witness needs 'threshold', 'trap' and 'node'");
    }
    if (!j["threshold"].is_string()) throw FormatError("threshold must be a string");
    NpWitness w;
    try {
        w.threshold = Rat::parse(j["threshold"].get<std::string>());
    } catch (const std::exception& e) {
        throw FormatError(std::string("bad threshold: ") + e.what());
    }
    w.trap = set_from_json(g, j["trap"]);
    w.root = node_from_json(g, j["node"]);
    return w;
}

} // namespace mppg
