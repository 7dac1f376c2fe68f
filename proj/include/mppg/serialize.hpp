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

#ifndef MPPG_SERIALIZE_HPP
#define MPPG_SERIALIZE_HPP

#include <string>
#include <string_view>

#include "json.hpp"

#include "mppg/certificates.hpp"
#include "mppg/game.hpp"
#include "mppg/mp_engine.hpp"
#include "mppg/penalty_solver.hpp"

namespace mppg {

using Json = nlohmann::ordered_json;

struct FormatError : GameError { using GameError::GameError; };

/// {"values": {"<state>": "p/q" | "-inf" | "inf", ...}} in state order.
Json values_to_json(const Game& g, const ValueFunction& vals);

/**
 * Strategy files hold one `q -> q'` line per state of the owner (`#`
 * comments and blank lines allowed). The owner is that of the listed
 * states; every state of that owner must appear exactly once.
 */
MemorylessStrategy parse_strategy(const Game& g, std::string_view text);
std::string serialize_strategy(const Game& g, const MemorylessStrategy& s);

/// Multi-strategy files: one `q -> {a,b}` line per Pl1 state.
MultiStrategy parse_multi_strategy(const Game& g, std::string_view text);
std::string serialize_multi_strategy(const Game& g, const MultiStrategy& s);

/**
 * {"threshold": "p/q", "trap": [names], "node": N} where N is
 * {"parity": "even", "strategy": {"q": "q'"}, "children": [N]},
 * {"parity": "odd", "trapT": [names], "children": [N, N]} or
 * {"parity": "leaf", "children": []}.
 */
Json witness_to_json(const Game& g, const NpWitness& w);
NpWitness witness_from_json(const Game& g, const Json& j);

} // namespace mppg

#endif
