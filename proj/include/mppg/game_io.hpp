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

#ifndef MPPG_GAME_IO_HPP
#define MPPG_GAME_IO_HPP

#include <string>
#include <string_view>

#include "mppg/game.hpp"

namespace mppg {

/**
 * Text format, one declaration per line, `#` starts a comment:
 *
 *     mppg v1
 *     kind mean-payoff-parity          (or: kind mean-penalty-parity)
 *     state <name> owner=<1|2> priority=<uint>
 *     edge <src> <dst> weight=<int>
 *
 * Throws ParseError (with the offending line number) on any syntax or
 * validity problem.
 */
Game parse_game(std::string_view text);

/// Inverse of parse_game: parse_game(serialize_game(g)) reproduces g.
std::string serialize_game(const Game& g);

Game load_game(const std::string& path);
void save_game(const Game& g, const std::string& path);

} // namespace mppg

#endif
