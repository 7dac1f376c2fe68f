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

#ifndef MPPG_CERTIFICATES_HPP
#define MPPG_CERTIFICATES_HPP

#include <string>
#include <vector>

#include "mppg/game.hpp"
#include "mppg/mp_engine.hpp"
#include "mppg/rational.hpp"

namespace mppg {

struct NoWitness : GameError { using GameError::GameError; };

/**
 * One level of an NP witness for "val(q0) >= x".
 *
 * The state set a node talks about is implicit: the root covers the
 * witness's top trap, an Even node's child covers S minus Pl1's attractor
 * to the least priority, and an Odd node's children cover its trap T and
 * S minus Pl1's attractor to T. An empty set is covered by a Leaf.
 */
struct NpNode
{
    enum class Kind { Even, Odd, Leaf };

    Kind kind = Kind::Leaf;
    MemorylessStrategy strategy; // Even: Pl1 strategy, read on the node's set only
    StateSet trap;               // Odd: the guessed 2-trap
    std::vector<NpNode> children;
};

struct NpWitness
{
    Rat threshold;
    StateSet trap;
    NpNode root;
};

std::size_t node_count(const NpNode& n);

enum class RejectReason { None, NotATrap, StrategyBelowThreshold, WrongParity, Malformed, NotBelowThreshold };

const char* reason_name(RejectReason r);

struct Verdict
{
    bool accepted = false;
    RejectReason reason = RejectReason::None;
    std::string detail;

    explicit operator bool() const { return accepted; }
};

/// Deterministic check of an NP witness; acceptance implies val(q0) >= x.
Verdict verify_np(const Game& g, StateId q0, const Rat& x, const NpWitness& w);

/// Witness for every state whose value is at least x; throws NoWitness if there is none.
NpWitness make_np_witness(const Game& g, const Rat& x);

/// Accepts iff the Pl2 strategy holds q0 strictly below x, which certifies val(q0) < x.
Verdict verify_conp(const Game& g, StateId q0, const Rat& x, const MemorylessStrategy& tau);

} // namespace mppg

#endif
