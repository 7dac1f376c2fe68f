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

#include "mppg/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace mppg {

Game gen_game(const GenParams& params)
{
    if (params.states < 1) throw InvalidParameters("need at least one state");
    if (params.max_degree < 1) throw InvalidParameters("out-degree must be at least 1");
    if (params.max_weight < 0) throw InvalidParameters("maximal weight must be non-negative");
    if (params.priorities < 1) throw InvalidParameters("need at least one priority");

    std::mt19937_64 rng(params.seed);
    const std::size_t n = params.states;
    const std::size_t k = std::min(params.max_degree, n);
    const auto w = static_cast<std::uint64_t>(params.max_weight);
    const bool penalty = params.kind == GameKind::MeanPenaltyParity;

    GameBuilder b(params.kind);
    for (std::size_t i = 0; i < n; ++i) {
        Owner owner = rng() % 2 ? Owner::P2 : Owner::P1;
        auto prio = static_cast<Priority>(params.priority_offset + rng() % params.priorities);
        b.add_state("q" + std::to_string(i), owner, prio);
    }
    std::vector<StateId> pool(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t deg = 1 + rng() % k;
        std::iota(pool.begin(), pool.end(), 0);
        for (std::size_t j = 0; j < deg; ++j) {
            std::swap(pool[j], pool[j + rng() % (n - j)]);
            Weight wt = penalty ? static_cast<Weight>(rng() % (w + 1))
                                : static_cast<Weight>(rng() % (2 * w + 1)) - params.max_weight;
            b.add_edge(static_cast<StateId>(i), pool[j], wt);
        }
    }
    return std::move(b).build();
}

} // namespace mppg
