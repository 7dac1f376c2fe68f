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

#include "mppg/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "mppg/certificates.hpp"
#include "mppg/game_io.hpp"
#include "mppg/generator.hpp"
#include "mppg/graph_algos.hpp"
#include "mppg/mpp_solver.hpp"
#include "mppg/oracle.hpp"
#include "mppg/penalty_solver.hpp"
#include "mppg/serialize.hpp"
#include "mppg/simulate.hpp"

namespace mppg {

namespace {

class Io
{
public:
    Io(std::istream& in, std::ostream& out) : in_(in), out_(out) { }

    std::string read(const std::string& path)
    {
        std::ostringstream buf;
        if (path == "-") {
            buf << in_.rdbuf();
            return buf.str();
        }
        std::ifstream f(path, std::ios::binary);
        if (!f) throw GameError("cannot open '" + path + "'");
        buf << f.rdbuf();
        return buf.str();
    }

    void write(const std::string& path, const std::string& text)
    {
        if (path.empty() || path == "-") {
            out_ << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw GameError("cannot write '" + path + "'");
        f << text;
    }

private:
    std::istream& in_;
    std::ostream& out_;
};

StateId state_arg(const Game& g, const std::string& name)
{
    if (!g.has_state(name)) throw GameError("unknown state '" + name + "'");
    return g.id(name);
}

Rat threshold_arg(const std::string& text)
{
    try {
        return Rat::parse(text);
    } catch (const std::exception& e) {
        throw GameError("bad threshold '" + text + "': " + e.what());
    }
}

std::string verdict_line(const Verdict& v)
{
    Json j;
    j["accepted"] = v.accepted;
    j["reason"] = reason_name(v.reason);
    if (!v.detail.empty()) j["detail"] = v.detail;
    return j.dump() + "\n";
}

int verdict_code(const Verdict& v)
{
    if (v.accepted) return 0;
    return v.reason == RejectReason::Malformed ? 2 : 1;
}

// Largest subarena inside the states of priority at least that of q_min.
StateSet rounds_component(const Game& g, StateId q_min)
{
    StateSet s(g.size());
    for (StateId q = 0; q < g.size(); ++q) {
        if (g.priority(q) >= g.priority(q_min)) s.insert(q);
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (auto q : s.members()) {
            bool keeps = false;
            for (const auto& e : g.successors(q)) keeps = keeps || s.contains(e.dst);
            if (!keeps) {
                s.erase(q);
                changed = true;
            }
        }
    }
    if (!s.contains(q_min)) throw BadComponent("q_min has no subarena of higher priorities around it");
    return s;
}

GameKind kind_arg(const std::string& text)
{
    if (text == "mpp" || text == "mean-payoff-parity") return GameKind::MeanPayoffParity;
    if (text == "penalty" || text == "mean-penalty-parity") return GameKind::MeanPenaltyParity;
    throw GameError("unknown kind '" + text + "'");
}

} // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    Io io(in, out);
    CLI::App app{"Exact solver for mean-payoff parity and mean-penalty parity games", "mppg"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output;
    std::string engine = "recursive";
    std::string state;
    std::string threshold;
    std::string witness_path;
    std::string strategy_path;
    std::string opponent_path;
    std::string reduce_kind;
    std::string rounds_from;
    std::size_t horizon = 100;
    GenParams gen;
    std::string gen_kind = "mpp";

    auto* solve = app.add_subcommand("solve", "Exact values of every state");
    solve->add_option("--input,-i", input, "Game file, - for stdin");
    solve->add_option("--engine,-e", engine, "recursive, oracle or mp")
        ->check(CLI::IsMember({"recursive", "oracle", "mp"}));
    solve->add_option("--out,-o", output, "Values file (default stdout)");

    auto* vnp = app.add_subcommand("verify-np", "Check a witness for val(q) >= x");
    vnp->add_option("--input,-i", input);
    vnp->add_option("--witness,-w", witness_path)->required();
    vnp->add_option("--state,-s", state)->required();
    vnp->add_option("--threshold,-t", threshold)->required();

    auto* vconp = app.add_subcommand("verify-conp", "Check a Pl2 strategy for val(q) < x");
    vconp->add_option("--input,-i", input);
    vconp->add_option("--strategy", strategy_path)->required();
    vconp->add_option("--state,-s", state)->required();
    vconp->add_option("--threshold,-t", threshold)->required();

    auto* witness = app.add_subcommand("witness", "Produce a witness for val(q) >= x");
    witness->add_option("--input,-i", input);
    witness->add_option("--threshold,-t", threshold)->required();
    witness->add_option("--out,-o", output);

    auto* extract = app.add_subcommand("extract", "Optimal memoryless Pl2 strategy");
    extract->add_option("--input,-i", input);
    extract->add_option("--out,-o", output);

    auto* reduce = app.add_subcommand("reduce", "Turn a mean-penalty parity game into a mean-payoff parity game");
    reduce->add_option("--kind,-k", reduce_kind)->required()->check(CLI::IsMember({"exp", "poly"}));
    reduce->add_option("--input,-i", input);
    reduce->add_option("--output,-o", output);

    auto* sim = app.add_subcommand("simulate", "Play strategies against each other");
    sim->add_option("--input,-i", input);
    sim->add_option("--state,-s", state)->required();
    sim->add_option("--horizon,-n", horizon);
    sim->add_option("--rounds", rounds_from, "Play in rounds pumping after each visit to this state");
    sim->add_option("--strategy", strategy_path, "Pl1 strategy (or multi-strategy) file");
    sim->add_option("--opponent", opponent_path, "Pl2 strategy file");
    sim->add_option("--out,-o", output);

    auto* gen_cmd = app.add_subcommand("gen", "Seeded random game");
    gen_cmd->add_option("--states,-n", gen.states);
    gen_cmd->add_option("--degree,-k", gen.max_degree);
    gen_cmd->add_option("--weight,-W", gen.max_weight);
    gen_cmd->add_option("--priorities,-d", gen.priorities);
    gen_cmd->add_option("--offset", gen.priority_offset);
    gen_cmd->add_option("--kind", gen_kind)->check(CLI::IsMember({"mpp", "penalty", "mean-payoff-parity",
                                                                    "mean-penalty-parity"}));
    gen_cmd->add_option("--seed", gen.seed);
    gen_cmd->add_option("--output,-o", output);

    auto* eval = app.add_subcommand("eval-strategy", "Values guaranteed by a memoryless strategy");
    eval->add_option("--input,-i", input);
    eval->add_option("--strategy", strategy_path)->required();
    eval->add_option("--out,-o", output);

    auto* eval_multi = app.add_subcommand("eval-multi", "Worst-case mean penalty of a multi-strategy");
    eval_multi->add_option("--input,-i", input);
    eval_multi->add_option("--strategy", strategy_path)->required();
    eval_multi->add_option("--out,-o", output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen_cmd) {
            gen.kind = kind_arg(gen_kind);
            io.write(output, serialize_game(gen_game(gen)));
            return 0;
        }

        const Game g = parse_game(io.read(input));
        const bool penalty = g.kind() == GameKind::MeanPenaltyParity;

        if (*solve) {
            ValueFunction vals;
            if (engine == "oracle") {
                vals = penalty ? oracle_penalty_value(g) : oracle_mpp_value(g);
            } else if (engine == "mp") {
                vals = penalty ? ssolve_mp(g) : solve_mp(g);
            } else {
                vals = penalty ? solve_penalty(g) : solve_mpp(g);
            }
            io.write(output, values_to_json(g, vals).dump() + "\n");
            return 0;
        }
        if (*reduce) {
            if (!penalty) throw GameError("reduce expects a mean-penalty parity game");
            Game reduced = reduce_kind == "exp" ? reduce_exponential(g).game : reduce_polynomial(g);
            io.write(output, serialize_game(reduced));
            return 0;
        }
        if (penalty && (*vnp || *vconp || *witness || *extract || *eval)) {
            throw GameError("this subcommand expects a mean-payoff parity game");
        }
        if (*vnp) {
            Json doc;
            try {
                doc = Json::parse(io.read(witness_path));
            } catch (const Json::parse_error& e) {
                throw FormatError(std::string("witness is not JSON: ") + e.what());
            }
            NpWitness w = witness_from_json(g, doc);
            Verdict v = verify_np(g, state_arg(g, state), threshold_arg(threshold), w);
            out << verdict_line(v);
            return verdict_code(v);
        }
        if (*vconp) {
            MemorylessStrategy tau = parse_strategy(g, io.read(strategy_path));
            Verdict v = verify_conp(g, state_arg(g, state), threshold_arg(threshold), tau);
            out << verdict_line(v);
            return verdict_code(v);
        }
        if (*witness) {
            try {
                io.write(output, witness_to_json(g, make_np_witness(g, threshold_arg(threshold))).dump(2) + "\n");
            } catch (const NoWitness& e) {
                err << "mppg: " << e.what() << "\n";
                return 1;
            }
            return 0;
        }
        if (*extract) {
            io.write(output, serialize_strategy(g, extract_p2_optimal(g)));
            return 0;
        }
        if (*eval) {
            MemorylessStrategy s = parse_strategy(g, io.read(strategy_path));
            ValueFunction vals = s.owner == Owner::P1 ? eval_p1_memoryless_mpp(g, s) : eval_p2_memoryless_mpp(g, s);
            io.write(output, values_to_json(g, vals).dump() + "\n");
            return 0;
        }
        if (*eval_multi) {
            if (!penalty) throw GameError("eval-multi expects a mean-penalty parity game");
            MultiStrategy s = parse_multi_strategy(g, io.read(strategy_path));
            io.write(output, values_to_json(g, eval_multi_strategy(g, s)).dump() + "\n");
            return 0;
        }
        if (*sim) {
            const StateId start = state_arg(g, state);
            Json result;
            if (penalty) {
                if (rounds_from.empty()) throw GameError("penalty simulation needs --rounds");
                const StateId q_min = state_arg(g, rounds_from);
                PenaltyRoundsStrategy p1(g, q_min);
                AvoidingResolver resolver(g, q_min);
                PenaltyTrace t = simulate_penalty(g, p1, resolver, horizon, start);
                result["rounds"] = p1.completed_rounds();
                result["final_mean"] = t.means.empty() ? "0/1" : t.means.back().str();
                Json states = Json::array();
                for (auto q : t.states) states.push_back(g.name(q));
                result["states"] = states;
            } else {
                std::unique_ptr<Strategy> p1;
                RoundsStrategy* rounds = nullptr;
                if (!rounds_from.empty()) {
                    const StateId q_min = state_arg(g, rounds_from);
                    auto r = std::make_unique<RoundsStrategy>(g, rounds_component(g, q_min), q_min);
                    rounds = r.get();
                    p1 = std::move(r);
                } else if (!strategy_path.empty()) {
                    MemorylessStrategy s = parse_strategy(g, io.read(strategy_path));
                    if (s.owner != Owner::P1) throw GameError("--strategy must be a Pl1 strategy");
                    p1 = std::make_unique<MemorylessPlayer>(s);
                } else {
                    p1 = std::make_unique<MemorylessPlayer>(extract_optimal_memoryless_mp(g).p1);
                }
                MemorylessStrategy tau = extract_p2_optimal(g);
                if (!opponent_path.empty()) {
                    tau = parse_strategy(g, io.read(opponent_path));
                    if (tau.owner != Owner::P2) throw GameError("--opponent must be a Pl2 strategy");
                }
                MemorylessPlayer p2(tau);
                PlayTrace t = simulate(g, *p1, p2, horizon, start);
                if (rounds) result["rounds"] = rounds->completed_rounds();
                result["final_mean"] = t.means.empty() ? "0/1" : t.means.back().str();
                Json states = Json::array();
                for (auto q : t.states) states.push_back(g.name(q));
                result["states"] = states;
            }
            io.write(output, result.dump() + "\n");
            return 0;
        }
    } catch (const NoWitness& e) {
        err << "mppg: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "mppg: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"mppg"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

} // namespace mppg
