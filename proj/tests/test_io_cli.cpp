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

#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mppg/certificates.hpp"
#include "mppg/cli.hpp"
#include "mppg/mpp_solver.hpp"
#include "mppg/penalty_solver.hpp"
#include "mppg/serialize.hpp"

#include "support.hpp"

using namespace mppg;
using namespace mppg::testing;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args, const std::string& stdin_text = "")
{
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture_path(const std::string& name)
{
    return std::string(MPPG_FIXTURE_DIR) + "/" + name;
}

std::string temp_file(const std::string& name, const std::string& text)
{
    std::string path = std::string(MPPG_TEST_TMP) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("solve prints exact values in declaration order")
{
    Run r = cli({"solve", "--input", fixture_path("fig1.mppg")});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"values\":{\"q1\":\"1/1\",\"q2\":\"1/1\"}}\n");
    for (const char* engine : {"recursive", "oracle"}) {
        CHECK(cli({"solve", "--input", fixture_path("fig1.mppg"), "--engine", engine}).out == r.out);
    }
    CHECK(cli({"solve", "--input", fixture_path("fig4.mppg")}).out == "{\"values\":{\"q1\":\"0/1\",\"q2\":\"0/1\"}}\n");
}

TEST_CASE("solve reads stdin and writes --out")
{
    std::string text = serialize_game(fixture("fig1.mppg"));
    CHECK(cli({"solve"}, text).out == "{\"values\":{\"q1\":\"1/1\",\"q2\":\"1/1\"}}\n");
    std::string out = std::string(MPPG_TEST_TMP) + "/values.json";
    CHECK(cli({"solve", "--out", out}, text).code == 0);
    std::ifstream f(out);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == "{\"values\":{\"q1\":\"1/1\",\"q2\":\"1/1\"}}\n");
}

TEST_CASE("usage and parse errors exit with 2")
{
    CHECK(cli({}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({"solve", "--engine", "magic"}).code == 2);
    Run bad = cli({"solve"}, "mppg v1\nkind mean-payoff-parity\nstate a owner=1 priority=0\n");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 3") != std::string::npos);
    CHECK(cli({"solve", "--input", "/nonexistent/file"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("reduce then solve gives negated penalty values")
{
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Game g = random_penalty(14000 + seed, 4);
        ValueFunction want = solve_penalty(g);
        for (const char* kind : {"poly", "exp"}) {
            Run red = cli({"reduce", "--kind", kind}, serialize_game(g));
            REQUIRE(red.code == 0);
            Game reduced = parse_game(red.out);
            CHECK(reduced.kind() == GameKind::MeanPayoffParity);
            Json vals = Json::parse(cli({"solve"}, red.out).out)["values"];
            for (StateId q = 0; q < g.size(); ++q) {
                CHECK(-Value::parse(vals[g.name(q)].get<std::string>()) == want[q]);
            }
        }
    }
    CHECK(cli({"reduce", "--kind", "exp", "--input", fixture_path("fig1.mppg")}).code == 2);
}

TEST_CASE("gen is deterministic and feeds solve")
{
    std::vector<std::string> args{"gen", "--seed", "7", "--states", "5", "--degree", "3", "--weight", "4",
                                  "--priorities", "3"};
    Run a = cli(args);
    Run b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    Run s1 = cli({"solve", "--engine", "recursive"}, a.out);
    Run s2 = cli({"solve", "--engine", "recursive"}, b.out);
    CHECK(s1.out == s2.out);
    CHECK(s1.out == cli({"solve", "--engine", "oracle"}, a.out).out);
    CHECK(parse_game(cli({"gen", "--kind", "penalty", "--seed", "3"}).out).kind() == GameKind::MeanPenaltyParity);
    CHECK(cli({"gen", "--states", "0"}).code == 2);
}

TEST_CASE("strategy text round trip")
{
    Game g = random_mpp(41, 6);
    MemorylessStrategy tau = extract_p2_optimal(g);
    std::string text = serialize_strategy(g, tau);
    if (!text.empty()) CHECK(parse_strategy(g, text) == tau);
    Game fig1 = fixture("fig1.mppg");
    MemorylessStrategy s = parse_strategy(fig1, "# loop then leave\nq1 -> q1\nq2 -> q1\n");
    CHECK(s.owner == Owner::P1);
    CHECK(s.choice == std::vector<StateId>{0, 0});
    CHECK_THROWS_AS(parse_strategy(fig1, "q1 -> q1\n"), ParseError);
    CHECK_THROWS_AS(parse_strategy(fig1, "q2 -> q2\nq1 -> q1\n"), ParseError);
    CHECK_THROWS_AS(parse_strategy(fig1, "q1 q1\n"), ParseError);
    CHECK_THROWS_AS(parse_strategy(fig1, "q1 -> q1\nq1 -> q2\nq2 -> q1\n"), ParseError);
}

TEST_CASE("multi-strategy text round trip")
{
    Game g = fixture("fig4.mppg");
    MultiStrategy s = parse_multi_strategy(g, "q1 -> {q1, q2}\n");
    CHECK(s == permissive_multi_strategy(g));
    CHECK(serialize_multi_strategy(g, s) == "q1 -> {q1,q2}\n");
    CHECK(parse_multi_strategy(g, serialize_multi_strategy(g, s)) == s);
    CHECK_THROWS_AS(parse_multi_strategy(g, "q1 -> {}\n"), ParseError);
    CHECK_THROWS_AS(parse_multi_strategy(g, "q2 -> {q1}\n"), ParseError);
    CHECK_THROWS_AS(parse_multi_strategy(g, "q1 -> q2\n"), ParseError);
}

TEST_CASE("witness JSON round trip and verify-np exit codes")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Game g = random_mpp(15000 + seed);
        ValueFunction vals = solve_mpp(g);
        for (StateId q = 0; q < g.size(); ++q) {
            if (!vals[q].finite()) continue;
            NpWitness w = make_np_witness(g, vals[q].rat());
            Json j = witness_to_json(g, w);
            NpWitness back = witness_from_json(g, j);
            CHECK(witness_to_json(g, back) == j);
            CHECK(verify_np(g, q, vals[q].rat(), back));
        }
    }

    std::string game = fixture_path("fig1.mppg");
    Run made = cli({"witness", "--input", game, "--threshold", "1"});
    REQUIRE(made.code == 0);
    Json doc = Json::parse(made.out);
    CHECK(doc["threshold"] == "1/1");
    CHECK(doc["trap"] == Json::array({"q1", "q2"}));
    std::string path = temp_file("w.json", made.out);
    CHECK(cli({"verify-np", "--input", game, "--witness", path, "--state", "q1", "--threshold", "1"}).code == 0);
    Run rej = cli({"verify-np", "--input", game, "--witness", temp_file("w2.json", made.out), "--state", "q1",
                   "--threshold", "2"});
    CHECK(rej.code == 2); // threshold in the file differs: malformed
    doc["threshold"] = "2/1";
    Run below = cli({"verify-np", "--input", game, "--witness", temp_file("w3.json", doc.dump()), "--state", "q1",
                     "--threshold", "2"});
    CHECK(below.code == 1);
    CHECK(Json::parse(below.out)["accepted"] == false);
    CHECK(cli({"verify-np", "--input", game, "--witness", temp_file("w4.json", "{not json"), "--state", "q1",
               "--threshold", "1"})
              .code == 2);
    CHECK(cli({"witness", "--input", game, "--threshold", "3/2"}).code == 1);
}

TEST_CASE("verify-conp and extract")
{
    Game g = parse_game("mppg v1\nkind mean-payoff-parity\nstate a owner=2 priority=0\nstate b owner=2 priority=0\n"
                        "edge a a weight=3\nedge a b weight=0\nedge b b weight=1\n");
    std::string game = temp_file("conp.mppg", serialize_game(g));
    Run ex = cli({"extract", "--input", game});
    CHECK(ex.out == "a -> b\nb -> b\n");
    std::string tau = temp_file("tau.txt", ex.out);
    CHECK(cli({"verify-conp", "--input", game, "--strategy", tau, "--state", "a", "--threshold", "2"}).code == 0);
    CHECK(cli({"verify-conp", "--input", game, "--strategy", tau, "--state", "a", "--threshold", "1"}).code == 1);
    CHECK(cli({"verify-conp", "--input", game, "--strategy", temp_file("bad.txt", "a -> c\n"), "--state", "a",
               "--threshold", "1"})
              .code == 2);
}

TEST_CASE("eval-strategy and eval-multi")
{
    std::string fig1 = fixture_path("fig1.mppg");
    Run e = cli({"eval-strategy", "--input", fig1, "--strategy", temp_file("s.txt", "q1 -> q2\nq2 -> q1\n")});
    CHECK(e.out == "{\"values\":{\"q1\":\"0/1\",\"q2\":\"0/1\"}}\n");
    Run loop = cli({"eval-strategy", "--input", fig1, "--strategy", temp_file("s2.txt", "q1 -> q1\nq2 -> q1\n")});
    CHECK(loop.out == "{\"values\":{\"q1\":\"-inf\",\"q2\":\"-inf\"}}\n");

    std::string fig4 = fixture_path("fig4.mppg");
    Run m = cli({"eval-multi", "--input", fig4, "--strategy", temp_file("m.txt", "q1 -> {q2}\n")});
    CHECK(m.out == "{\"values\":{\"q1\":\"1/1\",\"q2\":\"1/1\"}}\n");
    Run open = cli({"eval-multi", "--input", fig4, "--strategy", temp_file("m2.txt", "q1 -> {q1,q2}\n")});
    CHECK(open.out == "{\"values\":{\"q1\":\"inf\",\"q2\":\"inf\"}}\n");
}

TEST_CASE("simulate")
{
    Run r = cli({"simulate", "--input", fixture_path("fig1.mppg"), "--state", "q1", "--rounds", "q2", "--horizon",
                 "9"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    // q1 q2 | q1 | q1 q2 | q1 q1 | q1 q2 ...: rounds of 1, 2, 3 pumping steps.
    CHECK(j["states"] == Json::array({"q1", "q2", "q1", "q2", "q1", "q1", "q2", "q1", "q1", "q1"}));
    CHECK(j["rounds"] == 3);
    CHECK(j["final_mean"] == "1/3");

    Run p = cli({"simulate", "--input", fixture_path("fig4.mppg"), "--state", "q1", "--rounds", "q2", "--horizon",
                 "8"});
    REQUIRE(p.code == 0);
    Json pj = Json::parse(p.out);
    // Each walk back to q2 blocks the self-loop for 2; pumping lasts 1, then 4 steps.
    CHECK(pj["states"] == Json::array({"q1", "q2", "q1", "q2", "q1", "q1", "q1", "q1", "q2"}));
    CHECK(pj["final_mean"] == "3/4");
    CHECK(cli({"simulate", "--input", fixture_path("fig4.mppg"), "--state", "q1"}).code == 2);
}

TEST_CASE("values JSON uses lowest terms and infinities")
{
    Game g = fixture("fig1.mppg");
    Json j = values_to_json(g, {Value(Rat(4, 6)), Value::neg_inf()});
    CHECK(j.dump() == "{\"values\":{\"q1\":\"2/3\",\"q2\":\"-inf\"}}");
}
