// Copyright 2026 The covgeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "covgeo/serialize.hpp"
#include "support/round_trip.hpp"
#include "support/run_process.hpp"

using namespace covgeo;
using covgeo::testing::recompute_results;
using covgeo::testing::run_command;
using serialize::ordered_json;

namespace {

const std::string kCli = COVGEO_CLI_PATH;

std::string cli(const std::string &args) {
    return kCli + " " + args;
}

size_t count_lines(const std::string &text) {
    size_t lines = 0;
    for (char c : text) {
        if (c == '\n') {
            lines++;
        }
    }
    return lines;
}

void check_round_trip(const std::string &args) {
    auto run = run_command(cli(args));
    REQUIRE(run.exit_code == 0);
    ordered_json doc = ordered_json::parse(run.output);
    REQUIRE(doc.contains("command"));
    REQUIRE(doc.contains("params"));
    REQUIRE(doc.contains("results"));
    REQUIRE(doc.contains("warnings"));
    ordered_json recomputed = recompute_results(doc);
    REQUIRE(doc["results"].dump() == recomputed.dump());
}

}  // namespace

TEST_CASE("repeated runs are byte-identical") {
    const std::vector<std::string> invocations = {
        "bounds --N 4 --b 4 --k 1..4 --format json",
        "bounds --N 100 --b 4 --k 1..10 --format csv",
        "bounds --N 6 --k 3 --format text",
        "tower --N 4 --k 2 --verify-geodesic --samples 20 --seed 1 --format json",
        "tower --N 3 --k 2 --format csv",
        "bracket --p 1XX --q XYX --format json",
        "bracket --p XX --q YY --format csv",
        "bracket --h X1:1,YX:1 --K ZX:1 --b 2 --format text",
        "code-search --n 2 --predicate paper --method exhaustive --format json",
        "code-search --n 1 --predicate clifford --method exhaustive --format csv",
        "code-search --n 3 --predicate clifford --method greedy --seed 5 --iterations 10 --format json",
        "ricci --N 1 --b 2 --format text",
        "ricci --N 2 --b 4 --bg --d 16 --format json",
        "ricci --N 1 --b 2 --bg --d 4 --format csv",
    };
    for (const std::string &args : invocations) {
        auto first = run_command(cli(args));
        auto second = run_command(cli(args));
        INFO("invocation: " << args);
        REQUIRE(first.exit_code == 0);
        REQUIRE(second.exit_code == 0);
        REQUIRE_FALSE(first.output.empty());
        REQUIRE(first.output == second.output);
    }
}

TEST_CASE("bounds: worked N = 4 values through the tool") {
    auto run = run_command(cli("bounds --N 4 --b 4 --k 2 --format json"));
    REQUIRE(run.exit_code == 0);
    ordered_json doc = ordered_json::parse(run.output);
    REQUIRE(doc["results"].size() == 1);
    const ordered_json &r = doc["results"][0];
    CHECK(r["type"] == "covering_report");
    CHECK(r["lemma_bound"] == "6");
    CHECK(r["theorem_bound"] == "42");
    CHECK(r["floor_copies"] == "7");
    CHECK(r["floor_certified"] == true);
    double e_k = std::stod(r["e_k"].get<std::string>());
    CHECK(std::abs(e_k - 40.0 * M_PI) < 1e-9);
    CHECK(doc["warnings"].empty());
}

TEST_CASE("bounds: log-domain CSV has one row per k") {
    auto run = run_command(cli("bounds --N 100 --b 4 --k 1..10 --format csv"));
    REQUIRE(run.exit_code == 0);
    REQUIRE(count_lines(run.output) == 11);  // header + 10 rows
    std::istringstream stream(run.output);
    std::string header, first_row;
    std::getline(stream, header);
    std::getline(stream, first_row);
    CHECK(header.rfind("N,k,b,e_k", 0) == 0);
    CHECK(first_row.rfind("100,1,4,", 0) == 0);
    // the same run in JSON carries the log-domain warning
    auto json_run = run_command(cli("bounds --N 100 --b 4 --k 1..10 --format json"));
    ordered_json doc = ordered_json::parse(json_run.output);
    REQUIRE(doc["warnings"].size() == 1);
    for (const auto &r : doc["results"]) {
        CHECK(r["log_domain"] == true);
    }
}

TEST_CASE("tower: geodesic verification passes every sample") {
    auto run = run_command(cli("tower --N 4 --k 2 --verify-geodesic --samples 100 --seed 1 --format json"));
    REQUIRE(run.exit_code == 0);
    ordered_json doc = ordered_json::parse(run.output);
    REQUIRE(doc["results"].size() == 2);
    CHECK(doc["results"][0]["type"] == "cartan_tower");
    CHECK(doc["results"][0]["dimension"] == 10);
    const ordered_json &check = doc["results"][1];
    CHECK(check["type"] == "geodesic_check");
    CHECK(check["samples"] == 100);
    CHECK(check["passed"] == 100);
    CHECK(check["all_passed"] == true);
    CHECK(doc["warnings"].empty());
}

TEST_CASE("bracket: worked pair and expansion runs") {
    auto pair = run_command(cli("bracket --p 1XX --q XYX --format json"));
    REQUIRE(pair.exit_code == 0);
    ordered_json pair_doc = ordered_json::parse(pair.output);
    const ordered_json &record = pair_doc["results"][0];
    CHECK(record["word"] == "XZ1");
    CHECK(record["phase_exp"] == 1);
    CHECK(record["coefficient"] == "2");
    CHECK(record["zero"] == false);

    auto expansion = run_command(cli("bracket --h X1:1,YX:1 --K ZX:1 --b 2 --format json"));
    REQUIRE(expansion.exit_code == 0);
    ordered_json exp_doc = ordered_json::parse(expansion.output);
    const ordered_json &exp_record = exp_doc["results"][0];
    CHECK(exp_record["type"] == "bracket_expansion");
    CHECK(exp_record["arnold_kheshin"] == "24");
    CHECK(exp_record["xtype_empty"] == false);
    REQUIRE(exp_record["result"].size() == 2);
    CHECK(exp_record["result"][0]["word"] == "X1");
    CHECK(exp_record["result"][0]["coefficient"] == "-2");
    CHECK(exp_record["result"][1]["word"] == "YX");
    CHECK(exp_record["result"][1]["coefficient"] == "2");
}

TEST_CASE("code-search: worked n = 1 clifford run") {
    auto run = run_command(cli("code-search --n 1 --predicate clifford --method exhaustive --format json"));
    REQUIRE(run.exit_code == 0);
    ordered_json doc = ordered_json::parse(run.output);
    const ordered_json &summary = doc["results"][0];
    CHECK(summary["type"] == "code_search_summary");
    CHECK(summary["max_k"] == 2);
    CHECK(summary["maximal_count"] == 1);
    const ordered_json &code = doc["results"][1];
    CHECK(code["k"] == 2);
    CHECK(code["rate"] == "1");
    CHECK(code["rate_paper"] == "2");
    REQUIRE(code["generators"].size() == 2);
    CHECK(code["generators"][0] == "10");
    CHECK(code["generators"][1] == "01");
}

TEST_CASE("ricci: spectrum record plus Bishop-Gromov records") {
    auto run = run_command(cli("ricci --N 2 --b 4 --bg --d 16 --format json"));
    REQUIRE(run.exit_code == 0);
    ordered_json doc = ordered_json::parse(run.output);
    REQUIRE(doc["results"].size() == 4);  // spectrum, explicit d, rows k=1,2
    const ordered_json &spectrum = doc["results"][0];
    CHECK(spectrum["type"] == "ricci_spectrum");
    CHECK(spectrum["dimension"] == 15);
    CHECK(std::stod(spectrum["lambda_min"].get<std::string>()) == 31.0 / 512.0);
    const ordered_json &at_d = doc["results"][1];
    CHECK(at_d["type"] == "bishop_gromov");
    CHECK(at_d["branch"] == "spherical");
    CHECK(std::stod(at_d["bound"].get<std::string>()) >= 1.0);
    CHECK(doc["results"][2]["type"] == "bg_comparison");
    CHECK(doc["results"][2]["k"] == 1);
    CHECK(doc["results"][3]["k"] == 2);
    CHECK(doc["results"][3]["theorem_bound"] == "1");
}

TEST_CASE("JSON round-trip: recomputing from params reproduces results byte-for-byte") {
    check_round_trip("bounds --N 4 --b 4 --k 1..4 --format json");
    check_round_trip("bounds --N 20 --k 1..5 --d-c 1000 --format json");
    check_round_trip("bounds --N 100 --b 4 --k 1..10 --format json");
    check_round_trip("tower --N 4 --k 2 --verify-geodesic --samples 20 --seed 1 --format json");
    check_round_trip("tower --N 3 --k 3 --format json");
    check_round_trip("bracket --p 1XX --q XYX --format json");
    check_round_trip("bracket --h X1:1,YX:1 --K ZX:1 --b 2 --format json");
    check_round_trip("code-search --n 2 --predicate clifford --method exhaustive --format json");
    check_round_trip("code-search --n 2 --predicate paper --method greedy --seed 3 --iterations 5 --format json");
    check_round_trip("ricci --N 2 --b 4 --bg --d 16 --format json");
    check_round_trip("ricci --N 1 --b 2 --format json");
}

TEST_CASE("precision flag changes only the float rendering") {
    auto full = run_command(cli("bounds --N 4 --b 4 --k 2 --precision 17 --format json"));
    auto short_run = run_command(cli("bounds --N 4 --b 4 --k 2 --precision 6 --format json"));
    ordered_json full_doc = ordered_json::parse(full.output);
    ordered_json short_doc = ordered_json::parse(short_run.output);
    CHECK(full_doc["results"][0]["theorem_bound"] == short_doc["results"][0]["theorem_bound"]);
    CHECK(short_doc["results"][0]["e_k"] == "125.664");
    CHECK(full_doc["results"][0]["e_k"] != short_doc["results"][0]["e_k"]);
}

TEST_CASE("error handling: exit code 2 and empty stdout") {
    const std::vector<std::string> bad = {
        "bogus-subcommand",
        "bounds --N 4 --k 0",
        "bounds --N 4 --k 5",
        "bounds --N 4 --k 2 --b 1",
        "bounds --N 4 --k 1..x",
        "tower --N 4 --k 9",
        "bracket --p X",
        "bracket --p X --q XX",
        "bracket --p X --q Y --h X:1 --K Y:1",
        "bracket --h X:1 --K YY:1",
        "code-search --n 5 --method exhaustive",
        "code-search --n 2 --predicate wrong",
        "ricci --N 9",
        "ricci --N 2 --d 16",
    };
    for (const std::string &args : bad) {
        auto run = run_command(cli(args));
        INFO("invocation: " << args);
        CHECK(run.exit_code == 2);
    }
    CHECK(run_command(cli("--help")).exit_code == 0);
}
