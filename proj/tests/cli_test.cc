// Copyright 2026 The stabent Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "stabent/cli.h"

using namespace stabent;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.push_back("");
    }
    return out;
}

}  // namespace

TEST(cli, sample_is_reproducible_across_workers) {
    CliRun a = run({"sample", "--da", "2", "--db", "2", "--samples", "1000", "--seed", "7", "--deterministic",
                 "--workers", "1"});
    CliRun b = run({"sample", "--da", "2", "--db", "2", "--samples", "1000", "--seed", "7", "--deterministic",
                 "--workers", "4"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    auto ls = lines(a.out);
    ASSERT_EQ(ls.size(), 1002u);
    EXPECT_EQ(ls[0].rfind("# ", 0), 0u);
    json prov = json::parse(ls[0].substr(2));
    EXPECT_EQ(prov["config"]["seed"], 7);
    EXPECT_FALSE(prov.contains("timestamp"));
    EXPECT_EQ(ls[1], "sample_index,e_lin,m_lin");
    CliRun c = run({"sample", "--da", "2", "--db", "2", "--samples", "10", "--seed", "7"});
    EXPECT_TRUE(json::parse(lines(c.out)[0].substr(2)).contains("timestamp"));
}

TEST(cli, json_records_match_csv_rows) {
    CliRun csv = run({"sample", "--n", "3", "--samples", "50", "--seed", "3", "--deterministic"});
    CliRun js = run({"sample", "--n", "3", "--samples", "50", "--seed", "3", "--deterministic", "--format", "json"});
    ASSERT_EQ(js.code, 0) << js.err;
    json doc = json::parse(js.out);
    auto ls = lines(csv.out);
    ASSERT_EQ(doc["records"].size(), 50u);
    for (std::size_t i = 0; i < 50; i++) {
        auto cells = split(ls[i + 2]);
        EXPECT_EQ(std::stod(cells[1]), doc["records"][i]["e_lin"].get<double>());
        EXPECT_EQ(std::stod(cells[2]), doc["records"][i]["m_lin"].get<double>());
    }
    EXPECT_EQ(doc["provenance"]["config"]["d_a"], 2);
    EXPECT_EQ(doc["provenance"]["config"]["d_b"], 4);
}

TEST(cli, sample_summary_covariance) {
    CliRun r = run({"sample", "--da", "2", "--db", "2", "--samples", "1000", "--seed", "7", "--deterministic",
                 "--format", "json"});
    json s = json::parse(r.out)["summary"];
    EXPECT_LT(std::abs(s["cov"].get<double>()), 3 * s["se_cov"].get<double>());
    EXPECT_EQ(s["reference"]["cov"], 0.0);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run({"sample", "--da", "2", "--db", "3", "--samples", "10", "--seed", "1"}).code, 2);
    EXPECT_EQ(run({"sample", "--da", "2", "--db", "2", "--samples", "10"}).code, 2);
    EXPECT_EQ(run({"sample", "--samples", "10", "--seed", "1"}).code, 2);
    EXPECT_EQ(run({"orbit", "--da", "2", "--db", "2", "--lambda", "0.7,0.2", "--seed", "1"}).code, 2);
    EXPECT_EQ(run({"orbit", "--da", "2", "--db", "2", "--lambda", "0.5,0.3,0.2", "--seed", "1"}).code, 2);
    EXPECT_EQ(run({"verify", "nope"}).code, 2);
    EXPECT_EQ(run({"sample", "--da", "2", "--db", "2", "--seed", "1", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
}

TEST(cli, lambda_parsing) {
    auto v = parse_lambda("0.5, 0.5000000001", 2);
    EXPECT_NEAR(v[0] + v[1], 1.0, 1e-15);
    auto w = parse_lambda("0.2,0.8", 2);
    EXPECT_EQ(w[0], 0.8);
    EXPECT_THROW(parse_lambda("0.5,0.6", 2), UsageError);
    EXPECT_THROW(parse_lambda("0.5,x", 2), UsageError);
    EXPECT_THROW(parse_lambda("1.2,-0.2", 2), UsageError);
}

TEST(cli, orbit_summary_against_closed_form) {
    CliRun r = run({"orbit", "--da", "2", "--db", "2", "--lambda", "0.5,0.5", "--samples", "100000", "--seed", "3",
                 "--deterministic", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    json s = json::parse(r.out)["summary"];
    EXPECT_NEAR(s["mbar"].get<double>(), 0.3, 1e-12);
    EXPECT_LT(std::abs(s["z"].get<double>()), 3.0);
    CliRun q = run({"orbit", "--da", "4", "--db", "4", "--lambda", "0.6,0.4,0,0", "--samples", "20000", "--seed", "4",
                 "--deterministic", "--format", "json"});
    json t = json::parse(q.out)["summary"];
    EXPECT_LT(std::abs(t["z"].get<double>()), 3.0);
    CliRun p = run({"orbit", "--da", "2", "--db", "2", "--lambda", "1,0", "--samples", "1000", "--seed", "3"});
    EXPECT_EQ(p.code, 0) << p.err;
}

TEST(cli, conditional_columns) {
    CliRun r = run({"conditional", "--da", "4", "--db", "4", "--samples", "5000", "--seed", "1", "--bins", "5",
                 "--deterministic"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto ls = lines(r.out);
    EXPECT_EQ(ls[1], "e_center,cond_mean_m,cond_se,count,closed_form_m");
    for (std::size_t i = 2; i < ls.size(); i++) {
        EXPECT_EQ(ls[i].back(), ',') << ls[i];
    }
    CliRun one = run({"conditional", "--da", "2", "--db", "4", "--samples", "20000", "--seed", "1", "--bins", "1",
                   "--deterministic", "--format", "json"});
    json doc = json::parse(one.out);
    ASSERT_EQ(doc["records"].size(), 1u);
    CliRun s = run({"sample", "--da", "2", "--db", "4", "--samples", "20000", "--seed", "1", "--deterministic",
                 "--format", "json"});
    EXPECT_NEAR(doc["records"][0]["cond_mean_m"].get<double>(),
                json::parse(s.out)["summary"]["mean_m"].get<double>(), 1e-12);
    EXPECT_NEAR(doc["records"][0]["closed_form_m"].get<double>(), 1.0 - 4.0 / 11.0, 1e-10);
}

TEST(cli, verify_exit_codes) {
    for (std::string suite : {"variance", "covariance", "clifford-antiflat", "pauli-patterns"}) {
        CliRun r = run({"verify", suite});
        EXPECT_EQ(r.code, 0) << suite << r.err;
        json doc = json::parse(r.out);
        EXPECT_TRUE(doc["pass"].get<bool>());
        EXPECT_GT(doc["total"].get<int>(), 0);
    }
    json v = json::parse(run({"verify", "variance"}).out);
    bool found = false;
    for (const auto &c : v["checks"]) {
        if (c["name"] == "target at d=2") {
            EXPECT_EQ(c["computed"], "68/105");
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

TEST(cli, gauss_check_rows) {
    CliRun one = run({"gauss-check", "--n-min", "4", "--n-max", "4", "--samples", "10000", "--seed", "1",
                   "--deterministic", "--format", "json"});
    ASSERT_EQ(one.code, 0) << one.err;
    json doc = json::parse(one.out);
    EXPECT_EQ(doc["records"].size(), 1u);
    EXPECT_FALSE(doc["summary"].contains("kl_strictly_decreasing"));
    EXPECT_FALSE(doc["summary"]["warnings"].empty());
}

TEST(cli, closed_form_values) {
    CliRun r = run({"closed-form", "--da", "2", "--db", "2", "--lambda", "0.5,0.5", "--format", "json",
                 "--deterministic"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::map<std::string, json> rows;
    json doc = json::parse(r.out);
    for (const auto &rec : doc["records"]) {
        rows[rec["quantity"].get<std::string>()] = rec;
    }
    EXPECT_EQ(rows["mean_m_lin"]["exact"], "3/7");
    EXPECT_EQ(rows["cov_e_m"]["exact"], "0");
    EXPECT_NEAR(rows["mbar"]["value"].get<double>(), 0.3, 1e-12);
    EXPECT_NEAR(rows["haar_consistency_2xdB"]["value"].get<double>(), 3.0 / 7.0, 1e-8);
    EXPECT_NEAR(rows["log_mean_sp_bits"]["value"].get<double>(), std::log2(7.0 / 4.0), 1e-12);
    CliRun nats = run({"closed-form", "--da", "2", "--db", "2", "--natural-log", "--deterministic"});
    EXPECT_NE(nats.out.find("log_mean_sp_nats"), std::string::npos);
}
