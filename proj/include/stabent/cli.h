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

#ifndef STABENT_CLI_H
#define STABENT_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace stabent {

const char *version();

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    std::int64_t d_a = 0;
    std::int64_t d_b = 0;
    unsigned n = 0;
    unsigned n_a = 0;
    std::vector<double> lambda;
    std::uint64_t samples = 0;
    std::optional<std::uint64_t> seed;
    int bins = 0;
    std::string out;
    std::string format = "csv";
    unsigned workers = 0;
    bool deterministic = false;
    unsigned qubit_cap = 12;
    bool natural_log = false;
    std::string suite;
    unsigned n_min = 0;
    unsigned n_max = 0;

    nlohmann::json to_json() const;
};

/// Parses comma-separated Schmidt coefficients; renormalizes only within 1e-9 of the simplex.
std::vector<double> parse_lambda(const std::string &text, std::size_t expected_length);

/// Entry point shared by the executable and tests. Returns the process exit code:
/// 0 on success, 1 when a verify run has failing checks, 2 on usage errors.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace stabent

#endif
