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

#ifndef STABENT_VERIFY_H
#define STABENT_VERIFY_H

#include <cstdint>
#include "json.hpp"
#include <string>
#include <vector>

namespace stabent {

struct CheckResult {
    std::string suite;
    std::string name;
    nlohmann::json computed;
    nlohmann::json reference;
    double tolerance = 0;  // 0 means exact comparison
    bool pass = false;
    std::string note;
};

struct VerifyOptions {
    std::uint64_t seed = 2024;
    std::uint64_t gauss_samples = 100000;
    int gauss_bins = 60;
    unsigned gauss_n_min = 4;
    unsigned gauss_n_max = 8;
    int orbit_spectra = 20;
    unsigned workers = 0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::size_t failures() const;
    nlohmann::json to_json() const;
};

/// Suite names accepted by run_verify, excluding "all".
const std::vector<std::string> &verify_suites();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for unknown names.
VerifyReport run_verify(const std::string &suite, const VerifyOptions &opts = {});

}  // namespace stabent

#endif
