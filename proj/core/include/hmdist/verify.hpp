/*
   Copyright 2026 The hmdist Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hmdist/fixtures.hpp"

namespace hmdist {

enum class CheckStatus { Ok, Mismatch, Error };

std::string check_status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    std::string description;
    CheckStatus status = CheckStatus::Ok;
    std::string expected;
    std::string computed;
    std::vector<std::string> provenance;
    std::string detail;
};

struct CheckSpec {
    std::string name;
    std::string description;
    std::vector<std::string> provenance;
    std::vector<std::string> fixtures;
    /// Fills expected, computed, status and detail.
    std::function<void(const FixtureSet&, CheckResult&)> run;
};

class UnknownCheck : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

const std::vector<CheckSpec>& verification_checks();
const CheckSpec& find_check(const std::string& name);

/// Runs one check; exceptions become Error results.
CheckResult run_check(const CheckSpec& spec, const FixtureSet& fixtures);
/// Runs every check (or only the named one) in registry order.
std::vector<CheckResult> run_checks(const FixtureSet& fixtures, const std::optional<std::string>& only = std::nullopt);

/// Ok if every result is ok, Error if any errored, Mismatch otherwise.
CheckStatus aggregate_status(const std::vector<CheckResult>& results);

}  // namespace hmdist
