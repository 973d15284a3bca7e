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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hmdist/cohomology.hpp"
#include "report.hpp"

namespace hmdist::cli {

struct CommandResult {
    int exit_code = 0;
    /// Set when a subcommand ran; absent for usage errors and --help.
    std::optional<Report> report;
};

/// Parses argv (without the program name), runs the subcommand and writes
/// the rendered report to out (or --out PATH). Usage errors go to err.
CommandResult run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rebuilds a cohomology table from the JSON output of `tables`.
CohomologyTable table_from_json(const Json& report);

}  // namespace hmdist::cli
