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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hmdist/intersection_ring.hpp"
#include "hmdist/multipoly.hpp"

namespace hmdist::cli {

/// Chern-class scripts on P^4. One statement per line, '#' starts a comment:
///
///   let NAME = SHEAF
///   SHEAF                      evaluated and reported
///
/// SHEAF is a '+'-separated direct sum of terms:
///   O(k)  T  Omega(p)  E  ideal(deg, pa)  bundle(rank, c1, c2, c3, c4)
///   twist(S, k)  dual(S)  sum(S, ...)  tensor(S, S)  wedge2(S)  wedge3(S)
///   sym2(S)  tensor42(S, F)  quotient(A, B)  kernel(B, C)
///   en(S, tangent|conormal)  NAME
/// Numeric arguments are polynomial expressions; unknown identifiers in them
/// become symbolic variables.
class ScriptError : public std::invalid_argument {
   public:
    ScriptError(const std::string& what, std::size_t line)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

struct ChernOutput {
    std::string expr;
    SheafClass<QPoly> sheaf;
    QPoly chi;
};

struct ChernScript {
    std::vector<std::string> vars;
    std::vector<ChernOutput> outputs;
};

ChernScript run_chern_script(std::string_view text);

}  // namespace hmdist::cli
