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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hmdist/multipoly.hpp"

namespace hmdist {

class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at offset " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

   private:
    std::size_t pos_;
};

/// Variable names in index order. With allow_new set, unseen identifiers are
/// appended; otherwise they are a parse error.
struct VarTable {
    std::vector<std::string> names;
    bool allow_new = false;

    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t intern(std::string_view name);
};

/// Parses a rational polynomial expression. Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*      divisors must be nonzero constants
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' integer)?
///   atom   := integer | identifier | '(' expr ')'
QPoly parse_poly(std::string_view text, VarTable& vars);
QPoly parse_poly(std::string_view text, const std::vector<std::string>& vars);

/// The variables z0..z4.
const std::vector<std::string>& projective_vars();

}  // namespace hmdist
