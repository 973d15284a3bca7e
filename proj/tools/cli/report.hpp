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

#include <json.hpp>
#include <string>
#include <vector>

#include "hmdist/cyclotomic.hpp"
#include "hmdist/multipoly.hpp"
#include "hmdist/rational.hpp"

namespace hmdist::cli {

using Json = nlohmann::ordered_json;

enum class Status { Ok, Mismatch, Error };

std::string status_name(Status s);
int exit_code(Status s);

/// Structured result of one subcommand. Rows are JSON objects keyed by the
/// column names; summary holds scalar results and metadata.
struct Report {
    std::string command;
    Status status = Status::Ok;
    std::vector<std::string> provenance;
    std::vector<std::string> columns;
    std::vector<Json> rows;
    Json summary = Json::object();
    std::vector<std::string> messages;

    void add_row(Json row) { rows.push_back(std::move(row)); }
    /// Downgrades status: Ok < Mismatch < Error.
    void worsen(Status s);
};

/// Exact values: rationals and big integers as {"num","den"} strings,
/// cyclotomics as four such objects.
Json rational_json(const Rational& r);
Json integer_json(const Integer& z);
Json cyclo_json(const Cyclo5& c);
Rational rational_from_json(const Json& j);

/// Polynomial as {"text": str, "terms": [{"exponent": [...], "coeff": {...}}]}.
Json poly_json(const QPoly& p, const std::vector<std::string>& names);

std::string cell_text(const Json& j);

std::string render_table(const Report& r);
std::string render_json(const Report& r);
std::string render_csv(const Report& r);

}  // namespace hmdist::cli
