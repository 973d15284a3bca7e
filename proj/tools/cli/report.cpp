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

#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace hmdist::cli {

std::string status_name(Status s) {
    switch (s) {
        case Status::Ok: return "ok";
        case Status::Mismatch: return "mismatch";
        case Status::Error: return "error";
    }
    return "?";
}

int exit_code(Status s) {
    switch (s) {
        case Status::Ok: return 0;
        case Status::Mismatch: return 1;
        case Status::Error: return 2;
    }
    return 2;
}

void Report::worsen(Status s) {
    if (static_cast<int>(s) > static_cast<int>(status)) status = s;
}

Json rational_json(const Rational& r) { return Json{{"num", r.num().get_str()}, {"den", r.den().get_str()}}; }

Json integer_json(const Integer& z) { return Json{{"num", z.get_str()}, {"den", "1"}}; }

Json cyclo_json(const Cyclo5& c) {
    Json a = Json::array();
    for (int i = 0; i < 4; ++i) a.push_back(rational_json(c[i]));
    return a;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("expected {\"num\", \"den\"}: " + j.dump());
    return Rational(Integer(j.at("num").get<std::string>(), 10), Integer(j.at("den").get<std::string>(), 10));
}

Json poly_json(const QPoly& p, const std::vector<std::string>& names) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exponent", e}, {"coeff", rational_json(c)}});
    return Json{{"text", p.str(names)}, {"terms", terms}};
}

std::string cell_text(const Json& j) {
    if (j.is_null()) return "-";
    if (j.is_string()) return j.get<std::string>();
    if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
    if (j.is_number()) return j.dump();
    if (j.is_object()) {
        if (j.contains("num") && j.contains("den")) {
            std::string d = j.at("den").get<std::string>();
            return j.at("num").get<std::string>() + (d == "1" ? "" : "/" + d);
        }
        if (j.contains("text")) return j.at("text").get<std::string>();
        return j.dump();
    }
    std::string out;
    for (const auto& x : j) {
        if (!out.empty()) out += j.size() == 4 && x.is_object() ? "," : " ";
        out += cell_text(x);
    }
    return j.size() == 4 && !j.empty() && j[0].is_object() ? "[" + out + "]" : out;
}

std::string render_table(const Report& r) {
    std::ostringstream os;
    if (!r.columns.empty()) {
        std::vector<std::size_t> width(r.columns.size());
        std::vector<std::vector<std::string>> cells;
        for (std::size_t c = 0; c < r.columns.size(); ++c) width[c] = r.columns[c].size();
        for (const auto& row : r.rows) {
            std::vector<std::string> line;
            for (std::size_t c = 0; c < r.columns.size(); ++c) {
                std::string t = row.contains(r.columns[c]) ? cell_text(row.at(r.columns[c])) : "";
                width[c] = std::max(width[c], t.size());
                line.push_back(std::move(t));
            }
            cells.push_back(std::move(line));
        }
        auto emit = [&](const std::vector<std::string>& line) {
            std::string s;
            for (std::size_t c = 0; c < line.size(); ++c) {
                if (c) s += "  ";
                s += line[c] + std::string(width[c] - line[c].size(), ' ');
            }
            while (!s.empty() && s.back() == ' ') s.pop_back();
            os << s << "\n";
        };
        emit(r.columns);
        std::vector<std::string> rule;
        for (auto w : width) rule.push_back(std::string(w, '-'));
        emit(rule);
        for (const auto& line : cells) emit(line);
    }
    for (const auto& [k, v] : r.summary.items()) os << k << ": " << cell_text(v) << "\n";
    for (const auto& m : r.messages) os << m << "\n";
    os << "status: " << status_name(r.status) << "\n";
    return os.str();
}

std::string render_json(const Report& r) {
    Json j;
    j["command"] = r.command;
    j["status"] = status_name(r.status);
    j["provenance"] = r.provenance;
    j["columns"] = r.columns;
    j["rows"] = r.rows;
    j["summary"] = r.summary;
    j["messages"] = r.messages;
    return j.dump(2) + "\n";
}

namespace {
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}
}  // namespace

std::string render_csv(const Report& r) {
    std::ostringstream os;
    for (std::size_t c = 0; c < r.columns.size(); ++c) os << (c ? "," : "") << csv_field(r.columns[c]);
    os << "\n";
    for (const auto& row : r.rows) {
        for (std::size_t c = 0; c < r.columns.size(); ++c)
            os << (c ? "," : "") << csv_field(row.contains(r.columns[c]) ? cell_text(row.at(r.columns[c])) : "");
        os << "\n";
    }
    return os.str();
}

}  // namespace hmdist::cli
