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

#include "chern_dsl.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "hmdist/poly_parse.hpp"

namespace hmdist::cli {

namespace {

using Sheaf = SheafClass<QPoly>;

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool is_ident(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

/// Splits at depth-0 occurrences of sep.
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) throw std::invalid_argument("unbalanced ')'");
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw std::invalid_argument("unbalanced '('");
    out.push_back(trim(cur));
    return out;
}

class Evaluator {
   public:
    Evaluator() { vars_.allow_new = true; }

    Sheaf sheaf(const std::string& text) {
        auto parts = split_top(text, '+');
        Sheaf acc = term(parts.at(0));
        for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, term(parts[i]));
        return acc;
    }

    void bind(const std::string& name, Sheaf s) {
        if (!is_ident(name)) throw std::invalid_argument("bad name '" + name + "'");
        if (builtin(name)) throw std::invalid_argument("'" + name + "' is a builtin");
        env_[name] = std::move(s);
    }

    const std::vector<std::string>& var_names() const { return vars_.names; }

   private:
    static bool builtin(const std::string& n) {
        static const char* names[] = {"O",      "T",      "Omega",  "E",     "ideal", "bundle",   "twist",
                                      "dual",   "sum",    "tensor", "wedge2", "wedge3", "sym2",  "tensor42",
                                      "quotient", "kernel", "en"};
        for (const char* b : names)
            if (n == b) return true;
        return false;
    }

    QPoly number(const std::string& text) { return parse_poly(text, vars_); }

    long constant(const std::string& text) {
        QPoly p = number(text);
        if (!p.is_constant()) throw std::invalid_argument("expected a constant, got '" + text + "'");
        return p.constant_term().to_long();
    }

    Sheaf term(const std::string& t) {
        if (t.empty()) throw std::invalid_argument("empty sheaf expression");
        auto open = t.find('(');
        std::string name = trim(t.substr(0, open));
        std::vector<std::string> args;
        if (open != std::string::npos) {
            if (t.back() != ')') throw std::invalid_argument("expected ')' at end of '" + t + "'");
            std::string inner = t.substr(open + 1, t.size() - open - 2);
            args = split_top(inner, ',');
            if (args.size() == 1 && args[0].empty()) args.clear();
        } else if (!is_ident(name)) {
            if (!t.empty() && t.front() == '(' ) return sheaf(t.substr(1, t.size() - 2));
            throw std::invalid_argument("not a sheaf expression: '" + t + "'");
        }
        if (name.empty()) {
            if (args.size() != 1) throw std::invalid_argument("bad parenthesized expression");
            return sheaf(args[0]);
        }
        auto want = [&](std::size_t n) {
            if (args.size() != n)
                throw std::invalid_argument(name + " takes " + std::to_string(n) + " argument(s), got " +
                                            std::to_string(args.size()));
        };
        if (name == "O") {
            want(1);
            return line_bundle<QPoly>(4, number(args[0]));
        }
        if (name == "T") {
            want(0);
            return tangent_bundle<QPoly>(4);
        }
        if (name == "Omega") {
            want(1);
            return omega_p4<QPoly>(static_cast<int>(constant(args[0])));
        }
        if (name == "E") {
            want(0);
            return hm_bundle<QPoly>();
        }
        if (name == "ideal") {
            want(2);
            QPoly deg = number(args[0]), pa = number(args[1]);
            IntersectionClass<QPoly> c(4, {QPoly(1), QPoly(0), QPoly(0), deg.scaled(Rational(-2)),
                                          QPoly(6) - deg.scaled(Rational(15)) - pa.scaled(Rational(6))});
            return make_sheaf(1, c, "I_Y");
        }
        if (name == "bundle") {
            if (args.empty() || args.size() > 5) throw std::invalid_argument("bundle takes rank and up to four classes");
            std::vector<QPoly> c{QPoly(1)};
            for (std::size_t i = 1; i < args.size(); ++i) c.push_back(number(args[i]));
            return make_sheaf(static_cast<int>(constant(args[0])), IntersectionClass<QPoly>(4, c), "F");
        }
        if (name == "twist") {
            want(2);
            return twist(sheaf(args[0]), number(args[1]));
        }
        if (name == "dual") {
            want(1);
            return dual(sheaf(args[0]));
        }
        if (name == "sum") {
            if (args.empty()) throw std::invalid_argument("sum needs at least one argument");
            Sheaf acc = sheaf(args[0]);
            for (std::size_t i = 1; i < args.size(); ++i) acc = direct_sum(acc, sheaf(args[i]));
            return acc;
        }
        if (name == "tensor") {
            want(2);
            return tensor(sheaf(args[0]), sheaf(args[1]));
        }
        if (name == "wedge2") {
            want(1);
            return wedge2_rank4(sheaf(args[0]));
        }
        if (name == "wedge3") {
            want(1);
            return wedge3_rank4(sheaf(args[0]));
        }
        if (name == "sym2") {
            want(1);
            return sym2_rank2(sheaf(args[0]));
        }
        if (name == "tensor42") {
            want(2);
            return tensor_rank4_rank2(sheaf(args[0]), sheaf(args[1]));
        }
        if (name == "quotient") {
            want(2);
            return ses_third<QPoly>(sheaf(args[0]), sheaf(args[1]), std::nullopt, "Q");
        }
        if (name == "kernel") {
            want(2);
            return ses_third<QPoly>(std::nullopt, sheaf(args[0]), sheaf(args[1]), "K");
        }
        if (name == "en") {
            want(2);
            Side side;
            if (args[1] == "tangent")
                side = Side::Tangent;
            else if (args[1] == "conormal")
                side = Side::Conormal;
            else
                throw std::invalid_argument("en: side must be tangent or conormal");
            return make_sheaf(1, eagon_northcott_ideal_class(sheaf(args[0]), side), "I_Z");
        }
        if (!args.empty()) throw std::invalid_argument("unknown function '" + name + "'");
        auto it = env_.find(name);
        if (it == env_.end()) throw std::invalid_argument("unknown sheaf '" + name + "'");
        return it->second;
    }

    VarTable vars_;
    std::map<std::string, Sheaf> env_;
};

}  // namespace

ChernScript run_chern_script(std::string_view text) {
    Evaluator ev;
    ChernScript out;
    std::istringstream is{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(is, raw)) {
        ++line;
        auto hash = raw.find('#');
        std::string s = trim(raw.substr(0, hash));
        if (s.empty()) continue;
        try {
            if (s.rfind("let ", 0) == 0) {
                auto eq = s.find('=');
                if (eq == std::string::npos) throw std::invalid_argument("expected 'let NAME = SHEAF'");
                ev.bind(trim(s.substr(4, eq - 4)), ev.sheaf(trim(s.substr(eq + 1))));
            } else {
                Sheaf sh = ev.sheaf(s);
                out.outputs.push_back({s, sh, hrr(sh)});
            }
        } catch (const ScriptError&) {
            throw;
        } catch (const std::exception& e) {
            throw ScriptError(e.what(), line);
        }
    }
    out.vars = ev.var_names();
    return out;
}

}  // namespace hmdist::cli
