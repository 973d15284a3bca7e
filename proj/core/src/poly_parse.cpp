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

#include "hmdist/poly_parse.hpp"

#include <cctype>

namespace hmdist {

std::optional<std::size_t> VarTable::find(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    return std::nullopt;
}

std::size_t VarTable::intern(std::string_view name) {
    if (auto i = find(name)) return *i;
    names.emplace_back(name);
    return names.size() - 1;
}

namespace {

class Parser {
   public:
    Parser(std::string_view s, VarTable& vars) : s_(s), vars_(vars) {}

    QPoly run() {
        QPoly p = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return p;
    }

   private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    QPoly expr() {
        QPoly acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    QPoly term() {
        QPoly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                QPoly d = unary();
                if (!d.is_constant() || d.is_zero()) throw ParseError("division by a non-constant or zero", at);
                acc = acc.scaled(Rational(1) / d.constant_term());
            } else {
                return acc;
            }
        }
    }

    QPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    QPoly power() {
        QPoly base = atom();
        if (accept('^')) {
            skip();
            std::size_t at = pos_;
            std::string digits = read_digits();
            if (digits.empty()) throw ParseError("expected a non-negative integer exponent", at);
            if (digits.size() > 6) throw ParseError("exponent too large", at);
            return base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    std::string read_digits() {
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(b, pos_ - b));
    }

    QPoly atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            QPoly p = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return QPoly(Rational(Integer(read_digits(), 10)));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t b = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string_view name = s_.substr(b, pos_ - b);
            std::optional<std::size_t> i = vars_.find(name);
            if (!i) {
                if (!vars_.allow_new) throw ParseError("unknown variable '" + std::string(name) + "'", b);
                i = vars_.intern(name);
            }
            return QPoly::variable(vars_.names.size(), *i);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view s_;
    VarTable& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

QPoly parse_poly(std::string_view text, VarTable& vars) {
    QPoly p = Parser(text, vars).run();
    return p.widened(vars.names.size());
}

QPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
    VarTable t{vars, false};
    return parse_poly(text, t);
}

const std::vector<std::string>& projective_vars() {
    static const std::vector<std::string> v{"z0", "z1", "z2", "z3", "z4"};
    return v;
}

}  // namespace hmdist
