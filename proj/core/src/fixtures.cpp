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

#include "hmdist/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hmdist/poly_parse.hpp"

namespace hmdist {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(std::string_view s) {
    std::istringstream is{std::string(s)};
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

std::vector<std::string> split_char(const std::string& s, char c) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == c) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

long parse_long(const std::string& s, std::size_t line) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw FixtureError("expected an integer, got '" + s + "'", line);
    }
}

std::vector<int> tuple_of(IndexMask m) { return mask_indices(m); }

bool term_less(const FixtureTerm& a, const FixtureTerm& b) {
    auto ta = tuple_of(a.mask), tb = tuple_of(b.mask);
    if (ta != tb) return ta < tb;
    return a.exponent < b.exponent;
}

IndexMask parse_indices(const std::string& s, int coords, std::size_t line) {
    if (s == "-") return 0;
    IndexMask m = 0;
    int prev = -1;
    for (const auto& part : split_char(s, ',')) {
        long i = parse_long(part, line);
        if (i < 0 || i >= coords) throw FixtureError("index out of range: " + part, line);
        if (i <= prev) throw FixtureError("index tuple must be strictly increasing: " + s, line);
        prev = static_cast<int>(i);
        m |= 1u << i;
    }
    return m;
}

std::string format_indices(IndexMask m) {
    if (m == 0) return "-";
    std::string out;
    for (int i : mask_indices(m)) {
        if (!out.empty()) out += ",";
        out += std::to_string(i);
    }
    return out;
}

Rational to_rational(const Cyclo5& c) {
    if (!c.is_rational()) throw FixtureKindError("coefficient is not rational: " + c.str());
    return c[0];
}

template <class S>
S convert(const Cyclo5& c) {
    if constexpr (std::same_as<S, Rational>)
        return to_rational(c);
    else
        return c;
}

template <class S, class Tag>
Alternating<S, Tag> build(const FixtureObject& o, FixtureKind want) {
    if (o.kind != want) throw FixtureKindError(o.name + " is a " + fixture_kind_name(o.kind));
    Alternating<S, Tag> out(o.coords, o.degree);
    for (const auto& t : o.terms) out.add(t.mask, MultiPoly<S>::monomial(t.exponent, convert<S>(t.coeff)));
    return out;
}

template <class S>
MultiPoly<S> build_poly(const FixtureObject& o) {
    if (o.kind != FixtureKind::Poly) throw FixtureKindError(o.name + " is a " + fixture_kind_name(o.kind));
    MultiPoly<S> out(o.vars.size());
    for (const auto& t : o.terms) out.add_term(t.exponent, convert<S>(t.coeff));
    return out;
}

Exponent fit_exponent(Exponent e, std::size_t n) {
    for (std::size_t i = n; i < e.size(); ++i)
        if (e[i] != 0) throw std::invalid_argument("fixture_from: polynomial uses more variables than named");
    e.resize(n, 0);
    return e;
}

template <class Tag>
FixtureObject from_alternating(const std::string& name, const Alternating<Rational, Tag>& a,
                               const std::vector<std::string>& vars, FixtureKind kind) {
    FixtureObject o;
    o.name = name;
    o.kind = kind;
    o.degree = a.degree();
    o.coords = a.coords();
    o.vars = vars;
    for (const auto& [m, p] : a.coeffs())
        for (const auto& [e, c] : p.terms()) o.terms.push_back({m, fit_exponent(e, vars.size()), Cyclo5(c)});
    o.canonicalize();
    return o;
}

FixtureKind parse_kind(const std::string& s, std::size_t line) {
    if (s == "form") return FixtureKind::Form;
    if (s == "multivector") return FixtureKind::MultiVector;
    if (s == "poly") return FixtureKind::Poly;
    if (s == "point") return FixtureKind::Point;
    throw FixtureError("unknown kind '" + s + "'", line);
}

FixtureField parse_field(const std::string& s, std::size_t line) {
    if (s == "Q") return FixtureField::Q;
    if (s == "Q(zeta5)") return FixtureField::QZeta5;
    throw FixtureError("unknown field '" + s + "'", line);
}

void check_object(const FixtureObject& o, std::size_t line) {
    if (o.name.empty()) throw FixtureError("object without a name", line);
    if (o.vars.empty() && o.kind != FixtureKind::Point) throw FixtureError(o.name + ": missing vars", line);
    if (o.coords < 1 || o.coords > 16) throw FixtureError(o.name + ": coords out of range", line);
    if (o.kind != FixtureKind::Point && static_cast<int>(o.vars.size()) < o.coords)
        throw FixtureError(o.name + ": fewer vars than coords", line);
    if ((o.kind == FixtureKind::Form || o.kind == FixtureKind::MultiVector) && (o.degree < 0 || o.degree > o.coords))
        throw FixtureError(o.name + ": degree out of range", line);
    if (o.kind == FixtureKind::Point && !o.terms.empty()) throw FixtureError(o.name + ": point with terms", line);
    if (o.kind != FixtureKind::Point && !o.values.empty()) throw FixtureError(o.name + ": values outside a point", line);
    for (const auto& v : o.values)
        if (o.field == FixtureField::Q && !v.is_rational()) throw FixtureError(o.name + ": irrational value", line);
}

// Shared block parser; term lines are handed to the callback.
template <class TermFn>
FixtureSet parse_blocks(std::string_view text, const std::string& header, TermFn on_term) {
    FixtureSet set;
    std::istringstream is{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    bool seen_header = false;
    bool in_object = false;
    FixtureObject cur;
    std::size_t start = 0;
    while (std::getline(is, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        if (!seen_header) {
            if (s != header) throw FixtureError("expected header '" + header + "'", line);
            seen_header = true;
            continue;
        }
        auto words = split_ws(s);
        const std::string& key = words[0];
        std::string rest = trim(std::string_view(s).substr(key.size()));
        if (!in_object) {
            if (key != "object" || words.size() != 2) throw FixtureError("expected 'object NAME'", line);
            cur = FixtureObject{};
            cur.name = words[1];
            in_object = true;
            start = line;
            continue;
        }
        if (key == "end") {
            check_object(cur, start);
            if (cur.kind == FixtureKind::Poly) cur.degree = 0;
            if (set.contains(cur.name)) throw FixtureError("duplicate object " + cur.name, start);
            set.add(cur);
            in_object = false;
        } else if (key == "kind") {
            cur.kind = parse_kind(rest, line);
        } else if (key == "degree") {
            cur.degree = static_cast<int>(parse_long(rest, line));
        } else if (key == "field") {
            cur.field = parse_field(rest, line);
        } else if (key == "vars") {
            cur.vars.assign(words.begin() + 1, words.end());
        } else if (key == "coords") {
            cur.coords = static_cast<int>(parse_long(rest, line));
        } else if (key == "note") {
            cur.notes.push_back(rest);
        } else {
            on_term(cur, key, rest, line);
        }
    }
    if (!seen_header) throw FixtureError("empty fixture text", line);
    if (in_object) throw FixtureError("unterminated object " + cur.name, start);
    return set;
}

}  // namespace

std::string fixture_kind_name(FixtureKind k) {
    switch (k) {
        case FixtureKind::Form: return "form";
        case FixtureKind::MultiVector: return "multivector";
        case FixtureKind::Poly: return "poly";
        case FixtureKind::Point: return "point";
    }
    return "?";
}

std::string fixture_field_name(FixtureField f) { return f == FixtureField::Q ? "Q" : "Q(zeta5)"; }

std::string format_coeff(const Cyclo5& c, FixtureField f) {
    if (f == FixtureField::Q) return to_rational(c).str();
    return c.str();
}

Cyclo5 parse_coeff(std::string_view text, FixtureField f) {
    std::string s = trim(text);
    if (f == FixtureField::Q) return Cyclo5(Rational::parse(s));
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("expected [a,b,c,d]: " + s);
    auto parts = split_char(s.substr(1, s.size() - 2), ',');
    if (parts.size() != 4) throw std::invalid_argument("expected four rationals: " + s);
    Cyclo5::Coeffs c;
    for (int i = 0; i < 4; ++i) c[i] = Rational::parse(trim(parts[i]));
    return Cyclo5(c);
}

PForm<Rational> FixtureObject::form() const { return build<Rational, FormTag>(*this, FixtureKind::Form); }
PForm<Cyclo5> FixtureObject::form_c() const { return build<Cyclo5, FormTag>(*this, FixtureKind::Form); }
PolyMultiVector<Rational> FixtureObject::multivector() const {
    return build<Rational, VectorTag>(*this, FixtureKind::MultiVector);
}
PolyMultiVector<Cyclo5> FixtureObject::multivector_c() const {
    return build<Cyclo5, VectorTag>(*this, FixtureKind::MultiVector);
}
QPoly FixtureObject::poly() const { return build_poly<Rational>(*this); }
CPoly FixtureObject::poly_c() const { return build_poly<Cyclo5>(*this); }

std::vector<Rational> FixtureObject::point() const {
    if (kind != FixtureKind::Point) throw FixtureKindError(name + " is a " + fixture_kind_name(kind));
    std::vector<Rational> out;
    for (const auto& v : values) out.push_back(to_rational(v));
    return out;
}

std::vector<Cyclo5> FixtureObject::point_c() const {
    if (kind != FixtureKind::Point) throw FixtureKindError(name + " is a " + fixture_kind_name(kind));
    return values;
}

void FixtureObject::canonicalize() {
    std::sort(terms.begin(), terms.end(), term_less);
    std::vector<FixtureTerm> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().mask == t.mask && merged.back().exponent == t.exponent)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(t);
    }
    terms.clear();
    for (auto& t : merged)
        if (!t.coeff.is_zero()) terms.push_back(std::move(t));
}

FixtureObject fixture_from(const std::string& name, const PForm<Rational>& a, const std::vector<std::string>& vars) {
    return from_alternating(name, a, vars, FixtureKind::Form);
}

FixtureObject fixture_from(const std::string& name, const PolyMultiVector<Rational>& a,
                           const std::vector<std::string>& vars) {
    return from_alternating(name, a, vars, FixtureKind::MultiVector);
}

FixtureObject fixture_from(const std::string& name, const QPoly& p, const std::vector<std::string>& vars) {
    FixtureObject o;
    o.name = name;
    o.kind = FixtureKind::Poly;
    o.vars = vars;
    o.coords = std::min<int>(5, static_cast<int>(vars.size()));
    for (const auto& [e, c] : p.terms()) o.terms.push_back({0, fit_exponent(e, vars.size()), Cyclo5(c)});
    o.canonicalize();
    return o;
}

FixtureSet FixtureSet::parse(std::string_view text) {
    return parse_blocks(text, "hmdist-fixture 1",
                        [](FixtureObject& o, const std::string& key, const std::string& rest, std::size_t line) {
                            auto w = split_ws(rest);
                            if (key == "value") {
                                if (w.size() != 1) throw FixtureError("expected 'value COEF'", line);
                                try {
                                    o.values.push_back(parse_coeff(w[0], o.field));
                                } catch (const std::exception& e) {
                                    throw FixtureError(e.what(), line);
                                }
                                return;
                            }
                            if (key != "term") throw FixtureError("unknown key '" + key + "'", line);
                            if (w.size() != 3) throw FixtureError("expected 'term INDICES EXPONENTS COEF'", line);
                            FixtureTerm t;
                            t.mask = parse_indices(w[0], o.coords, line);
                            int want = o.kind == FixtureKind::Poly ? 0 : o.degree;
                            if (std::popcount(t.mask) != want) throw FixtureError("index tuple of the wrong length", line);
                            for (const auto& e : split_char(w[1], ',')) {
                                long v = parse_long(e, line);
                                if (v < 0) throw FixtureError("negative exponent", line);
                                t.exponent.push_back(static_cast<unsigned>(v));
                            }
                            if (t.exponent.size() != o.vars.size())
                                throw FixtureError("exponent vector length differs from vars", line);
                            try {
                                t.coeff = parse_coeff(w[2], o.field);
                            } catch (const std::exception& e) {
                                throw FixtureError(e.what(), line);
                            }
                            if (t.coeff.is_zero()) throw FixtureError("zero coefficient", line);
                            if (!o.terms.empty() && !term_less(o.terms.back(), t))
                                throw FixtureError("terms out of canonical order", line);
                            o.terms.push_back(t);
                        });
}

FixtureSet FixtureSet::parse_source(std::string_view text) {
    return parse_blocks(
        text, "hmdist-source 1", [](FixtureObject& o, const std::string& key, const std::string& rest, std::size_t line) {
            try {
                if (key == "value") {
                    std::string v = trim(rest);
                    if (!v.empty() && v[0] == '[') {
                        o.values.push_back(parse_coeff(v, FixtureField::QZeta5));
                    } else {
                        QPoly c = parse_poly(v, std::vector<std::string>{});
                        o.values.push_back(Cyclo5(c.constant_term()));
                    }
                    return;
                }
                if (key != "comp") throw FixtureError("unknown key '" + key + "'", line);
                auto colon = rest.find(':');
                if (colon == std::string::npos) throw FixtureError("expected 'comp INDICES: EXPR'", line);
                std::string idx = trim(std::string_view(rest).substr(0, colon));
                // index tuples in sources may be unordered; the sign is applied here
                std::vector<int> tuple;
                if (idx != "-")
                    for (const auto& p : split_char(idx, ',')) tuple.push_back(static_cast<int>(parse_long(trim(p), line)));
                for (int i : tuple)
                    if (i < 0 || i >= o.coords) throw FixtureError("index out of range", line);
                int want = o.kind == FixtureKind::Poly ? 0 : o.degree;
                if (static_cast<int>(tuple.size()) != want) throw FixtureError("index tuple of the wrong length", line);
                int sign = permutation_sign(tuple);
                if (sign == 0) throw FixtureError("repeated index", line);
                QPoly p = parse_poly(rest.substr(colon + 1), o.vars).widened(o.vars.size());
                for (const auto& [e, c] : p.terms())
                    o.terms.push_back({indices_mask(tuple), e, Cyclo5(sign > 0 ? c : -c)});
                o.canonicalize();
            } catch (const FixtureError&) {
                throw;
            } catch (const std::exception& e) {
                throw FixtureError(e.what(), line);
            }
        });
}

FixtureSet FixtureSet::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse(ss.str());
    } catch (const FixtureError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

FixtureSet FixtureSet::load_directory(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw std::runtime_error("fixture directory not found: " + dir);
    std::vector<fs::path> files;
    for (const auto& ent : fs::directory_iterator(dir))
        if (ent.is_regular_file() && ent.path().extension() == ".fix") files.push_back(ent.path());
    std::sort(files.begin(), files.end());
    FixtureSet all;
    for (const auto& f : files) {
        FixtureSet s = load(f.string());
        for (const auto& n : s.names()) {
            if (all.contains(n)) throw std::runtime_error(f.string() + ": duplicate object " + n);
            all.add(s.get(n));
        }
    }
    return all;
}

void FixtureSet::add(FixtureObject obj) {
    if (!objects_.count(obj.name)) order_.push_back(obj.name);
    std::string n = obj.name;
    objects_[n] = std::move(obj);
}

const FixtureObject& FixtureSet::get(const std::string& name) const {
    auto it = objects_.find(name);
    if (it == objects_.end()) throw std::out_of_range("no fixture object named " + name);
    return it->second;
}

std::vector<std::string> FixtureSet::names() const { return order_; }

std::string FixtureSet::serialize() const {
    std::ostringstream os;
    os << "hmdist-fixture 1\n";
    for (const auto& n : order_) {
        const auto& o = objects_.at(n);
        os << "\nobject " << o.name << "\n";
        os << "kind " << fixture_kind_name(o.kind) << "\n";
        if (o.kind == FixtureKind::Form || o.kind == FixtureKind::MultiVector) os << "degree " << o.degree << "\n";
        os << "field " << fixture_field_name(o.field) << "\n";
        if (!o.vars.empty()) {
            os << "vars";
            for (const auto& v : o.vars) os << " " << v;
            os << "\n";
        }
        os << "coords " << o.coords << "\n";
        for (const auto& note : o.notes) os << "note " << note << "\n";
        for (const auto& t : o.terms) {
            os << "term " << format_indices(t.mask) << " ";
            for (std::size_t i = 0; i < t.exponent.size(); ++i) os << (i ? "," : "") << t.exponent[i];
            os << " " << format_coeff(t.coeff, o.field) << "\n";
        }
        for (const auto& v : o.values) os << "value " << format_coeff(v, o.field) << "\n";
        os << "end\n";
    }
    return os.str();
}

}  // namespace hmdist
