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

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hmdist/cyclotomic.hpp"
#include "hmdist/form_algebra.hpp"
#include "hmdist/multipoly.hpp"

namespace hmdist {

/// Canonical fixture format, one object per block:
///
///   hmdist-fixture 1
///   object NAME
///   kind form|multivector|poly|point
///   degree P                      (form and multivector only)
///   field Q|Q(zeta5)
///   vars z0 z1 ...
///   coords N
///   note free text               (any number)
///   term I,J|- E0,E1,... COEF     (form, multivector, poly)
///   value COEF                    (point)
///   end
///
/// COEF is n or n/d over Q and [a,b,c,d] over Q(zeta5). Terms are sorted by
/// index tuple, then exponent vector; zero terms are not allowed. Blank lines
/// and lines starting with '#' are ignored between objects.
///
/// Source format "hmdist-source 1" has the same header lines, but terms are
/// written as expressions, "comp I,J: <poly>" (or "comp -: <poly>"), and
/// points as "value <poly-constant or [a,b,c,d]>".

enum class FixtureKind { Form, MultiVector, Poly, Point };
enum class FixtureField { Q, QZeta5 };

std::string fixture_kind_name(FixtureKind k);
std::string fixture_field_name(FixtureField f);

class FixtureError : public std::runtime_error {
   public:
    FixtureError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

class FixtureKindError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct FixtureTerm {
    IndexMask mask = 0;
    Exponent exponent;
    Cyclo5 coeff;
};

struct FixtureObject {
    std::string name;
    FixtureKind kind = FixtureKind::Form;
    FixtureField field = FixtureField::Q;
    int degree = 0;
    int coords = 5;
    std::vector<std::string> vars;
    std::vector<std::string> notes;
    std::vector<FixtureTerm> terms;  // canonical order
    std::vector<Cyclo5> values;      // points

    PForm<Rational> form() const;
    PForm<Cyclo5> form_c() const;
    PolyMultiVector<Rational> multivector() const;
    PolyMultiVector<Cyclo5> multivector_c() const;
    QPoly poly() const;
    CPoly poly_c() const;
    std::vector<Rational> point() const;
    std::vector<Cyclo5> point_c() const;

    /// Sorts terms, merges repeats and drops zeros.
    void canonicalize();
};

FixtureObject fixture_from(const std::string& name, const PForm<Rational>& a, const std::vector<std::string>& vars);
FixtureObject fixture_from(const std::string& name, const PolyMultiVector<Rational>& a,
                           const std::vector<std::string>& vars);
FixtureObject fixture_from(const std::string& name, const QPoly& p, const std::vector<std::string>& vars);

class FixtureSet {
   public:
    static FixtureSet parse(std::string_view text);
    static FixtureSet parse_source(std::string_view text);
    static FixtureSet load(const std::string& path);
    /// Loads every *.fix file in the directory, in file-name order.
    static FixtureSet load_directory(const std::string& dir);

    void add(FixtureObject obj);
    bool contains(const std::string& name) const { return objects_.count(name) != 0; }
    const FixtureObject& get(const std::string& name) const;
    const std::map<std::string, FixtureObject>& objects() const { return objects_; }
    std::vector<std::string> names() const;

    /// Canonical text, objects in insertion order.
    std::string serialize() const;

   private:
    std::map<std::string, FixtureObject> objects_;
    std::vector<std::string> order_;
};

std::string format_coeff(const Cyclo5& c, FixtureField f);
Cyclo5 parse_coeff(std::string_view text, FixtureField f);

}  // namespace hmdist
