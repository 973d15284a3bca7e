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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hmdist/rational.hpp"

namespace hmdist {

using Dim = std::int64_t;

/// Cohomology dimensions h^0..h^n, each known or unknown.
class CohVector {
   public:
    CohVector() = default;
    explicit CohVector(std::size_t len) : e_(len) {}
    CohVector(std::initializer_list<Dim> known);
    static CohVector known(const std::vector<Dim>& v);
    static CohVector unknown(std::size_t len) { return CohVector(len); }

    std::size_t size() const { return e_.size(); }
    const std::optional<Dim>& operator[](std::size_t i) const { return e_.at(i); }
    void set(std::size_t i, Dim v);
    void clear(std::size_t i) { e_.at(i).reset(); }
    bool all_known() const;
    /// sum (-1)^i h^i; requires all_known().
    Dim euler() const;
    std::string str() const;

    friend bool operator==(const CohVector&, const CohVector&) = default;

   private:
    std::vector<std::optional<Dim>> e_;
};

/// h^q(P^n, Omega^p(k)).
CohVector bott(int n, int p, long k);

class TableFormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Cohomology table with explicit rows and closed-form tails; everything
/// outside rows and tails is zero. The tails put chi(k) (resp. (-1)^n chi(k))
/// in h^0 for k >= high_start and in h^n for k <= low_end.
class CohomologyTable {
   public:
    static CohomologyTable parse(std::string_view text, const std::string& source = "<string>");
    static CohomologyTable load(const std::filesystem::path& path);

    const std::string& name() const { return name_; }
    int dimension() const { return n_; }
    long dual_twist() const { return dual_twist_; }
    long high_start() const { return high_start_; }
    long low_end() const { return low_end_; }
    const std::vector<Rational>& chi_coefficients() const { return chi_; }
    const std::map<long, std::vector<Dim>>& rows() const { return rows_; }

    Rational chi(long k) const;
    CohVector at(long k) const;
    Dim h(int i, long k) const;

    /// Empty iff chi and Serre checks pass on rows and tails.
    std::vector<std::string> validation_errors() const;
    std::string serialize() const;

   private:
    std::string name_;
    int n_ = 4;
    long dual_twist_ = 0;
    std::vector<Rational> chi_;
    long high_start_ = 1;
    long low_end_ = -1;
    std::map<long, std::vector<Dim>> rows_;
};

/// Shipped tables, loaded and validated once.
const CohomologyTable& hm_table();
const CohomologyTable& hm_tensor_table();

CohVector hm_cohomology(long k);
CohVector hm_tensor_cohomology(long k);

/// One bound of a vanishing interval: j_coeff * j + offset.
struct VanishingBound {
    long j_coeff = 0;
    long offset = 0;
    long eval(long j) const { return j_coeff * j + offset; }
};

struct VanishingInterval {
    std::optional<VanishingBound> lo;
    std::optional<VanishingBound> hi;
    bool contains(long j, long k) const;
};

struct VanishingRange {
    std::string family;
    int index;
    std::vector<VanishingInterval> intervals;
    std::string note;
    bool contains(long j, long k) const;
};

/// Registered families: "omega-E" (params j in {1,2,3}, k) for Omega^j (x) E(k)
/// and "E-E" (param k) for E (x) E(k).
const std::vector<VanishingRange>& vanishing_registry();
std::vector<std::string> vanishing_families();

class UnknownFamily : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// true if a registered lemma certifies h^i = 0; nullopt otherwise.
std::optional<bool> vanishing(std::string_view family, int i, const std::vector<long>& params);

class ChaseContradiction : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

struct ChaseResult {
    CohVector a, b, c;
};

/// Refines unknown entries of a short exact sequence 0 -> A -> B -> C -> 0
/// from its long exact cohomology sequence.
ChaseResult les_chase(const CohVector& a, const CohVector& b, const CohVector& c);

}  // namespace hmdist
