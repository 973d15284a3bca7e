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

#include "hmdist/cohomology.hpp"

#include <fstream>
#include <sstream>

#include "hmdist/paths.hpp"

namespace hmdist {

CohVector::CohVector(std::initializer_list<Dim> known) {
    for (Dim v : known) {
        if (v < 0) throw std::invalid_argument("negative cohomology dimension");
        e_.emplace_back(v);
    }
}

CohVector CohVector::known(const std::vector<Dim>& v) {
    CohVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.set(i, v[i]);
    return out;
}

void CohVector::set(std::size_t i, Dim v) {
    if (v < 0) throw std::invalid_argument("negative cohomology dimension");
    e_.at(i) = v;
}

bool CohVector::all_known() const {
    for (const auto& x : e_)
        if (!x) return false;
    return true;
}

Dim CohVector::euler() const {
    Dim s = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (!e_[i]) throw std::logic_error("euler of a partially unknown vector");
        s += (i % 2 == 0) ? *e_[i] : -*e_[i];
    }
    return s;
}

std::string CohVector::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i) s += ",";
        s += e_[i] ? std::to_string(*e_[i]) : "?";
    }
    return s + ")";
}

CohVector bott(int n, int p, long k) {
    if (n < 1) throw std::invalid_argument("bott: n must be positive");
    if (p < 0 || p > n) throw std::invalid_argument("bott: p must lie in [0, n]");
    std::vector<Dim> h(static_cast<std::size_t>(n) + 1, 0);
    auto as_dim = [](const Integer& z) { return static_cast<Dim>(z.get_si()); };
    if (k > p) h[0] = as_dim(binomial_int(k + n - p, k) * binomial_int(k - 1, p));
    if (k == 0) h[static_cast<std::size_t>(p)] = 1;
    if (k < p - n) h[static_cast<std::size_t>(n)] = as_dim(binomial_int(p - k, -k) * binomial_int(-k - 1, n - p));
    return CohVector::known(h);
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

long parse_long(const std::string& s, const std::string& where) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw TableFormatError(where + ": expected an integer, got '" + s + "'");
    }
}

}  // namespace

CohomologyTable CohomologyTable::parse(std::string_view text, const std::string& source) {
    CohomologyTable t;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool have_format = false, have_header = false, have_dim = false, have_chi = false, have_hi = false,
         have_lo = false, have_dual = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = source + ":" + std::to_string(lineno);
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto w = split_ws(line);
        if (w.empty()) continue;
        const std::string& key = w[0];
        if (have_header) {
            if (w.size() != static_cast<std::size_t>(t.n_) + 2)
                throw TableFormatError(where + ": row needs k and " + std::to_string(t.n_ + 1) + " entries");
            long k = parse_long(w[0], where);
            std::vector<Dim> v;
            for (std::size_t i = 1; i < w.size(); ++i) {
                long x = parse_long(w[i], where);
                if (x < 0) throw TableFormatError(where + ": negative dimension");
                v.push_back(x);
            }
            if (!t.rows_.emplace(k, std::move(v)).second)
                throw TableFormatError(where + ": duplicate row k=" + std::to_string(k));
            continue;
        }
        if (key == "format") {
            if (w.size() != 3 || w[1] != "hmdist-table" || w[2] != "1")
                throw TableFormatError(where + ": unsupported format line");
            have_format = true;
        } else if (!have_format) {
            throw TableFormatError(where + ": file must start with 'format hmdist-table 1'");
        } else if (key == "name" && w.size() == 2) {
            t.name_ = w[1];
        } else if (key == "dimension" && w.size() == 2) {
            t.n_ = static_cast<int>(parse_long(w[1], where));
            if (t.n_ < 1) throw TableFormatError(where + ": dimension must be positive");
            have_dim = true;
        } else if (key == "dual_twist" && w.size() == 2) {
            t.dual_twist_ = parse_long(w[1], where);
            have_dual = true;
        } else if (key == "chi") {
            if (!have_dim) throw TableFormatError(where + ": 'dimension' must precede 'chi'");
            if (w.size() != static_cast<std::size_t>(t.n_) + 2)
                throw TableFormatError(where + ": chi needs n+1 coefficients");
            for (std::size_t i = 1; i < w.size(); ++i) {
                try {
                    t.chi_.push_back(Rational::parse(w[i]));
                } catch (const std::exception&) {
                    throw TableFormatError(where + ": bad rational '" + w[i] + "'");
                }
            }
            have_chi = true;
        } else if (key == "high_tail" && w.size() == 3) {
            t.high_start_ = parse_long(w[1], where);
            if (parse_long(w[2], where) != 0) throw TableFormatError(where + ": high tail must sit in h^0");
            have_hi = true;
        } else if (key == "low_tail" && w.size() == 3) {
            if (!have_dim) throw TableFormatError(where + ": 'dimension' must precede 'low_tail'");
            t.low_end_ = parse_long(w[1], where);
            if (parse_long(w[2], where) != t.n_) throw TableFormatError(where + ": low tail must sit in h^n");
            have_lo = true;
        } else if (key == "row") {
            if (w.size() != static_cast<std::size_t>(t.n_) + 3 || w[1] != "k")
                throw TableFormatError(where + ": malformed row header");
            have_header = true;
        } else {
            throw TableFormatError(where + ": unrecognized line '" + key + "'");
        }
    }
    if (!(have_dim && have_chi && have_hi && have_lo && have_dual && have_header))
        throw TableFormatError(source + ": missing required header field");
    if (t.low_end_ >= t.high_start_) throw TableFormatError(source + ": tails overlap");
    for (const auto& [k, v] : t.rows_)
        if (k <= t.low_end_ || k >= t.high_start_)
            throw TableFormatError(source + ": row k=" + std::to_string(k) + " lies inside a tail");
    return t;
}

CohomologyTable CohomologyTable::load(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw TableFormatError("cannot open table file " + path.string());
    std::stringstream ss;
    ss << f.rdbuf();
    CohomologyTable t = parse(ss.str(), path.string());
    auto errs = t.validation_errors();
    if (!errs.empty()) throw TableFormatError(path.string() + ": " + errs.front());
    return t;
}

Rational CohomologyTable::chi(long k) const {
    Rational acc(0);
    for (auto it = chi_.rbegin(); it != chi_.rend(); ++it) acc = acc * Rational(k) + *it;
    return acc;
}

CohVector CohomologyTable::at(long k) const {
    std::vector<Dim> v(static_cast<std::size_t>(n_) + 1, 0);
    if (auto it = rows_.find(k); it != rows_.end()) return CohVector::known(it->second);
    if (k >= high_start_ || k <= low_end_) {
        Rational c = chi(k);
        if (k <= low_end_ && n_ % 2 == 1) c = -c;
        Dim x = static_cast<Dim>(c.to_long());
        if (x < 0) throw std::domain_error("table tail gives a negative dimension at k=" + std::to_string(k));
        v[k >= high_start_ ? 0 : static_cast<std::size_t>(n_)] = x;
    }
    return CohVector::known(v);
}

Dim CohomologyTable::h(int i, long k) const { return *at(k)[static_cast<std::size_t>(i)]; }

std::vector<std::string> CohomologyTable::validation_errors() const {
    std::vector<std::string> errs;
    if (high_start_ + low_end_ != dual_twist_)
        errs.push_back("tail bounds are not Serre-dual to each other under dual_twist");
    // chi(t - k) = (-1)^n chi(k) as polynomials: a degree-n identity, so
    // checking n+1 points suffices; the window below covers far more.
    long lo = low_end_ - 12, hi = high_start_ + 12;
    for (long k = lo; k <= hi; ++k) {
        CohVector v;
        try {
            v = at(k);
        } catch (const std::exception& e) {
            errs.push_back(e.what());
            continue;
        }
        if (!chi(k).is_integer()) {
            errs.push_back("chi(" + std::to_string(k) + ") is not an integer");
            continue;
        }
        if (Rational(v.euler()) != chi(k))
            errs.push_back("alternating sum at k=" + std::to_string(k) + " is " + std::to_string(v.euler()) +
                           ", chi gives " + chi(k).str());
        Rational dual = chi(dual_twist_ - k);
        if (n_ % 2 == 1) dual = -dual;
        if (dual != chi(k)) errs.push_back("chi is not Serre symmetric at k=" + std::to_string(k));
        CohVector w;
        try {
            w = at(dual_twist_ - k);
        } catch (const std::exception&) {
            continue;
        }
        for (int i = 0; i <= n_; ++i)
            if (v[static_cast<std::size_t>(i)] != w[static_cast<std::size_t>(n_ - i)])
                errs.push_back("Serre symmetry fails: h^" + std::to_string(i) + "(" + std::to_string(k) + ") != h^" +
                               std::to_string(n_ - i) + "(" + std::to_string(dual_twist_ - k) + ")");
    }
    return errs;
}

std::string CohomologyTable::serialize() const {
    std::ostringstream os;
    os << "format hmdist-table 1\n";
    os << "name " << name_ << "\n";
    os << "dimension " << n_ << "\n";
    os << "dual_twist " << dual_twist_ << "\n";
    os << "chi";
    for (const auto& c : chi_) os << " " << c.str();
    os << "\nhigh_tail " << high_start_ << " 0\n";
    os << "low_tail " << low_end_ << " " << n_ << "\n";
    os << "row k";
    for (int i = 0; i <= n_; ++i) os << " h" << i;
    os << "\n";
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        os << it->first;
        for (Dim x : it->second) os << " " << x;
        os << "\n";
    }
    return os.str();
}

const CohomologyTable& hm_table() {
    static const CohomologyTable t = CohomologyTable::load(table_path("hm.table"));
    return t;
}

const CohomologyTable& hm_tensor_table() {
    static const CohomologyTable t = CohomologyTable::load(table_path("hm_tensor.table"));
    return t;
}

CohVector hm_cohomology(long k) { return hm_table().at(k); }
CohVector hm_tensor_cohomology(long k) { return hm_tensor_table().at(k); }

bool VanishingInterval::contains(long j, long k) const {
    if (lo && k < lo->eval(j)) return false;
    if (hi && k > hi->eval(j)) return false;
    return true;
}

bool VanishingRange::contains(long j, long k) const {
    for (const auto& iv : intervals)
        if (iv.contains(j, k)) return true;
    return false;
}

namespace {

VanishingInterval at_most(long jc, long off) { return {std::nullopt, VanishingBound{jc, off}}; }
VanishingInterval at_least(long jc, long off) { return {VanishingBound{jc, off}, std::nullopt}; }

}  // namespace

const std::vector<VanishingRange>& vanishing_registry() {
    static const std::vector<VanishingRange> reg = {
        {"omega-E", 0, {at_most(1, 0)}, "h^0(Omega^j (x) E(k)) = 0 for k <= j"},
        {"omega-E", 1, {at_most(1, -4), at_least(1, 1)}, "k <= j-4 or k >= j+1"},
        {"omega-E", 2, {at_most(1, -6), at_least(1, -3)}, "k <= j-6 or k >= j-3"},
        {"omega-E", 3, {at_most(1, -10), at_least(1, -5)}, "k <= j-10 or k >= j-5"},
        {"omega-E", 4, {at_least(1, -9)}, "k >= j-9"},
        {"E-E", 0, {at_most(0, -6)}, "h^0(E (x) E(k)) = 0 for k <= -6"},
        {"E-E", 1, {at_most(0, -7), at_least(0, 1)}, "k <= -7 or k >= 1"},
        {"E-E", 2, {at_most(0, -11), at_least(0, -4)}, "k <= -11 or k >= -4"},
        {"E-E", 3, {at_most(0, -16), at_least(0, -8)}, "k <= -16 or k >= -8"},
        {"E-E", 4, {at_least(0, -9)}, "k >= -9"},
    };
    return reg;
}

std::vector<std::string> vanishing_families() { return {"omega-E", "E-E"}; }

std::optional<bool> vanishing(std::string_view family, int i, const std::vector<long>& params) {
    long j = 0, k = 0;
    if (family == "omega-E") {
        if (params.size() != 2) throw std::invalid_argument("omega-E expects parameters (j, k)");
        j = params[0];
        k = params[1];
        if (j < 1 || j > 3) throw std::invalid_argument("omega-E: j must be 1, 2 or 3");
    } else if (family == "E-E") {
        if (params.size() != 1) throw std::invalid_argument("E-E expects parameter (k)");
        k = params[0];
    } else {
        throw UnknownFamily("unknown vanishing family '" + std::string(family) + "'");
    }
    if (i < 0 || i > 4) throw std::invalid_argument("cohomology index must be in [0, 4]");
    for (const auto& r : vanishing_registry())
        if (r.family == family && r.index == i && r.contains(j, k)) return true;
    return std::nullopt;
}

ChaseResult les_chase(const CohVector& a, const CohVector& b, const CohVector& c) {
    if (a.size() != b.size() || b.size() != c.size()) throw std::invalid_argument("les_chase: length mismatch");
    std::size_t n1 = a.size();
    // H^0A H^0B H^0C H^1A ... as one sequence, flanked by zeros.
    std::vector<std::optional<Dim>> seq;
    for (std::size_t i = 0; i < n1; ++i) {
        seq.push_back(a[i]);
        seq.push_back(b[i]);
        seq.push_back(c[i]);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        std::size_t start = 0;
        while (start <= seq.size()) {
            std::size_t end = start;
            while (end < seq.size() && !(seq[end] && *seq[end] == 0)) ++end;
            // run is [start, end)
            int unknowns = 0;
            std::size_t hole = 0;
            Dim sum = 0;
            for (std::size_t p = start; p < end; ++p) {
                Dim sign = ((p - start) % 2 == 0) ? 1 : -1;
                if (!seq[p]) {
                    ++unknowns;
                    hole = p;
                } else {
                    sum += sign * *seq[p];
                }
            }
            if (unknowns == 0 && sum != 0 && end > start)
                throw ChaseContradiction("exact run has nonzero alternating sum");
            if (unknowns == 1) {
                Dim sign = ((hole - start) % 2 == 0) ? 1 : -1;
                Dim v = -sign * sum;
                if (v < 0) throw ChaseContradiction("solved dimension is negative");
                seq[hole] = v;
                changed = true;
            }
            start = end + 1;
        }
    }
    ChaseResult r{CohVector(n1), CohVector(n1), CohVector(n1)};
    for (std::size_t i = 0; i < n1; ++i) {
        if (seq[3 * i]) r.a.set(i, *seq[3 * i]);
        if (seq[3 * i + 1]) r.b.set(i, *seq[3 * i + 1]);
        if (seq[3 * i + 2]) r.c.set(i, *seq[3 * i + 2]);
    }
    return r;
}

}  // namespace hmdist
