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

#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "chern_dsl.hpp"
#include "hmdist/dist_invariants.hpp"
#include "hmdist/paths.hpp"
#include "hmdist/verify.hpp"

namespace hmdist::cli {

namespace {

struct Range {
    long lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) throw CLI::ValidationError("--range", "expected lo..hi, got '" + s + "'");
    try {
        Range r{std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
        if (r.lo > r.hi) throw CLI::ValidationError("--range", "lo must not exceed hi");
        return r;
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("--range", "expected integers in '" + s + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const CohomologyTable& table_named(const std::string& name) {
    if (name == "hm") return hm_table();
    if (name == "hm-tensor") return hm_tensor_table();
    throw std::invalid_argument("unknown table " + name);
}

std::string row_source(const CohomologyTable& t, long k) {
    if (t.rows().count(k)) return "row";
    if (k >= t.high_start()) return "high-tail";
    if (k <= t.low_end()) return "low-tail";
    return "zero";
}

Report table_report(const CohomologyTable& t, const std::string& command, std::optional<Range> range) {
    Report r;
    r.command = command;
    r.provenance = {t.name() == "hm" ? "Horrocks-Mumford cohomology table" : "Horrocks-Mumford tensor square table"};
    r.columns = {"k"};
    for (int i = 0; i <= t.dimension(); ++i) r.columns.push_back("h" + std::to_string(i));
    r.columns.insert(r.columns.end(), {"euler", "chi", "source"});
    Range rg = range ? *range : Range{t.low_end(), t.high_start()};
    for (long k = rg.hi; k >= rg.lo; --k) {
        CohVector v = t.at(k);
        Json row;
        row["k"] = k;
        for (int i = 0; i <= t.dimension(); ++i) row["h" + std::to_string(i)] = *v[i];
        row["euler"] = v.euler();
        row["chi"] = rational_json(t.chi(k));
        row["source"] = row_source(t, k);
        if (Rational(v.euler()) != t.chi(k)) r.worsen(Status::Mismatch);
        r.add_row(row);
    }
    Json chi = Json::array();
    for (const auto& c : t.chi_coefficients()) chi.push_back(rational_json(c));
    r.summary["name"] = t.name();
    r.summary["dimension"] = t.dimension();
    r.summary["dual_twist"] = t.dual_twist();
    r.summary["chi_coefficients"] = chi;
    r.summary["high_tail_start"] = t.high_start();
    r.summary["low_tail_end"] = t.low_end();
    auto errors = t.validation_errors();
    r.summary["validation"] = errors.empty() ? Json("ok") : Json(errors);
    if (!errors.empty()) r.worsen(Status::Mismatch);
    return r;
}

Report tables_check(const std::string& path) {
    Report r;
    r.command = "tables check";
    r.columns = {"check", "status", "detail"};
    std::string text = read_file(path);
    std::size_t first = text.find_first_not_of(" \t\r\n");
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        r.add_row(Json{{"check", name}, {"status", ok ? "ok" : "mismatch"}, {"detail", detail}});
        if (!ok) r.worsen(Status::Mismatch);
    };
    if (first != std::string::npos && text[first] == '{') {
        Json j = Json::parse(text);
        CohomologyTable t = table_from_json(j);
        auto errors = t.validation_errors();
        add("validation", errors.empty(), errors.empty() ? "" : errors.front());
        int bad = 0;
        for (const auto& row : j.at("rows")) {
            CohVector v = t.at(row.at("k").get<long>());
            for (int i = 0; i <= t.dimension(); ++i)
                if (row.at("h" + std::to_string(i)).get<Dim>() != *v[i]) ++bad;
            if (rational_from_json(row.at("chi")) != t.chi(row.at("k").get<long>())) ++bad;
        }
        add("rows", bad == 0, std::to_string(bad) + " differing entries");
        r.summary["name"] = t.name();
    } else {
        CohomologyTable t = CohomologyTable::parse(text, path);
        auto errors = t.validation_errors();
        add("validation", errors.empty(), errors.empty() ? "" : errors.front());
        r.summary["name"] = t.name();
    }
    return r;
}

Report bott_report(int n, int p, long k) {
    Report r;
    r.command = "bott";
    r.provenance = {"Bott formula"};
    CohVector v = bott(n, p, k);
    r.columns = {"n", "p", "k"};
    for (int q = 0; q <= n; ++q) r.columns.push_back("h" + std::to_string(q));
    r.columns.push_back("euler");
    Json row{{"n", n}, {"p", p}, {"k", k}};
    for (int q = 0; q <= n; ++q) row["h" + std::to_string(q)] = *v[q];
    row["euler"] = v.euler();
    r.add_row(row);
    if (n == 4) {
        Rational chi = hrr(twist(omega_p4<Rational>(p), Rational(k)));
        r.summary["hrr_chi"] = rational_json(chi);
        r.summary["hrr_agrees"] = chi == Rational(v.euler());
        if (chi != Rational(v.euler())) r.worsen(Status::Mismatch);
    }
    return r;
}

Report invariants_report(long a, bool intro) {
    Report r;
    r.command = "invariants";
    r.provenance = {"Horrocks-Mumford distributions", "conormal Chern class formulas"};
    HMInvariants inv = hm_invariants(a, intro);
    r.columns = {"path", "degZ", "pa"};
    r.add_row(Json{{"path", "closed-form"}, {"degZ", rational_json(inv.degZ_closed)}, {"pa", rational_json(inv.pa_closed)}});
    r.add_row(Json{{"path", "theorem"}, {"degZ", rational_json(inv.degZ_theorem)}, {"pa", rational_json(inv.pa_theorem)}});
    r.add_row(Json{{"path", "resolution"},
                   {"degZ", rational_json(inv.degZ_resolution)},
                   {"pa", rational_json(inv.pa_resolution)}});
    r.summary["a"] = a;
    r.summary["degree"] = inv.degree;
    r.summary["convention"] = intro ? "intro" : "body";
    r.summary["c1"] = rational_json(inv.c1);
    r.summary["c2"] = rational_json(inv.c2);
    r.summary["paths_agree"] = inv.agree;
    if (!inv.agree) r.worsen(Status::Mismatch);
    return r;
}

Report rao_report(long a, bool per_twist) {
    Report r;
    r.command = "rao";
    r.provenance = {"Rao module dimension", "vanishing lemmas"};
    RaoDimension rd = rao_dimension(a);
    if (per_twist) {
        r.columns = {"q", "h1", "lemmas", "detail"};
        for (const auto& t : rd.terms)
            r.add_row(Json{{"q", t.q}, {"h1", t.value ? Json(*t.value) : Json("gap")}, {"lemmas", t.lemmas}, {"detail", t.detail}});
    } else {
        r.columns = {"a", "rao_dimension", "kind", "gaps"};
        r.add_row(Json{{"a", a}, {"rao_dimension", rd.total}, {"kind", rd.exact ? "exact" : "at-least"}, {"gaps", rd.gaps}});
    }
    r.summary["rao_dimension"] = rd.total;
    r.summary["kind"] = rd.exact ? "exact" : "at-least";
    r.summary["gaps"] = rd.gaps;
    r.summary["q_min"] = rd.q_min;
    r.summary["q_max"] = rd.q_max;
    return r;
}

Report moduli_report(long a, bool intro) {
    Report r;
    r.command = "moduli";
    r.provenance = {"moduli of Horrocks-Mumford distributions"};
    r.columns = {"quantity", "value", "closed_form", "agree"};
    Integer hom = hom_dimension(a);
    Integer mod = moduli_dimension(a);
    Rational ra(a);
    Rational hom_cf = hom_dimension_closed_form().evaluate({ra});
    Rational mod_cf = moduli_dimension_closed_form(intro).evaluate({ra});
    r.add_row(Json{{"quantity", "hom_dimension"}, {"value", integer_json(hom)}, {"closed_form", rational_json(hom_cf)},
                   {"agree", Rational(hom) == hom_cf}});
    r.add_row(Json{{"quantity", "moduli_dimension"}, {"value", integer_json(mod)}, {"closed_form", rational_json(mod_cf)},
                   {"agree", Rational(mod) == mod_cf}});
    if (Rational(hom) != hom_cf || Rational(mod) != mod_cf) r.worsen(Status::Mismatch);
    bool hom_id = hom_dimension_symbolic() == hom_dimension_closed_form();
    QPoly mod_sym = hom_dimension_symbolic() + QPoly(Rational(kHMModuliDimension - 1));
    bool mod_id = mod_sym == moduli_dimension_closed_form(intro);
    r.summary["a"] = a;
    r.summary["convention"] = intro ? "intro" : "body";
    r.summary["hm_moduli_dimension"] = kHMModuliDimension;
    r.summary["hom_identity"] = hom_id;
    r.summary["moduli_identity"] = mod_id;
    if (!hom_id || !mod_id) r.worsen(Status::Mismatch);
    return r;
}

Report classify_report(Side side, long d, bool all) {
    Report r;
    r.command = "classify";
    r.provenance = {std::string(side_name(side)) + " classification of degree " + std::to_string(d) + " distributions"};
    Classification c = classify_numeric(side, d);
    r.columns = {"branch", "c1", "c2", "degZ", "pa", "twist", "c1_normalized", "c2_normalized", "feasible", "filters"};
    for (const auto& cand : c.candidates) {
        if (!all && !cand.feasible()) continue;
        std::string trail;
        for (const auto& f : cand.filters) {
            if (!trail.empty()) trail += "; ";
            trail += f.name + "=" + filter_status_name(f.status);
        }
        r.add_row(Json{{"branch", cand.branch},
                       {"c1", rational_json(cand.c1)},
                       {"c2", rational_json(cand.c2)},
                       {"degZ", rational_json(cand.degZ)},
                       {"pa", rational_json(cand.pa)},
                       {"twist", cand.normalization_twist},
                       {"c1_normalized", rational_json(cand.c1_normalized)},
                       {"c2_normalized", rational_json(cand.c2_normalized)},
                       {"feasible", cand.feasible()},
                       {"filters", trail}});
    }
    r.summary["side"] = side_name(side);
    r.summary["degree"] = d;
    r.summary["candidates"] = c.candidates.size();
    r.summary["survivors"] = c.survivors;
    return r;
}

Report hilbert_report(long a) {
    Report r;
    r.command = "hilbert";
    r.provenance = {"Hilbert polynomial of the conormal sheaf"};
    QPoly p = hm_hilbert_polynomial(a);
    QPoly disp = hm_hilbert_display_symbolic().compose({QPoly::constant(1, Rational(a)), QPoly::variable(1, 0)});
    r.columns = {"power", "coefficient"};
    for (int k = p.degree(); k >= 0; --k) {
        Exponent e{static_cast<unsigned>(k)};
        r.add_row(Json{{"power", k}, {"coefficient", rational_json(p.coefficient(e))}});
    }
    r.summary["a"] = a;
    r.summary["polynomial"] = p.str({"t"});
    r.summary["display_agrees"] = p == disp;
    if (!(p == disp)) r.worsen(Status::Mismatch);
    return r;
}

Report verify_report(const std::optional<std::string>& only, const std::string& dir) {
    Report r;
    r.command = "verify fixtures";
    std::string d = dir.empty() ? fixture_dir().string() : dir;
    FixtureSet fs = FixtureSet::load_directory(d);
    auto results = run_checks(fs, only);
    r.columns = {"check", "status", "expected", "computed", "detail"};
    std::set<std::string> prov;
    std::vector<std::string> prov_order;
    for (const auto& c : results) {
        r.add_row(Json{{"check", c.name},
                       {"status", check_status_name(c.status)},
                       {"expected", c.expected},
                       {"computed", c.computed},
                       {"detail", c.detail}});
        for (const auto& p : c.provenance)
            if (prov.insert(p).second) prov_order.push_back(p);
    }
    r.provenance = prov_order;
    std::size_t ok = 0;
    for (const auto& c : results) ok += c.status == CheckStatus::Ok;
    r.summary["checks"] = results.size();
    r.summary["ok"] = ok;
    r.summary["fixture_objects"] = fs.names().size();
    switch (aggregate_status(results)) {
        case CheckStatus::Ok: break;
        case CheckStatus::Mismatch: r.worsen(Status::Mismatch); break;
        case CheckStatus::Error: r.worsen(Status::Error); break;
    }
    return r;
}

Report chern_report(const std::string& path) {
    Report r;
    r.command = "chern";
    r.provenance = {"intersection ring of P^4"};
    ChernScript s = run_chern_script(read_file(path));
    r.columns = {"expr", "rank", "c1", "c2", "c3", "c4", "chi"};
    for (const auto& o : s.outputs) {
        Json row{{"expr", o.expr}, {"rank", o.sheaf.rank}};
        for (int i = 1; i <= 4; ++i) row["c" + std::to_string(i)] = poly_json(o.sheaf.c(i), s.vars);
        row["chi"] = poly_json(o.chi, s.vars);
        r.add_row(row);
    }
    r.summary["variables"] = s.vars;
    return r;
}

void fallthrough_all(CLI::App* app) {
    for (auto* sub : app->get_subcommands({})) {
        sub->fallthrough();
        fallthrough_all(sub);
    }
}

}  // namespace

CohomologyTable table_from_json(const Json& j) {
    const Json& s = j.at("summary");
    std::ostringstream os;
    int n = s.at("dimension").get<int>();
    os << "format hmdist-table 1\n";
    os << "name " << s.at("name").get<std::string>() << "\n";
    os << "dimension " << n << "\n";
    os << "dual_twist " << s.at("dual_twist").get<long>() << "\n";
    os << "chi";
    for (const auto& c : s.at("chi_coefficients")) os << " " << rational_from_json(c).str();
    os << "\n";
    os << "high_tail " << s.at("high_tail_start").get<long>() << " 0\n";
    os << "low_tail " << s.at("low_tail_end").get<long>() << " " << n << "\n";
    os << "row k";
    for (int i = 0; i <= n; ++i) os << " h" << i;
    os << "\n";
    for (const auto& row : j.at("rows")) {
        if (row.at("source").get<std::string>() != "row") continue;
        os << row.at("k").get<long>();
        for (int i = 0; i <= n; ++i) os << " " << row.at("h" + std::to_string(i)).get<Dim>();
        os << "\n";
    }
    return CohomologyTable::parse(os.str(), "<json>");
}

CommandResult run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants and exterior-calculus checks for distributions on P^4", "hmdist"};
    app.require_subcommand(1);
    std::string format = "table";
    std::string out_path;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--out", out_path, "write output to PATH instead of stdout");

    std::function<Report()> action;

    auto* tables = app.add_subcommand("tables", "cohomology tables");
    tables->require_subcommand(1);
    std::string range_text;
    for (const char* name : {"hm", "hm-tensor"}) {
        auto* t = tables->add_subcommand(name, std::string("print the ") + name + " table");
        t->add_option("--range", range_text, "twists lo..hi");
        std::string nm = name;
        t->callback([&, nm] {
            std::optional<Range> rg;
            if (!range_text.empty()) rg = parse_range(range_text);
            action = [&, nm, rg] { return table_report(table_named(nm), "tables " + nm, rg); };
        });
    }
    std::string check_path;
    auto* tcheck = tables->add_subcommand("check", "re-validate a table file or a `tables --format json` output");
    tcheck->add_option("path", check_path, "table or JSON file")->required();
    tcheck->callback([&] { action = [&] { return tables_check(check_path); }; });

    int bn = 4, bp = 0;
    long bk = 0;
    auto* b = app.add_subcommand("bott", "h^q(P^n, Omega^p(k))");
    b->add_option("--n", bn, "dimension")->check(CLI::Range(1, 30));
    b->add_option("--p", bp, "form degree")->required();
    b->add_option("--k", bk, "twist")->required();
    b->callback([&] { action = [&] { return bott_report(bn, bp, bk); }; });

    long a = 1;
    bool intro = false;
    auto* inv = app.add_subcommand("invariants", "degree and genus of the singular curve Z_a");
    inv->add_option("--a", a, "twist parameter a >= 1")->required()->check(CLI::Range(1L, 100000L));
    inv->add_flag("--intro", intro, "use the degree 2a+5 convention");
    inv->callback([&] { action = [&] { return invariants_report(a, intro); }; });

    bool per_twist = false;
    auto* rao = app.add_subcommand("rao", "Rao module dimension of Z_a");
    rao->add_option("--a", a, "twist parameter a >= 1")->required()->check(CLI::Range(1L, 100000L));
    rao->add_flag("--per-twist", per_twist, "one row per twist q");
    rao->callback([&] { action = [&] { return rao_report(a, per_twist); }; });

    auto* mod = app.add_subcommand("moduli", "hom and moduli dimensions");
    mod->add_option("--a", a, "twist parameter a >= 1")->required()->check(CLI::Range(1L, 100000L));
    mod->add_flag("--intro", intro, "use the degree 2a+5 closed form");
    mod->callback([&] { action = [&] { return moduli_report(a, intro); }; });

    std::string side_text;
    long degree = 1;
    bool all = false;
    auto* cls = app.add_subcommand("classify", "numerical classification of locally free distributions");
    cls->add_option("--side", side_text, "tangent or conormal")->required()->check(CLI::IsMember({"tangent", "conormal"}));
    cls->add_option("--degree", degree, "distribution degree")->required();
    cls->add_flag("--all", all, "include rejected candidates");
    cls->callback([&] {
        action = [&] { return classify_report(side_text == "tangent" ? Side::Tangent : Side::Conormal, degree, all); };
    });

    auto* hil = app.add_subcommand("hilbert", "Hilbert polynomial of the conormal sheaf");
    hil->add_option("--a", a, "twist parameter a >= 1")->required()->check(CLI::Range(1L, 100000L));
    hil->callback([&] { action = [&] { return hilbert_report(a); }; });

    auto* ver = app.add_subcommand("verify", "verification suites");
    ver->require_subcommand(1);
    std::string only;
    std::string fix_dir;
    auto* vf = ver->add_subcommand("fixtures", "run the fixture checks");
    vf->add_option("--only", only, "run a single named check");
    vf->add_option("--dir", fix_dir, "fixture directory (default: HMDIST_FIXTURE_DIR or the shipped data)");
    vf->callback([&] {
        action = [&] { return verify_report(only.empty() ? std::nullopt : std::optional<std::string>(only), fix_dir); };
    });

    std::string script;
    auto* ch = app.add_subcommand("chern", "evaluate a Chern-class script");
    ch->add_option("file", script, "script file")->required();
    ch->callback([&] { action = [&] { return chern_report(script); }; });

    fallthrough_all(&app);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return {0, std::nullopt};
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return {0, std::nullopt};
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return {2, std::nullopt};
    }

    Report report;
    try {
        report = action();
    } catch (const UnknownCheck& e) {
        err << "error: " << e.what() << "\n";
        return {2, std::nullopt};
    } catch (const std::exception& e) {
        report = Report{};
        report.command = args.empty() ? "" : args.front();
        report.status = Status::Error;
        report.messages.push_back(std::string("error: ") + e.what());
        err << "error: " << e.what() << "\n";
    }

    std::string text = format == "json" ? render_json(report) : format == "csv" ? render_csv(report) : render_table(report);
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        f << text;
        if (!f) {
            err << "error: cannot write " << out_path << "\n";
            return {2, report};
        }
    }
    return {exit_code(report.status), report};
}

}  // namespace hmdist::cli
