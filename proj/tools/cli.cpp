#include "cli.hpp"

#include "cubalg/algebra.hpp"
#include "cubalg/catalog.hpp"
#include "cubalg/error.hpp"
#include "cubalg/oracle.hpp"
#include "cubalg/pt.hpp"
#include "cubalg/solver.hpp"
#include "cubalg/susy.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace cubalg::cli {

namespace {

using json = nlohmann::ordered_json;

struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Report {
    json doc = json::object();
    std::vector<Table> tables;
    std::vector<std::string> notes;
};

struct Config {
    std::string format = "table";
    std::string output;
    double hbar = 1.0;
    double omega = 1.0;
    double a = 1.0;
    bool real_a = false;
};

std::string fmt(double x, int digits = 12)
{
    if (x == 0.0)
        x = 0.0;  // no negative zero in reports
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

json num(double x)
{
    if (!std::isfinite(x))
        return nullptr;
    return std::stod(fmt(x));
}

std::string cell(double x) { return fmt(x, 10); }

PotentialParams make_params(const Config& c)
{
    PotentialParams p;
    p.hbar = c.hbar;
    p.omega = c.omega;
    p.a = c.a;
    p.imaginary_a = !c.real_a;
    return p;
}

json params_json(const PotentialParams& p)
{
    json j;
    j["hbar"] = num(p.hbar);
    j["omega"] = num(p.omega);
    j["a"] = num(p.a);
    j["a_mode"] = p.imaginary_a ? "imaginary" : "real";
    return j;
}

std::string poly_string(const Poly& p)
{
    const int deg = p.degree();
    if (deg < 0)
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = deg; k >= 0; --k) {
        const double c = p.coeff(k);
        if (c == 0.0)
            continue;
        const double m = std::abs(c);
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        if (k == 0 || m != 1.0)
            os << fmt(m, 10);
        if (k > 0)
            os << (k == 0 || m != 1.0 ? "*" : "") << "E" << (k > 1 ? "^" + std::to_string(k) : "");
    }
    return os.str();
}

json poly_json(const Poly& p)
{
    json c = json::array();
    for (int k = 0; k <= p.degree(); ++k)
        c.push_back(num(p.coeff(k)));
    return json{{"text", poly_string(p)}, {"coefficients", c}};
}

void render_table(const Table& t, std::ostream& os)
{
    std::vector<std::size_t> w(t.columns.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = t.columns[i].size();
        for (const auto& r : t.rows)
            w[i] = std::max(w[i], r[i].size());
    }
    if (!t.title.empty())
        os << t.title << "\n";
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            os << std::left << std::setw(static_cast<int>(w[i])) << r[i];
            os << (i + 1 < r.size() ? "  " : "");
        }
        os << "\n";
    };
    line(t.columns);
    std::vector<std::string> rule;
    for (auto n : w)
        rule.push_back(std::string(n, '-'));
    line(rule);
    for (const auto& r : t.rows)
        line(r);
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"')
            q += '"';
        q += ch;
    }
    return q + "\"";
}

void render(const Report& r, const std::string& format, std::ostream& os)
{
    if (format == "json") {
        os << r.doc.dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < r.tables.size(); ++i) {
        if (i > 0)
            os << "\n";
        const Table& t = r.tables[i];
        if (format == "csv") {
            auto line = [&](const std::vector<std::string>& row) {
                for (std::size_t k = 0; k < row.size(); ++k)
                    os << (k ? "," : "") << csv_field(row[k]);
                os << "\n";
            };
            line(t.columns);
            for (const auto& row : t.rows)
                line(row);
        } else {
            render_table(t, os);
        }
    }
    if (format == "table")
        for (const auto& n : r.notes)
            os << n << "\n";
}

// --- list ---------------------------------------------------------------------------

Report cmd_list(const Config& c)
{
    Report r;
    Table t{"", {"id", "V(x,y)"}, {}};
    json arr = json::array();
    for (PotentialId id : all_potentials()) {
        const PotentialSpec s = make_potential(id, make_params(c));
        t.rows.push_back({to_string(id), s.formula});
        arr.push_back(json{{"id", to_string(id)}, {"formula", s.formula}});
    }
    r.doc["potentials"] = arr;
    r.tables.push_back(t);
    return r;
}

// --- algebra ------------------------------------------------------------------------

Report cmd_algebra(const Config& c, const std::string& name)
{
    const PotentialId id = parse_potential(name);
    const PotentialParams prm = make_params(c);
    const CubicAlgebra alg = get_algebra(id, prm);
    Report r;
    r.doc["potential"] = to_string(id);
    r.doc["params"] = params_json(prm);
    r.doc["alpha"] = num(alg.alpha);
    r.doc["beta"] = num(alg.beta);
    r.doc["mu"] = num(alg.mu);
    r.doc["sqrt_delta_branch"] = alg.sqrt_delta_branch;
    Table t{"cubic algebra of " + to_string(id), {"coefficient", "value"}, {}};
    t.rows.push_back({"alpha", cell(alg.alpha)});
    t.rows.push_back({"beta", cell(alg.beta)});
    t.rows.push_back({"mu", cell(alg.mu)});
    const std::pair<const char*, const Poly*> polys[] = {
        {"gamma", &alg.gamma}, {"delta", &alg.delta}, {"epsilon", &alg.epsilon}, {"nu", &alg.nu},
        {"xi", &alg.xi},       {"zeta", &alg.zeta},   {"casimir", &alg.casimir}};
    for (const auto& [label, p] : polys) {
        r.doc[label] = poly_json(*p);
        t.rows.push_back({label, poly_string(*p)});
    }
    t.rows.push_back({"realization", alg.beta != 0.0 ? "case 1 (beta != 0)" : "case 2 (beta = 0)"});
    r.doc["realization_case"] = alg.beta != 0.0 ? 1 : 2;
    r.tables.push_back(t);
    return r;
}

// --- spectrum -----------------------------------------------------------------------

struct RefLevel {
    double energy = 0.0;
    int degeneracy = 0;
};

json families_json(const AlgebraicSpectrum& s)
{
    json fams = json::array();
    for (const auto& f : s.families) {
        json entries = json::array();
        for (const auto& e : f.entries)
            entries.push_back(json{{"p", e.p},
                                   {"E", num(e.energy)},
                                   {"degeneracy", e.dimension},
                                   {"unitary", e.unitary},
                                   {"physical", e.physical}});
        fams.push_back(json{{"family_id", f.family_id},
                            {"label", f.label},
                            {"formula", f.formula},
                            {"entries", entries}});
    }
    return fams;
}

Table families_table(const AlgebraicSpectrum& s)
{
    Table t{"", {"family", "formula", "p", "E", "degeneracy", "unitary", "physical"}, {}};
    for (const auto& f : s.families)
        for (const auto& e : f.entries)
            t.rows.push_back({f.label, f.formula, std::to_string(e.p), cell(e.energy),
                              std::to_string(e.dimension), e.unitary ? "yes" : "no",
                              e.physical ? "yes" : "no"});
    return t;
}

/// Unitary, physical entries merged into levels; shared by `verify` and `verify --expected`.
std::vector<RefLevel> levels_from_families(const json& families)
{
    std::vector<RefLevel> all;
    for (const auto& f : families)
        for (const auto& e : f.at("entries")) {
            if (!e.at("unitary").get<bool>() || !e.at("physical").get<bool>())
                continue;
            all.push_back({e.at("E").get<double>(), e.at("degeneracy").get<int>()});
        }
    std::sort(all.begin(), all.end(), [](const RefLevel& a, const RefLevel& b) { return a.energy < b.energy; });
    std::vector<RefLevel> out;
    for (const auto& l : all) {
        if (!out.empty() && std::abs(l.energy - out.back().energy) <= 1e-8 * std::max(1.0, std::abs(l.energy)))
            out.back().degeneracy += l.degeneracy;
        else
            out.push_back(l);
    }
    return out;
}

Report cmd_spectrum(const Config& c, const std::string& name, int pmax)
{
    const PotentialId id = parse_potential(name);
    const PotentialParams prm = make_params(c);
    const AlgebraicSpectrum s = assemble_spectrum(id, prm, pmax);
    Report r;
    r.doc["potential"] = to_string(id);
    r.doc["params"] = params_json(prm);
    r.doc["p_max"] = pmax;
    r.doc["v_min"] = num(s.v_min);
    r.doc["families"] = families_json(s);
    r.tables.push_back(families_table(s));
    Table lv{"levels", {"E", "degeneracy"}, {}};
    for (const auto& l : levels_from_families(r.doc["families"]))
        lv.rows.push_back({cell(l.energy), std::to_string(l.degeneracy)});
    r.tables.push_back(lv);
    return r;
}

// --- verify -------------------------------------------------------------------------

struct VerifyArgs {
    int levels = 10;
    int grid_n = 1000;
    double box = 0.0;
    double tol = 1e-3;
    std::string expected;
    bool closed_form = false;
};

json convergence_json(const ConvergenceReport& cr)
{
    json n = json::array();
    for (int v : cr.n)
        n.push_back(v);
    double worst = 0.0;
    for (double e : cr.error)
        worst = std::max(worst, e);
    return json{{"part", cr.label}, {"L", num(cr.L)}, {"half_line", cr.half_line}, {"n", n},
                {"max_extrapolation_change", num(worst)}};
}

Report cmd_verify(const Config& c, const std::string& name, const VerifyArgs& va)
{
    const PotentialId id = parse_potential(name);
    const PotentialParams prm = make_params(c);
    Report r;
    r.doc["potential"] = to_string(id);
    r.doc["params"] = params_json(prm);

    std::vector<RefLevel> ref;
    std::string source;
    if (!va.expected.empty()) {
        std::ifstream in(va.expected);
        if (!in)
            throw std::invalid_argument("cannot read " + va.expected);
        const json e = json::parse(in);
        ref = levels_from_families(e.at("families"));
        r.doc["families"] = e.at("families");
        source = "expected file";
    } else if (va.closed_form) {
        for (double emax = 8.0;; emax *= 2.0) {
            Spectrum s = reference_spectrum(id, prm, emax);
            ref.clear();
            for (const auto& l : s.merged)
                if (l.energy < emax)
                    ref.push_back({l.energy, l.degeneracy});
            if (static_cast<int>(ref.size()) > va.levels || emax > 1e6)
                break;
        }
        r.doc["families"] = json::array();
        source = "closed form";
    } else {
        const AlgebraicSpectrum s = assemble_spectrum(id, prm, 2 * va.levels + 4);
        r.doc["families"] = families_json(s);
        ref = levels_from_families(r.doc["families"]);
        source = "algebraic";
    }
    if (static_cast<int>(ref.size()) > va.levels)
        ref.resize(va.levels);

    int states = 0;
    for (const auto& l : ref)
        states += l.degeneracy;
    OracleOptions opts;
    opts.n0 = va.grid_n;
    opts.box = va.box;
    const NumericSpectrum ns = spectrum_2d(id, prm, std::max(states, 1), opts);

    Table t{"reference (" + source + ") vs numeric", {"level", "E_ref", "deg_ref", "E_num", "deg_num", "|dE|", "verdict"}, {}};
    json levels = json::array();
    json numeric = json::array();
    for (const auto& l : ns.spectrum.merged)
        numeric.push_back(json{{"E", num(l.energy)}, {"degeneracy", l.degeneracy}});
    double max_delta = 0.0;
    bool all_pass = true;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        json row{{"E_ref", num(ref[i].energy)}, {"degeneracy_ref", ref[i].degeneracy}};
        bool pass = false;
        if (i < ns.spectrum.merged.size()) {
            const Level& l = ns.spectrum.merged[i];
            const double d = std::abs(l.energy - ref[i].energy);
            max_delta = std::max(max_delta, d);
            pass = d < va.tol && l.degeneracy == ref[i].degeneracy;
            row["E_num"] = num(l.energy);
            row["degeneracy_num"] = l.degeneracy;
            row["abs_delta"] = num(d);
            t.rows.push_back({std::to_string(i), cell(ref[i].energy), std::to_string(ref[i].degeneracy),
                              cell(l.energy), std::to_string(l.degeneracy), fmt(d, 3), pass ? "PASS" : "FAIL"});
        } else {
            row["E_num"] = nullptr;
            t.rows.push_back({std::to_string(i), cell(ref[i].energy), std::to_string(ref[i].degeneracy), "-", "-",
                              "-", "FAIL"});
        }
        row["pass"] = pass;
        all_pass = all_pass && pass;
        levels.push_back(row);
    }
    r.doc["verification"] = json{{"reference", source},
                                 {"tolerance", num(va.tol)},
                                 {"numeric", numeric},
                                 {"levels", levels},
                                 {"max_abs_delta", num(max_delta)},
                                 {"pass", all_pass},
                                 {"convergence", json::array({convergence_json(ns.x), convergence_json(ns.y)})}};
    r.tables.push_back(t);
    r.notes.push_back("max |dE| = " + fmt(max_delta, 3) + "  verdict: " + (all_pass ? "PASS" : "FAIL"));
    return r;
}

// --- susy ---------------------------------------------------------------------------

Report cmd_susy(const Config& c, const std::string& name, double emax, int levels)
{
    const PotentialId id = parse_potential(name);
    const PotentialParams prm = make_params(c);
    const SusySpectrum s = susy_spectrum(id, prm, emax);
    Report r;
    r.doc["potential"] = to_string(id);
    r.doc["params"] = params_json(prm);
    Table ft{"families", {"family", "E", "eigenfunction"}, {}};
    json fams = json::array();
    for (const auto& f : s.families) {
        ft.rows.push_back({f.name, f.formula, f.eigenfunction});
        fams.push_back(json{{"name", f.name}, {"formula", f.formula}, {"eigenfunction", f.eigenfunction}});
    }
    r.doc["families"] = fams;
    Table lt{"levels", {"E", "degeneracy", "families"}, {}};
    json lv = json::array();
    for (const auto& l : s.spectrum.merged) {
        std::string names;
        json fn = json::array();
        for (const auto& f : l.families) {
            names += (names.empty() ? "" : " ") + f;
            fn.push_back(f);
        }
        lt.rows.push_back({cell(l.energy), std::to_string(l.degeneracy), names});
        lv.push_back(json{{"E", num(l.energy)}, {"degeneracy", l.degeneracy}, {"families", fn}});
    }
    r.doc["levels"] = lv;
    r.tables.push_back(ft);
    r.tables.push_back(lt);

    if (id == PotentialId::P1) {
        const FactorizedPair pair = partner_pair_p1(prm.a, prm.hbar);
        const Grid1D g{12.0 * prm.a, 4801, false};
        const WaveFunction1D phi0 = ground_state_p1(prm.a, prm.hbar, g);
        const auto bphi = apply_b(pair, phi0);
        const double zero_mode = norm(bphi, g.h());
        const IsospectralityReport iso = partner_isospectrality(pair, levels);
        Table ct{"factorization checks", {"check", "value"}, {}};
        ct.rows.push_back({"|b phi0|", fmt(zero_mode, 3)});
        ct.rows.push_back({"h1 zero mode", cell(iso.zero_mode)});
        ct.rows.push_back({"max |E(h1) - E(h2)| over " + std::to_string(levels) + " levels", fmt(iso.max_delta, 3)});
        r.tables.push_back(ct);
        json h1 = json::array(), h2 = json::array();
        for (double e : iso.h1)
            h1.push_back(num(e));
        for (double e : iso.h2)
            h2.push_back(num(e));
        r.doc["checks"] = json{{"zero_mode_residual", num(zero_mode)},
                               {"h1_zero_mode", num(iso.zero_mode)},
                               {"h1_levels", h1},
                               {"h2_levels", h2},
                               {"isospectrality_max_delta", num(iso.max_delta)}};
    }
    return r;
}

// --- pt -----------------------------------------------------------------------------

Report cmd_pt(const Config& c, double eps, int levels, const std::string& part)
{
    Report r;
    r.doc["params"] = json{{"hbar", num(c.hbar)}, {"a", num(c.a)}, {"epsilon", num(eps)}};
    auto level_table = [&](const PtReport& rep) {
        Table t{"complexified " + to_string(rep.part) + "-part, L=" + cell(rep.L) + ", n=" + std::to_string(rep.n.back()),
                {"n", "Re E", "Im E", "extrapolation change", "sigma"}, {}};
        json arr = json::array();
        for (std::size_t i = 0; i < rep.levels.size(); ++i) {
            const PtLevel& l = rep.levels[i];
            t.rows.push_back({std::to_string(i), cell(l.energy.real()), fmt(l.energy.imag(), 3), fmt(l.error, 3),
                              l.sigma > 0 ? "+1" : (l.sigma < 0 ? "-1" : "0")});
            arr.push_back(json{{"n", i}, {"re", num(l.energy.real())}, {"im", num(l.energy.imag())},
                               {"error", num(l.error)}, {"sigma", l.sigma}});
        }
        json grids = json::array();
        for (int n : rep.n)
            grids.push_back(n);
        r.tables.push_back(t);
        return json{{"part", to_string(rep.part)}, {"L", num(rep.L)}, {"n", grids}, {"levels", arr}};
    };
    if (part == "2d") {
        const PtSpectrum2D s = pt_spectrum_2d(c.a, c.hbar, eps, levels);
        json parts = json::array();
        parts.push_back(level_table(s.x));
        parts.push_back(level_table(s.y));
        Table t{"2D spectrum (lowest " + std::to_string(levels) + " states)", {"E", "degeneracy"}, {}};
        json lv = json::array();
        for (const auto& l : s.spectrum.merged) {
            t.rows.push_back({cell(l.energy), std::to_string(l.degeneracy)});
            lv.push_back(json{{"E", num(l.energy)}, {"degeneracy", l.degeneracy}});
        }
        r.tables.push_back(t);
        r.doc["parts"] = parts;
        r.doc["spectrum"] = lv;
    } else {
        r.doc["parts"] = json::array({level_table(pt_eigenvalues(parse_pt_part(part), c.a, c.hbar, eps, levels))});
    }
    return r;
}

// --- quintic ------------------------------------------------------------------------

Report cmd_quintic(const Config& c, int basis)
{
    const QuinticReport q = quintic_subset_check(c.a, c.hbar, basis);
    Report r;
    r.doc["params"] = json{{"hbar", num(c.hbar)}, {"a0", num(c.a)}};
    r.doc["basis_size"] = q.basis_size;
    r.doc["kappa"] = num(q.kappa);
    Table t{"relation residuals, basis " + std::to_string(q.basis_size), {"relation", "residual", "asserted"}, {}};
    json rel = json::array();
    for (const auto& x : q.relations) {
        t.rows.push_back({x.relation, fmt(x.residual, 3), x.asserted ? "yes" : "no"});
        rel.push_back(json{{"relation", x.relation}, {"residual", num(x.residual)}, {"asserted", x.asserted}});
    }
    r.doc["relations"] = rel;
    r.tables.push_back(t);
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Spectra of superintegrable systems with cubic symmetry algebras", "cubalg-cli"};
    app.require_subcommand(1, 1);
    Config cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", cfg.output, "Write the report to this file");
    app.add_option("--hbar", cfg.hbar, "Planck constant")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--omega", cfg.omega, "Oscillator frequency")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--a0,--a", cfg.a, "Length a0 (imaginary mode) or a (real mode, PT)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--real-a", cfg.real_a, "Use a real length a instead of a = i*a0");

    std::string id;
    auto* list = app.add_subcommand("list", "Catalog ids with their potentials");
    auto* algebra = app.add_subcommand("algebra", "Cubic algebra coefficients");
    algebra->add_option("id", id, "Potential id")->required();
    int pmax = 6;
    auto* spectrum = app.add_subcommand("spectrum", "Algebraic spectrum from finite-dimensional representations");
    spectrum->add_option("id", id, "Potential id")->required();
    spectrum->add_option("--pmax", pmax, "Largest representation index p")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Algebraic spectrum against finite-difference diagonalization");
    verify->add_option("id", id, "Potential id")->required();
    verify->add_option("--levels", va.levels, "Number of distinct levels")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--grid-n", va.grid_n, "Points per axis on the coarsest grid")
        ->check(CLI::Range(50, 200000))
        ->capture_default_str();
    verify->add_option("--box", va.box, "Half-width of the box (0: automatic)")->check(CLI::NonNegativeNumber);
    verify->add_option("--tol", va.tol, "Pass tolerance on |dE|")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--expected", va.expected, "Reference spectrum from `spectrum --format json`")
        ->check(CLI::ExistingFile);
    verify->add_flag("--closed-form", va.closed_form, "Compare against the closed-form level list");
    double emax = 6.0;
    int susy_levels = 8;
    auto* susy = app.add_subcommand("susy", "Supersymmetric factorization and ladder spectrum");
    susy->add_option("id", id, "Potential id")->required();
    susy->add_option("--emax", emax, "Largest energy listed")->capture_default_str();
    susy->add_option("--levels", susy_levels, "Partner levels compared")->check(CLI::PositiveNumber)->capture_default_str();
    double eps = 0.1;
    int pt_levels = 8;
    std::string part = "x";
    auto* pt = app.add_subcommand("pt", "Complexified spectrum of the first inverse-square potential");
    pt->add_option("--epsilon", eps, "Imaginary shift of the coordinates")->check(CLI::PositiveNumber)->capture_default_str();
    pt->add_option("--levels", pt_levels, "Number of eigenvalues")->check(CLI::Range(1, 60))->capture_default_str();
    pt->add_option("--part", part, "x, y, h1, h2 or 2d")
        ->check(CLI::IsMember({"x", "y", "h1", "h2", "2d"}))
        ->capture_default_str();
    int basis = 30;
    auto* quintic = app.add_subcommand("quintic", "Residuals of the quintic algebra relations");
    quintic->add_option("--basis", basis, "Number of product states")->check(CLI::PositiveNumber)->capture_default_str();
    for (auto* sub : {list, algebra, spectrum, verify, susy, pt, quintic})
        sub->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        Report rep;
        if (*list)
            rep = cmd_list(cfg);
        else if (*algebra)
            rep = cmd_algebra(cfg, id);
        else if (*spectrum)
            rep = cmd_spectrum(cfg, id, pmax);
        else if (*verify)
            rep = cmd_verify(cfg, id, va);
        else if (*susy)
            rep = cmd_susy(cfg, id, emax, susy_levels);
        else if (*pt)
            rep = cmd_pt(cfg, eps, pt_levels, part);
        else
            rep = cmd_quintic(cfg, basis);
        if (cfg.output.empty()) {
            render(rep, cfg.format, out);
        } else {
            std::ofstream f(cfg.output);
            if (!f) {
                err << "error: cannot write " << cfg.output << "\n";
                return 1;
            }
            render(rep, cfg.format, f);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace cubalg::cli
