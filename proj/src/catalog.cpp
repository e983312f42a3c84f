#include "cubalg/catalog.hpp"

#include "cubalg/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace cubalg {

namespace {

const std::map<PotentialId, std::string>& names()
{
    static const std::map<PotentialId, std::string> m{
        {PotentialId::ReducibleIso, "reducible_iso"}, {PotentialId::ReducibleSW1, "reducible_sw1"},
        {PotentialId::ReducibleSW2, "reducible_sw2"}, {PotentialId::P1, "p1"},
        {PotentialId::P2, "p2"}, {PotentialId::P3, "p3"}, {PotentialId::P4, "p4"},
        {PotentialId::P5, "p5"}, {PotentialId::P6, "p6"}};
    return m;
}

constexpr double inf = std::numeric_limits<double>::infinity();

// ħ²[1/(s−a)² + 1/(s+a)²] with signed a²; real form 2(s²+a²)/(s²−a²)²
Part1D inverse_square_pair(double hbar, double a2, double quad, const std::string& var)
{
    Part1D p;
    const double h2 = hbar * hbar;
    p.v = [h2, a2, quad](double s) {
        const double d = s * s - a2;
        return h2 * (quad * s * s + 2.0 * (s * s + a2) / (d * d));
    };
    if (a2 > 0.0)
        p.poles = {-std::sqrt(a2), std::sqrt(a2)};
    p.formula = "hbar^2*(" + var + "^2/(8a^4) + 1/(" + var
              + "-a)^2 + 1/(" + var + "+a)^2)";
    return p;
}

Part1D harmonic(double k, const std::string& formula)
{
    Part1D p;
    p.v = [k](double s) { return k * s * s; };
    p.formula = formula;
    return p;
}

Part1D centrifugal(double k, double g, const std::string& formula)
{
    Part1D p;
    p.v = [k, g](double s) { return k * s * s + g / (s * s); };
    p.lo = 0.0;
    p.formula = formula;
    return p;
}

FamilyFormula closed1(std::string name, std::string formula, double e0, double e1, int kmax = -1)
{
    FamilyFormula f;
    f.name = std::move(name);
    f.formula = std::move(formula);
    f.kind = FamilyKind::Closed;
    f.e0 = e0;
    f.e1 = e1;
    f.k1_max = kmax;
    return f;
}

FamilyFormula closed2(std::string name, std::string formula, double e0, double e1, double e2)
{
    FamilyFormula f = closed1(std::move(name), std::move(formula), e0, e1);
    f.e2 = e2;
    f.two_index = true;
    return f;
}

FamilyFormula algebraic(std::string name, std::string formula, double e0, double e1,
                        std::vector<AffineRoot> roots, int pmax = -1)
{
    FamilyFormula f;
    f.name = std::move(name);
    f.formula = std::move(formula);
    f.kind = FamilyKind::Algebraic;
    f.e0 = e0;
    f.e1 = e1;
    f.k1_max = pmax;
    f.phi_roots = std::move(roots);
    return f;
}

AffineRoot R(double c0, double c1 = 0.0) { return AffineRoot{c0, c1}; }

// x(p+1−x) always contributes the zeros 0 and p+1
std::vector<AffineRoot> with_ends(AffineRoot r3, AffineRoot r4)
{
    return {R(0.0), R(1.0, 1.0), r3, r4};
}

} // namespace

const std::vector<PotentialId>& all_potentials()
{
    static const std::vector<PotentialId> v{PotentialId::ReducibleIso, PotentialId::ReducibleSW1,
                                            PotentialId::ReducibleSW2, PotentialId::P1,
                                            PotentialId::P2, PotentialId::P3, PotentialId::P4,
                                            PotentialId::P5, PotentialId::P6};
    return v;
}

std::string to_string(PotentialId id) { return names().at(id); }

PotentialId parse_potential(const std::string& name)
{
    for (const auto& [id, n] : names())
        if (n == name)
            return id;
    throw Error(ErrorCode::UnknownPotential, "no catalog entry '" + name + "'");
}

StructureFunction FactoredPhi::instantiate(double E, double u) const
{
    StructureFunction s;
    s.u = u;
    s.E = E;
    s.has_factored = true;
    s.c = c;
    for (int i = 0; i < 4; ++i)
        s.roots[i] = roots[i].at(E);
    return s;
}

double PotentialSpec::v(double x_, double y_) const { return evaluate(id, params, x_, y_); }

PotentialSpec make_potential(PotentialId id, const PotentialParams& prm)
{
    PotentialSpec s;
    s.id = id;
    s.params = prm;
    const double h = prm.hbar, h2 = h * h, w = prm.omega, w2 = w * w;
    const double a2 = prm.a2();
    const double a4 = a2 * a2;
    const double unit_a = h2 / std::abs(a2);  // ħ²/a0² or ħ²/a²
    const bool imag = prm.imaginary_a;

    switch (id) {
    case PotentialId::ReducibleIso:
        s.formula = "omega^2/2*(x^2+y^2)";
        s.x = harmonic(w2 / 2.0, "omega^2*x^2/2");
        s.y = harmonic(w2 / 2.0, "omega^2*y^2/2");
        s.closed_families = {closed2("iso", "E = omega*hbar*(k1+k2+1)", w * h, w * h, w * h)};
        s.v_min_catalogued = 0.0;
        break;
    case PotentialId::ReducibleSW1: {
        s.formula = "omega^2/2*(x^2+y^2) + b/x^2 + c/y^2";
        s.x = centrifugal(w2 / 2.0, prm.b, "omega^2*x^2/2 + b/x^2");
        s.y = centrifugal(w2 / 2.0, prm.c, "omega^2*y^2/2 + c/y^2");
        const double lb = 0.5 * (-1.0 + std::sqrt(1.0 + 8.0 * prm.b / h2));
        const double lc = 0.5 * (-1.0 + std::sqrt(1.0 + 8.0 * prm.c / h2));
        s.closed_families = {closed2("sw1", "E = hbar*omega*(2k1+l_b+3/2) + hbar*omega*(2k2+l_c+3/2)",
                                     h * w * (lb + lc + 3.0), 2.0 * h * w, 2.0 * h * w)};
        s.v_min_catalogued = 2.0 * w * (std::sqrt(prm.b / 2.0) + std::sqrt(prm.c / 2.0));
        break;
    }
    case PotentialId::ReducibleSW2: {
        s.formula = "omega^2/2*(4x^2+y^2) + b/y^2 + c*x";
        const double cc = prm.c;
        s.x.v = [w2, cc](double x) { return 2.0 * w2 * x * x + cc * x; };
        s.x.formula = "2*omega^2*x^2 + c*x";
        s.y = centrifugal(w2 / 2.0, prm.b, "omega^2*y^2/2 + b/y^2");
        const double lb = 0.5 * (-1.0 + std::sqrt(1.0 + 8.0 * prm.b / h2));
        s.closed_families = {closed2("sw2", "E = 2*omega*hbar*(k1+1/2) - c^2/(8*omega^2) + hbar*omega*(2k2+l_b+3/2)",
                                     w * h - cc * cc / (8.0 * w2) + h * w * (lb + 1.5), 2.0 * w * h,
                                     2.0 * h * w)};
        s.v_min_catalogued = -cc * cc / (8.0 * w2) + 2.0 * w * std::sqrt(prm.b / 2.0);
        break;
    }
    case PotentialId::P1: {
        s.formula = "hbar^2*[(x^2+y^2)/(8a^4) + 1/(x-a)^2 + 1/(x+a)^2]";
        s.x = inverse_square_pair(h, a2, 1.0 / (8.0 * a4), "x");
        s.y = harmonic(h2 / (8.0 * a4), "hbar^2*y^2/(8a^4)");
        CubicAlgebra alg = get_algebra(id, prm);
        s.algebra = alg;
        FactoredPhi phi;
        phi.c = alg.mu * alg.delta(0.0) / 8.0;
        phi.roots = {R(-0.5, -a2 / h2), R(0.5, a2 / h2), R(1.5, -a2 / h2), R(2.5, -a2 / h2)};
        s.phi = phi;
        if (imag) {
            s.algebraic_families = {
                algebraic("p1_a", "E = hbar^2*(p+2)/(2*a0^2)", unit_a, unit_a / 2.0,
                          with_ends(R(3.0, 1.0), R(4.0, 1.0))),
                algebraic("p1_b", "E = -hbar^2*p/(2*a0^2), p in {0,1}", 0.0, -unit_a / 2.0,
                          with_ends(R(3.0), R(2.0)), 1)};
            s.closed_families = {
                closed2("p1_doublet", "E = hbar^2*(k1+k2+2)/(2*a0^2)", unit_a, unit_a / 2.0, unit_a / 2.0),
                closed1("p1_singlet", "E = hbar^2*(k2-1)/(2*a0^2)", -unit_a / 2.0, unit_a / 2.0)};
            s.v_min_catalogued = -2.0 * unit_a;
        } else {
            FamilyFormula f = algebraic("p1_real", "E = hbar^2*(p+3)/(2*a^2)", 1.5 * unit_a, unit_a / 2.0,
                                        with_ends(R(-1.0), R(-3.0)));
            f.real_a_unverified = true;
            s.algebraic_families = {f};
        }
        break;
    }
    case PotentialId::P2: {
        s.formula = "omega^2/2*(9x^2+y^2)";
        s.x = harmonic(4.5 * w2, "9*omega^2*x^2/2");
        s.y = harmonic(0.5 * w2, "omega^2*y^2/2");
        CubicAlgebra alg = get_algebra(id, prm);
        s.algebra = alg;
        const double k = 1.0 / (6.0 * w * h);
        FactoredPhi phi;
        phi.c = alg.mu * alg.delta(0.0) / 8.0;
        phi.roots = {R(0.5, -k), R(1.0 / 6.0, k), R(0.5, k), R(5.0 / 6.0, k)};
        s.phi = phi;
        const double u = w * h;
        s.algebraic_families = {
            algebraic("p2_a", "E = 3*omega*hbar*(p+2/3)", 2.0 * u, 3.0 * u,
                      with_ends(R(2.0 / 3.0, 1.0), R(1.0 / 3.0, 1.0))),
            algebraic("p2_b", "E = 3*omega*hbar*(p+1)", 3.0 * u, 3.0 * u,
                      with_ends(R(2.0 / 3.0, 1.0), R(4.0 / 3.0, 1.0))),
            algebraic("p2_c", "E = 3*omega*hbar*(p+4/3)", 4.0 * u, 3.0 * u,
                      with_ends(R(5.0 / 3.0, 1.0), R(4.0 / 3.0, 1.0)))};
        s.closed_families = {closed2("p2_sep", "E = omega*hbar*(3k1+k2+2)", 2.0 * u, 3.0 * u, u)};
        s.v_min_catalogued = 0.0;
        break;
    }
    case PotentialId::P3: {
        s.formula = "omega^2/2*(9x^2+y^2) + hbar^2/y^2";
        s.x = harmonic(4.5 * w2, "9*omega^2*x^2/2");
        s.y = centrifugal(0.5 * w2, h2, "omega^2*y^2/2 + hbar^2/y^2");
        CubicAlgebra alg = get_algebra(id, prm);
        s.algebra = alg;
        const double k = 1.0 / (6.0 * w * h);
        FactoredPhi phi;
        phi.c = alg.mu * alg.delta(0.0) / 8.0;
        phi.roots = {R(0.5, -k), R(-1.0 / 6.0, k), R(0.5, k), R(7.0 / 6.0, k)};
        s.phi = phi;
        const double u = w * h;
        s.algebraic_families = {
            algebraic("p3_a", "E = 3*omega*hbar*(p+5/3)", 5.0 * u, 3.0 * u,
                      {R(0.0), R(5.0 / 3.0, 1.0), R(1.0, 1.0), R(7.0 / 3.0, 1.0)}),
            algebraic("p3_b", "E = 3*omega*hbar*(p+1)", 3.0 * u, 3.0 * u,
                      {R(0.0), R(1.0 / 3.0, 1.0), R(5.0 / 3.0, 1.0), R(1.0, 1.0)})};
        s.closed_families = {closed2("p3_sep", "E = omega*hbar*(3k1+2k2+4)", 4.0 * u, 3.0 * u, 2.0 * u)};
        s.v_min_catalogued = std::sqrt(2.0) * w * h;
        break;
    }
    case PotentialId::P4: {
        s.formula = "hbar^2*[(9x^2+y^2)/(8a^4) + 1/(y-a)^2 + 1/(y+a)^2]";
        s.x = harmonic(9.0 * h2 / (8.0 * a4), "9*hbar^2*x^2/(8a^4)");
        s.y = inverse_square_pair(h, a2, 1.0 / (8.0 * a4), "y");
        CubicAlgebra alg = get_algebra(id, prm);
        s.algebra = alg;
        FactoredPhi phi;
        phi.c = alg.mu * alg.delta(0.0) / 8.0;
        const double k = a2 / (3.0 * h2);
        phi.roots = {R(-0.5, k), R(0.5, -k), R(5.0 / 6.0, k), R(7.0 / 6.0, k)};
        s.phi = phi;
        const double u = unit_a;
        if (imag) {
            s.algebraic_families = {
                algebraic("p4_a", "E = 3*hbar^2*p/(2*a0^2)", 0.0, 1.5 * u,
                          with_ends(R(4.0 / 3.0), R(5.0 / 3.0))),
                algebraic("p4_b", "E = 3*hbar^2*(p+4/3)/(2*a0^2)", 2.0 * u, 1.5 * u,
                          with_ends(R(-4.0 / 3.0), R(1.0 / 3.0))),
                algebraic("p4_c", "E = 3*hbar^2*(p+5/3)/(2*a0^2)", 2.5 * u, 1.5 * u,
                          with_ends(R(-5.0 / 3.0), R(-1.0 / 3.0)))};
            s.closed_families = {
                closed2("p4_doublet", "E = hbar^2*(3k1+k2+3)/(2*a0^2)", 1.5 * u, 1.5 * u, 0.5 * u),
                closed1("p4_singlet", "E = 3*hbar^2*k1/(2*a0^2)", 0.0, 1.5 * u)};
            s.v_min_catalogued = -2.0 * u;
        } else {
            s.algebraic_families = {
                algebraic("p4_real_a", "E = 3*hbar^2*(p+2)/(2*a^2)", 3.0 * u, 1.5 * u,
                          with_ends(R(7.0 / 3.0, 1.0), R(8.0 / 3.0, 1.0))),
                algebraic("p4_real_b", "E = 3*hbar^2*(p+2/3)/(2*a^2)", u, 1.5 * u,
                          with_ends(R(4.0 / 3.0, 1.0), R(-1.0 / 3.0, 1.0))),
                algebraic("p4_real_c", "E = 3*hbar^2*(p+1/3)/(2*a^2)", 0.5 * u, 1.5 * u,
                          with_ends(R(2.0 / 3.0, 1.0), R(-2.0 / 3.0, 1.0)))};
        }
        break;
    }
    case PotentialId::P5: {
        s.formula = "hbar^2*[(x^2+y^2)/(8a^4) + 1/y^2 + 1/(x-a)^2 + 1/(x+a)^2]";
        s.x = inverse_square_pair(h, a2, 1.0 / (8.0 * a4), "x");
        s.y = centrifugal(h2 / (8.0 * a4), h2, "hbar^2*(y^2/(8a^4) + 1/y^2)");
        const double u = unit_a;
        if (imag) {
            s.closed_families = {
                closed2("p5_doublet", "E = hbar^2*(k1+2k2+5)/(2*a0^2)", 2.5 * u, 0.5 * u, u),
                closed1("p5_singlet", "E = hbar^2*(2k2+2)/(2*a0^2)", u, u)};
        }
        break;
    }
    case PotentialId::P6: {
        s.formula = "hbar^2*[(x^2+y^2)/(8a^4) + 1/(y+a)^2 + 1/(y-a)^2 + 1/(x+a)^2 + 1/(x-a)^2]";
        s.x = inverse_square_pair(h, a2, 1.0 / (8.0 * a4), "x");
        s.y = inverse_square_pair(h, a2, 1.0 / (8.0 * a4), "y");
        const double u = unit_a;
        if (imag) {
            s.closed_families = {
                closed2("p6_doublet", "E = hbar^2*(k1+k2+3)/(2*a0^2)", 1.5 * u, 0.5 * u, 0.5 * u),
                closed1("p6_singlet_x", "E = hbar^2*k2/(2*a0^2)", 0.0, 0.5 * u),
                closed1("p6_singlet_y", "E = hbar^2*k1/(2*a0^2)", 0.0, 0.5 * u),
                closed1("p6_ground", "E = -3*hbar^2/(2*a0^2)", -1.5 * u, 0.0, 0)};
            s.v_min_catalogued = -4.0 * u;
        }
        break;
    }
    }
    return s;
}

double evaluate(PotentialId id, const PotentialParams& params, double x, double y)
{
    const PotentialSpec s = make_potential(id, params);
    auto check = [](const Part1D& part, double t, const char* var) {
        for (double pole : part.poles)
            if (t == pole) {
                std::ostringstream os;
                os << "V is singular at " << var << " = " << t;
                throw Error(ErrorCode::SingularPoint, os.str());
            }
        if (part.half_line() && t == 0.0) {
            std::ostringstream os;
            os << "V is singular at " << var << " = 0";
            throw Error(ErrorCode::SingularPoint, os.str());
        }
    };
    check(s.x, x, "x");
    check(s.y, y, "y");
    return s.x.v(x) + s.y.v(y);
}

CubicAlgebra get_algebra(PotentialId id, const PotentialParams& prm)
{
    const double h = prm.hbar, h2 = h * h, h4 = h2 * h2, h6 = h4 * h2, h8 = h6 * h2, h10 = h8 * h2;
    const double w = prm.omega, w2 = w * w, w4 = w2 * w2;
    const double a2 = prm.a2(), a4 = a2 * a2, a6 = a4 * a2, a8 = a4 * a4;
    CubicAlgebra alg;
    alg.mu = -2.0 * h2;
    // √δ = 2ħ²/a² (p1) or 6ħ²/a² (p4) continued analytically; negative when a² = −a0²
    const int branch_a = a2 < 0.0 ? -1 : 1;
    switch (id) {
    case PotentialId::P1:
        alg.sqrt_delta_branch = branch_a;
        alg.delta = {4.0 * h4 / a4};
        alg.nu = {6.0 * h4 / a2, -6.0 * h2};
        alg.xi = {2.0 * h6 / a4, 8.0 * h4 / a2};
        alg.zeta = {-6.0 * h8 / a6, -2.0 * h6 / a4, -8.0 * h4 / a2, 8.0 * h2};
        alg.casimir = {-3.0 * h10 / a8, -40.0 * h8 / a6, 16.0 * h6 / a4, 32.0 * h4 / a2, -16.0 * h2};
        return alg;
    case PotentialId::P2:
        alg.delta = {144.0 * w2 * h2};
        alg.nu = {0.0, 6.0 * h2};
        alg.xi = {-56.0 * w2 * h4};
        alg.zeta = {0.0, 72.0 * w2 * h4, 0.0, -8.0 * h2};
        alg.casimir = {720.0 * w4 * h6, 0.0, 64.0 * w2 * h4, 0.0, -16.0 * h2};
        return alg;
    case PotentialId::P3:
        alg.delta = {144.0 * w2 * h2};
        alg.nu = {0.0, 6.0 * h2};
        alg.xi = {-8.0 * w2 * h4};
        alg.zeta = {0.0, 72.0 * w2 * h4, 0.0, -8.0 * h2};
        alg.casimir = {-1008.0 * w4 * h6, 0.0, 256.0 * w2 * h4, 0.0, -16.0 * h2};
        return alg;
    case PotentialId::P4:
        alg.sqrt_delta_branch = branch_a;
        alg.delta = {36.0 * h4 / a4};
        // the A²H term enters with +6ħ²; the opposite sign does not factor into the
        // catalogued structure function
        alg.nu = {0.0, 6.0 * h2};
        alg.xi = {10.0 * h6 / a4};
        alg.zeta = {-24.0 * h8 / a6, 18.0 * h6 / a4, 0.0, -8.0 * h2};
        alg.casimir = {-171.0 * h10 / a8, 96.0 * h8 / a6, 112.0 * h6 / a4, 0.0, -16.0 * h2};
        return alg;
    case PotentialId::P5:
    case PotentialId::P6:
        throw Error(ErrorCode::NoFiniteCubicAlgebra,
                    to_string(id) + ": the integrals do not close in a finite cubic algebra");
    default:
        throw Error(ErrorCode::NotCatalogued, to_string(id) + ": algebra not catalogued");
    }
}

double numeric_minimum(const Part1D& part, double scale)
{
    const double lo = part.half_line() ? 1e-6 * scale : -60.0 * scale;
    const double hi = std::isfinite(part.hi) ? part.hi : 60.0 * scale;
    const int n = 24000;
    const double step = (hi - lo) / n;
    double best = std::numeric_limits<double>::infinity();
    double xb = lo;
    for (int i = 0; i <= n; ++i) {
        const double t = lo + i * step;
        const double v = part.v(t);
        if (std::isfinite(v) && v < best) {
            best = v;
            xb = t;
        }
    }
    // golden-section refinement inside the bracketing cell
    double a = std::max(lo, xb - step), b = std::min(hi, xb + step);
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a), d = a + g * (b - a);
    for (int it = 0; it < 200 && (b - a) > 1e-14 * std::max(1.0, std::abs(xb)); ++it) {
        if (part.v(c) < part.v(d))
            b = d;
        else
            a = c;
        c = b - g * (b - a);
        d = a + g * (b - a);
    }
    return std::min(best, part.v(0.5 * (a + b)));
}

double v_min(const PotentialSpec& spec)
{
    if (spec.v_min_catalogued)
        return *spec.v_min_catalogued;
    const double scale = std::max({1.0, spec.params.a, 1.0 / spec.params.omega});
    return numeric_minimum(spec.x, scale) + numeric_minimum(spec.y, scale);
}

void merge_levels(Spectrum& s, double tol)
{
    std::stable_sort(s.entries.begin(), s.entries.end(),
                     [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.energy < b.energy; });
    s.merged.clear();
    for (const auto& e : s.entries) {
        if (!s.merged.empty() && std::abs(e.energy - s.merged.back().energy) <= tol) {
            Level& l = s.merged.back();
            l.degeneracy += e.degeneracy;
            if (std::find(l.families.begin(), l.families.end(), e.family) == l.families.end())
                l.families.push_back(e.family);
        } else {
            s.merged.push_back(Level{e.energy, e.degeneracy, {e.family}});
        }
    }
}

namespace {

void enumerate_closed(const FamilyFormula& f, double E_max, std::vector<SpectrumEntry>& out)
{
    const double tol = 1e-9 * std::max(1.0, std::abs(E_max));
    std::map<long long, SpectrumEntry> by_energy;
    auto add = [&](double E) {
        const long long key = std::llround(E * 1e8);
        auto& e = by_energy[key];
        e.energy = E;
        e.family = f.name;
        ++e.degeneracy;
    };
    const int cap1 = f.k1_max >= 0 ? f.k1_max : 100000;
    for (int k1 = 0; k1 <= cap1; ++k1) {
        const double base = f.e0 + f.e1 * k1;
        if (f.e1 >= 0.0 && base > E_max + tol && (!f.two_index || f.e2 >= 0.0))
            break;
        if (!f.two_index) {
            if (base <= E_max + tol)
                add(base);
            if (f.e1 == 0.0)
                break;
            continue;
        }
        const int cap2 = f.k2_max >= 0 ? f.k2_max : 100000;
        for (int k2 = 0; k2 <= cap2; ++k2) {
            const double E = base + f.e2 * k2;
            if (E > E_max + tol) {
                if (f.e2 > 0.0)
                    break;
                continue;
            }
            add(E);
            if (f.e2 == 0.0)
                break;
        }
    }
    for (auto& [k, e] : by_energy)
        out.push_back(e);
}

} // namespace

Spectrum algebraic_reference(PotentialId id, const PotentialParams& params, int p_max)
{
    const PotentialSpec s = make_potential(id, params);
    Spectrum out;
    out.params = params;
    const double vm = (id == PotentialId::P5 || id == PotentialId::P6) ? 0.0 : v_min(s);
    for (const auto& f : s.algebraic_families) {
        const int cap = f.k1_max >= 0 ? std::min(f.k1_max, p_max) : p_max;
        for (int p = 0; p <= cap; ++p) {
            SpectrumEntry e;
            e.energy = f.e0 + f.e1 * p;
            e.degeneracy = p + 1;
            e.family = f.name;
            e.p = p;
            e.physical = e.energy >= vm - 1e-12 * std::max(1.0, std::abs(vm));
            out.entries.push_back(e);
        }
    }
    merge_levels(out, 1e-8);
    return out;
}

Spectrum reference_spectrum(PotentialId id, const PotentialParams& params, double E_max)
{
    const PotentialSpec s = make_potential(id, params);
    if (s.closed_families.empty()) {
        Spectrum a;
        a.params = params;
        for (const auto& f : s.algebraic_families) {
            const int cap = f.k1_max >= 0 ? f.k1_max : 100000;
            for (int p = 0; p <= cap; ++p) {
                const double E = f.e0 + f.e1 * p;
                if (E > E_max + 1e-9)
                    break;
                a.entries.push_back(SpectrumEntry{E, p + 1, f.name, p, true, true});
            }
        }
        merge_levels(a, 1e-8);
        return a;
    }
    Spectrum out;
    out.params = params;
    for (const auto& f : s.closed_families)
        enumerate_closed(f, E_max, out.entries);
    merge_levels(out, 1e-8);
    return out;
}

} // namespace cubalg
