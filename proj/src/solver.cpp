#include "cubalg/solver.hpp"

#include "cubalg/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace cubalg {

namespace {

bool positive(const StructureFunction& s, double x)
{
    double scale = std::abs(s.c);
    for (double r : s.roots)
        scale *= std::max(1.0, std::abs(x + s.u - r));
    return s.factored_at(x) > 1e-12 * scale;
}

double poly_scale(const Poly& P, double z)
{
    double m = 0.0, zk = 1.0;
    for (double c : P.coeffs()) {
        m += std::abs(c) * zk;
        zk *= std::max(1.0, std::abs(z));
    }
    return m;
}

// reorder roots to follow the predicted branch positions
std::vector<double> match_branches(const std::vector<double>& predicted, std::vector<double> roots)
{
    if (roots.size() != predicted.size() || roots.size() > 6)
        return roots;
    std::sort(roots.begin(), roots.end());
    std::vector<double> best = roots;
    double best_cost = std::numeric_limits<double>::infinity();
    do {
        double cost = 0.0;
        for (std::size_t i = 0; i < roots.size(); ++i)
            cost += std::abs(roots[i] - predicted[i]);
        if (cost < best_cost) {
            best_cost = cost;
            best = roots;
        }
    } while (std::next_permutation(roots.begin(), roots.end()));
    return best;
}

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << (std::abs(v) < 5e-7 ? 0.0 : v);
    return os.str();
}

} // namespace

std::string family_label(int family_id)
{
    const int i = family_id / 4 + 1, j = family_id % 4 + 1;
    std::ostringstream os;
    os << "u=r" << i << ", p+1=r" << j << "-r" << i;
    return os.str();
}

std::vector<RepresentationSolution> solve_factored(const FactoredPhi& phi, int p, bool keep_non_unitary)
{
    if (p < 0)
        throw std::invalid_argument("p must be nonnegative");
    std::vector<RepresentationSolution> out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == j)
                continue;
            const double slope = phi.roots[j].c1 - phi.roots[i].c1;
            if (slope == 0.0)
                continue;
            const double E = (p + 1 - (phi.roots[j].c0 - phi.roots[i].c0)) / slope;
            const double u = phi.roots[i].at(E);
            const StructureFunction s = phi.instantiate(E, u);

            RepresentationSolution r;
            r.u = u;
            r.p = p;
            r.energy = E;
            r.dimension = p + 1;
            r.family_id = 4 * i + j;
            r.unitary = true;
            for (int x = 1; x <= p; ++x) {
                r.phi_values.push_back(s.factored_at(x));
                if (!positive(s, x))
                    r.unitary = false;
            }
            if (!r.unitary && !keep_non_unitary)
                continue;
            const bool dup = std::any_of(out.begin(), out.end(), [&](const RepresentationSolution& o) {
                return o.p == p && std::abs(o.energy - E) <= 1e-9 * std::max(1.0, std::abs(E));
            });
            if (!dup)
                out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.energy < b.energy; });
    return out;
}

std::vector<RepresentationSolution> solve_generic(const CubicAlgebra& alg, int p, double E_lo,
                                                  double E_hi, int grid)
{
    std::vector<RepresentationSolution> out;
    if (!(E_hi > E_lo) || grid < 2)
        return out;
    if (alg.beta != 0.0)
        throw std::invalid_argument("solve_generic handles the beta = 0 case");

    struct Sample {
        double E;
        Poly P;
        std::vector<double> u;
    };
    auto sample = [&](double E) {
        Sample s{E, structure_polynomial(alg, E), {}};
        s.u = real_roots(s.P, 1e-6);
        return s;
    };
    auto g = [p](const Sample& s, std::size_t k) {
        const double z = s.u[k] + p + 1;
        return std::pair{s.P(z), poly_scale(s.P, z)};
    };

    // an irrational offset keeps grid nodes off the rational energies of the catalog
    const double step = (E_hi - E_lo) / grid;
    const double shift = step * (std::sqrt(2.0) - 1.0) * 0.5;
    std::vector<double> Es;
    Es.push_back(E_lo);
    for (int i = 0; i < grid; ++i) {
        const double E = E_lo + shift + i * step;
        if (E > E_lo && E < E_hi)
            Es.push_back(E);
    }
    Es.push_back(E_hi);

    // roots are tracked by linear extrapolation so that a branch keeps its identity through
    // crossings of the sorted order
    std::vector<Sample> S;
    S.reserve(Es.size());
    for (double E : Es) {
        Sample s = sample(E);
        const std::size_t n = S.size();
        if (n >= 1 && S[n - 1].u.size() == s.u.size()) {
            std::vector<double> pred = S[n - 1].u;
            if (n >= 2 && S[n - 2].u.size() == s.u.size()) {
                const double t = (E - S[n - 1].E) / (S[n - 1].E - S[n - 2].E);
                for (std::size_t k = 0; k < pred.size(); ++k)
                    pred[k] += t * (S[n - 1].u[k] - S[n - 2].u[k]);
            }
            s.u = match_branches(pred, s.u);
        }
        S.push_back(std::move(s));
    }
    auto sample_between = [&](double E, const Sample& a, const Sample& b) {
        Sample s = sample(E);
        if (s.u.size() == a.u.size()) {
            const double t = (E - a.E) / (b.E - a.E);
            std::vector<double> pred(a.u.size());
            for (std::size_t k = 0; k < pred.size(); ++k)
                pred[k] = a.u[k] + t * (b.u[k] - a.u[k]);
            s.u = match_branches(pred, s.u);
        }
        return s;
    };
    auto rel = [&](const Sample& s, std::size_t k) {
        auto [v, m] = g(s, k);
        return v / std::max(m, std::numeric_limits<double>::min());
    };
    const double zero = 1e-10;

    auto record = [&](double E, std::size_t k, std::size_t count, const Sample& a, const Sample& b) {
        const Sample s = sample_between(E, a, b);
        if (s.u.size() != count)
            return;
        auto [gv, mv] = g(s, k);
        // a root inside a near-double cluster is only accurate to about the square root of
        // machine precision
        double sep = std::numeric_limits<double>::infinity();
        for (std::size_t m = 0; m < s.u.size(); ++m)
            if (m != k)
                sep = std::min(sep, std::abs(s.u[m] - s.u[k]));
        const double tol = sep < 1e-5 * std::max(1.0, std::abs(s.u[k])) ? 1e-6 : 1e-8;
        if (std::abs(gv) > tol * mv)
            return;
        RepresentationSolution r;
        r.u = s.u[k];
        r.p = p;
        r.energy = E;
        r.dimension = p + 1;
        std::size_t j = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t m = 0; m < s.u.size(); ++m) {
            if (m == k)
                continue;
            const double d = std::abs(s.u[m] - (s.u[k] + p + 1));
            if (d < best) {
                best = d;
                j = m;
            }
        }
        r.family_id = static_cast<int>(4 * k + j);
        r.unitary = true;
        for (int x = 1; x <= p; ++x) {
            const double z = x + r.u;
            const double v = s.P(z);
            r.phi_values.push_back(v);
            if (!(v > 1e-9 * poly_scale(s.P, z)))
                r.unitary = false;
        }
        const bool dup = std::any_of(out.begin(), out.end(), [&](const RepresentationSolution& o) {
            return std::abs(o.energy - E) <= 1e-7 * std::max(1.0, std::abs(E));
        });
        if (!dup)
            out.push_back(r);
    };

    for (std::size_t n = 1; n < S.size(); ++n) {
        const Sample& a = S[n - 1];
        const Sample& b = S[n];
        if (a.u.size() != b.u.size())
            continue;
        for (std::size_t k = 0; k < b.u.size(); ++k) {
            const double ga = rel(a, k), gb = rel(b, k);
            if (std::abs(ga) <= zero || std::abs(gb) <= zero)
                continue;
            if (ga * gb < 0.0) {
                double lo = a.E, hi = b.E, glo = ga;
                bool ok = true;
                for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(lo)); ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const Sample sm = sample_between(mid, a, b);
                    if (sm.u.size() != b.u.size()) {
                        ok = false;
                        break;
                    }
                    const double gm = rel(sm, k);
                    if (gm == 0.0) {
                        lo = hi = mid;
                        break;
                    }
                    if ((gm < 0.0) == (glo < 0.0)) {
                        lo = mid;
                        glo = gm;
                    } else {
                        hi = mid;
                    }
                }
                if (ok)
                    record(0.5 * (lo + hi), k, b.u.size(), a, b);
                continue;
            }
            // touching zero (double root of Φ(p+1) in E) or a zero on a grid node
            if (n + 1 >= S.size() || S[n + 1].u.size() != b.u.size())
                continue;
            const double gc = rel(S[n + 1], k);
            if (std::abs(gc) <= zero || ga * gc <= 0.0)
                continue;
            if (!(std::abs(gb) < std::abs(ga) && std::abs(gb) < std::abs(gc)))
                continue;
            double lo = a.E, hi = S[n + 1].E;
            const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
            bool ok = true;
            const Sample& c3 = S[n + 1];
            auto f = [&](double E) {
                const Sample sm = sample_between(E, a, c3);
                if (sm.u.size() != b.u.size()) {
                    ok = false;
                    return 0.0;
                }
                return std::abs(rel(sm, k));
            };
            double c = hi - phi * (hi - lo), d = lo + phi * (hi - lo);
            double fc = f(c), fd = f(d);
            for (int it = 0; it < 120 && ok && hi - lo > 1e-13 * std::max(1.0, std::abs(lo)); ++it) {
                if (fc < fd) {
                    hi = d;
                    d = c;
                    fd = fc;
                    c = hi - phi * (hi - lo);
                    fc = f(c);
                } else {
                    lo = c;
                    c = d;
                    fc = fd;
                    d = lo + phi * (hi - lo);
                    fd = f(d);
                }
            }
            if (ok)
                record(0.5 * (lo + hi), k, b.u.size(), a, c3);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.energy < b.energy; });
    return out;
}

void physical_filter(std::vector<RepresentationSolution>& solutions, double v_min)
{
    const double tol = 1e-12 * std::max(1.0, std::abs(v_min));
    for (auto& s : solutions)
        s.physical = s.energy >= v_min - tol;
}

AlgebraicSpectrum assemble_spectrum(PotentialId id, const PotentialParams& params, int p_max)
{
    const PotentialSpec spec = make_potential(id, params);
    if (!spec.phi) {
        get_algebra(id, params);  // raises the appropriate error
        throw Error(ErrorCode::NotCatalogued, to_string(id) + ": no factored structure function");
    }
    AlgebraicSpectrum out;
    out.id = id;
    out.params = params;
    out.v_min = v_min(spec);

    std::map<int, FamilySpectrum> fam;
    for (int p = 0; p <= p_max; ++p) {
        auto sols = solve_factored(*spec.phi, p);
        physical_filter(sols, out.v_min);
        for (const auto& s : sols) {
            FamilySpectrum& f = fam[s.family_id];
            if (f.family_id < 0) {
                const int i = s.family_id / 4, j = s.family_id % 4;
                const double slope = spec.phi->roots[j].c1 - spec.phi->roots[i].c1;
                const double d0 = spec.phi->roots[j].c0 - spec.phi->roots[i].c0;
                f.family_id = s.family_id;
                f.label = family_label(s.family_id);
                f.e1 = 1.0 / slope;
                f.e0 = (1.0 - d0) / slope;
                f.formula = "E = " + fmt(f.e0) + (f.e1 < 0 ? " - " : " + ") + fmt(std::abs(f.e1)) + "*p";
            }
            f.entries.push_back(s);
        }
    }
    for (auto& [k, f] : fam) {
        out.families.push_back(f);
        for (const auto& s : f.entries) {
            SpectrumEntry e;
            e.energy = s.energy;
            e.degeneracy = s.dimension;
            e.family = f.label;
            e.p = s.p;
            e.unitary = s.unitary;
            e.physical = s.physical;
            out.spectrum.entries.push_back(e);
        }
    }
    out.spectrum.params = params;
    merge_levels(out.spectrum, 1e-8);
    return out;
}

} // namespace cubalg
