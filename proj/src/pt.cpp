#include "cubalg/pt.hpp"

#include "cubalg/error.hpp"
#include "cubalg/special.hpp"

#include <algorithm>
#include <random>
#include <cmath>
#include <sstream>

namespace cubalg {

using C = std::complex<double>;

std::string to_string(PtPart part)
{
    switch (part) {
    case PtPart::HarmonicY:
        return "y";
    case PtPart::P1X:
        return "x";
    case PtPart::P1XPartner1:
        return "h1";
    case PtPart::P1XPartner2:
        return "h2";
    }
    return "?";
}

PtPart parse_pt_part(const std::string& name)
{
    for (PtPart p : {PtPart::HarmonicY, PtPart::P1X, PtPart::P1XPartner1, PtPart::P1XPartner2})
        if (to_string(p) == name)
            return p;
    throw Error(ErrorCode::UnknownPotential, "no complexified part '" + name + "'");
}

std::function<C(double)> pt_potential(PtPart part, double a, double hbar, double eps)
{
    const double h2 = hbar * hbar, a2 = a * a, a4 = a2 * a2;
    const C shift(0.0, -eps);
    switch (part) {
    case PtPart::HarmonicY:
        return [=](double x) {
            const C z = x + shift;
            return h2 * z * z / (8.0 * a4);
        };
    case PtPart::P1X:
    case PtPart::P1XPartner1: {
        const double c = part == PtPart::P1X ? 0.0 : -0.75 * h2 / a2;
        return [=](double x) {
            const C z = x + shift;
            return h2 * (z * z / (8.0 * a4) + 1.0 / ((z - a) * (z - a)) + 1.0 / ((z + a) * (z + a))) + c;
        };
    }
    case PtPart::P1XPartner2:
        return [=](double x) {
            const C z = x + shift;
            return h2 * z * z / (8.0 * a4) - 1.25 * h2 / a2;
        };
    }
    return {};
}

namespace {

std::vector<C> coarse_eigenvalues(const ComplexGridHamiltonian& ham, int k)
{
    std::vector<C> v = complex_symmetric_tridiagonal_eigenvalues(ham.diagonal(), ham.off_diagonal());
    std::sort(v.begin(), v.end(), [](C x, C y) { return x.real() < y.real(); });
    v.resize(std::min<std::size_t>(k, v.size()));
    return v;
}

// Rayleigh-quotient iteration with the unconjugated bilinear form of a complex-symmetric matrix
std::pair<C, std::vector<C>> refine(const ComplexGridHamiltonian& ham, C guess)
{
    const int n = ham.grid.n;
    const auto d = ham.diagonal();
    const double e = ham.off_diagonal();
    // a random start overlaps every smooth eigenvector; a structured one can miss odd states
    std::mt19937 rng(7);
    std::normal_distribution<double> nd;
    std::vector<C> v(n);
    for (auto& c : v)
        c = C(nd(rng), nd(rng));
    C lambda = guess;
    for (int it = 0; it < 8; ++it) {
        const C s = lambda + C(1e-11, 1e-11) * std::max(1.0, std::abs(lambda));
        v = complex_tridiagonal_solve(d, e, s, v);
        double nrm = 0.0;
        for (const C& c : v)
            nrm += std::norm(c);
        nrm = std::sqrt(nrm);
        for (C& c : v)
            c /= nrm;
        if (it < 3)
            continue;
        C num = 0.0, den = 0.0;
        for (int i = 0; i < n; ++i) {
            C hv = d[i] * v[i];
            if (i > 0)
                hv += e * v[i - 1];
            if (i + 1 < n)
                hv += e * v[i + 1];
            num += v[i] * hv;
            den += v[i] * v[i];
        }
        const C next = num / den;
        const bool done = std::abs(next - lambda) <= 1e-14 * std::max(1.0, std::abs(next));
        lambda = next;
        if (done)
            break;
    }
    return {lambda, v};
}

} // namespace

PtReport pt_eigenvalues(PtPart part, double a, double hbar, double eps, int k, const PtOptions& opts)
{
    if (!(eps > 0.0))
        throw std::invalid_argument("the complex shift eps must be positive");
    PtReport rep;
    rep.part = part;
    rep.a = a;
    rep.hbar = hbar;
    rep.eps = eps;
    const double ell = std::sqrt(2.0) * a;
    rep.L = opts.box > 0.0 ? opts.box : ell * (std::sqrt(2.0 * k + 1.0) + 8.0);
    // the seed grid has to resolve the shifted pole, so its spacing scales with eps
    const int n_seed = std::max(opts.n_coarse, static_cast<int>(std::ceil(16.0 * rep.L / eps)));
    ComplexGridHamiltonian ham{Grid1D{rep.L, n_seed, false}, pt_potential(part, a, hbar, eps), hbar};
    validate(ham.grid);
    std::vector<C> est = coarse_eigenvalues(ham, k);
    k = static_cast<int>(est.size());

    std::vector<std::vector<C>> raw;
    std::vector<std::vector<C>> rich;
    std::vector<std::vector<C>> vecs;
    std::vector<double> err(k, 0.0);
    bool converged = false;
    ham.grid.n = std::max(opts.n0, n_seed);
    for (int j = 0; j <= opts.max_doublings && !converged; ++j) {
        if (j > 0)
            ham.grid.n = 2 * (ham.grid.n + 1) - 1;
        rep.n.push_back(ham.grid.n);
        std::vector<C> vals(k);
        vecs.assign(k, {});
        for (int i = 0; i < k; ++i) {
            auto [lam, v] = refine(ham, est[i]);
            vals[i] = lam;
            vecs[i] = std::move(v);
        }
        raw.push_back(vals);
        if (j == 0) {
            est = vals;
            continue;
        }
        std::vector<C> r(k);
        for (int i = 0; i < k; ++i)
            r[i] = (4.0 * vals[i] - raw[j - 1][i]) / 3.0;
        rich.push_back(r);
        est = vals;
        if (rich.size() < 2)
            continue;
        double worst = 0.0;
        for (int i = 0; i < k; ++i) {
            err[i] = std::abs(r[i] - rich[rich.size() - 2][i]);
            worst = std::max(worst, err[i]);
        }
        converged = worst < opts.tol;
    }
    if (!converged) {
        std::ostringstream os;
        os << "complexified eigenvalues not converged after " << opts.max_doublings << " doublings";
        throw Error(ErrorCode::GridNotConverged, os.str());
    }
    for (int i = 0; i < k; ++i) {
        PtLevel l;
        l.energy = rich.back()[i];
        l.error = err[i];
        try {
            const PseudoNorm pn = pseudo_norm(vecs[i], ham.grid);
            l.pseudo_norm = pn.value;
            l.sigma = pn.sigma;
        } catch (const Error&) {
            l.sigma = 0;
        }
        rep.levels.push_back(l);
    }
    return rep;
}

PtSpectrum2D pt_spectrum_2d(double a, double hbar, double eps, int k, const PtOptions& opts)
{
    PtSpectrum2D out;
    out.x = pt_eigenvalues(PtPart::P1X, a, hbar, eps, k, opts);
    out.y = pt_eigenvalues(PtPart::HarmonicY, a, hbar, eps, k, opts);
    std::vector<SpectrumEntry> all;
    for (std::size_t i = 0; i < out.x.levels.size(); ++i)
        for (std::size_t j = 0; j < out.y.levels.size(); ++j) {
            SpectrumEntry e;
            e.energy = (out.x.levels[i].energy + out.y.levels[j].energy).real();
            e.degeneracy = 1;
            e.family = "n=" + std::to_string(i) + ",m=" + std::to_string(j);
            all.push_back(e);
        }
    std::stable_sort(all.begin(), all.end(),
                     [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.energy < b.energy; });
    all.resize(std::min<std::size_t>(all.size(), k));
    out.spectrum.entries = all;
    merge_levels(out.spectrum, 1e-6);
    return out;
}

PseudoNorm pseudo_norm(const std::vector<C>& psi, const Grid1D& grid)
{
    if (grid.half_line || static_cast<int>(psi.size()) != grid.n)
        throw std::invalid_argument("pseudo-norm needs the full symmetric grid");
    const int n = grid.n;
    const double h = grid.h();
    auto sum = [&](int stride) {
        C s = 0.0;
        double l2 = 0.0;
        // the half-resolution sum keeps the mirror pairing by stepping out from the center
        for (int i = 0; i < n; ++i) {
            const int off = i - (n - 1) / 2;
            if (off % stride != 0)
                continue;
            s += std::conj(psi[n - 1 - i]) * psi[i];
            l2 += std::norm(psi[i]);
        }
        return std::pair{s * (h * stride), l2 * h * stride};
    };
    const auto [s1, l1] = sum(1);
    const auto [s2, l2] = sum(2);
    PseudoNorm out;
    const C v = s1 / l1;
    out.value = v.real();
    out.imag = v.imag();
    out.quadrature_error = std::abs(v - s2 / l2);
    if (std::abs(v) < 1e-10)
        throw Error(ErrorCode::SelfOrthogonal, "pseudo-norm vanishes: exceptional point");
    out.sigma = out.value > 0.0 ? 1 : -1;
    return out;
}

std::complex<double> pt_harmonic_state(int m, double a, double eps, double x)
{
    const C z(x, -eps);
    return std::exp(-z * z / (4.0 * a * a)) * hermite(m, z / (std::sqrt(2.0) * a));
}

std::complex<double> pt_partner_zero_mode(double a, double eps, double x)
{
    const C z(x, -eps);
    return std::exp(-z * z / (4.0 * a * a)) * (a * a - z * z);
}

std::complex<double> pt_raised_state(int n, double a, double eps, double x)
{
    if (n < 0)
        throw std::invalid_argument("raised state index must be nonnegative");
    const C z(x, -eps);
    const C t = z / (std::sqrt(2.0) * a);
    return std::exp(-z * z / (4.0 * a * a))
         * (2.0 * z / (z * z - a * a) * hermite(n + 3, t) - 2.0 * (n + 3) / (std::sqrt(2.0) * a) * hermite(n + 2, t));
}

ComplexResidual pt_eigen_residual(PtPart part, double a, double hbar, double eps, const Grid1D& grid,
                                  const std::function<std::complex<double>(double)>& psi)
{
    validate(grid);
    const auto v = pt_potential(part, a, hbar, eps);
    const int n = grid.n;
    const double h = grid.h();
    std::vector<C> f(n + 4, 0.0);  // two ghost points each side, sampled from the closed form
    for (int i = -2; i < n + 2; ++i)
        f[i + 2] = psi(grid.x(0) + i * h);
    std::vector<C> hf(n);
    C num = 0.0, den = 0.0;
    double l2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const int j = i + 2;
        const C d2 = (-f[j - 2] + 16.0 * f[j - 1] - 30.0 * f[j] + 16.0 * f[j + 1] - f[j + 2]) / (12.0 * h * h);
        hf[i] = -0.5 * hbar * hbar * d2 + v(grid.x(i)) * f[j];
        num += f[j] * hf[i];
        den += f[j] * f[j];
        l2 += std::norm(f[j]);
    }
    ComplexResidual out;
    out.energy = num / den;
    double r = 0.0;
    for (int i = 0; i < n; ++i)
        r += std::norm(hf[i] - out.energy * f[i + 2]);
    out.residual = std::sqrt(r / l2);
    return out;
}

} // namespace cubalg
