#include "cubalg/susy.hpp"

#include "cubalg/error.hpp"
#include "cubalg/special.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace cubalg {

FactorizedPair partner_pair_p1(double a0, double hbar)
{
    FactorizedPair p;
    const double a2 = a0 * a0, s = hbar / std::sqrt(2.0);
    p.w.hbar = hbar;
    p.w.a0 = a0;
    p.w.W = [=](double x) { return s * (x / (2.0 * a2) + 2.0 * x / (a2 + x * x)); };
    p.w.dW = [=](double x) {
        const double d = a2 + x * x;
        return s * (1.0 / (2.0 * a2) + 2.0 * (a2 - x * x) / (d * d));
    };
    const auto W = p.w.W, dW = p.w.dW;
    p.h1 = [=](double x) { return W(x) * W(x) - s * dW(x); };
    p.h2 = [=](double x) { return W(x) * W(x) + s * dW(x); };
    p.shift = 3.0 * hbar * hbar / (4.0 * a2);
    return p;
}

WaveFunction1D sample(const Grid1D& grid, const std::function<double(double)>& f, std::string descriptor)
{
    WaveFunction1D w;
    w.grid = grid;
    w.values.resize(grid.n);
    for (int i = 0; i < grid.n; ++i)
        w.values[i] = f(grid.x(i));
    w.descriptor = std::move(descriptor);
    return w;
}

void normalize(WaveFunction1D& psi)
{
    const double nm = norm(psi.values, psi.grid.h());
    for (double& v : psi.values)
        v /= nm;
}

WaveFunction1D ground_state_p1(double a0, double, const Grid1D& grid)
{
    WaveFunction1D w = sample(grid, [a0](double x) { return p1_ground(a0, x); },
                              "a0^(3/2)(2/pi)^(1/4) exp(-x^2/4a0^2)/(a0^2+x^2)");
    normalize(w);
    return w;
}

namespace {

std::vector<double> first_order(const Grid1D& g, const std::vector<double>& f, double cd,
                                const std::function<double(double)>& mult)
{
    std::vector<double> d = derivative(f, g.h());
    for (int i = 0; i < g.n; ++i)
        d[i] = cd * d[i] + mult(g.x(i)) * f[i];
    return d;
}

} // namespace

std::vector<double> apply_b(const FactorizedPair& pair, const WaveFunction1D& psi)
{
    return first_order(psi.grid, psi.values, pair.w.hbar / std::sqrt(2.0), pair.w.W);
}

std::vector<double> apply_bdag(const FactorizedPair& pair, const WaveFunction1D& psi)
{
    return first_order(psi.grid, psi.values, -pair.w.hbar / std::sqrt(2.0), pair.w.W);
}

std::vector<double> apply_hamiltonian(const std::function<double(double)>& v, double hbar,
                                      const WaveFunction1D& psi)
{
    GridHamiltonian h{psi.grid, v, hbar, 4};
    return h.apply(psi.values);
}

std::pair<double, double> eigen_residual(const std::function<double(double)>& v, double hbar,
                                         const WaveFunction1D& psi)
{
    const double h = psi.grid.h();
    const auto Hp = apply_hamiltonian(v, hbar, psi);
    const double nn = inner(psi.values, psi.values, h);
    const double E = inner(psi.values, Hp, h) / nn;
    std::vector<double> r(Hp.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = Hp[i] - E * psi.values[i];
    return {norm(r, h) / std::sqrt(nn), E};
}

WaveFunction1D raise_eigenfunction(const FactorizedPair& pair, const WaveFunction1D& psi2, double E2)
{
    if (!(E2 > 0.0)) {
        std::ostringstream os;
        os << "partner energy " << E2 << " must be positive";
        throw Error(ErrorCode::RaisingUndefined, os.str());
    }
    WaveFunction1D out;
    out.grid = psi2.grid;
    out.values = apply_bdag(pair, psi2);
    for (double& v : out.values)
        v /= std::sqrt(E2);
    out.descriptor = "b^dag psi2 / sqrt(E2)";
    normalize(out);
    return out;
}

SusySpectrum susy_spectrum(PotentialId id, const PotentialParams& params, double E_max)
{
    const bool known = id == PotentialId::P1 || id == PotentialId::P4 || id == PotentialId::P5
                    || id == PotentialId::P6;
    if (!known)
        throw Error(ErrorCode::NotSusyCatalogued, to_string(id) + ": no factorized form catalogued");
    if (!params.imaginary_a)
        throw Error(ErrorCode::NotSusyCatalogued,
                    to_string(id) + ": the factorization is catalogued for the a = i*a0 mode only");
    const std::string phi0 = "phi0(s) = a0^(3/2)(2/pi)^(1/4) exp(-s^2/4a0^2)/(a0^2+s^2)";
    const std::string phik =
        "phi_{k+1}(s) = a0/sqrt(k+3) (1/(2 a0^2 pi))^(1/4) / sqrt(2^k k!) exp(-s^2/4a0^2)"
        " [(s^3+3 s a0^2)/(a0^2 (s^2+a0^2)) H_k(s/(sqrt2 a0)) - sqrt2 k/a0 H_{k-1}(s/(sqrt2 a0))]";
    auto chi = [](const std::string& var, const std::string& idx, const std::string& ratio) {
        return "chi_" + idx + "(" + var + ") = 1/sqrt(2^" + idx + " " + idx + "!) (" + ratio
             + "/(2 a0^2 pi))^(1/4) exp(-" + ratio + " " + var + "^2/4a0^2) H_" + idx + "(sqrt(" + ratio
             + "/(2 a0^2)) " + var + ")";
    };
    const std::string lag = "chi_k2(y) = sqrt(2 k2! s^(5/2)/Gamma(k2+5/2)) exp(-s y^2/2) y^2 L_k2^(3/2)(s y^2),"
                            " s = 1/(2 a0^2)";
    std::map<std::string, std::string> eig;
    switch (id) {
    case PotentialId::P1:
        eig["p1_doublet"] = phik + " (s = x, k = k1); " + chi("y", "k2", "1");
        eig["p1_singlet"] = phi0 + " (s = x); " + chi("y", "k2", "1");
        break;
    case PotentialId::P4:
        eig["p4_doublet"] = chi("x", "k1", "3") + "; " + phik + " (s = y, k = k2)";
        eig["p4_singlet"] = chi("x", "k1", "3") + "; " + phi0 + " (s = y)";
        break;
    case PotentialId::P5:
        eig["p5_doublet"] = phik + " (s = x, k = k1); " + lag;
        eig["p5_singlet"] = phi0 + " (s = x); " + lag;
        break;
    default:
        eig["p6_doublet"] = phik + " (s = x, k = k1); " + phik + " (s = y, k = k2)";
        eig["p6_singlet_x"] = phi0 + " (s = x); " + phik + " (s = y, k + 1 = k2)";
        eig["p6_singlet_y"] = phik + " (s = x, k + 1 = k1); " + phi0 + " (s = y)";
        eig["p6_ground"] = phi0 + " (s = x); " + phi0 + " (s = y)";
        break;
    }
    SusySpectrum out;
    out.spectrum = reference_spectrum(id, params, E_max);
    const PotentialSpec spec = make_potential(id, params);
    for (const auto& f : spec.closed_families)
        out.families.push_back(SusyFamily{f.name, f.formula, eig[f.name]});
    return out;
}

std::vector<double> LadderOperators::c(const Grid1D& g, const std::vector<double>& f) const
{
    const double k = hbar / (2.0 * a0 * a0);
    return first_order(g, f, k * 2.0 * a0 * a0, [k](double x) { return k * x; });
}

std::vector<double> LadderOperators::c_dag(const Grid1D& g, const std::vector<double>& f) const
{
    const double k = hbar / (2.0 * a0 * a0);
    return first_order(g, f, -k * 2.0 * a0 * a0, [k](double x) { return k * x; });
}

std::vector<double> LadderOperators::b(const Grid1D& g, const std::vector<double>& f) const
{
    return first_order(g, f, hbar / std::sqrt(2.0), pair.w.W);
}

std::vector<double> LadderOperators::b_dag(const Grid1D& g, const std::vector<double>& f) const
{
    return first_order(g, f, -hbar / std::sqrt(2.0), pair.w.W);
}

std::vector<double> LadderOperators::M(const Grid1D& g, const std::vector<double>& f) const
{
    return b_dag(g, c(g, b(g, f)));
}

std::vector<double> LadderOperators::M_dag(const Grid1D& g, const std::vector<double>& f) const
{
    return b_dag(g, c_dag(g, b(g, f)));
}

std::vector<double> LadderOperators::L(const Grid1D& g, const std::vector<double>& f) const
{
    return c(g, f);
}

std::vector<double> LadderOperators::L_dag(const Grid1D& g, const std::vector<double>& f) const
{
    return c_dag(g, f);
}

LadderOperators ladder_operators_p1(double a0, double hbar)
{
    LadderOperators l;
    l.pair = partner_pair_p1(a0, hbar);
    l.hbar = hbar;
    l.a0 = a0;
    return l;
}

double QuinticReport::residual(const std::string& relation) const
{
    for (const auto& r : relations)
        if (r.relation == relation)
            return r.residual;
    throw std::out_of_range("no relation " + relation);
}

namespace {

using Mat = Eigen::MatrixXd;

struct Product {
    int kx, ky;
    double E;
};

// ⟨f_i|op f_j⟩ on the grid
Mat matrix_elements(const Grid1D& g, const std::vector<std::vector<double>>& basis,
                    const std::function<std::vector<double>(const std::vector<double>&)>& op)
{
    const int n = static_cast<int>(basis.size());
    Mat m(n, n);
    for (int j = 0; j < n; ++j) {
        const auto v = op(basis[j]);
        for (int i = 0; i < n; ++i)
            m(i, j) = inner(basis[i], v, g.h());
    }
    return m;
}

Mat kron_restricted(const Mat& ox, const Mat& oy, const std::vector<Product>& S)
{
    const int n = static_cast<int>(S.size());
    Mat m(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            m(a, b) = ox(S[a].kx, S[b].kx) * oy(S[a].ky, S[b].ky);
    return m;
}

} // namespace

QuinticReport quintic_subset_check(double a0, double hbar, int basis_size)
{
    if (basis_size < 4) {
        std::ostringstream os;
        os << "basis of " << basis_size << " states is below the minimum of 4";
        throw Error(ErrorCode::BasisTooSmall, os.str());
    }
    const double kappa = hbar * hbar / (a0 * a0);
    QuinticReport rep;
    rep.basis_size = basis_size;
    rep.kappa = kappa;

    // product states of the x-part (zero mode plus raised states) and the y oscillator
    std::vector<Product> all;
    for (int kx = 0; kx <= basis_size; ++kx)
        for (int ky = 0; ky <= basis_size; ++ky) {
            const double ex = kx == 0 ? -0.75 * kappa : 0.5 * kappa * (kx - 1 + 1.5);
            const double ey = 0.5 * kappa * (ky + 0.5);
            all.push_back(Product{kx, ky, ex + ey});
        }
    std::stable_sort(all.begin(), all.end(), [](const Product& a, const Product& b) {
        if (std::abs(a.E - b.E) > 1e-12)
            return a.E < b.E;
        return a.kx < b.kx;
    });
    std::vector<Product> S(all.begin(), all.begin() + basis_size);
    int nx = 0, ny = 0;
    for (const auto& s : S) {
        nx = std::max(nx, s.kx + 1);
        ny = std::max(ny, s.ky + 1);
    }

    const double ell = std::sqrt(2.0) * a0;
    const double L = ell * (std::sqrt(2.0 * std::max(nx, ny) + 1.0) + 12.0);
    const Grid1D g{L, static_cast<int>(2.0 * L / (0.004 * a0)), false};
    const LadderOperators lad = ladder_operators_p1(a0, hbar);

    std::vector<std::vector<double>> bx(nx), by(ny);
    for (int k = 0; k < nx; ++k)
        bx[k] = sample(g, [&](double x) { return k == 0 ? p1_ground(a0, x) : p1_raised(k - 1, a0, x); }, "")
                    .values;
    for (int k = 0; k < ny; ++k)
        by[k] = sample(g, [&](double y) { return oscillator_function(k, ell, y); }, "").values;

    const Mat Mx = matrix_elements(g, bx, [&](const auto& f) { return lad.M(g, f); });
    const Mat Mdx = matrix_elements(g, bx, [&](const auto& f) { return lad.M_dag(g, f); });
    const Mat Ly = matrix_elements(g, by, [&](const auto& f) { return lad.L(g, f); });
    const Mat Ldy = matrix_elements(g, by, [&](const auto& f) { return lad.L_dag(g, f); });
    const Mat Gm_y = matrix_elements(g, by, [&](const auto& f) { return lad.L(g, lad.L(g, f)); });
    const Mat Gp_y = matrix_elements(g, by, [&](const auto& f) { return lad.L_dag(g, lad.L_dag(g, f)); });
    const Mat Ix = Mat::Identity(nx, nx), Iy = Mat::Identity(ny, ny);

    // the basis diagonalizes H and A, so both enter through the closed-form energies
    Mat H = Mat::Zero(basis_size, basis_size), A = H;
    for (int a = 0; a < basis_size; ++a) {
        const double ey = 0.5 * kappa * (S[a].ky + 0.5);
        H(a, a) = S[a].E;
        A(a, a) = 2.0 * (S[a].E - ey) - 2.0 * ey;
    }
    const Mat Gp = kron_restricted(Ix, Gp_y, S), Gm = kron_restricted(Ix, Gm_y, S);
    const Mat Ep = kron_restricted(Mdx, Ldy, S), Em = kron_restricted(Mx, Ly, S);
    const Mat Fp = kron_restricted(Mdx * Mdx, Iy, S);

    // relations linear in H or A are free of truncation and use every column; products of
    // ladders are compared on the lowest product states only
    const int probe = 4;
    auto rel = [&](const std::string& name, const Mat& lhs, const Mat& rhs, const Mat& op, bool truncated,
                   bool asserted) {
        const int cols = truncated ? probe : basis_size;
        const Mat d = (lhs - rhs).leftCols(cols);
        const double scale = std::max({rhs.leftCols(cols).norm(), op.leftCols(cols).norm() * kappa,
                                       std::numeric_limits<double>::min()});
        rep.relations.push_back(RelationResidual{name, d.norm() / scale, asserted});
    };
    // the printed form carries the signed a² = −a0²
    const double a2 = -a0 * a0;
    const Mat GG = Gm * Gp - Gp * Gm;
    rel("[H,G+] = +k G+", H * Gp - Gp * H, kappa * Gp, Gp, false, true);
    rel("[H,G-] = -k G-", H * Gm - Gm * H, -kappa * Gm, Gm, false, true);
    rel("[A,G+] = -2k G+", A * Gp - Gp * A, -2.0 * kappa * Gp, Gp, false, true);
    rel("[A,G-] = +2k G-", A * Gm - Gm * A, 2.0 * kappa * Gm, Gm, false, true);
    rel("[G-,G+] = 4a^2 hbar^2 (H + A/2)", GG, 4.0 * a2 * hbar * hbar * (H + 0.5 * A), GG, true, true);
    rel("[G-,G+] = 4k (H - A/2)", GG, 4.0 * kappa * (H - 0.5 * A), GG, true, false);
    rel("[H,E+] = +k E+", H * Ep - Ep * H, kappa * Ep, Ep, false, false);
    rel("[H,E-] = -k E-", H * Em - Em * H, -kappa * Em, Em, false, false);
    rel("[A,E+] = 0", A * Ep - Ep * A, Mat::Zero(basis_size, basis_size), Ep, false, false);
    rel("[H,F+] = +k F+", H * Fp - Fp * H, kappa * Fp, Fp, false, false);
    rel("[A,F+] = +2k F+", A * Fp - Fp * A, 2.0 * kappa * Fp, Fp, false, false);
    return rep;
}

double sl11_residual(const FactorizedPair& pair, const Grid1D& grid)
{
    const double s = 0.1 * grid.L;
    WaveFunction1D f = sample(grid, [s](double x) { return std::exp(-x * x / (2.0 * s * s)) * (1.0 + x / s); }, "");
    WaveFunction1D g = sample(grid, [s](double x) { return std::exp(-(x - s) * (x - s) / (s * s)); }, "");
    auto rel = [&](const WaveFunction1D& psi, bool first) {
        WaveFunction1D mid = psi;
        mid.values = first ? apply_b(pair, psi) : apply_bdag(pair, psi);
        const auto lhs = first ? apply_bdag(pair, mid) : apply_b(pair, mid);
        const auto rhs = apply_hamiltonian(first ? pair.h1 : pair.h2, pair.w.hbar, psi);
        std::vector<double> d(lhs.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] = lhs[i] - rhs[i];
        return norm(d, grid.h()) / norm(rhs, grid.h());
    };
    return std::max(rel(f, true), rel(g, false));
}

IsospectralityReport partner_isospectrality(const FactorizedPair& pair, int levels, const OracleOptions& opts)
{
    Part1D p1, p2;
    p1.v = pair.h1;
    p2.v = pair.h2;
    const double scale = pair.w.a0;
    const auto r1 = solve_part(p1, pair.w.hbar, levels + 1, scale, opts);
    const auto r2 = solve_part(p2, pair.w.hbar, levels, scale, opts);
    IsospectralityReport rep;
    rep.zero_mode = r1.eigenvalues[0];
    rep.h1.assign(r1.eigenvalues.begin() + 1, r1.eigenvalues.end());
    rep.h2 = r2.eigenvalues;
    for (int i = 0; i < levels; ++i)
        rep.max_delta = std::max(rep.max_delta, std::abs(rep.h1[i] - rep.h2[i]));
    return rep;
}

} // namespace cubalg
