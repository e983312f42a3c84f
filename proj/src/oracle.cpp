#include "cubalg/oracle.hpp"

#include "cubalg/error.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace cubalg {

double length_scale(const PotentialParams& params)
{
    return std::max({params.a, std::sqrt(params.hbar / params.omega), 1e-300});
}

std::vector<double> grid_eigenvalues(const GridHamiltonian& ham, int k)
{
    validate(ham.grid);
    return tridiagonal_lowest(ham.diagonal(), ham.off_diagonal(), k);
}

ConvergenceReport eigenvalues_1d(const GridHamiltonian& ham, int k, const OracleOptions& opts)
{
    validate(ham.grid);
    if (k > ham.grid.n)
        throw std::invalid_argument("more eigenvalues requested than grid points");
    ConvergenceReport rep;
    rep.L = ham.grid.L;
    rep.half_line = ham.grid.half_line;
    GridHamiltonian g = ham;
    for (int j = 0; j <= opts.max_doublings; ++j) {
        if (j > 0)
            g.grid.n = 2 * (g.grid.n + 1) - 1;  // halves h exactly
        rep.n.push_back(g.grid.n);
        rep.raw.push_back(grid_eigenvalues(g, k));
        if (j == 0)
            continue;
        const auto& a = rep.raw[j - 1];
        const auto& b = rep.raw[j];
        std::vector<double> r(k);
        for (int i = 0; i < k; ++i)
            r[i] = (4.0 * b[i] - a[i]) / 3.0;
        rep.richardson.push_back(r);
        if (rep.richardson.size() < 2)
            continue;
        const auto& prev = rep.richardson[rep.richardson.size() - 2];
        std::vector<double> err(k);
        double worst = 0.0;
        for (int i = 0; i < k; ++i) {
            err[i] = std::abs(r[i] - prev[i]);
            worst = std::max(worst, err[i]);
        }
        rep.eigenvalues = r;
        rep.error = err;
        if (worst < opts.tol)
            return rep;
    }
    double worst = 0.0;
    for (double e : rep.error)
        worst = std::max(worst, e);
    std::ostringstream os;
    os << "eigenvalues still change by " << worst << " after " << opts.max_doublings
       << " doublings (n = " << rep.n.back() << ", L = " << rep.L << ")";
    throw Error(ErrorCode::GridNotConverged, os.str());
}

double auto_box(const Part1D& part, double hbar, int k, double scale, double tol)
{
    const bool half = part.half_line();
    const double h = scale / 40.0;
    double L = 3.0 * scale;
    for (int attempt = 0; attempt < 60; ++attempt, L *= 1.2) {
        Grid1D grid{L, 0, half};
        grid.n = std::max(3 * k + 10, static_cast<int>((half ? L : 2.0 * L) / h) - 1);
        GridHamiltonian ham{grid, part.v, hbar};
        const auto d = ham.diagonal();
        const double e = ham.off_diagonal();
        const auto vals = tridiagonal_lowest(d, e, k);
        // the outer 5% of the box must carry only the exponential tail
        const int edge = std::max(2, grid.n / 20);
        bool ok = true;
        for (int j = 0; j < k && ok; ++j) {
            const auto v = tridiagonal_eigenvector(d, e, vals[j]);
            double peak = 0.0, tail = 0.0;
            for (int i = 0; i < grid.n; ++i) {
                const double a = std::abs(v[i]);
                peak = std::max(peak, a);
                const bool outer = i >= grid.n - edge || (!half && i < edge);
                if (outer)
                    tail = std::max(tail, a);
            }
            ok = tail <= tol * peak;
        }
        if (ok)
            return L;
    }
    throw Error(ErrorCode::GridNotConverged, "no box confines the requested states");
}

ConvergenceReport solve_part(const Part1D& part, double hbar, int k, double scale, const OracleOptions& opts)
{
    if (part.singular())
        throw Error(ErrorCode::SingularPotential,
                    "poles on the real line (" + part.formula + "); use the complexified form");
    const double L = opts.box > 0.0 ? opts.box : auto_box(part, hbar, k, scale, opts.boundary_tol);
    GridHamiltonian ham{Grid1D{L, opts.n0, part.half_line()}, part.v, hbar};
    ConvergenceReport r = eigenvalues_1d(ham, k, opts);
    r.label = part.formula;
    return r;
}

NumericSpectrum spectrum_2d(PotentialId id, const PotentialParams& params, int k, const OracleOptions& opts)
{
    const PotentialSpec spec = make_potential(id, params);
    if (spec.x.singular() || spec.y.singular())
        throw Error(ErrorCode::SingularPotential,
                    to_string(id) + ": real-a mode has poles on the real line");
    const double scale = length_scale(params);
    NumericSpectrum out;
    out.x = solve_part(spec.x, params.hbar, k, scale, opts);
    out.y = solve_part(spec.y, params.hbar, k, scale, opts);
    std::vector<SpectrumEntry> all;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            SpectrumEntry e;
            e.energy = out.x.eigenvalues[i] + out.y.eigenvalues[j];
            e.degeneracy = 1;
            e.family = "kx=" + std::to_string(i) + ",ky=" + std::to_string(j);
            all.push_back(e);
        }
    std::stable_sort(all.begin(), all.end(),
                     [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.energy < b.energy; });
    const double cut = all[k - 1].energy;
    for (const auto& e : all)
        if (e.energy <= cut + 1e-6 * std::max(1.0, std::abs(cut)))
            out.spectrum.entries.push_back(e);
    out.spectrum.params = params;
    // merge with a relative tolerance
    out.spectrum.merged.clear();
    for (const auto& e : out.spectrum.entries) {
        if (!out.spectrum.merged.empty()
            && std::abs(e.energy - out.spectrum.merged.back().energy)
                   <= 1e-6 * std::max(1.0, std::abs(e.energy))) {
            Level& l = out.spectrum.merged.back();
            l.degeneracy += 1;
            l.families.push_back(e.family);
        } else {
            out.spectrum.merged.push_back(Level{e.energy, 1, {e.family}});
        }
    }
    return out;
}

namespace {

std::vector<double> lowest_2d_on_grid(const Part1D& px, const Part1D& py, double hbar, int k,
                                      const Grid1D& gx, const Grid1D& gy)
{
    using SpMat = Eigen::SparseMatrix<double>;
    const int nx = gx.n, ny = gy.n, N = nx * ny;
    const double hx = gx.h(), hy = gy.h();
    const double cx = -0.5 * hbar * hbar / (hx * hx), cy = -0.5 * hbar * hbar / (hy * hy);
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(5 * static_cast<std::size_t>(N));
    double vmin = std::numeric_limits<double>::infinity();
    auto idx = [ny](int i, int j) { return i * ny + j; };
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            const double v = px.v(gx.x(i)) + py.v(gy.x(j));
            vmin = std::min(vmin, v);
            t.emplace_back(idx(i, j), idx(i, j), -2.0 * cx - 2.0 * cy + v);
            if (i > 0)
                t.emplace_back(idx(i, j), idx(i - 1, j), cx);
            if (i + 1 < nx)
                t.emplace_back(idx(i, j), idx(i + 1, j), cx);
            if (j > 0)
                t.emplace_back(idx(i, j), idx(i, j - 1), cy);
            if (j + 1 < ny)
                t.emplace_back(idx(i, j), idx(i, j + 1), cy);
        }
    SpMat H(N, N);
    H.setFromTriplets(t.begin(), t.end());
    // the kinetic part is positive, so H − (vmin − 1) is positive definite
    const double sigma = vmin - 1.0;
    SpMat S = H;
    for (int i = 0; i < N; ++i)
        S.coeffRef(i, i) -= sigma;
    Eigen::SimplicialLDLT<SpMat> ldlt(S);
    if (ldlt.info() != Eigen::Success)
        throw Error(ErrorCode::GridNotConverged, "2D factorization failed");
    const int m = k + 8;
    std::mt19937 rng(12345);
    std::normal_distribution<double> nd;
    Eigen::MatrixXd X(N, m);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < m; ++j)
            X(i, j) = nd(rng);
    Eigen::VectorXd prev = Eigen::VectorXd::Constant(k, std::numeric_limits<double>::infinity());
    Eigen::VectorXd ritz;
    for (int it = 0; it < 2000; ++it) {
        Eigen::MatrixXd Y = ldlt.solve(X);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(Y);
        Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(N, m);
        Eigen::MatrixXd small = Q.transpose() * (H * Q);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (small + small.transpose()));
        X = Q * es.eigenvectors();
        ritz = es.eigenvalues().head(k);
        if (((ritz - prev).array().abs() <= 1e-12 * ritz.array().abs().max(1.0)).all())
            break;
        prev = ritz;
    }
    return std::vector<double>(ritz.data(), ritz.data() + k);
}

} // namespace

std::vector<double> full_2d_lowest(PotentialId id, const PotentialParams& params, int k, int n, double Lx,
                                   double Ly)
{
    const PotentialSpec spec = make_potential(id, params);
    if (spec.x.singular() || spec.y.singular())
        throw Error(ErrorCode::SingularPotential, to_string(id) + ": poles on the real line");
    Grid1D gx{Lx, n, spec.x.half_line()}, gy{Ly, n, spec.y.half_line()};
    validate(gx);
    const auto a = lowest_2d_on_grid(spec.x, spec.y, params.hbar, k, gx, gy);
    gx.n = gy.n = 2 * (n + 1) - 1;
    const auto b = lowest_2d_on_grid(spec.x, spec.y, params.hbar, k, gx, gy);
    std::vector<double> r(k);
    for (int i = 0; i < k; ++i)
        r[i] = (4.0 * b[i] - a[i]) / 3.0;
    return r;
}

IntegralA integral_a(PotentialId id, const PotentialParams& prm)
{
    const double h2 = prm.hbar * prm.hbar, w2 = prm.omega * prm.omega, a2 = prm.a2(), a4 = a2 * a2;
    // 1/(t−a)² + 1/(t+a)² for signed a²
    auto pair = [a2](double t) {
        const double d = t * t - a2;
        return 2.0 * (t * t + a2) / (d * d);
    };
    IntegralA A;
    switch (id) {
    case PotentialId::P1:
        A.f = [=](double x, double y) { return 2.0 * h2 * ((x * x - y * y) / (8.0 * a4) + pair(x)); };
        A.formula = "Px^2 - Py^2 + 2hbar^2((x^2-y^2)/(8a^4) + 1/(x-a)^2 + 1/(x+a)^2)";
        break;
    case PotentialId::P2:
        A.f = [=](double x, double y) { return w2 * (9.0 * x * x - y * y); };
        A.formula = "Px^2 - Py^2 + omega^2(9x^2 - y^2)";
        break;
    case PotentialId::P3:
        A.f = [=](double x, double y) { return w2 * (9.0 * x * x - y * y) - 2.0 * h2 / (y * y); };
        A.formula = "Px^2 - Py^2 + omega^2(9x^2 - y^2) - 2hbar^2/y^2";
        break;
    case PotentialId::P4:
        A.f = [=](double x, double y) { return 2.0 * h2 * ((9.0 * x * x - y * y) / (8.0 * a4) + pair(y)); };
        A.formula = "Px^2 - Py^2 + 2hbar^2((9x^2-y^2)/(8a^4) + 1/(y-a)^2 + 1/(y+a)^2)";
        break;
    default:
        throw Error(ErrorCode::NotCatalogued, to_string(id) + ": no second-order integral catalogued");
    }
    return A;
}

CommutatorResidual commutator_residual_A(PotentialId id, const PotentialParams& params, int grid2d_n)
{
    return commutator_residual_A(id, params, grid2d_n, integral_a(id, params));
}

CommutatorResidual commutator_residual_A(PotentialId id, const PotentialParams& params, int grid2d_n,
                                         const IntegralA& a, int max_n)
{
    const PotentialSpec spec = make_potential(id, params);
    if (spec.x.singular() || spec.y.singular())
        throw Error(ErrorCode::SingularPotential, to_string(id) + ": poles on the real line");
    return commutator_residual(spec.x, spec.y, a, params, grid2d_n, max_n);
}

CommutatorResidual commutator_residual(const Part1D& x, const Part1D& y, const IntegralA& a,
                                       const PotentialParams& params, int grid2d_n, int max_n)
{
    if (grid2d_n > max_n) {
        std::ostringstream os;
        os << grid2d_n << " points per axis exceeds the cap of " << max_n;
        throw Error(ErrorCode::GridTooLarge, os.str());
    }
    const double L = 8.0 * length_scale(params);
    const Grid1D gx{L, grid2d_n, x.half_line()}, gy{L, grid2d_n, y.half_line()};
    validate(gx);
    const int n = grid2d_n;
    const double hx = gx.h(), hy = gy.h(), hb2 = params.hbar * params.hbar;
    std::vector<double> xs = gx.points(), ys = gy.points();
    std::vector<double> V(static_cast<std::size_t>(n) * n), F(V.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            V[i * n + j] = x.v(xs[i]) + y.v(ys[j]);
            F[i * n + j] = a.f(xs[i], ys[j]);
        }
    // second differences with Dirichlet ends
    auto dxx = [&](const std::vector<double>& u, int i, int j) {
        const double l = i > 0 ? u[(i - 1) * n + j] : 0.0, r = i + 1 < n ? u[(i + 1) * n + j] : 0.0;
        return (l - 2.0 * u[i * n + j] + r) / (hx * hx);
    };
    auto dyy = [&](const std::vector<double>& u, int i, int j) {
        const double l = j > 0 ? u[i * n + j - 1] : 0.0, r = j + 1 < n ? u[i * n + j + 1] : 0.0;
        return (l - 2.0 * u[i * n + j] + r) / (hy * hy);
    };
    auto applyH = [&](const std::vector<double>& u) {
        std::vector<double> o(u.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                o[i * n + j] = -0.5 * hb2 * (dxx(u, i, j) + dyy(u, i, j)) + V[i * n + j] * u[i * n + j];
        return o;
    };
    auto applyA = [&](const std::vector<double>& u) {
        std::vector<double> o(u.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                o[i * n + j] = -hb2 * (dxx(u, i, j) - dyy(u, i, j)) + F[i * n + j] * u[i * n + j];
        return o;
    };
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    CommutatorResidual out;
    out.n = n;
    const double w = L / 10.0;
    for (int t = 0; t < 5; ++t) {
        std::vector<double> psi(V.size(), 0.0);
        for (int g = 0; g < 3; ++g) {
            const double cx = gx.half_line ? L * (1.0 + unif(rng)) / 3.0 : L * (2.0 * unif(rng) - 1.0) / 3.0;
            const double cy = gy.half_line ? L * (1.0 + unif(rng)) / 3.0 : L * (2.0 * unif(rng) - 1.0) / 3.0;
            const double c = 2.0 * unif(rng) - 1.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const double r2 = (xs[i] - cx) * (xs[i] - cx) + (ys[j] - cy) * (ys[j] - cy);
                    double v = c * std::exp(-r2 / (2.0 * w * w));
                    // vanish at the origin of a half-line axis
                    if (gx.half_line)
                        v *= std::pow(xs[i] / L, 3);
                    if (gy.half_line)
                        v *= std::pow(ys[j] / L, 3);
                    psi[i * n + j] += v;
                }
        }
        const auto Ap = applyA(psi);
        const auto HAp = applyH(Ap);
        const auto AHp = applyA(applyH(psi));
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < psi.size(); ++i) {
            num += (HAp[i] - AHp[i]) * (HAp[i] - AHp[i]);
            den += Ap[i] * Ap[i];
        }
        out.per_vector.push_back(std::sqrt(num / den));
    }
    for (double r : out.per_vector)
        out.residual += r / out.per_vector.size();
    return out;
}

} // namespace cubalg
