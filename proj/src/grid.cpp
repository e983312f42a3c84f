#include "cubalg/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace cubalg {

std::vector<double> Grid1D::points() const
{
    std::vector<double> p(n);
    for (int i = 0; i < n; ++i)
        p[i] = x(i);
    return p;
}

void validate(const Grid1D& g)
{
    if (g.n < 3)
        throw std::invalid_argument("grid needs at least 3 interior points");
    if (!(g.L > 0.0))
        throw std::invalid_argument("grid half-width must be positive");
}

std::vector<double> GridHamiltonian::diagonal() const
{
    const double h = grid.h();
    const double kin = hbar * hbar / (h * h);
    std::vector<double> d(grid.n);
    for (int i = 0; i < grid.n; ++i)
        d[i] = kin + v(grid.x(i));
    return d;
}

double GridHamiltonian::off_diagonal() const
{
    const double h = grid.h();
    return -0.5 * hbar * hbar / (h * h);
}

std::vector<double> GridHamiltonian::apply(const std::vector<double>& psi) const
{
    const int n = grid.n;
    const double h = grid.h(), c = -0.5 * hbar * hbar / (h * h);
    auto at = [&](int i) { return i >= 0 && i < n ? psi[i] : 0.0; };
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        const double lap = order == 4
            ? (-at(i - 2) + 16.0 * at(i - 1) - 30.0 * psi[i] + 16.0 * at(i + 1) - at(i + 2)) / 12.0
            : at(i - 1) - 2.0 * psi[i] + at(i + 1);
        out[i] = c * lap + v(grid.x(i)) * psi[i];
    }
    return out;
}

std::vector<std::complex<double>> ComplexGridHamiltonian::diagonal() const
{
    const double h = grid.h();
    const double kin = hbar * hbar / (h * h);
    std::vector<std::complex<double>> d(grid.n);
    for (int i = 0; i < grid.n; ++i)
        d[i] = kin + v(grid.x(i));
    return d;
}

double ComplexGridHamiltonian::off_diagonal() const
{
    const double h = grid.h();
    return -0.5 * hbar * hbar / (h * h);
}

namespace {

// number of eigenvalues below s
int sturm_count(const std::vector<double>& d, double e2, double s)
{
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        q = d[i] - s - (i > 0 ? e2 / q : 0.0);
        if (q == 0.0)
            q = -std::numeric_limits<double>::epsilon() * (std::abs(d[i]) + std::abs(s) + 1.0);
        if (q < 0.0)
            ++count;
    }
    return count;
}

} // namespace

std::vector<double> tridiagonal_lowest(const std::vector<double>& d, double e, int k)
{
    const int n = static_cast<int>(d.size());
    k = std::min(k, n);
    const double ae = std::abs(e);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int i = 0; i < n; ++i) {
        const double r = (i > 0 ? ae : 0.0) + (i + 1 < n ? ae : 0.0);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    const double e2 = e * e;
    std::vector<double> out(k);
    for (int j = 0; j < k; ++j) {
        // invariant: count(a) ≤ j < count(b)
        double a = lo, b = hi;
        for (int it = 0; it < 200; ++it) {
            const double m = 0.5 * (a + b);
            if (m <= a || m >= b)
                break;
            if (sturm_count(d, e2, m) > j)
                b = m;
            else
                a = m;
        }
        out[j] = 0.5 * (a + b);
    }
    return out;
}

std::vector<double> tridiagonal_eigenvector(const std::vector<double>& d, double e, double lambda)
{
    const int n = static_cast<int>(d.size());
    std::vector<std::complex<double>> cd(d.begin(), d.end());
    // a shift just off λ keeps the factorization finite
    const double shift = lambda + 1e-10 * std::max(1.0, std::abs(lambda));
    std::mt19937 rng(11);
    std::normal_distribution<double> nd;
    std::vector<std::complex<double>> v(n);
    for (auto& c : v)
        c = nd(rng);
    std::vector<double> out(n);
    for (int it = 0; it < 3; ++it) {
        v = complex_tridiagonal_solve(cd, e, shift, v);
        double s = 0.0;
        for (const auto& c : v)
            s += std::norm(c);
        s = std::sqrt(s);
        for (auto& c : v)
            c /= s;
    }
    for (int i = 0; i < n; ++i)
        out[i] = v[i].real();
    return out;
}

std::vector<std::complex<double>> complex_tridiagonal_solve(const std::vector<std::complex<double>>& d,
                                                            double e, std::complex<double> s,
                                                            std::vector<std::complex<double>> r)
{
    using C = std::complex<double>;
    const int n = static_cast<int>(d.size());
    // LU with partial pivoting: row i holds (a0 diag, a1 super, a2 second super)
    std::vector<C> a0(n), a1(n), a2(n, C(0));
    std::vector<C> sub(n, C(e));
    for (int i = 0; i < n; ++i) {
        a0[i] = d[i] - s;
        a1[i] = i + 1 < n ? C(e) : C(0);
    }
    for (int i = 0; i + 1 < n; ++i) {
        if (std::abs(sub[i + 1]) > std::abs(a0[i])) {
            // swap rows i and i+1
            std::swap(a0[i], sub[i + 1]);
            std::swap(a1[i], a0[i + 1]);
            std::swap(a2[i], a1[i + 1]);
            std::swap(r[i], r[i + 1]);
        }
        if (a0[i] == C(0))
            a0[i] = C(std::numeric_limits<double>::epsilon());
        const C m = sub[i + 1] / a0[i];
        a0[i + 1] -= m * a1[i];
        a1[i + 1] -= m * a2[i];
        r[i + 1] -= m * r[i];
    }
    if (a0[n - 1] == C(0))
        a0[n - 1] = C(std::numeric_limits<double>::epsilon());
    std::vector<C> x(n);
    for (int i = n - 1; i >= 0; --i) {
        C v = r[i];
        if (i + 1 < n)
            v -= a1[i] * x[i + 1];
        if (i + 2 < n)
            v -= a2[i] * x[i + 2];
        x[i] = v / a0[i];
    }
    return x;
}

std::vector<std::complex<double>> complex_symmetric_tridiagonal_eigenvalues(std::vector<std::complex<double>> d,
                                                                           double e)
{
    using C = std::complex<double>;
    const int n = static_cast<int>(d.size());
    std::vector<C> off(n, C(e));
    off[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(off[m]) <= std::numeric_limits<double>::epsilon() * dd)
                    break;
            }
            if (m != l) {
                if (++iter > 60)
                    throw std::runtime_error("complex QL did not converge");
                C g = (d[l + 1] - d[l]) / (2.0 * off[l]);
                C r = std::sqrt(g * g + 1.0);
                // the root that keeps g ± r away from cancellation
                const C gp = g + r, gm = g - r;
                g = d[m] - d[l] + off[l] / (std::abs(gp) >= std::abs(gm) ? gp : gm);
                C s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    C f = s * off[i];
                    const C b = c * off[i];
                    r = std::sqrt(f * f + g * g);
                    off[i + 1] = r;
                    if (r == C(0.0)) {
                        d[i + 1] -= p;
                        off[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == C(0.0) && i >= l)
                    continue;
                d[l] -= p;
                off[l] = g;
                off[m] = 0.0;
            }
        } while (m != l);
    }
    return d;
}

namespace {

template <class T>
std::vector<T> derivative_impl(const std::vector<T>& f, double h)
{
    const std::size_t n = f.size();
    std::vector<T> g(n);
    if (n < 3)
        return g;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (i >= 2 && i + 2 < n)
            g[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
        else
            g[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    }
    g[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    g[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return g;
}

} // namespace

std::vector<double> derivative(const std::vector<double>& f, double h) { return derivative_impl(f, h); }

std::vector<std::complex<double>> derivative(const std::vector<std::complex<double>>& f, double h)
{
    return derivative_impl(f, h);
}

double integrate(const std::vector<double>& f, double h)
{
    double s = 0.0;
    for (double v : f)
        s += v;
    return s * h;
}

double inner(const std::vector<double>& f, const std::vector<double>& g, double h)
{
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        s += f[i] * g[i];
    return s * h;
}

double norm(const std::vector<double>& f, double h) { return std::sqrt(inner(f, f, h)); }

} // namespace cubalg
