#include "cubalg/poly.hpp"

#include "cubalg/error.hpp"

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>

namespace cubalg {

int Poly::degree() const
{
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k)
        if (c_[k] != 0.0)
            return k;
    return -1;
}

Poly Poly::shifted(double s) const
{
    // Horner in polynomial arithmetic: p(x+s) = (...(c_n (x+s) + c_{n-1})(x+s) + ...)
    Poly acc;
    const Poly xs{s, 1.0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * xs + Poly{*it};
    return acc;
}

Poly Poly::derivative() const
{
    if (c_.size() <= 1)
        return Poly{};
    std::vector<double> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::trimmed(double tol) const
{
    double big = 0.0;
    for (double v : c_)
        big = std::max(big, std::abs(v));
    std::vector<double> c = c_;
    while (!c.empty() && std::abs(c.back()) <= tol * big)
        c.pop_back();
    return Poly(std::move(c));
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), 0.0);
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] += o.c_[k];
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), 0.0);
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] -= o.c_[k];
    return *this;
}

Poly& Poly::operator*=(double s)
{
    for (double& v : c_)
        v *= s;
    return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator-(const Poly& a) { return a * -1.0; }
Poly operator*(Poly a, double s) { return a *= s; }
Poly operator*(double s, Poly a) { return a *= s; }

Poly operator*(const Poly& a, const Poly& b)
{
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    if (x.empty() || y.empty())
        return Poly{};
    std::vector<double> r(x.size() + y.size() - 1, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            r[i + j] += x[i] * y[j];
    return Poly(std::move(r));
}

Poly pow(const Poly& a, int n)
{
    Poly r{1.0};
    for (int k = 0; k < n; ++k)
        r = r * a;
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    const int db = b.degree();
    if (db < 0)
        throw std::invalid_argument("divmod: division by the zero polynomial");
    std::vector<double> rem = a.coeffs();
    const int da = a.degree();
    if (da < db)
        return {Poly{}, a};
    std::vector<double> q(da - db + 1, 0.0);
    const double lead = b.coeff(db);
    for (int k = da - db; k >= 0; --k) {
        const double t = rem[k + db] / lead;
        q[k] = t;
        for (int j = 0; j <= db; ++j)
            rem[k + j] -= t * b.coeff(j);
    }
    rem.resize(db);
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

std::vector<std::complex<double>> roots(const Poly& p)
{
    const Poly t = p.trimmed();
    const int d = t.degree();
    if (d < 1)
        return {};
    if (d == 1)
        return {std::complex<double>(-t.coeff(0) / t.coeff(1), 0.0)};

    Eigen::VectorXd c(d + 1);
    for (int k = 0; k <= d; ++k)
        c[k] = t.coeff(k);
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
    solver.compute(c);
    std::vector<std::complex<double>> out;
    const Poly dt = t.derivative();
    for (Eigen::Index k = 0; k < solver.roots().size(); ++k) {
        std::complex<double> z = solver.roots()[k];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw Error(ErrorCode::RootFindFailure, "companion eigenvalues are not finite");
        for (int it = 0; it < 3; ++it) {
            const std::complex<double> f = t(z);
            const std::complex<double> df = dt(z);
            if (std::abs(df) == 0.0)
                break;
            const std::complex<double> step = f / df;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag()))
                break;
            z -= step;
        }
        out.push_back(z);
    }
    return out;
}

std::vector<double> real_roots(const Poly& p, double imag_tol)
{
    std::vector<double> out;
    for (const auto& z : roots(p))
        if (std::abs(z.imag()) <= imag_tol * std::max(1.0, std::abs(z.real())))
            out.push_back(z.real());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cubalg
