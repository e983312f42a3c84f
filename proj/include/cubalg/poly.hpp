#pragma once

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

namespace cubalg {

/// Dense real polynomial, constant term first.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<double> c) : c_(c) {}
    explicit Poly(std::vector<double> c) : c_(std::move(c)) {}

    static Poly constant(double v) { return Poly{v}; }
    /// (x - r)
    static Poly linear_root(double r) { return Poly{-r, 1.0}; }

    const std::vector<double>& coeffs() const { return c_; }
    double coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }
    /// Index of the highest nonzero coefficient, -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return degree() < 0; }

    template <class T>
    T operator()(T x) const
    {
        T acc = T(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + T(*it);
        return acc;
    }

    /// p(x + s)
    Poly shifted(double s) const;
    Poly derivative() const;
    /// Drops trailing coefficients with |c| <= tol * max|c|.
    Poly trimmed(double tol = 0.0) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(double s);

private:
    std::vector<double> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Poly a, double s);
Poly operator*(double s, Poly a);
Poly pow(const Poly& a, int n);

/// Quotient and remainder of a / b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Complex roots via the companion matrix, polished by Newton steps.
std::vector<std::complex<double>> roots(const Poly& p);

/// Real roots, ascending; a root counts as real when |Im| <= imag_tol * max(1, |Re|).
std::vector<double> real_roots(const Poly& p, double imag_tol = 1e-7);

/// Polynomials in the energy (coefficients of the cubic algebra and the Casimir).
using EnergyPolynomial = Poly;

} // namespace cubalg
