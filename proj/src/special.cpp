#include "cubalg/special.hpp"

#include <cmath>
#include <numbers>

namespace cubalg {

namespace {

template <class T>
T hermite_impl(int n, T x)
{
    if (n <= 0)
        return T(1);
    T h0 = T(1), h1 = T(2) * x;
    for (int k = 1; k < n; ++k) {
        const T h2 = T(2) * x * h1 - T(2.0 * k) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

} // namespace

double hermite(int n, double x) { return hermite_impl(n, x); }

std::complex<double> hermite(int n, std::complex<double> z) { return hermite_impl(n, z); }

double laguerre(int n, double alpha, double x)
{
    if (n <= 0)
        return 1.0;
    double l0 = 1.0, l1 = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        const double l2 = ((2.0 * k + 1.0 + alpha - x) * l1 - (k + alpha) * l0) / (k + 1.0);
        l0 = l1;
        l1 = l2;
    }
    return l1;
}

double oscillator_function(int n, double ell, double x)
{
    // ψ_k(ξ) with ξ = x/ℓ: ψ_{k+1} = √(2/(k+1)) ξ ψ_k − √(k/(k+1)) ψ_{k−1}
    const double xi = x / ell;
    double p0 = std::exp(-0.5 * xi * xi) / std::sqrt(ell * std::sqrt(std::numbers::pi));
    if (n == 0)
        return p0;
    double p1 = std::sqrt(2.0) * xi * p0;
    for (int k = 1; k < n; ++k) {
        const double p2 = std::sqrt(2.0 / (k + 1)) * xi * p1 - std::sqrt(double(k) / (k + 1)) * p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double p1_ground(double a0, double x)
{
    return std::pow(a0, 1.5) * std::pow(2.0 / std::numbers::pi, 0.25) * std::exp(-x * x / (4.0 * a0 * a0))
         / (a0 * a0 + x * x);
}

double p1_raised(int k, double a0, double x)
{
    // b† applied to the partner oscillator state of length √2·a0, divided by √E_k
    const double ell = std::sqrt(2.0) * a0;
    const double a2 = a0 * a0;
    const double chi = oscillator_function(k, ell, x);
    const double prev = k > 0 ? oscillator_function(k - 1, ell, x) : 0.0;
    // dχ_k/dx = (√(2k) χ_{k−1} − ξ χ_k)/ℓ with ξ = x/ℓ
    const double dchi = (std::sqrt(2.0 * k) * prev - (x / ell) * chi) / ell;
    const double w = x / (2.0 * a2) + 2.0 * x / (a2 + x * x);
    const double bdag = (-dchi + w * chi) / std::sqrt(2.0);
    return bdag / std::sqrt((k + 3.0) / (2.0 * a2));
}

double p5_radial(int k, double a0, double y)
{
    const double s = 1.0 / (2.0 * a0 * a0);
    const double norm = std::sqrt(2.0 * std::tgamma(k + 1.0) * std::pow(s, 2.5) / std::tgamma(k + 2.5));
    return norm * std::exp(-y * y * s / 2.0) * y * y * laguerre(k, 1.5, y * y * s);
}

} // namespace cubalg
