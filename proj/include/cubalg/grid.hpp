#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace cubalg {

/// n interior points on (−L, L), or on (0, L) for a half-line, Dirichlet at both ends.
struct Grid1D {
    double L = 10.0;
    int n = 1000;
    bool half_line = false;

    double lo() const { return half_line ? 0.0 : -L; }
    double h() const { return (half_line ? L : 2.0 * L) / (n + 1); }
    double x(int i) const { return lo() + (i + 1) * h(); }
    std::vector<double> points() const;
};

/// InvalidArgument unless n ≥ 3 and L > 0.
void validate(const Grid1D& g);

/// H = −(ħ²/2)d²/dx² + V with the three-point stencil; apply() can use the five-point one.
struct GridHamiltonian {
    Grid1D grid;
    std::function<double(double)> v;
    double hbar = 1.0;
    int order = 2;

    std::vector<double> diagonal() const;
    double off_diagonal() const;
    std::vector<double> apply(const std::vector<double>& psi) const;
};

struct ComplexGridHamiltonian {
    Grid1D grid;
    std::function<std::complex<double>(double)> v;
    double hbar = 1.0;

    std::vector<std::complex<double>> diagonal() const;
    double off_diagonal() const;
};

/// k lowest eigenvalues of the symmetric tridiagonal (d, e) by Sturm-sequence bisection.
std::vector<double> tridiagonal_lowest(const std::vector<double>& d, double e, int k);

/// Unit eigenvector for an eigenvalue of (d, e) by inverse iteration.
std::vector<double> tridiagonal_eigenvector(const std::vector<double>& d, double e, double lambda);

/// All eigenvalues of the complex symmetric tridiagonal matrix with diagonal d and constant
/// off-diagonal e, by implicit QL with complex Givens rotations.
std::vector<std::complex<double>> complex_symmetric_tridiagonal_eigenvalues(std::vector<std::complex<double>> d,
                                                                           double e);

/// Solves (T − s)x = r for complex tridiagonal T with constant off-diagonal e, with partial
/// pivoting.
std::vector<std::complex<double>> complex_tridiagonal_solve(const std::vector<std::complex<double>>& d,
                                                            double e, std::complex<double> s,
                                                            std::vector<std::complex<double>> r);

/// Fourth-order central first derivative, second order next to the ends and one-sided at the
/// two end points.
std::vector<double> derivative(const std::vector<double>& f, double h);
std::vector<std::complex<double>> derivative(const std::vector<std::complex<double>>& f, double h);

/// Trapezoidal sums on the grid (the Dirichlet end values are zero).
double integrate(const std::vector<double>& f, double h);
double inner(const std::vector<double>& f, const std::vector<double>& g, double h);
double norm(const std::vector<double>& f, double h);

} // namespace cubalg
