#pragma once

#include "cubalg/catalog.hpp"
#include "cubalg/grid.hpp"

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace cubalg {

/// One-dimensional pieces of the first inverse-square potential after x → x − iε (real a).
enum class PtPart {
    HarmonicY,   // ħ²(y−iε)²/8a⁴
    P1X,         // ħ²[(x−iε)²/8a⁴ + 1/(x−iε−a)² + 1/(x−iε+a)²]
    P1XPartner1, // P1X − 3ħ²/4a²
    P1XPartner2, // ħ²(x−iε)²/8a⁴ − 5ħ²/4a²
};

std::string to_string(PtPart part);
/// Accepts "y", "x", "h1", "h2"; UnknownPotential otherwise.
PtPart parse_pt_part(const std::string& name);

std::function<std::complex<double>(double)> pt_potential(PtPart part, double a, double hbar, double eps);

struct PtOptions {
    int n_coarse = 600;  // minimum size of the seed grid; the QL seed solve grows it as eps shrinks
    int n0 = 4000;
    int max_doublings = 3;
    double tol = 1e-7;
    double box = 0.0;  // 0 picks a box from the number of requested levels
};

struct PtLevel {
    std::complex<double> energy;
    double error = 0.0;  // last change of the extrapolated value
    double pseudo_norm = 0.0;
    int sigma = 0;
};

struct PtReport {
    PtPart part = PtPart::P1XPartner1;
    double a = 1.0, hbar = 1.0, eps = 0.1;
    double L = 0.0;
    std::vector<int> n;
    std::vector<PtLevel> levels;
};

/// k lowest-by-real-part eigenvalues with Richardson refinement over grid doublings and the
/// pseudo-norm sign of each eigenvector; GridNotConverged as in the real oracle.
PtReport pt_eigenvalues(PtPart part, double a, double hbar, double eps, int k, const PtOptions& opts = {});

struct PtSpectrum2D {
    Spectrum spectrum;
    PtReport x, y;
};

/// Sums of the complexified x-part (full P1X) and y-part eigenvalues, merged at 1e-6.
PtSpectrum2D pt_spectrum_2d(double a, double hbar, double eps, int k, const PtOptions& opts = {});

/// Unnormalized closed forms in z = x − iε: the complexified oscillator state e^{−z²/4a²}H_m(z/√2a),
/// the zero mode e^{−z²/4a²}(a² − z²) of the harmonic partner, and the raised partner states
/// e^{−z²/4a²}[2z/(z²−a²)H_{n+3} − 2(n+3)/(√2a)H_{n+2}] at E = (n+1)ħ²/2a².
std::complex<double> pt_harmonic_state(int m, double a, double eps, double x);
std::complex<double> pt_partner_zero_mode(double a, double eps, double x);
std::complex<double> pt_raised_state(int n, double a, double eps, double x);

/// ‖Hψ − Eψ‖/‖ψ‖ with E the bilinear Rayleigh quotient ∫ψHψ/∫ψψ, five-point stencil.
struct ComplexResidual {
    double residual = 0.0;
    std::complex<double> energy;
};
ComplexResidual pt_eigen_residual(PtPart part, double a, double hbar, double eps, const Grid1D& grid,
                                  const std::function<std::complex<double>(double)>& psi);

struct PseudoNorm {
    double value = 0.0;  // ∫ψ*(−x)ψ(x)dx / ∫|ψ|²dx
    double imag = 0.0;
    double quadrature_error = 0.0;  // difference against the half-resolution sum
    int sigma = 0;
};

/// Requires a grid symmetric about 0; SelfOrthogonal when |value| < 1e-10.
PseudoNorm pseudo_norm(const std::vector<std::complex<double>>& psi, const Grid1D& grid);

} // namespace cubalg
