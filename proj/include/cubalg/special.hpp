#pragma once

#include <complex>

namespace cubalg {

/// Physicists' Hermite polynomial H_n by the three-term recurrence.
double hermite(int n, double x);
std::complex<double> hermite(int n, std::complex<double> z);

/// Generalized Laguerre polynomial L_n^(alpha).
double laguerre(int n, double alpha, double x);

/// Normalized eigenfunction of −(ħ²/2)d²/dx² + ħ²x²/(2ℓ⁴) with length scale ℓ,
/// evaluated with a scaled recurrence that stays finite for large n.
double oscillator_function(int n, double ell, double x);

/// Normalized zero mode of the factorized x-part of the first inverse-square potential.
double p1_ground(double a0, double x);

/// Normalized raised state b†χ_k/√E for k ≥ 0 (index k+1 of the factorized partner).
double p1_raised(int k, double a0, double x);

/// Radial state y²·L_k^(3/2)(y²/2a0²)·e^{−y²/4a0²}, normalized to 1 on the half-line.
double p5_radial(int k, double a0, double y);

} // namespace cubalg
