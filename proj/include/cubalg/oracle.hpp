#pragma once

#include "cubalg/catalog.hpp"
#include "cubalg/grid.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cubalg {

struct OracleOptions {
    int n0 = 1000;             // interior points of the coarsest grid
    int max_doublings = 3;
    double tol = 1e-6;         // absolute change between successive extrapolated values
    double box = 0.0;          // half-width L; 0 selects it automatically
    double boundary_tol = 1e-8;
};

/// One converged 1D run: the extrapolated eigenvalues with the raw values on every grid.
struct ConvergenceReport {
    std::string label;
    double L = 0.0;
    bool half_line = false;
    std::vector<int> n;
    std::vector<std::vector<double>> raw;        // per grid
    std::vector<std::vector<double>> richardson;  // per consecutive grid pair
    std::vector<double> eigenvalues;
    std::vector<double> error;  // last change of the extrapolated values
};

/// k lowest eigenvalues of the tridiagonal matrix on ham.grid, without refinement.
std::vector<double> grid_eigenvalues(const GridHamiltonian& ham, int k);

/// k lowest eigenvalues with grid doubling from ham.grid.n at fixed box and Richardson
/// extrapolation; GridNotConverged if successive extrapolations still differ by more than
/// opts.tol after opts.max_doublings doublings.
ConvergenceReport eigenvalues_1d(const GridHamiltonian& ham, int k, const OracleOptions& opts = {});

/// Smallest half-width whose k lowest eigenvectors have relative boundary amplitude below tol.
double auto_box(const Part1D& part, double hbar, int k, double scale, double tol = 1e-8);

/// eigenvalues_1d on a catalog part with the box chosen by auto_box unless opts.box is set;
/// SingularPotential when the part has poles on the real line.
ConvergenceReport solve_part(const Part1D& part, double hbar, int k, double scale,
                             const OracleOptions& opts = {});

struct NumericSpectrum {
    Spectrum spectrum;  // one entry per (kx, ky), merged at 1e-6·max(1, |E|)
    ConvergenceReport x, y;
};

/// Lowest k sums Ex + Ey (extended to complete the last level); SingularPotential for
/// real-a entries with poles.
NumericSpectrum spectrum_2d(PotentialId id, const PotentialParams& params, int k,
                            const OracleOptions& opts = {});

/// Lowest k eigenvalues of the unseparated 2D finite-difference Hamiltonian, by shift-invert
/// subspace iteration on n×n grids with one Richardson step (n and 2n+1).
std::vector<double> full_2d_lowest(PotentialId id, const PotentialParams& params, int k, int n,
                                   double Lx, double Ly);

/// The second-order integral A = Px² − Py² + f(x, y) as printed in the catalog.
struct IntegralA {
    std::function<double(double, double)> f;
    std::string formula;
};
IntegralA integral_a(PotentialId id, const PotentialParams& params);

struct CommutatorResidual {
    double residual = 0.0;  // mean of ‖[H,A]ψ‖/‖Aψ‖
    std::vector<double> per_vector;
    int n = 0;
};

/// Applies H and A as 2D stencils to 5 smooth random vectors supported away from the
/// boundary; GridTooLarge above max_n points per axis.
CommutatorResidual commutator_residual_A(PotentialId id, const PotentialParams& params, int grid2d_n,
                                         const IntegralA& a, int max_n = 1500);
CommutatorResidual commutator_residual_A(PotentialId id, const PotentialParams& params, int grid2d_n);
/// The same check for arbitrary regular parts V = x.v + y.v.
CommutatorResidual commutator_residual(const Part1D& x, const Part1D& y, const IntegralA& a,
                                       const PotentialParams& params, int grid2d_n, int max_n = 1500);

/// Characteristic length of a catalog entry, used to seed box sizes.
double length_scale(const PotentialParams& params);

} // namespace cubalg
