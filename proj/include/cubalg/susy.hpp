#pragma once

#include "cubalg/catalog.hpp"
#include "cubalg/grid.hpp"
#include "cubalg/oracle.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cubalg {

/// W with A = (ħ/√2)d/dx + W, partners V₁ = W² − (ħ/√2)W′ and V₂ = W² + (ħ/√2)W′.
struct Superpotential {
    std::function<double(double)> W, dW;
    double hbar = 1.0;
    double a0 = 1.0;
};

struct FactorizedPair {
    Superpotential w;
    std::function<double(double)> h1, h2;  // potentials of A†A and AA†
    double shift = 0.0;                     // h1 = catalog part + shift
};

/// Regular i·a0 mode of the x-part of the first inverse-square potential.
FactorizedPair partner_pair_p1(double a0, double hbar);

/// Samples on a grid, or a closed form evaluated on demand.
struct WaveFunction1D {
    Grid1D grid;
    std::vector<double> values;
    std::string descriptor;
};

WaveFunction1D sample(const Grid1D& grid, const std::function<double(double)>& f, std::string descriptor);
void normalize(WaveFunction1D& psi);

/// Normalized zero mode e^{−x²/4a0²}/(a0²+x²) on the grid.
WaveFunction1D ground_state_p1(double a0, double hbar, const Grid1D& grid);

/// Grid stencils of the factor operators.
std::vector<double> apply_b(const FactorizedPair& pair, const WaveFunction1D& psi);
std::vector<double> apply_bdag(const FactorizedPair& pair, const WaveFunction1D& psi);
/// −(ħ²/2)ψ″ + vψ with the five-point stencil.
std::vector<double> apply_hamiltonian(const std::function<double(double)>& v, double hbar,
                                      const WaveFunction1D& psi);
/// ‖Hψ − ⟨H⟩ψ‖/‖ψ‖ together with ⟨H⟩.
std::pair<double, double> eigen_residual(const std::function<double(double)>& v, double hbar,
                                         const WaveFunction1D& psi);

/// b†ψ₂/√E₂, normalized; RaisingUndefined when E₂ ≤ 0.
WaveFunction1D raise_eigenfunction(const FactorizedPair& pair, const WaveFunction1D& psi2, double E2);

struct SusyFamily {
    std::string name;
    std::string formula;
    std::string eigenfunction;
};

struct SusySpectrum {
    Spectrum spectrum;
    std::vector<SusyFamily> families;
};

/// Doublet and singlet families with eigenfunction descriptors; NotSusyCatalogued outside
/// p1, p4, p5, p6 in the i·a0 mode.
SusySpectrum susy_spectrum(PotentialId id, const PotentialParams& params, double E_max);

/// First-order grid operators of the x ladder M = b†cb, M† = b†c†b and the y ladder L, L†.
/// c, c† and L, L† use the length a0 of the harmonic partner.
struct LadderOperators {
    FactorizedPair pair;
    double hbar = 1.0, a0 = 1.0;

    std::vector<double> c(const Grid1D& g, const std::vector<double>& f) const;
    std::vector<double> c_dag(const Grid1D& g, const std::vector<double>& f) const;
    std::vector<double> b(const Grid1D& g, const std::vector<double>& f) const;
    std::vector<double> b_dag(const Grid1D& g, const std::vector<double>& f) const;
    std::vector<double> M(const Grid1D& g, const std::vector<double>& f) const;
    std::vector<double> M_dag(const Grid1D& g, const std::vector<double>& f) const;
    std::vector<double> L(const Grid1D& g, const std::vector<double>& f) const;
    std::vector<double> L_dag(const Grid1D& g, const std::vector<double>& f) const;
    /// [L, L†] = ħ²/a0²
    double commutator_LLdag() const { return hbar * hbar / (a0 * a0); }
};

LadderOperators ladder_operators_p1(double a0, double hbar);

/// Relative residual of one operator relation, restricted to the lowest product states.
struct RelationResidual {
    std::string relation;
    double residual = 0.0;
    bool asserted = true;
};

struct QuinticReport {
    int basis_size = 0;
    double kappa = 0.0;  // ħ²/a0²
    std::vector<RelationResidual> relations;
    double residual(const std::string& relation) const;
};

/// Projects H, A, G± = L², L†², E± and F± onto the lowest basis_size product states of the
/// 2D problem and evaluates the tractable relations; BasisTooSmall below 4.
QuinticReport quintic_subset_check(double a0, double hbar, int basis_size);

/// {Q, Q†} against the block Hamiltonian diag(h1, h2) on smooth test vectors.
double sl11_residual(const FactorizedPair& pair, const Grid1D& grid);

/// Eigenvalues of h1 without its zero mode against those of h2, for the lowest `levels`.
struct IsospectralityReport {
    std::vector<double> h1, h2;
    double zero_mode = 0.0;
    double max_delta = 0.0;
};
IsospectralityReport partner_isospectrality(const FactorizedPair& pair, int levels,
                                            const OracleOptions& opts = {});

} // namespace cubalg
