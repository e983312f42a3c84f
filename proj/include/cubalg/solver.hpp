#pragma once

#include "cubalg/algebra.hpp"
#include "cubalg/catalog.hpp"

#include <string>
#include <vector>

namespace cubalg {

struct RepresentationSolution {
    double u = 0.0;
    int p = 0;
    double energy = 0.0;
    int dimension = 1;
    int family_id = -1;  // 4·i + j for the root pairing (u = r_i, p+1 = r_j − r_i)
    std::vector<double> phi_values;  // Φ(1..p)
    bool unitary = false;
    bool physical = true;
};

/// Exhaustive ordered root pairings. Pairings whose root difference does not depend on E are
/// skipped: they either never close or close for every E.
std::vector<RepresentationSolution> solve_factored(const FactoredPhi& phi, int p,
                                                   bool keep_non_unitary = false);

/// Numeric path on the Case 2 quartic: E scan with sign-change bisection of Φ(p+1) along each
/// real root u of Φ(0; u, E) = 0, plus tangential zeros. Returns unitary and non-unitary hits
/// alike. A closure that sits on a branch where Φ(u+p+1) vanishes for every E cannot be located
/// this way and is missed.
std::vector<RepresentationSolution> solve_generic(const CubicAlgebra& alg, int p, double E_lo,
                                                  double E_hi, int grid = 4000);

/// Marks (does not remove) solutions with E < v_min.
void physical_filter(std::vector<RepresentationSolution>& solutions, double v_min);

struct FamilySpectrum {
    int family_id = -1;
    std::string label;    // "u=r1, p+1=r4-r1"
    std::string formula;  // E as an affine function of p
    double e0 = 0.0, e1 = 0.0;
    std::vector<RepresentationSolution> entries;
};

struct AlgebraicSpectrum {
    PotentialId id;
    PotentialParams params;
    double v_min = 0.0;
    std::vector<FamilySpectrum> families;
    Spectrum spectrum;  // unitary solutions only, merged at 1e-8
};

/// UnknownPotential for unknown ids; NoFiniteCubicAlgebra / NotCatalogued propagate.
AlgebraicSpectrum assemble_spectrum(PotentialId id, const PotentialParams& params, int p_max);

std::string family_label(int family_id);

} // namespace cubalg
