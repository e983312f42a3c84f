#pragma once

#include "cubalg/algebra.hpp"

#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace cubalg {

enum class PotentialId { ReducibleIso, ReducibleSW1, ReducibleSW2, P1, P2, P3, P4, P5, P6 };

const std::vector<PotentialId>& all_potentials();
std::string to_string(PotentialId id);
/// Accepts the short ids ("p2", "reducible_sw1", ...); UnknownPotential otherwise.
PotentialId parse_potential(const std::string& name);

/// ħ, ω, the length a (interpreted as a0 when imaginary_a), and the b, c couplings of the
/// reducible families.
struct PotentialParams {
    double hbar = 1.0;
    double omega = 1.0;
    double a = 1.0;
    bool imaginary_a = true;
    double b = 1.0;
    double c = 1.0;

    /// a² with its sign: −a0² in the a = i·a0 mode.
    double a2() const { return imaginary_a ? -a * a : a * a; }
};

/// One separable piece of V on its natural domain [lo, hi] (hi may be +inf).
struct Part1D {
    std::function<double(double)> v;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    std::vector<double> poles;  // inverse-square poles on the real line
    std::string formula;

    bool half_line() const { return lo == 0.0; }
    bool singular() const { return !poles.empty(); }
};

/// r(E) = c0 + c1·E
struct AffineRoot {
    double c0 = 0.0;
    double c1 = 0.0;
    double at(double E) const { return c0 + c1 * E; }
};

/// Φ(x) = c·Π (x + u − r_i(E)).
struct FactoredPhi {
    double c = 0.0;
    std::array<AffineRoot, 4> roots{};

    StructureFunction instantiate(double E, double u) const;
};

enum class FamilyKind { Algebraic, Closed };

/// E = e0 + e1·k1 + e2·k2 over k1 = 0..k1_max and k2 = 0..k2_max (−1: unbounded); index
/// k2 is ignored when e2 is unused (two_index false). Algebraic families label k1 as p and
/// carry degeneracy p+1; closed-form families count one state per index tuple.
struct FamilyFormula {
    std::string name;
    std::string formula;
    FamilyKind kind = FamilyKind::Closed;
    double e0 = 0.0, e1 = 0.0, e2 = 0.0;
    bool two_index = false;
    int k1_max = -1;
    int k2_max = -1;
    bool real_a_unverified = false;
    /// closed-form zeros of Φ in x for algebraic families, affine in p
    std::vector<AffineRoot> phi_roots;
};

struct PotentialSpec {
    PotentialId id;
    PotentialParams params;
    std::string formula;
    Part1D x, y;
    std::optional<CubicAlgebra> algebra;
    std::optional<FactoredPhi> phi;
    std::vector<FamilyFormula> algebraic_families;
    std::vector<FamilyFormula> closed_families;
    std::optional<double> v_min_catalogued;

    double v(double x_, double y_) const;
};

PotentialSpec make_potential(PotentialId id, const PotentialParams& params = {});

/// V(x, y); SingularPoint on a pole of a real-a entry or on y = 0 for inverse-square terms.
double evaluate(PotentialId id, const PotentialParams& params, double x, double y);

/// NoFiniteCubicAlgebra for p5/p6, NotCatalogued for the reducible entries.
CubicAlgebra get_algebra(PotentialId id, const PotentialParams& params = {});

/// Minimum of V: catalogued closed form when available, else a grid search with golden-section
/// refinement on each separable part.
double v_min(const PotentialSpec& spec);
double numeric_minimum(const Part1D& part, double scale);

struct SpectrumEntry {
    double energy = 0.0;
    int degeneracy = 0;
    std::string family;
    int p = -1;  // algebraic families only
    bool unitary = true;
    bool physical = true;
};

struct Level {
    double energy = 0.0;
    int degeneracy = 0;
    std::vector<std::string> families;
};

struct Spectrum {
    std::vector<SpectrumEntry> entries;
    std::vector<Level> merged;
    PotentialParams params;
};

/// Sorts entries and merges those within tol into levels.
void merge_levels(Spectrum& s, double tol);

/// Closed-form reference up to E_max: separation/SUSY families when catalogued, otherwise
/// the algebraic families (which then also fill the merged levels).
Spectrum reference_spectrum(PotentialId id, const PotentialParams& params, double E_max);

/// The printed algebraic families up to p_max.
Spectrum algebraic_reference(PotentialId id, const PotentialParams& params, int p_max);

} // namespace cubalg
