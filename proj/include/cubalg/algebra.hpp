#pragma once

#include "cubalg/poly.hpp"

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <vector>

namespace cubalg {

/// [A,B]=C, [A,C]=αA²+β{A,B}+γA+δB+ε, [B,C]=μA³+νA²−βB²−α{A,B}+ξA−γB+ζ.
/// γ..ζ and the Casimir are polynomials in H.
struct CubicAlgebra {
    double alpha = 0.0;
    double beta = 0.0;
    double mu = 0.0;
    EnergyPolynomial gamma, delta, epsilon, nu, xi, zeta;
    EnergyPolynomial casimir;
    /// branch of √δ in the β = 0 realization (+1 or −1)
    int sqrt_delta_branch = 1;
};

/// Throws std::invalid_argument when a coefficient exceeds its allowed degree in H.
void check_degree_bounds(const CubicAlgebra& alg);

/// All coefficients at a fixed energy.
struct AlgebraValues {
    double alpha = 0, beta = 0, mu = 0;
    int sqrt_delta_branch = 1;
    double gamma = 0, delta = 0, epsilon = 0, nu = 0, xi = 0, zeta = 0;
    double K = 0;
};

AlgebraValues evaluate(const CubicAlgebra& alg, double E);
double casimir_value(const CubicAlgebra& alg, double E);

enum class AlgebraCase { BetaNonzero = 1, BetaZero = 2 };

/// Case 1 iff β ≠ 0, Case 2 iff β = 0 and δ(E) ≠ 0; otherwise RealizationUndefined.
AlgebraCase algebra_case(const CubicAlgebra& alg, double E);

/// A(N), b(N) and the weight ρ(N) of the deformed-oscillator realization.
/// ρ enters [B,C] linearly with Φ, so the operator off-diagonals of B carry √ρ.
struct Realization {
    AlgebraCase kind = AlgebraCase::BetaZero;
    AlgebraValues v;
    double u = 0.0;
    double sqrt_delta = 0.0;

    double A(double N) const;
    double b(double N) const;
    double rho(double N) const;
    double dA(double N) const { return A(N + 1) - A(N); }
};

/// Working range is N = 0..n_max; a pole of ρ there throws RhoPole.
Realization realize_case1(const CubicAlgebra& alg, double E, double u, int n_max = 12);
Realization realize_case2(const CubicAlgebra& alg, double E, double u);
Realization realize(const CubicAlgebra& alg, double E, double u, int n_max = 12);

/// Diagonal parts of the [B,C] relation and of the Casimir in the Fock basis, written in
/// W(n) = Φ(n)ρ(n−1):
///   d1·W(n+1) − d0·W(n) = R,      K = f·W(n+1) + g·W(n) + F.
struct DiagonalRelations {
    double d1 = 0, d0 = 0, R = 0, f = 0, g = 0, F = 0;
};

DiagonalRelations diagonal_relations(const Realization& r, double N);

/// Φ(x) with x the Fock index; z = x + u.
struct StructureFunction {
    double u = 0.0;
    double E = 0.0;

    bool has_factored = false;
    double c = 0.0;
    std::array<double, 4> roots{};  // in z

    bool has_coefficient = false;
    Poly coefficients;  // in z

    double factored_at(double x) const;
    double coefficient_at(double x) const;
    double operator()(double x) const;
};

/// Case 2 quartic from the closed formula.
StructureFunction structure_function_case2(const CubicAlgebra& alg, double E, double u);

/// Case 1 degree-10 polynomial, obtained by eliminating Φ(N+1) between the two diagonal
/// relations with the polynomial weight ρ(N) = 1/(3·2¹²β⁸ z(z+1)(2z+1)²).
StructureFunction structure_function_case1(const CubicAlgebra& alg, double E, double u);

/// Pointwise Case 1 elimination for an arbitrary weight; ρ must be nonzero and finite at n−1.
double structure_function_case1_at(const CubicAlgebra& alg, double E, double u, double n,
                                   const std::function<double(double)>& rho);

/// Coefficient polynomial of Φ in z for either case (Case 1 requires β ≠ 0).
Poly structure_polynomial(const CubicAlgebra& alg, double E);

/// Φ(0) compatible with the Casimir at (E, u); use it to seed the recursion off the Fock shell.
double casimir_seed(const CubicAlgebra& alg, double E, double u);

/// Φ(0..n_max) by forward recursion of the [B,C] diagonal relation.
std::vector<double> recurrence_oracle(const CubicAlgebra& alg, double E, double u, int n_max,
                                      double phi0 = 0.0);

struct MatrixRepresentation {
    int dimension = 0;
    double energy = 0.0;
    Eigen::MatrixXd N, b_raise, b_lower, A, B, C, K;
};

/// Unitary (p+1)-dimensional representation; NonUnitary if Φ(x) ≤ 0 for some 1 ≤ x ≤ p.
MatrixRepresentation build_matrix_representation(const CubicAlgebra& alg,
                                                 const StructureFunction& phi, int p, double E);

struct RepresentationResiduals {
    double ac = 0.0;       // [A,C] relation
    double bc = 0.0;       // [B,C] relation
    double casimir = 0.0;  // K matrix against K(E)·1
};

RepresentationResiduals representation_residuals(const CubicAlgebra& alg,
                                                 const MatrixRepresentation& rep);

} // namespace cubalg
