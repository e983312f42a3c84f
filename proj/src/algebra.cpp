#include "cubalg/algebra.hpp"

#include "cubalg/error.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cubalg {

namespace {

void bound(const EnergyPolynomial& p, int max_degree, const char* name)
{
    if (p.degree() > max_degree) {
        std::ostringstream os;
        os << "coefficient " << name << " has degree " << p.degree() << " > " << max_degree;
        throw std::invalid_argument(os.str());
    }
}

bool is_pole(double z)
{
    const double tol = 1e-12;
    return std::abs(z) < tol || std::abs(z + 1.0) < tol || std::abs(z + 0.5) < tol;
}

double rho_case1(double beta, double z)
{
    const double t = 1.0 + 2.0 * z;
    return 1.0 / (3.0 * 4096.0 * std::pow(beta, 8) * z * (1.0 + z) * t * t);
}

} // namespace

void check_degree_bounds(const CubicAlgebra& alg)
{
    bound(alg.gamma, 1, "gamma");
    bound(alg.delta, 1, "delta");
    bound(alg.nu, 1, "nu");
    bound(alg.epsilon, 2, "epsilon");
    bound(alg.xi, 2, "xi");
    bound(alg.zeta, 3, "zeta");
    bound(alg.casimir, 4, "casimir");
}

AlgebraValues evaluate(const CubicAlgebra& alg, double E)
{
    AlgebraValues v;
    v.alpha = alg.alpha;
    v.beta = alg.beta;
    v.mu = alg.mu;
    v.sqrt_delta_branch = alg.sqrt_delta_branch < 0 ? -1 : 1;
    v.gamma = alg.gamma(E);
    v.delta = alg.delta(E);
    v.epsilon = alg.epsilon(E);
    v.nu = alg.nu(E);
    v.xi = alg.xi(E);
    v.zeta = alg.zeta(E);
    v.K = alg.casimir(E);
    return v;
}

double casimir_value(const CubicAlgebra& alg, double E) { return alg.casimir(E); }

AlgebraCase algebra_case(const CubicAlgebra& alg, double E)
{
    if (alg.beta != 0.0)
        return AlgebraCase::BetaNonzero;
    if (alg.delta(E) != 0.0)
        return AlgebraCase::BetaZero;
    throw Error(ErrorCode::RealizationUndefined, "beta = 0 and delta(E) = 0");
}

double Realization::A(double N) const
{
    const double z = N + u;
    if (kind == AlgebraCase::BetaZero)
        return sqrt_delta * z;
    return 0.5 * v.beta * (z * z - 0.25 - v.delta / (v.beta * v.beta));
}

double Realization::b(double N) const
{
    const double z = N + u;
    if (kind == AlgebraCase::BetaZero)
        return -v.alpha * z * z - v.gamma / sqrt_delta * z - v.epsilon / v.delta;
    // from αA² + 2βAb + γA + δb + ε = 0
    const double a = A(N);
    return -(v.alpha * a * a + v.gamma * a + v.epsilon) / (2.0 * v.beta * a + v.delta);
}

double Realization::rho(double N) const
{
    if (kind == AlgebraCase::BetaZero)
        return 1.0;
    const double z = N + u;
    if (is_pole(z))
        return std::numeric_limits<double>::infinity();
    return rho_case1(v.beta, z);
}

Realization realize_case1(const CubicAlgebra& alg, double E, double u, int n_max)
{
    if (alg.beta == 0.0)
        throw std::invalid_argument("realize_case1 requires beta != 0");
    for (int n = 0; n <= n_max; ++n) {
        if (is_pole(n + u)) {
            std::ostringstream os;
            os << "rho has a pole at N=" << n << " (N+u=" << n + u << ")";
            throw Error(ErrorCode::RhoPole, os.str());
        }
    }
    Realization r;
    r.kind = AlgebraCase::BetaNonzero;
    r.v = evaluate(alg, E);
    r.u = u;
    return r;
}

Realization realize_case2(const CubicAlgebra& alg, double E, double u)
{
    if (alg.beta != 0.0)
        throw std::invalid_argument("realize_case2 requires beta = 0");
    Realization r;
    r.kind = AlgebraCase::BetaZero;
    r.v = evaluate(alg, E);
    r.u = u;
    if (!(r.v.delta > 0.0)) {
        std::ostringstream os;
        os << "delta(E) = " << r.v.delta << " has no real square root";
        throw Error(ErrorCode::RealizationUndefined, os.str());
    }
    r.sqrt_delta = r.v.sqrt_delta_branch * std::sqrt(r.v.delta);
    return r;
}

Realization realize(const CubicAlgebra& alg, double E, double u, int n_max)
{
    if (algebra_case(alg, E) == AlgebraCase::BetaNonzero)
        return realize_case1(alg, E, u, n_max);
    return realize_case2(alg, E, u);
}

DiagonalRelations diagonal_relations(const Realization& r, double N)
{
    const AlgebraValues& v = r.v;
    const double a = r.A(N);
    const double b = r.b(N);
    const double dn = r.dA(N);
    const double dm = r.dA(N - 1);
    const double beta = v.beta, alpha = v.alpha, mu = v.mu, delta = v.delta;
    const double nu = v.nu, gamma = v.gamma, eps = v.epsilon, xi = v.xi, zeta = v.zeta;

    DiagonalRelations d;
    d.d1 = 2.0 * dn + beta;
    d.d0 = 2.0 * dm - beta;
    d.R = mu * a * a * a + nu * a * a - beta * b * b - 2.0 * alpha * a * b + xi * a - gamma * b + zeta;
    const double s = beta * beta - 2.0 * beta * a - delta;
    d.f = s - dn * dn;
    d.g = s - dm * dm;
    d.F = mu / 2.0 * std::pow(a, 4) + 2.0 / 3.0 * (nu + mu * beta) * a * a * a
        + (-mu * beta * beta / 6.0 + beta * nu / 3.0 + delta * mu / 2.0 + alpha * alpha + xi) * a * a
        + (-mu * beta * delta / 6.0 + delta * nu / 3.0 + alpha * gamma + 2.0 * zeta) * a
        + s * b * b
        + (2.0 * alpha * beta * a - 2.0 * alpha * a * a + beta * gamma - 2.0 * eps - 2.0 * gamma * a) * b;
    return d;
}

double StructureFunction::factored_at(double x) const
{
    double r = c;
    for (double root : roots)
        r *= (x + u - root);
    return r;
}

double StructureFunction::coefficient_at(double x) const { return coefficients(x + u); }

double StructureFunction::operator()(double x) const
{
    if (has_coefficient)
        return coefficient_at(x);
    if (has_factored)
        return factored_at(x);
    throw std::logic_error("structure function has no populated form");
}

namespace {

Poly case2_polynomial(const AlgebraValues& v)
{
    if (!(v.delta > 0.0)) {
        std::ostringstream os;
        os << "delta(E) = " << v.delta << " has no real square root";
        throw Error(ErrorCode::RealizationUndefined, os.str());
    }
    const double d = v.delta, s = v.sqrt_delta_branch * std::sqrt(d), d32 = d * s;
    const double al = v.alpha, ga = v.gamma, ep = v.epsilon, nu = v.nu, xi = v.xi, ze = v.zeta, mu = v.mu;
    const double c0 = v.K / (-4.0 * d) - ga * ep / (4.0 * d32) - ze / (4.0 * s) + ep * ep / (4.0 * d * d);
    const double c1 = -al * ep / (2.0 * d) - xi / 4.0 - ga * ga / (4.0 * d) + ga * ep / (2.0 * d32)
                    + al * ga / (4.0 * s) + ze / (2.0 * s) + nu * s / 12.0;
    const double c2 = -nu * s / 4.0 - 3.0 * al * ga / (4.0 * s) + ga * ga / (4.0 * d) + ep * al / (2.0 * d)
                    + al * al / 4.0 + xi / 4.0 + mu * d / 8.0;
    const double c3 = -al * al / 2.0 + ga * al / (2.0 * s) + nu * s / 6.0 - mu * d / 4.0;
    const double c4 = al * al / 4.0 + mu * d / 8.0;
    return Poly{c0, c1, c2, c3, c4};
}

Poly case1_polynomial(const AlgebraValues& v)
{
    const double be = v.beta, al = v.alpha, mu = v.mu, de = v.delta;
    const double ga = v.gamma, ep = v.epsilon, nu = v.nu, xi = v.xi, ze = v.zeta;

    const Poly A{-be / 8.0 - de / (2.0 * be), 0.0, be / 2.0};
    const Poly Dq{-be * be / 4.0, 0.0, be * be};
    const Poly Bn = -(al * (A * A) + ga * A + Poly{ep});
    const Poly Dq2 = Dq * Dq;
    const Poly A2 = A * A, A3 = A2 * A, A4 = A3 * A;

    const Poly Rpoly = (mu * A3 + nu * A2 + xi * A + Poly{ze}) * Dq2 - be * (Bn * Bn)
                     - 2.0 * al * (A * Bn * Dq) - ga * (Bn * Dq);
    const Poly s = Poly{be * be - de} - 2.0 * be * A;
    const Poly Fpoly = (mu / 2.0 * A4 + 2.0 / 3.0 * (nu + mu * be) * A3
                        + (-mu * be * be / 6.0 + be * nu / 3.0 + de * mu / 2.0 + al * al + xi) * A2
                        + (-mu * be * de / 6.0 + de * nu / 3.0 + al * ga + 2.0 * ze) * A) * Dq2
                     + s * Bn * Bn
                     + (2.0 * al * be * A - 2.0 * al * A2 + Poly{be * ga - 2.0 * ep} - 2.0 * ga * A) * Bn * Dq;

    const Poly dn{be / 2.0, be};   // ΔA(n)   = β(z + 1/2)
    const Poly dm{-be / 2.0, be};  // ΔA(n−1) = β(z − 1/2)
    const Poly d1{2.0 * be, 2.0 * be};
    const Poly d0{-2.0 * be, 2.0 * be};
    const Poly f = s - dn * dn;
    const Poly g = s - dm * dm;

    const Poly num = d1 * (v.K * Dq2 - Fpoly) - f * Rpoly;
    // 1/ρ(n−1) = 3·2¹²β⁸ (z−1) z (2z−1)²
    const Poly inv_rho_prev = 3.0 * 4096.0 * std::pow(be, 8) * (Poly{-1.0, 1.0} * Poly{0.0, 1.0} * Poly{-1.0, 2.0} * Poly{-1.0, 2.0});
    const Poly den = Dq2 * (f * d0 + g * d1);
    auto [q, rem] = divmod(num * inv_rho_prev, den);

    double scale = 0.0, rmax = 0.0;
    for (double c : q.coeffs())
        scale = std::max(scale, std::abs(c));
    for (double c : rem.coeffs())
        rmax = std::max(rmax, std::abs(c));
    double dscale = 0.0;
    for (double c : den.coeffs())
        dscale = std::max(dscale, std::abs(c));
    if (rmax > 1e-8 * std::max(scale * dscale, std::numeric_limits<double>::min()))
        throw std::logic_error("Case 1 structure function is not polynomial");
    return q.trimmed(1e-15);
}

} // namespace

Poly structure_polynomial(const CubicAlgebra& alg, double E)
{
    const AlgebraValues v = evaluate(alg, E);
    if (algebra_case(alg, E) == AlgebraCase::BetaNonzero)
        return case1_polynomial(v);
    return case2_polynomial(v);
}

StructureFunction structure_function_case2(const CubicAlgebra& alg, double E, double u)
{
    if (alg.beta != 0.0)
        throw std::invalid_argument("structure_function_case2 requires beta = 0");
    StructureFunction s;
    s.u = u;
    s.E = E;
    s.has_coefficient = true;
    s.coefficients = case2_polynomial(evaluate(alg, E));
    return s;
}

StructureFunction structure_function_case1(const CubicAlgebra& alg, double E, double u)
{
    realize_case1(alg, E, u);
    StructureFunction s;
    s.u = u;
    s.E = E;
    s.has_coefficient = true;
    s.coefficients = case1_polynomial(evaluate(alg, E));
    return s;
}

double structure_function_case1_at(const CubicAlgebra& alg, double E, double u, double n,
                                   const std::function<double(double)>& rho)
{
    Realization r;
    r.kind = AlgebraCase::BetaNonzero;
    r.v = evaluate(alg, E);
    r.u = u;
    if (r.v.beta == 0.0)
        throw std::invalid_argument("structure_function_case1_at requires beta != 0");
    const DiagonalRelations d = diagonal_relations(r, n);
    const double w = (d.d1 * (r.v.K - d.F) - d.f * d.R) / (d.f * d.d0 + d.g * d.d1);
    const double rp = rho(n - 1);
    if (rp == 0.0 || !std::isfinite(rp))
        throw Error(ErrorCode::RhoPole, "weight vanishes or diverges at N-1");
    return w / rp;
}

double casimir_seed(const CubicAlgebra& alg, double E, double u)
{
    const Realization r = realize(alg, E, u, 0);
    const DiagonalRelations d = diagonal_relations(r, 0.0);
    if (r.kind == AlgebraCase::BetaZero) {
        // K = −2δ(Φ(1)+Φ(0)) + F with Φ(1) = Φ(0) + R/(2√δ)
        return (d.F - r.v.K - r.sqrt_delta * d.R) / (4.0 * r.v.delta);
    }
    const double w = (d.d1 * (r.v.K - d.F) - d.f * d.R) / (d.f * d.d0 + d.g * d.d1);
    const double rp = r.rho(-1.0);
    if (!std::isfinite(rp) || rp == 0.0)
        throw Error(ErrorCode::RhoPole, "weight is singular at N = -1");
    return w / rp;
}

std::vector<double> recurrence_oracle(const CubicAlgebra& alg, double E, double u, int n_max,
                                      double phi0)
{
    const Realization r = realize(alg, E, u, n_max);
    std::vector<double> phi(n_max + 1, 0.0);
    phi[0] = phi0;
    double w = 0.0;
    if (phi0 != 0.0) {
        const double rp = r.rho(-1.0);
        if (!std::isfinite(rp))
            throw Error(ErrorCode::RhoPole, "weight is singular at N = -1");
        w = phi0 * rp;
    }
    for (int n = 0; n < n_max; ++n) {
        const DiagonalRelations d = diagonal_relations(r, n);
        const double lead = d.d1 * r.rho(n);
        if (lead == 0.0 || !std::isfinite(lead)) {
            std::ostringstream os;
            os << "leading factor vanishes at N=" << n;
            throw Error(ErrorCode::RecurrenceSingular, os.str());
        }
        w = (d.R + d.d0 * w) / d.d1;
        phi[n + 1] = w / r.rho(n);
    }
    return phi;
}

MatrixRepresentation build_matrix_representation(const CubicAlgebra& alg,
                                                 const StructureFunction& phi, int p, double E)
{
    if (p < 0)
        throw std::invalid_argument("p must be nonnegative");
    const Realization r = realize(alg, E, phi.u, p);
    const int dim = p + 1;

    std::vector<double> vals(dim + 1);
    for (int x = 0; x <= dim; ++x)
        vals[x] = phi(x);
    for (int x = 1; x <= p; ++x) {
        if (!(vals[x] > 0.0)) {
            std::ostringstream os;
            os << "Phi(" << x << ") = " << vals[x] << " <= 0";
            throw Error(ErrorCode::NonUnitary, os.str());
        }
    }

    MatrixRepresentation m;
    m.dimension = dim;
    m.energy = E;
    m.N = Eigen::MatrixXd::Zero(dim, dim);
    m.b_raise = Eigen::MatrixXd::Zero(dim, dim);
    m.A = Eigen::MatrixXd::Zero(dim, dim);
    m.B = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        m.N(n, n) = n;
        m.A(n, n) = r.A(n);
        m.B(n, n) = r.b(n);
    }
    for (int n = 0; n + 1 < dim; ++n) {
        m.b_raise(n + 1, n) = std::sqrt(vals[n + 1]);
        const double w = r.rho(n) * vals[n + 1];
        if (!(w > 0.0))
            throw Error(ErrorCode::NonUnitary, "weight times Phi is not positive");
        m.B(n + 1, n) = std::sqrt(w);
        m.B(n, n + 1) = m.B(n + 1, n);
    }
    m.b_lower = m.b_raise.transpose();
    m.C = m.A * m.B - m.B * m.A;

    const AlgebraValues& v = r.v;
    const Eigen::MatrixXd& A = m.A;
    const Eigen::MatrixXd& B = m.B;
    const Eigen::MatrixXd& C = m.C;
    const Eigen::MatrixXd A2 = A * A, B2 = B * B;
    m.K = C * C - v.alpha * (A2 * B + B * A2) - v.beta * (A * B2 + B2 * A)
        + (v.alpha * v.beta - v.gamma) * (A * B + B * A) + (v.beta * v.beta - v.delta) * B2
        + (v.beta * v.gamma - 2.0 * v.epsilon) * B + v.mu / 2.0 * A2 * A2
        + 2.0 / 3.0 * (v.nu + v.mu * v.beta) * A2 * A
        + (-v.mu * v.beta * v.beta / 6.0 + v.beta * v.nu / 3.0 + v.delta * v.mu / 2.0 + v.alpha * v.alpha + v.xi) * A2
        + (-v.mu * v.beta * v.delta / 6.0 + v.delta * v.nu / 3.0 + v.alpha * v.gamma + 2.0 * v.zeta) * A;
    return m;
}

RepresentationResiduals representation_residuals(const CubicAlgebra& alg,
                                                 const MatrixRepresentation& rep)
{
    const AlgebraValues v = evaluate(alg, rep.energy);
    const Eigen::MatrixXd& A = rep.A;
    const Eigen::MatrixXd& B = rep.B;
    const Eigen::MatrixXd& C = rep.C;
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(rep.dimension, rep.dimension);
    const double tiny = std::numeric_limits<double>::min();

    RepresentationResiduals out;
    {
        const Eigen::MatrixXd lhs = A * C - C * A;
        const Eigen::MatrixXd t1 = v.alpha * A * A, t2 = v.beta * (A * B + B * A), t3 = v.gamma * A,
                              t4 = v.delta * B, t5 = v.epsilon * I;
        const double scale = lhs.norm() + t1.norm() + t2.norm() + t3.norm() + t4.norm() + t5.norm();
        out.ac = (lhs - t1 - t2 - t3 - t4 - t5).norm() / std::max(scale, tiny);
    }
    {
        const Eigen::MatrixXd lhs = B * C - C * B;
        const Eigen::MatrixXd A2 = A * A;
        const Eigen::MatrixXd t1 = v.mu * A2 * A, t2 = v.nu * A2, t3 = -v.beta * B * B,
                              t4 = -v.alpha * (A * B + B * A), t5 = v.xi * A, t6 = -v.gamma * B,
                              t7 = v.zeta * I;
        const double scale = lhs.norm() + t1.norm() + t2.norm() + t3.norm() + t4.norm() + t5.norm()
                           + t6.norm() + t7.norm();
        out.bc = (lhs - t1 - t2 - t3 - t4 - t5 - t6 - t7).norm() / std::max(scale, tiny);
    }
    {
        const Eigen::MatrixXd target = v.K * I;
        const double scale = std::max({rep.K.norm(), target.norm(), (rep.C * rep.C).norm()});
        out.casimir = (rep.K - target).norm() / std::max(scale, tiny);
    }
    return out;
}

} // namespace cubalg
