#include "doctest.h"

#include "cubalg/error.hpp"
#include "cubalg/pt.hpp"

#include <cmath>
#include <functional>

using namespace cubalg;
using C = std::complex<double>;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no domain error raised");
    return ErrorCode::NotCatalogued;
}

const Grid1D fine{10.0, 8001};

std::vector<C> sampled(const Grid1D& g, const std::function<C(double)>& f)
{
    std::vector<C> v(g.n);
    for (int i = 0; i < g.n; ++i)
        v[i] = f(g.x(i));
    return v;
}

bool contains(const PtReport& r, double E)
{
    for (const auto& l : r.levels)
        if (std::abs(l.energy.real() - E) < 1e-6)
            return true;
    return false;
}

} // namespace

TEST_SUITE("pt_complexification")
{
    TEST_CASE("potentials are PT symmetric")
    {
        for (PtPart p : {PtPart::HarmonicY, PtPart::P1X, PtPart::P1XPartner1, PtPart::P1XPartner2}) {
            const auto v = pt_potential(p, 1.0, 1.0, 0.1);
            for (double x : {0.3, 1.0, 2.7})
                CHECK(std::abs(v(-x) - std::conj(v(x))) < 1e-12);
        }
        CHECK(parse_pt_part("h1") == PtPart::P1XPartner1);
        CHECK(code_of([] { parse_pt_part("z"); }) == ErrorCode::UnknownPotential);
        CHECK_THROWS_AS(pt_eigenvalues(PtPart::HarmonicY, 1.0, 1.0, 0.0, 2), std::invalid_argument);
    }

    TEST_CASE("complexified oscillator")
    {
        const PtReport r = pt_eigenvalues(PtPart::HarmonicY, 1.0, 1.0, 0.1, 6);
        REQUIRE(r.levels.size() == 6);
        for (int m = 0; m < 6; ++m) {
            CHECK(std::abs(r.levels[m].energy - C((m + 0.5) / 2.0, 0.0)) < 1e-6);
            CHECK(r.levels[m].sigma == (m % 2 == 0 ? 1 : -1));
        }
    }

    TEST_CASE("complexified partner spectra")
    {
        const PtReport h1 = pt_eigenvalues(PtPart::P1XPartner1, 1.0, 1.0, 0.1, 8);
        const PtReport h2 = pt_eigenvalues(PtPart::P1XPartner2, 1.0, 1.0, 0.1, 9);
        // the raised states carry (n+1)/2; two further levels sit below them
        for (int n = 0; n < 6; ++n)
            CHECK(contains(h1, (n + 1) / 2.0));
        CHECK(contains(h1, -1.0));
        CHECK(contains(h1, -0.5));

        // intertwining: h2 without its zero level has the spectrum of h1
        std::vector<double> rest;
        for (const auto& l : h2.levels)
            if (std::abs(l.energy.real()) > 1e-6)
                rest.push_back(l.energy.real());
        REQUIRE(rest.size() >= h1.levels.size());
        for (std::size_t i = 0; i < h1.levels.size(); ++i)
            CHECK(std::abs(h1.levels[i].energy.real() - rest[i]) < 1e-4);
    }

    TEST_CASE("printed x-part spectrum from the ground state up" * doctest::should_fail())
    {
        const PtReport h1 = pt_eigenvalues(PtPart::P1XPartner1, 1.0, 1.0, 0.1, 4);
        for (int n = 0; n < 4; ++n)
            CHECK(std::abs(h1.levels[n].energy.real() - (n + 1) / 2.0) < 1e-6);
    }

    TEST_CASE("reality and eps independence")
    {
        std::vector<std::vector<double>> re;
        std::vector<std::vector<int>> sig;
        for (double eps : {0.05, 0.1, 0.3}) {
            const PtReport r = pt_eigenvalues(PtPart::P1X, 1.0, 1.0, eps, 6);
            std::vector<double> e;
            std::vector<int> s;
            for (const auto& l : r.levels) {
                CHECK(std::abs(l.energy.imag()) < 1e-8 * std::max(1.0, std::abs(l.energy.real())));
                e.push_back(l.energy.real());
                s.push_back(l.sigma);
            }
            re.push_back(e);
            sig.push_back(s);
        }
        for (std::size_t j = 1; j < re.size(); ++j) {
            CHECK(sig[j] == sig[0]);
            for (std::size_t i = 0; i < re[0].size(); ++i)
                CHECK(std::abs(re[j][i] - re[0][i]) < 1e-6);
        }
    }

    TEST_CASE("closed-form eigenfunctions")
    {
        const double eps = 0.1;
        for (int m = 0; m < 3; ++m) {
            const auto r = pt_eigen_residual(PtPart::HarmonicY, 1.0, 1.0, eps, fine,
                                             [m](double x) { return pt_harmonic_state(m, 1.0, 0.1, x); });
            CHECK(r.residual < 1e-4);
            CHECK(std::abs(r.energy - C((m + 0.5) / 2.0, 0.0)) < 1e-6);
        }
        const auto zero = pt_eigen_residual(PtPart::P1XPartner2, 1.0, 1.0, eps, fine,
                                            [](double x) { return pt_partner_zero_mode(1.0, 0.1, x); });
        CHECK(zero.residual < 1e-4);
        CHECK(std::abs(zero.energy) < 1e-6);
        for (int n = 0; n < 4; ++n) {
            const auto r = pt_eigen_residual(PtPart::P1XPartner1, 1.0, 1.0, eps, fine,
                                             [n](double x) { return pt_raised_state(n, 1.0, 0.1, x); });
            CHECK(r.residual < 1e-4);
            CHECK(std::abs(r.energy - C((n + 1) / 2.0, 0.0)) < 1e-6);
        }

        // the lowest raised state in its rational form
        const auto g0 = pt_eigen_residual(PtPart::P1XPartner1, 1.0, 1.0, eps, fine, [](double x) {
            const C z(x, -0.1);
            return std::exp(-z * z / 4.0) * (3.0 + z * z * z * z) / (1.0 - z * z);
        });
        CHECK(g0.residual < 1e-4);
        CHECK(std::abs(g0.energy - 0.5) < 1e-6);
    }

    TEST_CASE("printed first excited rational form" * doctest::should_fail())
    {
        const auto r = pt_eigen_residual(PtPart::P1XPartner1, 1.0, 1.0, 0.1, fine, [](double x) {
            const C z(x, -0.1);
            return std::exp(-z * z / 4.0) * (3.0 + 2.0 * C(0.0, 1.0) * z + z * z * z * z) * z / (1.0 - z * z);
        });
        CHECK(r.residual < 1e-4);
    }

    TEST_CASE("pseudo-norm")
    {
        for (double eps : {0.05, 0.1, 0.2}) {
            const auto psi = sampled(fine, [eps](double x) { return pt_harmonic_state(0, 1.0, eps, x); });
            const PseudoNorm pn = pseudo_norm(psi, fine);
            CHECK(pn.sigma == 1);
            CHECK(pn.quadrature_error < 1e-8);
            const auto odd = sampled(fine, [eps](double x) { return pt_harmonic_state(1, 1.0, eps, x); });
            CHECK(pseudo_norm(odd, fine).sigma == -1);
        }
        // e^{-2x²}(1 − 4x²) integrates to zero
        const auto self = sampled(fine, [](double x) { return C(std::exp(-x * x) * (1.0 + 2.0 * x), 0.0); });
        CHECK(code_of([&] { pseudo_norm(self, fine); }) == ErrorCode::SelfOrthogonal);
        CHECK_THROWS_AS(pseudo_norm(self, Grid1D{10.0, 8001, true}), std::invalid_argument);
    }

    TEST_CASE("two-dimensional complexified spectrum")
    {
        const PtSpectrum2D s = pt_spectrum_2d(1.0, 1.0, 0.1, 8);
        REQUIRE(!s.spectrum.merged.empty());
        CHECK(s.spectrum.merged.front().energy == doctest::Approx(0.0).epsilon(1e-6));
        for (const auto& l : s.spectrum.merged)
            CHECK(std::abs(2.0 * l.energy - std::round(2.0 * l.energy)) < 1e-6);
    }

    TEST_CASE("printed two-dimensional complexified spectrum" * doctest::should_fail())
    {
        const PtSpectrum2D s = pt_spectrum_2d(1.0, 1.0, 0.1, 6);
        CHECK(s.spectrum.merged.front().energy == doctest::Approx(1.5));
        for (std::size_t p = 0; p < 2 && p < s.spectrum.merged.size(); ++p)
            CHECK(s.spectrum.merged[p].degeneracy == static_cast<int>(p) + 1);
    }
}
