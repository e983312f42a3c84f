#include "doctest.h"

#include "cubalg/catalog.hpp"
#include "cubalg/error.hpp"
#include "cubalg/solver.hpp"
#include "cubalg/special.hpp"
#include "cubalg/susy.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <set>

using namespace cubalg;

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

const Grid1D fine{14.0, 8001};

WaveFunction1D raised(int k)
{
    WaveFunction1D f = sample(fine, [k](double x) { return p1_raised(k, 1.0, x); }, "");
    normalize(f);
    return f;
}

// largest |f - s·g| over the grid with the sign s chosen to fit
double distance_up_to_sign(const std::vector<double>& f, const std::vector<double>& g)
{
    double plus = 0.0, minus = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        plus = std::max(plus, std::abs(f[i] - g[i]));
        minus = std::max(minus, std::abs(f[i] + g[i]));
    }
    return std::min(plus, minus);
}

std::set<long> energy_set(const Spectrum& s, double e_max)
{
    std::set<long> out;
    for (const Level& l : s.merged)
        if (l.energy <= e_max + 1e-9)
            out.insert(std::lround(2.0 * l.energy));
    return out;
}

} // namespace

TEST_SUITE("susy_factorization")
{
    TEST_CASE("partner potentials")
    {
        const FactorizedPair pair = partner_pair_p1(1.0, 1.0);
        CHECK(pair.h2(0.0) == doctest::Approx(1.25));
        CHECK(pair.h1(0.0) == doctest::Approx(-1.25));
        CHECK(pair.shift == doctest::Approx(0.75));
        const PotentialSpec p1 = make_potential(PotentialId::P1);
        for (double x : {-2.0, 0.3, 1.7})
            CHECK(pair.h1(x) == doctest::Approx(p1.x.v(x) + 0.75));
        const FactorizedPair scaled = partner_pair_p1(2.0, 0.5);
        CHECK(scaled.h2(0.0) == doctest::Approx(1.25 * 0.25 / 4.0));
    }

    TEST_CASE("zero mode")
    {
        const FactorizedPair pair = partner_pair_p1(1.0, 1.0);
        const WaveFunction1D phi0 = ground_state_p1(1.0, 1.0, fine);
        CHECK(norm(phi0.values, fine.h()) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(norm(apply_b(pair, phi0), fine.h()) < 1e-6);
        CHECK(std::abs(eigen_residual(pair.h1, 1.0, phi0).second) < 1e-6);
        const int mid = (fine.n - 1) / 2;
        CHECK(phi0.values[mid] == doctest::Approx(std::pow(2.0 / std::numbers::pi, 0.25)).epsilon(1e-8));
        for (int i = 0; i < fine.n; ++i)
            REQUIRE(phi0.values[i] == doctest::Approx(phi0.values[fine.n - 1 - i]).epsilon(1e-12));
    }

    TEST_CASE("raising partner eigenfunctions")
    {
        const FactorizedPair pair = partner_pair_p1(1.0, 1.0);
        const double ell = std::sqrt(2.0);
        for (int k = 0; k < 4; ++k) {
            const WaveFunction1D chi = sample(fine, [&](double x) { return oscillator_function(k, ell, x); }, "");
            const double E2 = (k + 3.0) / 2.0;
            CHECK(eigen_residual(pair.h2, 1.0, chi).first < 1e-5);
            const WaveFunction1D up = raise_eigenfunction(pair, chi, E2);
            const auto [res, E1] = eigen_residual(pair.h1, 1.0, up);
            CHECK(res < 1e-5);
            CHECK(E1 == doctest::Approx(E2).epsilon(1e-6));
            CHECK(distance_up_to_sign(up.values, raised(k).values) < 1e-5);
        }

        // the first raised state in its rational form
        const double c = 1.0 / (std::sqrt(3.0) * std::pow(2.0 * std::numbers::pi, 0.25));
        const WaveFunction1D phi1 = sample(
            fine, [c](double x) { return c * std::exp(-x * x / 4.0) * x * (3.0 + x * x) / (1.0 + x * x); }, "");
        CHECK(norm(phi1.values, fine.h()) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(distance_up_to_sign(phi1.values, raised(0).values) < 1e-6);

        const WaveFunction1D chi0 = sample(fine, [&](double x) { return oscillator_function(0, ell, x); }, "");
        CHECK(code_of([&] { raise_eigenfunction(pair, chi0, 0.0); }) == ErrorCode::RaisingUndefined);
        CHECK(code_of([&] { raise_eigenfunction(pair, chi0, -1.0); }) == ErrorCode::RaisingUndefined);
    }

    TEST_CASE("catalogued factorized spectra")
    {
        const SusySpectrum p1 = susy_spectrum(PotentialId::P1, {}, 3.0);
        CHECK(p1.spectrum.merged.front().energy == doctest::Approx(-0.5));
        bool singlet = false;
        for (const auto& f : p1.families)
            if (f.name == "p1_singlet") {
                singlet = true;
                CHECK(f.formula == "E = hbar^2*(k2-1)/(2*a0^2)");
                CHECK(!f.eigenfunction.empty());
            }
        CHECK(singlet);

        const SusySpectrum p4 = susy_spectrum(PotentialId::P4, {}, 3.0);
        std::set<double> p4_singlets;
        for (const auto& e : p4.spectrum.entries)
            if (e.family == "p4_singlet")
                p4_singlets.insert(e.energy);
        CHECK(p4_singlets == std::set<double>{0.0, 1.5, 3.0});

        CHECK(susy_spectrum(PotentialId::P6, {}, 1.0).spectrum.merged.front().energy == doctest::Approx(-1.5));
        CHECK(susy_spectrum(PotentialId::P5, {}, 4.0).spectrum.merged.front().energy == doctest::Approx(1.0));

        for (PotentialId id : {PotentialId::P2, PotentialId::P3, PotentialId::ReducibleIso})
            CHECK(code_of([&] { susy_spectrum(id, {}, 3.0); }) == ErrorCode::NotSusyCatalogued);
    }

    TEST_CASE("ladder operators")
    {
        const LadderOperators lad = ladder_operators_p1(1.0, 1.0);
        const WaveFunction1D phi0 = ground_state_p1(1.0, 1.0, fine);
        CHECK(norm(lad.M(fine, phi0.values), fine.h()) < 1e-5);
        CHECK(norm(lad.M_dag(fine, phi0.values), fine.h()) < 1e-5);

        // M† raises an h1 eigenstate by half the level spacing of the y ladder
        const FactorizedPair& pair = lad.pair;
        // M† then H stacks five differences, so rounding grows fast on finer grids
        const Grid1D mid{14.0, 4001};
        for (int k = 0; k < 3; ++k) {
            WaveFunction1D up = sample(mid, [k](double x) { return p1_raised(k, 1.0, x); }, "");
            up.values = lad.M_dag(mid, up.values);
            normalize(up);
            const auto [res, E] = eigen_residual(pair.h1, 1.0, up);
            CHECK(res < 1e-4);
            CHECK(E == doctest::Approx((k + 3.0) / 2.0 + 0.5).epsilon(1e-6));
        }

        CHECK(lad.commutator_LLdag() == doctest::Approx(1.0));
        std::vector<double> f(fine.n);
        for (int i = 0; i < fine.n; ++i)
            f[i] = std::exp(-fine.x(i) * fine.x(i) / 3.0) * (1.0 + 0.5 * fine.x(i));
        const auto a = lad.L(fine, lad.L_dag(fine, f));
        const auto b = lad.L_dag(fine, lad.L(fine, f));
        std::vector<double> d(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            d[i] = a[i] - b[i] - lad.commutator_LLdag() * f[i];
        CHECK(norm(d, fine.h()) / norm(f, fine.h()) < 1e-6);
    }

    TEST_CASE("quintic relations on a truncated basis")
    {
        CHECK(code_of([] { quintic_subset_check(1.0, 1.0, 3); }) == ErrorCode::BasisTooSmall);
        const QuinticReport r = quintic_subset_check(1.0, 1.0, 30);
        for (const char* name : {"[H,G+] = +k G+", "[H,G-] = -k G-", "[A,G+] = -2k G+", "[A,G-] = +2k G-"})
            CHECK(r.residual(name) < 1e-3);
        CHECK(r.residual("[G-,G+] = 4k (H - A/2)") < 1e-3);
        CHECK_THROWS_AS(r.residual("[X,Y] = 0"), std::out_of_range);

        // doubling the basis never worsens a relation beyond the quadrature floor
        const QuinticReport small = quintic_subset_check(1.0, 1.0, 15);
        for (const auto& rel : r.relations)
            CHECK(rel.residual <= std::max(small.residual(rel.relation) * (1.0 + 1e-9), 1e-8));
    }

    TEST_CASE("printed commutator of the quadratic ladders" * doctest::should_fail())
    {
        CHECK(quintic_subset_check(1.0, 1.0, 30).residual("[G-,G+] = 4a^2 hbar^2 (H + A/2)") < 1e-3);
    }

    TEST_CASE("supercharge closure")
    {
        const FactorizedPair pair = partner_pair_p1(1.0, 1.0);
        const double coarse = sl11_residual(pair, Grid1D{14.0, 2001});
        const double finer = sl11_residual(pair, Grid1D{14.0, 4001});
        CHECK(finer < coarse);
        CHECK(finer < 1e-6);
    }

    TEST_CASE("partner isospectrality")
    {
        const IsospectralityReport r = partner_isospectrality(partner_pair_p1(1.0, 1.0), 8);
        CHECK(std::abs(r.zero_mode) < 1e-4);
        CHECK(r.max_delta < 1e-4);
        for (int k = 0; k < 8; ++k)
            CHECK(r.h2[k] == doctest::Approx((k + 3.0) / 2.0).epsilon(1e-5));
    }

    TEST_CASE("factorized and algebraic energy sets")
    {
        const double e_max = 4.0;
        const std::set<long> susy = energy_set(susy_spectrum(PotentialId::P1, {}, e_max).spectrum, e_max);
        std::set<long> alg = energy_set(algebraic_reference(PotentialId::P1, {}, 10), e_max);
        for (int k2 = 0; k2 <= 9; ++k2)
            alg.insert(k2 - 1);
        CHECK(susy == alg);
    }
}
