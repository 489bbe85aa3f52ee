#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "oracles.hpp"
#include "viscobessel/laplace/stehfest.hpp"
#include "viscobessel/laplace/talbot.hpp"
#include "viscobessel/models/material_model.hpp"

using namespace viscobessel;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using Q = laplace::oracle_real;

namespace {

template <class Real, class F>
laplace::LaplaceFunction<Real> fn(F f, const char* label) {
    return laplace::make_laplace_function<Real>(std::move(f), label);
}

template <class Real>
laplace::LaplaceFunction<Real> step() {
    return fn<Real>([](const std::complex<Real>& s) { return Real(1) / s; }, "1/s");
}

template <class Real>
laplace::LaplaceFunction<Real> ramp() {
    return fn<Real>([](const std::complex<Real>& s) { return Real(1) / (s * s); }, "1/s^2");
}

template <class Real>
laplace::LaplaceFunction<Real> decay() {
    return fn<Real>([](const std::complex<Real>& s) { return Real(1) / (s + Real(1)); }, "1/(s+1)");
}

std::vector<double> log_grid(double a, double b, int n) {
    std::vector<double> g;
    for (int i = 0; i < n; ++i) g.push_back(a * std::pow(b / a, i / double(n - 1)));
    return g;
}

std::vector<models::MaterialModel> sample_models(specfun::ZeroCache& cache) {
    std::vector<models::MaterialModel> out;
    for (double nu : {-0.5, 0.0, 1.0}) out.push_back(models::make_model(models::ModelParams::bessel(nu), {}, cache));
    out.push_back(models::make_model(models::ModelParams::fmax(1.0, 1.0)));
    out.push_back(models::make_model(models::ModelParams::fmax(0.5, 2.0)));
    out.push_back(models::make_model(models::ModelParams::asymptotic(0.5)));
    return out;
}

}  // namespace

TEST_CASE("Talbot inverts elementary transforms in double precision") {
    CHECK_THAT(laplace::invert_talbot(step<double>(), 1.0, 24), WithinAbs(1.0, 1e-10));
    CHECK_THAT(laplace::invert_talbot(ramp<double>(), 0.7, 24), WithinAbs(0.7, 1e-10));
    CHECK_THAT(laplace::invert_talbot(decay<double>(), 1.0, 24), WithinAbs(std::exp(-1.0), 1e-9));
}

TEST_CASE("Talbot inverts elementary transforms in the oracle precision") {
    CHECK_THAT(double(laplace::invert_talbot(step<Q>(), Q(1))), WithinAbs(1.0, 1e-15));
    CHECK_THAT(double(laplace::invert_talbot(ramp<Q>(), Q(0.7))), WithinAbs(0.7, 1e-15));
    CHECK_THAT(double(laplace::invert_talbot(decay<Q>(), Q(1))), WithinAbs(std::exp(-1.0), 1e-15));
    // s^{-3/2} <-> 2 sqrt(t/pi)
    const auto half = fn<Q>([](const std::complex<Q>& s) { return Q(1) / (s * sqrt(s)); }, "s^-3/2");
    CHECK_THAT(double(laplace::invert_talbot(half, Q(2))), WithinRel(2.0 * std::sqrt(2.0 / std::numbers::pi), 1e-15));
}

TEST_CASE("Talbot preconditions and non-finite contour values") {
    CHECK_THROWS_AS(laplace::invert_talbot(step<double>(), 0.0), domain_error);
    CHECK_THROWS_AS(laplace::invert_talbot(step<double>(), 1.0, 7), domain_error);
    const auto bad = fn<double>(
        [](const std::complex<double>&) { return std::complex<double>(std::numeric_limits<double>::quiet_NaN()); },
        "nan");
    try {
        (void)laplace::invert_talbot(bad, 1.0);
        FAIL("expected computation_error");
    } catch (const computation_error& e) {
        CHECK(std::string(e.what()).find("s = (") != std::string::npos);
    }
}

TEST_CASE("Stehfest weights for N = 8") {
    const auto& w = laplace::stehfest_weights<double>(8);
    const double expected[] = {-1.0 / 3.0, 145.0 / 3.0, -906.0, 16394.0 / 3.0, -43130.0 / 3.0, 18730.0,
                               -35840.0 / 3.0, 8960.0 / 3.0};
    REQUIRE(w.size() == 8);
    for (int i = 0; i < 8; ++i) CHECK_THAT(w[i], WithinRel(expected[i], 1e-15));
}

TEST_CASE("Stehfest weights sum to zero exactly") {
    for (int n = 8; n <= 32; n += 2) {
        const auto exact = laplace::detail::stehfest_weights_exact(n);
        boost::multiprecision::cpp_rational sum = 0;
        for (const auto& v : exact) sum += v;
        CHECK(sum == 0);
    }
    CHECK_THROWS_AS(laplace::stehfest_weights<double>(7), domain_error);
    CHECK_THROWS_AS(laplace::stehfest_weights<double>(34), domain_error);
}

TEST_CASE("Stehfest inverts elementary transforms") {
    CHECK_THAT(laplace::invert_stehfest(step<double>(), 2.0), WithinAbs(1.0, 1e-8));
    const auto half = fn<double>([](const std::complex<double>& s) { return 1.0 / (s * std::sqrt(s)); }, "s^-3/2");
    CHECK_THAT(laplace::invert_stehfest(half, 1.0), WithinAbs(2.0 / std::sqrt(std::numbers::pi), 1e-5));
    CHECK_THAT(laplace::invert_stehfest(decay<double>(), 0.5), WithinAbs(0.60653066, 1e-5));
}

TEST_CASE("Talbot has reached its plateau at the default node count") {
    // M = 128 would need more digits than float128 carries, so the plateau
    // is checked one doubling below the default. Values are O(1) with
    // J_g = G_g = 1, so the absolute floor is relative to the glass value.
    specfun::ZeroCache cache;
    for (const auto& model : sample_models(cache)) {
        const auto creep = models::creep_transform<Q>(model);
        const auto relax = models::relaxation_transform<Q>(model);
        for (double t : {0.05, 0.3, 1.0, 2.0}) {
            const double j32 = double(laplace::invert_talbot(creep, Q(t), 32));
            const double j64 = double(laplace::invert_talbot(creep, Q(t), 64));
            const double g32 = double(laplace::invert_talbot(relax, Q(t), 32));
            const double g64 = double(laplace::invert_talbot(relax, Q(t), 64));
            INFO(creep.label << " t = " << t << " dJ " << j64 - j32 << " dG " << g64 - g32);
            CHECK(std::fabs(j64 - j32) < 1e-12 * std::fabs(j64) + 1e-15);
            CHECK(std::fabs(g64 - g32) < 1e-12 * std::fabs(g64) + 1e-15);
        }
    }
}

TEST_CASE("Talbot and Stehfest agree on the model transforms") {
    // Stehfest cannot resolve a relaxation function that has decayed by
    // decades; below G = 1e-3 the comparison is absolute against G_g = 1.
    specfun::ZeroCache cache;
    for (const auto& model : sample_models(cache)) {
        const auto creep = models::creep_transform<Q>(model);
        const auto relax = models::relaxation_transform<Q>(model);
        for (double t : log_grid(0.05, 2.0, 12)) {
            const double jt = double(laplace::invert_talbot(creep, Q(t)));
            const double js = double(laplace::invert_stehfest(creep, Q(t), 24));
            const double gt = double(laplace::invert_talbot(relax, Q(t)));
            const double gs = double(laplace::invert_stehfest(relax, Q(t), 24));
            INFO(creep.label << " t = " << t << " J " << jt << " vs " << js << ", G " << gt << " vs " << gs);
            CHECK(oracle::relative(js, jt) < 1e-4);
            if (gt >= 1e-3) {
                CHECK(oracle::relative(gs, gt) < 1e-4);
            } else {
                CHECK(std::fabs(gs - gt) < 1e-6);
            }
        }
    }
}

TEST_CASE("Talbot of the fmax transforms reproduces the closed forms") {
    const auto model = models::make_model(models::ModelParams::fmax(1.0, 1.0));
    CHECK_THAT(double(laplace::invert_talbot(models::creep_transform<Q>(model), Q(1))),
               WithinAbs(1.0 + 2.0 / std::sqrt(std::numbers::pi), 1e-8));
    CHECK_THAT(double(laplace::invert_talbot(models::relaxation_transform<Q>(model), Q(1))),
               WithinAbs(0.4275835762, 1e-7));
    const auto asym = models::make_model(models::ModelParams::asymptotic(0.5));
    CHECK_THAT(double(laplace::invert_talbot(models::relaxation_transform<Q>(asym), Q(0.25))),
               WithinAbs(oracle::erfcx(1.5), 1e-7));
}
