#include <doctest.h>

#include <complex>

#include "alia/theta.hpp"

using namespace alia;

namespace {

// Reference oracle: plain double-sided series in long double precision,
// independent of the library's centered/truncated evaluation.
std::complex<long double> theta_ref(long double a, long double b, std::complex<long double> z,
                                    std::complex<long double> tau) {
    const long double pil = 3.14159265358979323846264338327950288L;
    std::complex<long double> I(0.0L, 1.0L), sum = 0.0L;
    for (int k = -100; k <= 100; ++k) {
        long double ka = k + a;
        sum += std::exp(I * pil * tau * ka * ka + 2.0L * pil * I * ka * (z + b));
    }
    return sum;
}

cplx ref(double a, double b, cplx z, cplx tau) {
    auto v = theta_ref(a, b, {z.real(), z.imag()}, {tau.real(), tau.imag()});
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

const double kGamma34 = 1.2254167024651776451;

}  // namespace

TEST_CASE("theta_general matches the reference series") {
    ModularParam tau(cplx(0.3, 0.9));
    for (cplx z : {cplx(0.0), cplx(0.21, 0.37), cplx(-0.4, 0.9), cplx(1.3, -0.2)}) {
        CHECK(std::abs(theta_general(0.0, 0.0, z, tau) - ref(0, 0, z, tau.tau())) < 1e-13);
        CHECK(std::abs(theta_general(0.5, 0.0, z, tau) - ref(0.5, 0, z, tau.tau())) < 1e-13);
        CHECK(std::abs(theta_general(0.0, 0.5, z, tau) - ref(0, 0.5, z, tau.tau())) < 1e-13);
        CHECK(std::abs(theta_general(0.5, 0.5, z, tau) - ref(0.5, 0.5, z, tau.tau())) < 1e-13);
    }
}

TEST_CASE("theta_general special values") {
    ModularParam taui(cplx(0.0, 1.0));
    // odd characteristic vanishes at the origin
    CHECK(std::abs(theta_general(0.5, 0.5, 0.0, taui)) < 1e-14);
    // zero of theta_{0,0} at (1+i)/2 for tau = i
    CHECK(std::abs(theta_general(0.0, 0.0, cplx(0.5, 0.5), taui)) < 1e-13);
    // theta_3(0|i) = pi^(1/4)/Gamma(3/4)
    double expected = std::pow(pi, 0.25) / kGamma34;
    CHECK(std::abs(theta_general(0.0, 0.0, 0.0, taui) - expected) < 1e-14);
    CHECK(std::abs(theta_general(0.0, 0.0, 0.0, taui) - 1.0864348112133080) < 1e-13);
}

TEST_CASE("theta_jacobi index map and translation") {
    ModularParam tau(cplx(0.2, 1.1));
    cplx z(0.13, 0.41);
    CHECK(std::abs(theta_jacobi(1, z, tau) + theta_general(0.5, 0.5, z, tau)) == 0.0);
    CHECK(std::abs(theta_jacobi(2, z, tau) - theta_general(0.5, 0.0, z, tau)) == 0.0);
    CHECK(std::abs(theta_jacobi(3, z, tau) - theta_general(0.0, 0.0, z, tau)) == 0.0);
    CHECK(std::abs(theta_jacobi(4, z, tau) - theta_general(0.0, 0.5, z, tau)) == 0.0);
    CHECK(std::abs(theta_jacobi(1, 0.0, ModularParam(cplx(0, 1)))) < 1e-14);
    CHECK(std::abs(theta_jacobi(1, z + 1.0, tau) + theta_jacobi(1, z, tau)) < 1e-13);
    CHECK_THROWS_AS(theta_jacobi(5, z, tau), std::invalid_argument);
}

TEST_CASE("theta nulls") {
    ModularParam taui(cplx(0.0, 1.0));
    CHECK(theta_null(1, taui) == cplx(0.0));
    CHECK(std::abs(theta_null(2, taui) - std::pow(2.0, -0.25) * theta_null(3, taui)) < 1e-14);
    CHECK(std::abs(theta_null(4, taui) - theta_null(2, taui)) < 1e-14);
    ModularParam tau(cplx(0.4, 0.8));
    for (int j = 2; j <= 4; ++j)
        CHECK(std::abs(theta_null(j, tau) - theta_jacobi(j, 0.0, tau)) < 1e-15);
    CHECK(std::abs(tau.theta1_prime0() -
                   pi * theta_null(2, tau) * theta_null(3, tau) * theta_null(4, tau)) < 1e-12);
}

TEST_CASE("theta_deriv against central differences") {
    ModularParam tau(cplx(0.1, 0.85));
    Rng rng(11);
    double h = 1e-6;
    for (int s = 0; s < 50; ++s) {
        cplx z = rng.real01() + rng.real01() * tau.tau();
        for (int j = 1; j <= 4; ++j) {
            cplx fd = (theta_jacobi(j, z + h, tau) - theta_jacobi(j, z - h, tau)) / (2.0 * h);
            CHECK(std::abs(fd - theta_deriv(j, z, tau, 1)) < 1e-7);
        }
    }
    CHECK(std::abs(theta_deriv(1, 0.0, ModularParam(cplx(0, 1)), 0)) < 1e-14);
    // theta zeros are simple: derivative at a zero of theta_3 stays away from 0
    ModularParam taui(cplx(0.0, 1.0));
    CHECK(std::abs(theta_deriv(3, cplx(0.5, 0.5), taui, 1)) > 0.1);
    CHECK_THROWS_AS(theta_deriv(1, 0.0, taui, 5), std::invalid_argument);

    // higher orders against iterated central differences of the first derivative
    cplx z(0.23, 0.31);
    cplx fd2 = (theta_deriv(2, z + h, tau, 1) - theta_deriv(2, z - h, tau, 1)) / (2.0 * h);
    CHECK(std::abs(fd2 - theta_deriv(2, z, tau, 2)) < 1e-6);
}

TEST_CASE("domain and overflow errors") {
    CHECK_THROWS_AS(ModularParam(cplx(0.5, 0.01)), std::domain_error);
    ModularParam taui(cplx(0.0, 1.0));
    CHECK_THROWS_AS(theta_general(0.0, 0.0, cplx(0.0, 300.0), taui), std::overflow_error);
}

TEST_CASE("identity suites") {
    for (cplx t : {cplx(0, 1), cplx(0, 2), cplx(0.3, 0.9)}) {
        ModularParam tau(t);
        IdentityReport rep = identity_residuals("all", tau, 100, 7);
        CHECK(rep.cases.size() == 17);
        CHECK(rep.worst() < 1e-10);
    }
    ModularParam tau2(cplx(0, 2));
    CHECK(identity_residuals("shifts", tau2, 100, 1).worst() < 1e-10);
    CHECK_THROWS_AS(identity_residuals("bogus", tau2, 1, 1), std::invalid_argument);

    // degenerate z = 0 case of the first quadratic identity: theta_1(0) = 0
    ModularParam taui(cplx(0, 1));
    cplx lhs = theta_null(3, taui) * theta_null(4, taui) * theta_null(4, taui) *
                   theta_jacobi(3, 0.0, taui) -
               theta_null(4, taui) * theta_null(3, taui) * theta_null(3, taui) *
                   theta_jacobi(4, 0.0, taui);
    CHECK(std::abs(lhs) < 1e-13);
}

TEST_CASE("theta-null quartic orientation is the standard one") {
    for (cplx t : {cplx(0, 1), cplx(0, 2), cplx(0.3, 0.9)}) {
        QuarticOrientation q = theta_null_quartic(ModularParam(t));
        CHECK(q.standard_holds);
        CHECK(!q.paper_holds);
        CHECK(q.label() == "standard");
    }
}
