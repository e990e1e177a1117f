#include <doctest.h>

#include "alia/elliptic.hpp"

using namespace alia;

TEST_CASE("lattice reduction and torus points") {
    ModularParam tau(cplx(0.3, 0.9));
    Lattice lat(tau, 1.0);
    cplx z(3.7, 2.9);
    cplx r = lat.reduce(z);
    CHECK(std::abs(lat.reduce(r) - r) < 1e-12);
    CHECK(lat.dist_to_lattice(z - r) < 1e-10);
    TorusPoint a{z, lat}, b{r, lat};
    CHECK(a.approx_eq(b));
    CHECK(!a.approx_eq(TorusPoint{r + 0.3, lat}));
    CHECK_THROWS_AS(Lattice(tau, 0.0), std::invalid_argument);
    // half-lattice accessor halves the scale
    CHECK(lat.half().scale() == cplx(0.5));
}

TEST_CASE("mu uniformizers") {
    ModularParam tau(cplx(0, 1));
    // mu_1(1/4 | i) = 0: theta_2 vanishes at 1/2
    CHECK(std::abs(mu(1, 0.25, tau)) < 1e-13);
    CHECK_THROWS_AS(mu(1, 0.0, tau), pole_error);
    CHECK_THROWS_AS(mu(2, 0.5, tau), pole_error);
    CHECK_THROWS_AS(mu(0, 0.3, tau), std::invalid_argument);

    ModularParam t2(cplx(0.3, 0.9));
    cplx t2n = t2.null_value(2), t3n = t2.null_value(3), t4n = t2.null_value(4);
    Rng rng(3);
    for (int s = 0; s < 40; ++s) {
        cplx z = rng.real01() + rng.real01() * t2.tau();
        if (Lattice(t2, 0.5).dist_to_lattice(z) < 5e-2) continue;
        cplx m1 = mu(1, z, t2), m2 = mu(2, z, t2), m3 = mu(3, z, t2);
        CHECK(std::abs(m1 * m1 - m3 * m3 + (t3n * t3n) / (t4n * t4n * t2n * t2n)) < 1e-11);
        CHECK(std::abs(m2 * m2 - m1 * m1 - (t4n * t4n) / (t2n * t2n * t3n * t3n)) < 1e-11);
        CHECK(std::abs(m3 * m3 - m2 * m2 - (t2n * t2n) / (t3n * t3n * t4n * t4n)) < 1e-11);
        // D2 translation behaviour
        CHECK(std::abs(mu(1, z + 0.5, t2) - m1) < 1e-11);
        CHECK(std::abs(mu(1, z + t2.tau() / 2.0, t2) + m1) < 1e-11);
    }
}

TEST_CASE("modular lambda and its inversion") {
    CHECK(std::abs(modular_lambda(ModularParam(cplx(0, 1))) - 0.5) < 1e-13);
    // on the imaginary axis lambda decreases towards 0
    double l15 = modular_lambda(ModularParam(cplx(0, 1.5))).real();
    double l20 = modular_lambda(ModularParam(cplx(0, 2.0))).real();
    CHECK(l15 > l20);
    CHECK(l20 > 0.0);
    CHECK(l15 < 1.0);
    CHECK(std::abs(modular_lambda(ModularParam(cplx(0, 2))) - 0.029437251522859414) < 1e-13);

    ModularParam t = tau_from_r(2.0, 1.0, 0.0);
    CHECK(std::abs(t.tau() - cplx(0, 1)) < 1e-10);
    CHECK(std::abs(modular_lambda(t) - 0.5) < 1e-12);
    CHECK_THROWS_AS(tau_from_r(0.0, 1.0, 1.0), degenerate_error);

    Rng rng(17);
    for (int s = 0; s < 50; ++s) {
        double r3 = rng.uniform(-1.0, 1.0);
        double r2 = r3 + rng.uniform(0.2, 1.5);
        double r1 = r2 + rng.uniform(0.2, 1.5);
        double m = (r2 - r3) / (r1 - r3);
        if (m < 0.03 || m > 0.97) continue;
        ModularParam tt = tau_from_r(r1, r2, r3);
        CHECK(tt.tau().imag() > 0.0);
        CHECK(std::abs(modular_lambda(tt) - m) < 1e-10);
    }
}

TEST_CASE("weierstrass p on several lattices") {
    for (cplx t : {cplx(0, 1), cplx(0.3, 0.9)}) {
        ModularParam tau(t);
        for (cplx s : {cplx(1.0), cplx(0.5), cplx(0.7, 0.2)}) {
            Lattice lat(tau, s);
            auto [g2, g3] = invariants_g2_g3(lat);
            Rng rng(5);
            for (int k = 0; k < 30; ++k) {
                cplx z = s * (rng.real01() + rng.real01() * t);
                if (lat.dist_to_lattice(z) < 0.05 * std::abs(s)) continue;
                cplx p = wp(z, lat), pp = wp_prime(z, lat);
                CHECK(std::abs(pp * pp - 4.0 * p * p * p + g2 * p + g3) < 1e-9);
                CHECK(std::abs(wp(-z, lat) - p) < 1e-10);
                CHECK(std::abs(wp_prime(-z, lat) + pp) < 1e-10);
                CHECK(std::abs(wp(z + s, lat) - p) < 1e-9);
                CHECK(std::abs(wp(z + s * t, lat) - p) < 1e-9);
            }
            // dual route: log-derivative evaluation at the half periods equals
            // the theta-null branch values
            auto e = branch_values(lat);
            CHECK(std::abs(wp(s * 0.5, lat) - e[0]) < 1e-10 * std::abs(e[0] - e[2]));
            CHECK(std::abs(wp(s * (1.0 + t) / 2.0, lat) - e[1]) < 1e-10 * std::abs(e[0] - e[2]));
            CHECK(std::abs(wp(s * t / 2.0, lat) - e[2]) < 1e-10 * std::abs(e[0] - e[2]));
            CHECK(std::abs(e[0] + e[1] + e[2]) < 1e-12 * std::abs(e[0]));
        }
    }
    // homogeneity of the invariants
    ModularParam tau(cplx(0.3, 0.9));
    auto [g2u, g3u] = invariants_g2_g3(Lattice(tau, 1.0));
    auto [g2s, g3s] = invariants_g2_g3(Lattice(tau, 2.0));
    CHECK(std::abs(g2s - g2u / 16.0) < 1e-10);
    CHECK(std::abs(g3s - g3u / 64.0) < 1e-10);
    CHECK_THROWS_AS(wp(cplx(0.0), Lattice(tau, 1.0)), pole_error);
}

TEST_CASE("square lattice degeneration and wp zeros") {
    ModularParam square(cplx(0, 1));
    auto [g2, g3] = invariants_g2_g3(Lattice(square, 1.0));
    CHECK(std::abs(g3) < 1e-12);

    auto zeros = wp_zero(Lattice(square, 1.0));
    CHECK(zeros.first.approx_eq(TorusPoint{cplx(0.5, 0.5), zeros.first.lattice}, 1e-7));
    CHECK(zeros.first.approx_eq(zeros.second, 1e-7));  // double zero at [tau] = [i]

    ModularParam tall(cplx(0, 2));
    auto zeros2 = wp_zero(Lattice(tall, 1.0));
    CHECK(!zeros2.first.approx_eq(zeros2.second, 1e-6));
    CHECK(std::abs(wp(zeros2.first.z, Lattice(tall, 1.0))) < 1e-10);
    CHECK(std::abs(wp(zeros2.second.z, Lattice(tall, 1.0))) < 1e-10);
    // frozen location (up to the +-z0 and lattice ambiguity)
    Lattice lat(tall, 1.0);
    double d1 = lat.dist_to_lattice(zeros2.first.z - cplx(0.5, 0.7298995119062868));
    double d2 = lat.dist_to_lattice(zeros2.first.z + cplx(0.5, 0.7298995119062868));
    CHECK(std::min(d1, d2) < 1e-6);
    // p real on the real axis for rectangular lattices
    CHECK(std::abs(wp(cplx(0.31, 0.0), lat).imag()) < 1e-10);
}

TEST_CASE("xi_p invariance and span") {
    ModularParam tau(cplx(0, 2));
    cplx p(0.31, 0.44);
    Lattice half(tau, 0.5);
    Rng rng(23);
    for (int s = 0; s < 20; ++s) {
        cplx z = rng.real01() + rng.real01() * tau.tau();
        if (half.dist_to_lattice(z) < 5e-2 || half.dist_to_lattice(z - p) < 5e-2) continue;
        cplx v = xi_p(z, p, tau);
        CHECK(std::abs(xi_p(z + 0.5, p, tau) - v) < 1e-10);
        CHECK(std::abs(xi_p(z + tau.tau() / 2.0, p, tau) - v) < 1e-10);
    }
    CHECK_THROWS_AS(xi_p(cplx(0.3, 0.3), cplx(0.5, 0.0), tau), std::domain_error);
}

TEST_CASE("jacobi elliptic layer") {
    ModularParam tau(cplx(0, 2));
    CHECK(std::abs(jacobi_sn(0.0, tau)) < 1e-14);
    CHECK(std::abs(jacobi_cn(0.0, tau) - 1.0) < 1e-14);
    CHECK(std::abs(jacobi_dn(0.0, tau) - 1.0) < 1e-14);
    double h = 1e-6;
    CHECK(std::abs((jacobi_sn(h, tau) - jacobi_sn(-h, tau)) / (2 * h) - 1.0) < 1e-9);

    cplx k = jacobi_modulus(tau);
    CHECK(std::abs(k * k - modular_lambda(tau)) < 1e-13);
    CHECK(std::abs(jacobi_modulus(ModularParam(cplx(0, 1))) * jacobi_modulus(ModularParam(cplx(0, 1))) -
                   0.5) < 1e-10);

    Rng rng(29);
    for (int s = 0; s < 30; ++s) {
        cplx u(rng.uniform(-1.0, 1.0), rng.uniform(-0.8, 0.8));
        cplx sn = jacobi_sn(u, tau);
        if (std::abs(sn) < 0.05) continue;
        CHECK(std::abs(sn * sn + jacobi_cn(u, tau) * jacobi_cn(u, tau) - 1.0) < 1e-11);
        CHECK(std::abs(jacobi_dn(u, tau) * jacobi_dn(u, tau) + k * k * sn * sn - 1.0) < 1e-11);
        cplx w1 = jacobi_w(1, u, tau), w2 = jacobi_w(2, u, tau), w3 = jacobi_w(3, u, tau);
        CHECK(std::abs(w1 * w1 - w2 * w2 - k * k) < 1e-10);
        CHECK(std::abs(w2 * w2 - w3 * w3 - (1.0 - k * k)) < 1e-10);
        CHECK(std::abs(w3 * w3 - w1 * w1 + 1.0) < 1e-10);
    }
    CHECK_THROWS_AS(jacobi_w(1, 0.0, tau), pole_error);
}

TEST_CASE("two point split") {
    ModularParam tau(cplx(0, 2));
    cplx zp(0.31, 0.34), zm(-0.11, 0.58);
    auto f = [&](cplx z) { return 1.7 * mu(1, z - zp, tau) + cplx(0, -0.4) * mu(1, z - zm, tau); };
    SplitResult r = two_point_split(1, f, zp, zm, tau);
    CHECK(std::abs(r.c1 - 1.7) < 1e-10);
    CHECK(std::abs(r.c2 - cplx(0, -0.4)) < 1e-10);
    CHECK(r.residual < 1e-10);
    CHECK(r.in_span);

    auto fd = [&](cplx z) {
        cplx m = mu(1, z - zp, tau);
        return m * m;
    };
    CHECK(!two_point_split(1, fd, zp, zm, tau).in_span);
    CHECK_THROWS_AS(two_point_split(1, f, zp, zp + 0.5, tau), degenerate_error);
}

TEST_CASE("isotypical projection") {
    ModularParam tau(cplx(0.3, 0.9));
    auto f = [&](cplx z) { return mu(1, z, tau); };
    cplx z(0.21, 0.33);
    CHECK(std::abs(isotypical_project(f, {0, 1}, z, tau) - f(z)) < 1e-12);
    CHECK(std::abs(isotypical_project(f, {0, 0}, z, tau)) < 1e-12);
    auto one = [](cplx) { return cplx(1.0); };
    CHECK(std::abs(isotypical_project(one, {0, 0}, z, tau) - 1.0) < 1e-14);
    cplx sum = 0;
    for (D2Character chi : D2Character::all()) sum += isotypical_project(f, chi, z, tau);
    CHECK(std::abs(sum - f(z)) < 1e-12);
}

TEST_CASE("curve parameters") {
    ModularParam tau(cplx(0.3, 0.9));
    CurveParams norm = CurveParams::normalized(tau);
    CHECK(std::abs(norm.mu_scale() - 1.0) < 1e-12);
    CHECK(std::abs(norm.r(1) + norm.r(2) + norm.r(3)) < 1e-13);
    CHECK(std::abs(norm.offset(1) - norm.r(1)) < 1e-13);

    CurveParams curve = CurveParams::from_r(2.0, 1.0, 0.0);
    CHECK(std::abs(modular_lambda(curve.modulus()) - 0.5) < 1e-10);
    cplx a2 = curve.branch_a() * curve.branch_a();
    cplx b2 = curve.branch_b() * curve.branch_b();
    CHECK(std::abs(a2 - (curve.r(1) - curve.r(3)) / (curve.r(2) - curve.r(3))) < 1e-13);
    CHECK(std::abs(b2 - (curve.r(1) - curve.r(2)) / (curve.r(2) - curve.r(3))) < 1e-13);

    Rng rng(31);
    for (int s = 0; s < 20; ++s) {
        cplx z = rng.real01() + rng.real01() * curve.modulus().tau();
        if (curve.half_lattice().dist_to_lattice(z) < 5e-2) continue;
        auto l = curve.uniformize(z);
        CHECK(curve.curve_residual(l[0], l[1], l[2]) < 1e-10);
        cplx lam = curve.holod_lambda(z);
        for (int i = 1; i <= 3; ++i)
            CHECK(std::abs(l[static_cast<std::size_t>(i - 1)] * l[static_cast<std::size_t>(i - 1)] -
                           (lam - curve.offset(i))) < 1e-9);
        CHECK(std::abs(l[0] * l[1] * l[2] + 0.5 * curve.holod_wp_prime(z)) < 1e-9);
    }
    CHECK(std::abs(curve.offset(1) + curve.offset(2) + curve.offset(3)) < 1e-13);
}
