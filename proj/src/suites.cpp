#include "alia/suites.hpp"

#include <cmath>
#include <functional>

#include "alia/generators.hpp"
#include "alia/intertwiner.hpp"
#include "alia/qring.hpp"
#include "alia/zcr.hpp"

namespace alia {

namespace {

const cplx kI{0.0, 1.0};

struct Ctx {
    SuiteOptions opts;
    VerificationReport* rep;

    void add(const std::string& name, double residual, double tol = 0.0) const {
        CaseResult c;
        c.name = name;
        c.max_abs_residual = residual;
        c.tol = tol > 0.0 ? tol : opts.default_tol;
        c.pass = residual < c.tol;
        c.samples = opts.samples;
        c.seed = opts.seed;
        rep->cases.push_back(c);
    }
    /// Pass iff `ok`; for expected-error and threshold-style checks.
    void add_flag(const std::string& name, bool ok) const { add(name, ok ? 0.0 : 1.0, 0.5); }
    void add_error(const std::string& name, const std::string& what) const {
        add(name + " [error: " + what + "]", 9e99, 0.0);
    }
};

cplx draw_z(Rng& rng, const ModularParam& tau, double clearance = 5e-2) {
    Lattice half(tau, 0.5);
    for (int k = 0; k < 4096; ++k) {
        cplx z = rng.real01() + rng.real01() * tau.tau();
        if (half.dist_to_lattice(z) > clearance) return z;
    }
    throw convergence_error("sampling failed to avoid punctures");
}

// ---------------------------------------------------------------- theta
void suite_theta(const Ctx& ctx) {
    ModularParam tau(ctx.opts.tau);
    for (const char* s : {"shifts", "quadratic", "duplication", "half-tau"}) {
        IdentityReport idr = identity_residuals(s, tau, ctx.opts.samples, ctx.opts.seed);
        for (const auto& c : idr.cases) ctx.add(std::string(s) + "/" + c.name, c.max_abs_residual, 1e-10);
    }
    QuarticOrientation q = theta_null_quartic(tau);
    ctx.add("null-quartic[orientation=" + q.label() + "]",
            std::min(q.residual_standard, q.residual_paper), 1e-10);

    // theta_general vs theta_jacobi, by construction
    Rng rng(ctx.opts.seed);
    double worst = 0.0;
    for (int s = 0; s < ctx.opts.samples; ++s) {
        cplx z = rng.real01() + rng.real01() * tau.tau();
        worst = std::max(worst,
                         std::abs(theta_general(0.5, 0.5, z, tau) + theta_jacobi(1, z, tau)));
    }
    ctx.add("general-vs-jacobi(theta1)", worst, 1e-14);

    // first derivative vs central differences at 50 points
    double h = 1e-6, dworst = 0.0;
    Rng rng2(ctx.opts.seed + 1);
    for (int s = 0; s < 50; ++s) {
        cplx z = rng2.real01() + rng2.real01() * tau.tau();
        for (int j = 1; j <= 4; ++j) {
            cplx fd = (theta_jacobi(j, z + h, tau) - theta_jacobi(j, z - h, tau)) / (2.0 * h);
            dworst = std::max(dworst, std::abs(fd - theta_deriv(j, z, tau, 1)));
        }
    }
    ctx.add("deriv-vs-central-difference", dworst, 1e-7);
}

// ---------------------------------------------------------------- elliptic
void suite_elliptic(const Ctx& ctx) {
    ModularParam tau(ctx.opts.tau);
    cplx t2 = tau.null_value(2), t3 = tau.null_value(3), t4 = tau.null_value(4);
    Rng rng(ctx.opts.seed);

    // Eq. (mu) constants, as printed
    cplx d31 = -(t3 * t3) / (t4 * t4 * t2 * t2);
    cplx d12 = (t4 * t4) / (t2 * t2 * t3 * t3);
    cplx d23 = (t2 * t2) / (t3 * t3 * t4 * t4);
    double w1 = 0, w2 = 0, w3 = 0, wl = 0;
    for (int s = 0; s < ctx.opts.samples; ++s) {
        cplx z = draw_z(rng, tau);
        cplx m1 = mu(1, z, tau), m2 = mu(2, z, tau), m3 = mu(3, z, tau);
        w1 = std::max(w1, std::abs(m1 * m1 - m3 * m3 - d31));
        w2 = std::max(w2, std::abs(m2 * m2 - m1 * m1 - d12));
        w3 = std::max(w3, std::abs(m3 * m3 - m2 * m2 - d23));
        // translation laws of the mu_i
        wl = std::max(wl, std::abs(mu(1, z + 0.5, tau) - m1));
        wl = std::max(wl, std::abs(mu(1, z + tau.tau() / 2.0, tau) + m1));
        wl = std::max(wl, std::abs(mu(2, z + 0.5, tau) + m2));
        wl = std::max(wl, std::abs(mu(2, z + tau.tau() / 2.0, tau) + m2));
        wl = std::max(wl, std::abs(mu(3, z + 0.5, tau) + m3));
        wl = std::max(wl, std::abs(mu(3, z + tau.tau() / 2.0, tau) - m3));
    }
    ctx.add("mu-sq-diff-1", w1, 1e-10);
    ctx.add("mu-sq-diff-2", w2, 1e-10);
    ctx.add("mu-sq-diff-3", w3, 1e-10);
    ctx.add("mu-translation-laws", wl, 1e-10);

    // modular lambda under tau -> tau+2
    ModularParam tau_p2(ctx.opts.tau + 2.0);
    ctx.add("lambda(tau+2)-lambda(tau)",
            std::abs(modular_lambda(tau_p2) - modular_lambda(tau)), 1e-12);

    // tau_from_r round trips
    double rt = 0.0;
    Rng rrng(ctx.opts.seed + 2);
    for (int s = 0; s < 50; ++s) {
        double a = rrng.uniform(0.2, 2.0), b = rrng.uniform(0.2, 2.0);
        double r1 = a + b + rrng.uniform(0.2, 1.0), r2 = b + rrng.uniform(0.1, 0.8), r3 = 0.0;
        double m = (r2 - r3) / (r1 - r3);
        if (m < 0.05 || m > 0.95) continue;
        ModularParam t = tau_from_r(r1, r2, r3);
        rt = std::max(rt, std::abs(modular_lambda(t) - m));
    }
    ctx.add("tau-from-r-roundtrip", rt, 1e-10);
    ModularParam ti = tau_from_r(2.0, 1.0, 0.0);
    ctx.add("tau-from-r(2,1,0)-lambda-half", std::abs(modular_lambda(ti) - 0.5), 1e-10);

    // Weierstrass layer on three lattices
    for (const auto& [label, lat] : {std::pair<const char*, Lattice>{"unit", Lattice(tau, 1.0)},
                                     {"half", Lattice(tau, 0.5)},
                                     {"scaled", Lattice(tau, cplx(0.7, 0.2))}}) {
        auto [g2, g3] = invariants_g2_g3(lat);
        double ode = 0.0, parity = 0.0, period = 0.0;
        Rng prng(ctx.opts.seed + 3);
        for (int s = 0; s < ctx.opts.samples; ++s) {
            cplx z = lat.scale() * (prng.real01() + prng.real01() * tau.tau());
            if (lat.dist_to_lattice(z) < 5e-2 * std::abs(lat.scale())) continue;
            cplx p = wp(z, lat), pp = wp_prime(z, lat);
            ode = std::max(ode, std::abs(pp * pp - 4.0 * p * p * p + g2 * p + g3));
            parity = std::max(parity, std::abs(wp(-z, lat) - p));
            parity = std::max(parity, std::abs(wp_prime(-z, lat) + pp));
            period = std::max(period, std::abs(wp(z + lat.scale(), lat) - p));
            period = std::max(period, std::abs(wp(z + lat.scale() * tau.tau(), lat) - p));
        }
        ctx.add(std::string("wp-ode/") + label, ode, 1e-9);
        ctx.add(std::string("wp-parity/") + label, parity, 1e-9);
        ctx.add(std::string("wp-periodicity/") + label, period, 1e-9);
    }
    {
        // homogeneity of the invariants under lattice scaling
        Lattice unit(tau, 1.0), scaled(tau, 2.0);
        auto [g2u, g3u] = invariants_g2_g3(unit);
        auto [g2s, g3s] = invariants_g2_g3(scaled);
        double r = std::abs(g2s - g2u / 16.0) + std::abs(g3s - g3u / 64.0);
        ctx.add("g2-g3-scaling", r, 1e-10);
    }
    {
        ModularParam square(cplx(0.0, 1.0));
        auto [g2, g3] = invariants_g2_g3(Lattice(square, 1.0));
        ctx.add("g3-square-lattice", std::abs(g3), 1e-12);
        auto zeros = wp_zero(Lattice(square, 1.0));
        ctx.add_flag("wp-zero-square-double",
                     zeros.first.approx_eq(zeros.second, 1e-8) &&
                         zeros.first.approx_eq({cplx(0.5, 0.5), zeros.first.lattice}, 1e-6));
        ModularParam tall(cplx(0.0, 2.0));
        auto zeros2 = wp_zero(Lattice(tall, 1.0));
        ctx.add_flag("wp-zero-tall-distinct", !zeros2.first.approx_eq(zeros2.second, 1e-6));
        double zr = std::max(std::abs(wp(zeros2.first.z, Lattice(tall, 1.0))),
                             std::abs(wp(zeros2.second.z, Lattice(tall, 1.0))));
        ctx.add("wp-zero-residual", zr, 1e-10);
    }

    // mu_j^2 = c_j p + d_j (fit at two points, validate at ten)
    {
        Lattice half(tau, 0.5);
        double worst = 0.0;
        for (int j = 1; j <= 3; ++j) {
            Rng frng(ctx.opts.seed + 10 + static_cast<std::uint64_t>(j));
            cplx za = draw_z(frng, tau), zb = draw_z(frng, tau);
            cplx pa = wp(za, half), pb = wp(zb, half);
            cplx ma = mu(j, za, tau), mb = mu(j, zb, tau);
            cplx cj = (ma * ma - mb * mb) / (pa - pb);
            cplx dj = ma * ma - cj * pa;
            for (int s = 0; s < 10; ++s) {
                cplx z = draw_z(frng, tau);
                cplx m = mu(j, z, tau);
                worst = std::max(worst, std::abs(m * m - cj * wp(z, half) - dj));
            }
        }
        ctx.add("mu-sq-wp-affine-fit", worst, 1e-9);

        // mu1 mu2 mu3 proportional to p' (one-point fit)
        Rng frng(ctx.opts.seed + 20);
        cplx z0 = draw_z(frng, tau);
        cplx c = mu(1, z0, tau) * mu(2, z0, tau) * mu(3, z0, tau) / wp_prime(z0, half);
        double worst2 = 0.0;
        for (int s = 0; s < 10; ++s) {
            cplx z = draw_z(frng, tau);
            worst2 = std::max(worst2, std::abs(mu(1, z, tau) * mu(2, z, tau) * mu(3, z, tau) -
                                               c * wp_prime(z, half)));
        }
        ctx.add("mu-product-wp-prime-fit", worst2, 1e-9);
    }

    // xi_p: invariance and span membership of xi_p^2
    {
        Lattice half(tau, 0.5);
        cplx p(0.31, 0.22 * tau.tau().imag());
        Rng xrng(ctx.opts.seed + 30);
        auto ok = [&](cplx z) {
            return half.dist_to_lattice(z) > 5e-2 && half.dist_to_lattice(z - p) > 5e-2;
        };
        auto draw = [&]() {
            cplx z;
            do {
                z = xrng.real01() + xrng.real01() * tau.tau();
            } while (!ok(z));
            return z;
        };
        double winv = 0.0;
        for (int s = 0; s < 20; ++s) {
            cplx z = draw();
            cplx v = xi_p(z, p, tau);
            winv = std::max(winv, std::abs(xi_p(z + 0.5, p, tau) - v));
            winv = std::max(winv, std::abs(xi_p(z + tau.tau() / 2.0, p, tau) - v));
        }
        ctx.add("xi-p-invariance", winv, 1e-10);

        // least-squares fit of xi^2 on {1, xi, p, p(.-p)} at 10 points, checked at 10
        Eigen::MatrixXcd a(10, 4);
        Eigen::VectorXcd b(10);
        for (int s = 0; s < 10; ++s) {
            cplx z = draw();
            cplx x = xi_p(z, p, tau);
            a(s, 0) = 1.0;
            a(s, 1) = x;
            a(s, 2) = wp(z, half);
            a(s, 3) = wp(z - p, half);
            b(s) = x * x;
        }
        Eigen::VectorXcd coef = a.colPivHouseholderQr().solve(b);
        double wspan = 0.0;
        for (int s = 0; s < 10; ++s) {
            cplx z = draw();
            cplx x = xi_p(z, p, tau);
            cplx model = coef(0) + coef(1) * x + coef(2) * wp(z, half) + coef(3) * wp(z - p, half);
            wspan = std::max(wspan, std::abs(x * x - model));
        }
        ctx.add("xi-p-squared-span", wspan, 1e-8);
    }

    // isotypical projectors
    {
        Rng prng(ctx.opts.seed + 40);
        auto f1 = [&](cplx z) { return mu(1, z, tau); };
        double w = 0.0, part = 0.0;
        for (int s = 0; s < 20; ++s) {
            cplx z = draw_z(prng, tau);
            w = std::max(w, std::abs(isotypical_project(f1, {0, 1}, z, tau) - mu(1, z, tau)));
            w = std::max(w, std::abs(isotypical_project(f1, {0, 0}, z, tau)));
            w = std::max(w, std::abs(isotypical_project(f1, {1, 0}, z, tau)));
            cplx sum = 0.0;
            for (D2Character chi : D2Character::all()) sum += isotypical_project(f1, chi, z, tau);
            part = std::max(part, std::abs(sum - mu(1, z, tau)));
        }
        ctx.add("isotypical-projections(mu1)", w, 1e-12);
        ctx.add("isotypical-partition-of-unity", part, 1e-12);
        auto one = [](cplx) { return cplx(1.0); };
        ctx.add("isotypical-constant",
                std::abs(isotypical_project(one, {0, 0}, 0.3, tau) - 1.0), 1e-14);
    }

    // Jacobi layer
    {
        Rng jrng(ctx.opts.seed + 50);
        cplx k = jacobi_modulus(tau);
        double jid = 0.0, jtab = 0.0;
        for (int s = 0; s < ctx.opts.samples; ++s) {
            cplx z = draw_z(jrng, tau);
            cplx u = 2.0 * pi * t3 * t3 * z;  // argument in the w natural scale
            cplx sn = jacobi_sn(u, tau), cn = jacobi_cn(u, tau), dn = jacobi_dn(u, tau);
            jid = std::max(jid, std::abs(sn * sn + cn * cn - 1.0));
            jid = std::max(jid, std::abs(dn * dn + k * k * sn * sn - 1.0));
            cplx w1v = jacobi_w(1, u, tau), w2v = jacobi_w(2, u, tau), w3v = jacobi_w(3, u, tau);
            jtab = std::max(jtab, std::abs(w1v * w1v - w2v * w2v - k * k));
            jtab = std::max(jtab, std::abs(w2v * w2v - w3v * w3v - (1.0 - k * k)));
            jtab = std::max(jtab, std::abs(w3v * w3v - w1v * w1v + 1.0));
        }
        ctx.add("jacobi-sn-cn-dn-identities", jid, 1e-10);
        ctx.add("jacobi-w-J-table", jtab, 1e-10);
        ctx.add("jacobi-k2-equals-lambda", std::abs(k * k - modular_lambda(tau)), 1e-12);
        double h = 1e-6;
        cplx snd = (jacobi_sn(cplx(h), tau) - jacobi_sn(cplx(-h), tau)) / (2.0 * h);
        ctx.add("jacobi-sn-derivative-1-at-0", std::abs(snd - 1.0), 1e-7);
    }

    // two-point split: exact member and double-pole rejection
    {
        cplx zp(0.31, 0.17 * tau.tau().imag()), zm(-0.11, 0.29 * tau.tau().imag());
        auto fexact = [&](cplx z) { return mu(1, z - zp, tau); };
        SplitResult sr = two_point_split(1, fexact, zp, zm, tau);
        double w = std::abs(sr.c1 - 1.0) + std::abs(sr.c2);
        ctx.add("two-point-split-exact-member", std::max(w, sr.residual), 1e-10);
        auto fdouble = [&](cplx z) {
            cplx m = mu(1, z - zp, tau);
            return m * m;
        };
        SplitResult sd = two_point_split(1, fdouble, zp, zm, tau);
        ctx.add_flag("two-point-split-double-pole-flag", !sd.in_span);
    }
}

// ---------------------------------------------------------------- omega
void suite_omega(const Ctx& ctx) {
    ModularParam tau(ctx.opts.tau);
    Rng rng(ctx.opts.seed);

    double det_res = 0.0, psi_res = 0.0;
    OmegaTransformReport wt;
    double neg_control_min = std::numeric_limits<double>::infinity();
    for (int s = 0; s < ctx.opts.samples; ++s) {
        cplx z = draw_z(rng, tau);
        Mat2 o = omega(z, tau);
        det_res = std::max(det_res, std::abs(o.determinant() - omega_det_reference(z, tau)));
        psi_res = std::max(psi_res, std::abs(psi_pm(1, z + 0.5, tau) + psi_pm(1, z, tau)));
        psi_res = std::max(psi_res,
                           std::abs(psi_pm(-1, z + tau.tau() / 2.0, tau) - psi_pm(1, z, tau)));
        OmegaTransformReport r = omega_transform_check(z, tau);
        wt.t1_residual = std::max(wt.t1_residual, r.t1_residual);
        wt.t2_residual = std::max(wt.t2_residual, r.t2_residual);
        wt.parity_residual = std::max(wt.parity_residual, r.parity_residual);
        wt.ad_t2_residual = std::max(wt.ad_t2_residual, r.ad_t2_residual);
        neg_control_min = std::min(neg_control_min, r.t2_no_prefactor);
    }
    ctx.add("det-omega-lemma", det_res, 1e-10);
    ctx.add("psi-translation-laws", psi_res, 1e-10);
    ctx.add("transform-t1", wt.t1_residual, 1e-10);
    ctx.add("transform-t2", wt.t2_residual, 1e-10);
    ctx.add("transform-parity", wt.parity_residual, 1e-10);
    ctx.add("transform-ad-t2", wt.ad_t2_residual, 1e-10);
    ctx.add_flag("transform-t2-negative-control(prefactor-required)", neg_control_min > 1e-1);

    {
        cplx t2n = tau.null_value(2);
        Mat2 o = omega(0.25, tau);
        ctx.add("det-omega-at-quarter", std::abs(o.determinant() + t2n * t2n * t2n), 1e-10);
    }

    // LDU
    {
        Rng lrng(ctx.opts.seed + 1);
        double reasm = 0.0, l21 = 0.0;
        ModularParam tau2(2.0 * tau.tau());
        for (int s = 0; s < 50; ++s) {
            cplx z = draw_z(lrng, tau);
            LduFactors f = ldu_factor(z, tau);
            reasm = std::max(reasm,
                             (f.lower * f.diag * f.upper - omega(z, tau)).cwiseAbs().maxCoeff());
            l21 = std::max(l21, std::abs(f.lower(1, 0) - theta_jacobi(2, 2.0 * z, tau2) /
                                                             theta_jacobi(3, 2.0 * z, tau2)));
            reasm = std::max(reasm, std::abs(f.diag(0, 0) * f.diag(1, 1) -
                                             omega(z, tau).determinant()));
        }
        ctx.add("ldu-reassembly", reasm, 1e-11);
        ctx.add("ldu-l21-entry", l21, 1e-12);
    }

    // Ad(Omega): ellipticity, naturality, tracelessness, variant equivariance
    {
        Rng arng(ctx.opts.seed + 2);
        double ell = 0.0, nat = 0.0, tr = 0.0, var = 0.0;
        Mat2 a = 0.7 * sl2_h() + 0.3 * sl2_e() - 1.1 * sl2_f();
        Mat2 b = -0.2 * sl2_h() + 0.9 * sl2_e() + 0.4 * sl2_f();
        for (int s = 0; s < 25; ++s) {
            cplx z = draw_z(arng, tau);
            Mat2 v = ad_omega(z, a, tau);
            ell = std::max(ell, (ad_omega(z + 1.0, a, tau) - v).cwiseAbs().maxCoeff());
            ell = std::max(ell, (ad_omega(z + tau.tau(), a, tau) - v).cwiseAbs().maxCoeff());
            nat = std::max(nat, (ad_omega(z, bracket(a, b), tau) -
                                 bracket(ad_omega(z, a, tau), ad_omega(z, b, tau)))
                                    .cwiseAbs()
                                    .maxCoeff());
            tr = std::max(tr, std::abs(v.trace()));
            for (OmegaVariant vv : OmegaVariant::all()) {
                Mat2 lhs = ad_omega(z + tau.tau() / 2.0, a, tau, vv);
                Mat2 rhs = rep_apply(RepId::rho, GroupElem::t2(), ad_omega(z, a, tau, vv));
                var = std::max(var, (lhs - rhs).cwiseAbs().maxCoeff());
                lhs = ad_omega(z + 0.5, a, tau, vv);
                rhs = rep_apply(RepId::rho, GroupElem::t1(), ad_omega(z, a, tau, vv));
                var = std::max(var, (lhs - rhs).cwiseAbs().maxCoeff());
            }
        }
        ctx.add("ad-omega-ellipticity", ell, 1e-9);
        ctx.add("ad-omega-bracket-naturality", nat, 1e-10);
        ctx.add("ad-omega-traceless", tr, 1e-12);
        ctx.add("ad-omega-variant-equivariance", var, 1e-10);
    }

    // intrinsic form
    {
        CurveParams curve = CurveParams::normalized(tau);
        Rng irng(ctx.opts.seed + 3);
        double det_r = 0.0, match = 0.0;
        for (int s = 0; s < 25; ++s) {
            cplx z = draw_z(irng, tau);
            auto l = curve.uniformize(z);
            Mat2 o = omega_intrinsic(l[0], l[1], l[2], curve);
            det_r = std::max(det_r, std::abs(o.determinant() - (curve.r(3) - curve.r(2))));
            IntrinsicMatch m = omega_intrinsic_match(z, curve);
            match = std::max(match, m.residual);
        }
        ctx.add("omega-intrinsic-det", det_r, 1e-10);
        ctx.add("omega-intrinsic-torus-match", match, 1e-8);
        bool rejected = false;
        try {
            auto l = curve.uniformize(draw_z(irng, tau));
            omega_intrinsic(l[0] + 1e-2, l[1], l[2], curve);
        } catch (const std::domain_error&) {
            rejected = true;
        }
        ctx.add_flag("omega-intrinsic-off-curve-rejected", rejected);
    }
}

// ---------------------------------------------------------------- generators
void suite_generators(const Ctx& ctx) {
    ModularParam tau(ctx.opts.tau);
    Rng rng(ctx.opts.seed);

    double rel = 0.0, var_match = 0.0;
    EquivarianceReport eq;
    for (int s = 0; s < ctx.opts.samples; ++s) {
        cplx z = draw_z(rng, tau);
        Hef g = hef(z, tau, HefMode::closed_form);
        rel = std::max(rel, (bracket(g.h, g.e) - 2.0 * g.e).cwiseAbs().maxCoeff());
        rel = std::max(rel, (bracket(g.h, g.f) + 2.0 * g.f).cwiseAbs().maxCoeff());
        rel = std::max(rel, (bracket(g.e, g.f) - g.h).cwiseAbs().maxCoeff());
        EquivarianceReport e = hef_equivariance(z, tau);
        eq.t1_residual = std::max(eq.t1_residual, e.t1_residual);
        eq.t2_residual = std::max(eq.t2_residual, e.t2_residual);
        eq.period_residual = std::max(eq.period_residual, e.period_residual);
        eq.parity_residual = std::max(eq.parity_residual, e.parity_residual);
    }
    ctx.add("hef-sl2-relations", rel, 1e-10);
    ctx.add("hef-equivariance-t1", eq.t1_residual, 1e-10);
    ctx.add("hef-equivariance-t2", eq.t2_residual, 1e-10);
    ctx.add("hef-full-period", eq.period_residual, 1e-10);
    ctx.add("hef-parity", eq.parity_residual, 1e-10);

    VariantMatch vm = hef_variant_match(draw_z(rng, tau), tau);
    var_match = vm.residual;
    for (int s = 0; s < 10; ++s) {
        cplx z = draw_z(rng, tau);
        Hef closed = hef(z, tau, HefMode::closed_form);
        Hef ad = hef(z, tau, HefMode::via_ad_omega, vm.variant);
        var_match = std::max(var_match, (ad.h - closed.h).cwiseAbs().maxCoeff());
        var_match = std::max(var_match, (ad.e - closed.e).cwiseAbs().maxCoeff());
        var_match = std::max(var_match, (ad.f - closed.f).cwiseAbs().maxCoeff());
    }
    ctx.add("hef-closed-vs-ad[" + vm.variant.label() + "]", var_match, 1e-9);

    // intrinsic forms, all four sign choices, on the normalized curve
    {
        CurveParams curve = CurveParams::normalized(tau);
        Rng trng(ctx.opts.seed + 1);
        double trel = 0.0, tmatch = 0.0, tequiv = 0.0;
        for (int s = 0; s < 50; ++s) {
            cplx z = draw_z(trng, tau);
            auto l = curve.uniformize(z);
            for (int s13 : {1, -1})
                for (int s12 : {1, -1}) {
                    Hef t = hef_tilde(l[0], l[1], l[2], curve, {s13, s12});
                    trel = std::max(trel, (bracket(t.h, t.e) - 2.0 * t.e).cwiseAbs().maxCoeff());
                    trel = std::max(trel, (bracket(t.h, t.f) + 2.0 * t.f).cwiseAbs().maxCoeff());
                    trel = std::max(trel, (bracket(t.e, t.f) - t.h).cwiseAbs().maxCoeff());
                }
            Hef t = hef_tilde(l[0], l[1], l[2], curve, {});
            Hef g = hef(z, tau, HefMode::closed_form);
            tmatch = std::max(tmatch, (t.h - g.h).cwiseAbs().maxCoeff());
            tmatch = std::max(tmatch, (t.e - g.e).cwiseAbs().maxCoeff());
            tmatch = std::max(tmatch, (t.f - g.f).cwiseAbs().maxCoeff());
            // equivariance on the curve: sigma(t1)(l) = (l1,-l2,-l3)
            Hef ta = hef_tilde(l[0], -l[1], -l[2], curve, {});
            tequiv = std::max(tequiv, (ta.h - rep_apply(RepId::rho, GroupElem::t1(), t.h))
                                          .cwiseAbs()
                                          .maxCoeff());
            tequiv = std::max(tequiv, (ta.e - rep_apply(RepId::rho, GroupElem::t1(), t.e))
                                          .cwiseAbs()
                                          .maxCoeff());
        }
        ctx.add("hef-tilde-sl2-all-signs", trel, 1e-10);
        ctx.add("hef-tilde-matches-torus", tmatch, 1e-8);
        ctx.add("hef-tilde-equivariance", tequiv, 1e-10);
    }

    // X_i current generators
    {
        Rng xrng(ctx.opts.seed + 2);
        double xb = 0.0, xinv = 0.0, xmu = 0.0;
        for (int s = 0; s < 50; ++s) {
            cplx z = draw_z(xrng, tau);
            auto [x1, x1p] = x_generators(1, z, tau);
            auto [x2, x2p] = x_generators(2, z, tau);
            auto [x3, x3p] = x_generators(3, z, tau);
            xb = std::max(xb, (bracket(x1, x2) - x3p).cwiseAbs().maxCoeff());
            xb = std::max(xb, (bracket(x2, x3) - x1p).cwiseAbs().maxCoeff());
            xb = std::max(xb, (bracket(x3, x1) - x2p).cwiseAbs().maxCoeff());
            cplx m1 = mu(1, z, tau);
            xmu = std::max(xmu, (bracket(x1, x2p) - m1 * m1 * x3).cwiseAbs().maxCoeff());
            for (GroupElem g : {GroupElem::t1(), GroupElem::t2()}) {
                cplx zs = z + (g.a ? 0.5 : 0.0) + (g.b ? tau.tau() / 2.0 : 0.0);
                auto [xs, xsp] = x_generators(1, zs, tau);
                xinv = std::max(xinv,
                                (xs - rep_apply(RepId::rho, g, x1)).cwiseAbs().maxCoeff());
            }
        }
        ctx.add("x-generators-bracket", xb, 1e-9);
        ctx.add("x-generators-xj-prime-bracket", xmu, 1e-9);
        ctx.add("x-generators-invariance", xinv, 1e-10);
    }

    // g(3)-type relations with the orientation recorded
    {
        CurveParams curve = CurveParams::from_r(ctx.opts.r[0], ctx.opts.r[1], ctx.opts.r[2]);
        Rng grng(ctx.opts.seed + 3);
        double serre = 0.0, second = 0.0, muc = 0.0;
        int orient = 0;
        for (int s = 0; s < ctx.opts.samples; ++s) {
            cplx z = draw_z(grng, curve.modulus());
            G3NumericReport r = g3_relations_numeric(z, curve);
            serre = std::max(serre, r.serre_residual);
            second = std::max(second, r.second_family_residual);
            muc = std::max(muc, r.mu_constant_residual);
            orient = r.orientation;
        }
        ctx.add("g3-serre", serre, 1e-9);
        ctx.add(std::string("g3-second-family[") + (orient > 0 ? "(r_i-r_j)" : "(r_j-r_i)") + "]",
                second, 1e-9);
        ctx.add("g3-mu-constants", muc, 1e-9);
    }
}

// ---------------------------------------------------------------- qring
void suite_qring(const Ctx& ctx) {
    using namespace qring;
    const std::array<std::array<long, 3>, 3> triples = {{{0, 1, 3}, {2, 1, 0}, {-1, 2, 5}}};
    for (const auto& t : triples) {
        QCurve curve{RatC(t[0]), RatC(t[1]), RatC(t[2])};
        std::string tag = "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                          std::to_string(t[2]) + ")";
        G3ExactReport g3 = g3_relations_exact(curve);
        ctx.add_flag("exact-g3-serre-sl2" + tag, g3.sl2_serre.ok);
        ctx.add_flag("exact-g3-second-sl2" + tag +
                         (g3.sl2_orientation > 0 ? "[(r_i-r_j)]" : "[(r_j-r_i)]"),
                     g3.sl2_second.ok);
        ctx.add_flag("exact-g3-serre-so31" + tag, g3.so31_serre.ok);
        ctx.add_flag("exact-g3-second-so31" + tag +
                         (g3.so31_orientation > 0 ? "[(r_i-r_j)]" : "[(r_j-r_i)]"),
                     g3.so31_second.ok);
        ctx.add_flag("exact-qi-invariance" + tag, g3.qi_invariance.ok);
        HolodExactReport h = holod_brackets_exact(curve, 2);
        ctx.add_flag("exact-holod-odd-odd" + tag, h.odd_odd.ok);
        ctx.add_flag("exact-holod-odd-even" + tag, h.odd_even.ok);
        ctx.add_flag("exact-holod-even-even" + tag, h.even_even.ok);
    }
    // ring sanity: commutativity/associativity, action, projector, localization
    QCurve curve{RatC(0), RatC(1), RatC(3)};
    QElem a = q_mul(QElem::lambda(curve, 1), QElem::x(curve)) + QElem::lambda(curve, 2);
    QElem b = q_mul(QElem::lambda(curve, 3), QElem::lambda(curve, 2)) - QElem::one(curve);
    QElem c = QElem::x(curve) + QElem::lambda(curve, 1);
    ctx.add_flag("exact-ring-commutative", q_mul(a, b) == q_mul(b, a));
    ctx.add_flag("exact-ring-associative",
                 q_mul(q_mul(a, b), c) == q_mul(a, q_mul(b, c)));
    QElem y = q_mul(QElem::lambda(curve, 1), q_mul(QElem::lambda(curve, 2), QElem::lambda(curve, 3)));
    ctx.add_flag("exact-y-squared",
                 q_mul(y, y) == scalar_mul((PolyX::x() - PolyX(RatC(0))) *
                                               (PolyX::x() - PolyX(RatC(1))) *
                                               (PolyX::x() - PolyX(RatC(3))),
                                           QElem::one(curve)));
    ctx.add_flag("exact-invariant-y", invariant_part(y) == y);
    ctx.add_flag("exact-invariant-l1", invariant_part(QElem::lambda(curve, 1)).is_zero());
    Laurent inv_lambda(QElem::one(curve), 1);
    Laurent lam(scalar_mul(curve.holod_lambda(), QElem::one(curve)), 0);
    ctx.add_flag("exact-localization-identity",
                 (inv_lambda * lam).normalized() == Laurent::from(QElem::one(curve)));
}

// ---------------------------------------------------------------- zcr
void suite_zcr(const Ctx& ctx) {
    const std::array<std::array<double, 3>, 2> triples = {{{2, 1, 0}, {0, 1, 3}}};
    for (const auto& t : triples) {
        CurveParams curve = CurveParams::from_r(t[0], t[1], t[2]);
        std::string tag = "(" + format_double(t[0]) + "," + format_double(t[1]) + "," +
                          format_double(t[2]) + ")";
        double rel = 0.0, so31 = 0.0, scal_eq = 0.0;
        for (int js = 0; js < 50; ++js) {
            JetPoint jet = sample_jet(ctx.opts.seed + static_cast<std::uint64_t>(js));
            for (int ps = 0; ps < 10; ++ps) {
                CurvePoint p = curve_point_algebraic(
                    curve, ctx.opts.seed + 1000 + static_cast<std::uint64_t>(ps));
                double norm = lax_N_norm(jet, p, curve);
                rel = std::max(rel, zcr_residual(jet, p, curve) / norm);
                if (ps == 0) {
                    so31 = std::max(so31, so31_residual(lax_M(jet, p)));
                    so31 = std::max(so31, so31_residual(lax_N(jet, p, curve)));
                    scal_eq = std::max(scal_eq,
                                       std::abs((curve.r(1) + p.l1 * p.l1) -
                                                (curve.r(2) + p.l2 * p.l2)));
                    scal_eq = std::max(scal_eq,
                                       std::abs((curve.r(1) + p.l1 * p.l1) -
                                                (curve.r(3) + p.l3 * p.l3)));
                }
            }
        }
        ctx.add("zcr-residual" + tag, rel, 1e-8);
        ctx.add("zcr-lax-so31" + tag, so31, 1e-12);
        ctx.add("zcr-scalar-index-free" + tag, scal_eq, 1e-10);
    }

    CurveParams curve = CurveParams::from_r(2.0, 1.0, 0.0);
    {
        // broken constraint must blow up by >= 6 orders over the tolerance
        JetPoint jet = sample_jet(ctx.opts.seed);
        jet.s *= std::sqrt(1.1);
        CurvePoint p = curve_point_algebraic(curve, ctx.opts.seed + 1);
        double rel = zcr_residual(jet, p, curve) / lax_N_norm(jet, p, curve);
        ctx.add_flag("zcr-negative-control-broken-constraint", rel > 1e-8 * 1e6);
    }
    {
        // D2 invariance of the residual and constant-jet stationarity
        JetPoint jet = sample_jet(ctx.opts.seed + 2);
        CurvePoint p = curve_point_algebraic(curve, ctx.opts.seed + 3);
        double base = zcr_residual(jet, p, curve);
        double inv = 0.0;
        for (GroupElem g : GroupElem::all_d2())
            inv = std::max(inv, std::abs(zcr_residual(jet, curve_point_act(g, p), curve) - base));
        ctx.add("zcr-residual-d2-invariance", inv, 1e-10);

        JetPoint still = jet;
        still.sx.setZero();
        still.sxx.setZero();
        still.sxxx.setZero();
        ctx.add("zcr-constant-jet", zcr_residual(still, p, curve), 1e-12);
        Mat4 n = lax_N(still, p, curve);
        cplx factor = curve.r(1) + p.l1 * p.l1 +
                      0.5 * pairing(Vec3c(curve.r(1) * still.s(0), curve.r(2) * still.s(1),
                                          curve.r(3) * still.s(2)),
                                    still.s);
        ctx.add("zcr-constant-jet-n-form",
                (n - factor * lax_M(still, p)).cwiseAbs().maxCoeff(), 1e-12);
    }
    {
        // uniformized curve points feed the same residual
        Rng rng(ctx.opts.seed + 4);
        JetPoint jet = sample_jet(ctx.opts.seed + 5);
        double worst = 0.0;
        for (int s = 0; s < 10; ++s) {
            cplx z = draw_z(rng, curve.modulus());
            CurvePoint p = curve_point_uniformized(curve, z);
            worst = std::max(worst, p.residual(curve));
            worst = std::max(worst, zcr_residual(jet, p, curve) / lax_N_norm(jet, p, curve));
        }
        ctx.add("zcr-uniformized-points", worst, 1e-9);
    }
    {
        // linearity of M in S; superposition structure of N
        JetPoint j1 = sample_jet(ctx.opts.seed + 6), j2 = sample_jet(ctx.opts.seed + 7);
        CurvePoint p = curve_point_algebraic(curve, ctx.opts.seed + 8);
        JetPoint sum = j1;
        sum.s = j1.s + j2.s;
        double lin = (lax_M(sum, p) - lax_M(j1, p) - lax_M(j2, p)).cwiseAbs().maxCoeff();
        ctx.add("zcr-m-linearity", lin, 1e-12);
    }
}

// ---------------------------------------------------------------- holod
void suite_holod(const Ctx& ctx) {
    ModularParam tau(ctx.opts.tau);
    CurveParams curve = CurveParams::normalized(tau);
    Rng rng(ctx.opts.seed);

    // numeric bracket table on small powers
    double oo = 0.0, oe = 0.0, ee = 0.0;
    Lattice half = curve.half_lattice();
    auto zeros_ok = [&](cplx z) {
        return half.dist_to_lattice(z) > 5e-2 && std::abs(curve.holod_lambda(z)) > 1e-3;
    };
    constexpr int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    for (int s = 0; s < 25; ++s) {
        cplx z = draw_z(rng, tau);
        if (!zeros_ok(z)) continue;
        for (const auto& t : cyc) {
            int i = t[0], j = t[1], k = t[2];
            for (int l = -1; l <= 1; ++l)
                for (int sp = -1; sp <= 1; ++sp) {
                    Mat2 a = holod_basis(i, l, HolodParity::odd, z, curve);
                    Mat2 b = holod_basis(j, sp, HolodParity::odd, z, curve);
                    oo = std::max(oo, (bracket(a, b) -
                                       holod_basis(k, l + sp + 1, HolodParity::even, z, curve))
                                          .cwiseAbs()
                                          .maxCoeff());
                    Mat2 be = holod_basis(j, sp, HolodParity::even, z, curve);
                    Mat2 rhs = holod_basis(k, l + sp, HolodParity::odd, z, curve) -
                               curve.offset(i) *
                                   holod_basis(k, l + sp - 1, HolodParity::odd, z, curve);
                    oe = std::max(oe, (bracket(a, be) - rhs).cwiseAbs().maxCoeff());
                    Mat2 ae = holod_basis(i, l, HolodParity::even, z, curve);
                    Mat2 rhs2 = holod_basis(k, l + sp, HolodParity::even, z, curve) -
                                curve.offset(k) *
                                    holod_basis(k, l + sp - 1, HolodParity::even, z, curve);
                    ee = std::max(ee, (bracket(ae, be) - rhs2).cwiseAbs().maxCoeff());
                }
        }
    }
    ctx.add("holod-bracket-odd-odd", oo, 1e-9);
    ctx.add("holod-bracket-odd-even", oe, 1e-9);
    ctx.add("holod-bracket-even-even", ee, 1e-9);

    // lambda = p uniformization: lambda_i^2 = lambda - A_i, and
    // lambda1 lambda2 lambda3 = -(1/2) p' of the rescaled half-lattice
    {
        Rng prng(ctx.opts.seed + 1);
        double worst = 0.0, wunif = 0.0;
        for (int s = 0; s < 20; ++s) {
            cplx z = draw_z(prng, tau);
            auto l = curve.uniformize(z);
            cplx lam = curve.holod_lambda(z);
            for (int i = 1; i <= 3; ++i)
                wunif = std::max(wunif, std::abs(l[static_cast<std::size_t>(i - 1)] *
                                                     l[static_cast<std::size_t>(i - 1)] -
                                                 (lam - curve.offset(i))));
            worst = std::max(worst, std::abs(l[0] * l[1] * l[2] + 0.5 * curve.holod_wp_prime(z)));
        }
        ctx.add("holod-lambda-is-wp", wunif, 1e-9);
        ctx.add("holod-product-is-minus-half-wp-prime", worst, 1e-9);
    }

    // W splitting
    for (int i = 1; i <= 3; ++i) {
        try {
            HolodSplit split = holod_w_split(i, curve);
            ctx.add("holod-w-split-fit-i" + std::to_string(i), split.fit_residual, 1e-8);
            ctx.add("holod-w-split-constancy-i" + std::to_string(i), split.constancy_residual,
                    1e-8);
            cplx wr = split.d2 * split.c1 - split.c2 * split.d1;
            ctx.add_flag("holod-w-split-wronskian-nonzero-i" + std::to_string(i),
                         std::abs(wr) > 1e-10);
        } catch (const degenerate_error& e) {
            ctx.add_error("holod-w-split-i" + std::to_string(i), e.what());
        }
    }
}

// ---------------------------------------------------------------- uglov
void suite_uglov(const Ctx& ctx) {
    ModularParam tau(ctx.opts.tau);
    UglovReport r = uglov_check(ctx.opts.nu_plus, ctx.opts.nu_minus, tau,
                                std::min(ctx.opts.samples, 50), ctx.opts.seed);
    ctx.rep->add_env("uglov_calibration_c", format_complex(r.calibration_c));
    ctx.rep->add_env("uglov_calibration_prefactor", format_complex(r.calibration_prefactor));
    ctx.add_flag("uglov-calibration-ok", r.calibration_ok);
    ctx.add("uglov-serre-family", r.serre_residual, 1e-8);
    ctx.add("uglov-j-family", r.j_family_residual, 1e-8);
    ctx.add("uglov-same-index-family", r.same_index_residual, 1e-8);
    ctx.add("uglov-cross-family", r.cross_residual, 1e-8);
}

// ---------------------------------------------------------------- real
void suite_real(const Ctx& ctx) {
    double q = 1.0;
    if (std::abs(ctx.opts.tau.real()) < 1e-14 && ctx.opts.tau.imag() > 0.0)
        q = ctx.opts.tau.imag();
    ctx.rep->add_env("real_suite_q", format_double(q));

    double imag_res = 0.0, shifted = 0.0, law = 0.0, conj = 0.0;
    double rconst = 0.0, gform = 0.0;
    Rng rng(ctx.opts.seed);
    int done = 0;
    for (int s = 0; s < 4096 && done < 50; ++s) {
        double x = rng.real01();
        if (std::min({std::abs(x), std::abs(x - 0.5), std::abs(x - 1.0)}) < 5e-2) continue;
        ++done;
        RealFormReport r = real_form_check(x, q);
        imag_res = std::max(imag_res, r.max_imag_hef);
        shifted = std::max(shifted, r.max_imag_shifted);
        law = std::max(law, r.shift_law_residual);
        conj = std::max(conj, r.conj_residual);
        if (r.r_constant_residual >= 0.0) rconst = std::max(rconst, r.r_constant_residual);
        if (r.gamma_form_residual >= 0.0) gform = std::max(gform, r.gamma_form_residual);
    }
    ctx.add("real-hef-imag-parts", imag_res, 1e-10);
    ctx.add("real-hef-imag-parts-shifted", shifted, 1e-10);
    ctx.add("real-shift-law-adT2", law, 1e-10);
    ctx.add("real-omega-conjugation", conj, 1e-10);
    if (std::abs(q - 1.0) < 1e-14) {
        ctx.add("real-r-constants-alpha", rconst, 1e-10);
        ctx.add("real-gamma-form-match", gform, 1e-10);
    }
}

}  // namespace

bool is_known_suite(const std::string& name) {
    for (const char* s :
         {"theta", "elliptic", "omega", "generators", "qring", "zcr", "holod", "uglov", "real",
          "all"})
        if (name == s) return true;
    return false;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& opts) {
    if (!is_known_suite(name)) throw std::invalid_argument("unknown suite '" + name + "'");

    VerificationReport rep;
    rep.suite = name;
    rep.add_env("tau", format_complex(opts.tau));
    rep.add_env("r", format_complex(opts.r[0]) + "," + format_complex(opts.r[1]) + "," +
                         format_complex(opts.r[2]));
    rep.add_env("samples", std::to_string(opts.samples));
    rep.add_env("seed", std::to_string(opts.seed));
    rep.add_env("default_tol", format_double(opts.default_tol));
    rep.add_env("precision", "double");

    Ctx ctx{opts, &rep};
    auto run_one = [&](const std::string& s) {
        // holod and uglov need [tau] != [i] and fixed punctures; they run at
        // their canonical parameters inside `all` (recorded in env)
        if (s == "theta") suite_theta(ctx);
        else if (s == "elliptic") suite_elliptic(ctx);
        else if (s == "omega") suite_omega(ctx);
        else if (s == "generators") suite_generators(ctx);
        else if (s == "qring") suite_qring(ctx);
        else if (s == "zcr") suite_zcr(ctx);
        else if (s == "holod") suite_holod(ctx);
        else if (s == "uglov") suite_uglov(ctx);
        else if (s == "real") suite_real(ctx);
    };

    if (name != "all") {
        run_one(name);
        return rep;
    }

    for (const char* s : {"theta", "elliptic", "omega", "generators", "qring", "zcr"}) {
        Ctx sub{opts, &rep};
        (void)sub;
        run_one(s);
    }
    {
        SuiteOptions fixed = opts;
        fixed.tau = cplx(0.0, 2.0);
        rep.add_env("holod_uglov_tau", "2i");
        Ctx sub{fixed, &rep};
        suite_holod(sub);
        suite_uglov(sub);
    }
    {
        SuiteOptions fixed = opts;
        if (!(std::abs(opts.tau.real()) < 1e-14 && opts.tau.imag() > 0.0))
            fixed.tau = cplx(0.0, 1.0);
        Ctx sub{fixed, &rep};
        suite_real(sub);
    }
    return rep;
}

}  // namespace alia
