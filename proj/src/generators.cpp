#include "alia/generators.hpp"

#include <cmath>
#include <limits>

namespace alia {

namespace {

const cplx kI{0.0, 1.0};

struct Nulls {
    cplx t2, t3, t4;
};

Nulls nulls(const ModularParam& tau) {
    return {tau.null_value(2), tau.null_value(3), tau.null_value(4)};
}

Hef hef_closed(cplx z, const ModularParam& tau) {
    auto [t2, t3, t4] = nulls(tau);
    cplx t2s = t2 * t2, t3s = t3 * t3, t4s = t4 * t4;
    cplx m1 = mu(1, z, tau), m2 = mu(2, z, tau), m3 = mu(3, z, tau);

    Hef out;
    out.h << t2s * m2 * m3, -t4s * m1 * m2 - t3s * m1 * m3,
        -t4s * m1 * m2 + t3s * m1 * m3, -t2s * m2 * m3;
    out.e << m1, -(t3s / t2s) * m2 - (t4s / t2s) * m3,
        (t3s / t2s) * m2 - (t4s / t2s) * m3, -m1;
    out.e *= 0.5;
    // off-diagonal inner factors carry theta2^2 mu2 mu3 (the bare mu2 mu3 of the
    // printed form fails the sl(2) relations; see the derivation from the
    // half-tau identities and the quartic)
    cplx diag = t2s * t2s * m1 * (m2 * m2 + t3s / (t2s * t4s));
    out.f << -diag, (-t4s * m2 - t3s * m3) * (1.0 - t2s * m2 * m3),
        (t4s * m2 - t3s * m3) * (1.0 + t2s * m2 * m3), diag;
    out.f *= 0.5;
    return out;
}

}  // namespace

Hef hef(cplx z, const ModularParam& tau, HefMode mode, OmegaVariant variant) {
    if (mode == HefMode::closed_form) return hef_closed(z, tau);
    return {ad_omega(z, sl2_h(), tau, variant), ad_omega(z, sl2_e(), tau, variant),
            ad_omega(z, sl2_f(), tau, variant)};
}

GeneratorTriple make_generators(const ModularParam& tau, HefMode mode, OmegaVariant variant) {
    GeneratorTriple g;
    g.provenance = mode;
    g.H = [tau, mode, variant](cplx z) { return hef(z, tau, mode, variant).h; };
    g.E = [tau, mode, variant](cplx z) { return hef(z, tau, mode, variant).e; };
    g.F = [tau, mode, variant](cplx z) { return hef(z, tau, mode, variant).f; };
    return g;
}

VariantMatch hef_variant_match(cplx z, const ModularParam& tau) {
    Hef closed = hef_closed(z, tau);
    VariantMatch best;
    best.residual = std::numeric_limits<double>::infinity();
    for (OmegaVariant v : OmegaVariant::all()) {
        Hef ad = hef(z, tau, HefMode::via_ad_omega, v);
        double r = (ad.h - closed.h).cwiseAbs().maxCoeff();
        r = std::max(r, (ad.e - closed.e).cwiseAbs().maxCoeff());
        r = std::max(r, (ad.f - closed.f).cwiseAbs().maxCoeff());
        if (r < best.residual) best = {v, r};
    }
    return best;
}

EquivarianceReport hef_equivariance(cplx z, const ModularParam& tau) {
    EquivarianceReport rep;
    cplx t = tau.tau();
    Hef at = hef_closed(z, tau);
    Hef at1 = hef_closed(z + 0.5, tau);
    Hef at2 = hef_closed(z + t / 2.0, tau);
    Hef atp1 = hef_closed(z + 1.0, tau);
    Hef atpt = hef_closed(z + t, tau);
    Hef atm = hef_closed(-z, tau);

    auto each = [](const Hef& a, const Hef& b, auto&& f) {
        double r = f(a.h, b.h);
        r = std::max(r, f(a.e, b.e));
        return std::max(r, f(a.f, b.f));
    };
    auto rho1 = [](const Mat2& x) { return rep_apply(RepId::rho, GroupElem::t1(), x); };
    auto rho2 = [](const Mat2& x) { return rep_apply(RepId::rho, GroupElem::t2(), x); };

    rep.t1_residual = each(at1, at, [&](const Mat2& a, const Mat2& b) {
        return (a - rho1(b)).cwiseAbs().maxCoeff();
    });
    rep.t2_residual = each(at2, at, [&](const Mat2& a, const Mat2& b) {
        return (a - rho2(b)).cwiseAbs().maxCoeff();
    });
    rep.period_residual = each(atp1, at, [](const Mat2& a, const Mat2& b) {
        return (a - b).cwiseAbs().maxCoeff();
    });
    rep.period_residual = std::max(
        rep.period_residual, each(atpt, at, [](const Mat2& a, const Mat2& b) {
            return (a - b).cwiseAbs().maxCoeff();
        }));
    double p = (atm.h - at.h).cwiseAbs().maxCoeff();
    p = std::max(p, (atm.e + at.e).cwiseAbs().maxCoeff());
    p = std::max(p, (atm.f + at.f).cwiseAbs().maxCoeff());
    rep.parity_residual = p;
    return rep;
}

Hef hef_tilde(cplx l1, cplx l2, cplx l3, const CurveParams& curve, TildeSigns signs) {
    if (curve.curve_residual(l1, l2, l3) > 1e-10)
        throw std::domain_error("hef_tilde: point is not on the curve");
    cplx r12 = curve.r(1) - curve.r(2);
    cplx r13 = curve.r(1) - curve.r(3);
    cplx r23 = curve.r(2) - curve.r(3);
    cplx s12 = static_cast<double>(signs.s12) * std::sqrt(r12);
    cplx s13 = static_cast<double>(signs.s13) * std::sqrt(r13);
    cplx s23 = std::sqrt(r23);
    cplx kappa = 1.0 / (s12 * s13);

    Hef out;
    out.h << l2 * l3 / (s12 * s13), -l1 * l2 / (s23 * s13) - l1 * l3 / (s12 * s23),
        -l1 * l2 / (s23 * s13) + l1 * l3 / (s12 * s23), -l2 * l3 / (s12 * s13);
    out.e << l1, -(s13 / s23) * l2 - (s12 / s23) * l3,
        (s13 / s23) * l2 - (s12 / s23) * l3, -l1;
    out.e *= 0.5;
    cplx diag = (1.0 / r12) * l1 * ((1.0 / r13) * l2 * l2 + 1.0);
    out.f << -diag, (1.0 / s23) * (-(1.0 / s13) * l2 - (1.0 / s12) * l3) * (1.0 - kappa * l2 * l3),
        (1.0 / s23) * ((1.0 / s13) * l2 - (1.0 / s12) * l3) * (1.0 + kappa * l2 * l3), diag;
    out.f *= 0.5;
    return out;
}

std::pair<Mat2, Mat2> x_generators(int i, cplx z, const ModularParam& tau) {
    if (i < 1 || i > 3) throw std::invalid_argument("x_generators index must be 1..3");
    int j = i % 3 + 1, k = j % 3 + 1;
    Mat2 xi = sl2_v(i) * mu(i, z, tau);
    Mat2 xip = sl2_v(i) * (mu(j, z, tau) * mu(k, z, tau));
    return {xi, xip};
}

namespace {

// lambda_i v_i on the curve; these satisfy the g(3) families with r_i - r_j.
std::array<Mat2, 4> curve_x(cplx z, const CurveParams& curve) {
    auto l = curve.uniformize(z);
    std::array<Mat2, 4> x;
    for (int i = 1; i <= 3; ++i)
        x[static_cast<std::size_t>(i)] = sl2_v(i) * l[static_cast<std::size_t>(i - 1)];
    return x;
}

}  // namespace

G3NumericReport g3_relations_numeric(cplx z, const CurveParams& curve) {
    auto x = curve_x(z, curve);
    auto l = curve.uniformize(z);
    G3NumericReport rep;

    double plus = 0.0, minus = 0.0;
    constexpr int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    for (const auto& t : cyc) {
        int i = t[0], j = t[1], k = t[2];
        auto I = static_cast<std::size_t>(i), J = static_cast<std::size_t>(j),
             K = static_cast<std::size_t>(k);
        rep.serre_residual = std::max(
            rep.serre_residual, bracket(x[I], bracket(x[J], x[K])).cwiseAbs().maxCoeff());
        Mat2 lhs = bracket(x[I], bracket(x[I], x[K])) - bracket(x[J], bracket(x[J], x[K]));
        cplx rij = curve.r(i) - curve.r(j);
        plus = std::max(plus, (lhs - rij * x[K]).cwiseAbs().maxCoeff());
        minus = std::max(minus, (lhs + rij * x[K]).cwiseAbs().maxCoeff());
        // the bracket constant is lambda_i^2 - lambda_j^2, pinned by Eq. (mu)
        rep.mu_constant_residual = std::max(
            rep.mu_constant_residual,
            std::abs((l[I - 1] * l[I - 1] - l[J - 1] * l[J - 1]) - (curve.r(j) - curve.r(i))));
    }
    rep.orientation = plus <= minus ? +1 : -1;
    rep.second_family_residual = std::min(plus, minus);
    return rep;
}

double gamma_three_quarters() { return 1.2254167024651776451; }

RealFormReport real_form_check(double x, double q) {
    if (!(q > 0.0)) throw std::domain_error("real_form_check requires tau = qi with q > 0");
    ModularParam tau(cplx(0.0, q));
    RealFormReport rep;

    Hef at = hef_closed(x, tau);
    auto max_imag = [](const Hef& h) {
        double m = h.h.imag().cwiseAbs().maxCoeff();
        m = std::max(m, h.e.imag().cwiseAbs().maxCoeff());
        return std::max(m, h.f.imag().cwiseAbs().maxCoeff());
    };
    rep.max_imag_hef = max_imag(at);

    cplx half = tau.tau() / 2.0;
    Hef shifted = hef_closed(x + half, tau);
    rep.max_imag_shifted = max_imag(shifted);
    auto ad_t2 = [](const Mat2& m) { return rep_apply(RepId::rho, GroupElem::t2(), m); };
    rep.shift_law_residual = (shifted.h - ad_t2(at.h)).cwiseAbs().maxCoeff();
    rep.shift_law_residual =
        std::max(rep.shift_law_residual, (shifted.e - ad_t2(at.e)).cwiseAbs().maxCoeff());
    rep.shift_law_residual =
        std::max(rep.shift_law_residual, (shifted.f - ad_t2(at.f)).cwiseAbs().maxCoeff());

    cplx zc = cplx(x, 0.2341 * q);
    rep.conj_residual = (omega(std::conj(zc), tau) - omega(zc, tau).conjugate()).cwiseAbs().maxCoeff();

    if (std::abs(q - 1.0) < 1e-14) {
        double gamma = gamma_three_quarters();
        double alpha = gamma * gamma / std::sqrt(pi);
        auto [t2, t3, t4] = nulls(tau);
        cplx d12 = (t4 * t4) / (t2 * t2 * t3 * t3);
        cplx d23 = (t2 * t2) / (t3 * t3 * t4 * t4);
        cplx d13 = (t3 * t3) / (t4 * t4 * t2 * t2);
        rep.r_constant_residual = std::abs(d12 - alpha);
        rep.r_constant_residual = std::max(rep.r_constant_residual, std::abs(d23 - alpha));
        rep.r_constant_residual = std::max(rep.r_constant_residual, std::abs(d13 - 2.0 * alpha));

        // the printed normal form at tau = i, in terms of alpha alone
        cplx m1 = mu(1, x, tau), m2 = mu(2, x, tau), m3 = mu(3, x, tau);
        double s2 = std::sqrt(2.0);
        double pref = 1.0 / alpha;
        Mat2 hp, ep, fp;
        hp << m2 * m3 / s2, -m1 * m2 / s2 - m1 * m3, -m1 * m2 / s2 + m1 * m3, -m2 * m3 / s2;
        hp *= pref;
        ep << m1, -s2 * m2 - m3, s2 * m2 - m3, -m1;
        ep *= 0.5;
        double kap = 1.0 / (s2 * alpha);  // theta2(0|i)^2
        cplx fdiag = (0.5 * pref) * m1 * m2 * m2 + m1;
        fp << -fdiag, (-m2 / s2 - m3) * (1.0 - kap * m2 * m3),
            (m2 / s2 - m3) * (1.0 + kap * m2 * m3), fdiag;
        fp *= 0.5 * pref;
        rep.gamma_form_residual = (at.h - hp).cwiseAbs().maxCoeff();
        rep.gamma_form_residual =
            std::max(rep.gamma_form_residual, (at.e - ep).cwiseAbs().maxCoeff());
        rep.gamma_form_residual =
            std::max(rep.gamma_form_residual, (at.f - fp).cwiseAbs().maxCoeff());
    }
    return rep;
}

namespace {

struct UglovGen {
    cplx nu_plus, nu_minus;
    cplx c;

    // x_i^pm(z) = -i v_{4-i} w_i(c (z - nu^pm))
    Mat2 operator()(int i, int sign, cplx z, const ModularParam& tau) const {
        cplx nu = sign > 0 ? nu_plus : nu_minus;
        return -kI * sl2_v(4 - i) * jacobi_w(i, c * (z - nu), tau);
    }
};

}  // namespace

UglovReport uglov_check(cplx nu_plus, cplx nu_minus, const ModularParam& tau, int samples,
                        std::uint64_t seed) {
    Lattice half(tau, 0.5);
    if (half.dist_to_lattice(nu_plus - nu_minus) < 1e-10)
        throw degenerate_error("uglov_check: nu+ - nu- lies in the half-lattice");

    UglovReport rep;
    cplx t3 = tau.null_value(3);
    rep.calibration_c = 2.0 * pi * t3 * t3;
    rep.calibration_prefactor = -kI;
    UglovGen gen{nu_plus, nu_minus, rep.calibration_c};

    cplx kmod = jacobi_modulus(tau);
    cplx j_const[4] = {0.0, kmod * kmod, 1.0 - kmod * kmod, -1.0};  // J12, J23, J31

    Rng rng(seed);
    auto draw = [&]() {
        for (int k = 0; k < 4096; ++k) {
            cplx z = rng.real01() + rng.real01() * tau.tau();
            if (half.dist_to_lattice(z - nu_plus) > 5e-2 &&
                half.dist_to_lattice(z - nu_minus) > 5e-2)
                return z;
        }
        throw convergence_error("uglov_check: sampling failed");
    };

    constexpr int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    for (int s = 0; s < samples; ++s) {
        cplx z = draw();
        for (int n = 0; n < 3; ++n) {
            int i = cyc[n][0], j = cyc[n][1], k = cyc[n][2];
            for (int sign : {1, -1}) {
                Mat2 xi = gen(i, sign, z, tau), xj = gen(j, sign, z, tau), xk = gen(k, sign, z, tau);
                rep.serre_residual = std::max(
                    rep.serre_residual, bracket(xi, bracket(xj, xk)).cwiseAbs().maxCoeff());
                Mat2 lhs = bracket(xi, bracket(xi, xk)) - bracket(xj, bracket(xj, xk));
                rep.j_family_residual = std::max(
                    rep.j_family_residual, (lhs - j_const[n] * xk).cwiseAbs().maxCoeff());
            }
            Mat2 same = bracket(gen(i, 1, z, tau), gen(i, -1, z, tau));
            rep.same_index_residual = std::max(rep.same_index_residual, same.cwiseAbs().maxCoeff());
        }
    }
    rep.calibration_ok = rep.j_family_residual < 1e-8;

    for (int s = 0; s < samples; ++s) {
        cplx z = draw();
        for (int n = 0; n < 3; ++n) {
            int i = cyc[n][0], j = cyc[n][1], k = cyc[n][2];
            for (int sign : {1, -1}) {
                cplx delta = gen.c * ((sign > 0 ? nu_minus : nu_plus) - (sign > 0 ? nu_plus : nu_minus));
                Mat2 lhs = bracket(gen(i, sign, z, tau), gen(j, -sign, z, tau));
                Mat2 rhs = kI * (jacobi_w(i, delta, tau) * gen(k, -sign, z, tau) -
                                 jacobi_w(j, delta, tau) * gen(k, sign, z, tau));
                rep.cross_residual = std::max(rep.cross_residual, (lhs - rhs).cwiseAbs().maxCoeff());
            }
        }
    }
    return rep;
}

Mat2 holod_basis(int i, int m, HolodParity parity, cplx z, const CurveParams& curve) {
    if (i < 1 || i > 3) throw std::invalid_argument("holod_basis index must be 1..3");
    auto l = curve.uniformize(z);
    cplx lam = curve.holod_lambda(z);
    int pw = parity == HolodParity::odd ? m : m - 1;
    if (pw < 0 && std::abs(lam) < 1e-12)
        throw pole_error("holod_basis: z lies on the lambda = 0 punctures");
    cplx lam_pow = std::pow(lam, pw);
    if (parity == HolodParity::odd)
        return lam_pow * l[static_cast<std::size_t>(i - 1)] * sl2_v(i);
    int j = i % 3 + 1, k = j % 3 + 1;
    return lam_pow * l[static_cast<std::size_t>(j - 1)] * l[static_cast<std::size_t>(k - 1)] *
           sl2_v(i);
}

HolodSplit holod_w_split(int i, const CurveParams& curve) {
    if (i < 1 || i > 3) throw std::invalid_argument("holod_w_split index must be 1..3");
    const ModularParam& tau = curve.modulus();
    auto zeros = wp_zero(curve.half_lattice());
    if (zeros.first.approx_eq(zeros.second, 1e-8))
        throw degenerate_error(
            "holod_w_split: the p-function zeros coincide ([tau] = [i]); the splitting "
            "degenerates to two orbits");

    HolodSplit out;
    out.z0 = zeros.first;
    cplx z0 = zeros.first.z;
    int j = i % 3 + 1, k = j % 3 + 1;

    auto y_fun = [curve, i](cplx z) {
        return curve.uniformize(z)[static_cast<std::size_t>(i - 1)] / curve.holod_lambda(z);
    };
    auto z_fun = [curve, j, k](cplx z) {
        auto l = curve.uniformize(z);
        return l[static_cast<std::size_t>(j - 1)] * l[static_cast<std::size_t>(k - 1)] /
               curve.holod_lambda(z);
    };

    SplitResult sy = two_point_split(i, y_fun, z0, -z0, tau);
    SplitResult sz = two_point_split(i, z_fun, z0, -z0, tau);
    out.c1 = sy.c1;
    out.c2 = sy.c2;
    out.d1 = sz.c1;
    out.d2 = sz.c2;
    out.fit_residual = std::max(sy.residual, sz.residual);
    cplx wronsk = out.d2 * out.c1 - out.c2 * out.d1;
    double scale = std::abs(out.c1) + std::abs(out.c2) + std::abs(out.d1) + std::abs(out.d2);
    if (std::abs(wronsk) < 1e-10 * scale * scale)
        throw degenerate_error("holod_w_split: fitted coefficients are linearly dependent");

    cplx c2v = out.c2, d2v = out.d2, c1v = out.c1, d1v = out.d1;
    Mat2 vi = sl2_v(i);
    out.w_plus = [y_fun, z_fun, d2v, c2v, vi](cplx z) -> Mat2 {
        return (d2v * y_fun(z) - c2v * z_fun(z)) * vi;
    };
    out.w_minus = [y_fun, z_fun, d1v, c1v, vi](cplx z) -> Mat2 {
        return (d1v * y_fun(z) - c1v * z_fun(z)) * vi;
    };

    // W_i^+ must be a constant multiple of mu_i(z - z0)
    Rng rng(0xACEDU);
    Lattice half = curve.half_lattice();
    cplx ratio0;
    bool have0 = false;
    for (int s = 0; s < 12; ++s) {
        cplx z = rng.real01() + rng.real01() * tau.tau();
        if (half.dist_to_lattice(z - z0) < 5e-2 || half.dist_to_lattice(z + z0) < 5e-2 ||
            half.dist_to_lattice(z) < 5e-2)
            continue;
        cplx ratio = (d2v * y_fun(z) - c2v * z_fun(z)) / mu(i, z - z0, tau);
        if (!have0) {
            ratio0 = ratio;
            have0 = true;
        } else {
            out.constancy_residual = std::max(out.constancy_residual, std::abs(ratio - ratio0));
        }
    }
    return out;
}

bool PunctureSet::valid(const ModularParam& tau) const {
    Lattice half(tau, 0.5);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (half.dist_to_lattice(points[i] - points[j]) < 1e-10) return false;
    return true;
}

}  // namespace alia
