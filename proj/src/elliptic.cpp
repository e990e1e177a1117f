#include "alia/elliptic.hpp"

#include <algorithm>
#include <cmath>

namespace alia {

namespace {

const cplx kI{0.0, 1.0};
constexpr double kPoleUnderflow = 1e-13;

double wrap01(double x) {
    double f = x - std::floor(x);
    if (f >= 1.0) f -= 1.0;
    return f;
}

}  // namespace

Lattice::Lattice(ModularParam modulus, cplx scale) : mod_(std::move(modulus)), scale_(scale) {
    if (scale == cplx(0.0)) throw std::invalid_argument("lattice scale must be nonzero");
}

std::pair<double, double> Lattice::coords(cplx z) const {
    cplx w = z / scale_;
    double y = w.imag() / mod_.tau().imag();
    double x = w.real() - y * mod_.tau().real();
    return {x, y};
}

cplx Lattice::reduce(cplx z) const {
    auto [x, y] = coords(z);
    return scale_ * (wrap01(x) + wrap01(y) * mod_.tau());
}

double Lattice::dist_to_lattice(cplx z) const {
    auto [x, y] = coords(z);
    x -= std::round(x);
    y -= std::round(y);
    double best = std::abs(scale_ * (x + y * mod_.tau()));
    // the rounded corner is not always nearest for oblique tau
    for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy)
            best = std::min(best, std::abs(scale_ * ((x + dx) + (y + dy) * mod_.tau())));
    return best;
}

bool TorusPoint::approx_eq(const TorusPoint& other, double tol) const {
    return lattice.dist_to_lattice(z - other.z) < tol;
}

cplx modular_lambda(const ModularParam& tau) {
    cplx t2 = tau.null_value(2), t3 = tau.null_value(3);
    cplx r = t2 / t3;
    return r * r * r * r;
}

namespace {

cplx agm(cplx x, cplx y) {
    for (int it = 0; it < 64; ++it) {
        if (std::abs(x - y) <= 1e-16 * (std::abs(x) + std::abs(y))) return x;
        cplx a = (x + y) / 2.0;
        cplx g = std::sqrt(x * y);
        // keep the branch on the same side as the arithmetic mean
        if (std::abs(a - g) > std::abs(a + g)) g = -g;
        x = a;
        y = g;
    }
    throw convergence_error("AGM failed to converge after 64 iterations");
}

cplx complete_K(cplx m) { return pi / (2.0 * agm(cplx(1.0), std::sqrt(1.0 - m))); }

}  // namespace

ModularParam tau_from_r(cplx r1, cplx r2, cplx r3) {
    cplx denom = r1 - r3;
    if (std::abs(denom) < 1e-14 || std::abs(r1 - r2) < 1e-14 || std::abs(r2 - r3) < 1e-14)
        throw degenerate_error("tau_from_r requires pairwise distinct r1, r2, r3");
    cplx m = (r2 - r3) / denom;
    if (std::abs(m) < 1e-12 || std::abs(m - 1.0) < 1e-12)
        throw degenerate_error("tau_from_r: modular parameter m is 0 or 1");
    cplx tau = kI * complete_K(1.0 - m) / complete_K(m);
    ModularParam out(tau);
    if (std::abs(modular_lambda(out) - m) > 1e-10)
        throw convergence_error("tau_from_r: lambda(tau) round trip failed");
    return out;
}

cplx mu(int i, cplx z, const ModularParam& tau) {
    if (i < 1 || i > 3) throw std::invalid_argument("mu index must be 1..3");
    cplx den = theta_jacobi(1, 2.0 * z, tau);
    if (std::abs(den) < kPoleUnderflow)
        throw pole_error("mu: z lies on the half-lattice poles");
    return theta_jacobi(i + 1, 2.0 * z, tau) / (tau.null_value(i + 1) * den);
}

namespace {

// -(log theta_1)'' with the theta layer's derivatives.
cplx neg_log_theta1_dd(cplx z, const ModularParam& tau) {
    cplx t0 = theta_jacobi(1, z, tau);
    if (std::abs(t0) < kPoleUnderflow) throw pole_error("wp: z lies on a lattice point");
    cplx d1 = theta_deriv(1, z, tau, 1);
    cplx d2 = theta_deriv(1, z, tau, 2);
    return -(d2 * t0 - d1 * d1) / (t0 * t0);
}

// Additive constant fixed by matching the 1/z^2 Laurent tail near z = 1e-3;
// one Richardson step (h and h/2) removes the g2 z^2/20 contamination.
cplx wp_tail_constant(const ModularParam& tau) {
    auto chat = [&](double h) {
        cplx w(h, 0.0);
        return 1.0 / (w * w) - neg_log_theta1_dd(w, tau);
    };
    cplx c1 = chat(1e-3), c2 = chat(5e-4);
    return (4.0 * c2 - c1) / 3.0;
}

cplx wp_unit(cplx z, const ModularParam& tau) {
    return neg_log_theta1_dd(z, tau) + wp_tail_constant(tau);
}

cplx wp_prime_unit(cplx z, const ModularParam& tau) {
    cplx t0 = theta_jacobi(1, z, tau);
    if (std::abs(t0) < kPoleUnderflow) throw pole_error("wp_prime: z lies on a lattice point");
    cplx d1 = theta_deriv(1, z, tau, 1) / t0;
    cplx d2 = theta_deriv(1, z, tau, 2) / t0;
    cplx d3 = theta_deriv(1, z, tau, 3) / t0;
    // -(log f)''' = -(f'''/f - 3 f''f'/f^2 + 2 (f'/f)^3)
    return -(d3 - 3.0 * d2 * d1 + 2.0 * d1 * d1 * d1);
}

}  // namespace

cplx wp(cplx z, const Lattice& lattice) {
    cplx s = lattice.scale();
    return wp_unit(z / s, lattice.modulus()) / (s * s);
}

cplx wp_prime(cplx z, const Lattice& lattice) {
    cplx s = lattice.scale();
    return wp_prime_unit(z / s, lattice.modulus()) / (s * s * s);
}

std::array<cplx, 3> branch_values(const Lattice& lattice) {
    const ModularParam& m = lattice.modulus();
    cplx t2 = m.null_value(2), t3 = m.null_value(3), t4 = m.null_value(4);
    auto p4 = [](cplx x) { return x * x * x * x; };
    cplx pref = pi * pi / 3.0;
    cplx e1 = pref * (p4(t3) + p4(t4));
    cplx e2 = pref * (p4(t2) - p4(t4));
    cplx e3 = -pref * (p4(t2) + p4(t3));
    cplx s2 = lattice.scale() * lattice.scale();
    return {e1 / s2, e2 / s2, e3 / s2};
}

std::pair<cplx, cplx> invariants_g2_g3(const Lattice& lattice) {
    auto e = branch_values(lattice);
    cplx g2 = 2.0 * (e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);
    cplx g3 = 4.0 * e[0] * e[1] * e[2];
    return {g2, g3};
}

std::pair<TorusPoint, TorusPoint> wp_zero(const Lattice& lattice) {
    constexpr int kGrid = 40;
    cplx s = lattice.scale();
    cplx tau = lattice.tau();

    cplx best;
    double best_val = std::numeric_limits<double>::infinity();
    for (int ix = 0; ix < kGrid; ++ix) {
        for (int iy = 0; iy < kGrid; ++iy) {
            double x = (ix + 0.5) / kGrid, y = (iy + 0.5) / kGrid;
            cplx z = s * (x + y * tau);
            if (lattice.dist_to_lattice(z) < 1e-2) continue;
            double v = std::abs(wp(z, lattice));
            if (v < best_val) {
                best_val = v;
                best = z;
            }
        }
    }

    cplx z0 = best;
    double scale = std::abs(wp(s * (0.25 + 0.25 * tau), lattice)) + 1.0;
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
        cplx val = wp(z0, lattice);
        if (std::abs(val) < 1e-12 * scale) {
            converged = true;
            break;
        }
        cplx der = wp_prime(z0, lattice);
        if (std::abs(der) < 1e-300) break;
        cplx step = val / der;
        double cap = std::abs(s) * 0.05;
        if (std::abs(step) > cap) step *= cap / std::abs(step);
        z0 -= step;
    }
    if (!converged && std::abs(wp(z0, lattice)) > 1e-10 * scale)
        throw convergence_error("wp_zero: Newton iteration did not converge");

    TorusPoint plus{lattice.reduce(z0), lattice};
    TorusPoint minus{lattice.reduce(-z0), lattice};
    return {plus, minus};
}

cplx xi_p(cplx z, cplx p, const ModularParam& tau) {
    Lattice half(tau, 0.5);
    if (half.dist_to_lattice(p) < 1e-10)
        throw std::domain_error("xi_p: p must not lie in the half-lattice");
    return mu(1, z, tau) * mu(1, z - p, tau);
}

namespace {

cplx sn_arg(cplx z, const ModularParam& tau) {
    cplx t3 = tau.null_value(3);
    return z / (pi * t3 * t3);
}

}  // namespace

cplx jacobi_sn(cplx z, const ModularParam& tau) {
    cplx v = sn_arg(z, tau);
    return (tau.null_value(3) / tau.null_value(2)) * theta_jacobi(1, v, tau) /
           theta_jacobi(4, v, tau);
}

cplx jacobi_cn(cplx z, const ModularParam& tau) {
    cplx v = sn_arg(z, tau);
    return (tau.null_value(4) / tau.null_value(2)) * theta_jacobi(2, v, tau) /
           theta_jacobi(4, v, tau);
}

cplx jacobi_dn(cplx z, const ModularParam& tau) {
    cplx v = sn_arg(z, tau);
    return (tau.null_value(4) / tau.null_value(3)) * theta_jacobi(3, v, tau) /
           theta_jacobi(4, v, tau);
}

cplx jacobi_modulus(const ModularParam& tau) {
    cplx r = tau.null_value(2) / tau.null_value(3);
    return r * r;
}

cplx jacobi_w(int i, cplx z, const ModularParam& tau) {
    cplx v = sn_arg(z, tau);
    cplx t1v = theta_jacobi(1, v, tau);
    if (std::abs(t1v) < kPoleUnderflow) throw pole_error("jacobi_w: z is a zero of sn");
    switch (i) {
        case 1: return 1.0 / jacobi_sn(z, tau);
        case 2: return jacobi_dn(z, tau) / jacobi_sn(z, tau);
        case 3: return jacobi_cn(z, tau) / jacobi_sn(z, tau);
        default: throw std::invalid_argument("jacobi_w index must be 1..3");
    }
}

SplitResult two_point_split(int i, const std::function<cplx(cplx)>& f, cplx z_plus,
                            cplx z_minus, const ModularParam& tau) {
    Lattice half(tau, 0.5);
    if (half.dist_to_lattice(z_plus - z_minus) < 1e-10)
        throw degenerate_error("two_point_split: z_plus - z_minus lies in the half-lattice");

    auto usable = [&](cplx z) {
        return half.dist_to_lattice(z - z_plus) > 5e-2 && half.dist_to_lattice(z - z_minus) > 5e-2 &&
               half.dist_to_lattice(z) > 5e-2;
    };
    Rng rng(0x5eedUL);
    auto draw = [&]() {
        for (int k = 0; k < 256; ++k) {
            cplx z = rng.real01() + rng.real01() * tau.tau();
            if (usable(z)) return z;
        }
        throw convergence_error("two_point_split: could not place sample points");
    };

    cplx c1, c2;
    bool solved = false;
    for (int attempt = 0; attempt < 8 && !solved; ++attempt) {
        cplx s1 = draw(), s2 = draw();
        cplx a11 = mu(i, s1 - z_plus, tau), a12 = mu(i, s1 - z_minus, tau);
        cplx a21 = mu(i, s2 - z_plus, tau), a22 = mu(i, s2 - z_minus, tau);
        cplx det = a11 * a22 - a12 * a21;
        double norm = std::abs(a11) + std::abs(a12) + std::abs(a21) + std::abs(a22);
        if (std::abs(det) < 1e-10 * norm * norm) continue;
        cplx b1 = f(s1), b2 = f(s2);
        c1 = (b1 * a22 - b2 * a12) / det;
        c2 = (a11 * b2 - a21 * b1) / det;
        solved = true;
    }
    if (!solved) throw degenerate_error("two_point_split: sample points are degenerate");

    SplitResult out{c1, c2, 0.0, false};
    double fscale = 0.0;
    for (int k = 0; k < 8; ++k) {
        cplx z = draw();
        cplx model = c1 * mu(i, z - z_plus, tau) + c2 * mu(i, z - z_minus, tau);
        cplx val = f(z);
        fscale = std::max(fscale, std::abs(val));
        out.residual = std::max(out.residual, std::abs(val - model));
    }
    out.in_span = out.residual <= 1e-6 * std::max(fscale, 1.0);
    return out;
}

cplx isotypical_project(const std::function<cplx(cplx)>& f, D2Character chi, cplx z,
                        const ModularParam& tau) {
    cplx sum = 0.0;
    for (GroupElem g : GroupElem::all_d2()) {
        cplx shifted = z + (g.a ? 0.5 : 0.0) + (g.b ? tau.tau() / 2.0 : 0.0);
        sum += chi.value(g) * f(shifted);
    }
    return sum / 4.0;
}

CurveParams::CurveParams(std::array<cplx, 3> r, ModularParam tau)
    : r_(r), tau_(std::move(tau)) {
    cplx mean = (r_[0] + r_[1] + r_[2]) / 3.0;
    for (int i = 0; i < 3; ++i) a_[static_cast<std::size_t>(i)] = r_[static_cast<std::size_t>(i)] - mean;
    lambda_tau_ = modular_lambda(tau_);
    cplx m = (r_[1] - r_[2]) / (r_[0] - r_[2]);
    if (std::abs(lambda_tau_ - m) > 1e-10)
        throw convergence_error("CurveParams: lambda(tau) does not match the r cross-ratio");
    A_ = std::sqrt((r_[0] - r_[2]) / (r_[1] - r_[2]));
    B_ = std::sqrt((r_[0] - r_[1]) / (r_[1] - r_[2]));

    cplx t2 = tau_.null_value(2), t3 = tau_.null_value(3), t4 = tau_.null_value(4);
    cplx d23 = (t2 * t2) / (t3 * t3 * t4 * t4);  // theta expression for r2 - r3
    mu_scale_ = std::sqrt((r_[1] - r_[2]) / d23);
    // 1/a for the lattice scale a placing the branch values of p at the A_i;
    // pairing it with mu_scale through 1/theta_1'(0) keeps the p' sign coherent
    inv_a_ = mu_scale_ / (2.0 * pi * t2 * t3 * t4);
}

CurveParams CurveParams::from_r(cplx r1, cplx r2, cplx r3) {
    return CurveParams({r1, r2, r3}, tau_from_r(r1, r2, r3));
}

CurveParams CurveParams::normalized(const ModularParam& tau) {
    cplx t2 = tau.null_value(2), t3 = tau.null_value(3), t4 = tau.null_value(4);
    cplx d12 = (t4 * t4) / (t2 * t2 * t3 * t3);
    cplx d23 = (t2 * t2) / (t3 * t3 * t4 * t4);
    cplx r1 = (2.0 * d12 + d23) / 3.0;
    return CurveParams({r1, r1 - d12, r1 - d12 - d23}, tau);
}

std::array<cplx, 3> CurveParams::uniformize(cplx z) const {
    return {mu_scale_ * mu(1, z, tau_), mu_scale_ * mu(2, z, tau_), mu_scale_ * mu(3, z, tau_)};
}

double CurveParams::curve_residual(cplx l1, cplx l2, cplx l3) const {
    double r = std::abs(l1 * l1 - l3 * l3 - (r_[2] - r_[0]));
    r = std::max(r, std::abs(l2 * l2 - l1 * l1 - (r_[0] - r_[1])));
    r = std::max(r, std::abs(l3 * l3 - l2 * l2 - (r_[1] - r_[2])));
    return r;
}

cplx CurveParams::holod_lambda(cplx z) const {
    return inv_a_ * inv_a_ * wp(z, half_lattice());
}

cplx CurveParams::holod_wp_prime(cplx z) const {
    return inv_a_ * inv_a_ * inv_a_ * wp_prime(z, half_lattice());
}

}  // namespace alia
