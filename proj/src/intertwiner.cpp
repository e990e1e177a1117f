#include "alia/intertwiner.hpp"

#include <cmath>

namespace alia {

namespace {
const cplx kI{0.0, 1.0};
constexpr double kPoleUnderflow = 1e-13;
}  // namespace

std::array<OmegaVariant, 16> OmegaVariant::all() {
    std::array<OmegaVariant, 16> out;
    int n = 0;
    for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2)
            for (int b1 = 0; b1 < 2; ++b1)
                for (int b2 = 0; b2 < 2; ++b2) out[n++] = {a1, a2, b1, b2};
    return out;
}

std::string OmegaVariant::label() const {
    return "T1^" + std::to_string(a1) + " T2^" + std::to_string(a2) + " Omega T1^" +
           std::to_string(b1) + " T2^" + std::to_string(b2);
}

cplx psi_pm(int sign, cplx z, const ModularParam& tau) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("psi_pm sign must be +-1");
    cplx t3 = tau.null_value(3), t4 = tau.null_value(4);
    cplx den = theta_jacobi(1, 2.0 * z, tau);
    if (std::abs(den) < kPoleUnderflow) throw pole_error("psi_pm: pole on the half-lattice");
    cplx num = static_cast<double>(sign) * (t4 * t4 / t3) * theta_jacobi(3, 2.0 * z, tau) -
               (t3 * t3 / t4) * theta_jacobi(4, 2.0 * z, tau);
    return num / den;
}

Mat2 omega(cplx z, const ModularParam& tau, OmegaVariant v) {
    ModularParam tau2(2.0 * tau.tau());
    cplx a = theta_jacobi(3, 2.0 * z, tau2);
    cplx c = theta_jacobi(2, 2.0 * z, tau2);
    Mat2 m;
    m << a, psi_pm(-1, z, tau) * c, c, psi_pm(1, z, tau) * a;
    Mat2 left = Mat2::Identity(), right = Mat2::Identity();
    if (v.a1) left = rep_t1() * left;
    if (v.a2) left = left * rep_t2();
    if (v.b1) right = rep_t1() * right;
    if (v.b2) right = right * rep_t2();
    return left * m * right;
}

cplx omega_det_reference(cplx z, const ModularParam& tau) {
    cplx t2 = tau.null_value(2);
    return -t2 * t2 * theta_jacobi(1, 2.0 * z, tau);
}

OmegaTransformReport omega_transform_check(cplx z, const ModularParam& tau) {
    OmegaTransformReport rep;
    Mat2 o = omega(z, tau);
    Mat2 o1 = omega(z + 0.5, tau);
    Mat2 o2 = omega(z + tau.tau() / 2.0, tau);
    Mat2 om = omega(-z, tau);

    rep.t1_residual = (o1 - rep_t1() * o).cwiseAbs().maxCoeff();
    cplx pref = std::exp(-pi * kI * (2.0 * z + tau.tau() / 2.0));
    rep.t2_residual = (o2 - pref * rep_t2() * o).cwiseAbs().maxCoeff();
    rep.t2_no_prefactor = (o2 - rep_t2() * o).cwiseAbs().maxCoeff();
    rep.parity_residual = (om - o * rep_t1()).cwiseAbs().maxCoeff();

    for (const Mat2& x : {sl2_h(), sl2_e(), sl2_f()}) {
        Mat2 lhs = ad_omega(z + tau.tau() / 2.0, x, tau);
        Mat2 rhs = rep_apply(RepId::rho, GroupElem::t2(), ad_omega(z, x, tau));
        rep.ad_t2_residual = std::max(rep.ad_t2_residual, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    return rep;
}

Mat2 omega_intrinsic(cplx l1, cplx l2, cplx l3, const CurveParams& curve) {
    if (curve.curve_residual(l1, l2, l3) > 1e-10)
        throw std::domain_error("omega_intrinsic: point is not on the curve");
    cplx a = curve.branch_a(), b = curve.branch_b();
    cplx sp = std::sqrt(a * l2 + b * l3);
    cplx sm = std::sqrt(a * l2 - b * l3);
    Mat2 m;
    m << sp, (-l2 / a - l3 / b) * sm,
         sm, (l2 / a - l3 / b) * sp;
    return m / std::sqrt(2.0);
}

IntrinsicMatch omega_intrinsic_match(cplx z, const CurveParams& curve, double tol) {
    const ModularParam& tau = curve.modulus();
    auto l = curve.uniformize(z);
    Mat2 target = omega_intrinsic(l[0], l[1], l[2], curve);

    cplx t2 = tau.null_value(2);
    cplx c2 = 1.0 / (2.0 * t2 * t2 * theta_jacobi(1, 2.0 * z, tau));
    cplx r23 = curve.r(2) - curve.r(3);

    IntrinsicMatch best;
    best.residual = std::numeric_limits<double>::infinity();
    for (OmegaVariant v : OmegaVariant::all()) {
        Mat2 o = omega(z, tau, v);
        for (int s : {1, -1}) {
            cplx c = static_cast<double>(s) * std::sqrt(c2);
            for (int s2 : {1, -1}) {
                Mat2 model = o;
                model.col(0) *= c;
                model.col(1) *= static_cast<double>(s2) * r23 * c;
                double res = (target - model).cwiseAbs().maxCoeff();
                if (res < best.residual) best = {v, c, res};
            }
        }
    }
    if (!(best.residual < tol))
        throw convergence_error("omega_intrinsic_match: no variant matches within tolerance");
    return best;
}

LduFactors ldu_factor(cplx z, const ModularParam& tau) {
    ModularParam tau2(2.0 * tau.tau());
    cplx a = theta_jacobi(3, 2.0 * z, tau2);
    if (std::abs(a) < kPoleUnderflow)
        throw degenerate_error("ldu_factor: pivot theta3(2z|2tau) underflows");
    cplx c = theta_jacobi(2, 2.0 * z, tau2);
    cplx det = omega_det_reference(z, tau);

    LduFactors out;
    out.lower << 1, 0, c / a, 1;
    out.diag << a, 0, 0, det / a;
    out.upper << 1, psi_pm(-1, z, tau) * c / a, 0, 1;
    return out;
}

Mat2 ad_omega(cplx z, const Mat2& a, const ModularParam& tau, OmegaVariant variant) {
    if (std::abs(a.trace()) > 1e-10 * (1.0 + a.norm()))
        throw std::invalid_argument("ad_omega expects a traceless argument");
    Mat2 o = omega(z, tau, variant);
    cplx det = o.determinant();
    if (std::abs(det) < kPoleUnderflow)
        throw pole_error("ad_omega: Omega is singular at a puncture");
    Mat2 adj;
    adj << o(1, 1), -o(0, 1), -o(1, 0), o(0, 0);
    return o * a * adj / det;
}

}  // namespace alia
