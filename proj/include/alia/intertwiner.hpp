#pragma once

#include <array>
#include <optional>

#include "alia/elliptic.hpp"
#include "alia/liealg.hpp"
#include "alia/theta.hpp"

namespace alia {

/// Sign variant T1^{a1} T2^{a2} * Omega * T1^{b1} T2^{b2}.
struct OmegaVariant {
    int a1 = 0, a2 = 0, b1 = 0, b2 = 0;

    static std::array<OmegaVariant, 16> all();
    bool is_identity() const { return a1 == 0 && a2 == 0 && b1 == 0 && b2 == 0; }
    std::string label() const;
};

/// psi_pm(z) = +-(theta4^2/theta3) theta3(2z)/theta1(2z)
///             - (theta3^2/theta4) theta4(2z)/theta1(2z), nulls where unstated.
cplx psi_pm(int sign, cplx z, const ModularParam& tau);

/// The intertwiner matrix
///   Omega(z) = [ theta3(2z|2tau)   psi_-(z) theta2(2z|2tau) ]
///              [ theta2(2z|2tau)   psi_+(z) theta3(2z|2tau) ],
/// pre/post multiplied per the variant.
Mat2 omega(cplx z, const ModularParam& tau, OmegaVariant variant = {});

/// det Omega(z) = -theta2(0)^2 theta1(2z); exposed for the determinant checks.
cplx omega_det_reference(cplx z, const ModularParam& tau);

struct OmegaTransformReport {
    double t1_residual = 0.0;        // Omega(z+1/2) - rho'(t1) Omega(z)
    double t2_residual = 0.0;        // Omega(z+tau/2) - e^{-pi i(2z+tau/2)} rho'(t2) Omega(z)
    double parity_residual = 0.0;    // Omega(-z) - Omega(z) rho'(t1)
    double t2_no_prefactor = 0.0;    // the t2 law without its exponential prefactor
    double ad_t2_residual = 0.0;     // Ad(Omega(z+tau/2)) - rho(t2) Ad(Omega(z)) on a basis
};

OmegaTransformReport omega_transform_check(cplx z, const ModularParam& tau);

/// The intrinsic form on the curve; requires (l1,l2,l3) on the curve within 1e-10.
Mat2 omega_intrinsic(cplx l1, cplx l2, cplx l3, const CurveParams& curve);

struct IntrinsicMatch {
    OmegaVariant variant;
    cplx column_scale;   // c with Omega_intrinsic = Omega_variant * diag(c, (r2-r3) c)
    double residual = 0.0;
};

/// Match omega_intrinsic(mu(z)) against the 16 torus variants, with the
/// column scaling diag(c, (r2-r3)c), c^2 = 1/(2 theta2^2 theta1(2z)).
/// Throws if no variant matches within the tolerance.
IntrinsicMatch omega_intrinsic_match(cplx z, const CurveParams& curve, double tol = 1e-8);

struct LduFactors {
    Mat2 lower, diag, upper;
};

/// LDU factorization of Omega(z) as displayed in the paper's remark.
LduFactors ldu_factor(cplx z, const ModularParam& tau);

/// Ad(Omega(z)) A = Omega A Omega^{-1} (closed-form 2x2 adjugate inverse).
Mat2 ad_omega(cplx z, const Mat2& a, const ModularParam& tau, OmegaVariant variant = {});

}  // namespace alia
