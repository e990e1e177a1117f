#pragma once

#include "alia/elliptic.hpp"
#include "alia/liealg.hpp"

namespace alia {

/// Third-order jet of the sphere-valued field: S, S_x, S_xx, S_xxx with
/// <S,S> = 1 and the differentiated constraints.
struct JetPoint {
    Vec3c s, sx, sxx, sxxx;

    /// Max violation of the four constraint identities (bilinear form sum V_i W_i,
    /// no conjugation).
    double constraint_residual() const;
};

/// Bilinear pairing <V,W> = sum V_i W_i (not the Hermitian product).
cplx pairing(const Vec3c& a, const Vec3c& b);

enum class JetField { real, complex };

/// Draw a constrained jet: S normalized Gaussian, S_x projected tangent,
/// S_xx and S_xxx corrected along S to satisfy the differentiated constraints.
JetPoint sample_jet(std::uint64_t seed, JetField field = JetField::real);

/// Point on the spectral curve lambda_i^2 - lambda_j^2 = r_j - r_i.
struct CurvePoint {
    cplx l1, l2, l3;

    double residual(const CurveParams& curve) const {
        return curve.curve_residual(l1, l2, l3);
    }
};

/// Algebraic sampling: draw lambda_1 and solve the quadratic relations with
/// principal branches.
CurvePoint curve_point_algebraic(const CurveParams& curve, std::uint64_t seed);
/// Analytic sampling through the mu-uniformization at torus point z.
CurvePoint curve_point_uniformized(const CurveParams& curve, cplx z);
/// The D2 action on curve points.
CurvePoint curve_point_act(GroupElem g, const CurvePoint& p);

/// Lax matrix M = sum_i (E_{i4} + E_{4i}) s^i lambda_i.
Mat4 lax_M(const JetPoint& jet, const CurvePoint& p);

/// N = D_x^2(M) + [D_x M, M] + M (r1 + lambda_1^2 + <S,RS>/2 + 3/2 <S_x,S_x>).
Mat4 lax_N(const JetPoint& jet, const CurvePoint& p, const CurveParams& curve);

/// Max-norm of D_x N - D_t M + [M, N] with S_t substituted from the flow; the
/// identity holds on the constraint manifold.
double zcr_residual(const JetPoint& jet, const CurvePoint& p, const CurveParams& curve);

/// Scale reference ||N|| for relative residual reporting.
double lax_N_norm(const JetPoint& jet, const CurvePoint& p, const CurveParams& curve);

}  // namespace alia
