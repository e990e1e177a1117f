#pragma once

#include <functional>
#include <vector>

#include "alia/intertwiner.hpp"

namespace alia {

enum class HefMode { via_ad_omega, closed_form };

struct Hef {
    Mat2 h, e, f;
};

/// The normal-form generator triple H, E, F at z: either Ad(Omega(z)){h,e,f}
/// or the closed forms in the mu_i (the two agree for the matching variant).
Hef hef(cplx z, const ModularParam& tau, HefMode mode,
        OmegaVariant variant = {});

/// Generator triple as reusable closures over the modulus.
struct GeneratorTriple {
    std::function<Mat2(cplx)> H, E, F;
    HefMode provenance;
};
GeneratorTriple make_generators(const ModularParam& tau, HefMode mode,
                                OmegaVariant variant = {});

struct VariantMatch {
    OmegaVariant variant;
    double residual = 0.0;
};

/// Search the 16 variants for the one whose Ad(Omega~) reproduces the closed forms.
VariantMatch hef_variant_match(cplx z, const ModularParam& tau);

struct EquivarianceReport {
    double t1_residual = 0.0;      // X(z+1/2) - rho(t1) X(z), X in {H,E,F}
    double t2_residual = 0.0;      // X(z+tau/2) - rho(t2) X(z)
    double period_residual = 0.0;  // X(z+1) - X(z), X(z+tau) - X(z)
    double parity_residual = 0.0;  // H(-z)-H(z), E(-z)+E(z), F(-z)+F(z)
};

EquivarianceReport hef_equivariance(cplx z, const ModularParam& tau);

/// Sign choices for the square roots sqrt(R13/R23) and sqrt(R12/R23).
struct TildeSigns {
    int s13 = 1, s12 = 1;
};

/// The intrinsic generator triple on the curve (point must satisfy the curve
/// relations within 1e-10). Holds the sl(2) relations for all four sign choices.
Hef hef_tilde(cplx l1, cplx l2, cplx l3, const CurveParams& curve, TildeSigns signs = {});

/// X_i = v_i mu_i(z) and X_i' = v_i mu_j(z) mu_k(z).
std::pair<Mat2, Mat2> x_generators(int i, cplx z, const ModularParam& tau);

struct G3NumericReport {
    double serre_residual = 0.0;        // [X_i,[X_j,X_k]]
    double second_family_residual = 0.; // [X_i,[X_i,X_k]]-[X_j,[X_j,X_k]]-s(r_i-r_j)X_k
    int orientation = 0;                // +1: (r_i - r_j) holds; -1: (r_j - r_i) holds
    double mu_constant_residual = 0.0;  // bracket constants vs the Eq.(mu) differences
};

/// Pointwise residuals of the g(3)-type relations for the X_i, with the sign
/// orientation of the second family detected and reported.
G3NumericReport g3_relations_numeric(cplx z, const CurveParams& curve);

struct RealFormReport {
    double max_imag_hef = 0.0;          // H,E,F entries at real x
    double max_imag_shifted = 0.0;      // at x + tau/2
    double shift_law_residual = 0.0;    // X(x+tau/2) - Ad(T2) X(x)
    double conj_residual = 0.0;         // Omega(conj z) - conj(Omega(z))
    double r_constant_residual = -1.0;  // tau=i only: R12=R23=R13/2=alpha
    double gamma_form_residual = -1.0;  // tau=i only: printed Gamma(3/4) forms
};

/// Reality checks on the torus with tau = qi; the Gamma(3/4)-constant display
/// is additionally verified when q == 1.
RealFormReport real_form_check(double x, double q);

/// Gamma(3/4) to double precision (hard-coded constant).
double gamma_three_quarters();

struct UglovReport {
    cplx calibration_c;        // argument scaling, 2 pi theta3(0|tau)^2
    cplx calibration_prefactor;  // the -i normalization of the generators
    bool calibration_ok = false;  // J-family passed before the cross test
    double serre_residual = 0.0;       // [x_i^pm, [x_j^pm, x_k^pm]]
    double j_family_residual = 0.0;    // [x_i,[x_i,x_k]]-[x_j,[x_j,x_k]] - J_ij x_k
    double same_index_residual = 0.0;  // [x_i^+, x_i^-]
    double cross_residual = 0.0;       // the w-weighted cross bracket family
};

/// Verify the two-orbit defining relations with the calibrated realization
/// x_i^pm(z) = -i v_{4-i} w_i(c (z - nu^pm)), c = 2 pi theta3(0|tau)^2.
UglovReport uglov_check(cplx nu_plus, cplx nu_minus, const ModularParam& tau, int samples,
                        std::uint64_t seed = 0x5eedU);

/// Basis element of the hidden-symmetry algebra at torus point z:
/// odd: X_i^{2m+1} = lambda^m lambda_i v_i; even: X_i^{2m} = lambda^{m-1} lambda_j lambda_k v_i.
enum class HolodParity { odd, even };
Mat2 holod_basis(int i, int m, HolodParity parity, cplx z, const CurveParams& curve);

struct HolodSplit {
    std::function<Mat2(cplx)> w_plus, w_minus;
    cplx c1, c2, d1, d2;      // fitted two-point coefficients of Y_i^1 and Z_i^1
    double fit_residual = 0.0;
    double constancy_residual = 0.0;  // W_i^+ / mu_i(z - z0) constant over samples
    TorusPoint z0;
};

/// Split the order-one pole part of the hidden-symmetry algebra into the two
/// single-orbit pieces W_i^+ = d2 Y_i^1 - c2 Z_i^1, W_i^- = d1 Y_i^1 - c1 Z_i^1.
/// Throws degenerate_error at [tau] = [i] (the p-function zeros coincide).
HolodSplit holod_w_split(int i, const CurveParams& curve);

/// Orbit-distinctness check for puncture sets {p_0 = 0, p_1, ...}.
struct PunctureSet {
    std::vector<cplx> points;
    /// True when p_i - p_j is not in the half-lattice for all i != j (tol 1e-10).
    bool valid(const ModularParam& tau) const;
};

}  // namespace alia
