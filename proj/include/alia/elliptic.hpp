#pragma once

#include <array>
#include <functional>
#include <utility>

#include "alia/group.hpp"
#include "alia/theta.hpp"
#include "alia/types.hpp"

namespace alia {

/// The lattice scale*(Z + Z*tau).
class Lattice {
  public:
    Lattice(ModularParam modulus, cplx scale);

    const ModularParam& modulus() const { return mod_; }
    cplx tau() const { return mod_.tau(); }
    cplx scale() const { return scale_; }
    Lattice half() const { return Lattice(mod_, scale_ / 2.0); }

    /// Representative in the fundamental parallelogram scale*{x + y*tau : x,y in [0,1)}.
    cplx reduce(cplx z) const;
    /// Distance from z to the nearest lattice point.
    double dist_to_lattice(cplx z) const;
    /// Lattice coordinates (x, y) with z = scale*(x + y*tau).
    std::pair<double, double> coords(cplx z) const;

  private:
    ModularParam mod_;
    cplx scale_;
};

/// A point on the torus C/Lattice; equality is equality mod the lattice.
struct TorusPoint {
    cplx z;
    Lattice lattice;

    TorusPoint reduced() const { return {lattice.reduce(z), lattice}; }
    bool approx_eq(const TorusPoint& other, double tol = 1e-12) const;
};

cplx modular_lambda(const ModularParam& tau);

/// Invert the modular lambda function: tau = i K(1-m)/K(m) with
/// m = (r2-r3)/(r1-r3), K computed by the AGM. Throws degenerate_error when
/// m is 0 or 1 (coincident branch points) and convergence_error if the AGM
/// stalls or the lambda round trip fails.
ModularParam tau_from_r(cplx r1, cplx r2, cplx r3);

/// The uniformizers mu_i(z) = theta_{i+1}(2z|tau) / (theta_{i+1}(0|tau) theta_1(2z|tau)).
cplx mu(int i, cplx z, const ModularParam& tau);

/// Weierstrass p-function and derivative for an arbitrary lattice, built from
/// the second log-derivative of theta_1 on the unit lattice and rescaled by
/// p_{aL}(z) = a^-2 p_L(z/a).
cplx wp(cplx z, const Lattice& lattice);
cplx wp_prime(cplx z, const Lattice& lattice);

/// Modular invariants (g2, g3) of the lattice, from the theta-null branch values.
std::pair<cplx, cplx> invariants_g2_g3(const Lattice& lattice);

/// Branch values (e1, e2, e3) = p(s/2), p(s(1+tau)/2), p(s tau/2).
std::array<cplx, 3> branch_values(const Lattice& lattice);

/// The two zeros +-z0 of p, located by a grid scan plus Newton iteration.
/// They coincide mod the lattice exactly when [tau] = [i].
std::pair<TorusPoint, TorusPoint> wp_zero(const Lattice& lattice);

/// xi_p(z) = mu_1(z) mu_1(z-p); requires p not in (1/2)Lambda.
cplx xi_p(cplx z, cplx p, const ModularParam& tau);

/// Jacobi elliptic functions of modulus k = theta_2^2/theta_3^2, via theta
/// quotients with argument v = z/(pi theta_3^2).
cplx jacobi_sn(cplx z, const ModularParam& tau);
cplx jacobi_cn(cplx z, const ModularParam& tau);
cplx jacobi_dn(cplx z, const ModularParam& tau);
cplx jacobi_modulus(const ModularParam& tau);  // k

/// w_1 = 1/sn, w_2 = dn/sn, w_3 = cn/sn.
cplx jacobi_w(int i, cplx z, const ModularParam& tau);

struct SplitResult {
    cplx c1, c2;
    double residual = 0.0;  // max mismatch at the fresh validation points
    bool in_span = false;
};

/// Fit f(z) ~ c1 mu_i(z - z_plus) + c2 mu_i(z - z_minus) at two sample points
/// and validate at 8 fresh points.
SplitResult two_point_split(int i, const std::function<cplx(cplx)>& f, cplx z_plus,
                            cplx z_minus, const ModularParam& tau);

/// Isotypical projector (1/4) sum_g char(g) f(sigma(g)z), sigma(t1)z = z+1/2,
/// sigma(t2)z = z+tau/2.
cplx isotypical_project(const std::function<cplx(cplx)>& f, D2Character chi, cplx z,
                        const ModularParam& tau);

/// Curve parameters for lambda_i^2 - lambda_j^2 = r_j - r_i, with the derived
/// modulus, theta-normalized offsets, the branch constants A, B of the
/// intrinsic intertwiner, and the scalings relating mu_i to curve coordinates.
class CurveParams {
  public:
    /// General triple of pairwise distinct r's; tau from the cross ratio.
    static CurveParams from_r(cplx r1, cplx r2, cplx r3);
    /// The mean-zero triple whose differences are exactly the theta-null
    /// expressions for the given tau (so lambda_i = mu_i(z) directly).
    static CurveParams normalized(const ModularParam& tau);

    cplx r(int i) const { return r_[static_cast<std::size_t>(i - 1)]; }
    /// Holod offset A_i = r_i - (r1+r2+r3)/3.
    cplx offset(int i) const { return a_[static_cast<std::size_t>(i - 1)]; }
    const ModularParam& modulus() const { return tau_; }
    cplx lambda_tau() const { return lambda_tau_; }
    /// Branch constants of the intrinsic intertwiner: A^2 = (r1-r3)/(r2-r3),
    /// B^2 = (r1-r2)/(r2-r3), principal roots.
    cplx branch_a() const { return A_; }
    cplx branch_b() const { return B_; }
    /// lambda_i(z) = mu_scale * mu_i(z) lies on the curve.
    cplx mu_scale() const { return mu_scale_; }

    std::array<cplx, 3> uniformize(cplx z) const;
    /// Residual of the defining relations at (l1,l2,l3).
    double curve_residual(cplx l1, cplx l2, cplx l3) const;

    /// The central coordinate lambda = lambda_i^2 + A_i as a function on the
    /// torus; equals p of the rescaled half-lattice, so its zeros are the
    /// Holod punctures +-z0.
    cplx holod_lambda(cplx z) const;
    /// p' of the same rescaled half-lattice at the corresponding point;
    /// lambda_1 lambda_2 lambda_3 = -(1/2) holod_wp_prime(z).
    cplx holod_wp_prime(cplx z) const;
    /// The half-lattice of the torus of definition (scale 1/2, modulus tau).
    Lattice half_lattice() const { return Lattice(tau_, 0.5); }

  private:
    CurveParams(std::array<cplx, 3> r, ModularParam tau);

    std::array<cplx, 3> r_;
    std::array<cplx, 3> a_;
    ModularParam tau_;
    cplx lambda_tau_, A_, B_, mu_scale_, inv_a_;
};

}  // namespace alia
