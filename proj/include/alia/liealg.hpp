#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>

#include "alia/group.hpp"
#include "alia/types.hpp"

namespace alia {

using Mat2 = Eigen::Matrix2cd;
using Mat3 = Eigen::Matrix3cd;
using Mat4 = Eigen::Matrix4cd;
using Vec3c = Eigen::Vector3cd;

/// Standard sl(2,C) basis h, e, f.
Mat2 sl2_h();
Mat2 sl2_e();
Mat2 sl2_f();
/// The cross-product basis v_1, v_2, v_3 with [v_i, v_j] = eps_{ijk} v_k.
Mat2 sl2_v(int i);

/// The He2 representation matrices T1 = diag(1,-1), T2 = antidiag(1,1).
Mat2 rep_t1();
Mat2 rep_t2();

/// Pointwise bracket [A,B] = AB - BA.
template <typename D1, typename D2>
auto bracket(const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b) {
    return (a * b - b * a).eval();
}

/// Coordinates of a traceless 2x2 matrix in the basis {h, e, f}.
Vec3c coords_hef(const Mat2& x);
Mat2 from_coords_hef(const Vec3c& c);

/// The 3x3 matrix of Ad(M) in the basis {h, e, f}:
///   R_M = (1/det M) [[bc+ad, -ac, bd], [-2ab, a^2, -b^2], [2cd, -c^2, d^2]].
Mat3 ad_matrix(const Mat2& m);

enum class RepId { rho_prime, rho, rho_tilde };

RepId rep_from_name(const std::string& name);

/// rho' acts by left multiplication with (-1)^c T1^a T2^b on C^2-valued objects;
/// rho and rho_tilde act by conjugation (on 2x2 resp. 4x4 matrices).
Mat2 rep_apply(RepId rep, GroupElem g, const Mat2& a);
Mat4 rep_apply_so31(GroupElem g, const Mat4& a);

/// The conjugating matrices S1 = diag(1,-1,-1,1), S2 = diag(1,1,-1,-1) of rho_tilde.
Mat4 so31_s1();
Mat4 so31_s2();

/// so(3,1) basis: rotations E_ij - E_ji (i<j<=3) and boosts E_l4 + E_4l.
Mat4 so31_rotation(int i, int j);
Mat4 so31_boost(int l);
/// Residual of the defining identity X^t I_{3,1} + I_{3,1} X = 0.
double so31_residual(const Mat4& x);

/// Fixed Lie isomorphism (so(3,1))_C -> sl(2,C) + sl(2,C): conjugate I_{3,1}
/// to the symmetric form by T = diag(1,1,1,i), read off the rotation and
/// (rescaled) boost coordinates, and split into the two commuting so(3)
/// copies A_i = (L_i + M_i)/2, B_i = (L_i - M_i)/2 mapped onto the v_i basis.
std::pair<Mat2, Mat2> so31_split(const Mat4& x);

}  // namespace alia
