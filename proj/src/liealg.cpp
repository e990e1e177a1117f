#include "alia/liealg.hpp"

namespace alia {

namespace {
const cplx kI{0.0, 1.0};
}

Mat2 sl2_h() {
    Mat2 m;
    m << 1, 0, 0, -1;
    return m;
}

Mat2 sl2_e() {
    Mat2 m;
    m << 0, 1, 0, 0;
    return m;
}

Mat2 sl2_f() {
    Mat2 m;
    m << 0, 0, 1, 0;
    return m;
}

Mat2 sl2_v(int i) {
    Mat2 m;
    switch (i) {
        case 1: m << -kI / 2.0, 0, 0, kI / 2.0; break;
        case 2: m << 0, 0.5, -0.5, 0; break;
        case 3: m << 0, -kI / 2.0, -kI / 2.0, 0; break;
        default: throw std::invalid_argument("sl2_v index must be 1..3");
    }
    return m;
}

Mat2 rep_t1() { return sl2_h(); }

Mat2 rep_t2() {
    Mat2 m;
    m << 0, 1, 1, 0;
    return m;
}

Vec3c coords_hef(const Mat2& x) {
    if (std::abs(x.trace()) > 1e-10 * (1.0 + x.norm()))
        throw std::invalid_argument("coords_hef expects a traceless matrix");
    return Vec3c(x(0, 0), x(0, 1), x(1, 0));
}

Mat2 from_coords_hef(const Vec3c& c) {
    Mat2 m;
    m << c(0), c(1), c(2), -c(0);
    return m;
}

Mat3 ad_matrix(const Mat2& m) {
    cplx det = m.determinant();
    if (std::abs(det) < 1e-14 * (1.0 + m.norm() * m.norm()))
        throw std::invalid_argument("ad_matrix requires an invertible matrix");
    cplx a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    Mat3 r;
    r << b * c + a * d, -a * c, b * d,
        -2.0 * a * b, a * a, -b * b,
        2.0 * c * d, -c * c, d * d;
    return r / det;
}

RepId rep_from_name(const std::string& name) {
    if (name == "rho_prime") return RepId::rho_prime;
    if (name == "rho") return RepId::rho;
    if (name == "rho_tilde") return RepId::rho_tilde;
    throw std::invalid_argument("unknown representation '" + name + "'");
}

namespace {

Mat2 rho_prime_matrix(GroupElem g) {
    Mat2 m = Mat2::Identity();
    if (g.a) m = rep_t1() * m;
    if (g.b) m = m * rep_t2();
    if (g.c) m = -m;
    return m;
}

}  // namespace

Mat2 rep_apply(RepId rep, GroupElem g, const Mat2& a) {
    switch (rep) {
        case RepId::rho_prime: return rho_prime_matrix(g) * a;
        case RepId::rho: {
            Mat2 t = rho_prime_matrix(g);
            return t * a * t.inverse();
        }
        case RepId::rho_tilde:
            throw std::invalid_argument("rho_tilde acts on 4x4 matrices; use rep_apply_so31");
    }
    throw std::logic_error("unreachable");
}

Mat4 so31_s1() {
    Mat4 m = Mat4::Identity();
    m(1, 1) = -1;
    m(2, 2) = -1;
    return m;
}

Mat4 so31_s2() {
    Mat4 m = Mat4::Identity();
    m(2, 2) = -1;
    m(3, 3) = -1;
    return m;
}

Mat4 rep_apply_so31(GroupElem g, const Mat4& a) {
    Mat4 s = Mat4::Identity();
    if (g.a) s = so31_s1() * s;
    if (g.b) s = s * so31_s2();
    return s * a * s.inverse();
}

Mat4 so31_rotation(int i, int j) {
    if (i < 1 || j < 1 || i >= j || j > 3)
        throw std::invalid_argument("so31_rotation requires 1 <= i < j <= 3");
    Mat4 m = Mat4::Zero();
    m(i - 1, j - 1) = 1;
    m(j - 1, i - 1) = -1;
    return m;
}

Mat4 so31_boost(int l) {
    if (l < 1 || l > 3) throw std::invalid_argument("so31_boost index must be 1..3");
    Mat4 m = Mat4::Zero();
    m(l - 1, 3) = 1;
    m(3, l - 1) = 1;
    return m;
}

double so31_residual(const Mat4& x) {
    Mat4 eta = Mat4::Identity();
    eta(3, 3) = -1;
    return (x.transpose() * eta + eta * x).norm();
}

std::pair<Mat2, Mat2> so31_split(const Mat4& x) {
    if (so31_residual(x) > 1e-12 * (1.0 + x.norm()))
        throw std::invalid_argument("so31_split: input fails the so(3,1) identity");
    Mat4 t = Mat4::Identity();
    t(3, 3) = kI;
    Mat4 ti = Mat4::Identity();
    ti(3, 3) = -kI;  // 1/i
    Mat4 y = t * x * ti;  // antisymmetric (so(4,C))

    // rotation coordinates: L1 = E32-E23, L2 = E13-E31, L3 = E21-E12
    cplx l1 = y(2, 1), l2 = y(0, 2), l3 = y(1, 0);
    // boost coordinates in M_l = E_{l4} - E_{4l}
    cplx m1 = y(0, 3), m2 = y(1, 3), m3 = y(2, 3);

    Mat2 plus = (l1 + m1) / 2.0 * sl2_v(1) + (l2 + m2) / 2.0 * sl2_v(2) + (l3 + m3) / 2.0 * sl2_v(3);
    Mat2 minus = (l1 - m1) / 2.0 * sl2_v(1) + (l2 - m2) / 2.0 * sl2_v(2) + (l3 - m3) / 2.0 * sl2_v(3);
    return {plus, minus};
}

}  // namespace alia
