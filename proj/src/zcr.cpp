#include "alia/zcr.hpp"

#include <cmath>

namespace alia {

cplx pairing(const Vec3c& a, const Vec3c& b) { return a(0) * b(0) + a(1) * b(1) + a(2) * b(2); }

double JetPoint::constraint_residual() const {
    double r = std::abs(pairing(s, s) - 1.0);
    r = std::max(r, std::abs(pairing(s, sx)));
    r = std::max(r, std::abs(pairing(s, sxx) + pairing(sx, sx)));
    r = std::max(r, std::abs(pairing(s, sxxx) + 3.0 * pairing(sx, sxx)));
    return r;
}

JetPoint sample_jet(std::uint64_t seed, JetField field) {
    Rng rng(seed);
    auto draw = [&]() {
        Vec3c v;
        for (int i = 0; i < 3; ++i)
            v(i) = field == JetField::real ? cplx(rng.gauss(), 0.0)
                                           : cplx(rng.gauss(), rng.gauss());
        return v;
    };
    JetPoint jet;
    jet.s = draw();
    jet.s /= std::sqrt(pairing(jet.s, jet.s));
    jet.sx = draw();
    jet.sx -= pairing(jet.s, jet.sx) * jet.s;
    jet.sxx = draw();
    jet.sxx += (-pairing(jet.sx, jet.sx) - pairing(jet.s, jet.sxx)) * jet.s;
    jet.sxxx = draw();
    jet.sxxx += (-3.0 * pairing(jet.sx, jet.sxx) - pairing(jet.s, jet.sxxx)) * jet.s;
    return jet;
}

CurvePoint curve_point_algebraic(const CurveParams& curve, std::uint64_t seed) {
    Rng rng(seed);
    cplx l1(rng.uniform(0.3, 1.5), rng.uniform(-0.7, 0.7));
    cplx l2 = std::sqrt(l1 * l1 + curve.r(1) - curve.r(2));
    cplx l3 = std::sqrt(l1 * l1 + curve.r(1) - curve.r(3));
    return {l1, l2, l3};
}

CurvePoint curve_point_uniformized(const CurveParams& curve, cplx z) {
    auto l = curve.uniformize(z);
    return {l[0], l[1], l[2]};
}

CurvePoint curve_point_act(GroupElem g, const CurvePoint& p) {
    CurvePoint out = p;
    if (g.a) {  // (l1, -l2, -l3)
        out.l2 = -out.l2;
        out.l3 = -out.l3;
    }
    if (g.b) {  // (-l1, -l2, l3)
        out.l1 = -out.l1;
        out.l2 = -out.l2;
    }
    return out;
}

namespace {

Mat4 m_of(const Vec3c& s, const CurvePoint& p) {
    Mat4 m = Mat4::Zero();
    cplx l[3] = {p.l1, p.l2, p.l3};
    for (int i = 0; i < 3; ++i) {
        m(i, 3) = s(i) * l[i];
        m(3, i) = s(i) * l[i];
    }
    return m;
}

Vec3c r_times(const CurveParams& curve, const Vec3c& v) {
    return Vec3c(curve.r(1) * v(0), curve.r(2) * v(1), curve.r(3) * v(2));
}

cplx n_scalar(const JetPoint& jet, const CurvePoint& p, const CurveParams& curve) {
    return curve.r(1) + p.l1 * p.l1 + 0.5 * pairing(jet.s, r_times(curve, jet.s)) +
           1.5 * pairing(jet.sx, jet.sx);
}

}  // namespace

Mat4 lax_M(const JetPoint& jet, const CurvePoint& p) { return m_of(jet.s, p); }

Mat4 lax_N(const JetPoint& jet, const CurvePoint& p, const CurveParams& curve) {
    Mat4 m = m_of(jet.s, p);
    Mat4 dxm = m_of(jet.sx, p);
    Mat4 dx2m = m_of(jet.sxx, p);
    return dx2m + bracket(dxm, m) + m * n_scalar(jet, p, curve);
}

double lax_N_norm(const JetPoint& jet, const CurvePoint& p, const CurveParams& curve) {
    return lax_N(jet, p, curve).cwiseAbs().maxCoeff();
}

double zcr_residual(const JetPoint& jet, const CurvePoint& p, const CurveParams& curve) {
    Mat4 m = m_of(jet.s, p);
    Mat4 dxm = m_of(jet.sx, p);
    Mat4 dx2m = m_of(jet.sxx, p);
    Mat4 dx3m = m_of(jet.sxxx, p);

    cplx scal = n_scalar(jet, p, curve);
    // total x-derivative of the scalar: d<S,RS>/2 = <S_x,RS>; d(3/2<S_x,S_x>) = 3<S_xx,S_x>
    cplx dscal = pairing(jet.sx, r_times(curve, jet.s)) + 3.0 * pairing(jet.sxx, jet.sx);

    // D_x N by jet promotion s -> s_x -> s_xx -> s_xxx (highest slot read: s_xxx;
    // the [D_x M, D_x M] term of the product rule vanishes)
    Mat4 dxn = dx3m + bracket(dx2m, m) + dxm * scal + m * dscal;

    // S_t from the flow, expanded
    Vec3c st = jet.sxxx + 3.0 * pairing(jet.sx, jet.sxx) * jet.s +
               1.5 * pairing(jet.sx, jet.sx) * jet.sx +
               1.5 * pairing(jet.s, r_times(curve, jet.s)) * jet.sx;
    Mat4 dtm = m_of(st, p);

    Mat4 n = lax_N(jet, p, curve);
    return (dxn - dtm + bracket(m, n)).cwiseAbs().maxCoeff();
}

}  // namespace alia
