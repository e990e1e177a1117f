#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "alia/group.hpp"

namespace alia {
namespace qring {

using Rational = boost::multiprecision::cpp_rational;

/// Exact complex number with rational real and imaginary parts.
struct RatC {
    Rational re = 0, im = 0;

    RatC() = default;
    RatC(Rational r) : re(std::move(r)) {}
    RatC(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    RatC(long r) : re(r) {}

    bool is_zero() const { return re == 0 && im == 0; }
    friend RatC operator+(const RatC& a, const RatC& b) { return {a.re + b.re, a.im + b.im}; }
    friend RatC operator-(const RatC& a, const RatC& b) { return {a.re - b.re, a.im - b.im}; }
    friend RatC operator*(const RatC& a, const RatC& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    RatC operator-() const { return {-re, -im}; }
    bool operator==(const RatC&) const = default;
    std::string str() const;
};

/// Dense univariate polynomial in the central coordinate x, exact coefficients.
class PolyX {
  public:
    PolyX() = default;
    explicit PolyX(RatC constant);
    static PolyX x();  // the monomial x

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const RatC& coeff(std::size_t k) const;

    friend PolyX operator+(const PolyX& a, const PolyX& b);
    friend PolyX operator-(const PolyX& a, const PolyX& b);
    friend PolyX operator*(const PolyX& a, const PolyX& b);
    PolyX operator-() const;
    bool operator==(const PolyX&) const = default;

    /// Exact quotient; nullopt when b does not divide a.
    static std::optional<PolyX> divide_exact(const PolyX& a, const PolyX& b);

    std::string str() const;

  private:
    void trim();
    std::vector<RatC> c_;
};

/// Exact curve data (r1, r2, r3), pairwise distinct.
struct QCurve {
    std::array<RatC, 3> r;

    QCurve(RatC r1, RatC r2, RatC r3);
    bool operator==(const QCurve&) const = default;
    /// The central Holod coordinate lambda = x - (r1+r2+r3)/3 as a polynomial.
    PolyX holod_lambda() const;
};

/// Element of C[l1,l2,l3]/I as eight components over the square-free monomials
/// l1^e1 l2^e2 l3^e3 (mask bit i-1 <-> l_i), each a polynomial in x = l_i^2 + r_i.
class QElem {
  public:
    explicit QElem(QCurve curve);
    static QElem zero(const QCurve& curve) { return QElem(curve); }
    static QElem one(const QCurve& curve);
    static QElem constant(const QCurve& curve, RatC value);
    static QElem x(const QCurve& curve);
    static QElem lambda(const QCurve& curve, int i);  // the generator l_i

    const QCurve& curve() const { return curve_; }
    const PolyX& component(unsigned mask) const { return comp_[mask]; }
    PolyX& component(unsigned mask) { return comp_[mask]; }
    bool is_zero() const;
    bool operator==(const QElem&) const = default;
    std::string str() const;

    friend QElem operator+(const QElem& a, const QElem& b);
    friend QElem operator-(const QElem& a, const QElem& b);
    QElem operator-() const;

  private:
    QCurve curve_;
    std::array<PolyX, 8> comp_;
};

/// Product reduced to the eight-component normal form via l_i^2 -> x - r_i.
QElem q_mul(const QElem& a, const QElem& b);
QElem scalar_mul(const PolyX& s, const QElem& a);

/// The D2 action sigma(t1)(l1,l2,l3) = (l1,-l2,-l3), sigma(t2) = (-l1,-l2,l3).
QElem d2_act(GroupElem g, const QElem& a);

/// Averaging projector onto the invariant ring; image lives on masks 0 and 7.
QElem invariant_part(const QElem& a);

/// Formal localization at the central polynomial lambda: num / lambda^pow.
class Laurent {
  public:
    Laurent(QElem num, int pow);
    static Laurent from(const QElem& e) { return Laurent(e, 0); }

    const QElem& num() const { return num_; }
    int pow() const { return pow_; }
    bool is_zero() const { return num_.is_zero(); }

    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent operator-() const { return Laurent(-num_, pow_); }
    bool operator==(const Laurent& other) const;

    /// Cancel common powers of lambda between numerator and denominator.
    Laurent normalized() const;

  private:
    QElem num_;
    int pow_;
};

/// sl(2) element with QElem coefficients over the cross-product basis v1,v2,v3.
struct LieQElem {
    std::array<QElem, 3> coord;

    explicit LieQElem(const QCurve& curve);
    static LieQElem generator(const QCurve& curve, int i);  // X_i = v_i l_i
    bool is_zero() const;
};

LieQElem lie_bracket(const LieQElem& a, const LieQElem& b);
LieQElem lie_sub(const LieQElem& a, const LieQElem& b);
LieQElem lie_scale(const QElem& s, const LieQElem& a);

/// so(3,1) x qring element as a 4x4 matrix of QElem; used for the Q_i checks.
struct QMat4 {
    QCurve curve;
    std::array<QElem, 16> entries;

    explicit QMat4(const QCurve& c);
    QElem& at(int i, int j) { return entries[static_cast<std::size_t>(4 * i + j)]; }
    const QElem& at(int i, int j) const { return entries[static_cast<std::size_t>(4 * i + j)]; }
    bool is_zero() const;
};

QMat4 qmat_mul(const QMat4& a, const QMat4& b);
QMat4 qmat_bracket(const QMat4& a, const QMat4& b);
QMat4 qmat_sub(const QMat4& a, const QMat4& b);
QMat4 qmat_scale(const QElem& s, const QMat4& a);
/// Q_i = (E_{i4} + E_{4i}) l_i.
QMat4 q_so31_generator(const QCurve& curve, int i);
/// Conjugation by S1^a S2^b combined with the curve action of the same element.
QMat4 qmat_d2_act(GroupElem g, const QMat4& m);

struct ExactCheck {
    bool ok = false;
    std::string witness;  // empty on success, else the failing relation
};

struct G3ExactReport {
    ExactCheck sl2_serre, sl2_second;
    int sl2_orientation = 0;  // +1: (r_i - r_j); -1: (r_j - r_i)
    ExactCheck so31_serre, so31_second;
    int so31_orientation = 0;
    ExactCheck qi_invariance;  // Q_i fixed by rho~ (x) sigma
    bool all_ok() const {
        return sl2_serre.ok && sl2_second.ok && so31_serre.ok && so31_second.ok &&
               qi_invariance.ok;
    }
};

/// Exact verification of the defining relations for X_i = v_i l_i and
/// Q_i = (E_{i4}+E_{4i}) l_i, with the sign orientation of the second family
/// detected per side and reported.
G3ExactReport g3_relations_exact(const QCurve& curve);

struct HolodExactReport {
    ExactCheck odd_odd, odd_even, even_even;
    bool all_ok() const { return odd_odd.ok && odd_even.ok && even_even.ok; }
};

/// Exact verification of the hidden-symmetry bracket table over l,s in
/// [-range, range] (lambda powers in the localization).
HolodExactReport holod_brackets_exact(const QCurve& curve, int range = 2);

}  // namespace qring
}  // namespace alia
