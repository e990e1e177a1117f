#include "alia/qring.hpp"

#include <sstream>
#include <stdexcept>

namespace alia {
namespace qring {

std::string RatC::str() const {
    std::ostringstream os;
    os << re.str();
    if (im != 0) os << (im > 0 ? "+" : "") << im.str() << "i";
    return os.str();
}

PolyX::PolyX(RatC constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

PolyX PolyX::x() {
    PolyX p;
    p.c_ = {RatC(0), RatC(1)};
    return p;
}

const RatC& PolyX::coeff(std::size_t k) const {
    static const RatC zero{};
    return k < c_.size() ? c_[k] : zero;
}

void PolyX::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyX operator+(const PolyX& a, const PolyX& b) {
    PolyX out;
    out.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.c_.size(); ++k) out.c_[k] = a.coeff(k) + b.coeff(k);
    out.trim();
    return out;
}

PolyX operator-(const PolyX& a, const PolyX& b) {
    PolyX out;
    out.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < out.c_.size(); ++k) out.c_[k] = a.coeff(k) - b.coeff(k);
    out.trim();
    return out;
}

PolyX operator*(const PolyX& a, const PolyX& b) {
    PolyX out;
    if (a.is_zero() || b.is_zero()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, RatC{});
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] = out.c_[i + j] + a.c_[i] * b.c_[j];
    out.trim();
    return out;
}

PolyX PolyX::operator-() const {
    PolyX out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

std::optional<PolyX> PolyX::divide_exact(const PolyX& a, const PolyX& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return PolyX{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<RatC> rem = a.c_;
    const RatC& lead = b.c_.back();
    // complex rational inverse of the leading coefficient
    Rational nrm = lead.re * lead.re + lead.im * lead.im;
    RatC lead_inv{lead.re / nrm, -lead.im / nrm};
    std::vector<RatC> quot(a.c_.size() - b.c_.size() + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        RatC q = rem[k + b.c_.size() - 1] * lead_inv;
        quot[k] = q;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            rem[k + j] = rem[k + j] - q * b.c_[j];
    }
    for (const auto& r : rem)
        if (!r.is_zero()) return std::nullopt;
    PolyX out;
    out.c_ = std::move(quot);
    out.trim();
    return out;
}

std::string PolyX::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        os << "(" << c_[k].str() << ")";
        if (k > 0) os << "x^" << k << " + ";
    }
    return os.str();
}

QCurve::QCurve(RatC r1, RatC r2, RatC r3) : r{std::move(r1), std::move(r2), std::move(r3)} {
    if (r[0] == r[1] || r[1] == r[2] || r[0] == r[2])
        throw std::invalid_argument("QCurve requires pairwise distinct r's");
}

PolyX QCurve::holod_lambda() const {
    RatC mean = (r[0] + r[1] + r[2]) * RatC(Rational(1, 3));
    return PolyX::x() - PolyX(mean);
}

QElem::QElem(QCurve curve) : curve_(std::move(curve)) {}

QElem QElem::one(const QCurve& curve) { return constant(curve, RatC(1)); }

QElem QElem::constant(const QCurve& curve, RatC value) {
    QElem e(curve);
    e.comp_[0] = PolyX(std::move(value));
    return e;
}

QElem QElem::x(const QCurve& curve) {
    QElem e(curve);
    e.comp_[0] = PolyX::x();
    return e;
}

QElem QElem::lambda(const QCurve& curve, int i) {
    if (i < 1 || i > 3) throw std::invalid_argument("lambda index must be 1..3");
    QElem e(curve);
    e.comp_[1u << (i - 1)] = PolyX(RatC(1));
    return e;
}

bool QElem::is_zero() const {
    for (const auto& p : comp_)
        if (!p.is_zero()) return false;
    return true;
}

std::string QElem::str() const {
    static const char* mono[8] = {"1", "l1", "l2", "l3", "l1*l2", "l1*l3", "l2*l3", "l1*l2*l3"};
    static const unsigned order[8] = {0, 1, 2, 4, 3, 5, 6, 7};
    std::ostringstream os;
    bool first = true;
    for (unsigned n = 0; n < 8; ++n) {
        unsigned mask = order[n];
        if (comp_[mask].is_zero()) continue;
        if (!first) os << " + ";
        os << "[" << comp_[mask].str() << "]*" << mono[n];
        first = false;
    }
    return first ? "0" : os.str();
}

QElem operator+(const QElem& a, const QElem& b) {
    if (!(a.curve_ == b.curve_)) throw std::invalid_argument("curve mismatch");
    QElem out(a.curve_);
    for (unsigned m = 0; m < 8; ++m) out.comp_[m] = a.comp_[m] + b.comp_[m];
    return out;
}

QElem operator-(const QElem& a, const QElem& b) {
    if (!(a.curve_ == b.curve_)) throw std::invalid_argument("curve mismatch");
    QElem out(a.curve_);
    for (unsigned m = 0; m < 8; ++m) out.comp_[m] = a.comp_[m] - b.comp_[m];
    return out;
}

QElem QElem::operator-() const {
    QElem out(curve_);
    for (unsigned m = 0; m < 8; ++m) out.comp_[m] = -comp_[m];
    return out;
}

QElem q_mul(const QElem& a, const QElem& b) {
    if (!(a.curve() == b.curve())) throw std::invalid_argument("curve mismatch");
    const QCurve& curve = a.curve();
    // l_i^2 reduces to x - r_i
    std::array<PolyX, 3> sq = {PolyX::x() - PolyX(curve.r[0]), PolyX::x() - PolyX(curve.r[1]),
                               PolyX::x() - PolyX(curve.r[2])};
    QElem out(curve);
    for (unsigned ma = 0; ma < 8; ++ma) {
        if (a.component(ma).is_zero()) continue;
        for (unsigned mb = 0; mb < 8; ++mb) {
            if (b.component(mb).is_zero()) continue;
            PolyX term = a.component(ma) * b.component(mb);
            unsigned common = ma & mb;
            for (int i = 0; i < 3; ++i)
                if (common & (1u << i)) term = term * sq[static_cast<std::size_t>(i)];
            unsigned mask = ma ^ mb;
            out.component(mask) = out.component(mask) + term;
        }
    }
    return out;
}

QElem scalar_mul(const PolyX& s, const QElem& a) {
    QElem out(a.curve());
    for (unsigned m = 0; m < 8; ++m) out.component(m) = s * a.component(m);
    return out;
}

QElem d2_act(GroupElem g, const QElem& a) {
    QElem out(a.curve());
    for (unsigned m = 0; m < 8; ++m) {
        int flips = 0;
        if (g.a) flips += ((m >> 1) & 1) + ((m >> 2) & 1);  // t1 negates l2, l3
        if (g.b) flips += (m & 1) + ((m >> 1) & 1);         // t2 negates l1, l2
        out.component(m) = (flips % 2) ? -a.component(m) : a.component(m);
    }
    return out;
}

QElem invariant_part(const QElem& a) {
    QElem sum(a.curve());
    for (GroupElem g : GroupElem::all_d2()) sum = sum + d2_act(g, a);
    QElem out(a.curve());
    for (unsigned m = 0; m < 8; ++m)
        out.component(m) = PolyX(RatC(Rational(1, 4))) * sum.component(m);
    return out;
}

Laurent::Laurent(QElem num, int pow) : num_(std::move(num)), pow_(pow) {
    if (pow_ < 0) {
        PolyX lam = num_.curve().holod_lambda();
        PolyX mult(RatC(1));
        for (int k = 0; k < -pow_; ++k) mult = mult * lam;
        num_ = scalar_mul(mult, num_);
        pow_ = 0;
    }
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    PolyX lam = a.num().curve().holod_lambda();
    int pow = std::max(a.pow(), b.pow());
    auto lift = [&](const Laurent& l) {
        PolyX mult(RatC(1));
        for (int k = 0; k < pow - l.pow(); ++k) mult = mult * lam;
        return scalar_mul(mult, l.num());
    };
    return Laurent(lift(a) + lift(b), pow);
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
    return Laurent(q_mul(a.num(), b.num()), a.pow() + b.pow());
}

bool Laurent::operator==(const Laurent& other) const { return (*this - other).is_zero(); }

Laurent Laurent::normalized() const {
    Laurent out = *this;
    PolyX lam = num_.curve().holod_lambda();
    while (out.pow_ > 0) {
        QElem reduced(out.num_.curve());
        bool divisible = true;
        for (unsigned m = 0; m < 8 && divisible; ++m) {
            auto q = PolyX::divide_exact(out.num_.component(m), lam);
            if (!q && !out.num_.component(m).is_zero()) divisible = false;
            else reduced.component(m) = q ? *q : PolyX{};
        }
        if (!divisible) break;
        out.num_ = reduced;
        --out.pow_;
    }
    return out;
}

LieQElem::LieQElem(const QCurve& curve) : coord{QElem(curve), QElem(curve), QElem(curve)} {}

LieQElem LieQElem::generator(const QCurve& curve, int i) {
    LieQElem out(curve);
    out.coord[static_cast<std::size_t>(i - 1)] = QElem::lambda(curve, i);
    return out;
}

bool LieQElem::is_zero() const {
    return coord[0].is_zero() && coord[1].is_zero() && coord[2].is_zero();
}

LieQElem lie_bracket(const LieQElem& a, const LieQElem& b) {
    LieQElem out(a.coord[0].curve());
    // [v_i, v_j] = eps_{ijk} v_k
    constexpr int cyc[3][3] = {{2, 3, 1}, {3, 1, 2}, {1, 2, 3}};
    for (const auto& t : cyc) {
        auto i = static_cast<std::size_t>(t[0] - 1), j = static_cast<std::size_t>(t[1] - 1),
             k = static_cast<std::size_t>(t[2] - 1);
        out.coord[k] = q_mul(a.coord[i], b.coord[j]) - q_mul(a.coord[j], b.coord[i]);
    }
    return out;
}

LieQElem lie_sub(const LieQElem& a, const LieQElem& b) {
    LieQElem out(a.coord[0].curve());
    for (int n = 0; n < 3; ++n)
        out.coord[static_cast<std::size_t>(n)] =
            a.coord[static_cast<std::size_t>(n)] - b.coord[static_cast<std::size_t>(n)];
    return out;
}

LieQElem lie_scale(const QElem& s, const LieQElem& a) {
    LieQElem out(a.coord[0].curve());
    for (int n = 0; n < 3; ++n)
        out.coord[static_cast<std::size_t>(n)] = q_mul(s, a.coord[static_cast<std::size_t>(n)]);
    return out;
}

QMat4::QMat4(const QCurve& c)
    : curve(c),
      entries{QElem(c), QElem(c), QElem(c), QElem(c), QElem(c), QElem(c), QElem(c), QElem(c),
              QElem(c), QElem(c), QElem(c), QElem(c), QElem(c), QElem(c), QElem(c), QElem(c)} {}

bool QMat4::is_zero() const {
    for (const auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

QMat4 qmat_mul(const QMat4& a, const QMat4& b) {
    QMat4 out(a.curve);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            QElem s(a.curve);
            for (int k = 0; k < 4; ++k) s = s + q_mul(a.at(i, k), b.at(k, j));
            out.at(i, j) = s;
        }
    return out;
}

QMat4 qmat_bracket(const QMat4& a, const QMat4& b) {
    return qmat_sub(qmat_mul(a, b), qmat_mul(b, a));
}

QMat4 qmat_sub(const QMat4& a, const QMat4& b) {
    QMat4 out(a.curve);
    for (int n = 0; n < 16; ++n)
        out.entries[static_cast<std::size_t>(n)] =
            a.entries[static_cast<std::size_t>(n)] - b.entries[static_cast<std::size_t>(n)];
    return out;
}

QMat4 qmat_scale(const QElem& s, const QMat4& a) {
    QMat4 out(a.curve);
    for (int n = 0; n < 16; ++n)
        out.entries[static_cast<std::size_t>(n)] = q_mul(s, a.entries[static_cast<std::size_t>(n)]);
    return out;
}

QMat4 q_so31_generator(const QCurve& curve, int i) {
    if (i < 1 || i > 3) throw std::invalid_argument("so31 generator index must be 1..3");
    QMat4 out(curve);
    out.at(i - 1, 3) = QElem::lambda(curve, i);
    out.at(3, i - 1) = QElem::lambda(curve, i);
    return out;
}

QMat4 qmat_d2_act(GroupElem g, const QMat4& m) {
    // diag signs of S1^a S2^b
    int s[4] = {1, g.a ? -1 : 1, (g.a ? -1 : 1) * (g.b ? -1 : 1), g.b ? -1 : 1};
    QMat4 out(m.curve);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            QElem e = d2_act(g, m.at(i, j));
            out.at(i, j) = (s[i] * s[j] < 0) ? -e : e;
        }
    return out;
}

namespace {

QElem r_diff(const QCurve& curve, int i, int j) {
    return QElem::constant(curve,
                           curve.r[static_cast<std::size_t>(i - 1)] -
                               curve.r[static_cast<std::size_t>(j - 1)]);
}

}  // namespace

G3ExactReport g3_relations_exact(const QCurve& curve) {
    G3ExactReport rep;

    // --- sl(2) side: X_i = v_i l_i
    std::array<LieQElem, 4> x = {LieQElem(curve), LieQElem::generator(curve, 1),
                                 LieQElem::generator(curve, 2), LieQElem::generator(curve, 3)};
    rep.sl2_serre.ok = true;
    rep.so31_serre.ok = true;
    constexpr int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    for (const auto& t : cyc) {
        auto I = static_cast<std::size_t>(t[0]), J = static_cast<std::size_t>(t[1]),
             K = static_cast<std::size_t>(t[2]);
        if (!lie_bracket(x[I], lie_bracket(x[J], x[K])).is_zero()) {
            rep.sl2_serre.ok = false;
            rep.sl2_serre.witness = "[X" + std::to_string(t[0]) + ",[X" + std::to_string(t[1]) +
                                    ",X" + std::to_string(t[2]) + "]] != 0";
        }
    }
    int plus_ok = 1, minus_ok = 1;
    for (const auto& t : cyc) {
        int i = t[0], j = t[1], k = t[2];
        auto I = static_cast<std::size_t>(i), J = static_cast<std::size_t>(j),
             K = static_cast<std::size_t>(k);
        LieQElem lhs = lie_sub(lie_bracket(x[I], lie_bracket(x[I], x[K])),
                               lie_bracket(x[J], lie_bracket(x[J], x[K])));
        if (!lie_sub(lhs, lie_scale(r_diff(curve, i, j), x[K])).is_zero()) plus_ok = 0;
        if (!lie_sub(lhs, lie_scale(r_diff(curve, j, i), x[K])).is_zero()) minus_ok = 0;
    }
    if (plus_ok) {
        rep.sl2_orientation = +1;
        rep.sl2_second.ok = true;
    } else if (minus_ok) {
        rep.sl2_orientation = -1;
        rep.sl2_second.ok = true;
    } else {
        rep.sl2_second.witness = "second family fails for both orientations";
    }

    // --- so(3,1) side: Q_i
    std::array<QMat4, 4> q = {QMat4(curve), q_so31_generator(curve, 1),
                              q_so31_generator(curve, 2), q_so31_generator(curve, 3)};
    for (const auto& t : cyc) {
        auto I = static_cast<std::size_t>(t[0]), J = static_cast<std::size_t>(t[1]),
             K = static_cast<std::size_t>(t[2]);
        if (!qmat_bracket(q[I], qmat_bracket(q[J], q[K])).is_zero()) {
            rep.so31_serre.ok = false;
            rep.so31_serre.witness = "[Q" + std::to_string(t[0]) + ",[Q" + std::to_string(t[1]) +
                                     ",Q" + std::to_string(t[2]) + "]] != 0";
        }
    }
    plus_ok = 1;
    minus_ok = 1;
    for (const auto& t : cyc) {
        int i = t[0], j = t[1], k = t[2];
        auto I = static_cast<std::size_t>(i), J = static_cast<std::size_t>(j),
             K = static_cast<std::size_t>(k);
        QMat4 lhs = qmat_sub(qmat_bracket(q[I], qmat_bracket(q[I], q[K])),
                             qmat_bracket(q[J], qmat_bracket(q[J], q[K])));
        if (!qmat_sub(lhs, qmat_scale(r_diff(curve, i, j), q[K])).is_zero()) plus_ok = 0;
        if (!qmat_sub(lhs, qmat_scale(r_diff(curve, j, i), q[K])).is_zero()) minus_ok = 0;
    }
    if (plus_ok) {
        rep.so31_orientation = +1;
        rep.so31_second.ok = true;
    } else if (minus_ok) {
        rep.so31_orientation = -1;
        rep.so31_second.ok = true;
    } else {
        rep.so31_second.witness = "second family fails for both orientations";
    }

    rep.qi_invariance.ok = true;
    for (int i = 1; i <= 3; ++i)
        for (GroupElem g : GroupElem::all_d2())
            if (!qmat_sub(qmat_d2_act(g, q[static_cast<std::size_t>(i)]),
                          q[static_cast<std::size_t>(i)])
                     .is_zero()) {
                rep.qi_invariance.ok = false;
                rep.qi_invariance.witness =
                    "Q" + std::to_string(i) + " not fixed by " + g.to_string();
            }
    return rep;
}

namespace {

struct LieLaurent {
    std::array<Laurent, 3> coord;

    explicit LieLaurent(const QCurve& c)
        : coord{Laurent(QElem(c), 0), Laurent(QElem(c), 0), Laurent(QElem(c), 0)} {}
    bool is_zero() const {
        return coord[0].is_zero() && coord[1].is_zero() && coord[2].is_zero();
    }
};

LieLaurent ll_bracket(const LieLaurent& a, const LieLaurent& b, const QCurve& curve) {
    LieLaurent out(curve);
    constexpr int cyc[3][3] = {{2, 3, 1}, {3, 1, 2}, {1, 2, 3}};
    for (const auto& t : cyc) {
        auto i = static_cast<std::size_t>(t[0] - 1), j = static_cast<std::size_t>(t[1] - 1),
             k = static_cast<std::size_t>(t[2] - 1);
        out.coord[k] = a.coord[i] * b.coord[j] - a.coord[j] * b.coord[i];
    }
    return out;
}

LieLaurent ll_sub(const LieLaurent& a, const LieLaurent& b, const QCurve& curve) {
    LieLaurent out(curve);
    for (int n = 0; n < 3; ++n)
        out.coord[static_cast<std::size_t>(n)] =
            a.coord[static_cast<std::size_t>(n)] - b.coord[static_cast<std::size_t>(n)];
    return out;
}

LieLaurent ll_scale(const Laurent& s, const LieLaurent& a, const QCurve& curve) {
    LieLaurent out(curve);
    for (int n = 0; n < 3; ++n)
        out.coord[static_cast<std::size_t>(n)] = s * a.coord[static_cast<std::size_t>(n)];
    return out;
}

// lambda^p as a Laurent scalar
Laurent lam_pow(const QCurve& curve, int p) {
    if (p >= 0) {
        PolyX lam = curve.holod_lambda();
        PolyX m(RatC(1));
        for (int k = 0; k < p; ++k) m = m * lam;
        return Laurent(scalar_mul(m, QElem::one(curve)), 0);
    }
    return Laurent(QElem::one(curve), -p);
}

// odd: X_i^{2m+1} = lambda^m l_i v_i; even: X_i^{2m} = lambda^{m-1} l_j l_k v_i
LieLaurent holod_elem(const QCurve& curve, int i, int m, bool odd) {
    LieLaurent out(curve);
    int j = i % 3 + 1, k = j % 3 + 1;
    QElem mono = odd ? QElem::lambda(curve, i)
                     : q_mul(QElem::lambda(curve, j), QElem::lambda(curve, k));
    out.coord[static_cast<std::size_t>(i - 1)] =
        lam_pow(curve, odd ? m : m - 1) * Laurent(mono, 0);
    return out;
}

Laurent offset_scalar(const QCurve& curve, int i) {
    RatC mean = (curve.r[0] + curve.r[1] + curve.r[2]) * RatC(Rational(1, 3));
    return Laurent(QElem::constant(curve, curve.r[static_cast<std::size_t>(i - 1)] - mean), 0);
}

}  // namespace

HolodExactReport holod_brackets_exact(const QCurve& curve, int range) {
    HolodExactReport rep;
    rep.odd_odd.ok = rep.odd_even.ok = rep.even_even.ok = true;
    constexpr int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};

    for (const auto& t : cyc) {
        int i = t[0], j = t[1], k = t[2];
        for (int l = -range; l <= range; ++l) {
            for (int s = -range; s <= range; ++s) {
                // [X_i^{2l+1}, X_j^{2s+1}] = X_k^{2(l+s)+2}
                {
                    LieLaurent lhs = ll_bracket(holod_elem(curve, i, l, true),
                                                holod_elem(curve, j, s, true), curve);
                    LieLaurent rhs = holod_elem(curve, k, l + s + 1, false);
                    if (!ll_sub(lhs, rhs, curve).is_zero()) {
                        rep.odd_odd.ok = false;
                        rep.odd_odd.witness = "[X" + std::to_string(i) + "^{2*" +
                                              std::to_string(l) + "+1}, X" + std::to_string(j) +
                                              "^{2*" + std::to_string(s) + "+1}]";
                    }
                }
                // [X_i^{2l+1}, X_j^{2s}] = X_k^{2(l+s)+1} - A_i X_k^{2(l+s)-1}
                {
                    LieLaurent lhs = ll_bracket(holod_elem(curve, i, l, true),
                                                holod_elem(curve, j, s, false), curve);
                    LieLaurent rhs =
                        ll_sub(holod_elem(curve, k, l + s, true),
                               ll_scale(offset_scalar(curve, i),
                                        holod_elem(curve, k, l + s - 1, true), curve),
                               curve);
                    if (!ll_sub(lhs, rhs, curve).is_zero()) {
                        rep.odd_even.ok = false;
                        rep.odd_even.witness = "[X" + std::to_string(i) + "^{2*" +
                                               std::to_string(l) + "+1}, X" + std::to_string(j) +
                                               "^{2*" + std::to_string(s) + "}]";
                    }
                }
                // [X_i^{2l}, X_j^{2s}] = X_k^{2(l+s)} - A_k X_k^{2(l+s)-2}
                {
                    LieLaurent lhs = ll_bracket(holod_elem(curve, i, l, false),
                                                holod_elem(curve, j, s, false), curve);
                    LieLaurent rhs =
                        ll_sub(holod_elem(curve, k, l + s, false),
                               ll_scale(offset_scalar(curve, k),
                                        holod_elem(curve, k, l + s - 1, false), curve),
                               curve);
                    if (!ll_sub(lhs, rhs, curve).is_zero()) {
                        rep.even_even.ok = false;
                        rep.even_even.witness = "[X" + std::to_string(i) + "^{2*" +
                                                std::to_string(l) + "}, X" + std::to_string(j) +
                                                "^{2*" + std::to_string(s) + "}]";
                    }
                }
            }
        }
    }
    return rep;
}

}  // namespace qring
}  // namespace alia
