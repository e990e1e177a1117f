#include "alia/theta.hpp"

#include <algorithm>
#include <cmath>

namespace alia {

namespace {

constexpr int kMaxTerms = 64;          // hard cap each direction
constexpr double kRelTail = 1e-18;     // stop once terms fall below this of the sum
constexpr double kMaxExponent = 700.0; // exp() overflow guard on the real part

const cplx kI{0.0, 1.0};

// One theta term exp{iπτ(k+a)² + 2πi(k+a)(z+b)}, optionally with the
// (2πi(k+a))^order prefactor of the term-wise derivative.
cplx term(double ka, cplx z, double b, cplx tau, int order) {
    cplx expo = kI * pi * tau * ka * ka + 2.0 * pi * kI * ka * (z + b);
    if (expo.real() > kMaxExponent)
        throw std::overflow_error("theta series term exceeds representable range");
    cplx t = std::exp(expo);
    for (int d = 0; d < order; ++d) t *= 2.0 * pi * kI * ka;
    return t;
}

cplx theta_series(double a, double b, cplx z, cplx tau, int order) {
    // Dominant index of |exp{...}|: (k+a) ≈ −Im z / Im τ.
    double center = -a - z.imag() / tau.imag();
    long k0 = std::lround(center);

    cplx sum = term(static_cast<double>(k0) + a, z, b, tau, order);
    for (int j = 1; j <= kMaxTerms; ++j) {
        cplx up = term(static_cast<double>(k0 + j) + a, z, b, tau, order);
        cplx dn = term(static_cast<double>(k0 - j) + a, z, b, tau, order);
        sum += up + dn;
        double mag = std::max(std::abs(up), std::abs(dn));
        if (mag < kRelTail * std::abs(sum) && j >= 2) break;
    }
    return sum;
}

struct JacobiChar {
    double a, b, sign;
};

JacobiChar jacobi_char(int j) {
    switch (j) {
        case 1: return {0.5, 0.5, -1.0};
        case 2: return {0.5, 0.0, 1.0};
        case 3: return {0.0, 0.0, 1.0};
        case 4: return {0.0, 0.5, 1.0};
        default: throw std::invalid_argument("theta index must be 1..4");
    }
}

}  // namespace

ModularParam::ModularParam(cplx tau) : tau_(tau) {
    if (!(tau.imag() >= min_im_tau))
        throw std::domain_error("Im(tau) must be >= " + std::to_string(min_im_tau));
    q_ = std::exp(kI * pi * tau);
    nulls_[0] = 0.0;
    nulls_[1] = 0.0;  // θ₁ is odd
    for (int j = 2; j <= 4; ++j) {
        JacobiChar c = jacobi_char(j);
        nulls_[static_cast<std::size_t>(j)] = c.sign * theta_series(c.a, c.b, 0.0, tau, 0);
    }
    th1p0_ = -theta_series(0.5, 0.5, 0.0, tau, 1);
}

cplx theta_general(double a, double b, cplx z, const ModularParam& tau) {
    return theta_series(a, b, z, tau.tau(), 0);
}

cplx theta_jacobi(int j, cplx z, const ModularParam& tau) {
    JacobiChar c = jacobi_char(j);
    return c.sign * theta_series(c.a, c.b, z, tau.tau(), 0);
}

cplx theta_null(int j, const ModularParam& tau) {
    jacobi_char(j);  // validates j
    return tau.null_value(j);
}

cplx theta_deriv(int j, cplx z, const ModularParam& tau, int order) {
    if (order < 0 || order > 4)
        throw std::invalid_argument("theta_deriv supports orders 0..4");
    JacobiChar c = jacobi_char(j);
    return c.sign * theta_series(c.a, c.b, z, tau.tau(), order);
}

double IdentityReport::worst() const {
    double w = 0.0;
    for (const auto& c : cases) w = std::max(w, c.max_abs_residual);
    return w;
}

std::string QuarticOrientation::label() const {
    if (standard_holds && !paper_holds) return "standard";
    if (paper_holds && !standard_holds) return "paper";
    if (standard_holds && paper_holds) return "both";
    return "neither";
}

QuarticOrientation theta_null_quartic(const ModularParam& tau, double tol) {
    cplx t2 = tau.null_value(2), t3 = tau.null_value(3), t4 = tau.null_value(4);
    auto p4 = [](cplx x) { return x * x * x * x; };
    QuarticOrientation out;
    out.residual_standard = std::abs(p4(t2) + p4(t4) - p4(t3));
    out.residual_paper = std::abs(p4(t2) + p4(t3) - p4(t4));
    out.standard_holds = out.residual_standard < tol;
    out.paper_holds = out.residual_paper < tol;
    return out;
}

namespace {

using CaseFn = cplx (*)(cplx, const ModularParam&);

cplx th(int j, cplx z, const ModularParam& t) { return theta_jacobi(j, z, t); }
cplx tn(int j, const ModularParam& t) { return t.null_value(j); }
cplx sq(cplx x) { return x * x; }

std::vector<std::pair<std::string, CaseFn>> suite_cases(const std::string& suite) {
    std::vector<std::pair<std::string, CaseFn>> cases;
    auto add = [&](const char* name, CaseFn fn) { cases.emplace_back(name, fn); };
    bool all = suite == "all";

    if (all || suite == "shifts") {
        add("theta1(z+1)+theta1(z)", [](cplx z, const ModularParam& t) {
            return th(1, z + 1.0, t) + th(1, z, t);
        });
        add("theta2(z+1)+theta2(z)", [](cplx z, const ModularParam& t) {
            return th(2, z + 1.0, t) + th(2, z, t);
        });
        add("theta3(z+1)-theta3(z)", [](cplx z, const ModularParam& t) {
            return th(3, z + 1.0, t) - th(3, z, t);
        });
        add("theta4(z+1)-theta4(z)", [](cplx z, const ModularParam& t) {
            return th(4, z + 1.0, t) - th(4, z, t);
        });
        add("theta1(z+tau/2)-i*e*theta4(z)", [](cplx z, const ModularParam& t) {
            cplx e = std::exp(-pi * kI * (z + t.tau() / 4.0));
            return th(1, z + t.tau() / 2.0, t) - kI * e * th(4, z, t);
        });
        add("theta2(z+tau/2)-e*theta3(z)", [](cplx z, const ModularParam& t) {
            cplx e = std::exp(-pi * kI * (z + t.tau() / 4.0));
            return th(2, z + t.tau() / 2.0, t) - e * th(3, z, t);
        });
        add("theta3(z+tau/2)-e*theta2(z)", [](cplx z, const ModularParam& t) {
            cplx e = std::exp(-pi * kI * (z + t.tau() / 4.0));
            return th(3, z + t.tau() / 2.0, t) - e * th(2, z, t);
        });
        add("theta4(z+tau/2)-i*e*theta1(z)", [](cplx z, const ModularParam& t) {
            cplx e = std::exp(-pi * kI * (z + t.tau() / 4.0));
            return th(4, z + t.tau() / 2.0, t) - kI * e * th(1, z, t);
        });
    }
    if (all || suite == "quadratic") {
        add("quad1: t3*t4^2*theta3(2z)-t4*t3^2*theta4(2z)+2theta1^2theta2^2",
            [](cplx z, const ModularParam& t) {
                return tn(3, t) * sq(tn(4, t)) * th(3, 2.0 * z, t) -
                       tn(4, t) * sq(tn(3, t)) * th(4, 2.0 * z, t) +
                       2.0 * sq(th(1, z, t)) * sq(th(2, z, t));
            });
        add("quad2: t3*t4^2*theta3(2z)+t4*t3^2*theta4(2z)-2theta3^2theta4^2",
            [](cplx z, const ModularParam& t) {
                return tn(3, t) * sq(tn(4, t)) * th(3, 2.0 * z, t) +
                       tn(4, t) * sq(tn(3, t)) * th(4, 2.0 * z, t) -
                       2.0 * sq(th(3, z, t)) * sq(th(4, z, t));
            });
        add("quad3: t3^2t4^4*theta3^2(2z)-t4^2t3^4*theta4^2(2z)+4(theta1theta2theta3theta4)^2",
            [](cplx z, const ModularParam& t) {
                return sq(tn(3, t)) * sq(sq(tn(4, t))) * sq(th(3, 2.0 * z, t)) -
                       sq(tn(4, t)) * sq(sq(tn(3, t))) * sq(th(4, 2.0 * z, t)) +
                       4.0 * sq(th(1, z, t) * th(2, z, t) * th(3, z, t) * th(4, z, t));
            });
        add("quad4: t4^2theta3^2(2z)-t3^2theta4^2(2z)+t2^2theta1^2(2z)",
            [](cplx z, const ModularParam& t) {
                return sq(tn(4, t)) * sq(th(3, 2.0 * z, t)) -
                       sq(tn(3, t)) * sq(th(4, 2.0 * z, t)) +
                       sq(tn(2, t)) * sq(th(1, 2.0 * z, t));
            });
    }
    if (all || suite == "duplication") {
        add("dup: t2t3t4*theta1(2z)-2theta1theta2theta3theta4",
            [](cplx z, const ModularParam& t) {
                return tn(2, t) * tn(3, t) * tn(4, t) * th(1, 2.0 * z, t) -
                       2.0 * th(1, z, t) * th(2, z, t) * th(3, z, t) * th(4, z, t);
            });
    }
    if (all || suite == "half-tau") {
        add("halftau1: 2theta2^2(z|2tau)-[theta3(z)t3-theta4(z)t4]",
            [](cplx z, const ModularParam& t) {
                ModularParam t2(2.0 * t.tau());
                return 2.0 * sq(th(2, z, t2)) - (th(3, z, t) * tn(3, t) - th(4, z, t) * tn(4, t));
            });
        add("halftau2: 2theta3^2(z|2tau)-[theta3(z)t3+theta4(z)t4]",
            [](cplx z, const ModularParam& t) {
                ModularParam t2(2.0 * t.tau());
                return 2.0 * sq(th(3, z, t2)) - (th(3, z, t) * tn(3, t) + th(4, z, t) * tn(4, t));
            });
        add("halftau3: 2theta2(z|2tau)theta3(z|2tau)-theta2(z)t2",
            [](cplx z, const ModularParam& t) {
                ModularParam t2(2.0 * t.tau());
                return 2.0 * th(2, z, t2) * th(3, z, t2) - th(2, z, t) * tn(2, t);
            });
        add("halftau4: 2theta1(z|2tau)theta4(z|2tau)-theta1(z)t2",
            [](cplx z, const ModularParam& t) {
                ModularParam t2(2.0 * t.tau());
                return 2.0 * th(1, z, t2) * th(4, z, t2) - th(1, z, t) * tn(2, t);
            });
    }
    if (cases.empty()) throw std::invalid_argument("unknown identity suite '" + suite + "'");
    return cases;
}

}  // namespace

IdentityReport identity_residuals(const std::string& suite, const ModularParam& tau,
                                  int samples, std::uint64_t seed) {
    auto cases = suite_cases(suite);
    IdentityReport report;
    report.cases.reserve(cases.size());
    for (const auto& [name, fn] : cases) {
        Rng rng(seed);
        double worst = 0.0;
        for (int s = 0; s < samples; ++s) {
            cplx z = rng.real01() + rng.real01() * tau.tau();
            worst = std::max(worst, std::abs(fn(z, tau)));
        }
        report.cases.push_back({name, worst});
    }
    return report;
}

}  // namespace alia
