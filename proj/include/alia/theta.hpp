#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "alia/types.hpp"

namespace alia {

/// A modular parameter τ in the upper half-plane with its nome q = exp(iπτ)
/// and the four theta-null values cached. Immutable after construction.
class ModularParam {
  public:
    static constexpr double min_im_tau = 0.05;

    explicit ModularParam(cplx tau);

    cplx tau() const { return tau_; }
    cplx nome() const { return q_; }
    /// θ_j(0|τ). null_value(1) is exactly 0.
    cplx null_value(int j) const { return nulls_[static_cast<std::size_t>(j)]; }
    /// θ₁′(0|τ) = πθ₂θ₃θ₄.
    cplx theta1_prime0() const { return th1p0_; }

  private:
    cplx tau_;
    cplx q_;
    std::array<cplx, 5> nulls_{};
    cplx th1p0_;
};

/// Theta function with characteristics,
///   θ_{a,b}(z|τ) = Σ_k exp{ iπτ(k+a)² + 2πi(k+a)(z+b) },
/// summed from the dominant index outward until the next term falls below
/// 1e-18 of the partial sum, capped at 64 terms each direction.
cplx theta_general(double a, double b, cplx z, const ModularParam& tau);

/// Jacobi theta θ_j, j = 1..4:
///   θ₁ = −θ_{1/2,1/2}, θ₂ = θ_{1/2,0}, θ₃ = θ_{0,0}, θ₄ = θ_{0,1/2}.
cplx theta_jacobi(int j, cplx z, const ModularParam& tau);

/// Cached theta-null θ_j(0|τ).
cplx theta_null(int j, const ModularParam& tau);

/// Term-wise derivative d^order/dz^order θ_j(z|τ), order ≤ 4 (order 0 = value).
cplx theta_deriv(int j, cplx z, const ModularParam& tau, int order);

struct ResidualCase {
    std::string name;
    double max_abs_residual = 0.0;
};

struct IdentityReport {
    std::vector<ResidualCase> cases;
    double worst() const;
};

/// Which side of the theta-null quartic identity holds numerically.
struct QuarticOrientation {
    bool standard_holds = false;  // θ₂⁴ + θ₄⁴ = θ₃⁴
    bool paper_holds = false;     // θ₂⁴ + θ₃⁴ = θ₄⁴ (as printed)
    double residual_standard = 0.0;
    double residual_paper = 0.0;
    std::string label() const;
};

QuarticOrientation theta_null_quartic(const ModularParam& tau, double tol = 1e-10);

/// Identity suites over random z in the fundamental parallelogram:
///   shifts      the eight translation laws (z+1 and z+τ/2 for θ₁..θ₄)
///   quadratic   the four quadratic identities linking θ(2z) and θ(z)² products
///   duplication the θ₁(2z) product identity
///   half-tau    the four identities linking modulus τ and 2τ
///   all         union of the above
IdentityReport identity_residuals(const std::string& suite, const ModularParam& tau,
                                  int samples, std::uint64_t seed);

}  // namespace alia
