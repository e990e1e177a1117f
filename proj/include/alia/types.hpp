#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace alia {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// Thrown when an evaluation point hits (or underflows onto) a pole or puncture.
struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Thrown when an iteration (AGM, Newton search) fails to converge.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when curve/lattice parameters are degenerate for the requested operation.
struct degenerate_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Deterministic RNG. Doubles are produced from raw mt19937_64 output so that
/// streams are identical across standard library implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double real01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * real01(); }

    /// Standard normal via Box-Muller (deterministic, no distribution object).
    double gauss();

    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Parse "a+bi" style complex scalars; accepts shorthands "i", "2i", "-i",
/// "0.5+0.8i", "1.5", "-1.2-0.4i".
cplx parse_complex(const std::string& text);

/// Shortest round-trip decimal form, "a+bi" (pure-real prints just "a").
std::string format_complex(cplx value);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

}  // namespace alia
