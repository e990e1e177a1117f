#pragma once

#include <array>

#include "alia/report.hpp"

namespace alia {

struct SuiteOptions {
    cplx tau{0.0, 1.0};
    std::array<cplx, 3> r{cplx(2.0), cplx(1.0), cplx(0.0)};
    int samples = 100;
    std::uint64_t seed = 7;
    double default_tol = 1e-9;
    cplx nu_plus{0.0, 0.0};
    cplx nu_minus{0.3, 0.2};
};

/// Suites: theta, elliptic, omega, generators, qring, zcr, holod, uglov, real, all.
/// Throws std::invalid_argument for unknown ids.
VerificationReport run_suite(const std::string& name, const SuiteOptions& opts);

bool is_known_suite(const std::string& name);

}  // namespace alia
