#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "alia/types.hpp"

namespace alia {

struct CaseResult {
    std::string name;
    double max_abs_residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    int samples = 0;
    std::uint64_t seed = 0;
};

/// One verification run: suite id, the environment it ran in, and its cases.
/// A report passes iff every case passes.
struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> env;  // ordered key/value
    std::vector<CaseResult> cases;

    bool all_pass() const;
    void add_env(const std::string& key, const std::string& value);

    /// Canonical JSON (stable key order, shortest round-trip decimals).
    std::string to_json() const;
    static VerificationReport from_json(const std::string& text);
};

/// CSV table row stream: header z_re,z_im,value_re,value_im.
std::string csv_header();
std::string csv_row(cplx z, cplx value);

}  // namespace alia
