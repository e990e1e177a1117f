#include "alia/report.hpp"

#include <nlohmann/json.hpp>

namespace alia {

using ordered_json = nlohmann::ordered_json;

bool VerificationReport::all_pass() const {
    for (const auto& c : cases)
        if (!c.pass) return false;
    return !cases.empty();
}

void VerificationReport::add_env(const std::string& key, const std::string& value) {
    env.emplace_back(key, value);
}

std::string VerificationReport::to_json() const {
    ordered_json j;
    j["suite"] = suite;
    ordered_json e = ordered_json::object();
    for (const auto& [k, v] : env) e[k] = v;
    j["env"] = e;
    j["cases"] = ordered_json::array();
    for (const auto& c : cases) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["max_abs_residual"] = c.max_abs_residual;
        jc["tol"] = c.tol;
        jc["pass"] = c.pass;
        jc["samples"] = c.samples;
        jc["seed"] = c.seed;
        j["cases"].push_back(jc);
    }
    return j.dump(2) + "\n";
}

VerificationReport VerificationReport::from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    VerificationReport rep;
    rep.suite = j.at("suite").get<std::string>();
    for (const auto& [k, v] : j.at("env").items())
        rep.env.emplace_back(k, v.get<std::string>());
    for (const auto& jc : j.at("cases")) {
        CaseResult c;
        c.name = jc.at("name").get<std::string>();
        c.max_abs_residual = jc.at("max_abs_residual").get<double>();
        c.tol = jc.at("tol").get<double>();
        c.pass = jc.at("pass").get<bool>();
        c.samples = jc.at("samples").get<int>();
        c.seed = jc.at("seed").get<std::uint64_t>();
        rep.cases.push_back(c);
    }
    return rep;
}

std::string csv_header() { return "z_re,z_im,value_re,value_im"; }

std::string csv_row(cplx z, cplx value) {
    return format_double(z.real()) + "," + format_double(z.imag()) + "," +
           format_double(value.real()) + "," + format_double(value.imag());
}

}  // namespace alia
