#include "alia/types.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace alia {

double Rng::gauss() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = real01();
    } while (u1 <= 0.0);
    double u2 = real01();
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * pi * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * pi * u2);
}

namespace {

// Parses one signed decimal number starting at pos; returns value and new pos.
// A bare sign followed by 'i' counts as ±1 (for "i", "-i", "+i").
bool parse_part(const std::string& s, std::size_t& pos, double& out, bool& unit_only) {
    unit_only = false;
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'I')) {
        out = (s[start] == '-') ? -1.0 : 1.0;
        unit_only = true;
        return true;
    }
    std::size_t digits = pos;
    while (digits < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[digits])) || s[digits] == '.' ||
            s[digits] == 'e' || s[digits] == 'E' ||
            ((s[digits] == '+' || s[digits] == '-') && digits > pos &&
             (s[digits - 1] == 'e' || s[digits - 1] == 'E'))))
        ++digits;
    if (digits == pos) return false;
    auto res = std::from_chars(s.data() + start, s.data() + digits, out);
    if (res.ec != std::errc{}) return false;
    pos = digits;
    return true;
}

}  // namespace

cplx parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    std::size_t pos = 0;
    double first = 0.0;
    bool unit = false;
    if (!parse_part(s, pos, first, unit))
        throw std::invalid_argument("bad complex literal: '" + text + "'");
    if (unit || (pos < s.size() && (s[pos] == 'i' || s[pos] == 'I'))) {
        if (!unit) ++pos;  // consumed trailing 'i' of a numeric imaginary part
        else ++pos;        // the 'i' itself
        if (pos == s.size()) return cplx(0.0, first);
        // form "bi+a" is not accepted; fall through to error
        throw std::invalid_argument("bad complex literal: '" + text + "'");
    }
    if (pos == s.size()) return cplx(first, 0.0);

    double second = 0.0;
    if (!parse_part(s, pos, second, unit))
        throw std::invalid_argument("bad complex literal: '" + text + "'");
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'I')) ++pos;
    else if (!unit)
        throw std::invalid_argument("bad complex literal (missing 'i'): '" + text + "'");
    if (pos != s.size()) throw std::invalid_argument("bad complex literal: '" + text + "'");
    return cplx(first, second);
}

std::string format_double(double value) {
    if (value == 0.0) value = 0.0;  // normalize -0
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string format_complex(cplx value) {
    if (value.imag() == 0.0) return format_double(value.real());
    std::string out = format_double(value.real());
    if (!(value.imag() < 0.0)) out += "+";
    out += format_double(value.imag());
    out += "i";
    return out;
}

}  // namespace alia
