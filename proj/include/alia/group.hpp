#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace alia {

/// Element of the order-8 Heisenberg group
///   He2 = < t1, t2, eps : t1^2 = t2^2 = eps^2 = 1, [t1,t2] = eps, eps central >
/// in the canonical form eps^c t1^a t2^b. Dropping eps projects onto D2.
struct GroupElem {
    bool c = false, a = false, b = false;

    static GroupElem identity() { return {}; }
    static GroupElem t1() { return {false, true, false}; }
    static GroupElem t2() { return {false, false, true}; }
    static GroupElem epsilon() { return {true, false, false}; }

    friend GroupElem operator*(GroupElem x, GroupElem y) {
        // moving t2^b past t1^{a'} contributes eps^{b a'}
        return {static_cast<bool>(x.c ^ y.c ^ (x.b && y.a)),
                static_cast<bool>(x.a ^ y.a), static_cast<bool>(x.b ^ y.b)};
    }
    GroupElem inverse() const {
        // (eps^c t1^a t2^b)^-1 = eps^{c + ab} t1^a t2^b
        return {static_cast<bool>(c ^ (a && b)), a, b};
    }
    bool operator==(const GroupElem&) const = default;

    std::string to_string() const {
        std::string s;
        if (c) s += "eps";
        if (a) s += (s.empty() ? "" : "*") + std::string("t1");
        if (b) s += (s.empty() ? "" : "*") + std::string("t2");
        return s.empty() ? "1" : s;
    }

    static std::array<GroupElem, 8> all_he2();
    /// Coset representatives of D2 = He2/<eps>.
    static std::array<GroupElem, 4> all_d2();
};

inline std::array<GroupElem, 8> GroupElem::all_he2() {
    std::array<GroupElem, 8> out;
    int n = 0;
    for (int c = 0; c < 2; ++c)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) out[n++] = {c != 0, a != 0, b != 0};
    return out;
}

inline std::array<GroupElem, 4> GroupElem::all_d2() {
    return {GroupElem{}, GroupElem::t1(), GroupElem::t2(), GroupElem::t1() * GroupElem::t2()};
}

/// Character alpha_{ij} of D2 = C2 x C2: alpha_{ij}(t1^a t2^b) = (-1)^{ia+jb}.
struct D2Character {
    int i = 0, j = 0;

    D2Character(int i_, int j_) : i(i_), j(j_) {
        if ((i | j) & ~1) throw std::invalid_argument("D2Character indices must be 0 or 1");
    }
    double value(GroupElem g) const {
        return ((i * (g.a ? 1 : 0) + j * (g.b ? 1 : 0)) % 2) ? -1.0 : 1.0;
    }
    static std::array<D2Character, 4> all() {
        return {D2Character{0, 0}, D2Character{0, 1}, D2Character{1, 0}, D2Character{1, 1}};
    }
};

}  // namespace alia
