#pragma once

// Reference tables for the regression check, in the layout produced by format.hpp.
// The r = 1 families are generated from their closed form for each d; d = 4 of
// that family is also kept verbatim so the closed form is itself checked.

#include <string>
#include <vector>

#include "checked.hpp"

namespace schurwin::golden {

struct Entry {
    std::string name;
    std::string text;
};

/// omega_{0,+1} on the six W_{+1} generators for d = 4, r = 2, in window order.
inline const char* const kShiftD4R2 =
    "ω_{0,+1}(S^∨(1,1)) = S^∨(1,1)  [deg 0..0]\n"
    "ω_{0,+1}(S^∨(2,1)) = S^∨(2,1)  [deg 0..0]\n"
    "ω_{0,+1}(S^∨(2,2)) = S^∨(2,2)  [deg 0..0]\n"
    "ω_{0,+1}(S^∨(3,1)) = { S^∨(2,1) ⊗ ∧^3 V → S^∨(1,1) ⊗ ∧^2 V → S^∨(0,0) }  [deg 0..2]\n"
    "ω_{0,+1}(S^∨(3,2)) = { S^∨(2,2) ⊗ ∧^3 V → S^∨(1,1) ⊗ V → S^∨(1,0) }  [deg 0..2]\n"
    "ω_{0,+1}(S^∨(3,3)) = { S^∨(2,2) ⊗ ∧^2 V → S^∨(2,1) ⊗ V → S^∨(2,0) }  [deg 0..2]\n";

/// The three exact sequences for d = 4, r = 2 with bases (0,0), (1,0), (2,0).
inline const char* const kSequencesD4R2 =
    "0 → S^∨(3,1) ⊗ ∧^4 V → S^∨(2,1) ⊗ ∧^3 V → S^∨(1,1) ⊗ ∧^2 V → S^∨(0,0) → 0\n"
    "0 → S^∨(3,2) ⊗ ∧^4 V → S^∨(2,2) ⊗ ∧^3 V → S^∨(1,1) ⊗ V → S^∨(1,0) → 0\n"
    "0 → S^∨(3,3) ⊗ ∧^4 V → S^∨(2,2) ⊗ ∧^2 V → S^∨(2,1) ⊗ V → S^∨(2,0) → 0\n";

inline const char* const kWindow0D4R2 = "(0,0)\n(1,0)\n(1,1)\n(2,0)\n(2,1)\n(2,2)\n";
inline const char* const kWindow1D4R2 = "(1,1)\n(2,1)\n(2,2)\n(3,1)\n(3,2)\n(3,3)\n";

inline const char* const kStaircaseD7R3 =
    "staircase d=7 r=3 delta=(3,1) K=5\n"
    "delta_1=(3,1,1) s_1=1\n"
    "delta_2=(3,2,2) s_2=3\n"
    "delta_3=(3,3,2) s_3=4\n"
    "delta_4=(4,4,2) s_4=6\n"
    "delta_5=(5,4,2) s_5=7\n";

inline const char* const kShiftR1D4 =
    "ω_{0,+1}(S^∨(1)) = S^∨(1)  [deg 0..0]\n"
    "ω_{0,+1}(S^∨(2)) = S^∨(2)  [deg 0..0]\n"
    "ω_{0,+1}(S^∨(3)) = S^∨(3)  [deg 0..0]\n"
    "ω_{0,+1}(S^∨(4)) = { S^∨(3) ⊗ ∧^3 V → S^∨(2) ⊗ ∧^2 V → S^∨(1) ⊗ V → S^∨(0) }  [deg 0..3]\n";

inline std::string wedgeText(Int s) {
    if (s == 0) return "";
    if (s == 1) return " ⊗ V";
    return " ⊗ ∧^" + std::to_string(s) + " V";
}

/// omega_{0,+1}(l^vee k) = l^vee k for k < d, and for k = d the complex
/// { l^vee(d-1) (x) wedge^{d-1} V -> ... -> l^vee (x) V -> O } starting in degree 0.
inline std::string shiftR1(Int d) {
    std::string out;
    for (Int k = 1; k < d; ++k) {
        const std::string g = "S^∨(" + std::to_string(k) + ")";
        out += "ω_{0,+1}(" + g + ") = " + g + "  [deg 0..0]\n";
    }
    std::string body;
    for (Int j = d - 1; j >= 0; --j) {
        if (j != d - 1) body += " → ";
        body += "S^∨(" + std::to_string(j) + ")" + wedgeText(j);
    }
    const std::string braced = d > 1 ? "{ " + body + " }" : body;
    out += "ω_{0,+1}(S^∨(" + std::to_string(d) + ")) = " + braced + "  [deg 0.." + std::to_string(d - 1) + "]\n";
    return out;
}

/// 0 -> l^vee d (x) wedge^d V -> ... -> l^vee (x) V -> O -> 0.
inline std::string sequenceR1(Int d) {
    std::string out = "0";
    for (Int k = d; k >= 0; --k) out += " → S^∨(" + std::to_string(k) + ")" + wedgeText(k);
    return out + " → 0\n";
}

inline std::string windowR1(Int d, Int k) {
    std::string out;
    for (Int j = 0; j < d; ++j) out += "(" + std::to_string(j + k) + ")\n";
    return out;
}

}  // namespace schurwin::golden
