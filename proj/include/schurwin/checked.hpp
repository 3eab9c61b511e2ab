#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace schurwin {

/// Raised when an input violates a shape or range precondition.
class shape_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an exact integer result does not fit in 64 bits.
class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
    Int out;
    if (__builtin_add_overflow(a, b, &out)) throw overflow_error("integer overflow in addition");
    return out;
}

inline Int sub(Int a, Int b) {
    Int out;
    if (__builtin_sub_overflow(a, b, &out)) throw overflow_error("integer overflow in subtraction");
    return out;
}

inline Int mul(Int a, Int b) {
    Int out;
    if (__builtin_mul_overflow(a, b, &out)) throw overflow_error("integer overflow in multiplication");
    return out;
}

inline Int neg(Int a) { return sub(0, a); }

}  // namespace checked

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline Int binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (Int i = 1; i <= k; ++i) {
        // result * (n - k + i) is divisible by i at every step
        result = checked::mul(result, n - k + i) / i;
    }
    return result;
}

}  // namespace schurwin
