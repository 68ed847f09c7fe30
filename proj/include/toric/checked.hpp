#ifndef TORIC_CHECKED_HPP
#define TORIC_CHECKED_HPP

#include <cstdint>
#include <limits>
#include <string>

#include "toric/errors.hpp"

namespace toric {

using i64 = std::int64_t;

// Checked 64-bit arithmetic. All lattice algorithms route their arithmetic
// through these helpers so that overflow surfaces as OverflowError instead of
// silently corrupting a result.
namespace chk {

inline i64 add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("int64 overflow: " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline i64 sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("int64 overflow: " + std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline i64 mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("int64 overflow: " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

inline i64 neg(i64 a) {
    if (a == std::numeric_limits<i64>::min())
        throw OverflowError("int64 overflow: -INT64_MIN");
    return -a;
}

// a/b when b divides a exactly; anything else is a caller bug.
inline i64 exact_div(i64 a, i64 b, const char* what) {
    if (b == 0)
        throw NonIntegralError(std::string("exact division by zero in ") + what);
    if (a % b != 0)
        throw NonIntegralError(std::string("non-exact division in ") + what + ": " +
                               std::to_string(a) + " / " + std::to_string(b));
    return a / b;
}

// Floor division (quotient rounded towards minus infinity), used to reduce
// entries above Hermite pivots into [0, pivot).
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

// Accumulator for inner products whose intermediate sums can exceed the
// individual term bound. The final value must fit back into 64 bits.
class Wide {
public:
    void add_product(i64 a, i64 b) { acc_ += static_cast<__int128>(a) * b; }
    void add(i64 a) { acc_ += a; }

    i64 value(const char* what) const {
        if (acc_ > std::numeric_limits<i64>::max() || acc_ < std::numeric_limits<i64>::min())
            throw OverflowError(std::string("accumulated value exceeds 64 bits in ") + what);
        return static_cast<i64>(acc_);
    }

    // Exact division of the accumulated value; remainder means a caller bug.
    i64 exact_div(i64 d, const char* what) const {
        if (d == 0 || acc_ % d != 0)
            throw NonIntegralError(std::string("non-exact division in ") + what);
        __int128 q = acc_ / d;
        if (q > std::numeric_limits<i64>::max() || q < std::numeric_limits<i64>::min())
            throw OverflowError(std::string("quotient exceeds 64 bits in ") + what);
        return static_cast<i64>(q);
    }

private:
    __int128 acc_ = 0;
};

} // namespace chk

inline i64 gcd_nonneg(i64 a, i64 b) {
    if (a < 0) a = chk::neg(a);
    if (b < 0) b = chk::neg(b);
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace toric

#endif
