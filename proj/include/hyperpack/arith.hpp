#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperpack {

/// Signed 128-bit count used for every condition lhs/rhs and size formula.
/// Binomials for n <= 64 and products of two of them fit comfortably.
using Count = __int128;

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

inline Count checked_add(Count a, Count b)
{
    Count r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline Count checked_sub(Count a, Count b)
{
    Count r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Count checked_mul(Count a, Count b)
{
    Count r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

/// Exact C(n, r); zero when r > n. Throws OverflowError instead of wrapping.
Count binomial(std::int64_t n, std::int64_t r);

/// floor(sqrt(x)) for x >= 0.
Count isqrt(Count x);

/// Largest t >= 0 with t^den <= n^num, i.e. floor(n^(num/den)), computed exactly.
Count floor_rational_power(std::int64_t n, std::int64_t num, std::int64_t den);

/// Checked integer power.
Count ipow(Count base, std::int64_t exp);

std::string to_string(Count v);

/// Whether v fits in an int64 (used by serializers).
inline bool fits_int64(Count v)
{
    return v >= INT64_MIN && v <= INT64_MAX;
}

} // namespace hyperpack
