#include "hyperpack/arith.hpp"

#include <algorithm>

namespace hyperpack {

Count binomial(std::int64_t n, std::int64_t r)
{
    if (n < 0 || r < 0)
        throw std::invalid_argument("binomial: negative argument");
    if (r > n)
        return 0;
    r = std::min(r, n - r);
    Count result = 1;
    // result * (n - r + i) is always divisible by i at step i
    for (std::int64_t i = 1; i <= r; ++i)
        result = checked_mul(result, n - r + i) / i;
    return result;
}

Count isqrt(Count x)
{
    if (x < 0)
        throw std::invalid_argument("isqrt: negative argument");
    if (x < 2)
        return x;
    Count lo = 1, hi = x;
    // start from a power of two above the root so the range halves quickly
    int bits = 0;
    for (Count t = x; t > 0; t >>= 1)
        ++bits;
    hi = Count{1} << ((bits + 1) / 2);
    while (lo < hi) {
        Count mid = lo + (hi - lo + 1) / 2;
        if (mid <= x / mid)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

Count ipow(Count base, std::int64_t exp)
{
    if (exp < 0)
        throw std::invalid_argument("ipow: negative exponent");
    Count r = 1;
    for (std::int64_t i = 0; i < exp; ++i)
        r = checked_mul(r, base);
    return r;
}

Count floor_rational_power(std::int64_t n, std::int64_t num, std::int64_t den)
{
    if (n < 0 || num < 0 || den <= 0)
        throw std::invalid_argument("floor_rational_power: bad arguments");
    const Count target = ipow(n, num);
    auto le = [&](Count t) {
        try {
            return ipow(t, den) <= target;
        }
        catch (const OverflowError&) {
            return false;
        }
    };
    Count lo = 0, hi = 1;
    while (le(hi))
        hi *= 2;
    while (hi - lo > 1) {
        Count mid = lo + (hi - lo) / 2;
        (le(mid) ? lo : hi) = mid;
    }
    return lo;
}

std::string to_string(Count v)
{
    if (v == 0)
        return "0";
    bool neg = v < 0;
    std::string s;
    // negate digit-by-digit so INT128_MIN does not overflow
    while (v != 0) {
        int d = static_cast<int>(v % 10);
        s.push_back(static_cast<char>('0' + (neg ? -d : d)));
        v /= 10;
    }
    if (neg)
        s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

} // namespace hyperpack
