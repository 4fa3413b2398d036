#pragma once

// Exact integer primitives. Everything here is branch-exact: no floating
// point ever decides a result (isqrt uses a float seed, then corrects).

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qrlab {

using i64  = std::int64_t;
using u64  = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

namespace detail {

// Overflow-checked 128-bit ops when built with QRLAB_CHECKED_ARITH.
// The supported input range (n <= 2^30) keeps every intermediate below
// 2^96, so the checked build is a tripwire, not a requirement.
#ifdef QRLAB_CHECKED_ARITH
inline i128 add128(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("i128 add overflow");
    return r;
}
inline i128 sub128(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("i128 sub overflow");
    return r;
}
inline i128 mul128(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("i128 mul overflow");
    return r;
}
#else
inline i128 add128(i128 a, i128 b) { return a + b; }
inline i128 sub128(i128 a, i128 b) { return a - b; }
inline i128 mul128(i128 a, i128 b) { return a * b; }
#endif

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

} // namespace detail

std::string to_string_i128(i128 v);

// Remainder of x upon division by q, always in [0, q). Correct for x < 0.
i64 remainder(i128 x, i64 q);

// Quotient floored toward -infinity, so x == q * floor_div(x, q) + remainder(x, q).
i128 floor_div(i128 x, i64 q);

// Exact floor of sqrt(x): result s with s^2 <= x < (s+1)^2.
i64 isqrt(i128 x);

// Deterministic Miller-Rabin; the fixed witness set is complete below 2^64.
bool is_prime(u64 x);

// Legendre symbol (a/p) in {-1, 0, 1}; p must be an odd prime.
int legendre(i128 a, i64 p);

} // namespace qrlab
