#include "qrlab/int_math.hpp"

#include <cmath>

namespace qrlab {

std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 x = neg ? u128(0) - u128(v) : u128(v);
    char buf[48];
    int i = 48;
    while (x > 0) {
        buf[--i] = char('0' + int(x % 10));
        x /= 10;
    }
    std::string s(buf + i, buf + 48);
    return neg ? "-" + s : s;
}

i64 remainder(i128 x, i64 q) {
    if (q <= 0) throw std::invalid_argument("remainder: modulus must be positive");
    i128 r = x % q;     // truncated, sign follows x
    if (r < 0) r += q;
    return i64(r);
}

i128 floor_div(i128 x, i64 q) {
    if (q <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
    i128 t = x / q;
    if (x % q != 0 && x < 0) --t;
    return t;
}

i64 isqrt(i128 x) {
    if (x < 0) throw std::invalid_argument("isqrt: negative argument");
    if (x == 0) return 0;
    u128 v = u128(x);
    // long double seed (64-bit mantissa), then fix up exactly
    u128 s = u128(sqrtl((long double)v));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return i64(s);
}

namespace detail {

u64 mulmod(u64 a, u64 b, u64 m) {
    return u64(u128(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace detail

namespace {

bool mr_composite(u64 n, u64 a, u64 d, int s) {
    u64 x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = detail::mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

} // namespace

bool is_prime(u64 x) {
    if (x < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (x == p) return true;
        if (x % p == 0) return false;
    }
    u64 d = x - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // witness set proven complete for all x < 3.3e24 > 2^64
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (mr_composite(x, a, d, s)) return false;
    }
    return true;
}

int legendre(i128 a, i64 p) {
    if (p < 3 || p % 2 == 0 || !is_prime(u64(p)))
        throw std::invalid_argument("legendre: modulus must be an odd prime");
    u64 r = u64(remainder(a, p));
    if (r == 0) return 0;
    u64 e = detail::powmod(r, u64(p - 1) / 2, u64(p));  // Euler's criterion
    return e == 1 ? 1 : -1;
}

} // namespace qrlab
