#pragma once

// Per-prime context for p = 4n - 1 and the radical-floor tables
// floor(Q_m), floor(R_m) that index every sum in the identity catalog.
// All floors are obtained by integer bracketing (isqrt + boundary check),
// never by rounding a float.

#include <vector>

#include "qrlab/int_math.hpp"

namespace qrlab {

struct PrimeContext {
    i64 n  = 0;   // p = 4n - 1
    i64 p  = 0;
    i64 M  = 0;   // floor(n^2 / p)
    i64 M0 = 0;   // floor((n^2 - 4n + 5) / p)
};

// Largest n accepted by make_context; keeps every 128-bit intermediate
// (worst case ~p^3) far below overflow.
inline constexpr i64 kMaxContextN = i64{1} << 30;

// Throws std::invalid_argument when 4n - 1 is composite (names the value)
// or n is out of range.
PrimeContext make_context(i64 n);

struct RadicalFloors {
    std::vector<i64> floor_q;  // floor(Q_m), m = 0..M-1
    std::vector<i64> floor_r;  // floor(R_m), m = 1..M  (floor_r[i] is m = i+1)
    std::vector<i64> k_jump;   // k_m = 1 + floor(Q_m), m = 0..M0
    std::vector<i64> ell;      // ell_m = 1 + isqrt(mp + p - 1), m = 0..M0
};

// floor(Q_m) where Q_m is the positive root of x^2 - x + 2 - 3n = mp,
// i.e. the largest integer t >= 1 with t^2 - t + 2 - 3n <= mp.
i64 floor_q_at(const PrimeContext& ctx, i64 m);

RadicalFloors radical_floors(const PrimeContext& ctx);

struct RadicalFloorSums {
    i128 sum_r = 0;  // sum of floor(R_m), m = 1..M
    i128 sum_q = 0;  // sum of floor(Q_m), m = 0..M-1
};

// Streaming form (no tables); what the conjecture scan uses at large n.
RadicalFloorSums radical_floor_sums(const PrimeContext& ctx);

} // namespace qrlab
