#include "qrlab/prime_context.hpp"

#include <string>

namespace qrlab {

PrimeContext make_context(i64 n) {
    if (n < 1) throw std::invalid_argument("make_context: n must be >= 1");
    if (n > kMaxContextN)
        throw std::invalid_argument("make_context: n exceeds supported cap 2^30");
    const i64 p = 4 * n - 1;
    if (!is_prime(u64(p)))
        throw std::invalid_argument("make_context: 4n-1 = " + std::to_string(p) +
                                    " is composite (n = " + std::to_string(n) + ")");
    PrimeContext ctx;
    ctx.n = n;
    ctx.p = p;
    ctx.M = i64(floor_div(i128(n) * n, p));
    ctx.M0 = i64(floor_div(i128(n) * n - 4 * n + 5, p));
    return ctx;
}

namespace {

// value of the defining quadratic at t
inline i128 q_poly(i64 t, i64 n) { return i128(t) * t - t + 2 - 3 * n; }

} // namespace

i64 floor_q_at(const PrimeContext& ctx, i64 m) {
    const i128 mp = i128(m) * ctx.p;
    // Q_m = (1 + sqrt(4mp + 12n - 7)) / 2; seed from isqrt, then bracket.
    i64 t = (isqrt(4 * mp + 12 * ctx.n - 7) + 1) / 2;
    while (q_poly(t + 1, ctx.n) <= mp) ++t;
    while (t > 1 && q_poly(t, ctx.n) > mp) --t;
    return t;
}

RadicalFloors radical_floors(const PrimeContext& ctx) {
    RadicalFloors rf;
    rf.floor_q.reserve(size_t(ctx.M));
    rf.floor_r.reserve(size_t(ctx.M));
    for (i64 m = 0; m < ctx.M; ++m) rf.floor_q.push_back(floor_q_at(ctx, m));
    for (i64 m = 1; m <= ctx.M; ++m) rf.floor_r.push_back(isqrt(i128(m) * ctx.p));
    rf.k_jump.reserve(size_t(ctx.M0) + 1);
    rf.ell.reserve(size_t(ctx.M0) + 1);
    for (i64 m = 0; m <= ctx.M0; ++m) {
        rf.k_jump.push_back(1 + floor_q_at(ctx, m));
        rf.ell.push_back(1 + isqrt(i128(m) * ctx.p + ctx.p - 1));
    }
    return rf;
}

RadicalFloorSums radical_floor_sums(const PrimeContext& ctx) {
    RadicalFloorSums s;
    for (i64 m = 1; m <= ctx.M; ++m) s.sum_r = detail::add128(s.sum_r, isqrt(i128(m) * ctx.p));
    for (i64 m = 0; m < ctx.M; ++m) s.sum_q = detail::add128(s.sum_q, floor_q_at(ctx, m));
    return s;
}

} // namespace qrlab
