#include "qrlab/residue_sums.hpp"

#include <string>

namespace qrlab {

namespace {

void check_range(i64 K, i64 lo, i64 hi, const char* what) {
    if (K < lo || K > hi)
        throw std::invalid_argument(std::string(what) + ": K = " + std::to_string(K) +
                                    " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

inline i128 shifted_value(i64 k, i64 n) { return i128(k) * k - k + 2 - 3 * n; }

} // namespace

i128 sum_qr(const PrimeContext& ctx, i64 K) {
    check_range(K, 1, ctx.p - 1, "sum_qr");
    i128 acc = 0;
    for (i64 k = 1; k <= K; ++k)
        acc = detail::add128(acc, remainder(i128(k) * k, ctx.p));
    return acc;
}

i128 sum_shifted(const PrimeContext& ctx, i64 K, bool include_zero) {
    check_range(K, 1, ctx.p, "sum_shifted");
    i128 acc = include_zero ? i128(remainder(2 - 3 * i128(ctx.n), ctx.p)) : 0;
    for (i64 k = 1; k <= K; ++k)
        acc = detail::add128(acc, remainder(shifted_value(k, ctx.n), ctx.p));
    return acc;
}

i128 sum_floor_shifted(const PrimeContext& ctx, i64 K) {
    check_range(K, 1, ctx.p - 1, "sum_floor_shifted");
    i128 acc = 0;
    for (i64 k = 1; k <= K; ++k)
        acc = detail::add128(acc, floor_div(shifted_value(k, ctx.n), ctx.p));
    return acc;
}

i128 sum_floor_squares(const PrimeContext& ctx, i64 K) {
    check_range(K, 0, ctx.p - 1, "sum_floor_squares");
    i128 acc = 0;
    for (i64 k = 0; k <= K; ++k)
        acc = detail::add128(acc, floor_div(i128(k) * k, ctx.p));
    return acc;
}

SumReport make_sum_report(const PrimeContext& ctx, i64 range_end) {
    if (range_end != ctx.p - 1 && range_end != 2 * ctx.n && range_end != ctx.n)
        throw std::invalid_argument("make_sum_report: range_end must be p-1, 2n or n");
    SumReport rep;
    rep.ctx = ctx;
    rep.range_end = range_end;
    rep.qr_sum = sum_qr(ctx, range_end);
    rep.shifted_sum = sum_shifted(ctx, range_end);
    rep.floor_shifted_sum = sum_floor_shifted(ctx, range_end);
    if (range_end == ctx.n) rep.floor_square_sum = sum_floor_squares(ctx, ctx.n);
    return rep;
}

} // namespace qrlab
