#pragma once

// The four sum families over k: r(k^2), r(k^2-k+2-3n), floor((k^2-k+2-3n)/p)
// and floor(k^2/p). Accumulation is 128-bit throughout; nothing is ever
// reduced mod p on the way.

#include <optional>

#include "qrlab/prime_context.hpp"

namespace qrlab {

// sum_{k=1}^{K} r(k^2, p); requires 1 <= K <= p-1
i128 sum_qr(const PrimeContext& ctx, i64 K);

// sum_{k=1}^{K} r(k^2 - k + 2 - 3n, p); requires 1 <= K <= p.
// include_zero adds the k = 0 term r(2 - 3n) = 2 - 3n + p (the
// endpoint-inclusive form used in the small-n tables).
i128 sum_shifted(const PrimeContext& ctx, i64 K, bool include_zero = false);

// sum_{k=1}^{K} floor((k^2 - k + 2 - 3n) / p); requires 1 <= K <= p-1.
// Negative for small K (the numerator starts negative).
i128 sum_floor_shifted(const PrimeContext& ctx, i64 K);

// sum_{k=0}^{K} floor(k^2 / p); requires 0 <= K <= p-1
i128 sum_floor_squares(const PrimeContext& ctx, i64 K);

struct SumReport {
    PrimeContext ctx;
    i64 range_end = 0;                       // one of p-1, 2n, n
    i128 qr_sum = 0;
    i128 shifted_sum = 0;
    i128 floor_shifted_sum = 0;
    std::optional<i128> floor_square_sum;    // sum_{k=0}^{n}, when range_end == n
};

SumReport make_sum_report(const PrimeContext& ctx, i64 range_end);

} // namespace qrlab
