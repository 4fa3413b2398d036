#pragma once

// Exact class number h(-p) from the residue-sum formula, the half-sum
// cross-check, and a truncated Dirichlet-series estimate. The series is a
// soft cross-check only; the residue sum is the source of truth.

#include <optional>

#include "qrlab/prime_context.hpp"

namespace qrlab {

// Raised when an exact-divisibility guarantee fails (this fires for p = 3,
// where the w = 2 class-number formula does not apply).
class consistency_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DirichletEstimate {
    double value = 0.0;      // sqrt(p)/pi * averaged partial sums of chi(r)/r
    i64 nearest = 0;
    i64 terms = 0;           // truncation index actually used (whole periods)
    bool converged = false;  // |value - nearest| < 0.25
};

struct ClassNumberResult {
    PrimeContext ctx;
    i64 h = 0;          // (C(p,2) - sum r(k^2)) / p, exact
    i64 h_half = 0;     // (p-1)/2 - (1/p) sum r(k^2)
    bool half_agrees = false;
    std::optional<DirichletEstimate> dirichlet;
    bool dirichlet_agrees = false;   // nearest == h, when the estimate ran
};

// Exact h from a precomputed sum of r(k^2) over [1, p-1]; throws
// consistency_error when C(p,2) - sum is not divisible by p.
i64 h_from_qr_sum(const PrimeContext& ctx, i128 qr_sum);

// Requires p > 3 (throws consistency_error at p = 3 where divisibility fails).
ClassNumberResult class_number(const PrimeContext& ctx);

// Truncated series with chi(r) = legendre(r, p), summed in blocks of length p
// (the character period) and averaged over the last two block partial sums.
// max_terms >= p; rounded down to whole periods, default 50p when callers
// pass 0. Requires p > 3.
DirichletEstimate dirichlet_estimate(const PrimeContext& ctx, i64 max_terms);

ClassNumberResult class_number_with_estimate(const PrimeContext& ctx, i64 max_terms);

inline constexpr i64 kDefaultDirichletBlocks = 50;

} // namespace qrlab
