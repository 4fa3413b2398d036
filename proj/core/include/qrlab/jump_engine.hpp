#pragma once

// Total residue Gamma, jump detection, the six-set partition of [2, 2n],
// and the two explicit bijections with their witnesses. The bijection and
// membership operations verify their own postconditions exhaustively and
// throw property_violation on any mismatch.

#include <stdexcept>
#include <string>
#include <vector>

#include "qrlab/prime_context.hpp"

namespace qrlab {

class property_violation : public std::logic_error {
public:
    property_violation(const std::string& what, i64 offending_k)
        : std::logic_error(what + " (k = " + std::to_string(offending_k) + ")"),
          offending_k_(offending_k) {}
    i64 offending_k() const { return offending_k_; }

private:
    i64 offending_k_;
};

// Gamma(k) = r((k-1)^2, p) + r(k+1-3n, p), defined for 0 <= k <= p.
i64 total_residue(const PrimeContext& ctx, i64 k);

// true iff Gamma(k) >= p
bool is_jump(const PrimeContext& ctx, i64 k);

struct JumpProfile {
    PrimeContext ctx;
    std::vector<i64> gamma;        // Gamma(k), index 0..p
    std::vector<i64> jumps;        // ascending k in [0, p] with Gamma(k) >= p
    i64 j_n = 0;                   // jumps in [2, n+2]
    i64 j_total = 0;               // jumps in [2, p]
    i64 jumps_2_to_2n = 0;         // [2, 2n]
    i64 jumps_2_to_pm1 = 0;        // [2, p-1]   (endpoint-variant record)
    i64 jumps_tail_to_p = 0;       // [2n+1, p]
    i64 jumps_tail_to_pm1 = 0;     // [2n+1, p-1]
};

JumpProfile jump_profile(const PrimeContext& ctx);

// Jumps in [2, n+2] without materializing the Gamma array.
i64 head_jump_count(const PrimeContext& ctx);

struct SetPartition {
    PrimeContext ctx;
    // k in [2, n+2], classified by delta = r((k-1)^2) against 3n-k-1 and 3n+k-3
    std::vector<i64> a_lt, a_mid, a_ge;
    // k in [n+3, 2n], thresholds k-n-2 and 3n-k-1
    std::vector<i64> b_lt, b_mid, b_ge;
    std::vector<i64> delta;       // delta[k], valid for k in [2, 2n]
};

// Requires n >= 2 (the partition ranges are defined from k = 2 up).
SetPartition classify_sets(const PrimeContext& ctx);

enum class BijectionKind { a_ge_to_b_lt, a_mid_to_b_mid };

struct BijectionPair { i64 k = 0, k_f = 0; };

// Per-pair ingredients of the a_mid map: m = floor((k-1)^2/p),
// u0 = isqrt((m+1)p) + 2 - k, m_f and w_f the decomposition of (k_f-1)^2.
struct BijectionAux { i64 k = 0, m = 0, u0 = 0, m_f = 0, w_f = 0; };

struct BijectionWitness {
    BijectionKind kind{};
    std::vector<BijectionPair> pairs;
    std::vector<BijectionAux> aux;   // a_mid_to_b_mid only
};

// k -> 2n+2-k from a_ge onto b_lt; verified exhaustively. Requires n > 3.
BijectionWitness bijection_a_ge(const PrimeContext& ctx, const SetPartition& sets);
BijectionWitness bijection_a_ge(const PrimeContext& ctx);

// k -> 2n+2-u0-k from a_mid minus its two largest elements onto b_mid;
// verified exhaustively (u0 minimality, image, injectivity). Requires n > 3.
BijectionWitness bijection_a_mid(const PrimeContext& ctx, const SetPartition& sets);
BijectionWitness bijection_a_mid(const PrimeContext& ctx);

// {2n - isqrt(mp - 1) : 1 <= m <= M0}; verified equal to b_mid. Requires n > 3.
std::vector<i64> b_mid_members(const PrimeContext& ctx, const SetPartition& sets);
std::vector<i64> b_mid_members(const PrimeContext& ctx);

} // namespace qrlab
