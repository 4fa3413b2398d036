#pragma once

// The identity catalog I01..I25 / C1..C4: every fractional identity is
// compared after multiplying both sides by its least common denominator,
// so a verdict is an exact equality of 128-bit integers.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrlab/class_number.hpp"
#include "qrlab/jump_engine.hpp"
#include "qrlab/residue_sums.hpp"

namespace qrlab {

// Everything one prime's identity pass consumes, computed once (O(p)).
struct PrimeArtifacts {
    PrimeContext ctx;
    RadicalFloors rf;
    JumpProfile profile;
    std::optional<SetPartition> sets;           // n >= 2
    std::optional<BijectionWitness> bij_a_ge;   // n > 3, self-verified
    std::optional<BijectionWitness> bij_a_mid;  // n > 3, self-verified
    std::vector<i64> b_mid_direct;              // n > 3, direct-formula route, == sets->b_mid

    i128 qr_to_pm1 = 0, qr_to_2n = 0, qr_to_n = 0;           // sum r(k^2)
    i128 sh_to_pm1 = 0, sh_to_2n = 0, sh_to_n = 0;           // sum r(k^2-k+2-3n)
    i128 fsh_to_pm1 = 0, fsh_to_2n = 0, fsh_to_n = 0;        // floor sums of the same
    i128 fsq_to_n = 0;                                        // sum_{k=0}^{n} floor(k^2/p)
    i128 fsq_to_nm1 = 0;                                      // sum_{k=1}^{n-1} floor(k^2/p)
    i128 sum_floor_r = 0, sum_floor_q = 0;
    std::optional<i64> h;                                     // p > 3 only
};

PrimeArtifacts compute_artifacts(const PrimeContext& ctx);

struct IdentityReport {
    std::string id;
    bool skipped = false;
    std::string skip_reason;
    bool holds = false;
    i128 lhs_times_d = 0;
    i128 rhs_times_d = 0;
    i64 denominator = 1;
    // witness ingredients
    i64 j_n = 0, M = 0, M0 = 0;
    std::optional<i64> h;
    i128 sum_floor_r = 0, sum_floor_q = 0, qr_sum = 0;
};

// Fixed catalog order: I01..I25 then C1..C4.
const std::vector<std::string>& identity_catalog();
bool is_catalog_id(std::string_view id);

IdentityReport verify_identity(const PrimeArtifacts& art, std::string_view id);
IdentityReport verify_identity(const PrimeContext& ctx, std::string_view id);

} // namespace qrlab
