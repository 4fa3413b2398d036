#include "qrlab/jump_engine.hpp"

#include <algorithm>

namespace qrlab {

namespace {

void check_k_domain(const PrimeContext& ctx, i64 k, const char* what) {
    if (k < 0 || k > ctx.p)
        throw std::invalid_argument(std::string(what) + ": k = " + std::to_string(k) +
                                    " outside [0, p]");
}

void require_n_gt_3(const PrimeContext& ctx, const char* what) {
    if (ctx.n <= 3)
        throw std::invalid_argument(std::string(what) + ": requires n > 3 (n = " +
                                    std::to_string(ctx.n) + ")");
}

} // namespace

i64 total_residue(const PrimeContext& ctx, i64 k) {
    check_k_domain(ctx, k, "total_residue");
    return remainder(i128(k - 1) * (k - 1), ctx.p) + remainder(i128(k) + 1 - 3 * ctx.n, ctx.p);
}

bool is_jump(const PrimeContext& ctx, i64 k) {
    return total_residue(ctx, k) >= ctx.p;
}

JumpProfile jump_profile(const PrimeContext& ctx) {
    JumpProfile jp;
    jp.ctx = ctx;
    const i64 n = ctx.n, p = ctx.p;
    jp.gamma.resize(size_t(p) + 1);

    // sq = (k-1)^2 mod p, maintained incrementally: k^2 = (k-1)^2 + 2k - 1.
    i64 sq = remainder(1, p);  // k = 0
    for (i64 k = 0; k <= p; ++k) {
        // r(k+1-3n): argument lies in [1-3n, n], negative exactly while k < 3n-1
        i64 lin = (k < 3 * n - 1) ? k + n : k + 1 - 3 * n;
        jp.gamma[size_t(k)] = sq + lin;
        sq += 2 * k - 1;       // advance to k^2 mod p
        if (sq >= p) sq -= p;
        if (sq >= p) sq -= p;  // 2k-1 can reach 2p-1
    }

    for (i64 k = 0; k <= p; ++k) {
        if (jp.gamma[size_t(k)] < p) continue;
        jp.jumps.push_back(k);
        if (k >= 2 && k <= n + 2) ++jp.j_n;
        if (k >= 2 && k <= p) ++jp.j_total;
        if (k >= 2 && k <= 2 * n) ++jp.jumps_2_to_2n;
        if (k >= 2 && k <= p - 1) ++jp.jumps_2_to_pm1;
        if (k >= 2 * n + 1 && k <= p) ++jp.jumps_tail_to_p;
        if (k >= 2 * n + 1 && k <= p - 1) ++jp.jumps_tail_to_pm1;
    }
    return jp;
}

i64 head_jump_count(const PrimeContext& ctx) {
    i64 count = 0;
    for (i64 k = 2; k <= ctx.n + 2; ++k)
        if (total_residue(ctx, k) >= ctx.p) ++count;
    return count;
}

SetPartition classify_sets(const PrimeContext& ctx) {
    if (ctx.n < 2) throw std::invalid_argument("classify_sets: requires n >= 2");
    SetPartition sp;
    sp.ctx = ctx;
    const i64 n = ctx.n;
    sp.delta.assign(size_t(2 * n) + 1, 0);
    for (i64 k = 2; k <= 2 * n; ++k) {
        const i64 d = remainder(i128(k - 1) * (k - 1), ctx.p);
        sp.delta[size_t(k)] = d;
        if (k <= n + 2) {
            if (d < 3 * n - k - 1)      sp.a_lt.push_back(k);
            else if (d < 3 * n + k - 3) sp.a_mid.push_back(k);
            else                        sp.a_ge.push_back(k);
        } else {
            if (d < k - n - 2)          sp.b_lt.push_back(k);
            else if (d < 3 * n - k - 1) sp.b_mid.push_back(k);
            else                        sp.b_ge.push_back(k);
        }
    }
    return sp;
}

BijectionWitness bijection_a_ge(const PrimeContext& ctx, const SetPartition& sets) {
    require_n_gt_3(ctx, "bijection_a_ge");
    BijectionWitness w;
    w.kind = BijectionKind::a_ge_to_b_lt;
    std::vector<i64> image;
    for (i64 k : sets.a_ge) {
        const i64 kf = 2 * ctx.n + 2 - k;
        w.pairs.push_back({k, kf});
        image.push_back(kf);
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end())
        throw property_violation("bijection_a_ge: image collision",
                                 *std::adjacent_find(image.begin(), image.end()));
    std::vector<i64> b_lt = sets.b_lt;
    std::sort(b_lt.begin(), b_lt.end());
    if (image != b_lt) {
        i64 bad = image.empty() ? (b_lt.empty() ? 0 : b_lt.front()) : image.front();
        for (size_t i = 0; i < std::max(image.size(), b_lt.size()); ++i) {
            if (i >= image.size() || i >= b_lt.size() || image[i] != b_lt[i]) {
                bad = i < image.size() ? image[i] : b_lt[i];
                break;
            }
        }
        throw property_violation("bijection_a_ge: image differs from B^<", bad);
    }
    return w;
}

BijectionWitness bijection_a_ge(const PrimeContext& ctx) {
    return bijection_a_ge(ctx, classify_sets(ctx));
}

BijectionWitness bijection_a_mid(const PrimeContext& ctx, const SetPartition& sets) {
    require_n_gt_3(ctx, "bijection_a_mid");
    if (sets.a_mid.size() < 2)
        throw std::invalid_argument("bijection_a_mid: |A^[)| < 2");
    const i64 n = ctx.n, p = ctx.p;

    BijectionWitness w;
    w.kind = BijectionKind::a_mid_to_b_mid;
    std::vector<i64> image;
    // domain: a_mid minus its two largest elements
    const size_t dom_end = sets.a_mid.size() - 2;
    for (size_t i = 0; i < dom_end; ++i) {
        const i64 k = sets.a_mid[i];
        const i64 m = i64(floor_div(i128(k - 1) * (k - 1), p));
        const i64 u0 = isqrt(i128(m + 1) * p) + 2 - k;
        // u0 must be the least x <= n+2 with (m+1)p <= (k+x-1)^2 + 1
        auto sat = [&](i64 x) { return i128(m + 1) * p <= i128(k + x - 1) * (k + x - 1) + 1; };
        if (u0 < 1 || u0 > n + 2 || !sat(u0) || sat(u0 - 1))
            throw property_violation("bijection_a_mid: u0 is not the minimal shift", k);
        const i64 kf = 2 * n + 2 - u0 - k;

        BijectionAux aux;
        aux.k = k;
        aux.m = m;
        aux.u0 = u0;
        aux.m_f = n + 2 - k - u0 + m;
        aux.w_f = i64(i128(sets.delta[size_t(k)]) + i128(k) * (2 * u0 - 1) - p + n +
                      i128(u0) * u0 - 3 * u0 + 1);
        // tie the witness back to the definition of (k_f - 1)^2
        if (i128(kf - 1) * (kf - 1) != i128(aux.m_f) * p + aux.w_f)
            throw property_violation("bijection_a_mid: witness decomposition mismatch", k);

        w.pairs.push_back({k, kf});
        w.aux.push_back(aux);
        image.push_back(kf);
    }

    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end())
        throw property_violation("bijection_a_mid: image collision",
                                 *std::adjacent_find(image.begin(), image.end()));
    std::vector<i64> b_mid = sets.b_mid;
    std::sort(b_mid.begin(), b_mid.end());
    if (image != b_mid) {
        i64 bad = 0;
        for (size_t i = 0; i < std::max(image.size(), b_mid.size()); ++i) {
            if (i >= image.size() || i >= b_mid.size() || image[i] != b_mid[i]) {
                bad = i < image.size() ? image[i] : b_mid[i];
                break;
            }
        }
        throw property_violation("bijection_a_mid: image differs from B^[)", bad);
    }
    return w;
}

BijectionWitness bijection_a_mid(const PrimeContext& ctx) {
    return bijection_a_mid(ctx, classify_sets(ctx));
}

std::vector<i64> b_mid_members(const PrimeContext& ctx, const SetPartition& sets) {
    require_n_gt_3(ctx, "b_mid_members");
    std::vector<i64> ks;
    for (i64 m = 1; m <= ctx.M0; ++m)
        ks.push_back(2 * ctx.n - isqrt(i128(m) * ctx.p - 1));
    std::sort(ks.begin(), ks.end());
    if (std::adjacent_find(ks.begin(), ks.end()) != ks.end())
        throw property_violation("b_mid_members: duplicate member",
                                 *std::adjacent_find(ks.begin(), ks.end()));
    std::vector<i64> b_mid = sets.b_mid;
    std::sort(b_mid.begin(), b_mid.end());
    if (ks != b_mid) {
        i64 bad = 0;
        for (size_t i = 0; i < std::max(ks.size(), b_mid.size()); ++i) {
            if (i >= ks.size() || i >= b_mid.size() || ks[i] != b_mid[i]) {
                bad = i < ks.size() ? ks[i] : b_mid[i];
                break;
            }
        }
        throw property_violation("b_mid_members: mismatch with delta classification", bad);
    }
    return ks;
}

std::vector<i64> b_mid_members(const PrimeContext& ctx) {
    return b_mid_members(ctx, classify_sets(ctx));
}

} // namespace qrlab
