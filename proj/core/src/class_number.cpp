#include "qrlab/class_number.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "qrlab/residue_sums.hpp"

namespace qrlab {

i64 h_from_qr_sum(const PrimeContext& ctx, i128 qr_sum) {
    const i64 p = ctx.p;
    const i128 numer = i128(p) * (p - 1) / 2 - qr_sum;  // C(p,2) - sum
    if (numer % p != 0)
        throw consistency_error("class_number: C(p,2) - sum r(k^2) = " + to_string_i128(numer) +
                                " is not divisible by p = " + std::to_string(p) +
                                " (formula requires p > 3)");
    const i64 h = i64(numer / p);
    if (h < 1)
        throw consistency_error("class_number: nonpositive h at p = " + std::to_string(p));
    return h;
}

ClassNumberResult class_number(const PrimeContext& ctx) {
    ClassNumberResult res;
    res.ctx = ctx;
    const i64 p = ctx.p;
    const i128 qr = sum_qr(ctx, p - 1);
    res.h = h_from_qr_sum(ctx, qr);
    // qr = p((p-1)/2 - h), so this division is exact once the first one is
    res.h_half = i64((p - 1) / 2 - qr / p);
    res.half_agrees = (res.h_half == res.h);
    return res;
}

DirichletEstimate dirichlet_estimate(const PrimeContext& ctx, i64 max_terms) {
    const i64 p = ctx.p;
    if (p <= 3)
        throw std::invalid_argument("dirichlet_estimate: requires p > 3");
    if (max_terms == 0) max_terms = kDefaultDirichletBlocks * p;
    if (max_terms < p)
        throw std::invalid_argument("dirichlet_estimate: max_terms must be >= p");

    // chi table via the square sieve: chi(a) = 1 iff a is a nonzero QR mod p
    std::vector<signed char> chi(size_t(p), -1);
    chi[0] = 0;
    for (i64 k = 1; k < p; ++k) chi[size_t(remainder(i128(k) * k, p))] = 1;

    const i64 blocks = std::max<i64>(2, max_terms / p);
    double partial = 0.0, prev_partial = 0.0;
    for (i64 j = 0; j < blocks; ++j) {
        const double base = double(j) * double(p);
        for (i64 a = 1; a <= p; ++a) {
            const int c = chi[size_t(a % p)];
            if (c) partial += double(c) / (base + double(a));
        }
        if (j == blocks - 2) prev_partial = partial;
    }

    DirichletEstimate est;
    est.terms = blocks * p;
    est.value = std::sqrt(double(p)) / std::numbers::pi * 0.5 * (prev_partial + partial);
    est.nearest = i64(std::llround(est.value));
    est.converged = std::fabs(est.value - double(est.nearest)) < 0.25;
    return est;
}

ClassNumberResult class_number_with_estimate(const PrimeContext& ctx, i64 max_terms) {
    ClassNumberResult res = class_number(ctx);
    res.dirichlet = dirichlet_estimate(ctx, max_terms);
    res.dirichlet_agrees = (res.dirichlet->nearest == res.h);
    return res;
}

} // namespace qrlab
