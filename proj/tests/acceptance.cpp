// Acceptance suite: eight scripted criteria, one verdict line each.
// Exit code is nonzero iff a hard criterion fails (criterion 6 is the
// soft Dirichlet cross-check: failures are logged, never fatal).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "qrlab/scan.hpp"
#include "oracle.hpp"

using namespace qrlab;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<i64> primes_in(i64 lo, i64 hi) {
    std::vector<i64> ns;
    for (i64 n = lo; n <= hi; ++n)
        if (is_prime(u64(4 * n - 1))) ns.push_back(n);
    return ns;
}

int g_hard_failures = 0;

void verdict(int idx, const std::string& what, bool pass, const std::string& detail,
             bool soft = false) {
    std::printf("criterion %d: %-52s %s%s%s\n", idx, what.c_str(),
                pass ? "PASS" : (soft ? "SOFT-FAIL" : "FAIL"),
                detail.empty() ? "" : "  ", detail.c_str());
    if (!pass && !soft) ++g_hard_failures;
}

char buf[256];

// 1. every catalog entry exact for every prime with 4 <= n <= 2000
void criterion1() {
    const auto t0 = Clock::now();
    ScanConfig cfg;
    cfg.n_min = 4;
    cfg.n_max = 2000;
    cfg.jobs = 2;
    std::ostringstream out, diag;
    const int rc = run_verify_scan(cfg, out, diag);

    i64 rows = 0, held = 0;
    std::stringstream ss(out.str());
    std::string line;
    std::getline(ss, line);   // header
    while (std::getline(ss, line)) {
        ++rows;
        if (line.find(",true,") != std::string::npos) ++held;
    }
    const i64 primes = i64(primes_in(4, 2000).size());
    const bool pass = rc == 0 && rows == primes * 29 && held == rows;
    std::snprintf(buf, sizeof buf, "(%lld primes, %lld rows, exit %d, %.2fs)",
                  (long long)primes, (long long)rows, rc, seconds_since(t0));
    verdict(1, "identity sweep I01-I25 + C1-C4, n in [4, 2000]", pass, buf);
}

// 2. endpoint-inclusive special-case sums for n in {1, 2, 3}
void criterion2() {
    const i64 expect_full[3] = {5, 21, 55};   // k = 0..p-1
    const i64 expect_head[3] = {5, 14, 32};   // k = 0..2n
    bool pass = true;
    for (i64 n = 1; n <= 3; ++n) {
        auto c = make_context(n);
        if (sum_shifted(c, c.p - 1, true) != expect_full[n - 1]) pass = false;
        if (sum_shifted(c, 2 * n, true) != expect_head[n - 1]) pass = false;
        // and the 1-based identity forms themselves
        if (!verify_identity(c, "I03").holds) pass = false;
        if (!verify_identity(c, "I04").holds) pass = false;
    }
    verdict(2, "special-case tables {5,21,55} / {5,14,32}", pass, "");
}

// 3. frozen class numbers, re-derived by the independent oracle first
void criterion3() {
    const i64 ps[] = {7, 11, 19, 23, 31, 43, 47, 67, 163};
    const i64 expected[] = {1, 1, 1, 3, 3, 1, 5, 1, 1};
    bool pass = true;
    std::string detail;
    for (size_t i = 0; i < std::size(ps); ++i) {
        const i64 n = (ps[i] + 1) / 4;
        const i64 via_oracle = oracle::class_number(oracle::make(n));
        const i64 via_engine = class_number(make_context(n)).h;
        if (via_oracle != expected[i] || via_engine != expected[i]) {
            pass = false;
            detail = "p=" + std::to_string(ps[i]) + " oracle=" + std::to_string(via_oracle) +
                     " engine=" + std::to_string(via_engine);
            break;
        }
    }
    verdict(3, "class numbers h(-p) for the nine reference primes", pass, detail);
}

// 4. jump-count laws, both upper-endpoint readings recorded
void criterion4() {
    bool pass = true;
    i64 match_pm1 = 0, match_p = 0, checked = 0;
    std::string detail;
    for (i64 n : primes_in(4, 2000)) {
        auto jp = jump_profile(make_context(n));
        ++checked;
        const bool total_pm1 = jp.jumps_2_to_pm1 == 2 * n - 2;
        const bool total_p = jp.j_total == 2 * n - 2;
        const bool tail_pm1 = jp.jumps_tail_to_pm1 == n - 2;
        const bool tail_p = jp.jumps_tail_to_p == n - 2;
        if (total_pm1 && tail_pm1) ++match_pm1;
        if (total_p && tail_p) ++match_p;
        if (!(total_pm1 || total_p) || !(tail_pm1 || tail_p) || jp.jumps_2_to_2n != n) {
            pass = false;
            detail = "first failure at n=" + std::to_string(n);
            break;
        }
    }
    if (pass)
        std::snprintf(buf, sizeof buf,
                      "(%lld primes; endpoint p-1 matched %lld, endpoint p matched %lld)",
                      (long long)checked, (long long)match_pm1, (long long)match_p);
    verdict(4, "jump counts 2n-2 / n / n-2 with endpoint report", pass, pass ? buf : detail);
}

// 5. bijections + membership-formula route for B^[), plus the closed-form record
void criterion5() {
    bool pass = true;
    i64 printed_matches = 0, checked = 0;
    std::string detail;
    for (i64 n : primes_in(4, 2000)) {
        try {
            auto c = make_context(n);
            auto sets = classify_sets(c);
            auto ge = bijection_a_ge(c, sets);      // self-verifying
            auto mid = bijection_a_mid(c, sets);    // self-verifying
            auto members = b_mid_members(c, sets);  // self-verifying
            ++checked;
            if (i64(members.size()) != c.M0) throw property_violation("count != M0", n);
            if (ge.pairs.size() != sets.a_ge.size()) throw property_violation("domain", n);
            if (mid.pairs.size() + 2 != sets.a_mid.size()) throw property_violation("domain", n);
            const i64 printed = i64((i128(n) * n - 4 * n + 5) / 2);
            if (printed == i64(sets.b_mid.size())) ++printed_matches;
        } catch (const std::exception& e) {
            pass = false;
            detail = "n=" + std::to_string(n) + ": " + e.what();
            break;
        }
    }
    if (pass)
        std::snprintf(buf, sizeof buf,
                      "(%lld primes; |B^[)|=M0 always; closed form floor(./2) agreed %lld times)",
                      (long long)checked, (long long)printed_matches);
    verdict(5, "bijection witnesses and B^[) membership route", pass, pass ? buf : detail);
}

// 6. soft: truncated series rounds to h for every prime p <= 10007
void criterion6() {
    const auto t0 = Clock::now();
    i64 mismatches = 0, converged = 0, checked = 0;
    for (i64 n = 2; 4 * n - 1 <= 10007; ++n) {
        if (!is_prime(u64(4 * n - 1))) continue;
        auto c = make_context(n);
        auto r = class_number_with_estimate(c, 0);   // default 50p terms
        ++checked;
        if (r.dirichlet->nearest != r.h) {
            ++mismatches;
            std::printf("  dirichlet mismatch: p=%lld h=%lld estimate=%.6f\n",
                        (long long)c.p, (long long)r.h, r.dirichlet->value);
        }
        if (r.dirichlet->converged) ++converged;
    }
    const double rate = checked ? 100.0 * double(converged) / double(checked) : 0.0;
    const bool pass = mismatches == 0 && rate >= 99.0;
    std::snprintf(buf, sizeof buf, "(%lld primes, %lld mismatches, %.1f%% converged, %.2fs)",
                  (long long)checked, (long long)mismatches, rate, seconds_since(t0));
    verdict(6, "dirichlet estimate rounds to h, p <= 10007 [soft]", pass, buf, /*soft=*/true);
}

// 7. conjecture table over [5000, 6000]; ratios sane; mean reported
void criterion7() {
    const auto t0 = Clock::now();
    ScanConfig cfg;
    cfg.n_min = 5000;
    cfg.n_max = 6000;
    cfg.jobs = 2;
    std::ostringstream out, diag;
    const int rc = run_conjecture_table(cfg, out, diag);

    bool ratios_ok = true;
    bool footer_seen = false;
    std::string mean;
    std::stringstream ss(out.str());
    std::string line;
    std::getline(ss, line);   // header
    while (std::getline(ss, line)) {
        if (line.rfind("# jn_over_n:", 0) == 0) {
            footer_seen = true;
            const auto pos = line.find("mean=");
            if (pos != std::string::npos) mean = line.substr(pos, 11);
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        // 5th column is jn/n
        std::stringstream fields(line);
        std::string f;
        for (int i = 0; i < 5 && std::getline(fields, f, ','); ++i) {}
        const double ratio = std::stod(f);
        if (!(ratio > 0.0 && ratio < 1.0)) ratios_ok = false;
    }
    const bool pass = rc == 0 && ratios_ok && footer_seen && !mean.empty();
    std::snprintf(buf, sizeof buf, "(exit %d, all J_n/n in (0,1), footer %s, %.2fs)",
                  rc, mean.c_str(), seconds_since(t0));
    verdict(7, "conjecture table n in [5000, 6000]", pass, buf);
}

// 8. full differential against the definition-level oracle
void criterion8() {
    auto pool = primes_in(2, 200);
    std::mt19937 rng(20240811u);   // fixed seed: reproducible sample
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(20);
    std::sort(pool.begin(), pool.end());

    bool pass = true;
    std::string detail;
    for (i64 n : pool) {
        const auto c = make_context(n);
        const auto oc = oracle::make(n);
        const auto art = compute_artifacts(c);
        auto fail = [&](const char* what) {
            pass = false;
            detail = std::string(what) + " at n=" + std::to_string(n);
        };

        if (c.p != oc.p || c.M != oc.M || c.M0 != oc.M0) { fail("context"); break; }
        if (art.qr_to_pm1 != oracle::qr_sum(oc, c.p - 1) ||
            art.qr_to_2n != oracle::qr_sum(oc, 2 * n) ||
            art.qr_to_n != oracle::qr_sum(oc, n)) { fail("qr sums"); break; }
        if (art.sh_to_pm1 != oracle::shifted_sum(oc, c.p - 1) ||
            art.sh_to_2n != oracle::shifted_sum(oc, 2 * n) ||
            art.sh_to_n != oracle::shifted_sum(oc, n)) { fail("shifted sums"); break; }
        if (art.fsh_to_pm1 != oracle::floor_shifted_sum(oc, c.p - 1) ||
            art.fsh_to_2n != oracle::floor_shifted_sum(oc, 2 * n) ||
            art.fsh_to_n != oracle::floor_shifted_sum(oc, n)) { fail("floor-shifted sums"); break; }
        if (art.fsq_to_n != oracle::floor_squares_sum(oc, n)) { fail("floor-square sum"); break; }

        bool gammas_ok = true;
        for (i64 k = 0; k <= c.p; ++k)
            if (art.profile.gamma[size_t(k)] != oracle::gamma(oc, k)) gammas_ok = false;
        if (!gammas_ok) { fail("gamma map"); break; }
        if (art.profile.j_n != oracle::count_jumps(oc, 2, n + 2) ||
            art.profile.j_total != oracle::count_jumps(oc, 2, c.p) ||
            art.profile.jumps_2_to_2n != oracle::count_jumps(oc, 2, 2 * n) ||
            art.profile.jumps_tail_to_p != oracle::count_jumps(oc, 2 * n + 1, c.p)) {
            fail("jump counts");
            break;
        }

        const auto os = oracle::classify(oc);
        const auto& s = *art.sets;
        if (s.a_lt != os.a_lt || s.a_mid != os.a_mid || s.a_ge != os.a_ge ||
            s.b_lt != os.b_lt || s.b_mid != os.b_mid || s.b_ge != os.b_ge) {
            fail("set partition");
            break;
        }

        bool floors_ok = true;
        for (i64 m = 0; m < c.M; ++m)
            if (art.rf.floor_q[size_t(m)] != oracle::floor_q_linear(oc, m)) floors_ok = false;
        for (i64 m = 1; m <= c.M; ++m)
            if (art.rf.floor_r[size_t(m - 1)] != oracle::floor_r_linear(oc, m)) floors_ok = false;
        for (i64 m = 0; m <= c.M0; ++m) {
            if (art.rf.k_jump[size_t(m)] != 1 + oracle::floor_q_linear(oc, m)) floors_ok = false;
            if (art.rf.ell[size_t(m)] != 1 + oracle::isqrt_linear(i128(m) * c.p + c.p - 1))
                floors_ok = false;
        }
        if (!floors_ok) { fail("radical floors"); break; }

        if (art.h && *art.h != oracle::class_number(oc)) { fail("class number"); break; }
    }
    std::string npick = "(n = ";
    for (size_t i = 0; i < pool.size(); ++i)
        npick += (i ? "," : "") + std::to_string(pool[i]);
    npick += ")";
    verdict(8, "oracle equivalence on 20 seeded random primes", pass, pass ? npick : detail);
}

} // namespace

int main() {
    const auto t0 = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::printf("acceptance: %s (%.2fs total)\n",
                g_hard_failures == 0 ? "all hard criteria pass" : "HARD FAILURES PRESENT",
                seconds_since(t0));
    return g_hard_failures == 0 ? 0 : 1;
}
