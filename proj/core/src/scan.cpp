#include "qrlab/scan.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace qrlab {

namespace {

std::string fixed6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fixed4(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::vector<i64> primes_in_range(i64 n_min, i64 n_max) {
    std::vector<i64> ns;
    for (i64 n = n_min; n <= n_max; ++n)
        if (is_prime(u64(4 * n - 1))) ns.push_back(n);
    return ns;
}

// Writes blocks strictly in index order no matter which worker finishes first.
class OrderedSink {
public:
    explicit OrderedSink(std::ostream& out) : out_(out) {}

    void submit(size_t index, std::string block) {
        std::lock_guard<std::mutex> lock(mu_);
        pending_.emplace(index, std::move(block));
        while (!pending_.empty() && pending_.begin()->first == next_) {
            out_ << pending_.begin()->second;
            pending_.erase(pending_.begin());
            ++next_;
        }
    }

private:
    std::ostream& out_;
    std::mutex mu_;
    std::map<size_t, std::string> pending_;
    size_t next_ = 0;
};

void render_row(std::ostream& os, OutputFormat fmt, const PrimeContext& ctx,
                const IdentityReport& rep) {
    switch (fmt) {
    case OutputFormat::csv:
        if (rep.skipped) {
            os << ctx.n << ',' << ctx.p << ',' << rep.id << ",,,,skipped," << rep.skip_reason << '\n';
        } else {
            os << ctx.n << ',' << ctx.p << ',' << rep.id << ','
               << to_string_i128(rep.lhs_times_d) << ',' << to_string_i128(rep.rhs_times_d) << ','
               << rep.denominator << ',' << (rep.holds ? "true" : "false") << ",\n";
        }
        break;
    case OutputFormat::json: {
        nlohmann::json j;
        j["n"] = ctx.n;
        j["p"] = ctx.p;
        j["id"] = rep.id;
        if (rep.skipped) {
            j["lhs_times_d"] = nullptr;
            j["rhs_times_d"] = nullptr;
            j["denominator"] = nullptr;
            j["holds"] = nullptr;
            j["skip_reason"] = rep.skip_reason;
        } else {
            j["lhs_times_d"] = to_string_i128(rep.lhs_times_d);
            j["rhs_times_d"] = to_string_i128(rep.rhs_times_d);
            j["denominator"] = rep.denominator;
            j["holds"] = rep.holds;
            j["skip_reason"] = nullptr;
        }
        os << j.dump() << '\n';
        break;
    }
    case OutputFormat::human:
        os << "n=" << ctx.n << " p=" << ctx.p << ' ' << rep.id;
        if (rep.skipped) {
            os << " skip (" << rep.skip_reason << ")\n";
        } else {
            os << (rep.holds ? " pass" : " FAIL")
               << " lhs*d=" << to_string_i128(rep.lhs_times_d)
               << " rhs*d=" << to_string_i128(rep.rhs_times_d)
               << " d=" << rep.denominator << '\n';
        }
        break;
    }
}

void render_dirichlet(std::ostream& os, OutputFormat fmt, const PrimeContext& ctx,
                      const std::optional<DirichletEstimate>& est, std::optional<i64> h) {
    const bool agrees = est && h && est->nearest == *h;
    switch (fmt) {
    case OutputFormat::csv:
    case OutputFormat::human: {
        const char* lead = fmt == OutputFormat::csv ? "# dirichlet " : "dirichlet ";
        os << lead << "n=" << ctx.n << " p=" << ctx.p;
        if (!est) {
            os << " skipped (requires p > 3)\n";
        } else {
            os << " estimate=" << fixed6(est->value) << " nearest=" << est->nearest
               << " h=" << (h ? std::to_string(*h) : std::string("n/a"))
               << " terms=" << est->terms
               << " converged=" << (est->converged ? "true" : "false")
               << " agrees=" << (agrees ? "true" : "false") << '\n';
        }
        break;
    }
    case OutputFormat::json: {
        nlohmann::json j;
        j["type"] = "dirichlet";
        j["n"] = ctx.n;
        j["p"] = ctx.p;
        if (!est) {
            j["skipped"] = "requires p > 3";
        } else {
            j["estimate"] = est->value;
            j["nearest"] = est->nearest;
            if (h) j["h"] = *h; else j["h"] = nullptr;
            j["terms"] = est->terms;
            j["converged"] = est->converged;
            j["agrees"] = agrees;
        }
        os << j.dump() << '\n';
        break;
    }
    }
}

struct PrimeOutcome {
    std::string first_failure;   // empty when clean
    bool hard_error = false;     // exception while processing the prime
};

int validate_common(const ScanConfig& cfg, std::ostream& diag, i64 n_cap) {
    if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) {
        diag << "qrlab: invalid range: n_min=" << cfg.n_min << " n_max=" << cfg.n_max << '\n';
        return 2;
    }
    if (cfg.n_max > n_cap) {
        diag << "qrlab: n_max=" << cfg.n_max << " exceeds cap " << n_cap << '\n';
        return 2;
    }
    if (cfg.jobs < 1) {
        diag << "qrlab: jobs must be >= 1\n";
        return 2;
    }
    return 0;
}

} // namespace

int run_verify_scan(const ScanConfig& cfg, std::ostream& out, std::ostream& diag) {
    if (int rc = validate_common(cfg, diag, kFullScanMaxN); rc != 0) return rc;

    std::vector<std::string> ids = cfg.ids.empty() ? identity_catalog() : cfg.ids;
    for (const auto& id : ids) {
        if (!is_catalog_id(id)) {
            diag << "qrlab: unknown identity id '" << id << "'\n";
            return 2;
        }
    }
    if (cfg.dirichlet && cfg.max_terms != 0 && cfg.max_terms < 4 * cfg.n_max - 1) {
        diag << "qrlab: --max-terms must be >= p for every scanned prime (need >= "
             << 4 * cfg.n_max - 1 << ")\n";
        return 2;
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());   // row order: (n, id)

    const std::vector<i64> ns = primes_in_range(cfg.n_min, cfg.n_max);

    if (cfg.format == OutputFormat::csv)
        out << "n,p,id,lhs_times_d,rhs_times_d,denominator,holds,skip_reason\n";

    OrderedSink sink(out);
    std::vector<PrimeOutcome> outcomes(ns.size());
    std::atomic<size_t> cursor{0};

    auto worker = [&] {
        for (size_t i = cursor.fetch_add(1); i < ns.size(); i = cursor.fetch_add(1)) {
            std::ostringstream block;
            try {
                const PrimeContext ctx = make_context(ns[i]);
                const PrimeArtifacts art = compute_artifacts(ctx);
                for (const auto& id : ids) {
                    const IdentityReport rep = verify_identity(art, id);
                    render_row(block, cfg.format, ctx, rep);
                    if (!rep.skipped && !rep.holds && outcomes[i].first_failure.empty()) {
                        outcomes[i].first_failure =
                            "n=" + std::to_string(ctx.n) + " id=" + rep.id +
                            " lhs*d=" + to_string_i128(rep.lhs_times_d) +
                            " rhs*d=" + to_string_i128(rep.rhs_times_d);
                    }
                }
                if (cfg.dirichlet) {
                    // soft cross-check: outcome lives in the rendered row only
                    std::optional<DirichletEstimate> est;
                    if (ctx.p > 3) est = dirichlet_estimate(ctx, cfg.max_terms);
                    render_dirichlet(block, cfg.format, ctx, est, art.h);
                }
            } catch (const std::exception& e) {
                outcomes[i].hard_error = true;
                outcomes[i].first_failure = "n=" + std::to_string(ns[i]) + " error: " + e.what();
                block << "# error n=" << ns[i] << ": " << e.what() << '\n';
            }
            sink.submit(i, block.str());
        }
    };

    const size_t nthreads = std::min<size_t>(size_t(cfg.jobs), std::max<size_t>(ns.size(), 1));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    out.flush();
    if (!out.good()) {
        diag << "qrlab: I/O failure while writing report\n";
        return 2;
    }
    for (const auto& oc : outcomes) {
        if (!oc.first_failure.empty()) {
            diag << "qrlab: identity violation: " << oc.first_failure << '\n';
            return 1;
        }
    }
    return 0;
}

int run_conjecture_table(const ScanConfig& cfg, std::ostream& out, std::ostream& diag) {
    if (int rc = validate_common(cfg, diag, kMaxContextN); rc != 0) return rc;

    const std::vector<i64> ns = primes_in_range(cfg.n_min, cfg.n_max);

    out << "n,p,J_n,M,jn_over_n,sum_RQ,target_RQ,rq_ratio\n";
    if (cfg.n_min <= 3)
        out << "# rows with n <= 3: jump-count laws (valid for n > 3) not asserted; J_n is the raw total-residue count\n";

    std::vector<std::string> rows(ns.size());
    std::vector<double> jn_ratio(ns.size()), rq_ratio(ns.size());
    std::atomic<size_t> cursor{0};
    std::atomic<bool> bad{false};
    std::string bad_msg;
    std::mutex bad_mu;

    auto worker = [&] {
        for (size_t i = cursor.fetch_add(1); i < ns.size(); i = cursor.fetch_add(1)) {
            try {
                const PrimeContext ctx = make_context(ns[i]);
                const i64 jn = head_jump_count(ctx);
                if (jn < 0 || jn > ctx.n + 1)
                    throw property_violation("conjecture row: J_n outside [0, n+1]", jn);
                const RadicalFloorSums s = radical_floor_sums(ctx);
                const i128 sum_rq = s.sum_r + s.sum_q;
                const i128 denom = i128(ctx.M) * ctx.p + 2 * ctx.n;
                const i128 target = denom / 3;
                const double jr = double(jn) / double(ctx.n);
                const double rr = double(sum_rq) / double(denom);
                jn_ratio[i] = jr;
                rq_ratio[i] = rr;
                std::ostringstream os;
                os << ctx.n << ',' << ctx.p << ',' << jn << ',' << ctx.M << ','
                   << fixed6(jr) << ',' << to_string_i128(sum_rq) << ','
                   << to_string_i128(target) << ',' << fixed6(rr) << '\n';
                rows[i] = os.str();
            } catch (const std::exception& e) {
                bad = true;
                std::lock_guard<std::mutex> lock(bad_mu);
                if (bad_msg.empty()) bad_msg = e.what();
            }
        }
    };

    const size_t nthreads = std::min<size_t>(size_t(cfg.jobs), std::max<size_t>(ns.size(), 1));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (bad) {
        diag << "qrlab: conjecture scan error: " << bad_msg << '\n';
        return 2;
    }
    for (const auto& r : rows) out << r;

    auto stats = [](const std::vector<double>& v) {
        double lo = 0, hi = 0, mean = 0;
        if (!v.empty()) {
            lo = *std::min_element(v.begin(), v.end());
            hi = *std::max_element(v.begin(), v.end());
            for (double x : v) mean += x;
            mean /= double(v.size());
        }
        return std::array<double, 3>{lo, mean, hi};
    };
    const auto js = stats(jn_ratio);
    const auto rs = stats(rq_ratio);
    out << "# jn_over_n: min=" << fixed4(js[0]) << " mean=" << fixed4(js[1])
        << " max=" << fixed4(js[2]) << " count=" << ns.size() << '\n';
    out << "# rq_ratio: min=" << fixed4(rs[0]) << " mean=" << fixed4(rs[1])
        << " max=" << fixed4(rs[2]) << " count=" << ns.size() << '\n';

    out.flush();
    if (!out.good()) {
        diag << "qrlab: I/O failure while writing report\n";
        return 2;
    }
    return 0;
}

namespace {

std::string set_to_string(const std::vector<i64>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

} // namespace

void write_prime_report(i64 n, std::ostream& out) {
    const PrimeContext ctx = make_context(n);
    const PrimeArtifacts art = compute_artifacts(ctx);
    const auto& jp = art.profile;

    out << "prime dossier: n = " << ctx.n << ", p = " << ctx.p << " (p = 4n-1)\n";
    out << "M = " << ctx.M << ", M0 = " << ctx.M0 << '\n';

    if (art.h) {
        const ClassNumberResult cn = class_number(ctx);
        out << "class number: h = " << cn.h << " (residue-sum), half-sum = " << cn.h_half
            << ", agree = " << (cn.half_agrees ? "yes" : "NO") << '\n';
    } else {
        out << "class number: unavailable at p = 3 (residue-sum formula requires p > 3)\n";
    }

    out << "jumps: J_n = " << jp.j_n << " on [2, n+2]; [2, p] = " << jp.j_total
        << "; [2, p-1] = " << jp.jumps_2_to_pm1 << "; [2, 2n] = " << jp.jumps_2_to_2n
        << "; [2n+1, p] = " << jp.jumps_tail_to_p
        << "; [2n+1, p-1] = " << jp.jumps_tail_to_pm1 << '\n';
    out << "total residues at n+1, n+2: Γ(" << (n + 1) << ")=" << jp.gamma[size_t(n + 1)]
        << ", Γ(" << (n + 2) << ")=" << jp.gamma[size_t(n + 2)] << '\n';

    if (n > 3) {
        out << "endpoint check: 2n-2 = " << (2 * n - 2)
            << " matched by [2, p-1]: " << (jp.jumps_2_to_pm1 == 2 * n - 2 ? "yes" : "no")
            << ", [2, p]: " << (jp.j_total == 2 * n - 2 ? "yes" : "no")
            << "; n-2 = " << (n - 2)
            << " matched by [2n+1, p-1]: " << (jp.jumps_tail_to_pm1 == n - 2 ? "yes" : "no")
            << ", [2n+1, p]: " << (jp.jumps_tail_to_p == n - 2 ? "yes" : "no") << '\n';
    } else {
        out << "jump-count laws: hypothesis-excluded (n <= 3)\n";
    }

    if (art.sets) {
        const auto& s = *art.sets;
        out << "sets by Δ = r((k-1)^2):\n";
        out << "  A^<  = " << set_to_string(s.a_lt) << '\n';
        out << "  A^[) = " << set_to_string(s.a_mid) << '\n';
        out << "  A^>= = " << set_to_string(s.a_ge) << '\n';
        out << "  B^<  = " << set_to_string(s.b_lt) << '\n';
        out << "  B^[) = " << set_to_string(s.b_mid) << '\n';
        out << "  B^>= = " << set_to_string(s.b_ge) << '\n';
        const i64 printed = (i128(n) * n - 4 * n + 5) / 2;
        out << "  |B^[)| = " << s.b_mid.size() << " = M0 = " << ctx.M0
            << "; candidate closed form floor((n^2-4n+5)/2) = " << printed
            << " (recorded, not asserted)\n";
    } else {
        out << "sets: not defined for n < 2\n";
    }

    if (n > 3) {
        out << "bijection A^>= -> B^< (k -> 2n+2-k):";
        if (art.bij_a_ge->pairs.empty()) out << " {} (vacuous)";
        for (const auto& pr : art.bij_a_ge->pairs) out << " (" << pr.k << " -> " << pr.k_f << ")";
        out << '\n';
        out << "bijection A^[)-{y,z} -> B^[) (k -> 2n+2-u0-k):";
        if (art.bij_a_mid->pairs.empty()) out << " {} (vacuous)";
        for (size_t i = 0; i < art.bij_a_mid->pairs.size(); ++i) {
            const auto& pr = art.bij_a_mid->pairs[i];
            const auto& ax = art.bij_a_mid->aux[i];
            out << " (" << pr.k << " -> " << pr.k_f << " [m=" << ax.m << " u0=" << ax.u0
                << " m_f=" << ax.m_f << " w_f=" << ax.w_f << "])";
        }
        out << '\n';
        out << "B^[) from the membership formula {2n - isqrt(mp-1)}: " << set_to_string(art.b_mid_direct) << '\n';
    } else {
        out << "bijections: hypothesis-excluded (n <= 3)\n";
    }

    int pass = 0, fail = 0, skip = 0;
    std::ostringstream lines;
    for (const auto& id : identity_catalog()) {
        const IdentityReport rep = verify_identity(art, id);
        render_row(lines, OutputFormat::human, ctx, rep);
        if (rep.skipped) ++skip;
        else if (rep.holds) ++pass;
        else ++fail;
    }
    out << "identities: " << (pass + fail + skip) << " checked, " << pass << " pass, "
        << fail << " fail, " << skip << " skipped\n";
    out << lines.str();
}

} // namespace qrlab
