#pragma once

// Scan driver used by the CLI: iterate primes p = 4n-1 over an n-range,
// verify the identity catalog per prime, and emit deterministic reports.
// Work unit is one prime; output order never depends on the worker count.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qrlab/identities.hpp"

namespace qrlab {

enum class OutputFormat { csv, json, human };

struct ScanConfig {
    i64 n_min = 1;
    i64 n_max = 1;
    std::vector<std::string> ids;   // empty = whole catalog
    OutputFormat format = OutputFormat::csv;
    int jobs = 1;
    bool dirichlet = false;
    i64 max_terms = 0;              // 0 = 50 * p per prime
};

// Full-identity scans materialize a Gamma array of length p+1 per worker;
// this cap keeps that bounded. Conjecture scans go up to kMaxContextN.
inline constexpr i64 kFullScanMaxN = i64{1} << 20;

// Exit status: 0 clean, 1 at least one identity failed (first failure goes
// to diag), 2 bad config or I/O failure.
int run_verify_scan(const ScanConfig& cfg, std::ostream& out, std::ostream& diag);

// Conjecture-ratio table (CSV only); no pass/fail semantics.
int run_conjecture_table(const ScanConfig& cfg, std::ostream& out, std::ostream& diag);

// Human-readable dossier for one prime. Throws std::invalid_argument when
// 4n-1 is composite.
void write_prime_report(i64 n, std::ostream& out);

} // namespace qrlab
