// qrlab — exact verification of quadratic-residue / class-number identities
// over primes p = 4n-1, plus conjecture-ratio tables and per-prime dossiers.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qrlab/scan.hpp"

namespace {

int with_output(const std::string& path, const std::function<int(std::ostream&)>& fn) {
    if (path.empty()) return fn(std::cout);
    std::ofstream f(path);
    if (!f) {
        std::cerr << "qrlab: cannot open output file: " << path << '\n';
        return 2;
    }
    return fn(f);
}

std::vector<std::string> split_ids(const std::string& csv) {
    std::vector<std::string> ids;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) ids.push_back(tok);
    return ids;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quadratic-residue identity scanner for primes p = 4n-1"};
    app.require_subcommand(1);

    qrlab::ScanConfig cfg;
    std::string ids_csv, out_path, format = "csv";

    auto* verify = app.add_subcommand("verify", "verify the identity catalog over a range of n");
    verify->add_option("--n-min", cfg.n_min, "smallest n (p = 4n-1)")->required();
    verify->add_option("--n-max", cfg.n_max, "largest n")->required();
    verify->add_option("--ids", ids_csv, "comma-separated catalog ids (default: all)");
    verify->add_option("--format", format, "csv | json | human")
        ->check(CLI::IsMember({"csv", "json", "human"}));
    verify->add_option("--out", out_path, "output file (default: stdout)");
    verify->add_option("--jobs", cfg.jobs, "worker count")->check(CLI::PositiveNumber);
    verify->add_flag("--dirichlet", cfg.dirichlet, "run the soft Dirichlet-series cross-check");
    verify->add_option("--max-terms", cfg.max_terms, "series truncation (default 50*p)");

    long long prime_n = 0;
    auto* prime = app.add_subcommand("prime", "print the dossier for one prime p = 4n-1");
    prime->add_option("--n", prime_n, "n value (4n-1 must be prime)")->required();

    auto* conj = app.add_subcommand("conjectures", "emit the conjecture-ratio table");
    conj->add_option("--n-min", cfg.n_min, "smallest n")->required();
    conj->add_option("--n-max", cfg.n_max, "largest n")->required();
    conj->add_option("--out", out_path, "output file (default: stdout)");
    conj->add_option("--jobs", cfg.jobs, "worker count")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            cfg.ids = split_ids(ids_csv);
            if (format == "json") cfg.format = qrlab::OutputFormat::json;
            else if (format == "human") cfg.format = qrlab::OutputFormat::human;
            else cfg.format = qrlab::OutputFormat::csv;
            return with_output(out_path, [&](std::ostream& out) {
                return qrlab::run_verify_scan(cfg, out, std::cerr);
            });
        }
        if (prime->parsed()) {
            qrlab::write_prime_report(prime_n, std::cout);
            return 0;
        }
        if (conj->parsed()) {
            return with_output(out_path, [&](std::ostream& out) {
                return qrlab::run_conjecture_table(cfg, out, std::cerr);
            });
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "qrlab: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "qrlab: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
