// Command-line front end: witness certification, brute-force ground truth,
// subset log-inequality sweeps, and DOT export.
//
// Exit codes: 0 = all checks pass, 1 = a mathematical check failed,
// 2 = usage or guard error. Output files are written atomically and are
// bit-identical for identical arguments (HW_THREADS included).

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hamming/brute_force.hpp"
#include "hamming/construction.hpp"
#include "hamming/counting.hpp"
#include "hamming/core.hpp"
#include "hamming/io.hpp"
#include "hamming/isoperimetry.hpp"
#include "hamming/partition.hpp"
#include "hamming/verifier.hpp"

namespace {

using namespace hamming;

std::string digit_label(const Vertex& v, int k) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (k > 10 && i) out += '.';
        out += std::to_string(v[i]);
    }
    return out;
}

std::string label_list(const std::vector<VertexId>& ids, const HammingParams& p) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ' ';
        out += digit_label(unrank(ids[i], p), p.k());
    }
    return out;
}

std::string fixed12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    return buf;
}

// Print, and mirror to --out when given: file bytes == stdout bytes.
void emit(const std::string& text, const std::string& out_path) {
    std::cout << text;
    if (!out_path.empty()) write_file_atomic(out_path, text);
}

struct WitnessCfg {
    int n = 1, k = 2;
    std::string mode = "auto";
    std::uint64_t samples = 1000, seed = 0, limit = 1'000'000;
    std::string out;
};

struct BruteCfg {
    int n = 1, k = 2;
    std::uint64_t limit = kDefaultSearchGuard;
    std::string out;
};

struct IsoperCfg {
    int n = 1, k = 2;
    std::uint64_t samples = 1000, seed = 0, limit = 4096;
    std::string out;
};

struct DotCfg {
    int n = 1, k = 2;
    int i1 = -1, i2 = -1;  // -1 = use the selected witness pair
    std::uint64_t limit = 1000;
    std::string out;
};

int run_witness(const WitnessCfg& cfg) {
    const HammingParams p(cfg.n, cfg.k);
    const BalancedPartition part = make_partition(cfg.n);

    VerifyMode mode;
    if (cfg.mode == "exhaustive")
        mode = VerifyMode::exhaustive;
    else if (cfg.mode == "sampled")
        mode = VerifyMode::sampled;
    else if (cfg.mode == "counts-only")
        mode = VerifyMode::counts_only;
    else  // auto: exhaustive when the whole graph fits under the limit
        mode = p.enumerable(cfg.limit) ? VerifyMode::exhaustive : VerifyMode::counts_only;

    const WitnessCertificate cert = certify(p, part, mode, cfg.samples, cfg.seed, cfg.limit);
    emit(certificate_text(cert), cfg.out);
    return cert.all_pass() ? 0 : 1;
}

int run_bruteforce(const BruteCfg& cfg) {
    const HammingParams p(cfg.n, cfg.k);
    const SearchResult r = exact_f(p, kDefaultSearchBudget, cfg.limit);
    const int a = exact_alpha(p, kDefaultSearchBudget, cfg.limit);

    std::string text;
    text += "f(H(" + std::to_string(cfg.n) + "," + std::to_string(cfg.k) +
            ")) = " + std::to_string(r.value) + "\n";
    text += "alpha = " + std::to_string(a) + "\n";
    text += "nodes_explored = " + std::to_string(r.nodes_explored) + "\n";
    text += std::string("exhausted = ") + (r.exhausted ? "yes" : "no") + "\n";
    text += "witness = " + label_list(r.witness_subset, p) + "\n";
    emit(text, cfg.out);

    // An exact result contradicting alpha = k^(n-1) or f <= ceil(sqrt(n))
    // would falsify the implementation.
    const bool alpha_ok = BigInt(static_cast<unsigned long>(a)) == p.alpha();
    const bool f_ok = r.value <= p.degree_cap() && r.value >= 1;
    if (r.exhausted && !(alpha_ok && f_ok)) return 1;
    return 0;
}

int run_isoper(const IsoperCfg& cfg) {
    const HammingParams p(cfg.n, cfg.k);
    const bool tiny = p.enumerable(16);
    const SubsetSweepReport report = tiny ? exhaustive_edge_bound_check(p)
                                         : sampled_edge_bound_check(p, cfg.samples, cfg.seed,
                                                               cfg.limit);
    std::string text;
    text += std::string("mode = ") + (tiny ? "exhaustive" : "sampled") + "\n";
    if (!tiny) {
        text += "samples = " + std::to_string(cfg.samples) + "\n";
        text += "seed = " + std::to_string(cfg.seed) + "\n";
    }
    text += "subsets_checked = " + std::to_string(report.subsets_checked) + "\n";
    text += "violations = " + std::to_string(report.violations) + "\n";
    text += "min_margin = " + fixed12(report.min_margin) + "\n";
    text += "min_witness = " + label_list(report.min_witness, p) + "\n";
    emit(text, cfg.out);
    return report.violations == 0 ? 0 : 1;
}

int run_export_dot(const DotCfg& cfg) {
    const HammingParams p(cfg.n, cfg.k);
    const BalancedPartition part = make_partition(cfg.n);
    const ResidueCounts yc = count_Y_residues(p, part);
    const ResidueCounts xc = count_X_residues(p, part);
    auto [i1, i2] = select_witness(xc, yc);
    if (cfg.i1 >= 0) i1 = cfg.i1;
    if (cfg.i2 >= 0) i2 = cfg.i2;
    const WitnessSpec spec = make_witness_spec(p, part, i1, i2);
    emit(export_dot(spec, cfg.limit), cfg.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Witness subgraphs of Hamming graphs H(n,k): certification and ground truth"};
    app.require_subcommand(1);

    WitnessCfg wcfg;
    CLI::App* witness = app.add_subcommand(
        "witness", "Certify the witness subgraph for (n, k) and emit a certificate");
    witness->add_option("--n", wcfg.n, "word length, >= 1")->required();
    witness->add_option("--k", wcfg.k, "alphabet size, >= 2")->required();
    witness->add_option("--mode", wcfg.mode, "auto|exhaustive|sampled|counts-only")
        ->check(CLI::IsMember({"auto", "exhaustive", "sampled", "counts-only"}))
        ->capture_default_str();
    witness->add_option("--samples", wcfg.samples, "sampled-mode member count")
        ->capture_default_str();
    witness->add_option("--seed", wcfg.seed, "sampler seed")->capture_default_str();
    witness->add_option("--limit", wcfg.limit, "exhaustive-mode vertex cap")
        ->capture_default_str();
    witness->add_option("--out", wcfg.out, "also write the certificate to this file");

    BruteCfg bcfg;
    CLI::App* brute = app.add_subcommand(
        "bruteforce", "Exact f(H(n,k)) and independence number by subset search");
    brute->add_option("--n", bcfg.n, "word length, >= 1")->required();
    brute->add_option("--k", bcfg.k, "alphabet size, >= 2")->required();
    brute->add_option("--limit", bcfg.limit, "vertex cap k^n for the search")
        ->capture_default_str();
    brute->add_option("--out", bcfg.out, "also write the result table to this file");

    IsoperCfg icfg;
    CLI::App* isoper = app.add_subcommand(
        "isoper", "Check (k-1)*log2|V| >= average degree over vertex subsets");
    isoper->add_option("--n", icfg.n, "word length, >= 1")->required();
    isoper->add_option("--k", icfg.k, "alphabet size, >= 2")->required();
    isoper->add_option("--samples", icfg.samples, "subset samples when k^n > 16")
        ->capture_default_str();
    isoper->add_option("--seed", icfg.seed, "subset sampler seed")->capture_default_str();
    isoper->add_option("--limit", icfg.limit, "vertex cap for sampled runs")
        ->capture_default_str();
    isoper->add_option("--out", icfg.out, "also write the report to this file");

    DotCfg dcfg;
    CLI::App* dot = app.add_subcommand("export-dot", "Emit the witness subgraph as DOT text");
    dot->add_option("--n", dcfg.n, "word length, >= 1")->required();
    dot->add_option("--k", dcfg.k, "alphabet size, >= 2")->required();
    dot->add_option("--i1", dcfg.i1, "override the X-side residue");
    dot->add_option("--i2", dcfg.i2, "override the Y-side residue");
    dot->add_option("--limit", dcfg.limit, "vertex cap k^n for export")->capture_default_str();
    dot->add_option("--out", dcfg.out, "also write the DOT text to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // help = success; any parse problem = usage error
    }

    try {
        if (witness->parsed()) return run_witness(wcfg);
        if (brute->parsed()) return run_bruteforce(bcfg);
        if (isoper->parsed()) return run_isoper(icfg);
        return run_export_dot(dcfg);
    } catch (const std::invalid_argument& e) {  // bad input, not a bug: before logic_error
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
