#include "hamming/io.hpp"

#include <fstream>
#include <stdexcept>
#include <vector>

namespace hamming {

namespace {

std::string join_counts(const ResidueCounts& counts) {
    std::string out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) out += ',';
        out += counts[i].get_str();
    }
    return out;
}

std::string join_blocks(const BalancedPartition& part) {
    std::string out;
    for (std::size_t j = 0; j < part.blocks.size(); ++j) {
        if (j) out += ';';
        for (std::size_t c = 0; c < part.blocks[j].size(); ++c) {
            if (c) out += ',';
            out += std::to_string(part.blocks[j][c]);
        }
    }
    return out;
}

// Digit string, coordinate 1 first. Single characters up to base 10; dotted
// decimal beyond, where concatenation would be ambiguous.
std::string digit_label(const Vertex& v, int k) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (k > 10 && i) out += '.';
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

std::string to_string(VerifyMode mode) {
    switch (mode) {
        case VerifyMode::exhaustive: return "exhaustive";
        case VerifyMode::sampled: return "sampled";
        case VerifyMode::counts_only: return "counts-only";
    }
    throw std::logic_error("to_string: bad VerifyMode");
}

std::string to_string(CheckState state) {
    switch (state) {
        case CheckState::pass: return "pass";
        case CheckState::fail: return "fail";
        case CheckState::skipped: return "skipped";
    }
    throw std::logic_error("to_string: bad CheckState");
}

std::string certificate_text(const WitnessCertificate& cert) {
    std::string out;
    out += "hamming-witness-cert v1\n";
    out += "n=" + std::to_string(cert.spec.params.n()) + "\n";
    out += "k=" + std::to_string(cert.spec.params.k()) + "\n";
    out += "q=" + std::to_string(cert.spec.partition.q()) + "\n";
    out += "blocks=" + join_blocks(cert.spec.partition) + "\n";
    out += "i1=" + std::to_string(cert.spec.i1) + "\n";
    out += "i2=" + std::to_string(cert.spec.i2) + "\n";
    out += "x_counts=" + join_counts(cert.x_counts) + "\n";
    out += "y_counts=" + join_counts(cert.y_counts) + "\n";
    out += "size=" + cert.size.get_str() + "\n";
    out += "alpha=" + cert.alpha.get_str() + "\n";
    out += "delta_bound=" + std::to_string(cert.delta_bound) + "\n";
    out += "delta_observed=" +
           (cert.delta_observed ? std::to_string(*cert.delta_observed) : std::string("none")) +
           "\n";
    out += "mode=" + to_string(cert.mode) + "\n";
    out += "checks=size_gt_alpha:" + to_string(cert.size_gt_alpha) +
           ",degree_le_bound:" + to_string(cert.degree_le_bound) +
           ",bipartite:" + to_string(cert.bipartite) + ",congruence:" + to_string(cert.congruence) +
           "\n";
    out += "seed=" + std::to_string(cert.seed) + "\n";
    return out;
}

std::string export_dot(const WitnessSpec& w, std::uint64_t limit) {
    const HammingParams& p = w.params;
    if (!p.enumerable(limit))
        throw EnumerationLimitError("export_dot: k^n = " + p.vertex_count().get_str() +
                                    " exceeds limit " + std::to_string(limit));
    const std::uint64_t total = *p.vertex_count_u64();
    const int k = p.k();

    std::vector<std::string> node_lines, edge_lines;
    for_each_vertex(p, 0, total, [&](VertexId, const Vertex& v) {
        if (!in_witness(v, w)) return;
        const ClassLabel label = classify(v, w.partition, p);
        const std::string name = digit_label(v, k);
        node_lines.push_back("  \"" + name + "\" [side=" +
                             (label.side == Side::X ? "X" : "Y") + "];");
        if (label.side == Side::X)  // every edge has exactly one X-side endpoint
            for (const Vertex& u : witness_neighbors(v, w))
                edge_lines.push_back("  \"" + name + "\" -- \"" + digit_label(u, k) + "\";");
    });

    std::string out = "graph witness {\n  node [shape=circle];\n";
    for (const auto& line : node_lines) out += line + "\n";
    for (const auto& line : edge_lines) out += line + "\n";
    out += "}\n";
    return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    namespace fs = std::filesystem;
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
        if (!stream)
            throw std::runtime_error("write_file_atomic: cannot open " + tmp.string());
        stream.write(content.data(), static_cast<std::streamsize>(content.size()));
        stream.flush();
        if (!stream) throw std::runtime_error("write_file_atomic: write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

}  // namespace hamming
