#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hamming/io.hpp"

using namespace hamming;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("enum names are spelled the way the file format expects") {
    CHECK(to_string(VerifyMode::exhaustive) == "exhaustive");
    CHECK(to_string(VerifyMode::sampled) == "sampled");
    CHECK(to_string(VerifyMode::counts_only) == "counts-only");
    CHECK(to_string(CheckState::pass) == "pass");
    CHECK(to_string(CheckState::fail) == "fail");
    CHECK(to_string(CheckState::skipped) == "skipped");
}

TEST_CASE("certificate text is byte-exact: exhaustive run on the 4-cycle") {
    const WitnessCertificate c =
        certify(HammingParams(2, 2), make_partition(2), VerifyMode::exhaustive);
    const std::string want =
        "hamming-witness-cert v1\n"
        "n=2\n"
        "k=2\n"
        "q=1\n"
        "blocks=1,2\n"
        "i1=0\n"
        "i2=1\n"
        "x_counts=1,0\n"
        "y_counts=1,2\n"
        "size=3\n"
        "alpha=2\n"
        "delta_bound=2\n"
        "delta_observed=2\n"
        "mode=exhaustive\n"
        "checks=size_gt_alpha:pass,degree_le_bound:pass,bipartite:pass,congruence:pass\n"
        "seed=0\n";
    CHECK(certificate_text(c) == want);
}

TEST_CASE("certificate text is byte-exact: counts-only run") {
    const WitnessCertificate c =
        certify(HammingParams(2, 3), make_partition(2), VerifyMode::counts_only);
    const std::string want =
        "hamming-witness-cert v1\n"
        "n=2\n"
        "k=3\n"
        "q=1\n"
        "blocks=1,2\n"
        "i1=0\n"
        "i2=1\n"
        "x_counts=1,0,0\n"
        "y_counts=2,3,3\n"
        "size=4\n"
        "alpha=3\n"
        "delta_bound=2\n"
        "delta_observed=none\n"
        "mode=counts-only\n"
        "checks=size_gt_alpha:pass,degree_le_bound:skipped,bipartite:skipped,congruence:pass\n"
        "seed=0\n";
    CHECK(certificate_text(c) == want);
}

TEST_CASE("multi-block partitions serialize blocks with both separators") {
    const WitnessCertificate c =
        certify(HammingParams(5, 2), make_partition(5), VerifyMode::exhaustive);
    const std::string text = certificate_text(c);
    CHECK(text.find("q=2\n") != std::string::npos);
    CHECK(text.find("blocks=1,2,3;4,5\n") != std::string::npos);
}

TEST_CASE("dot export lists members in rank order, edges from the x side") {
    const WitnessSpec w = make_witness_spec(HammingParams(2, 2), make_partition(2), 0, 1);
    const std::string want =
        "graph witness {\n"
        "  node [shape=circle];\n"
        "  \"00\" [side=X];\n"
        "  \"10\" [side=Y];\n"
        "  \"01\" [side=Y];\n"
        "  \"00\" -- \"10\";\n"
        "  \"00\" -- \"01\";\n"
        "}\n";
    CHECK(export_dot(w) == want);
}

TEST_CASE("dot export of an equal-residue pair is edgeless") {
    const WitnessSpec w = make_witness_spec(HammingParams(2, 2), make_partition(2), 0, 0);
    const std::string want =
        "graph witness {\n"
        "  node [shape=circle];\n"
        "  \"00\" [side=X];\n"
        "  \"11\" [side=Y];\n"
        "}\n";
    CHECK(export_dot(w) == want);
}

TEST_CASE("dot labels switch to dotted digits when they would be ambiguous") {
    const WitnessSpec w = make_witness_spec(HammingParams(2, 13), make_partition(2), 0, 1);
    const std::string dot = export_dot(w);
    CHECK(dot.find("\"0.0\" [side=X];") != std::string::npos);
    CHECK(dot.find("\"0.0\" -- \"1.0\";") != std::string::npos);
    CHECK(dot.find("\"0.0\" -- \"0.1\";") != std::string::npos);
    CHECK(dot.find("\"12.2\" [side=Y];") != std::string::npos);  // digit sum 14 = 1 mod 13
}

TEST_CASE("dot export refuses oversized graphs unless the cap is raised") {
    const WitnessSpec w = make_witness_spec(HammingParams(5, 2), make_partition(5), 0, 1);
    CHECK_THROWS_AS(export_dot(w, 31), EnumerationLimitError);
    CHECK(export_dot(w, 32).substr(0, 15) == "graph witness {");
}

TEST_CASE("atomic writes land complete, overwrite in place, and fail loudly") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "hamming-io-test";
    fs::create_directories(dir);
    const fs::path target = dir / "cert.txt";

    const std::string first = "first\ncontents\n";
    write_file_atomic(target, first);
    CHECK(slurp(target) == first);
    CHECK(!fs::exists(dir / "cert.txt.tmp"));  // temp name must not survive

    std::string second = "second";
    second.push_back('\0');
    second += "binary\n";
    write_file_atomic(target, second);
    CHECK(slurp(target) == second);

    CHECK_THROWS_AS(write_file_atomic(dir / "missing-subdir" / "cert.txt", "x"),
                    std::runtime_error);
    fs::remove_all(dir);
}
