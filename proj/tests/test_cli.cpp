#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "run_cli.hpp"
#include "syracuse/json_io.hpp"

using namespace syracuse;
namespace fs = std::filesystem;

namespace {

io::json only_record(const cli::Result& r) {
    const auto ls = cli::lines(r.out);
    REQUIRE(ls.size() == 1);
    return io::json::parse(ls[0]);
}

}  // namespace

TEST_CASE("classify emits one json record") {
    const auto r = cli::run({"classify", "7", "--format", "json"});
    CHECK(r.exit_code == 0);
    const io::json j = only_record(r);
    CHECK(j.at("case") == "Case3");
    CHECK(j.at("ell") == "0");
    CHECK(j.at("p") == "3");
    CHECK(j.at("h") == "1");
    CHECK(io::decode_case_tag(j) == classify(OddNat{7}));
}

TEST_CASE("step under f and g") {
    auto r = cli::run({"step", "1", "--map", "f", "--format", "json"});
    CHECK(r.exit_code == 0);
    CHECK(io::decode_step(only_record(r)) == SyracuseStep{OddNat{1}, 2});

    r = cli::run({"step", "7", "--count", "3", "--format", "json"});
    CHECK(io::decode_step(only_record(r)).next == OddNat{13});

    r = cli::run({"step", "6", "--map", "g", "--format", "json"});
    CHECK(only_record(r).at("next") == "3");

    r = cli::run({"step", "1267650600228229401496703205375"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("next=1901475900342344102245054808063") != std::string::npos);
}

TEST_CASE("records parse back into domain types") {
    auto r = cli::run({"decompose", "95", "--format", "json"});
    CHECK(io::encode(io::decode_decomposition(only_record(r))) == io::encode(decompose(OddNat{95})));

    r = cli::run({"descend", "7", "--format", "json"});
    CHECK(r.exit_code == 0);
    CHECK(io::encode(io::decode_witness(only_record(r))) == io::encode(descend(OddNat{7})));

    r = cli::run({"preimages", "5", "--s-max", "10", "--format", "json"});
    CHECK(io::decode_preimages(only_record(r)).members == preimages(OddNat{5}, 10).members);

    r = cli::run({"peak", "--p", "5", "--h", "1", "--format", "json"});
    CHECK(io::encode(io::decode_peak(only_record(r))) == io::encode(peak_value(compose(5, OddNat{1}))));

    r = cli::run({"orbit", "27", "--format", "json"});
    CHECK(r.exit_code == 0);
    const TrajectoryStats s = io::decode_stats(only_record(r));
    CHECK(s.collatz_steps == 111);
    CHECK(s.syracuse_steps == 41);
    CHECK(s.peak == Nat{9232});
}

TEST_CASE("expand lists the closed-form chain") {
    const auto r = cli::run({"expand", "31", "--format", "json"});
    CHECK(r.exit_code == 0);
    const io::json j = only_record(r);
    const Decomposition d = decompose(OddNat{31});
    REQUIRE(j.at("chain").size() == d.p - 1);
    for (std::uint64_t n = 1; n < d.p; ++n) {
        CHECK(j.at("chain")[n - 1] == f_iterate(OddNat{31}, n).to_string());
    }
}

TEST_CASE("claims exit codes follow the verdict") {
    auto r = cli::run({"claims", "--id", "C3_R_INTEGRAL", "--from", "3", "--to", "1000", "--format", "json"});
    CHECK(r.exit_code == 1);
    const ClaimReport report = io::decode_claim_report(only_record(r));
    CHECK(report.smallest == Nat{7});
    CHECK(report.verdict == Verdict::Fails);

    r = cli::run({"claims", "--id", "C1_DESCENT", "--from", "3", "--to", "1000", "--format", "json"});
    CHECK(r.exit_code == 0);

    r = cli::run({"claims", "--from", "3", "--to", "200", "--format", "json"});
    CHECK(r.exit_code == 1);
    CHECK(cli::lines(r.out).size() == kAllClaims.size());
}

TEST_CASE("verify and records") {
    auto r = cli::run({"verify", "--from", "3", "--to", "9999", "--workers", "2", "--format", "json"});
    CHECK(r.exit_code == 0);
    const io::json j = only_record(r);
    CHECK(j.at("verified_count") == "4999");

    r = cli::run({"verify", "--from", "3", "--to", "999", "--budget", "3"});
    CHECK(r.exit_code == 2);

    r = cli::run({"records", "--from", "1", "--to", "30", "--format", "csv"});
    CHECK(r.exit_code == 0);
    const auto ls = cli::lines(r.out);
    CHECK(ls.front() == "command,kind,k,collatz_steps");
    CHECK(std::count(ls.begin(), ls.end(), "records,stopping_time,27,111") == 1);
    CHECK(std::count(ls.begin(), ls.end(), "records,peak,27,9232") == 1);
}

TEST_CASE("orbit budget exhaustion exits 2") {
    const auto r = cli::run({"orbit", "27", "--budget", "5"});
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("membership=BudgetExceeded") != std::string::npos);
}

TEST_CASE("usage errors exit 3 with nothing on stdout") {
    for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
             {},
             {"bogus"},
             {"step", "8"},
             {"step", "-3"},
             {"step", "abc"},
             {"classify", "1"},
             {"classify", "7", "--format", "xml"},
             {"claims", "--id", "NOPE", "--from", "3", "--to", "9"},
             {"verify", "--from", "5", "--to", "9"},
             {"verify", "--from", "3", "--to", "9", "--chunk-size", "0"},
             {"preimages", "5", "--s-max", "0"},
             {"peak", "--p", "1", "--h", "1"},
         }) {
        const auto r = cli::run(args);
        CAPTURE(args.size());
        CHECK(r.exit_code == 3);
        CHECK(r.out.empty());
    }
}

TEST_CASE("corrupt checkpoint exits 4") {
    const fs::path dir = fs::temp_directory_path() / "syracuse_cli_tests";
    fs::create_directories(dir);
    const fs::path p = dir / "corrupt.jsonl";
    {
        std::ofstream out(p, std::ios::trunc);
        out << "garbage\nmore garbage\n";
    }
    const auto r = cli::run({"verify", "--from", "3", "--to", "999", "--checkpoint", p.string()});
    CHECK(r.exit_code == 4);
    CHECK(r.out.empty());
}
