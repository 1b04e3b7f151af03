// Command-line front end for the syracuse library.
//
// Stdout carries data records only (text, json-lines or csv); diagnostics go
// to stderr. Exit codes:
//   0  success / claim holds
//   1  counterexample found
//   2  budget exceeded
//   3  usage or input error
//   4  checkpoint corruption

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "syracuse/checkpoint.hpp"
#include "syracuse/claims.hpp"
#include "syracuse/core.hpp"
#include "syracuse/descent.hpp"
#include "syracuse/json_io.hpp"
#include "syracuse/trajectory.hpp"
#include "syracuse/verifier.hpp"

namespace {

using namespace syracuse;
using json = nlohmann::ordered_json;

enum Exit : int {
    kOk = 0,
    kCounterexample = 1,
    kBudgetExceeded = 2,
    kUsage = 3,
    kCheckpointCorrupt = 4,
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Nat parse_nat_arg(const std::string& text, const char* what) {
    try {
        return Nat::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(what) + ": malformed integer '" + text + "'");
    }
}

OddNat parse_odd_arg(const std::string& text, const char* what) {
    Nat v = parse_nat_arg(text, what);
    if (!v.is_odd()) throw UsageError(std::string(what) + ": expected an odd positive integer, got " + text);
    return OddNat{std::move(v)};
}

std::uint64_t parse_u64_arg(const std::string& text, const char* what) {
    auto v = parse_nat_arg(text, what).to_u64();
    if (!v) throw UsageError(std::string(what) + ": value does not fit in 64 bits");
    return *v;
}

// ---- output ----------------------------------------------------------------

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

class Emitter {
public:
    explicit Emitter(std::string format) : format_(std::move(format)) {}

    void emit(const json& record) {
        if (format_ == "json") {
            std::cout << record.dump() << '\n';
        } else if (format_ == "csv") {
            std::vector<std::string> keys;
            for (const auto& item : record.items()) keys.push_back(item.key());
            if (keys != last_keys_) {
                print_row(keys);
                last_keys_ = keys;
            }
            std::vector<std::string> values;
            for (const auto& item : record.items()) values.push_back(scalar_text(item.value()));
            print_row(values);
        } else {
            bool first = true;
            for (const auto& item : record.items()) {
                std::cout << (first ? "" : " ") << item.key() << '=' << scalar_text(item.value());
                first = false;
            }
            std::cout << '\n';
        }
    }

private:
    static void print_row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            std::cout << (i == 0 ? "" : ",") << csv_field(cells[i]);
        }
        std::cout << '\n';
    }

    std::string format_;
    std::vector<std::string> last_keys_;
};

void merge_into(json& target, const json& payload) {
    for (const auto& item : payload.items()) target[item.key()] = item.value();
}

json with_command(const char* command, const json& payload) {
    json out{{"command", command}};
    merge_into(out, payload);
    return out;
}

// ---- subcommands -----------------------------------------------------------

struct Args {
    std::string format = "text";
    std::string k;
    std::string map = "f";
    std::string count = "1";
    std::string s_max;
    std::string p;
    std::string h;
    std::string budget = std::to_string(kDefaultBudget);
    std::string from;
    std::string to;
    std::string chunk_size = std::to_string(kDefaultChunkSize);
    std::string workers;
    std::string checkpoint;
    bool assume_verified_below = false;
    std::string claim_id;
    std::string limit = "10";
};

unsigned worker_arg(const Args& a) {
    if (a.workers.empty()) return std::max(1U, std::thread::hardware_concurrency());
    const std::uint64_t w = parse_u64_arg(a.workers, "--workers");
    if (w == 0 || w > 4096) throw UsageError("--workers must be between 1 and 4096");
    return static_cast<unsigned>(w);
}

int cmd_step(const Args& a, Emitter& out) {
    const std::uint64_t count = parse_u64_arg(a.count, "--count");
    if (a.map == "g") {
        Nat x = parse_nat_arg(a.k, "k");
        if (x.is_zero()) throw UsageError("k: g is defined on positive integers only");
        const Nat start = x;
        for (std::uint64_t i = 0; i < count; ++i) x = g_step(x);
        out.emit({{"command", "step"}, {"map", "g"}, {"k", start.to_string()},
                  {"count", std::to_string(count)}, {"next", x.to_string()}});
        return kOk;
    }
    const OddNat k = parse_odd_arg(a.k, "k");
    OddNat x = k;
    std::uint64_t valuation = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        const SyracuseStep s = f_step(x);
        valuation += s.valuation;
        x = s.next;
    }
    json record{{"command", "step"}, {"map", "f"}, {"k", k.to_string()}, {"count", std::to_string(count)}};
    merge_into(record, io::encode(SyracuseStep{x, valuation}));
    out.emit(record);
    return kOk;
}

int cmd_decompose(const Args& a, Emitter& out) {
    out.emit(with_command("decompose", io::encode(decompose(parse_odd_arg(a.k, "k")))));
    return kOk;
}

int cmd_classify(const Args& a, Emitter& out) {
    const OddNat k = parse_odd_arg(a.k, "k");
    if (k.value() == Nat{1}) throw UsageError("k = 1 is terminal and has no case");
    const Decomposition d = decompose(k);
    json record = with_command("classify", io::encode(classify(d)));
    record["k"] = k.to_string();
    record["p"] = std::to_string(d.p);
    record["h"] = d.h.to_string();
    out.emit(record);
    return kOk;
}

int cmd_descend(const Args& a, Emitter& out) {
    const OddNat k = parse_odd_arg(a.k, "k");
    if (k.value() == Nat{1}) throw UsageError("k = 1 is terminal and has no case");
    json record{{"command", "descend"}, {"k", k.to_string()}};
    merge_into(record, io::encode(descend(k)));
    out.emit(record);
    return kOk;
}

int cmd_preimages(const Args& a, Emitter& out) {
    const OddNat k = parse_odd_arg(a.k, "k");
    const std::uint64_t s_max = parse_u64_arg(a.s_max, "--s-max");
    if (s_max == 0 || s_max > 100'000) throw UsageError("--s-max must be between 1 and 100000");
    out.emit(with_command("preimages", io::encode(preimages(k, s_max))));
    return kOk;
}

Decomposition decomposition_from_args(const Args& a, bool allow_k) {
    if (allow_k && !a.k.empty()) {
        if (!a.p.empty() || !a.h.empty()) throw UsageError("give either <k> or --p/--h, not both");
        return decompose(parse_odd_arg(a.k, "k"));
    }
    if (a.p.empty() || a.h.empty()) throw UsageError("--p and --h are both required");
    const std::uint64_t p = parse_u64_arg(a.p, "--p");
    if (p == 0 || p > 1'000'000) throw UsageError("--p must be between 1 and 1000000");
    return compose(p, parse_odd_arg(a.h, "--h"));
}

int cmd_expand(const Args& a, Emitter& out) {
    const Decomposition d = decomposition_from_args(a, true);
    if (d.p < 2) throw UsageError("expansion needs p >= 2 (k = " + d.k.to_string() + " has p = 1)");
    json chain = json::array();
    for (std::uint64_t n = 1; n < d.p; ++n) chain.push_back(expansion(d, n).to_string());
    json record = with_command("expand", io::encode(d));
    record["chain"] = std::move(chain);
    record["peak"] = io::encode(peak_value(d));
    out.emit(record);
    return kOk;
}

int cmd_peak(const Args& a, Emitter& out) {
    const Decomposition d = decomposition_from_args(a, false);
    if (d.p < 2) throw UsageError("peak needs p >= 2");
    json record = with_command("peak", io::encode(d));
    merge_into(record, io::encode(peak_value(d)));
    out.emit(record);
    return kOk;
}

int cmd_orbit(const Args& a, Emitter& out) {
    const OddNat k = parse_odd_arg(a.k, "k");
    const std::uint64_t budget = parse_u64_arg(a.budget, "--budget");
    if (budget == 0) throw UsageError("--budget must be at least 1");
    const TrajectoryStats stats = orbit_stats(k, budget);
    json record = with_command("orbit", io::encode(stats));
    record["membership"] = stats.reached_one ? "Verified" : "BudgetExceeded";
    out.emit(record);
    return stats.reached_one ? kOk : kBudgetExceeded;
}

int cmd_verify(const Args& a, Emitter& out) {
    VerifyConfig config;
    config.lo = parse_odd_arg(a.from, "--from").value();
    config.hi = parse_odd_arg(a.to, "--to").value();
    config.chunk_size = parse_u64_arg(a.chunk_size, "--chunk-size");
    config.worker_count = worker_arg(a);
    config.budget = parse_u64_arg(a.budget, "--budget");
    config.assume_below_lo_verified = a.assume_verified_below;
    if (!a.checkpoint.empty()) config.checkpoint_path = a.checkpoint;
    try {
        validate(config);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const VerifyReport report = verify_range(config);
    out.emit(with_command("verify", json::parse(report_json(report))));
    if (!report.failures.empty()) return kCounterexample;
    if (!report.budget_exceeded.empty()) return kBudgetExceeded;
    return kOk;
}

int cmd_records(const Args& a, Emitter& out) {
    const Nat lo = parse_nat_arg(a.from, "--from");
    const Nat hi = parse_nat_arg(a.to, "--to");
    if (lo > hi) throw UsageError("--from must not exceed --to");
    const RecordLists lists = records(lo, hi, worker_arg(a));
    for (const auto& r : lists.stopping_time_records) {
        out.emit({{"command", "records"}, {"kind", "stopping_time"}, {"k", r.k.to_string()},
                  {"collatz_steps", std::to_string(r.collatz_steps)}});
    }
    for (const auto& r : lists.peak_records) {
        out.emit({{"command", "records"}, {"kind", "peak"}, {"k", r.k.to_string()},
                  {"peak", r.peak.to_string()}});
    }
    return kOk;
}

int cmd_claims(const Args& a, Emitter& out) {
    const Nat lo = parse_nat_arg(a.from, "--from");
    const Nat hi = parse_nat_arg(a.to, "--to");
    if (lo > hi) throw UsageError("--from must not exceed --to");
    const std::uint64_t limit = parse_u64_arg(a.limit, "--limit");
    if (limit == 0) throw UsageError("--limit must be at least 1");
    const unsigned workers = worker_arg(a);

    std::vector<ClaimReport> reports;
    if (a.claim_id.empty()) {
        reports = run_all(lo, hi, limit, workers);
    } else {
        ClaimId id{};
        try {
            id = parse_claim_id(a.claim_id);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        reports.push_back(check_claim(id, lo, hi, limit, workers));
    }
    int code = kOk;
    for (const ClaimReport& r : reports) {
        json record = with_command("claims", io::encode(r));
        record["statement"] = std::string(claim_info(r.claim).statement);
        out.emit(record);
        if (r.verdict == Verdict::Fails) code = kCounterexample;
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Syracuse map toolkit: orbits, case analysis, claim checks and range verification"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.fallthrough();
    app.require_subcommand(1);
    Args a;
    app.add_option("--format", a.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    auto* step = app.add_subcommand("step", "Apply g or f to a value");
    step->add_option("k", a.k, "Starting value")->required();
    step->add_option("--map", a.map, "Map to apply")->check(CLI::IsMember({"g", "f"}))->capture_default_str();
    step->add_option("--count", a.count, "Number of applications")->capture_default_str();

    auto* dec = app.add_subcommand("decompose", "Write odd k as 2^p h - 1");
    dec->add_option("k", a.k)->required();

    auto* cls = app.add_subcommand("classify", "Residue/parity case of odd k >= 3");
    cls->add_option("k", a.k)->required();

    auto* des = app.add_subcommand("descend", "Descent witness or nonexistence evidence for k");
    des->add_option("k", a.k)->required();

    auto* pre = app.add_subcommand("preimages", "Odd m with f(m) = k for valuations up to --s-max");
    pre->add_option("k", a.k)->required();
    pre->add_option("--s-max", a.s_max)->required();

    auto* expand_cmd = app.add_subcommand("expand", "Closed-form iterates f^n(k) for n < p");
    expand_cmd->add_option("k", a.k);
    expand_cmd->add_option("--p", a.p);
    expand_cmd->add_option("--h", a.h);

    auto* peak = app.add_subcommand("peak", "3^p h - 1 and its odd part f^p(2^p h - 1)");
    peak->add_option("--p", a.p)->required();
    peak->add_option("--h", a.h)->required();

    auto* orb = app.add_subcommand("orbit", "Orbit statistics of an odd seed");
    orb->add_option("k", a.k)->required();
    orb->add_option("--budget", a.budget, "Maximum f-steps")->capture_default_str();

    auto* ver = app.add_subcommand("verify", "Verify every odd seed in a range reaches 1");
    ver->add_option("--from", a.from)->required();
    ver->add_option("--to", a.to)->required();
    ver->add_option("--chunk-size", a.chunk_size)->capture_default_str();
    ver->add_option("--workers", a.workers);
    ver->add_option("--budget", a.budget)->capture_default_str();
    ver->add_option("--checkpoint", a.checkpoint, "Checkpoint file to resume from and append to");
    ver->add_flag("--assume-verified-below", a.assume_verified_below,
                  "Treat orbits that drop below --from as verified");

    auto* rec = app.add_subcommand("records", "Stopping-time and peak records in a range");
    rec->add_option("--from", a.from)->required();
    rec->add_option("--to", a.to)->required();
    rec->add_option("--workers", a.workers);

    auto* clm = app.add_subcommand("claims", "Search for counterexamples to registered claims");
    clm->add_option("--id", a.claim_id);
    clm->add_option("--from", a.from)->required();
    clm->add_option("--to", a.to)->required();
    clm->add_option("--limit", a.limit)->capture_default_str();
    clm->add_option("--workers", a.workers);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }

    Emitter out(a.format);
    try {
        if (step->parsed()) return cmd_step(a, out);
        if (dec->parsed()) return cmd_decompose(a, out);
        if (cls->parsed()) return cmd_classify(a, out);
        if (des->parsed()) return cmd_descend(a, out);
        if (pre->parsed()) return cmd_preimages(a, out);
        if (expand_cmd->parsed()) return cmd_expand(a, out);
        if (peak->parsed()) return cmd_peak(a, out);
        if (orb->parsed()) return cmd_orbit(a, out);
        if (ver->parsed()) return cmd_verify(a, out);
        if (rec->parsed()) return cmd_records(a, out);
        if (clm->parsed()) return cmd_claims(a, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CheckpointCorrupt& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckpointCorrupt;
    } catch (const CheckpointWriteError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
