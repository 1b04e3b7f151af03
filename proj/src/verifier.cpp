#include "syracuse/verifier.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <json.hpp>
#include <stdexcept>

#include "syracuse/checkpoint.hpp"
#include "syracuse/core.hpp"
#include "syracuse/kernel.hpp"

namespace syracuse {
namespace kernel {

ExactOrbit orbit_exact(const Nat& seed, std::uint64_t budget, const Nat& threshold) {
    const Nat one{1};
    Nat x = seed;
    Nat peak = seed;
    std::uint64_t f_steps = 0;
    std::uint64_t collatz = 0;
    bool below = false;
    while (x != one) {
        if (f_steps == budget) {
            return {below ? SeedStatus::Verified : SeedStatus::BudgetExceeded, false, collatz, peak};
        }
        Nat lifted = x * Nat{3} + one;
        if (lifted > peak) peak = lifted;
        const std::uint64_t n = lifted.trailing_zeros();
        x = lifted >> n;
        ++f_steps;
        collatz += 1 + n;
        if (x < threshold) below = true;
        if (x == seed) return {SeedStatus::Failure, false, collatz, peak};
    }
    return {SeedStatus::Verified, true, collatz, peak};
}

}  // namespace kernel

namespace {

using json = nlohmann::ordered_json;

Nat shortcut_threshold(const VerifyConfig& config) {
    return config.assume_below_lo_verified ? config.lo : Nat{2};
}

// Running maxima within one chunk; a seed is kept when it raises either one.
class LocalRecordTracker {
public:
    void offer(const Nat& k, std::uint64_t steps, const Nat& peak, std::vector<LocalRecord>& out) {
        const bool steps_record = !seen_ || steps > max_steps_;
        const bool peak_record = !seen_ || peak > max_peak_;
        if (!steps_record && !peak_record) return;
        if (steps_record) max_steps_ = steps;
        if (peak_record) max_peak_ = peak;
        seen_ = true;
        out.push_back({k, steps, peak});
    }

private:
    bool seen_ = false;
    std::uint64_t max_steps_ = 0;
    Nat max_peak_;
};

void validate_shape(const VerifyConfig& config) {
    if (!config.lo.is_odd() || !config.hi.is_odd()) {
        throw std::invalid_argument("lo and hi must be odd positive integers");
    }
    if (config.lo > config.hi) throw std::invalid_argument("lo must not exceed hi");
    if (config.chunk_size == 0) throw std::invalid_argument("chunk_size must be at least 1");
    if (config.worker_count == 0) throw std::invalid_argument("worker_count must be at least 1");
    if (config.budget == 0) throw std::invalid_argument("budget must be at least 1");
    if (!((config.hi - config.lo) >> 1).to_u64()) {
        throw std::invalid_argument("range holds more than 2^64 seeds");
    }
}

std::vector<ChunkResult> run_chunks(const VerifyConfig& config,
                                    const std::vector<std::uint64_t>& pending,
                                    CheckpointAppender* appender) {
    std::vector<ChunkResult> results(pending.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(config.worker_count))
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(pending.size()); ++i) {
        try {
            ChunkResult chunk = run_chunk(config, pending[static_cast<std::size_t>(i)]);
            if (appender != nullptr) {
#pragma omp critical(syracuse_checkpoint_writer)
                appender->append(chunk);
            }
            results[static_cast<std::size_t>(i)] = std::move(chunk);
        } catch (...) {
#pragma omp critical(syracuse_verify_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return results;
}

struct ResumeState {
    std::vector<ChunkResult> done;
    std::vector<std::uint64_t> pending;
    std::optional<CheckpointAppender> appender;
};

ResumeState open_resume(const VerifyConfig& config) {
    ResumeState state;
    const std::uint64_t total = chunk_count(config);
    std::vector<bool> completed(total, false);
    if (config.checkpoint_path) {
        const CheckpointHeader expected = make_header(config);
        bool fresh = true;
        try {
            VerifyCheckpoint existing = checkpoint_read(*config.checkpoint_path);
            if (existing.header != expected) {
                throw CheckpointCorrupt("checkpoint was written for a different configuration (hash " +
                                        existing.header.config_hash + ", expected " +
                                        expected.config_hash + ")");
            }
            for (auto& [index, chunk] : existing.completed_chunks) {
                if (index >= total) {
                    throw CheckpointCorrupt("checkpoint chunk index out of range: " +
                                            std::to_string(index));
                }
                completed[index] = true;
                state.done.push_back(std::move(chunk));
            }
            fresh = false;
        } catch (const CheckpointMissing&) {
            fresh = true;
        }
        state.appender.emplace(*config.checkpoint_path, expected, fresh);
    }
    for (std::uint64_t i = 0; i < total; ++i) {
        if (!completed[i]) state.pending.push_back(i);
    }
    return state;
}

json nat_array(const std::vector<Nat>& values) {
    json out = json::array();
    for (const Nat& v : values) out.push_back(v.to_string());
    return out;
}

std::vector<Nat> parse_nat_array(const json& j) {
    std::vector<Nat> out;
    for (const json& v : j) out.push_back(Nat::parse(v.get<std::string>()));
    return out;
}

std::uint64_t parse_u64_field(const json& j, const char* key) {
    auto v = Nat::parse(j.at(key).get<std::string>()).to_u64();
    if (!v) throw std::invalid_argument(std::string(key) + " exceeds 64 bits");
    return *v;
}

}  // namespace

void validate(const VerifyConfig& config) {
    validate_shape(config);
    if (!config.assume_below_lo_verified && config.lo != Nat{3}) {
        throw std::invalid_argument(
            "lo must be 3 unless seeds below lo are assumed verified");
    }
}

std::string config_hash(const VerifyConfig& config) {
    const std::string canonical = "v1|" + config.lo.to_string() + "|" + config.hi.to_string() + "|" +
                                  std::to_string(config.chunk_size) + "|" +
                                  std::to_string(config.budget) + "|" +
                                  (config.assume_below_lo_verified ? "1" : "0");
    // FNV-1a, 64-bit
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return std::to_string(h);
}

std::uint64_t seed_count(const VerifyConfig& config) {
    return *((config.hi - config.lo) >> 1).to_u64() + 1;
}

std::uint64_t chunk_count(const VerifyConfig& config) {
    const std::uint64_t seeds = seed_count(config);
    return seeds / config.chunk_size + (seeds % config.chunk_size != 0 ? 1 : 0);
}

ChunkResult run_chunk(const VerifyConfig& config, std::uint64_t chunk_index) {
    const std::uint64_t seeds = seed_count(config);
    const std::uint64_t first = chunk_index * config.chunk_size;
    if (first >= seeds) throw std::out_of_range("chunk index past end of range");
    const std::uint64_t count = std::min(config.chunk_size, seeds - first);

    ChunkResult out;
    out.chunk_index = chunk_index;
    LocalRecordTracker tracker;
    const Nat threshold = shortcut_threshold(config);
    const Nat start = config.lo + (Nat{first} << 1);

    auto tally = [&](const Nat& k, kernel::SeedStatus status) {
        switch (status) {
            case kernel::SeedStatus::Verified:
                ++out.verified_count;
                break;
            case kernel::SeedStatus::BudgetExceeded:
                out.budget_exceeded.push_back(k);
                break;
            case kernel::SeedStatus::Failure:
                out.failures.push_back(k);
                break;
        }
    };

    auto run_exact = [&](const Nat& k) {
        const kernel::ExactOrbit orbit = kernel::orbit_exact(k, config.budget, threshold);
        tally(k, orbit.status);
        if (orbit.complete) tracker.offer(k, orbit.collatz_steps, orbit.peak, out.local_records);
    };

    const Nat last = start + (Nat{count - 1} << 1);
    const auto small_start = start.to_u128();
    const auto small_last = last.to_u128();
    const auto small_threshold = threshold.to_u128();
    if (small_start && small_last && small_threshold) {
        for (u128 k = *small_start;; k += 2) {
            const kernel::FastOrbit orbit = kernel::orbit_fast(k, config.budget, *small_threshold);
            if (orbit.overflow) {
                run_exact(Nat::from_u128(k));
            } else {
                tally(Nat::from_u128(k), orbit.status);
                if (orbit.complete) {
                    tracker.offer(Nat::from_u128(k), orbit.collatz_steps,
                                  Nat::from_u128(orbit.peak), out.local_records);
                }
            }
            if (k == *small_last) break;
        }
    } else {
        Nat k = start;
        for (std::uint64_t i = 0; i < count; ++i, k += Nat{2}) run_exact(k);
    }
    return out;
}

VerifyReport merge_chunks(const VerifyConfig& config, std::vector<ChunkResult> chunks) {
    std::sort(chunks.begin(), chunks.end(),
              [](const ChunkResult& a, const ChunkResult& b) { return a.chunk_index < b.chunk_index; });
    const std::uint64_t total = chunk_count(config);
    if (chunks.size() != total) {
        throw std::logic_error("merge needs all " + std::to_string(total) + " chunks, got " +
                               std::to_string(chunks.size()));
    }
    for (std::uint64_t i = 0; i < total; ++i) {
        if (chunks[i].chunk_index != i) throw std::logic_error("duplicate or missing chunk index");
    }

    VerifyReport report;
    report.lo = config.lo;
    report.hi = config.hi;
    report.chunk_size = config.chunk_size;
    report.budget = config.budget;
    report.assume_below_lo_verified = config.assume_below_lo_verified;
    report.seed_count = seed_count(config);

    bool seen = false;
    std::uint64_t max_steps = 0;
    Nat max_peak;
    for (ChunkResult& chunk : chunks) {
        report.verified_count += chunk.verified_count;
        for (Nat& k : chunk.budget_exceeded) report.budget_exceeded.push_back(std::move(k));
        for (Nat& k : chunk.failures) report.failures.push_back(std::move(k));
        for (const LocalRecord& r : chunk.local_records) {
            if (!seen || r.collatz_steps > max_steps) {
                max_steps = r.collatz_steps;
                report.stopping_time_records.push_back({r.k, r.collatz_steps});
            }
            if (!seen || r.peak > max_peak) {
                max_peak = r.peak;
                report.peak_records.push_back({r.k, r.peak});
            }
            seen = true;
        }
    }
    return report;
}

VerifyReport verify_range(const VerifyConfig& config) {
    validate(config);
    ResumeState state = open_resume(config);
    std::vector<ChunkResult> fresh =
        run_chunks(config, state.pending, state.appender ? &*state.appender : nullptr);
    for (ChunkResult& c : fresh) state.done.push_back(std::move(c));
    return merge_chunks(config, std::move(state.done));
}

std::uint64_t verify_partial(const VerifyConfig& config, std::uint64_t max_chunks) {
    validate(config);
    if (!config.checkpoint_path) {
        throw std::invalid_argument("a partial run needs a checkpoint path");
    }
    ResumeState state = open_resume(config);
    if (state.pending.size() > max_chunks) state.pending.resize(max_chunks);
    run_chunks(config, state.pending, &*state.appender);
    return state.pending.size();
}

VerifyReport verify_range_reference(const VerifyConfig& config) {
    validate(config);
    VerifyReport report;
    report.lo = config.lo;
    report.hi = config.hi;
    report.chunk_size = config.chunk_size;
    report.budget = config.budget;
    report.assume_below_lo_verified = config.assume_below_lo_verified;
    report.seed_count = seed_count(config);

    const Nat threshold = shortcut_threshold(config);
    bool seen = false;
    std::uint64_t max_steps = 0;
    Nat max_peak;
    for (Nat k = config.lo; k <= config.hi; k += Nat{2}) {
        const OddNat seed{k};
        // Verdict: walk f with the shortcut and the return-to-seed check.
        bool below = false;
        bool cycled = false;
        OddNat x = seed;
        for (std::uint64_t step = 0; step < config.budget && x.value() != Nat{1}; ++step) {
            x = f_step(x).next;
            if (x.value() < threshold) below = true;
            if (x == seed) {
                cycled = true;
                break;
            }
        }
        const TrajectoryStats stats = orbit_stats(seed, config.budget);
        if (cycled) {
            report.failures.push_back(k);
        } else if (stats.reached_one || below) {
            ++report.verified_count;
        } else {
            report.budget_exceeded.push_back(k);
        }
        if (!stats.reached_one) continue;
        if (!seen || stats.collatz_steps > max_steps) {
            max_steps = stats.collatz_steps;
            report.stopping_time_records.push_back({k, stats.collatz_steps});
        }
        if (!seen || stats.peak > max_peak) {
            max_peak = stats.peak;
            report.peak_records.push_back({k, stats.peak});
        }
        seen = true;
    }
    return report;
}

RecordLists records(const Nat& lo, const Nat& hi, unsigned workers, std::uint64_t budget) {
    if (lo > hi) throw std::invalid_argument("records: lo must not exceed hi");
    // Only odd seeds are candidates; snap the bounds inward.
    const Nat first = lo.is_odd() ? lo : lo + Nat{1};
    const Nat last = hi.is_odd() ? hi : (hi.is_zero() ? hi : hi - Nat{1});
    if (hi.is_zero() || first > last) return {};
    VerifyConfig config;
    config.lo = first;
    config.hi = last;
    config.worker_count = workers;
    config.budget = budget;
    // Records use full orbits only; lo is never a shortcut frontier here.
    config.assume_below_lo_verified = true;
    validate_shape(config);
    std::vector<std::uint64_t> all(chunk_count(config));
    for (std::uint64_t i = 0; i < all.size(); ++i) all[i] = i;
    VerifyReport report = merge_chunks(config, run_chunks(config, all, nullptr));
    return {std::move(report.stopping_time_records), std::move(report.peak_records)};
}

std::string report_json(const VerifyReport& report) {
    json j;
    j["lo"] = report.lo.to_string();
    j["hi"] = report.hi.to_string();
    j["chunk_size"] = std::to_string(report.chunk_size);
    j["budget"] = std::to_string(report.budget);
    j["assume_below_lo_verified"] = report.assume_below_lo_verified;
    j["seed_count"] = std::to_string(report.seed_count);
    j["verified_count"] = std::to_string(report.verified_count);
    j["failures"] = nat_array(report.failures);
    j["budget_exceeded"] = nat_array(report.budget_exceeded);
    json steps = json::array();
    for (const auto& r : report.stopping_time_records) {
        steps.push_back({{"k", r.k.to_string()}, {"collatz_steps", std::to_string(r.collatz_steps)}});
    }
    j["stopping_time_records"] = std::move(steps);
    json peaks = json::array();
    for (const auto& r : report.peak_records) {
        peaks.push_back({{"k", r.k.to_string()}, {"peak", r.peak.to_string()}});
    }
    j["peak_records"] = std::move(peaks);
    return j.dump();
}

VerifyReport parse_report_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        VerifyReport r;
        r.lo = Nat::parse(j.at("lo").get<std::string>());
        r.hi = Nat::parse(j.at("hi").get<std::string>());
        r.chunk_size = parse_u64_field(j, "chunk_size");
        r.budget = parse_u64_field(j, "budget");
        r.assume_below_lo_verified = j.at("assume_below_lo_verified").get<bool>();
        r.seed_count = parse_u64_field(j, "seed_count");
        r.verified_count = parse_u64_field(j, "verified_count");
        r.failures = parse_nat_array(j.at("failures"));
        r.budget_exceeded = parse_nat_array(j.at("budget_exceeded"));
        for (const json& s : j.at("stopping_time_records")) {
            r.stopping_time_records.push_back(
                {Nat::parse(s.at("k").get<std::string>()), parse_u64_field(s, "collatz_steps")});
        }
        for (const json& p : j.at("peak_records")) {
            r.peak_records.push_back(
                {Nat::parse(p.at("k").get<std::string>()), Nat::parse(p.at("peak").get<std::string>())});
        }
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

}  // namespace syracuse
