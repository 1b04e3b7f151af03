#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "syracuse/nat.hpp"
#include "syracuse/trajectory.hpp"

namespace syracuse {

inline constexpr std::uint64_t kDefaultChunkSize = std::uint64_t{1} << 16;

struct VerifyConfig {
    Nat lo{3};
    Nat hi{3};
    std::uint64_t chunk_size = kDefaultChunkSize;  // odd seeds per work unit
    unsigned worker_count = 1;
    std::uint64_t budget = kDefaultBudget;
    std::optional<std::filesystem::path> checkpoint_path;
    /// When set, orbits that drop below lo count as verified. Otherwise lo must be 3.
    bool assume_below_lo_verified = false;
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const VerifyConfig& config);

struct StoppingTimeRecord {
    Nat k;
    std::uint64_t collatz_steps;
    friend bool operator==(const StoppingTimeRecord&, const StoppingTimeRecord&) = default;
};

struct PeakRecord {
    Nat k;
    Nat peak;
    friend bool operator==(const PeakRecord&, const PeakRecord&) = default;
};

struct VerifyReport {
    Nat lo;
    Nat hi;
    std::uint64_t chunk_size = 0;
    std::uint64_t budget = 0;
    bool assume_below_lo_verified = false;
    std::uint64_t seed_count = 0;
    std::uint64_t verified_count = 0;
    std::vector<Nat> failures;  // seeds whose f-orbit returned to the seed
    std::vector<Nat> budget_exceeded;
    std::vector<StoppingTimeRecord> stopping_time_records;
    std::vector<PeakRecord> peak_records;

    friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// Seed that was a running maximum (of steps or peak) within its chunk.
struct LocalRecord {
    Nat k;
    std::uint64_t collatz_steps;
    Nat peak;
    friend bool operator==(const LocalRecord&, const LocalRecord&) = default;
};

/// Everything a completed chunk contributes to the final report.
struct ChunkResult {
    std::uint64_t chunk_index = 0;
    std::uint64_t verified_count = 0;
    std::vector<LocalRecord> local_records;
    std::vector<Nat> budget_exceeded;
    std::vector<Nat> failures;
    friend bool operator==(const ChunkResult&, const ChunkResult&) = default;
};

/// Hash of every field that determines the report (not workers or checkpoint path).
std::string config_hash(const VerifyConfig& config);

std::uint64_t seed_count(const VerifyConfig& config);
std::uint64_t chunk_count(const VerifyConfig& config);

/// Computes one chunk with the fixed-width kernel, falling back to exact arithmetic on overflow.
ChunkResult run_chunk(const VerifyConfig& config, std::uint64_t chunk_index);

/// Combines chunk results (any order) into the final report; records are
/// reduced sequentially in ascending chunk order.
VerifyReport merge_chunks(const VerifyConfig& config, std::vector<ChunkResult> chunks);

/// Parallel range verification. Resumes from and appends to the checkpoint when one is configured.
VerifyReport verify_range(const VerifyConfig& config);

/// Completes at most `max_chunks` further chunks into the configured checkpoint and stops.
/// Returns the number of chunks completed by this call.
std::uint64_t verify_partial(const VerifyConfig& config, std::uint64_t max_chunks);

/// Serial reference: orbit_stats per seed, no chunking, no fixed-width fast path.
VerifyReport verify_range_reference(const VerifyConfig& config);

/// Full-orbit record lists over odd seeds in [lo, hi]; lo may be 1.
struct RecordLists {
    std::vector<StoppingTimeRecord> stopping_time_records;
    std::vector<PeakRecord> peak_records;
    friend bool operator==(const RecordLists&, const RecordLists&) = default;
};
RecordLists records(const Nat& lo, const Nat& hi, unsigned workers = 1,
                    std::uint64_t budget = kDefaultBudget);

/// Canonical single-line JSON encoding; byte-identical for equal reports.
std::string report_json(const VerifyReport& report);
/// Inverse of report_json. Throws std::invalid_argument on malformed input.
VerifyReport parse_report_json(const std::string& text);

}  // namespace syracuse
