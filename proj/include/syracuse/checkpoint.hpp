#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

#include "syracuse/verifier.hpp"

namespace syracuse {

inline constexpr std::uint64_t kCheckpointSchemaVersion = 1;

struct CheckpointHeader {
    std::uint64_t schema_version = kCheckpointSchemaVersion;
    Nat lo;
    Nat hi;
    std::uint64_t chunk_size = 0;
    std::string config_hash;
    friend bool operator==(const CheckpointHeader&, const CheckpointHeader&) = default;
};

struct VerifyCheckpoint {
    CheckpointHeader header;
    std::map<std::uint64_t, ChunkResult> completed_chunks;
    friend bool operator==(const VerifyCheckpoint&, const VerifyCheckpoint&) = default;
};

class CheckpointMissing : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unparseable content, unknown schema, or a header that does not match the run.
class CheckpointCorrupt : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CheckpointWriteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

CheckpointHeader make_header(const VerifyConfig& config);

std::string encode_header(const CheckpointHeader& header);
std::string encode_chunk(const ChunkResult& chunk);
CheckpointHeader decode_header(const std::string& line);
ChunkResult decode_chunk(const std::string& line);

/// Writes a complete checkpoint file, replacing any existing one.
void checkpoint_write(const std::filesystem::path& path, const VerifyCheckpoint& state);

/// Reads a checkpoint. A final line without a terminating newline is discarded.
VerifyCheckpoint checkpoint_read(const std::filesystem::path& path);

/// Byte length of the checkpoint prefix made of complete lines.
std::uintmax_t checkpoint_valid_length(const std::filesystem::path& path);

/// Append-only writer; one line per completed chunk, flushed per line.
class CheckpointAppender {
public:
    /// Creates the file with `header` if absent, otherwise drops a truncated tail and appends.
    CheckpointAppender(const std::filesystem::path& path, const CheckpointHeader& header,
                       bool fresh);
    void append(const ChunkResult& chunk);

private:
    std::filesystem::path path_;
    std::ofstream out_;
};

}  // namespace syracuse
