#include "syracuse/checkpoint.hpp"

#include <json.hpp>

#include <sstream>

namespace syracuse {
namespace {

using json = nlohmann::ordered_json;

std::string dec(std::uint64_t v) { return std::to_string(v); }

std::uint64_t parse_u64(const json& j, const char* key) {
    const Nat v = Nat::parse(j.at(key).get<std::string>());
    auto small = v.to_u64();
    if (!small) throw std::invalid_argument(std::string(key) + " exceeds 64 bits");
    return *small;
}

Nat parse_nat(const json& j) { return Nat::parse(j.get<std::string>()); }

}  // namespace

CheckpointHeader make_header(const VerifyConfig& config) {
    return {kCheckpointSchemaVersion, config.lo, config.hi, config.chunk_size, config_hash(config)};
}

std::string encode_header(const CheckpointHeader& header) {
    json j;
    j["schema_version"] = dec(header.schema_version);
    j["lo"] = header.lo.to_string();
    j["hi"] = header.hi.to_string();
    j["chunk_size"] = dec(header.chunk_size);
    j["config_hash"] = header.config_hash;
    return j.dump();
}

std::string encode_chunk(const ChunkResult& chunk) {
    json j;
    j["chunk_index"] = dec(chunk.chunk_index);
    j["verified_count"] = dec(chunk.verified_count);
    json records = json::array();
    for (const LocalRecord& r : chunk.local_records) {
        records.push_back(
            {{"k", r.k.to_string()}, {"collatz_steps", dec(r.collatz_steps)}, {"peak", r.peak.to_string()}});
    }
    j["local_records"] = std::move(records);
    json exceeded = json::array();
    for (const Nat& k : chunk.budget_exceeded) exceeded.push_back(k.to_string());
    j["budget_exceeded"] = std::move(exceeded);
    json failures = json::array();
    for (const Nat& k : chunk.failures) failures.push_back(k.to_string());
    j["failures"] = std::move(failures);
    return j.dump();
}

CheckpointHeader decode_header(const std::string& line) {
    try {
        const json j = json::parse(line);
        CheckpointHeader h;
        h.schema_version = parse_u64(j, "schema_version");
        if (h.schema_version != kCheckpointSchemaVersion) {
            throw CheckpointCorrupt("unsupported checkpoint schema_version " +
                                    dec(h.schema_version));
        }
        h.lo = parse_nat(j.at("lo"));
        h.hi = parse_nat(j.at("hi"));
        h.chunk_size = parse_u64(j, "chunk_size");
        h.config_hash = j.at("config_hash").get<std::string>();
        return h;
    } catch (const CheckpointCorrupt&) {
        throw;
    } catch (const std::exception& e) {
        throw CheckpointCorrupt(std::string("malformed checkpoint header: ") + e.what());
    }
}

ChunkResult decode_chunk(const std::string& line) {
    try {
        const json j = json::parse(line);
        ChunkResult c;
        c.chunk_index = parse_u64(j, "chunk_index");
        c.verified_count = parse_u64(j, "verified_count");
        for (const json& r : j.at("local_records")) {
            c.local_records.push_back(
                {parse_nat(r.at("k")), parse_u64(r, "collatz_steps"), parse_nat(r.at("peak"))});
        }
        if (j.contains("budget_exceeded")) {
            for (const json& k : j.at("budget_exceeded")) c.budget_exceeded.push_back(parse_nat(k));
        }
        if (j.contains("failures")) {
            for (const json& k : j.at("failures")) c.failures.push_back(parse_nat(k));
        }
        return c;
    } catch (const std::exception& e) {
        throw CheckpointCorrupt(std::string("malformed checkpoint chunk record: ") + e.what());
    }
}

void checkpoint_write(const std::filesystem::path& path, const VerifyCheckpoint& state) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CheckpointWriteError("cannot open checkpoint for writing: " + path.string());
    out << encode_header(state.header) << '\n';
    for (const auto& [index, chunk] : state.completed_chunks) out << encode_chunk(chunk) << '\n';
    out.flush();
    if (!out) throw CheckpointWriteError("failed writing checkpoint: " + path.string());
}

std::uintmax_t checkpoint_valid_length(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CheckpointMissing("checkpoint not found: " + path.string());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto last_newline = content.rfind('\n');
    return last_newline == std::string::npos ? 0 : last_newline + 1;
}

VerifyCheckpoint checkpoint_read(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) {
        throw CheckpointMissing("checkpoint not found: " + path.string());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CheckpointMissing("checkpoint not readable: " + path.string());
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    // Only newline-terminated lines count; a torn final write is dropped.
    const auto last_newline = content.rfind('\n');
    if (last_newline == std::string::npos) {
        throw CheckpointCorrupt("checkpoint has no complete header line: " + path.string());
    }
    content.resize(last_newline + 1);

    std::istringstream lines(content);
    std::string line;
    std::getline(lines, line);
    VerifyCheckpoint state;
    state.header = decode_header(line);
    while (std::getline(lines, line)) {
        if (line.empty()) throw CheckpointCorrupt("empty line in checkpoint");
        ChunkResult chunk = decode_chunk(line);
        const std::uint64_t index = chunk.chunk_index;
        auto [it, inserted] = state.completed_chunks.emplace(index, std::move(chunk));
        if (!inserted && it->second != decode_chunk(line)) {
            throw CheckpointCorrupt("conflicting records for chunk " + dec(index));
        }
    }
    return state;
}

CheckpointAppender::CheckpointAppender(const std::filesystem::path& path,
                                       const CheckpointHeader& header, bool fresh)
    : path_(path) {
    if (fresh) {
        out_.open(path, std::ios::binary | std::ios::trunc);
        if (!out_) throw CheckpointWriteError("cannot create checkpoint: " + path.string());
        out_ << encode_header(header) << '\n';
        out_.flush();
    } else {
        std::error_code ec;
        std::filesystem::resize_file(path, checkpoint_valid_length(path), ec);
        if (ec) throw CheckpointWriteError("cannot truncate checkpoint tail: " + ec.message());
        out_.open(path, std::ios::binary | std::ios::app);
        if (!out_) throw CheckpointWriteError("cannot append to checkpoint: " + path.string());
    }
    if (!out_) throw CheckpointWriteError("failed writing checkpoint: " + path.string());
}

void CheckpointAppender::append(const ChunkResult& chunk) {
    out_ << encode_chunk(chunk) << '\n';
    out_.flush();
    if (!out_) throw CheckpointWriteError("failed writing checkpoint: " + path_.string());
}

}  // namespace syracuse
