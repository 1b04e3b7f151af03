#pragma once

// Structured-record encodings of the domain types. Every integer is written as
// a decimal string so values of any magnitude survive consumers limited to
// doubles or 64-bit integers. Each decoder inverts its encoder exactly and
// throws std::invalid_argument on malformed input.

#include <json.hpp>

#include "syracuse/claims.hpp"
#include "syracuse/core.hpp"
#include "syracuse/descent.hpp"
#include "syracuse/trajectory.hpp"

namespace syracuse::io {

using json = nlohmann::ordered_json;

json encode(const Nat& v);
json encode(std::uint64_t v);
Nat decode_nat(const json& j);
OddNat decode_odd(const json& j);
std::uint64_t decode_u64(const json& j);

json encode(const SyracuseStep& step);
SyracuseStep decode_step(const json& j);

json encode(const Decomposition& d);
Decomposition decode_decomposition(const json& j);

json encode(const CaseTag& tag);
CaseTag decode_case_tag(const json& j);

json encode(const DescentWitness& w);
DescentWitness decode_witness(const json& j);

json encode(const PreimageSet& set);
PreimageSet decode_preimages(const json& j);

json encode(const PeakValue& peak);
PeakValue decode_peak(const json& j);

json encode(const TrajectoryStats& stats);
TrajectoryStats decode_stats(const json& j);

json encode(const ClaimReport& report);
ClaimReport decode_claim_report(const json& j);

}  // namespace syracuse::io
