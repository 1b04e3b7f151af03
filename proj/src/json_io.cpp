#include "syracuse/json_io.hpp"

#include <stdexcept>
#include <string>

namespace syracuse::io {
namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("malformed ") + what + ": " + e.what());
    }
}

int decode_sign(const json& j) {
    const std::string s = j.get<std::string>();
    if (s == "-1") return -1;
    if (s == "0") return 0;
    if (s == "1") return 1;
    throw std::invalid_argument("sign must be -1, 0 or 1");
}

}  // namespace

json encode(const Nat& v) { return v.to_string(); }
json encode(std::uint64_t v) { return std::to_string(v); }

Nat decode_nat(const json& j) {
    return guarded("integer", [&] { return Nat::parse(j.get<std::string>()); });
}

OddNat decode_odd(const json& j) { return OddNat{decode_nat(j)}; }

std::uint64_t decode_u64(const json& j) {
    auto v = decode_nat(j).to_u64();
    if (!v) throw std::invalid_argument("value exceeds 64 bits");
    return *v;
}

json encode(const SyracuseStep& step) {
    return {{"next", encode(step.next.value())}, {"valuation", encode(step.valuation)}};
}

SyracuseStep decode_step(const json& j) {
    return guarded("step", [&] {
        return SyracuseStep{decode_odd(j.at("next")), decode_u64(j.at("valuation"))};
    });
}

json encode(const Decomposition& d) {
    return {{"k", encode(d.k.value())}, {"p", encode(d.p)}, {"h", encode(d.h.value())}};
}

Decomposition decode_decomposition(const json& j) {
    return guarded("decomposition", [&] {
        Decomposition d{decode_odd(j.at("k")), decode_u64(j.at("p")), decode_odd(j.at("h"))};
        if (d.p == 0 || (d.h.value() << d.p) - Nat{1} != d.k.value()) {
            throw std::invalid_argument("k != 2^p h - 1");
        }
        return d;
    });
}

json encode(const CaseTag& tag) {
    json j{{"case", std::string(case_name(tag.kind))}};
    if (tag.ell) j["ell"] = encode(*tag.ell);
    if (tag.hbar) j["hbar"] = encode(tag.hbar->value());
    return j;
}

CaseTag decode_case_tag(const json& j) {
    return guarded("case tag", [&] {
        CaseTag tag{parse_case(j.at("case").get<std::string>()), std::nullopt, std::nullopt};
        if (j.contains("ell")) tag.ell = decode_nat(j.at("ell"));
        if (j.contains("hbar")) tag.hbar = decode_odd(j.at("hbar"));
        return tag;
    });
}

json encode(const DescentWitness& w) {
    json j = encode(w.tag);
    json chain = json::array();
    for (const OddNat& v : w.witness_chain) chain.push_back(encode(v.value()));
    j["witness_chain"] = std::move(chain);
    json relations = json::array();
    for (const VerifiedRelation& r : w.relations) {
        relations.push_back({{"from", encode(r.from.value())},
                             {"to", encode(r.to.value())},
                             {"valuation", encode(r.valuation)}});
    }
    j["relations"] = std::move(relations);
    json flags = json::array();
    for (const IntegralityFlag& f : w.integrality_flags) {
        flags.push_back({{"formula", f.formula},
                         {"integral", f.integral},
                         {"numerator", encode(f.numerator)},
                         {"denominator", encode(f.denominator)}});
    }
    j["integrality_flags"] = std::move(flags);
    json comparisons = json::array();
    for (const Comparison& c : w.comparisons) {
        comparisons.push_back({{"label", c.label},
                               {"witness", encode(c.witness.value())},
                               {"sign_vs_k", std::to_string(c.sign)}});
    }
    j["comparisons"] = std::move(comparisons);
    if (w.no_preimage) {
        j["no_preimage"] = {{"k_mod3", encode(std::uint64_t{w.no_preimage->k_mod3})},
                            {"s_max_scanned", encode(w.no_preimage->s_max_scanned)},
                            {"preimages_found", encode(w.no_preimage->preimages_found)}};
    }
    return j;
}

DescentWitness decode_witness(const json& j) {
    return guarded("descent witness", [&] {
        DescentWitness w{decode_case_tag(j), {}, {}, {}, {}, std::nullopt};
        for (const json& v : j.at("witness_chain")) w.witness_chain.push_back(decode_odd(v));
        for (const json& r : j.at("relations")) {
            w.relations.push_back(
                {decode_odd(r.at("from")), decode_odd(r.at("to")), decode_u64(r.at("valuation"))});
        }
        for (const json& f : j.at("integrality_flags")) {
            w.integrality_flags.push_back({f.at("formula").get<std::string>(),
                                           f.at("integral").get<bool>(), decode_nat(f.at("numerator")),
                                           decode_nat(f.at("denominator"))});
        }
        for (const json& c : j.at("comparisons")) {
            w.comparisons.push_back({c.at("label").get<std::string>(), decode_odd(c.at("witness")),
                                     decode_sign(c.at("sign_vs_k"))});
        }
        if (j.contains("no_preimage")) {
            const json& e = j.at("no_preimage");
            w.no_preimage = NoPreimageEvidence{static_cast<std::uint32_t>(decode_u64(e.at("k_mod3"))),
                                               decode_u64(e.at("s_max_scanned")),
                                               decode_u64(e.at("preimages_found"))};
        }
        return w;
    });
}

json encode(const PreimageSet& set) {
    json members = json::array();
    for (const Preimage& p : set.members) {
        members.push_back({{"m", encode(p.m.value())}, {"s", encode(p.s)}});
    }
    return {{"k", encode(set.k.value())}, {"s_max", encode(set.s_max)}, {"members", members}};
}

PreimageSet decode_preimages(const json& j) {
    return guarded("preimage set", [&] {
        PreimageSet set{decode_odd(j.at("k")), decode_u64(j.at("s_max")), {}};
        for (const json& p : j.at("members")) {
            set.members.push_back({decode_odd(p.at("m")), decode_u64(p.at("s"))});
        }
        return set;
    });
}

json encode(const PeakValue& peak) {
    return {{"pre_division", encode(peak.pre_division)},
            {"odd_part", encode(peak.odd_part.value())},
            {"valuation", encode(peak.valuation)}};
}

PeakValue decode_peak(const json& j) {
    return guarded("peak value", [&] {
        return PeakValue{decode_nat(j.at("pre_division")), decode_odd(j.at("odd_part")),
                         decode_u64(j.at("valuation"))};
    });
}

json encode(const TrajectoryStats& stats) {
    return {{"seed", encode(stats.seed.value())},
            {"collatz_steps", encode(stats.collatz_steps)},
            {"syracuse_steps", encode(stats.syracuse_steps)},
            {"peak", encode(stats.peak)},
            {"reached_one", stats.reached_one},
            {"budget_exhausted", stats.budget_exhausted}};
}

TrajectoryStats decode_stats(const json& j) {
    return guarded("trajectory stats", [&] {
        return TrajectoryStats{decode_odd(j.at("seed")),
                               decode_u64(j.at("collatz_steps")),
                               decode_u64(j.at("syracuse_steps")),
                               decode_nat(j.at("peak")),
                               j.at("reached_one").get<bool>(),
                               j.at("budget_exhausted").get<bool>()};
    });
}

json encode(const ClaimReport& report) {
    json counterexamples = json::array();
    for (const Nat& c : report.counterexamples) counterexamples.push_back(encode(c));
    json j{{"claim", std::string(claim_info(report.claim).name)},
           {"lo", encode(report.lo)},
           {"hi", encode(report.hi)},
           {"case_filter", std::string(report.case_filter)},
           {"checked_count", encode(report.checked_count)},
           {"filtered_count", encode(report.filtered_count)},
           {"counterexample_count", encode(report.counterexample_count)},
           {"counterexamples", counterexamples}};
    j["smallest"] = report.smallest ? encode(*report.smallest) : json(nullptr);
    j["verdict"] = std::string(verdict_name(report.verdict));
    return j;
}

ClaimReport decode_claim_report(const json& j) {
    return guarded("claim report", [&] {
        const ClaimId id = parse_claim_id(j.at("claim").get<std::string>());
        ClaimReport r;
        r.claim = id;
        r.lo = decode_nat(j.at("lo"));
        r.hi = decode_nat(j.at("hi"));
        r.case_filter = claim_info(id).precondition;
        if (j.at("case_filter").get<std::string>() != r.case_filter) {
            throw std::invalid_argument("case_filter does not match the claim registry");
        }
        r.checked_count = decode_u64(j.at("checked_count"));
        r.filtered_count = decode_u64(j.at("filtered_count"));
        r.counterexample_count = decode_u64(j.at("counterexample_count"));
        for (const json& c : j.at("counterexamples")) r.counterexamples.push_back(decode_nat(c));
        if (!j.at("smallest").is_null()) r.smallest = decode_nat(j.at("smallest"));
        r.verdict = parse_verdict(j.at("verdict").get<std::string>());
        return r;
    });
}

}  // namespace syracuse::io
