#include "syracuse/claims.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "syracuse/core.hpp"
#include "syracuse/descent.hpp"

namespace syracuse {
namespace {

constexpr std::uint64_t kBlockItems = 4096;

// clang-format off
constexpr std::array<ClaimInfo, 13> kRegistry = {{
    {ClaimId::L1A, "L1A", "exponent p", "p even",
     "2^p = 1 (mod 3)"},
    {ClaimId::L1B, "L1B", "exponent p", "p odd",
     "2^p = 2 (mod 3)"},
    {ClaimId::C1_DESCENT, "C1_DESCENT", "odd k", "Case1",
     "f(k) <= (3h-1)/2 < k"},
    {ClaimId::C2_DESCENT, "C2_DESCENT", "odd k", "Case2",
     "kbar = 2^(p+1)*hbar - 1 satisfies f(kbar) = k and kbar < k"},
    {ClaimId::C34_M_INTEGRAL, "C34_M_INTEGRAL", "odd k", "Case3 or Case4",
     "m = (4k-1)/3 is an odd integer with f(m) = k"},
    {ClaimId::C3_R_INTEGRAL, "C3_R_INTEGRAL", "odd k", "Case3",
     "r = (4m-1)/3 is an odd integer with f(r) = m"},
    {ClaimId::C4_R_INTEGRAL, "C4_R_INTEGRAL", "odd k", "Case4",
     "r = (4m-1)/3 is an odd integer with f(r) = m"},
    {ClaimId::C3_R_LESS_K, "C3_R_LESS_K", "odd k", "Case3 with integral r",
     "r < k"},
    {ClaimId::C4_R_LESS_K, "C4_R_LESS_K", "odd k", "Case4 with integral r",
     "r < k"},
    {ClaimId::C56_NO_PREIMAGE, "C56_NO_PREIMAGE", "odd k", "Case5 or Case6",
     "no odd m has f(m) = k (scanned s <= 64), and k = 0 (mod 3)"},
    {ClaimId::EXPANSION, "EXPANSION", "odd k", "Case5 or Case6",
     "f^n(k) = 3^n*2^(p-n)*h - 1 for n = 1..p-1, and k < f(k) < ... < f^(p-1)(k)"},
    {ClaimId::MOD3_CORRELATION, "MOD3_CORRELATION", "odd k", "p >= 2",
     "Case2 iff k = 2, Case3/4 iff k = 1, Case5/6 iff k = 0 (mod 3)"},
    {ClaimId::IDENTITY_16K, "IDENTITY_16K", "odd k", "Case3 or Case4 with integral r",
     "16k = 9r + 7 and f^2(r) = k"},
}};
// clang-format on

enum class Outcome { Excluded, Filtered, Holds, Fails };

std::uint32_t pow2_mod3_by_squaring(std::uint64_t p) {
    std::uint32_t result = 1 % 3;
    std::uint32_t base = 2;
    while (p != 0) {
        if ((p & 1U) != 0) result = (result * base) % 3;
        base = (base * base) % 3;
        p >>= 1;
    }
    return result;
}

Outcome evaluate_exponent(ClaimId claim, std::uint64_t p) {
    const bool even = p % 2 == 0;
    if ((claim == ClaimId::L1A) != even) return Outcome::Excluded;
    const std::uint32_t expected = even ? 1 : 2;
    const std::uint32_t rule = pow2_mod3(p);
    return (rule == expected && pow2_mod3_by_squaring(p) == expected) ? Outcome::Holds
                                                                      : Outcome::Fails;
}

bool is_kind(CaseKind kind, std::initializer_list<CaseKind> kinds) {
    return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

Outcome holds(bool ok) { return ok ? Outcome::Holds : Outcome::Fails; }

Outcome evaluate_odd(ClaimId claim, const OddNat& k) {
    if (k.value() == Nat{1}) return Outcome::Excluded;
    const Decomposition d = decompose(k);
    const CaseTag tag = classify(d);
    const CaseKind kind = tag.kind;

    switch (claim) {
        case ClaimId::C1_DESCENT: {
            if (kind != CaseKind::Case1) return Outcome::Excluded;
            const DescentWitness w = case1_witness(k);
            const Nat bound = (d.h.value() * Nat{3} - Nat{1}) >> 1;
            return holds(w.witness_chain.front().value() <= bound && w.comparisons.front().sign < 0);
        }
        case ClaimId::C2_DESCENT: {
            if (kind != CaseKind::Case2) return Outcome::Excluded;
            const DescentWitness w = case2_predecessor(k);
            return holds(w.comparisons.front().sign < 0);
        }
        case ClaimId::C34_M_INTEGRAL: {
            if (!is_kind(kind, {CaseKind::Case3, CaseKind::Case4})) return Outcome::Excluded;
            if (((k.value() << 2) - Nat{1}).mod3() != 0) return Outcome::Fails;
            case34_m(k);
            return Outcome::Holds;
        }
        case ClaimId::C3_R_INTEGRAL:
        case ClaimId::C4_R_INTEGRAL: {
            const CaseKind want = claim == ClaimId::C3_R_INTEGRAL ? CaseKind::Case3 : CaseKind::Case4;
            if (kind != want) return Outcome::Excluded;
            return holds(case34_r(case34_m(k)).integral);
        }
        case ClaimId::C3_R_LESS_K:
        case ClaimId::C4_R_LESS_K: {
            const CaseKind want = claim == ClaimId::C3_R_LESS_K ? CaseKind::Case3 : CaseKind::Case4;
            if (kind != want) return Outcome::Excluded;
            const RQuotient rq = case34_r(case34_m(k));
            if (!rq.r) return Outcome::Filtered;
            return holds(*rq.r < k);
        }
        case ClaimId::C56_NO_PREIMAGE: {
            if (!is_kind(kind, {CaseKind::Case5, CaseKind::Case6})) return Outcome::Excluded;
            return holds(preimages(k, kNoPreimageScan).members.empty() && k.value().mod3() == 0);
        }
        case ClaimId::EXPANSION: {
            if (!is_kind(kind, {CaseKind::Case5, CaseKind::Case6})) return Outcome::Excluded;
            Nat previous = k.value();
            for (std::uint64_t n = 1; n < d.p; ++n) {
                const OddNat value = expansion(d, n);
                if (!(value.value() > previous)) return Outcome::Fails;
                previous = value.value();
            }
            return Outcome::Holds;
        }
        case ClaimId::MOD3_CORRELATION: {
            if (kind == CaseKind::Case1) return Outcome::Excluded;
            const std::uint32_t r = k.value().mod3();
            switch (kind) {
                case CaseKind::Case2:
                    return holds(r == 2);
                case CaseKind::Case3:
                case CaseKind::Case4:
                    return holds(r == 1);
                default:
                    return holds(r == 0);
            }
        }
        case ClaimId::IDENTITY_16K: {
            if (!is_kind(kind, {CaseKind::Case3, CaseKind::Case4})) return Outcome::Excluded;
            const RQuotient rq = case34_r(case34_m(k));
            if (!rq.r) return Outcome::Filtered;
            case34_identity_check(k, *rq.r);
            return holds(f_iterate(*rq.r, 2) == k);
        }
        case ClaimId::L1A:
        case ClaimId::L1B:
            break;
    }
    throw std::logic_error("exponent claim evaluated on odd k");
}

Outcome evaluate_guarded(ClaimId claim, const Nat& item) {
    try {
        if (claim == ClaimId::L1A || claim == ClaimId::L1B) {
            return evaluate_exponent(claim, *item.to_u64());
        }
        return evaluate_odd(claim, OddNat{item});
    } catch (const std::logic_error& e) {
        // A failed re-verification inside a witness construction is a counterexample.
        if (dynamic_cast<const std::invalid_argument*>(&e) != nullptr) throw;
        return Outcome::Fails;
    }
}

struct BlockResult {
    std::uint64_t checked = 0;
    std::uint64_t filtered = 0;
    std::uint64_t failed = 0;
    std::vector<Nat> counterexamples;
};

}  // namespace

const ClaimInfo& claim_info(ClaimId id) { return kRegistry[static_cast<std::size_t>(id)]; }

ClaimId parse_claim_id(std::string_view name) {
    for (const ClaimInfo& info : kRegistry) {
        if (info.name == name) return info.id;
    }
    throw std::invalid_argument("unknown claim id: " + std::string(name));
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::HoldsOnRange:
            return "HOLDS_ON_RANGE";
        case Verdict::Fails:
            return "FAILS";
        case Verdict::Vacuous:
            return "VACUOUS";
    }
    return "?";
}

Verdict parse_verdict(std::string_view name) {
    for (Verdict v : {Verdict::HoldsOnRange, Verdict::Fails, Verdict::Vacuous}) {
        if (verdict_name(v) == name) return v;
    }
    throw std::invalid_argument("unknown verdict: " + std::string(name));
}

ClaimReport check_claim(ClaimId claim, const Nat& lo, const Nat& hi, std::uint64_t limit,
                        unsigned workers) {
    if (lo > hi) throw std::invalid_argument("empty range: lo > hi");
    if (limit == 0) throw std::invalid_argument("limit must be at least 1");

    const bool exponent_domain = claim == ClaimId::L1A || claim == ClaimId::L1B;
    Nat start = lo;
    Nat stride{1};
    std::uint64_t items = 0;
    if (exponent_domain) {
        if (!hi.to_u64()) throw std::invalid_argument("exponent range must fit in 64 bits");
        const std::uint64_t span = *(hi - lo).to_u64();
        if (span == ~std::uint64_t{0}) throw std::invalid_argument("exponent range too large");
        items = span + 1;
    } else {
        stride = Nat{2};
        if (start.is_even()) start += Nat{1};
        if (start <= hi) {
            const auto span = ((hi - start) >> 1).to_u64();
            if (!span || *span == ~std::uint64_t{0}) throw std::invalid_argument("range too large");
            items = *span + 1;
        }
    }

    const std::uint64_t blocks = (items + kBlockItems - 1) / kBlockItems;
    std::vector<BlockResult> results(blocks);
    const int threads = workers == 0 ? omp_get_max_threads() : static_cast<int>(workers);

    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
        try {
            BlockResult& out = results[static_cast<std::size_t>(b)];
            const std::uint64_t first = static_cast<std::uint64_t>(b) * kBlockItems;
            const std::uint64_t last = std::min(items, first + kBlockItems);
            Nat item = start + stride * Nat{first};
            for (std::uint64_t i = first; i < last; ++i, item += stride) {
                switch (evaluate_guarded(claim, item)) {
                    case Outcome::Excluded:
                        break;
                    case Outcome::Filtered:
                        ++out.filtered;
                        break;
                    case Outcome::Holds:
                        ++out.checked;
                        break;
                    case Outcome::Fails:
                        ++out.checked;
                        ++out.failed;
                        if (out.counterexamples.size() < limit) out.counterexamples.push_back(item);
                        break;
                }
            }
        } catch (...) {
#pragma omp critical(syracuse_claims_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);

    ClaimReport report;
    report.claim = claim;
    report.lo = lo;
    report.hi = hi;
    report.case_filter = claim_info(claim).precondition;
    for (BlockResult& r : results) {
        report.checked_count += r.checked;
        report.filtered_count += r.filtered;
        report.counterexample_count += r.failed;
        for (Nat& c : r.counterexamples) {
            if (report.counterexamples.size() == limit) break;
            report.counterexamples.push_back(std::move(c));
        }
    }
    if (!report.counterexamples.empty()) report.smallest = report.counterexamples.front();
    if (report.checked_count == 0) {
        report.verdict = Verdict::Vacuous;
    } else {
        report.verdict = report.counterexample_count == 0 ? Verdict::HoldsOnRange : Verdict::Fails;
    }
    return report;
}

std::vector<ClaimReport> run_all(const Nat& lo, const Nat& hi, std::uint64_t limit,
                                 unsigned workers) {
    if (lo > hi) throw std::invalid_argument("empty range: lo > hi");
    std::vector<ClaimReport> reports;
    reports.reserve(kAllClaims.size());
    for (ClaimId id : kAllClaims) reports.push_back(check_claim(id, lo, hi, limit, workers));
    return reports;
}

}  // namespace syracuse
