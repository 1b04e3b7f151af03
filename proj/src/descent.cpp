#include "syracuse/descent.hpp"

#include <stdexcept>
#include <string>

namespace syracuse {
namespace {

int sign_of_difference(const Nat& a, const Nat& b) {
    const auto c = a <=> b;
    if (c < 0) return -1;
    if (c > 0) return 1;
    return 0;
}

void require_case(const CaseTag& tag, std::initializer_list<CaseKind> allowed, const OddNat& k) {
    for (CaseKind kind : allowed) {
        if (tag.kind == kind) return;
    }
    throw std::invalid_argument("k = " + k.to_string() + " is in " + std::string(case_name(tag.kind)));
}

}  // namespace

VerifiedRelation verify_relation(const OddNat& from, const OddNat& to,
                                 std::optional<std::uint64_t> expected_valuation) {
    const SyracuseStep step = f_step(from);
    if (step.next != to) {
        throw std::logic_error("f(" + from.to_string() + ") = " + step.next.to_string() +
                               ", expected " + to.to_string());
    }
    if (expected_valuation && step.valuation != *expected_valuation) {
        throw std::logic_error("f(" + from.to_string() + ") has valuation " +
                               std::to_string(step.valuation) + ", expected " +
                               std::to_string(*expected_valuation));
    }
    return {from, to, step.valuation};
}

DescentWitness case1_witness(const OddNat& k) {
    const CaseTag tag = classify(k);
    require_case(tag, {CaseKind::Case1}, k);

    const SyracuseStep step = f_step(k);
    DescentWitness w{tag, {step.next}, {}, {}, {}, std::nullopt};
    w.relations.push_back({k, step.next, step.valuation});
    w.comparisons.push_back({"f(k)", step.next, sign_of_difference(step.next, k)});
    if (w.comparisons.back().sign >= 0) {
        throw std::logic_error("Case1 descent failed at k = " + k.to_string());
    }
    return w;
}

DescentWitness case2_predecessor(const OddNat& k) {
    const Decomposition d = decompose(k);
    const CaseTag tag = classify(d);
    require_case(tag, {CaseKind::Case2}, k);

    const OddNat kbar{(tag.hbar->value() << (d.p + 1)) - Nat{1}};
    DescentWitness w{tag, {kbar}, {}, {}, {}, std::nullopt};
    w.relations.push_back(verify_relation(kbar, k));
    w.comparisons.push_back({"kbar", kbar, sign_of_difference(kbar, k)});
    return w;
}

OddNat case34_m(const OddNat& k) {
    const CaseTag tag = classify(k);
    require_case(tag, {CaseKind::Case3, CaseKind::Case4}, k);

    const Nat numerator = (k.value() << 2) - Nat{1};
    auto m = numerator.div_exact_small(3);
    if (!m) {
        throw std::logic_error("3 does not divide 4k - 1 for in-case k = " + k.to_string());
    }
    OddNat result{std::move(*m)};
    verify_relation(result, k, 2);
    return result;
}

RQuotient case34_r(const OddNat& m) {
    Nat numerator = (m.value() << 2) - Nat{1};
    auto r = numerator.div_exact_small(3);
    if (!r) return {false, std::move(numerator), Nat{3}, std::nullopt};
    OddNat r_odd{std::move(*r)};
    verify_relation(r_odd, m, 2);
    return {true, std::move(numerator), Nat{3}, std::move(r_odd)};
}

IdentityCheck case34_identity_check(const OddNat& k, const OddNat& r) {
    Nat lhs = k.value() << 4;
    Nat rhs = r.value() * Nat{9} + Nat{7};
    if (lhs != rhs) {
        throw std::logic_error("16k != 9r + 7 for k = " + k.to_string() + ", r = " + r.to_string());
    }
    return {std::move(lhs), std::move(rhs), sign_of_difference(r, k)};
}

PreimageSet preimages(const OddNat& k, std::uint64_t s_max) {
    if (s_max == 0) throw std::invalid_argument("s_max must be at least 1");
    PreimageSet out{k, s_max, {}};
    const std::uint32_t k_mod3 = k.value().mod3();
    if (k_mod3 == 0) return out;

    Nat scaled = k.value();
    for (std::uint64_t s = 1; s <= s_max; ++s) {
        scaled <<= 1;
        // 2^s * k - 1 is divisible by 3 iff 2^s * k = 1 (mod 3)
        if ((pow2_mod3(s) * k_mod3) % 3 != 1) continue;
        OddNat m{*(scaled - Nat{1}).div_exact_small(3)};
        verify_relation(m, k, s);
        out.members.push_back({std::move(m), s});
    }
    return out;
}

Decomposition compose(std::uint64_t p, const OddNat& h) {
    if (p == 0) throw std::invalid_argument("p must be at least 1");
    return {OddNat{(h.value() << p) - Nat{1}}, p, h};
}

OddNat expansion(const Decomposition& d, std::uint64_t n) {
    if (d.p < 2) throw std::invalid_argument("expansion requires p >= 2");
    if (n < 1 || n >= d.p) {
        throw std::invalid_argument("expansion index must satisfy 1 <= n <= p - 1");
    }
    OddNat value{((Nat::pow(Nat{3}, n) * d.h.value()) << (d.p - n)) - Nat{1}};
    if (f_iterate(d.k, n) != value) {
        throw std::logic_error("expansion disagrees with f_iterate at k = " + d.k.to_string() +
                               ", n = " + std::to_string(n));
    }
    return value;
}

PeakValue peak_value(const Decomposition& d) {
    if (d.p < 2) throw std::invalid_argument("peak_value requires p >= 2");
    Nat pre = Nat::pow(Nat{3}, d.p) * d.h.value() - Nat{1};
    const std::uint64_t v = pre.trailing_zeros();
    OddNat odd{pre >> v};
    if (f_iterate(d.k, d.p) != odd) {
        throw std::logic_error("odd part of 3^p h - 1 disagrees with f^p(k) at k = " +
                               d.k.to_string());
    }
    return {std::move(pre), std::move(odd), v};
}

DescentWitness descend(const OddNat& k) {
    const CaseTag tag = classify(k);
    switch (tag.kind) {
        case CaseKind::Case1:
            return case1_witness(k);
        case CaseKind::Case2:
            return case2_predecessor(k);
        case CaseKind::Case3:
        case CaseKind::Case4: {
            DescentWitness w{tag, {}, {}, {}, {}, std::nullopt};
            const OddNat m = case34_m(k);
            w.witness_chain.push_back(m);
            w.relations.push_back({m, k, 2});
            w.integrality_flags.push_back({"m = (4k-1)/3", true, (k.value() << 2) - Nat{1}, Nat{3}});
            w.comparisons.push_back({"m", m, sign_of_difference(m, k)});

            RQuotient rq = case34_r(m);
            w.integrality_flags.push_back({"r = (4m-1)/3", rq.integral, rq.numerator, rq.denominator});
            if (rq.r) {
                case34_identity_check(k, *rq.r);
                w.witness_chain.push_back(*rq.r);
                w.relations.push_back({*rq.r, m, 2});
                w.comparisons.push_back({"r", *rq.r, sign_of_difference(*rq.r, k)});
            }
            return w;
        }
        case CaseKind::Case5:
        case CaseKind::Case6: {
            const PreimageSet pre = preimages(k, kNoPreimageScan);
            DescentWitness w{tag, {}, {}, {}, {}, std::nullopt};
            w.no_preimage = NoPreimageEvidence{k.value().mod3(), kNoPreimageScan, pre.members.size()};
            return w;
        }
    }
    throw std::logic_error("unreachable case");
}

}  // namespace syracuse
