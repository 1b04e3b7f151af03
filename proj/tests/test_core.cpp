#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "oracle.hpp"
#include "syracuse/core.hpp"

using namespace syracuse;

TEST_CASE("g_step") {
    CHECK(g_step(Nat{1}) == Nat{4});
    CHECK(g_step(Nat{4}) == Nat{2});
    CHECK(g_step(Nat{7}) == Nat{22});
    CHECK_THROWS_AS(g_step(Nat{0}), std::invalid_argument);
}

TEST_CASE("f_step examples") {
    CHECK(f_step(OddNat{1}) == SyracuseStep{OddNat{1}, 2});
    CHECK(f_step(OddNat{7}) == SyracuseStep{OddNat{11}, 1});
    CHECK(f_step(OddNat{13}) == SyracuseStep{OddNat{5}, 3});
}

TEST_CASE("f_step beyond the fixed-width range") {
    // 3(2^200 - 1) + 1 = 2 (3 * 2^199 - 1)
    const OddNat k{Nat::pow2(200) - Nat{1}};
    const SyracuseStep s = f_step(k);
    CHECK(s.valuation == 1);
    CHECK(s.next.value() == Nat{3} * Nat::pow2(199) - Nat{1});
    // largest value on the fast path and the first past it
    const Nat edge = Nat::from_u128((~u128{0} - 1) / 3);
    for (const Nat& v : {edge, edge + Nat{2}, edge + Nat{4}}) {
        if (!v.is_odd()) continue;
        const SyracuseStep step = f_step(OddNat{v});
        CHECK((step.next.value() << step.valuation) == v * Nat{3} + Nat{1});
    }
}

TEST_CASE("f_iterate") {
    CHECK(f_iterate(OddNat{7}, 0) == OddNat{7});
    CHECK(f_iterate(OddNat{7}, 2) == OddNat{17});
    CHECK(f_iterate(OddNat{1}, 100) == OddNat{1});
}

TEST_CASE("decompose examples") {
    const auto d1 = decompose(OddNat{1});
    CHECK(d1.p == 1);
    CHECK(d1.h == OddNat{1});
    const auto d7 = decompose(OddNat{7});
    CHECK(d7.p == 3);
    CHECK(d7.h == OddNat{1});
    const auto d11 = decompose(OddNat{11});
    CHECK(d11.p == 2);
    CHECK(d11.h == OddNat{3});
}

TEST_CASE("classify examples") {
    CHECK(classify(OddNat{5}).kind == CaseKind::Case1);
    const CaseTag t3 = classify(OddNat{3});
    CHECK(t3.kind == CaseKind::Case5);
    CHECK(t3.ell == Nat{0});
    const CaseTag t39 = classify(OddNat{39});
    CHECK(t39.kind == CaseKind::Case6);
    CHECK(t39.ell == Nat{1});
    const CaseTag t11 = classify(OddNat{11});
    CHECK(t11.kind == CaseKind::Case2);
    CHECK(t11.hbar == OddNat{1});
    const CaseTag t7 = classify(OddNat{7});
    CHECK(t7.kind == CaseKind::Case3);
    CHECK(t7.ell == Nat{0});
    const CaseTag t19 = classify(OddNat{19});
    CHECK(t19.kind == CaseKind::Case4);
    CHECK(t19.ell == Nat{1});
}

TEST_CASE("classify rejects k = 1 and even input") {
    CHECK_THROWS_AS(classify(OddNat{1}), std::invalid_argument);
    CHECK_THROWS_AS(classify(OddNat{Nat{4}}), std::invalid_argument);
}

TEST_CASE("pow2_mod3") {
    CHECK(pow2_mod3(2) == 1);
    CHECK(pow2_mod3(1) == 2);
    CHECK(pow2_mod3(0) == 1);
    oracle::big power = 1;
    for (std::uint64_t p = 0; p <= 10'000; ++p, power *= 2) {
        REQUIRE(pow2_mod3(p) == static_cast<unsigned>(power % 3));
    }
}

TEST_CASE("f_step and decompose invariants on odd k up to 10^6") {
    for (std::uint64_t k = 1; k <= 1'000'000; k += 2) {
        const SyracuseStep s = f_step(OddNat{k});
        const std::uint64_t next = *s.next.value().to_u64();
        REQUIRE(s.valuation >= 1);
        REQUIRE((next & 1) == 1);
        REQUIRE(3 * k + 1 == (next << s.valuation));

        const Decomposition d = decompose(OddNat{k});
        const std::uint64_t h = *d.h.value().to_u64();
        REQUIRE((h & 1) == 1);
        REQUIRE(d.p >= 1);
        REQUIRE((h << d.p) - 1 == k);
    }
}

TEST_CASE("six cases partition odd k and track k mod 3") {
    std::uint64_t counts[6] = {};
    for (std::uint64_t k = 3; k <= 1'000'000; k += 2) {
        const Decomposition d = decompose(OddNat{k});
        const CaseTag tag = classify(d);
        const std::uint64_t h = *d.h.value().to_u64();
        const bool preds[6] = {
            d.p == 1,
            d.p >= 2 && h % 3 == 0,
            d.p >= 2 && h % 3 == 1 && d.p % 2 == 1,
            d.p >= 2 && h % 3 == 2 && d.p % 2 == 0,
            d.p >= 2 && h % 3 == 1 && d.p % 2 == 0,
            d.p >= 2 && h % 3 == 2 && d.p % 2 == 1,
        };
        int satisfied = 0;
        for (bool b : preds) satisfied += b ? 1 : 0;
        REQUIRE(satisfied == 1);
        const auto idx = static_cast<std::size_t>(tag.kind);
        REQUIRE(preds[idx]);
        ++counts[idx];

        if (tag.kind == CaseKind::Case2) {
            REQUIRE(tag.hbar->value() * Nat{3} == d.h.value());
        } else if (tag.kind != CaseKind::Case1) {
            const std::uint64_t residue = h % 3;
            REQUIRE(*tag.ell * Nat{3} + Nat{residue} == d.h.value());
        }

        if (d.p >= 2) {
            switch (tag.kind) {
                case CaseKind::Case2:
                    REQUIRE(k % 3 == 2);
                    break;
                case CaseKind::Case3:
                case CaseKind::Case4:
                    REQUIRE(k % 3 == 1);
                    break;
                default:
                    REQUIRE(k % 3 == 0);
            }
        }
    }
    for (std::uint64_t c : counts) CHECK(c > 0);
}

TEST_CASE("f-orbit is the odd subsequence of the g-orbit") {
    for (std::uint64_t k = 1; k <= 100'000; k += 2) {
        std::vector<Nat> odd_from_g;
        Nat x{k};
        odd_from_g.push_back(x);
        while (x != Nat{1}) {
            x = g_step(x);
            if (x.is_odd()) odd_from_g.push_back(x);
        }
        std::vector<Nat> from_f;
        OddNat y{k};
        from_f.push_back(y.value());
        while (y.value() != Nat{1}) {
            y = f_step(y).next;
            from_f.push_back(y.value());
        }
        REQUIRE(odd_from_g == from_f);
    }
}
