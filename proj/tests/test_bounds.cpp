#include <catch2/catch.hpp>

#include <algorithm>
#include <random>

#include "fhs/bounds.hpp"
#include "fhs/constructions.hpp"
#include "fhs/correlation.hpp"

using namespace fhs;

TEST_CASE("single-sequence floor") {
    CHECK(lg_bound(7, 7) == 0);
    CHECK(lg_bound(4, 4) == 0);
    CHECK(lg_bound(13, 4) == 3);
    CHECK(lg_bound(9, 3) == 3);
    CHECK(lg_bound(3, 5) == 0); // more symbols than positions
    CHECK_THROWS_AS(lg_bound(1, 4), invalid_param);
}

TEST_CASE("set bound at candidate pairs") {
    // (9, 3, 3): form is 24*la + 54*lc >= 216
    CHECK(peng_fan_holds(9, 3, 3, 3, 3));
    CHECK_FALSE(peng_fan_holds(9, 3, 3, 2, 2));
    CHECK(peng_fan_holds(9, 3, 3, 9, 9));
    CHECK_FALSE(peng_fan_holds(9, 3, 3, -1, -1));
    CHECK_FALSE(peng_fan_holds(9, 3, 3, -1, 5)); // negative coordinates never satisfy
    CHECK_THROWS_AS(peng_fan_holds(9, 3, 1, 1, 1), invalid_param);
}

TEST_CASE("maximum-correlation verdicts") {
    SECTION("cyclotomic (p, M, M) set at p=13, M=4 is one step above an optimal pair") {
        auto v = mhc_verdict(full_report(gen_cyclotomic_a(13, 4)));
        CHECK(v.verdict == verdict_kind::near_optimal);
        CHECK(v.witness("h_a") == 3);
        CHECK(v.witness("h_c") == 5);
    }
    SECTION("square-length set at p=3 sits on an optimal pair") {
        auto v = mhc_verdict(full_report(gen_kumar(3)));
        CHECK(v.verdict == verdict_kind::optimal);
    }
    SECTION("interleaved multiplicative set at N=35, k=2") {
        auto v = mhc_verdict(full_report(gen_theorem17(35, 2)));
        CHECK(v.verdict == verdict_kind::optimal);
        CHECK(v.witness("h_a") == 2);
        CHECK(v.witness("h_c") == 2);
    }
    SECTION("ideal autocorrelation with bad crosscorrelation is merely not optimal") {
        // no-hit-zone sets attain H_a = 0 yet a full-period cross hit
        auto v = mhc_verdict(full_report(gen_nhz(2, 5, 2)));
        CHECK(v.verdict == verdict_kind::not_optimal);
    }
    SECTION("undefined below two sequences") {
        sequence x{{0, 1, 0, 1}, 2, std::nullopt};
        auto v = mhc_verdict(full_report(sequence_set{{x}, {}}));
        CHECK(v.verdict == verdict_kind::undefined);
    }
    SECTION("a perfect pair (0,0) would classify optimal") {
        // hypothetical attained pair on a shape where (0,0) satisfies the form
        auto v = mhc_verdict(0, 0, 4, 8, 2);
        CHECK(v.verdict == verdict_kind::optimal);
    }
}

TEST_CASE("average-correlation verdicts") {
    SECTION("uniformly distributed sets sit on the bound") {
        for (std::uint32_t p : {3u, 5u, 7u}) {
            CHECK(ahc_verdict(full_report(gen_kumar(p))).verdict == verdict_kind::optimal);
        }
    }
    SECTION("two identical constant sequences miss it strictly") {
        sequence x{{0, 0, 0, 0, 0}, 2, std::nullopt};
        auto r = full_report(sequence_set{{x, x}, {}});
        auto v = ahc_verdict(r);
        CHECK(v.verdict == verdict_kind::not_optimal);
        CHECK(v.witness("m_times_sum") > v.witness("rhs"));
    }
    SECTION("undefined for degenerate shapes") {
        sequence x{{0, 1}, 2, std::nullopt};
        CHECK(ahc_verdict(full_report(sequence_set{{x}, {}})).verdict == verdict_kind::undefined);
        sequence y{{0}, 2, std::nullopt};
        CHECK(ahc_verdict(full_report(sequence_set{{y, y}, {}})).verdict == verdict_kind::undefined);
    }
}

TEST_CASE("integer form matches the reduced-rational form of the average bound") {
    std::mt19937_64 rng(101);
    for (int c = 0; c < 60; ++c) {
        std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % 24);
        std::uint32_t m = 2 + static_cast<std::uint32_t>(rng() % 8);
        std::uint32_t l = 2 + static_cast<std::uint32_t>(rng() % 5);
        sequence_set set;
        for (std::uint32_t i = 0; i < l; ++i) {
            sequence x;
            x.alphabet_size = m;
            x.symbols.resize(n);
            for (auto& s : x.symbols) s = static_cast<std::uint32_t>(rng() % m);
            set.sequences.push_back(std::move(x));
        }
        auto r = full_report(set);
        rational lhs = r.require_a_auto() / rational(static_cast<int128>(n) * (l - 1)) +
                       r.require_a_cross() / rational(n - 1);
        rational rhs(static_cast<int128>(n) * l - m,
                     static_cast<int128>(m) * (n - 1) * (l - 1));
        bool equality = lhs == rhs;
        REQUIRE(lhs >= rhs); // soundness of the bound itself
        REQUIRE(equality == (ahc_verdict(r).verdict == verdict_kind::optimal));
    }
}

TEST_CASE("verdicts are invariant under alphabet relabeling") {
    std::mt19937_64 rng(113);
    for (int c = 0; c < 20; ++c) {
        std::uint32_t n = 3 + static_cast<std::uint32_t>(rng() % 16);
        std::uint32_t m = 2 + static_cast<std::uint32_t>(rng() % 6);
        std::uint32_t l = 2 + static_cast<std::uint32_t>(rng() % 4);
        sequence_set set;
        for (std::uint32_t i = 0; i < l; ++i) {
            sequence x;
            x.alphabet_size = m;
            x.symbols.resize(n);
            for (auto& s : x.symbols) s = static_cast<std::uint32_t>(rng() % m);
            set.sequences.push_back(std::move(x));
        }
        std::vector<std::uint32_t> perm(m);
        for (std::uint32_t a = 0; a < m; ++a) perm[a] = a;
        for (std::uint32_t a = m; a > 1; --a) std::swap(perm[a - 1], perm[rng() % a]);
        sequence_set relabeled = set;
        for (auto& x : relabeled.sequences)
            for (auto& s : x.symbols) s = perm[s];

        auto r0 = full_report(set);
        auto r1 = full_report(relabeled);
        REQUIRE(*r0.h_auto == *r1.h_auto);
        REQUIRE(*r0.h_cross == *r1.h_cross);
        REQUIRE(mhc_verdict(r0).verdict == mhc_verdict(r1).verdict);
        REQUIRE(ahc_verdict(r0).verdict == ahc_verdict(r1).verdict);
    }
}

TEST_CASE("witnesses recompute to the stated verdict") {
    for (auto set : {gen_cyclotomic_a(13, 4), gen_kumar(3), gen_theorem17(35, 2), gen_nhz(2, 5, 2)}) {
        auto r = full_report(set);
        auto v = mhc_verdict(r);
        bool attained_ok = v.witness("lhs_attained") >= v.witness("rhs");
        CHECK(attained_ok); // attained statistics always satisfy the bound
        auto again = mhc_verdict(static_cast<std::int64_t>(v.witness("h_a")),
                                 static_cast<std::int64_t>(v.witness("h_c")), r.n, r.m, r.l);
        CHECK(again.verdict == v.verdict);

        auto a = ahc_verdict(r);
        CHECK((a.verdict == verdict_kind::optimal) == (a.witness("m_times_sum") == a.witness("rhs")));
    }
}
