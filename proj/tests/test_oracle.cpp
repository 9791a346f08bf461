#include "spinmult/oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace spinmult;

namespace {

Count lookup(const WeightCounts& counts, const Weight& w) {
    auto it = counts.find(w.doubled());
    return it == counts.end() ? Count(0) : it->second;
}

} // namespace

TEST_CASE("mu_of_subset basics") {
    LeviContext cartan4 = build_context(Composition({1, 1, 1, 1}));
    CHECK(mu_of_subset(cartan4, RootSubset{0}).doubled() == cartan4.rho_doubled);

    // the full subset realizes the negated empty-subset weight
    RootSubset full{(std::uint64_t{1} << cartan4.root_count()) - 1};
    CHECK(mu_of_subset(cartan4, full) == mu_of_subset(cartan4, RootSubset{0}).negated());

    LeviContext ctx = build_context(Composition({1, 1, 2}));
    CHECK(mu_of_subset(ctx, RootSubset{0}).doubled() == std::vector<int>{3, 1, -2, -2});
    // single root e_1 - e_4, bit index 2 in the lex order of cross_roots
    REQUIRE(ctx.cross_roots[2] == std::pair<int, int>{0, 3});
    CHECK(mu_of_subset(ctx, RootSubset{1u << 2}).doubled() ==
          std::vector<int>{1, 1, -2, 0});

    CHECK_THROWS_AS(mu_of_subset(ctx, RootSubset{1u << 5}), std::invalid_argument);
}

TEST_CASE("brute_multiplicity fixtures") {
    LeviContext cartan4 = build_context(Composition({1, 1, 1, 1}));
    CHECK(brute_multiplicity(cartan4, Weight(cartan4.rho_doubled)) == 1);

    LeviContext trivial = build_context(Composition({4}));
    CHECK(brute_multiplicity(trivial, Weight({0, 0, 0, 0})) == 1);
    CHECK(brute_multiplicity(trivial, Weight({2, 0, 0, -2})) == 0);

    // zero weight of sl(5) in the Cartan case
    LeviContext cartan5 = build_context(Composition({1, 1, 1, 1, 1}));
    CHECK(brute_multiplicity(cartan5, Weight({0, 0, 0, 0, 0})) == 24);
}

TEST_CASE("brute_multiplicity agrees with enumerate_weight_counts") {
    LeviContext ctx = build_context(Composition({1, 1, 2}));
    WeightCounts counts = enumerate_weight_counts(ctx);
    for (const auto& [doubled, count] : counts)
        CHECK(brute_multiplicity(ctx, Weight(doubled)) == count);
    // a vector that is not a weight of the module
    CHECK(brute_multiplicity(ctx, Weight({4, 0, -2, -2})) == 0);
}

TEST_CASE("enumerate_weight_counts over c=(1,2)") {
    LeviContext ctx = build_context(Composition({1, 2}));
    WeightCounts counts = enumerate_weight_counts(ctx);
    REQUIRE(counts.size() == 4);
    CHECK(lookup(counts, Weight({2, -1, -1})) == 1);
    CHECK(lookup(counts, Weight({0, 1, -1})) == 1);
    CHECK(lookup(counts, Weight({0, -1, 1})) == 1);
    CHECK(lookup(counts, Weight({-2, 1, 1})) == 1);
}

TEST_CASE("enumerate_weight_counts for a single block is the trivial module") {
    LeviContext ctx = build_context(Composition({5}));
    WeightCounts counts = enumerate_weight_counts(ctx);
    REQUIRE(counts.size() == 1);
    CHECK(counts.begin()->first == std::vector<int>{0, 0, 0, 0, 0});
    CHECK(counts.begin()->second == 1);
}

TEST_CASE("c=(1,1,2) weights fold onto the nine known orbit representatives") {
    LeviContext ctx = build_context(Composition({1, 1, 2}));
    WeightCounts counts = enumerate_weight_counts(ctx);

    Count total = 0;
    WeightCounts folded;
    for (const auto& [doubled, count] : counts) {
        total += count;
        folded[normalize_weight(ctx, Weight(doubled)).doubled()] += count;
    }
    CHECK(total == 32);

    const std::vector<std::vector<int>> nine = {
        {3, 1, -2, -2}, {3, -1, 0, -2}, {3, -3, 0, 0},
        {1, -1, 0, 0},  {1, 1, 0, -2},  {1, -3, 2, 0},
        {1, -1, 2, -2}, {-1, -1, 2, 0}, {-1, -3, 2, 2}};
    REQUIRE(folded.size() == nine.size());
    for (const auto& d : nine) CHECK(folded.count(d) == 1);
}

TEST_CASE("total mass is 2^roots for every context up to n=5") {
    for (int n = 1; n <= 5; ++n)
        for (const Composition& c : canonical_compositions(n)) {
            LeviContext ctx = build_context(c);
            WeightCounts counts = enumerate_weight_counts(ctx);
            Count total = 0;
            for (const auto& [doubled, count] : counts) total += count;
            CHECK(total == pow2(ctx.root_count()));
        }
}

TEST_CASE("negation symmetry of the count map") {
    for (const std::vector<int>& parts :
         {std::vector<int>{1, 2, 2}, std::vector<int>{1, 1, 2}}) {
        LeviContext ctx = build_context(Composition(parts));
        WeightCounts counts = enumerate_weight_counts(ctx);
        for (const auto& [doubled, count] : counts)
            CHECK(lookup(counts, Weight(doubled).negated()) == count);
    }
}

TEST_CASE("counts are constant on block-permutation orbits") {
    LeviContext ctx = build_context(Composition({1, 2, 2}));
    WeightCounts counts = enumerate_weight_counts(ctx);
    std::map<std::vector<int>, std::vector<Count>> by_orbit;
    for (const auto& [doubled, count] : counts)
        by_orbit[normalize_weight(ctx, Weight(doubled)).doubled()].push_back(count);
    for (const auto& [rep, orbit_counts] : by_orbit)
        for (const Count& c : orbit_counts) CHECK(c == orbit_counts.front());
}

TEST_CASE("multiplicative splitting over orthogonal supports") {
    // sl(5), roots inside {1,2} and inside {3,4,5} commute; the weight of a
    // disjoint union factors.
    LeviContext ctx = build_context(Composition({1, 1, 1, 1, 1}));
    WeightCounts counts = enumerate_weight_counts(ctx);

    std::vector<int> left, right;
    for (int r = 0; r < ctx.root_count(); ++r) {
        auto [i, j] = ctx.cross_roots[static_cast<std::size_t>(r)];
        if (j <= 1) left.push_back(r);
        if (i >= 2) right.push_back(r);
    }
    REQUIRE(left.size() == 1);
    REQUIRE(right.size() == 3);

    for (std::uint64_t a = 0; a < (std::uint64_t{1} << left.size()); ++a)
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << right.size()); ++b) {
            RootSubset sa{0}, sb{0}, sab{0};
            for (std::size_t t = 0; t < left.size(); ++t)
                if ((a >> t) & 1) sa.bits |= std::uint64_t{1} << left[t];
            for (std::size_t t = 0; t < right.size(); ++t)
                if ((b >> t) & 1) sb.bits |= std::uint64_t{1} << right[t];
            sab.bits = sa.bits | sb.bits;
            CHECK(lookup(counts, mu_of_subset(ctx, sab)) ==
                  lookup(counts, mu_of_subset(ctx, sa)) *
                      lookup(counts, mu_of_subset(ctx, sb)));
        }
}

TEST_CASE("saturation fixtures for sl(3)") {
    LeviContext ctx = build_context(Composition({1, 1, 1}));
    REQUIRE(ctx.cross_roots == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

    CHECK(is_saturated(ctx, RootSubset{0}));                    // empty
    CHECK(is_saturated(ctx, RootSubset{0b111}));                // everything
    CHECK_FALSE(is_saturated(ctx, RootSubset{0b101}));          // {e1-e2, e2-e3}
    CHECK(is_saturated(ctx, RootSubset{0b011}));                // {e1-e2, e1-e3}

    LeviContext nonc = build_context(Composition({1, 2}));
    CHECK_THROWS_AS(is_saturated(nonc, RootSubset{0}), std::domain_error);
}

TEST_CASE("saturation matches multiplicity one and the rho orbit, n <= 4") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        LeviContext ctx = build_context(Composition(ones));
        WeightCounts counts = enumerate_weight_counts(ctx);
        const std::uint64_t total = std::uint64_t{1} << ctx.root_count();
        for (std::uint64_t bits = 0; bits < total; ++bits) {
            Weight mu = mu_of_subset(ctx, RootSubset{bits});
            const bool sat = is_saturated(ctx, RootSubset{bits});
            CHECK(sat == (lookup(counts, mu) == 1));
            CHECK(sat == in_weyl_orbit_of_rho(n, mu));
        }
    }
}

TEST_CASE("zero weight multiplicity parity by n") {
    // odd n: even and positive; even n: zero
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        LeviContext ctx = build_context(Composition(ones));
        Count z = brute_multiplicity(ctx, Weight(std::vector<int>(n, 0)));
        if (n % 2 == 1) {
            CHECK(z > 0);
            CHECK(z % 2 == 0);
        } else {
            CHECK(z == 0);
        }
    }
}

TEST_CASE("rho orbit membership") {
    LeviContext cartan4 = build_context(Composition({1, 1, 1, 1}));
    CHECK(in_weyl_orbit_of_rho(4, Weight(cartan4.rho_doubled)));
    CHECK(in_weyl_orbit_of_rho(3, Weight({0, 2, -2})));
    CHECK_FALSE(in_weyl_orbit_of_rho(3, Weight({0, 0, 0})));
    CHECK_THROWS_AS(in_weyl_orbit_of_rho(4, Weight({0, 0, 0})), std::invalid_argument);
}

TEST_CASE("oracle guard") {
    LeviContext ctx = build_context(Composition({1, 1, 1, 1}));  // 6 roots
    CHECK_THROWS_AS(brute_multiplicity(ctx, Weight({0, 0, 0, 0}), 5), oracle_bound_error);
    CHECK_THROWS_AS(enumerate_weight_counts(ctx, 5), oracle_bound_error);
    try {
        enumerate_weight_counts(ctx, 5);
        FAIL("expected oracle_bound_error");
    } catch (const oracle_bound_error& e) {
        CHECK(std::string(e.what()).find("oracle too large") != std::string::npos);
        CHECK(e.bits() == 6);
        CHECK(e.bound() == 5);
    }
}
