#include <doctest.h>

#include "checks.hpp"
#include "minlink/oracle.hpp"
#include "minlink/stage_one.hpp"

using namespace minlink;

namespace {
constexpr std::size_t E = 0, N = 3;
}

TEST_SUITE("oracle") {
    TEST_CASE("instance W") {
        const Ledger o = oracle_reachable_sets(testing::instance_w());
        CHECK(o[1].links == 2);
        CHECK(o[1].base[E] == std::vector<Interval>{{1, {0, 1}, 2, E}});
        CHECK(o[1].base[N] == std::vector<Interval>{{1, {0, 1}, 2, N}});
        CHECK(o[2].links == 3);
        CHECK(oracle_min_links(testing::instance_w()) == 3);
    }

    TEST_CASE("small cases") {
        CHECK(oracle_min_links(testing::instance_empty()) == 1);
        CHECK(oracle_min_links(testing::instance_empty({1, 1})) == 2);
        CHECK(oracle_min_links(testing::instance_empty({0, 0})) == 0);
    }

    TEST_CASE("two turns per hop already give the same sets as three") {
        CHECK(compare_ledgers(oracle_reachable_sets(testing::instance_w(), 2),
                              oracle_reachable_sets(testing::instance_w(), 3))
                  .empty());
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            const Instance inst = generate_instance({6, 4 + 2 * (seed % 3), seed % 2 ? 6 : 50, seed});
            const Ledger two = oracle_reachable_sets(inst, 2);
            const Ledger three = oracle_reachable_sets(inst, 3);
            const Ledger four = oracle_reachable_sets(inst, 4);
            CAPTURE(seed);
            CHECK(compare_ledgers(two, three).empty());
            CHECK(compare_ledgers(three, four).empty());
        }
    }

    TEST_CASE("more turns never shrink the sets") {
        int compared = 0;
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            const Instance inst = generate_instance({5, 4 + 2 * (seed % 3), 6, seed});
            Ledger one;
            try {
                one = oracle_reachable_sets(inst, 1);
            } catch (const InternalConsistencyError&) {
                // One turn per hop cannot always bridge a jump of two.
                continue;
            }
            ++compared;
            const Ledger two = oracle_reachable_sets(inst, 2);
            for (std::size_t i = 0; i < one.size(); ++i) {
                CHECK(two[i].links <= one[i].links);
                if (two[i].links != one[i].links) {
                    continue;
                }
                for (std::size_t j = 0; j < inst.oset.size(); ++j) {
                    for (const Interval& a : one[i].base[j]) {
                        bool inside = false;
                        for (const Interval& b : two[i].base[j]) {
                            inside |= b.range.contains(a.range);
                        }
                        CHECK(inside);
                    }
                }
            }
        }
        CHECK(compared > 10);
    }

    TEST_CASE("size guard") {
        CHECK_THROWS_AS(oracle_reachable_sets(generate_instance({40, 4, 50, 1})), OracleTooLarge);
        CHECK_THROWS_AS(oracle_reachable_sets(testing::instance_w(), 9), OracleTooLarge);
        CHECK_THROWS_AS(oracle_reachable_sets(testing::instance_w(), 0), OracleTooLarge);
    }
}

TEST_SUITE("validate_tour") {
    TEST_CASE("examples") {
        const Instance w = testing::instance_w();
        const Tour good{{{0, 0}, {0, 1}, {4, 1}, {4, 0}}, {{1, {2, 1}}}, 3};
        CHECK(validate_tour(w, good).ok());

        Tour off = good;
        off.visits[0].point = {2, 4};
        CHECK(validate_tour(w, off).has("visit-point-off-segment"));

        const Tour slanted{{{0, 0}, {1, 2}, {4, 0}}, {{1, {2, 1}}}, 2};
        CHECK(validate_tour(w, slanted).has("non-c-oriented-link"));
    }

    TEST_CASE("structural violations") {
        const Instance w = testing::instance_w();
        CHECK(validate_tour(w, {}).has("empty-tour"));
        CHECK(validate_tour(w, {{{0, 1}, {4, 1}, {4, 0}}, {{1, {2, 1}}}, 2}).has("wrong-start"));
        CHECK(validate_tour(w, {{{0, 0}, {0, 1}, {4, 1}}, {{1, {2, 1}}}, 2}).has("wrong-end"));
        CHECK(validate_tour(w, {{{0, 0}, {0, 1}, {4, 1}, {4, 0}}, {{1, {2, 1}}}, 4}).has("link-count-mismatch"));
        CHECK(validate_tour(w, {{{0, 0}, {0, 1}, {2, 1}, {4, 1}, {4, 0}}, {{1, {2, 1}}}, 4}).has("redundant-vertex"));
        CHECK(validate_tour(w, {{{0, 0}, {0, 0}, {0, 1}, {4, 1}, {4, 0}}, {{1, {2, 1}}}, 4}).has("zero-length-link"));
        CHECK(validate_tour(w, {{{0, 0}, {0, 1}, {4, 1}, {4, 0}}, {}, 3}).has("visit-count-mismatch"));
        CHECK(validate_tour(w, {{{0, 0}, {0, 1}, {4, 1}, {4, 0}}, {{2, {2, 1}}}, 3}).has("visit-index-mismatch"));
    }

    TEST_CASE("visit order along the polyline") {
        const std::vector<SegmentGeom> segs{{{2, 1}, {2, 3}}, {{3, 1}, {3, 3}}};
        const Instance inst = make_instance(testing::c4(), {0, 0}, {4, 0}, segs);
        const Tour forward{{{0, 0}, {0, 1}, {4, 1}, {4, 0}}, {{1, {2, 1}}, {2, {3, 1}}}, 3};
        CHECK(validate_tour(inst, forward).ok());
        const Tour backward{{{0, 0}, {0, 1}, {4, 1}, {4, 0}}, {{1, {2, 1}}, {2, {3, 3}}}, 3};
        CHECK(validate_tour(inst, backward).has("visit-points-out-of-order"));
        // Meets e_2 before e_1.
        const Tour reversed{{{0, 0}, {3, 0}, {3, 2}, {1, 2}, {1, 0}, {4, 0}}, {{1, {2, 2}}, {2, {3, 1}}}, 5};
        CHECK(validate_tour(inst, reversed).has("visit-points-out-of-order"));
    }
}

TEST_SUITE("compare_ledgers") {
    TEST_CASE("examples") {
        const Instance w = testing::instance_w();
        const Ledger a = run_stage_one(w);
        CHECK(compare_ledgers(a, a).empty());

        Ledger b = a;
        b.layers[1].base[E][0].range.hi = Rational(1, 2);
        const LedgerDiff d = compare_ledgers(a, b);
        REQUIRE_FALSE(d.empty());
        CHECK(d.items.front().layer == 1);
        CHECK(d.items.front().family == "base");
        CHECK(d.items.front().orient == std::optional<std::size_t>(E));

        CHECK(compare_ledgers(a, oracle_reachable_sets(w)).empty());
    }

    TEST_CASE("canonical form ignores how a family is split") {
        const Instance w = testing::instance_w();
        const Ledger a = run_stage_one(w);
        Ledger b = a;
        b.layers[1].base[E] = {{1, {Rational(1, 2), 1}, 2, E}, {1, {0, Rational(1, 2)}, 2, E}};
        CHECK(compare_ledgers(a, b).empty());
        b.layers[1].links = 5;
        CHECK(compare_ledgers(a, b).items.front().family == "links");
    }
}
