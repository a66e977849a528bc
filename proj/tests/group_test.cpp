#include "doctest.h"
#include "oracles.hpp"
#include "sedf/error.hpp"
#include "sedf/group.hpp"

using namespace sedf;

namespace {

// Every nonempty subset of the group, as bitmasks over ranks.
std::vector<GroupSet> all_nonempty_subsets(const Group& g) {
    std::vector<GroupSet> out;
    for (std::uint32_t mask = 1; mask < (1u << g.order()); ++mask) {
        std::vector<Rank> members;
        for (Rank r = 0; r < g.order(); ++r) {
            if (mask >> r & 1u) members.push_back(r);
        }
        out.emplace_back(g, std::move(members));
    }
    return out;
}

}  // namespace

TEST_CASE("group construction") {
    CHECK(Group({5}).order() == 5);
    CHECK(Group({2}).order() == 2);
    const Group g({3, 3, 3, 3, 3});
    CHECK(g.order() == 243);
    CHECK(g.exponent() == 3);
    CHECK(Group({2, 4}).exponent() == 4);

    for (auto bad : {std::vector<std::uint32_t>{1}, std::vector<std::uint32_t>{0},
                     std::vector<std::uint32_t>{3, 1}, std::vector<std::uint32_t>{}}) {
        try {
            Group{bad};
            FAIL("expected invalid-group");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidGroup);
        }
    }
}

TEST_CASE("element arithmetic") {
    const Group z5({5});
    CHECK(z5.add(3, 4) == 2);
    CHECK(z5.neg(2) == 3);
    CHECK(z5.sub(1, 3) == 3);

    const Group z33({3, 3});
    const GroupElement a{{1, 2}}, b{{2, 2}};
    CHECK(z33.add(a, b) == GroupElement{{0, 1}});
    CHECK(z33.rank(a) == 5);
    CHECK(z33.add(z33.rank(a), z33.rank(b)) == z33.rank(GroupElement{{0, 1}}));
    CHECK(z33.add(a, z33.neg(a)) == GroupElement{{0, 0}});

    CHECK_THROWS_AS(z33.add(GroupElement{{1}}, b), Error);
    CHECK_THROWS_AS(z33.rank(GroupElement{{3, 0}}), Error);
    try {
        z33.neg(GroupElement{{1, 1, 1}});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidElement);
    }
}

TEST_CASE("rank and unrank are inverse bijections") {
    for (const auto& factors : {std::vector<std::uint32_t>{7}, {2, 3, 4}, {3, 3, 3, 3, 3}, {5, 2}}) {
        const Group g(factors);
        for (Rank r = 0; r < g.order(); ++r) {
            const auto el = g.unrank(r);
            CHECK(g.rank(el) == r);
            CHECK(g.unrank(g.add(r, g.neg(r))) == GroupElement{std::vector<std::uint32_t>(factors.size(), 0)});
        }
    }
    // factors[0] is the most significant digit
    CHECK(Group({2, 3}).unrank(4) == GroupElement{{1, 1}});
}

TEST_CASE("difference multiset examples") {
    const Group z5({5});
    const auto single = multiset_difference(z5, GroupSet(z5, {0}), GroupSet(z5, {0}));
    CHECK(single[0] == 1);
    CHECK(single.total() == 1);

    const auto d = multiset_difference(z5, GroupSet(z5, {1, 4}), GroupSet(z5, {2, 3}));
    CHECK(std::vector<Count>(d.counts().begin(), d.counts().end()) == std::vector<Count>{0, 1, 1, 1, 1});

    try {
        multiset_difference(z5, GroupSet{}, GroupSet(z5, {1}));
        FAIL("expected empty-set error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptySet);
    }

    // Delta(S, G) = |S| * G
    const Group g({3, 3, 3});
    std::vector<Rank> everything(g.order());
    for (Rank r = 0; r < g.order(); ++r) everything[r] = r;
    const GroupSet whole(g, everything);
    const GroupSet s(g, {0, 4, 17, 26});
    const auto full = multiset_difference(g, s, whole);
    for (Rank r = 0; r < g.order(); ++r) CHECK(full[r] == 4);
}

TEST_CASE("constant on nonzero") {
    const Group g({3, 3, 3, 3, 3});
    std::vector<Count> twenty(243, 20);
    twenty[0] = 0;
    CHECK(multiset_constant_on_nonzero(g, Multiset(g, twenty)) == 20);

    std::vector<Count> only_zero(243, 0);
    only_zero[0] = 5;
    CHECK_FALSE(multiset_constant_on_nonzero(g, Multiset(g, only_zero)).has_value());

    const Group z5({5});
    CHECK_FALSE(multiset_constant_on_nonzero(z5, Multiset(z5, {0, 1, 2, 1, 1})).has_value());
    CHECK_THROWS_AS(Multiset(z5, {0, -1, 0, 0, 0}), Error);
    CHECK_THROWS_AS(Multiset(z5, {0, 1}), Error);
}

TEST_CASE("difference multiset properties over all subset pairs") {
    for (const auto& factors : {std::vector<std::uint32_t>{5}, {2, 3}, {2, 2}}) {
        const Group g(factors);
        const oracle::Product ref{std::vector<int>(factors.begin(), factors.end())};
        const auto subsets = all_nonempty_subsets(g);
        for (const auto& d1 : subsets) {
            for (const auto& d2 : subsets) {
                const auto delta = multiset_difference(g, d1, d2);
                CHECK(delta.total() == static_cast<Count>(d1.size() * d2.size()));

                const auto expected = oracle::difference_counts(
                    ref, std::vector<int>(d1.begin(), d1.end()), std::vector<int>(d2.begin(), d2.end()));
                for (Rank x = 0; x < g.order(); ++x) {
                    const auto it = expected.find(static_cast<int>(x));
                    CHECK(delta[x] == (it == expected.end() ? 0 : it->second));
                }

                const auto reflected = multiset_difference(g, d2, d1);
                for (Rank x = 0; x < g.order(); ++x) CHECK(delta[x] == reflected[g.neg(x)]);

                for (Rank shift = 0; shift < g.order(); ++shift) {
                    const auto moved = multiset_difference(g, d1.transform(g, 1, shift),
                                                           d2.transform(g, 1, shift));
                    CHECK(moved == delta);
                }
            }
            CHECK(multiset_difference(g, d1, d1)[0] == static_cast<Count>(d1.size()));
        }
    }
}

TEST_CASE("group sets normalise their members") {
    const Group z7({7});
    const GroupSet s(z7, {5, 1, 5, 3});
    CHECK(std::vector<Rank>(s.begin(), s.end()) == std::vector<Rank>{1, 3, 5});
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(4));
    CHECK_THROWS_AS(GroupSet(z7, {7}), Error);
    const auto image = s.transform(z7, 3, 1);  // x -> 3x + 1
    CHECK(std::vector<Rank>(image.begin(), image.end()) == std::vector<Rank>{2, 3, 4});
}
