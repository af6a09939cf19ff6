#include <catch2/catch_amalgamated.hpp>

#include "whkit/groupoid.hpp"
#include "whkit/io.hpp"

using namespace whkit;

namespace {

// independent brute-force axiom scan, kept separate from the class's own
// validation
void brute_force_check(const Groupoid& g) {
    const std::size_t n = g.arrow_count();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r) {
                bool pq = g.src(p) == g.tgt(q), qr = g.src(q) == g.tgt(r);
                if (pq && qr) {
                    REQUIRE(g.compose(g.compose(p, q), r) == g.compose(p, g.compose(q, r)));
                }
            }
    for (std::size_t p = 0; p < n; ++p) {
        REQUIRE(g.compose(p, g.unit_arrow(g.src(p))) == p);
        REQUIRE(g.compose(g.unit_arrow(g.tgt(p)), p) == p);
        REQUIRE(g.compose(p, g.inv(p)) == g.unit_arrow(g.tgt(p)));
        REQUIRE(g.compose(g.inv(p), p) == g.unit_arrow(g.src(p)));
        REQUIRE(g.inv(g.inv(p)) == p);
        if (g.src(p) == g.tgt(p)) continue;
        for (std::size_t q = 0; q < n; ++q)
            if (g.src(p) == g.tgt(q)) {
                REQUIRE(g.src(g.compose(p, q)) == g.src(q));
                REQUIRE(g.tgt(g.compose(p, q)) == g.tgt(p));
            }
    }
}

}  // namespace

TEST_CASE("pair groupoids") {
    Groupoid g1 = pair_groupoid(1);
    REQUIRE(g1.unit_count() == 1);
    REQUIRE(g1.arrow_count() == 1);
    Groupoid g2 = pair_groupoid(2);
    REQUIRE(g2.unit_count() == 2);
    REQUIRE(g2.arrow_count() == 4);
    brute_force_check(g2);
    Groupoid g3 = pair_groupoid(3);
    REQUIRE(g3.arrow_count() == 9);
    brute_force_check(g3);
    REQUIRE_THROWS_AS(pair_groupoid(0), error);
}

TEST_CASE("group groupoids") {
    Groupoid z2 = cyclic_group_groupoid(2);
    REQUIRE(z2.unit_count() == 1);
    REQUIRE(z2.arrow_count() == 2);
    brute_force_check(z2);
    // g*g = e
    auto g = z2.arrow("g1");
    REQUIRE(z2.compose(g, g) == z2.arrow("g0"));

    // non-group table: constant row (no identity / not cancellative)
    std::vector<std::vector<std::size_t>> bad{{0, 0}, {0, 0}};
    REQUIRE_THROWS_AS(group_groupoid({"a", "b"}, bad), error);
    // associative, has identity, but b lacks an inverse: not a group
    std::vector<std::vector<std::size_t>> noinv{{0, 1}, {1, 1}};
    REQUIRE_THROWS_AS(group_groupoid({"e", "b"}, noinv), error);
}

TEST_CASE("disjoint union and product") {
    Groupoid u = disjoint_union(cyclic_group_groupoid(2), trivial_groupoid());
    REQUIRE(u.unit_count() == 2);
    REQUIRE(u.arrow_count() == 3);
    brute_force_check(u);

    Groupoid p = product(pair_groupoid(2), cyclic_group_groupoid(2));
    REQUIRE(p.unit_count() == 2);
    REQUIRE(p.arrow_count() == 8);
    brute_force_check(p);
}

TEST_CASE("groupoid JSON parsing") {
    // Z/2 as a one-object groupoid, unit arrow written explicitly
    json z2 = {
        {"kind", "groupoid"},
        {"units", {"*"}},
        {"arrows", {{{"id", "e"}, {"src", "*"}, {"tgt", "*"}},
                    {{"id", "g"}, {"src", "*"}, {"tgt", "*"}}}},
        {"comp", {{"e", "e", "e"}, {"e", "g", "g"}, {"g", "e", "g"}, {"g", "g", "e"}}},
        {"inv", {{"e", "e"}, {"g", "g"}}},
    };
    Groupoid g = parse_groupoid(z2);
    REQUIRE(g.arrow_count() == 2);
    REQUIRE(g.compose(g.arrow("g"), g.arrow("g")) == g.arrow("e"));
    brute_force_check(g);

    // pair groupoid on {1,2} with unit arrows omitted from the file
    json pair = {
        {"kind", "groupoid"},
        {"units", {"1", "2"}},
        {"arrows", {{{"id", "a"}, {"src", "1"}, {"tgt", "2"}},
                    {{"id", "b"}, {"src", "2"}, {"tgt", "1"}}}},
        {"comp", {{"a", "b", "id:2"}, {"b", "a", "id:1"}}},
        {"inv", {{"a", "b"}, {"b", "a"}}},
    };
    Groupoid pg = parse_groupoid(pair);
    REQUIRE(pg.unit_count() == 2);
    REQUIRE(pg.arrow_count() == 4);
    brute_force_check(pg);

    // composition declared for a non-composable pair
    json bad = pair;
    bad["comp"].push_back({"a", "a", "a"});
    REQUIRE_THROWS_WITH(parse_groupoid(bad),
                        Catch::Matchers::ContainsSubstring("non-composable"));

    // malformed file
    json malformed = {{"kind", "groupoid"}, {"units", {"*"}}};
    REQUIRE_THROWS_AS(parse_groupoid(malformed), error);
}

TEST_CASE("groupoid serialization round trip") {
    Groupoid g = product(pair_groupoid(2), cyclic_group_groupoid(2));
    Groupoid h = parse_groupoid(serialize_groupoid(g));
    REQUIRE(h.arrow_count() == g.arrow_count());
    REQUIRE(h.unit_count() == g.unit_count());
    for (std::size_t p = 0; p < g.arrow_count(); ++p) {
        REQUIRE(h.arrow_name(p) == g.arrow_name(p));
        REQUIRE(h.inv(p) == g.inv(p));
        for (std::size_t q = 0; q < g.arrow_count(); ++q)
            if (g.composable(p, q)) REQUIRE(h.compose(p, q) == g.compose(p, q));
    }
}
