#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "kappa3/enumerate.hpp"
#include "kappa3/families.hpp"
#include "kappa3/graph6.hpp"
#include "test_util.hpp"

using namespace kappa3;
using namespace kappa3::testutil;

TEST_CASE("class counts for small orders") {
    Enumerator en;
    CHECK(en.all(1).size() == 1);
    CHECK(en.all(4).size() == 11);
    CHECK(en.all(5).size() == 34);
}

TEST_CASE("matching queries") {
    Enumerator en;
    CHECK(en.matching({5, 7, 7, true}).size() == 4);
    CHECK(en.matching({5, 10, 10, true}).size() == 1);
    CHECK(en.matching({6, 9, 9, true}).size() >= 5);
    CHECK_THROWS_AS(en.matching({5, 8, 7, false}), std::invalid_argument);
    CHECK_THROWS_AS(en.matching({5, 0, 11, false}), std::invalid_argument);
    CHECK_THROWS_AS(en.all(10), std::invalid_argument);
}

TEST_CASE("agreement with filter-all oracle per (m, connected) cell, n <= 6") {
    Enumerator en;
    for (int n = 0; n <= 6; ++n) {
        std::map<std::pair<int, bool>, int> expected;
        for (const Graph& g : filter_all_classes(n))
            ++expected[{g.edge_count(), g.is_connected()}];
        std::map<std::pair<int, bool>, int> got;
        for (const Graph& g : en.all(n)) ++got[{g.edge_count(), g.is_connected()}];
        CHECK(expected == got);
    }
}

TEST_CASE("no two emitted graphs are isomorphic; queries are respected") {
    Enumerator en;
    std::set<CanonicalKey> keys;
    for (const Graph& g : en.all(6)) CHECK(keys.insert(canonical_form(g)).second);
    for (const Graph& g : en.matching({6, 5, 8, true})) {
        CHECK(g.is_connected());
        CHECK(g.edge_count() >= 5);
        CHECK(g.edge_count() <= 8);
    }
}

TEST_CASE("two runs emit identical sequences") {
    Enumerator a, b;
    const auto& ga = a.all(6);
    const auto& gb = b.all(6);
    REQUIRE(ga.size() == gb.size());
    for (std::size_t i = 0; i < ga.size(); ++i) CHECK(ga[i] == gb[i]);
}

TEST_CASE("graph6 ingestion") {
    std::istringstream in("Bw\n");
    auto r = ingest_graph6(in, false);
    REQUIRE(r.graphs.size() == 1);
    CHECK(are_isomorphic(r.graphs[0], complete_graph(3)));
    CHECK(r.errors.empty());
}

TEST_CASE("ingestion dedups isomorphic lines") {
    // the same P3 under two labelings
    std::string a = graph6_encode(path(3));
    std::string b = graph6_encode(path(3).permuted({1, 0, 2}));
    std::istringstream in(a + "\n" + b + "\n" + a + "\n");
    auto r = ingest_graph6(in, true);
    CHECK(r.graphs.size() == 1);
    std::istringstream in2(a + "\n" + b + "\n");
    CHECK(ingest_graph6(in2, false).graphs.size() == 2);
}

TEST_CASE("ingestion reports malformed lines and keeps going") {
    std::istringstream in("Bw\n\x01garbage\nBw\n");
    auto r = ingest_graph6(in, false);
    CHECK(r.graphs.size() == 2);
    REQUIRE(r.errors.size() == 1);
    CHECK(r.errors[0].first == 2);
}
