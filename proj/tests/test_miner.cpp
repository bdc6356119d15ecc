#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "doubled/miner.hpp"
#include "doubled/patterns.hpp"
#include "doubled/recognition.hpp"

using namespace doubled;

TEST_CASE("enumeration counts") {
    // dual-method agreement up to 6 vertices; the filter path is the oracle
    for (int n = 0; n <= 6; ++n) {
        std::uint64_t cnt = 0;
        enumerate_graphs(n, [&](const Graph& g) {
            CHECK(g.order() == n);
            ++cnt;
        });
        CHECK(cnt == count_graphs_filter(n));
    }
    // frozen counts, re-derivable by the filter for n<=6
    static const std::uint64_t expect[9] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 7; n <= 8; ++n) {
        std::uint64_t cnt = 0;
        enumerate_graphs(n, [&](const Graph&) { ++cnt; });
        CHECK(cnt == expect[n]);
    }
    CHECK_THROWS_AS(enumerate_graphs(10, [](const Graph&) {}), CapacityError);
}

TEST_CASE("enumeration emits pairwise non-isomorphic graphs") {
    for (int n = 0; n <= 7; ++n) {
        std::set<std::uint64_t> keys;
        std::uint64_t cnt = 0;
        enumerate_graphs(n, [&](const Graph& g) {
            keys.insert(canonical_key64(g));
            ++cnt;
        });
        CHECK(keys.size() == cnt);
    }
}

TEST_CASE("graph6 round trips on every enumerated graph n<=7") {
    enumerate_up_to(7, [&](const Graph& g) { CHECK(graph6_decode(graph6_encode(g)) == g); });
}

TEST_CASE("split obstructions are the classical three") {
    const auto obs = mine_obstructions(class_predicate_for("split"), "split", 5);
    REQUIRE(obs.members.size() == 3);
    const auto& cat = PatternCatalog::instance();
    CHECK(obs.find_isomorphic(cat.graph({PatternName::C4, false})).has_value());
    CHECK(obs.find_isomorphic(cat.graph({PatternName::C4, true})).has_value());
    CHECK(obs.find_isomorphic(cat.graph({PatternName::C5, false})).has_value());
    CHECK(obs.complement_closed());
    CHECK(obs.up_to_complement_count() == 2);
    std::set<std::string> names;
    for (const auto& m : obs.members) names.insert(m.name);
    CHECK(names == std::set<std::string>{"C4", "co-C4", "C5"}); // named from the catalog
}

TEST_CASE("almost-split obstructions reproduce the circus") {
    const auto obs = mine_obstructions(class_predicate_for("almost-split"), "almost-split", 6);
    std::set<std::vector<std::uint8_t>> expect;
    const auto& cat = PatternCatalog::instance();
    for (PatternId id : PatternCatalog::circus()) expect.insert(cat.canon(id).code);
    std::set<std::vector<std::uint8_t>> got;
    for (const auto& m : obs.members) got.insert(m.canon.code);
    CHECK(expect.size() == 23);
    CHECK(got == expect);
    CHECK(obs.complement_closed());

    // every member fails the recognizer and every deletion passes it
    for (const auto& m : obs.members) {
        CHECK_FALSE(recognize_almost_split(m.graph).is_member());
        for (int v = 0; v < m.graph.order(); ++v)
            CHECK(recognize_almost_split(m.graph.with_vertex_deleted(v)).is_member());
    }

    const auto hist = obs.order_histogram();
    CHECK(hist.at(5) == 5);  // C5, K23, co-K23, M21, co-M21
    CHECK(hist.at(6) == 18); // nine six-vertex members and their complements
}

TEST_CASE("mining is source independent") {
    // feed the generator's output back through the graph6 reader
    std::ostringstream corpus;
    enumerate_up_to(6, [&](const Graph& g) { corpus << graph6_encode(g) << "\n"; });
    std::istringstream in(corpus.str());
    const auto from_file =
        mine_obstructions_graph6(class_predicate_for("almost-split"), "almost-split", 6, in);
    const auto from_gen = mine_obstructions(class_predicate_for("almost-split"), "almost-split", 6);
    REQUIRE(from_file.members.size() == from_gen.members.size());
    for (std::size_t i = 0; i < from_gen.members.size(); ++i) {
        CHECK(from_file.members[i].canon == from_gen.members[i].canon);
        CHECK(from_file.members[i].graph == from_gen.members[i].graph); // canonical representatives
    }
}

TEST_CASE("mining rejects bad input") {
    std::istringstream bad("Cl\n\x01garbage\n");
    CHECK_THROWS_AS(
        (void)mine_obstructions_graph6(class_predicate_for("split"), "split", 5, bad),
        Graph6ParseError);
}

TEST_CASE("verify_characterization sees no discrepancies on the known families") {
    const auto split_obs = mine_obstructions(class_predicate_for("split"), "split", 5);
    const auto rep = verify_characterization(class_predicate_for("split"), split_obs, 7, {}, 0, 1);
    CHECK(rep.checked == 1253);
    CHECK(rep.discrepancies.empty());

    const auto circus = mine_obstructions(class_predicate_for("almost-split"), "almost-split", 6);
    const auto rep2 =
        verify_characterization(class_predicate_for("almost-split"), circus, 7, {}, 0, 1);
    CHECK(rep2.discrepancies.empty());

    // a deliberately wrong family is flagged
    auto broken = circus;
    broken.members.erase(broken.members.begin());
    const auto rep3 =
        verify_characterization(class_predicate_for("almost-split"), broken, 6, {}, 0, 1);
    CHECK_FALSE(rep3.discrepancies.empty());
}

TEST_CASE("doubled obstructions up to 7 vertices contain the seed") {
    const auto obs = mine_obstructions(class_predicate_for("doubled"), "doubled", 7);
    const auto& cat = PatternCatalog::instance();
    for (PatternId id : PatternCatalog::family_f_seed())
        CHECK(obs.find_isomorphic(cat.graph(id)).has_value());
    CHECK(obs.complement_closed());
    // the six doubled circus members must not show up
    for (PatternName good : {PatternName::M21, PatternName::P5, PatternName::C6,
                             PatternName::Domino, PatternName::Tent1, PatternName::Tent2}) {
        CHECK_FALSE(obs.find_isomorphic(cat.graph({good, false})).has_value());
        CHECK_FALSE(obs.find_isomorphic(cat.graph({good, true})).has_value());
    }
    // order range sanity: nothing below 5 vertices; 41 of the 44 members
    // live on at most 7 (the remaining three have 9)
    CHECK(obs.order_histogram().begin()->first >= 5);
    CHECK(obs.members.size() == 41);
}
