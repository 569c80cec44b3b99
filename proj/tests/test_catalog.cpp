#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hecke/catalog.hpp"

using namespace hecke;

TEST_CASE("catalog covers G4 through G15 with consistent arithmetic") {
    std::set<int> ids;
    for (const GroupSpec& g : catalog()) {
        INFO(g.name);
        ids.insert(g.id);
        REQUIRE(g.order == g.center_order * g.l());
        REQUIRE(g.l() == static_cast<int>(g.parabolic_order() * g.x_words.size()));
        REQUIRE(g.tree.size() + 1 == g.x_words.size());
        REQUIRE(g.x_words.front() == "1");
        REQUIRE(g.gen_orders.size() == g.alphabet.size());
        REQUIRE(g.gen_class.size() == g.alphabet.size());
        REQUIRE(g.embedding.size() == g.alphabet.size());
        int maxOrder = g.family == 't' ? 144 : 576;
        REQUIRE(g.order * g.ell == maxOrder);
        REQUIRE_FALSE(g.z_words.empty());
        REQUIRE_FALSE(g.expected_det.empty());
    }
    REQUIRE(ids == std::set<int>{4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15});
}

TEST_CASE("recorded orders and centres match the published table") {
    const std::vector<std::pair<int, std::pair<int, int>>> table = {
        {4, {24, 2}},  {5, {72, 6}},   {6, {48, 4}},   {7, {144, 12}},
        {8, {96, 4}},  {9, {192, 8}},  {10, {288, 12}}, {11, {576, 24}},
        {12, {48, 2}}, {13, {96, 4}},  {14, {144, 6}},  {15, {288, 12}}};
    for (const auto& [id, oc] : table) {
        REQUIRE(spec(id).order == oc.first);
        REQUIRE(spec(id).center_order == oc.second);
    }
}

TEST_CASE("rings expose one invertible constant term per parameter class") {
    for (const GroupSpec& g : catalog()) {
        VarSpec r = g.ring();
        INFO(g.name);
        for (std::size_t i = 0; i < r.size(); ++i) {
            bool isConstTerm = r.name(i).substr(1) == "0";
            REQUIRE(r.invertible(i) == isConstTerm);
        }
        for (std::size_t gi = 0; gi < g.alphabet.size(); ++gi) {
            auto names = g.coeff_names(static_cast<int>(gi));
            REQUIRE(names.size() == g.gen_orders[gi]);
            for (const auto& n : names) REQUIRE(r.index(n) >= 0);
        }
        // the expected determinant parses as a unit of the ring
        LaurentPoly d = LaurentPoly::parse(r, g.expected_det);
        REQUIRE(d.is_unit());
    }
}

TEST_CASE("group lookup accepts ids and names") {
    REQUIRE(spec("G7").id == 7);
    REQUIRE(spec("g12").id == 12);
    REQUIRE(spec("11").id == 11);
    REQUIRE_THROWS_AS(spec(3), std::invalid_argument);
    REQUIRE_THROWS_AS(spec("G16"), std::invalid_argument);
    REQUIRE_THROWS_AS(spec("junk"), std::invalid_argument);
}

TEST_CASE("content hashes distinguish the records") {
    std::set<std::size_t> hs;
    for (const GroupSpec& g : catalog()) hs.insert(g.content_hash());
    REQUIRE(hs.size() == catalog().size());
    REQUIRE(spec(6).content_hash() == spec(6).content_hash());
}

TEST_CASE("theta rows are present exactly where recorded") {
    for (const GroupSpec& g : catalog()) {
        INFO(g.name);
        if (g.id == 7 || g.id == 11 || g.id == 13 || g.id == 15) {
            REQUIRE_FALSE(g.theta.has_value());
        } else {
            REQUIRE(g.theta.has_value());
        }
        if (g.theta_printed) REQUIRE((g.id == 4 || g.id == 5 || g.id == 6));
    }
}
