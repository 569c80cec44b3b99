#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <hecke/induce.hpp>

using namespace hecke;

namespace {

HeckeModel model_of(int id) {
    CosetTable t = build_table(spec(id));
    return build_model(t);
}

Word random_word(const GroupSpec& g, std::mt19937_64& rng, int maxlen) {
    std::uniform_int_distribution<int> len(1, maxlen);
    std::uniform_int_distribution<int> gen(0, static_cast<int>(g.alphabet.size()) - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    Word w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back({gen(rng), sgn(rng) ? 1 : -1});
    return w;
}

}  // namespace

TEST_CASE("small models satisfy every defining relation") {
    for (int id : {4, 6}) {
        HeckeModel mdl = model_of(id);
        RelationCheck rc = check_relations(mdl);
        INFO("G" << id << ": " << rc.first_failure);
        CHECK(rc.ok);
    }
}

TEST_CASE("the G12 model built through its completion parent is certified") {
    HeckeModel mdl = model_of(12);
    REQUIRE(mdl.n == 48);
    RelationCheck rc = check_relations(mdl);
    INFO(rc.first_failure);
    CHECK(rc.ok);
}

TEST_CASE("inverse coherence on random words") {
    HeckeModel mdl = model_of(6);
    const SparseVec unit = mdl.unit_vector();
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 200; ++t) {
        Word w = random_word(*mdl.spec, rng, 8);
        SparseVec v = mdl.apply(mdl.express(w), inverse(w));
        CHECK(v == unit);
    }
}

TEST_CASE("the quadratic relation in coordinates") {
    HeckeModel mdl = model_of(6);
    const LaurentPoly a0 = LaurentPoly::variable(mdl.ring, "a0");
    const LaurentPoly a1 = LaurentPoly::variable(mdl.ring, "a1");
    // s has basis index 1 (the x-word after the identity), so T_s^2 = a1 T_s + a0
    SparseVec got = mdl.express({{0, 1}, {0, 1}});
    SparseVec expect = {{0, a0}, {1, a1}};
    CHECK(got == expect);
    CHECK(vec_coeff(got, 0, mdl.ring) == a0);
}

TEST_CASE("a corrupted matrix entry is caught by the relation check") {
    HeckeModel mdl = model_of(4);
    REQUIRE(check_relations(mdl).ok);
    // perturb one coefficient of the first generator's action matrix
    SparseVec& row = mdl.mats[0].rows[3];
    REQUIRE_FALSE(row.empty());
    row[0].second += LaurentPoly::constant(mdl.ring, 1);
    CHECK_FALSE(check_relations(mdl).ok);
}
