#include <catch2/catch_amalgamated.hpp>

#include <hecke/gram.hpp>
#include <hecke/induce.hpp>

using namespace hecke;

namespace {

HeckeModel model_of(int id) {
    CosetTable t = build_table(spec(id));
    return build_model(t);
}

}  // namespace

TEST_CASE("G4 Gram blocks: symmetry, recursion oracle and exact determinant") {
    HeckeModel mdl = model_of(4);
    GramBlocks gb = compute_gram(mdl);
    REQUIRE(gb.m == 2);
    REQUIRE(gb.l == 12);
    CHECK(gram_symmetric(gb));

    for (int k = 0; k < 2 * gb.m - 1; ++k) {
        INFO("block A^" << k);
        CHECK(gb.A[static_cast<std::size_t>(k)] == naive_block(mdl, k));
    }

    const LaurentPoly det = determinant_exact(assemble_gram(gb), gb.ring);
    CHECK(det == LaurentPoly::parse(gb.ring, "-c0^96"));
    CHECK(det.is_unit());
    CHECK(determinant_modular(gb, det, 5, 42, 2147483629ull));
}

TEST_CASE("G6 Gram blocks: symmetry, recursion oracle and modular determinant") {
    HeckeModel mdl = model_of(6);
    GramBlocks gb = compute_gram(mdl);
    CHECK(gram_symmetric(gb));
    for (int k = 0; k < 2 * gb.m - 1; ++k) {
        INFO("block A^" << k);
        CHECK(gb.A[static_cast<std::size_t>(k)] == naive_block(mdl, k));
    }
    const LaurentPoly expected = LaurentPoly::parse(gb.ring, spec(6).expected_det);
    CHECK(determinant_modular(gb, expected, 5, 42, 2147483629ull));
}

TEST_CASE("a wrong determinant exponent is rejected modularly") {
    HeckeModel mdl = model_of(4);
    GramBlocks gb = compute_gram(mdl);
    CHECK_FALSE(determinant_modular(gb, LaurentPoly::parse(gb.ring, "-c0^95"), 5, 42, 2147483629ull));
    CHECK_FALSE(determinant_modular(gb, LaurentPoly::parse(gb.ring, "c0^96"), 5, 42, 2147483629ull));
}

TEST_CASE("a non-unit expected determinant is refused outright") {
    HeckeModel mdl = model_of(4);
    GramBlocks gb = compute_gram(mdl);
    CHECK_THROWS_AS(determinant_modular(gb, LaurentPoly::parse(gb.ring, "c0^2 + c1"), 5, 42,
                                        2147483629ull),
                    std::invalid_argument);
}

TEST_CASE("a perturbed Gram entry breaks exact symmetry") {
    HeckeModel mdl = model_of(4);
    GramBlocks gb = compute_gram(mdl);
    REQUIRE(gram_symmetric(gb));
    gb.A[1][0][2] += LaurentPoly::constant(gb.ring, 1);
    CHECK_FALSE(gram_symmetric(gb));
}

TEST_CASE("specialisation block form over the tetrahedral family") {
    HeckeModel maxModel = model_of(7);
    GramBlocks maximal = compute_gram(maxModel);
    const FiniteGroup big = FiniteGroup::enumerate(maximal_presentation('t'));

    for (int id : {4, 5, 6}) {
        INFO("G" << id);
        CHECK(specialized_block_check(spec(id), spec(7), maxModel, maximal, big));
    }

    SECTION("a wrong theta image is detected") {
        GroupSpec g = spec(6);
        REQUIRE(g.theta);
        (*g.theta)["b1"] = "1";  // the correct row pins b1 to 0
        CHECK_FALSE(specialized_block_check(g, spec(7), maxModel, maximal, big));
    }
}
