#include <catch2/catch_amalgamated.hpp>

#include <hecke/coset_table.hpp>

using namespace hecke;

namespace {

CosetTable closed_table(int id) {
    CosetTable t(spec(id));
    t.seed();
    t.saturate();
    t.fill_z();
    return t;
}

LaurentPoly var(const VarSpec& r, const std::string& n) { return LaurentPoly::variable(r, n); }

}  // namespace

TEST_CASE("G6 table closes and every column is filled") {
    CosetTable t = closed_table(6);
    REQUIRE(t.row_count() == 16);
    REQUIRE(t.letter_columns_complete());
    REQUIRE(t.z_columns_complete());
    REQUIRE(t.missing_letter_entries().empty());
}

TEST_CASE("G6 entries match the hand-computed expansions") {
    CosetTable t = closed_table(6);
    const GroupSpec& g = spec(6);
    const VarSpec& R = t.ring();
    const ParabolicContext& P = t.parabolic();
    const int s = 0, u = 1;  // alphabet order of the catalog record
    REQUIRE(g.alphabet.name(s) == "s");
    REQUIRE(g.alphabet.name(u) == "u");

    const LaurentPoly a0 = var(R, "a0"), a1 = var(R, "a1");
    const LaurentPoly a0i = a0.inverse();

    SECTION("b1 . s = b2") {
        const auto& e = t.entry(t.row_index(0, 0), t.column({s, 1}));
        REQUIRE(e.has_value());
        CosetTable::Combo expect = {{t.row_index(0, 1), hp_one(P)}};
        CHECK(*e == expect);
    }

    SECTION("b1 . s^-1 = a0^-1 b2 - a0^-1 a1 b1") {
        const auto& e = t.entry(t.row_index(0, 0), t.column({s, -1}));
        REQUIRE(e.has_value());
        CosetTable::Combo expect = {{t.row_index(0, 0), hp_scalar(P, -(a0i * a1))},
                                    {t.row_index(0, 1), hp_scalar(P, a0i)}};
        CHECK(*e == expect);
    }

    SECTION("b4 . u = a0^-1 u^-1 b6 - a0^-1 a1 u^-1 b5") {
        // the diagonal product: sus crosses into the z = susu su level
        const auto& e = t.entry(t.row_index(0, 3), t.column({u, 1}));
        REQUIRE(e.has_value());
        const HPoly ui = hp_gen_inverse(P);
        CosetTable::Combo expect = {{t.row_index(1, 0), hp_scale(ui, -(a0i * a1))},
                                    {t.row_index(1, 1), hp_scale(ui, a0i)}};
        CHECK(*e == expect);
    }
}

TEST_CASE("plain saturation stalls on G12 and reports the missing entries") {
    GroupSpec g = spec(12);
    g.parent_id = 0;  // forbid the completion through G14
    g.parent_words.clear();
    g.parent_theta.clear();
    CosetTable t(g);
    t.seed();
    try {
        t.saturate();
        FAIL("saturation unexpectedly closed");
    } catch (const SaturationStall& e) {
        CHECK_FALSE(e.missing_entries.empty());
        CHECK(std::string(e.what()).find("G12") != std::string::npos);
        // every reported entry really is absent
        for (auto [r, c] : t.missing_letter_entries()) CHECK_FALSE(t.entry(r, c).has_value());
        CHECK(t.missing_letter_entries().size() == e.missing_entries.size());
    }
}

TEST_CASE("seeding alone leaves gaps that saturation fills") {
    CosetTable t(spec(6));
    t.seed();
    CHECK_FALSE(t.letter_columns_complete());
    const std::size_t before = t.missing_letter_entries().size();
    t.saturate();
    CHECK(t.missing_letter_entries().size() < before);
    CHECK(t.letter_columns_complete());
}
