#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "hecke/catalog.hpp"
#include "hecke/group.hpp"

using namespace hecke;

namespace {

// The maximal groups, enumerated once by Todd-Coxeter.
const FiniteGroup& maximal(char family) {
    static const FiniteGroup g7 = FiniteGroup::enumerate(maximal_presentation('t'));
    static const FiniteGroup g11 = FiniteGroup::enumerate(maximal_presentation('o'));
    return family == 't' ? g7 : g11;
}

// Elements of G_j inside its family's maximal group, via the embedding words.
struct Realized {
    const FiniteGroup* big;
    std::vector<int> elems;          // sorted element ids of the subgroup
    std::vector<int> genElems;       // images of the base generators
};

Realized realize(const GroupSpec& spec) {
    const FiniteGroup& big = maximal(spec.family);
    Realized r;
    r.big = &big;
    for (std::size_t g = 0; g < spec.alphabet.size(); ++g) {
        Word w = big.alphabet().word(spec.embedding[g]);
        r.genElems.push_back(big.eval(w));
    }
    r.elems = big.closure(r.genElems);
    return r;
}

int eval_in(const Realized& r, const GroupSpec& spec, const Word& w) {
    int e = 0;
    for (const Letter& l : spec.expand_redundant(w)) {
        int g = r.genElems[static_cast<std::size_t>(l.gen)];
        e = r.big->mul(e, l.pow > 0 ? g : r.big->inv(g));
    }
    return e;
}

}  // namespace

TEST_CASE("small direct enumerations") {
    Presentation cyc;
    cyc.alphabet = Alphabet({"a"});
    cyc.orders = {6};
    REQUIRE(FiniteGroup::enumerate(cyc).order() == 6);

    Presentation s3;
    s3.alphabet = Alphabet({"a", "b"});
    s3.orders = {2, 2};
    s3.relations = {{s3.alphabet.word("a b a"), s3.alphabet.word("b a b")}};
    FiniteGroup g = FiniteGroup::enumerate(s3);
    REQUIRE(g.order() == 6);
    REQUIRE(g.relators_hold());
    REQUIRE(g.center().size() == 1);

    Presentation q8;  // <i,j | i4, i2 = j2, jij^-1 = i^-1>
    q8.alphabet = Alphabet({"i", "j"});
    q8.orders = {4, 4};
    q8.relations = {{q8.alphabet.word("i i"), q8.alphabet.word("j j")},
                    {q8.alphabet.word("j i j^-1"), q8.alphabet.word("i^-1")}};
    FiniteGroup q = FiniteGroup::enumerate(q8);
    REQUIRE(q.order() == 8);
    REQUIRE(q.center().size() == 2);
}

TEST_CASE("maximal groups have the right order and centre") {
    const FiniteGroup& g7 = maximal('t');
    REQUIRE(g7.order() == 144);
    REQUIRE(g7.relators_hold());
    REQUIRE(g7.center().size() == 12);
    int z = g7.eval(g7.alphabet().word("s t u"));
    REQUIRE(g7.element_order(z) == 12);
    REQUIRE(g7.closure({z}).size() == 12);

    const FiniteGroup& g11 = maximal('o');
    REQUIRE(g11.order() == 576);
    REQUIRE(g11.relators_hold());
    REQUIRE(g11.center().size() == 24);
    int z11 = g11.eval(g11.alphabet().word("s t u"));
    REQUIRE(g11.element_order(z11) == 24);
}

TEST_CASE("every catalog group has the recorded order and centre") {
    for (int id : all_group_ids()) {
        const GroupSpec& gs = spec(id);
        INFO(gs.name);
        Realized r = realize(gs);
        REQUIRE(static_cast<int>(r.elems.size()) == gs.order);
        std::vector<int> zc = r.big->center_of(r.elems, r.genElems);
        REQUIRE(static_cast<int>(zc.size()) == gs.center_order);
        // generator orders match the presentation
        for (std::size_t g = 0; g < gs.alphabet.size(); ++g)
            REQUIRE(r.big->element_order(r.genElems[g]) == static_cast<int>(gs.gen_orders[g]));
        // the defining braid relations hold in the realization
        for (const auto& [w1, w2] : gs.relations)
            REQUIRE(eval_in(r, gs, gs.parse(w1)) == eval_in(r, gs, gs.parse(w2)));
        // all z words land on one central element of order m, generating Z_j
        int z = eval_in(r, gs, gs.parse(gs.z_words.front()));
        for (const auto& w : gs.z_words) REQUIRE(eval_in(r, gs, gs.parse(w)) == z);
        REQUIRE(r.big->element_order(z) == gs.center_order);
        std::vector<int> zgen = r.big->closure({z});
        REQUIRE(zgen == zc);
        // z_j equals z^ell for the maximal group's z = stu
        int zmax = r.big->eval(r.big->alphabet().word("s t u"));
        int ze = 0;
        for (int i = 0; i < gs.ell; ++i) ze = r.big->mul(ze, zmax);
        REQUIRE(z == ze);
    }
}

TEST_CASE("factorization G = Z P X is exact for every group") {
    for (int id : all_group_ids()) {
        const GroupSpec& gs = spec(id);
        INFO(gs.name);
        Realized r = realize(gs);
        int z = eval_in(r, gs, gs.parse(gs.z_words.front()));
        std::vector<int> Z = r.big->closure({z});
        int g0 = r.genElems[static_cast<std::size_t>(gs.parabolic_gen)];
        std::vector<int> P = r.big->closure({g0});
        REQUIRE(P.size() == gs.parabolic_order());
        std::vector<int> X;
        for (const auto& xw : gs.x_words) X.push_back(eval_in(r, gs, gs.parse(xw)));
        REQUIRE(verify_factorization(*r.big, Z, P, X, static_cast<std::size_t>(gs.order)));
    }
}

TEST_CASE("spanning trees are connected, distinct and label-consistent") {
    for (int id : all_group_ids()) {
        const GroupSpec& gs = spec(id);
        INFO(gs.name);
        Realized r = realize(gs);
        std::vector<int> X;
        for (const auto& xw : gs.x_words) X.push_back(eval_in(r, gs, gs.parse(xw)));
        SpanningTree t;
        std::vector<int> labels;
        for (const TreeEdgeSpec& e : gs.tree) {
            Word lab = gs.parse(e.label);
            t.edges.push_back({e.from, e.to, lab});
            labels.push_back(eval_in(r, gs, lab));
        }
        REQUIRE(verify_tree(*r.big, t, X, labels));
    }
}

TEST_CASE("redundant generators match their defining words") {
    for (int id : all_group_ids()) {
        const GroupSpec& gs = spec(id);
        Realized r = realize(gs);
        for (const auto& [name, def] : gs.redundant_defs) {
            INFO(gs.name << " " << name);
            Word w = gs.parse(def);
            REQUIRE(eval_in(r, gs, w) != 0);  // nontrivial
        }
    }
}
