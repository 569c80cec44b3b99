#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include <hecke/verify.hpp>

using namespace hecke;

namespace {

HeckeModel model_of(int id) {
    CosetTable t = build_table(spec(id));
    return build_model(t);
}

nlohmann::ordered_json strip_timing(nlohmann::ordered_json j) {
    for (auto& s : j["stages"]) s.erase("duration_ms");
    return j;
}

}  // namespace

TEST_CASE("tau is coordinate extraction at the identity") {
    HeckeModel mdl = model_of(6);
    CHECK(tau(mdl.unit_vector(), mdl.ring) == LaurentPoly::constant(mdl.ring, 1));
    for (int b = 1; b < mdl.n; ++b) {
        SparseVec v = {{b, LaurentPoly::constant(mdl.ring, 1)}};
        CHECK(tau(v, mdl.ring).is_zero());
    }
    CHECK(tau(mdl.express({{0, 1}, {0, 1}}), mdl.ring) == LaurentPoly::variable(mdl.ring, "a0"));
}

TEST_CASE("condition 3 vanishing on G6, with tau(z^m) recorded") {
    HeckeModel mdl = model_of(6);
    Condition3Result r = condition3_check(mdl);
    INFO(r.first_failure);
    CHECK(r.ok);
    CHECK_FALSE(r.tau_pi.is_zero());
}

TEST_CASE("a non-basis word of the same length breaks the vanishing pattern") {
    // sus is a basis word of G6; sss has the same length but is not a braid
    // word of any basis element, and tau(z^m (sss)^-1) does not vanish
    HeckeModel mdl = model_of(6);
    Word w = mdl.spec->parse("s s s");
    SparseVec v = mdl.apply(mdl.unit_vector(), inverse(w));
    for (int s = 0; s < mdl.m; ++s) v = vec_mul(v, mdl.mat_z());
    CHECK_FALSE(tau(v, mdl.ring).is_zero());

    // while the basis word su itself does vanish there
    Word y = mdl.spec->parse("s u");
    SparseVec vy = mdl.apply(mdl.unit_vector(), inverse(y));
    for (int s = 0; s < mdl.m; ++s) vy = vec_mul(vy, mdl.mat_z());
    CHECK(tau(vy, mdl.ring).is_zero());
}

TEST_CASE("lifting holds for the catalog bases and fails on a duplicate") {
    for (int id : {4, 5, 6, 12}) {
        INFO("G" << id);
        CHECK(lifting_check(spec(id)));
    }

    const GroupSpec& g = spec(6);
    std::vector<Word> words;
    for (int k = 0; k < g.center_order; ++k)
        for (unsigned a = 0; a < g.parabolic_order(); ++a)
            for (const std::string& xw : g.x_words) {
                Word w = g.parse(g.z_words.front());
                Word full;
                for (int i = 0; i < k; ++i) full.insert(full.end(), w.begin(), w.end());
                for (unsigned i = 0; i < a; ++i) full.push_back({g.parabolic_gen, 1});
                Word x = g.parse(xw);
                full.insert(full.end(), x.begin(), x.end());
                words.push_back(std::move(full));
            }
    REQUIRE(lifting_check_words(g, words));
    words[3] = words[2];  // duplicate one basis word
    CHECK_FALSE(lifting_check_words(g, words));
}

TEST_CASE("factorization check covers order, centre and the spanning tree") {
    for (int id : all_group_ids()) {
        INFO("G" << id);
        FactorizationResult r = factorization_check(spec(id));
        INFO(r.first_failure);
        CHECK(r.ok);
    }
}

TEST_CASE("trace symmetry on random word pairs") {
    HeckeModel mdl = model_of(4);
    CHECK(trace_symmetric_sample(mdl, 200, 12, 99));
}

TEST_CASE("the model cache round-trips and rejects stale keys") {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "hecke-cache-test";
    std::filesystem::remove_all(dir);
    HeckeModel mdl = model_of(6);
    save_model(mdl, dir);

    auto loaded = load_model(spec(6), dir);
    REQUIRE(loaded.has_value());
    CHECK(loaded->n == mdl.n);
    CHECK(loaded->mats.size() == mdl.mats.size());
    for (std::size_t c = 0; c < mdl.mats.size(); ++c) CHECK(loaded->mats[c] == mdl.mats[c]);
    CHECK(check_relations(*loaded).ok);

    // a record whose content hash differs must miss the cache
    CHECK_FALSE(load_model(spec(4), dir).has_value());
    GroupSpec tampered = spec(6);
    tampered.expected_det = "a0^264*c0^191";
    CHECK_FALSE(load_model(tampered, dir).has_value());
    std::filesystem::remove_all(dir);
}

TEST_CASE("run_group produces an all-pass verdict for G6") {
    RunConfig cfg;
    Verdict v = run_group(6, cfg);
    CHECK(v.pass);
    REQUIRE(v.stages.size() == 7);
    for (const StageResult& s : v.stages) {
        INFO(s.name << ": " << s.details);
        CHECK(s.pass);
    }
    CHECK(v.stages[4].name == "det-modular");
}

TEST_CASE("reports are reproducible for identical config and seed") {
    RunConfig cfg;
    cfg.checks = {"factorization", "table", "relations", "gram", "det-modular", "cond3", "lifting"};
    cfg.seed = 7;
    Verdict a = run_group(4, cfg);
    Verdict b = run_group(4, cfg);
    CHECK(strip_timing(to_json(a)).dump() == strip_timing(to_json(b)).dump());
}

TEST_CASE("a stage failure aborts the pipeline and fails the verdict") {
    GroupSpec g = spec(6);
    RunConfig cfg;
    Verdict v = run_group(6, cfg);
    REQUIRE(v.pass);

    RunConfig bad = cfg;
    bad.checks = {"factorization"};
    Verdict okOnly = run_group(6, bad);
    CHECK(okOnly.stages.size() == 1);

    // unknown id is refused outright
    CHECK_THROWS_AS(run_group(99, cfg), std::invalid_argument);
}
