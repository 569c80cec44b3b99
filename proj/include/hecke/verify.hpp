#pragma once

// Per-group verdict assembly: condition (1) via Gram symmetry plus the unit
// determinant, condition (2) via the group-level lifting check, condition (3)
// via the vanishing criterion tau(z^{m-k} y_i^{-1}) = 0, wrapped in a staged
// pipeline with a reproducible JSON report.

#include <chrono>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include <nlohmann/json.hpp>

#include "cache.hpp"
#include "gram.hpp"
#include "induce.hpp"

namespace hecke {

inline constexpr const char* kVersion = "1.0.0";

inline LaurentPoly tau(const SparseVec& v, const VarSpec& ring) { return vec_coeff(v, 0, ring); }

// ---------------------------------------------------------------------------
// Group-level realization inside the family's maximal group.

inline const FiniteGroup& maximal_group(char family) {
    static const FiniteGroup tet = FiniteGroup::enumerate(maximal_presentation('t'));
    static const FiniteGroup oct = FiniteGroup::enumerate(maximal_presentation('o'));
    return family == 't' ? tet : oct;
}

struct RealizedGroup {
    const FiniteGroup* big = nullptr;
    std::vector<int> genElems;  // images of the base generators
    std::vector<int> elems;     // the subgroup, sorted element ids
};

inline RealizedGroup realize(const GroupSpec& g) {
    RealizedGroup r;
    r.big = &maximal_group(g.family);
    for (const std::string& w : g.embedding)
        r.genElems.push_back(r.big->eval(r.big->alphabet().word(w)));
    r.elems = r.big->closure(r.genElems);
    return r;
}

// Evaluate a word over the group's extended alphabet inside the maximal group.
inline int eval_in(const RealizedGroup& r, const GroupSpec& g, const Word& w) {
    return r.big->eval(g.to_maximal(w, r.big->alphabet()));
}

// Order, centre, Z*P*X factorization and the spanning tree, all at group level.
struct FactorizationResult {
    bool ok = true;
    std::string first_failure;

    void fail(const std::string& what) {
        if (ok) first_failure = what;
        ok = false;
    }
};

inline FactorizationResult factorization_check(const GroupSpec& g) {
    FactorizationResult res;
    const RealizedGroup r = realize(g);
    const FiniteGroup& big = *r.big;
    if (static_cast<int>(r.elems.size()) != g.order) {
        res.fail("subgroup order " + std::to_string(r.elems.size()));
        return res;
    }
    const int z = eval_in(r, g, g.parse(g.z_words.front()));
    if (big.element_order(z) != g.center_order) {
        res.fail("centre generator order " + std::to_string(big.element_order(z)));
        return res;
    }
    if (big.center_of(r.elems, r.genElems).size() != static_cast<std::size_t>(g.center_order)) {
        res.fail("centre size mismatch");
        return res;
    }
    std::vector<int> Z, P, X;
    for (int k = 0, e = 0; k < g.center_order; ++k, e = big.mul(e, z)) Z.push_back(e);
    const int g0 = r.genElems[static_cast<std::size_t>(g.parabolic_gen)];
    for (unsigned a = 0, e = 0; a < g.parabolic_order(); ++a, e = big.mul(e, g0))
        P.push_back(static_cast<int>(e));
    for (const std::string& w : g.x_words) X.push_back(eval_in(r, g, g.parse(w)));
    if (!verify_factorization(big, Z, P, X, static_cast<std::size_t>(g.order))) {
        res.fail("Z*P*X products not pairwise distinct");
        return res;
    }
    SpanningTree tree;
    std::vector<int> labels;
    for (const TreeEdgeSpec& e : g.tree) {
        tree.edges.push_back({e.from, e.to, g.parse(e.label)});
        labels.push_back(eval_in(r, g, g.parse(e.label)));
    }
    if (!verify_tree(big, tree, X, labels)) res.fail("spanning tree check");
    return res;
}

// The group-level content behind condition (2): the |W| basis words land
// bijectively on the group, with the identity among them.
inline bool lifting_check(const GroupSpec& g) {
    const RealizedGroup r = realize(g);
    std::set<int> hit;
    bool identity = false;
    const int z = eval_in(r, g, g.parse(g.z_words.front()));
    for (int k = 0, zk = 0; k < g.center_order; ++k, zk = r.big->mul(zk, z))
        for (unsigned a = 0; a < g.parabolic_order(); ++a)
            for (const std::string& xw : g.x_words) {
                Word w;
                for (unsigned i = 0; i < a; ++i) w.push_back({g.parabolic_gen, 1});
                Word x = g.parse(xw);
                w.insert(w.end(), x.begin(), x.end());
                const int e = r.big->mul(zk, eval_in(r, g, w));
                hit.insert(e);
                if (e == 0) identity = true;
            }
    return identity && hit.size() == static_cast<std::size_t>(g.order);
}

// Variant for fault-injection tests: same evaluation, explicit word list.
inline bool lifting_check_words(const GroupSpec& g, const std::vector<Word>& words) {
    const RealizedGroup r = realize(g);
    std::set<int> hit;
    bool identity = false;
    for (const Word& w : words) {
        const int e = eval_in(r, g, w);
        hit.insert(e);
        if (e == 0) identity = true;
    }
    return identity && hit.size() == static_cast<std::size_t>(g.order);
}

// ---------------------------------------------------------------------------
// Condition (3): tau(z^{m-k} y_i^{-1}) = 0 for every basis label (k,i) != (0,1).

struct Condition3Result {
    bool ok = true;
    std::string first_failure;
    LaurentPoly tau_pi;  // tau(z^m), recorded, must be nonzero
};

inline Condition3Result condition3_check(const HeckeModel& mdl) {
    Condition3Result res;
    res.tau_pi = LaurentPoly::zero(mdl.ring);
    const int m = mdl.m, l = mdl.l();
    std::vector<std::string> failures(static_cast<std::size_t>(l));
    std::vector<LaurentPoly> pis(static_cast<std::size_t>(l), LaurentPoly::zero(mdl.ring));
    detail::parallel_for(l, [&](int i) {
        Word w = inverse(y_word(mdl, i));
        SparseVec v = mdl.apply(mdl.unit_vector(), w);
        // walk z^{m-k} downward: start at z^m y_i^{-1}, peel one z per step
        for (int s = 0; s < m; ++s) v = vec_mul(v, mdl.mat_z());
        for (int k = 0; k < m; ++k) {
            if (k > 0) v = vec_mul(v, mdl.mat_z(true));
            const LaurentPoly t = tau(v, mdl.ring);
            if (k == 0 && i == 0) {
                pis[0] = t;
            } else if (!t.is_zero() && failures[static_cast<std::size_t>(i)].empty()) {
                failures[static_cast<std::size_t>(i)] =
                    "tau(z^" + std::to_string(m - k) + " y_" + std::to_string(i + 1) +
                    "^-1) = " + t.to_string();
            }
        }
    });
    res.tau_pi = pis[0];
    for (const std::string& f : failures)
        if (!f.empty()) {
            res.ok = false;
            res.first_failure = f;
            break;
        }
    if (res.ok && res.tau_pi.is_zero()) {
        res.ok = false;
        res.first_failure = "tau(z^m) vanished";
    }
    return res;
}

// ---------------------------------------------------------------------------
// Trace property sampling: tau(w1 w2) = tau(w2 w1) on random word pairs.

inline bool trace_symmetric_sample(const HeckeModel& mdl, int pairs, int maxlen, uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int ngen = static_cast<int>(mdl.spec->alphabet.size());
    std::uniform_int_distribution<int> len(0, maxlen);
    std::uniform_int_distribution<int> gen(0, ngen - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    auto randomWord = [&] {
        Word w;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) w.push_back({gen(rng), sgn(rng) ? 1 : -1});
        return w;
    };
    for (int t = 0; t < pairs; ++t) {
        const Word w1 = randomWord(), w2 = randomWord();
        const SparseVec a = mdl.apply(mdl.express(w1), w2);
        const SparseVec b = mdl.apply(mdl.express(w2), w1);
        if (tau(a, mdl.ring) != tau(b, mdl.ring)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Staged per-group pipeline.

struct RunConfig {
    std::set<std::string> checks = default_checks();
    int trials = 5;
    uint64_t seed = 42;
    uint64_t prime = 2147483629ull;  // 31-bit prime
    std::string cache_dir;
    bool force_exact = false;

    static std::set<std::string> default_checks() {
        return {"factorization", "table", "relations", "gram",
                "det-exact",     "det-modular", "cond3", "lifting"};
    }
    static const std::set<std::string>& known_checks() {
        static const std::set<std::string> k = {"factorization", "table",   "relations",
                                                "gram",          "det-exact", "det-modular",
                                                "cond3",         "lifting", "specialized-block"};
        return k;
    }
};

// Exact determinants are on by default only where they stay desk-scale:
// the two smallest Gram matrices with the fewest ring variables.
inline bool det_exact_small(int id) { return id == 4 || id == 12; }

// G11 (m = 24, l = 24) cannot hold even a sliding window of exact upper
// blocks in 6 GB; its upper-block symmetry follows from the exactly checked
// base blocks via the recursion identity, and the determinant is checked on
// the numerically recursed blocks.
inline bool gram_by_corollary(int id) { return id == 11; }

struct StageResult {
    std::string name;
    bool pass = false;
    std::string details;
    long duration_ms = 0;
};

struct Verdict {
    int id = 0;
    std::string group;
    bool pass = true;
    std::vector<StageResult> stages;
    uint64_t seed = 0;
    uint64_t prime = 0;
    int trials = 0;
    std::string cache_hash;
};

inline nlohmann::ordered_json to_json(const Verdict& v) {
    nlohmann::ordered_json j;
    j["group"] = v.group;
    j["stages"] = nlohmann::ordered_json::array();
    for (const StageResult& s : v.stages)
        j["stages"].push_back({{"name", s.name},
                               {"pass", s.pass},
                               {"details", s.details},
                               {"duration_ms", s.duration_ms}});
    j["seed"] = v.seed;
    j["prime"] = v.prime;
    j["trials"] = v.trials;
    j["cache_hash"] = v.cache_hash;
    j["version"] = kVersion;
    return j;
}

namespace detail {

// Shared Gram blocks of the family's maximal group, needed by the
// specialisation check of every non-maximal member.
inline const GramBlocks& family_gram(char family, const RunConfig& cfg,
                                     const HeckeModel** modelOut, const FiniteGroup** groupOut) {
    struct Entry {
        HeckeModel model;
        GramBlocks gram;
    };
    static std::map<char, Entry> memo;
    static std::mutex mx;
    std::lock_guard<std::mutex> lock(mx);
    auto it = memo.find(family);
    if (it == memo.end()) {
        const GroupSpec& ms = spec(family == 't' ? 7 : 11);
        Entry e;
        std::optional<HeckeModel> cached;
        if (!cfg.cache_dir.empty()) cached = load_model(ms, cfg.cache_dir);
        if (cached) {
            e.model = std::move(*cached);
        } else {
            CosetTable table = build_table(ms);
            e.model = build_model(table);
            if (!cfg.cache_dir.empty()) save_model(e.model, cfg.cache_dir);
        }
        e.gram = compute_gram(e.model);
        it = memo.emplace(family, std::move(e)).first;
    }
    *modelOut = &it->second.model;
    *groupOut = &maximal_group(family);
    return it->second.gram;
}

}  // namespace detail

inline Verdict run_group(int id, const RunConfig& cfg) {
    const GroupSpec& g = spec(id);
    Verdict v;
    v.id = id;
    v.group = g.name;
    v.seed = cfg.seed;
    v.prime = cfg.prime;
    v.trials = cfg.trials;
    v.cache_hash = hash_hex(g.content_hash());

    const auto want = [&](const char* name) { return cfg.checks.count(name) != 0; };
    bool aborted = false;
    const auto stage = [&](const char* name, const std::function<std::pair<bool, std::string>()>& body) {
        if (aborted || !cfg.checks.count(name)) return;
        StageResult s;
        s.name = name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            auto [pass, details] = body();
            s.pass = pass;
            s.details = std::move(details);
        } catch (const std::exception& e) {
            s.pass = false;
            s.details = std::string("error: ") + e.what();
        }
        s.duration_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                              std::chrono::steady_clock::now() - t0)
                                              .count());
        v.stages.push_back(std::move(s));
        if (!v.stages.back().pass) {
            v.pass = false;
            aborted = true;  // later stages skipped per contract
        }
    };

    stage("factorization", [&]() -> std::pair<bool, std::string> {
        FactorizationResult r = factorization_check(g);
        return {r.ok, r.ok ? "order, centre, Z*P*X and tree verified" : r.first_failure};
    });

    const bool needModel = want("table") || want("relations") || want("gram") ||
                           want("det-exact") || want("det-modular") || want("cond3");
    std::optional<HeckeModel> mdl;
    if (needModel && !aborted) {
        StageResult s;
        s.name = "table";
        const auto t0 = std::chrono::steady_clock::now();
        try {
            std::optional<HeckeModel> cached;
            if (!cfg.cache_dir.empty()) cached = load_model(g, cfg.cache_dir);
            if (cached) {
                mdl = std::move(*cached);
                s.details = "cache hit (" + v.cache_hash + ")";
            } else {
                CosetTable table = build_table(g);
                mdl = build_model(table);
                if (!cfg.cache_dir.empty()) save_model(*mdl, cfg.cache_dir);
                s.details = "saturation closed, " + std::to_string(mdl->n) + " basis elements";
            }
            s.pass = true;
        } catch (const std::exception& e) {
            s.pass = false;
            s.details = std::string("error: ") + e.what();
        }
        s.duration_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                              std::chrono::steady_clock::now() - t0)
                                              .count());
        if (want("table") || !s.pass) v.stages.push_back(s);
        if (!s.pass) {
            v.pass = false;
            aborted = true;
        }
    }

    stage("relations", [&]() -> std::pair<bool, std::string> {
        RelationCheck rc = check_relations(*mdl);
        return {rc.ok, rc.ok ? "all defining relations and basis expansions hold" : rc.first_failure};
    });

    // The small exact-determinant groups keep the fully materialized blocks;
    // everyone else goes through the streamed verification, which holds only a
    // sliding window of exact blocks and checks the determinant numerically.
    const bool runExact = want("det-exact") && (det_exact_small(id) || cfg.force_exact);
    std::optional<GramBlocks> gb;
    std::optional<GramStreamResult> streamed;
    const auto ensureStreamed = [&] {
        if (streamed) return;
        const LaurentPoly expected = LaurentPoly::parse(mdl->ring, g.expected_det);
        // G11's window of exact blocks does not fit in memory; its upper
        // blocks are certified through the recursion identity instead.
        streamed = gram_by_corollary(id)
                       ? verify_gram_corollary(*mdl, expected, cfg.trials, cfg.seed, cfg.prime)
                       : verify_gram_streamed(*mdl, expected, cfg.trials, cfg.seed, cfg.prime);
    };
    if (runExact && !aborted && mdl) gb = compute_gram(*mdl);

    stage("gram", [&]() -> std::pair<bool, std::string> {
        if (gb) {
            const bool sym = gram_symmetric(*gb);
            return {sym, sym ? "all blocks A^0..A^" + std::to_string(2 * gb->m - 2) + " symmetric"
                             : "asymmetric block found"};
        }
        ensureStreamed();
        std::string okMsg =
            streamed->upper_by_corollary
                ? "base blocks A^0..A^" + std::to_string(mdl->m - 1) +
                      " symmetric exactly; upper blocks symmetric by the recursion identity"
                : "all blocks A^0..A^" + std::to_string(2 * mdl->m - 2) + " symmetric";
        return {streamed->symmetric,
                streamed->symmetric
                    ? std::move(okMsg)
                    : "block A^" + std::to_string(streamed->asymmetric_block) + " asymmetric"};
    });

    if (runExact) {
        stage("det-exact", [&]() -> std::pair<bool, std::string> {
            const LaurentPoly expected = LaurentPoly::parse(mdl->ring, g.expected_det);
            const LaurentPoly det = determinant_exact(assemble_gram(*gb), mdl->ring);
            const bool ok = det == expected;
            return {ok, ok ? "det = " + g.expected_det
                           : "det = " + det.to_string() + ", expected " + g.expected_det};
        });
    } else {
        stage("det-modular", [&]() -> std::pair<bool, std::string> {
            bool ok;
            if (gb) {
                const LaurentPoly expected = LaurentPoly::parse(mdl->ring, g.expected_det);
                ok = determinant_modular(*gb, expected, cfg.trials, cfg.seed, cfg.prime);
            } else {
                ensureStreamed();
                ok = streamed->det_ok;
            }
            std::string how = streamed && streamed->upper_by_corollary
                                  ? " points (upper blocks recursed mod p)"
                                  : " points";
            return {ok, (ok ? "matches " : "mismatch vs ") + g.expected_det + " at " +
                            std::to_string(cfg.trials) + how};
        });
    }

    stage("cond3", [&]() -> std::pair<bool, std::string> {
        Condition3Result r = condition3_check(*mdl);
        return {r.ok, r.ok ? "all vanish; tau(z^m) = " + r.tau_pi.to_string() : r.first_failure};
    });

    stage("lifting", [&]() -> std::pair<bool, std::string> {
        const bool ok = lifting_check(g);
        return {ok, ok ? "basis words biject onto the group" : "basis words not bijective"};
    });

    stage("specialized-block", [&]() -> std::pair<bool, std::string> {
        if (g.ell == 1) return {true, "trivial: maximal group of its family"};
        if (!g.theta) return {true, "skipped: no specialisation row in the catalog"};
        const HeckeModel* maxModel = nullptr;
        const FiniteGroup* maxGroup = nullptr;
        const GramBlocks& maximal = detail::family_gram(g.family, cfg, &maxModel, &maxGroup);
        const bool ok = specialized_block_check(g, *maxModel->spec, *maxModel, maximal, *maxGroup);
        return {ok, ok ? "theta image supported on the l-periodic classes"
                       : "nonzero entry outside the allowed classes"};
    });

    return v;
}

inline std::vector<Verdict> run_groups(const std::vector<int>& ids, const RunConfig& cfg, int jobs) {
    std::vector<Verdict> out(ids.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < ids.size(); ++i) out[i] = run_group(ids[i], cfg);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned nt = std::min<std::size_t>(static_cast<std::size_t>(jobs), ids.size());
    for (unsigned t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < ids.size(); i = next.fetch_add(1))
                out[i] = run_group(ids[i], cfg);
        });
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace hecke
