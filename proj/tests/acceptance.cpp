// Acceptance suite: one line per criterion, exit 0 iff all pass.

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>

#include <hecke/verify.hpp>

using namespace hecke;

namespace {

struct GroupRun {
    bool tableClosed = false;
    std::string tableError;
    RelationCheck relations;
    bool gramSymmetric = false;
    bool detOk = false;
    std::string detMode;
    Condition3Result cond3;
    bool traceOk = false;
    std::optional<HeckeModel> model;
    std::optional<GramBlocks> gram;
};

int failures = 0;

void criterion(int num, bool pass, const std::string& what) {
    std::cout << "criterion " << num << ": " << (pass ? "pass" : "FAIL") << " - " << what
              << std::endl;
    if (!pass) ++failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    const std::vector<int> ids = all_group_ids();
    const std::map<int, int> expectedOrder = {{4, 24},   {5, 72},   {6, 48},  {7, 144},
                                              {8, 96},   {9, 192},  {10, 288}, {11, 576},
                                              {12, 48},  {13, 96},  {14, 144}, {15, 288}};

    // 1. group realization: orders and centres
    {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        for (int id : ids) {
            const GroupSpec& g = spec(id);
            const RealizedGroup r = realize(g);
            const auto center = r.big->center_of(r.elems, r.genElems);
            if (static_cast<int>(r.elems.size()) != expectedOrder.at(id) ||
                static_cast<int>(center.size()) != g.center_order) {
                ok = false;
                detail = g.name + " order " + std::to_string(r.elems.size()) + " centre " +
                         std::to_string(center.size());
                break;
            }
        }
        const double dt = seconds_since(t0);
        criterion(1, ok && dt < 10.0,
                  ok ? "orders and centres of G4..G15 as expected (" +
                           std::to_string(dt).substr(0, 4) + " s)"
                     : detail);
    }

    // 2. factorization and spanning trees
    {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        for (int id : ids) {
            FactorizationResult r = factorization_check(spec(id));
            if (!r.ok) {
                ok = false;
                detail = spec(id).name + ": " + r.first_failure;
                break;
            }
        }
        const double dt = seconds_since(t0);
        criterion(2, ok && dt < 10.0,
                  ok ? "Z*P*X factorization and trees verified for all twelve records (" +
                           std::to_string(dt).substr(0, 4) + " s)"
                     : detail);
    }

    // Per-group pipeline shared by criteria 3-8; sequential so the exact
    // Gram windows of the big groups never coexist in memory.  Models and
    // blocks are kept only where a later criterion reuses them (G4, G6).
    std::map<int, GroupRun> runs;
    for (int id : ids) {
        GroupRun& r = runs[id];
        std::optional<HeckeModel> model;
        try {
            CosetTable t = build_table(spec(id));
            model = build_model(t);
            r.tableClosed = true;
        } catch (const std::exception& e) {
            r.tableError = e.what();
            continue;
        }
        r.relations = check_relations(*model);
        const LaurentPoly expected = LaurentPoly::parse(model->ring, spec(id).expected_det);
        if (det_exact_small(id) || id == 6) {
            GramBlocks gb = compute_gram(*model);
            r.gramSymmetric = gram_symmetric(gb);
            if (det_exact_small(id)) {
                r.detMode = "exact";
                r.detOk = determinant_exact(assemble_gram(gb), model->ring) == expected;
            } else {
                r.detMode = "modular";
                r.detOk = determinant_modular(gb, expected, 10, 42, 2147483629ull);
            }
            if (id == 4 || id == 6) r.gram = std::move(gb);
        } else {
            r.detMode = "modular";
            GramStreamResult s =
                gram_by_corollary(id)
                    ? verify_gram_corollary(*model, expected, 10, 42, 2147483629ull)
                    : verify_gram_streamed(*model, expected, 10, 42, 2147483629ull);
            r.gramSymmetric = s.symmetric;
            r.detOk = s.det_ok;
        }
        r.cond3 = condition3_check(*model);
        r.traceOk = trace_symmetric_sample(*model, 200, 12, 1234 + static_cast<uint64_t>(id));
        if (id == 4 || id == 6) r.model = std::move(model);
    }

    // 3. basis certification
    {
        bool ok = true;
        std::string detail = "saturation closes and every relation holds in all twelve models";
        for (int id : ids) {
            const GroupRun& r = runs[id];
            if (!r.tableClosed || !r.relations.ok) {
                ok = false;
                detail = spec(id).name + ": " +
                         (r.tableClosed ? r.relations.first_failure : r.tableError);
                break;
            }
        }
        criterion(3, ok, detail);
    }

    // 4. gram symmetry
    {
        bool ok = true;
        std::string detail =
            "blocks A^0..A^{2m-2} symmetric: exact for eleven groups, exact base blocks "
            "plus the recursion identity for G11";
        for (int id : ids)
            if (!runs[id].gramSymmetric) {
                ok = false;
                detail = spec(id).name + ": asymmetric block";
                break;
            }
        criterion(4, ok, detail);
    }

    // 5. recursion oracle on G4 and G6
    {
        bool ok = true;
        std::string detail = "recursion blocks equal the entrywise products for G4 and G6";
        for (int id : {4, 6}) {
            const GroupRun& r = runs[id];
            if (!r.gram) { ok = false; detail = spec(id).name + ": no gram"; break; }
            for (int k = 0; k < 2 * r.gram->m - 1 && ok; ++k)
                if (r.gram->A[static_cast<std::size_t>(k)] != naive_block(*r.model, k)) {
                    ok = false;
                    detail = spec(id).name + ": block A^" + std::to_string(k) + " differs";
                }
        }
        criterion(5, ok, detail);
    }

    // 6. determinants
    {
        bool ok = true;
        std::string detail =
            "det A4 and det A12 exact; the other ten match their closed forms at 10 points";
        for (int id : ids)
            if (!runs[id].detOk) {
                ok = false;
                detail = spec(id).name + ": " + runs[id].detMode + " determinant mismatch";
                break;
            }
        criterion(6, ok, detail);
    }

    // 7. condition (3)
    {
        bool ok = true;
        std::ostringstream detail;
        detail << "tau(z^{m-k} y_i^-1) = 0 off the identity label; tau(z^m) recorded:";
        for (int id : ids) {
            const GroupRun& r = runs[id];
            if (!r.cond3.ok) {
                ok = false;
                detail.str(spec(id).name + ": " + r.cond3.first_failure);
                break;
            }
            detail << " " << spec(id).name << "=" << r.cond3.tau_pi.to_string();
        }
        criterion(7, ok, detail.str());
    }

    // 8. trace property sampling
    {
        bool ok = true;
        std::string detail = "tau(w1w2) = tau(w2w1) on 200 random pairs per group, |w| <= 12";
        for (int id : ids)
            if (!runs[id].traceOk) {
                ok = false;
                detail = spec(id).name + ": trace sampling failed";
                break;
            }
        criterion(8, ok, detail);
    }

    // 9. fault injection
    {
        bool ok = true;
        std::string detail;
        {
            HeckeModel bad = *runs[4].model;
            bad.mats[0].rows[2][0].second += LaurentPoly::constant(bad.ring, 1);
            if (check_relations(bad).ok) { ok = false; detail = "corrupted entry accepted"; }
        }
        if (ok) {
            const GramBlocks& gb = *runs[4].gram;
            if (determinant_modular(gb, LaurentPoly::parse(gb.ring, "-c0^95"), 5, 42,
                                    2147483629ull)) {
                ok = false;
                detail = "wrong determinant exponent accepted";
            }
        }
        if (ok) {
            const GroupSpec& g = spec(6);
            std::vector<Word> words;
            for (int q = 0; q < g.order; ++q)
                words.push_back(runs[6].model->basis_word(q / runs[6].model->l(),
                                                          (q % runs[6].model->l()) /
                                                              runs[6].model->nx,
                                                          q % runs[6].model->nx));
            words[5] = words[4];
            if (lifting_check_words(g, words)) {
                ok = false;
                detail = "duplicated basis word accepted";
            }
        }
        criterion(9, ok,
                  ok ? "corrupted matrix, wrong det exponent and duplicated basis word all rejected"
                     : detail);
    }

    if (failures == 0) {
        std::cout << "all acceptance criteria pass" << std::endl;
        return 0;
    }
    std::cout << failures << " criteria failed" << std::endl;
    return 1;
}
