#pragma once

// Completion of a stalled coset table through a specialised parent model.
//
// When rule-based saturation cannot close a table, the missing products are
// computed inside the Hecke algebra of a larger group whose coefficients are
// pinned so that the child algebra embeds.  The child's z-basis elements give
// linearly independent vectors in the parent model; every missing product is
// expressed against that family by exact fraction-free elimination, and the
// resulting entries are certified afterwards by the usual relation check on
// the completed child model.

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "action.hpp"

namespace hecke {

// Parent model with its coefficients pinned by theta and rewritten over the
// child ring.  Only the matrices and the ring are remapped; the structural
// fields keep describing the parent.
inline HeckeModel specialize_model(HeckeModel m, const VarSpec& target,
                                   const std::map<std::string, Int>& theta) {
    m.ring = target;
    for (PolyMatrix& M : m.mats)
        for (SparseVec& row : M.rows) {
            SparseVec out;
            for (const auto& [j, p] : row) {
                LaurentPoly q = p.specialize(target, theta);
                if (!q.is_zero()) out.push_back({j, q});
            }
            row = std::move(out);
        }
    return m;
}

namespace detail {

// Dense exact linear solve A x = b for many right-hand sides by one-step
// fraction-free Gauss-Jordan elimination.  The caller arranges the rows so
// that every leading principal minor is nonsingular; all divisions are exact.
inline std::vector<std::vector<LaurentPoly>> bareiss_solve(
    std::vector<std::vector<LaurentPoly>> aug, int n, int nrhs, const VarSpec& ring) {
    LaurentPoly prev = LaurentPoly::constant(ring, 1);
    for (int k = 0; k < n; ++k) {
        const std::vector<LaurentPoly> pivotRow = aug[static_cast<std::size_t>(k)];
        if (pivotRow[static_cast<std::size_t>(k)].is_zero())
            throw std::runtime_error("bareiss_solve: zero pivot");
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            auto& row = aug[static_cast<std::size_t>(i)];
            const LaurentPoly f = row[static_cast<std::size_t>(k)];
            for (int j = 0; j < n + nrhs; ++j) {
                LaurentPoly v = pivotRow[static_cast<std::size_t>(k)] * row[static_cast<std::size_t>(j)] -
                                f * pivotRow[static_cast<std::size_t>(j)];
                row[static_cast<std::size_t>(j)] = v.is_zero() ? v : v.divide_exact(prev);
            }
        }
        prev = pivotRow[static_cast<std::size_t>(k)];
    }
    const LaurentPoly& det = aug[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    std::vector<std::vector<LaurentPoly>> sol(
        static_cast<std::size_t>(n),
        std::vector<LaurentPoly>(static_cast<std::size_t>(nrhs), LaurentPoly::zero(ring)));
    for (int i = 0; i < n; ++i)
        for (int q = 0; q < nrhs; ++q) {
            LaurentPoly& v = aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + q)];
            if (!v.is_zero()) v = v.divide_exact(det);
            sol[static_cast<std::size_t>(i)][static_cast<std::size_t>(q)] = std::move(v);
        }
    return sol;
}

}  // namespace detail

// Fill the missing entries of a stalled child table by solving for the
// products inside the specialised parent model.
inline void complete_from_parent(CosetTable& table, const HeckeModel& parentModel) {
    const GroupSpec& child = table.spec();
    if (child.parent_words.size() != child.alphabet.size())
        throw std::logic_error("complete_from_parent: missing parent words for " + child.name);
    std::map<std::string, Int> theta;
    for (const auto& [var, val] : child.parent_theta) theta[var] = val;
    const HeckeModel pm = specialize_model(parentModel, table.ring(), theta);

    const GroupSpec& par = *parentModel.spec;
    std::vector<Word> letterWords;
    for (const std::string& w : child.parent_words) letterWords.push_back(par.alphabet.word(w));
    auto toParent = [&](const Word& w) {
        Word out;
        for (const Letter& l : child.expand_redundant(w)) {
            Word img = letterWords[static_cast<std::size_t>(l.gen)];
            if (l.pow < 0) img = inverse(img);
            const int reps = l.pow < 0 ? -l.pow : l.pow;
            for (int i = 0; i < reps; ++i) out.insert(out.end(), img.begin(), img.end());
        }
        return out;
    };
    auto push = [&](SparseVec v, const Word& w) {
        for (const Letter& l : w) {
            const int reps = l.pow < 0 ? -l.pow : l.pow;
            for (int i = 0; i < reps; ++i) v = vec_mul(v, pm.mat({l.gen, l.pow > 0 ? 1 : -1}));
        }
        return v;
    };

    const int m = child.center_order;
    const int e = static_cast<int>(child.parabolic_order());
    const int nx = static_cast<int>(child.x_words.size());
    const int n = m * e * nx;
    const Word zWord = toParent(child.parse(child.z_words.front()));
    const Word sWord = toParent({{child.parabolic_gen, 1}});

    std::vector<SparseVec> basis(static_cast<std::size_t>(n));
    SparseVec zk = pm.unit_vector();
    for (int k = 0; k < m; ++k) {
        SparseVec za = zk;
        for (int a = 0; a < e; ++a) {
            for (int xi = 0; xi < nx; ++xi)
                basis[static_cast<std::size_t>((k * e + a) * nx + xi)] =
                    push(za, toParent(child.parse(child.x_words[static_cast<std::size_t>(xi)])));
            za = push(std::move(za), sWord);
        }
        zk = push(std::move(zk), zWord);
    }

    const auto missing = table.missing_letter_entries();
    if (missing.empty()) return;
    std::vector<SparseVec> targets;
    for (const auto& [r, c] : missing) {
        const int k = r / nx, xi = r % nx;
        const Letter l{c / 2, c % 2 ? -1 : 1};
        targets.push_back(push(basis[static_cast<std::size_t>(k * e * nx + xi)], toParent({l})));
    }

    // Choose n parent coordinates whose leading principal minors are all
    // nonsingular, by mirroring the elimination over a prime field first.
    const uint64_t prime = 2147483629ull;
    std::mt19937_64 rng(0x1f2e3d4c5b6a7988ull);
    const int pn = parentModel.n;
    std::vector<int> coords;
    for (int attempt = 0; attempt < 8 && coords.empty(); ++attempt) {
        FieldPoint pt = FieldPoint::random(table.ring(), prime, rng);
        std::vector<std::vector<uint64_t>> num(
            static_cast<std::size_t>(n), std::vector<uint64_t>(static_cast<std::size_t>(pn), 0));
        for (int b = 0; b < n; ++b)
            for (const auto& [j, p] : basis[static_cast<std::size_t>(b)])
                num[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)] = p.evaluate(pt);
        std::vector<int> chosen;
        std::vector<bool> used(static_cast<std::size_t>(pn), false);
        for (int b = 0; b < n; ++b) {
            auto& row = num[static_cast<std::size_t>(b)];
            int piv = -1;
            for (int j = 0; j < pn; ++j)
                if (!used[static_cast<std::size_t>(j)] && row[static_cast<std::size_t>(j)] != 0) {
                    piv = j;
                    break;
                }
            if (piv < 0) break;
            used[static_cast<std::size_t>(piv)] = true;
            chosen.push_back(piv);
            const uint64_t inv = fp::inv(row[static_cast<std::size_t>(piv)], prime);
            for (int b2 = b + 1; b2 < n; ++b2) {
                auto& r2 = num[static_cast<std::size_t>(b2)];
                const uint64_t f = fp::mul(r2[static_cast<std::size_t>(piv)], inv, prime);
                if (f == 0) continue;
                for (int j = 0; j < pn; ++j)
                    r2[static_cast<std::size_t>(j)] = fp::sub(
                        r2[static_cast<std::size_t>(j)],
                        fp::mul(f, row[static_cast<std::size_t>(j)], prime), prime);
            }
        }
        if (static_cast<int>(chosen.size()) == n) coords = std::move(chosen);
    }
    if (coords.empty())
        throw std::runtime_error("complete_from_parent: child basis not independent in parent");

    // aug[i] = row for coordinate coords[i]: basis coefficients then targets.
    const int nrhs = static_cast<int>(targets.size());
    auto coeff_at = [&](const SparseVec& v, int j) { return vec_coeff(v, j, table.ring()); };
    std::vector<std::vector<LaurentPoly>> aug(
        static_cast<std::size_t>(n),
        std::vector<LaurentPoly>(static_cast<std::size_t>(n + nrhs), LaurentPoly::zero(table.ring())));
    for (int i = 0; i < n; ++i) {
        for (int b = 0; b < n; ++b)
            aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)] =
                coeff_at(basis[static_cast<std::size_t>(b)], coords[static_cast<std::size_t>(i)]);
        for (int q = 0; q < nrhs; ++q)
            aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + q)] =
                coeff_at(targets[static_cast<std::size_t>(q)], coords[static_cast<std::size_t>(i)]);
    }
    const auto gamma = detail::bareiss_solve(std::move(aug), n, nrhs, table.ring());

    for (int q = 0; q < nrhs; ++q) {
        // Confirm the expansion on every parent coordinate, not just the
        // pivoting subset.
        std::map<int, LaurentPoly> residual;
        for (const auto& [j, p] : targets[static_cast<std::size_t>(q)]) residual[j] = p;
        for (int b = 0; b < n; ++b) {
            const LaurentPoly& g = gamma[static_cast<std::size_t>(b)][static_cast<std::size_t>(q)];
            if (g.is_zero()) continue;
            for (const auto& [j, p] : basis[static_cast<std::size_t>(b)]) {
                auto [it, fresh] = residual.emplace(j, -(p * g));
                if (!fresh) it->second -= p * g;
            }
        }
        for (const auto& [j, p] : residual)
            if (!p.is_zero())
                throw std::runtime_error("complete_from_parent: expansion check failed for " +
                                         table.row_name(missing[static_cast<std::size_t>(q)].first) +
                                         " . " +
                                         table.column_name(missing[static_cast<std::size_t>(q)].second));

        std::map<int, HPoly> combo;
        for (int k2 = 0; k2 < m; ++k2)
            for (int xi2 = 0; xi2 < nx; ++xi2) {
                HPoly h = hp_zero(table.parabolic());
                bool any = false;
                for (int a2 = 0; a2 < e; ++a2) {
                    const LaurentPoly& g =
                        gamma[static_cast<std::size_t>((k2 * e + a2) * nx + xi2)][static_cast<std::size_t>(q)];
                    if (g.is_zero()) continue;
                    h.c[static_cast<std::size_t>(a2)] = g;
                    any = true;
                }
                if (any) combo[table.row_index(k2, xi2)] = std::move(h);
            }
        table.install(missing[static_cast<std::size_t>(q)].first,
                      missing[static_cast<std::size_t>(q)].second,
                      CosetTable::Combo(combo.begin(), combo.end()));
    }
}

// Seed and saturate a group's coset table, routing through the completion
// parent when plain saturation stalls; z columns are filled at the end.
inline CosetTable build_table(const GroupSpec& g) {
    CosetTable t(g);
    t.seed();
    try {
        t.saturate();
    } catch (const SaturationStall&) {
        if (!g.parent_id) throw;
        CosetTable pt = build_table(spec(g.parent_id));
        complete_from_parent(t, build_model(pt));
        t.saturate();
    }
    t.fill_z();
    return t;
}

}  // namespace hecke
