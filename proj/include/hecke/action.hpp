#pragma once

// Sparse action matrices on the z-basis: one |W| x |W| matrix over the
// coefficient ring per generator, inverse, redundant generator and central
// element, derived from a completed coset table.

#include <map>
#include <string>
#include <vector>

#include "coset_table.hpp"

namespace hecke {

using SparseVec = std::vector<std::pair<int, LaurentPoly>>;  // sorted by index

struct PolyMatrix {
    int n = 0;
    std::vector<SparseVec> rows;  // rows[i] = image of basis element i

    static PolyMatrix identity(int n, const VarSpec& ring) {
        PolyMatrix m;
        m.n = n;
        m.rows.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            m.rows[static_cast<std::size_t>(i)] = {{i, LaurentPoly::constant(ring, 1)}};
        return m;
    }

    bool operator==(const PolyMatrix& o) const { return n == o.n && rows == o.rows; }
    bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

    PolyMatrix mul(const PolyMatrix& o) const {
        PolyMatrix r;
        r.n = n;
        r.rows.resize(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::map<int, LaurentPoly> acc;
            for (const auto& [k, p] : rows[i])
                for (const auto& [j, q] : o.rows[static_cast<std::size_t>(k)]) {
                    auto [it, fresh] = acc.emplace(j, p * q);
                    if (!fresh) it->second += p * q;
                }
            for (auto& [j, v] : acc)
                if (!v.is_zero()) r.rows[i].push_back({j, std::move(v)});
        }
        return r;
    }

    PolyMatrix add(const PolyMatrix& o) const {
        PolyMatrix r;
        r.n = n;
        r.rows.resize(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::map<int, LaurentPoly> acc;
            for (const auto& [j, p] : rows[i]) acc.emplace(j, p);
            for (const auto& [j, p] : o.rows[i]) {
                auto [it, fresh] = acc.emplace(j, p);
                if (!fresh) it->second += p;
            }
            for (auto& [j, v] : acc)
                if (!v.is_zero()) r.rows[i].push_back({j, std::move(v)});
        }
        return r;
    }

    PolyMatrix scale(const LaurentPoly& s) const {
        PolyMatrix r;
        r.n = n;
        r.rows.resize(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (const auto& [j, p] : rows[i]) {
                LaurentPoly v = p * s;
                if (!v.is_zero()) r.rows[i].push_back({j, std::move(v)});
            }
        return r;
    }

    PolyMatrix pow(unsigned k, const VarSpec& ring) const {
        PolyMatrix r = identity(n, ring);
        for (unsigned i = 0; i < k; ++i) r = r.mul(*this);
        return r;
    }
};

inline SparseVec vec_mul(const SparseVec& v, const PolyMatrix& m) {
    std::map<int, LaurentPoly> acc;
    for (const auto& [i, p] : v)
        for (const auto& [j, q] : m.rows[static_cast<std::size_t>(i)]) {
            auto [it, fresh] = acc.emplace(j, p * q);
            if (!fresh) it->second += p * q;
        }
    SparseVec r;
    for (auto& [j, p] : acc)
        if (!p.is_zero()) r.push_back({j, std::move(p)});
    return r;
}

inline LaurentPoly vec_coeff(const SparseVec& v, int idx, const VarSpec& ring) {
    for (const auto& [j, p] : v)
        if (j == idx) return p;
    return LaurentPoly::zero(ring);
}

// The faithful matrix model of H(G_j) on the z-basis, indexed
// (k, a, xi) -> (k*e + a)*|X| + xi.
struct HeckeModel {
    const GroupSpec* spec = nullptr;
    VarSpec ring;
    ParabolicContext pctx;
    int n = 0;        // |W|
    int m = 0;        // |Z_j|
    int e = 0;        // parabolic order
    int nx = 0;       // |X_j|
    int nletters = 0; // base + redundant generators
    int zletter = 0;
    std::vector<PolyMatrix> mats;  // per column id 2*letter + (inverse?1:0)

    int basis_index(int k, int a, int xi) const { return (k * e + a) * nx + xi; }
    int l() const { return e * nx; }

    const PolyMatrix& mat(const Letter& lt) const {
        return mats[static_cast<std::size_t>(2 * lt.gen + (lt.pow > 0 ? 0 : 1))];
    }
    const PolyMatrix& mat_z(bool inv = false) const {
        return mats[static_cast<std::size_t>(2 * zletter + (inv ? 1 : 0))];
    }

    SparseVec unit_vector() const { return {{0, LaurentPoly::constant(ring, 1)}}; }

    SparseVec apply(SparseVec v, const Word& w) const {
        for (const Letter& lt : w) v = vec_mul(v, mat(lt));
        return v;
    }

    SparseVec express(const Word& w) const { return apply(unit_vector(), w); }

    PolyMatrix product(const Word& w) const {
        PolyMatrix r = PolyMatrix::identity(n, ring);
        for (const Letter& lt : w) r = r.mul(mat(lt));
        return r;
    }

    // The braid word of basis element (k, a, xi) over the extended alphabet
    // plus the z letter.
    Word basis_word(int k, int a, int xi) const {
        Word w;
        for (int i = 0; i < k; ++i) w.push_back({zletter, 1});
        for (int i = 0; i < a; ++i) w.push_back({spec->parabolic_gen, 1});
        Word x = spec->parse(spec->x_words[static_cast<std::size_t>(xi)]);
        w.insert(w.end(), x.begin(), x.end());
        return w;
    }
};

inline HeckeModel build_model(const CosetTable& table) {
    const GroupSpec& spec = table.spec();
    HeckeModel mdl;
    mdl.spec = &spec;
    mdl.ring = table.ring();
    mdl.pctx = table.parabolic();
    mdl.m = spec.center_order;
    mdl.e = static_cast<int>(spec.parabolic_order());
    mdl.nx = static_cast<int>(spec.x_words.size());
    mdl.n = mdl.m * mdl.e * mdl.nx;
    mdl.nletters = static_cast<int>(table.letter_count());
    mdl.zletter = table.z_letter();
    const std::size_t ncols = 2 * (table.letter_count() + 1);
    mdl.mats.resize(ncols);
    for (std::size_t c = 0; c < ncols; ++c) {
        PolyMatrix& M = mdl.mats[c];
        M.n = mdl.n;
        M.rows.resize(static_cast<std::size_t>(mdl.n));
        for (int k = 0; k < mdl.m; ++k)
            for (int xi = 0; xi < mdl.nx; ++xi) {
                const auto& ent = table.entry(table.row_index(k, xi), static_cast<int>(c));
                if (!ent)
                    throw std::runtime_error("build_model: incomplete column " +
                                             table.column_name(static_cast<int>(c)));
                for (int a = 0; a < mdl.e; ++a) {
                    std::map<int, LaurentPoly> acc;
                    HPoly ga = hp_gen_power(mdl.pctx, static_cast<unsigned>(a));
                    for (const auto& [r2, h] : *ent) {
                        HPoly prod = hp_mul(mdl.pctx, ga, h);
                        int k2 = r2 / mdl.nx, xi2 = r2 % mdl.nx;
                        for (int b = 0; b < mdl.e; ++b) {
                            if (prod.c[static_cast<std::size_t>(b)].is_zero()) continue;
                            int col = mdl.basis_index(k2, b, xi2);
                            auto [it, fresh] = acc.emplace(col, prod.c[static_cast<std::size_t>(b)]);
                            if (!fresh) it->second += prod.c[static_cast<std::size_t>(b)];
                        }
                    }
                    SparseVec& row = M.rows[static_cast<std::size_t>(mdl.basis_index(k, a, xi))];
                    for (auto& [j, p] : acc)
                        if (!p.is_zero()) row.push_back({j, std::move(p)});
                }
            }
    }
    return mdl;
}

struct RelationCheck {
    bool ok = true;
    std::string first_failure;

    void fail(const std::string& what) {
        if (ok) first_failure = what;
        ok = false;
    }
};

// Every defining relation as an exact matrix identity, plus the basis
// faithfulness proxy: the expansions of the basis words stack to the identity.
inline RelationCheck check_relations(const HeckeModel& mdl) {
    const GroupSpec& spec = *mdl.spec;
    RelationCheck rc;
    for (const auto& [w1, w2] : spec.relations) {
        if (mdl.product(spec.parse(w1)) != mdl.product(spec.parse(w2))) {
            rc.fail("braid relation " + w1 + " = " + w2);
            return rc;
        }
    }
    for (std::size_t g = 0; g < spec.alphabet.size(); ++g) {
        const unsigned e = spec.gen_orders[g];
        const PolyMatrix& M = mdl.mat({static_cast<int>(g), 1});
        PolyMatrix lhs = M.pow(e, mdl.ring);
        PolyMatrix rhs;
        rhs.n = mdl.n;
        rhs.rows.resize(static_cast<std::size_t>(mdl.n));
        auto names = spec.coeff_names(static_cast<int>(g));
        for (unsigned k = 0; k < e; ++k)
            rhs = rhs.add(M.pow(k, mdl.ring).scale(LaurentPoly::variable(mdl.ring, names[k])));
        if (lhs != rhs) {
            rc.fail("Hecke power relation for " + spec.alphabet.name(static_cast<int>(g)));
            return rc;
        }
    }
    PolyMatrix id = PolyMatrix::identity(mdl.n, mdl.ring);
    for (int g = 0; g <= mdl.zletter; ++g) {
        const PolyMatrix& P = mdl.mats[static_cast<std::size_t>(2 * g)];
        const PolyMatrix& Q = mdl.mats[static_cast<std::size_t>(2 * g + 1)];
        if (P.mul(Q) != id || Q.mul(P) != id) {
            rc.fail("inverse pair for letter " + std::to_string(g));
            return rc;
        }
    }
    for (std::size_t i = 0; i < spec.redundant_defs.size(); ++i) {
        const PolyMatrix& R = mdl.mats[2 * (spec.alphabet.size() + i)];
        if (R != mdl.product(spec.parse(spec.redundant_defs[i].second))) {
            rc.fail("redundant definition " + spec.redundant_defs[i].first);
            return rc;
        }
    }
    for (const auto& zw : spec.z_words) {
        if (mdl.mat_z() != mdl.product(spec.parse(zw))) {
            rc.fail("central element word z = " + zw);
            return rc;
        }
    }
    for (std::size_t g = 0; g < spec.alphabet.size(); ++g) {
        const PolyMatrix& M = mdl.mats[2 * g];
        if (mdl.mat_z().mul(M) != M.mul(mdl.mat_z())) {
            rc.fail("centrality of z against " + spec.alphabet.name(static_cast<int>(g)));
            return rc;
        }
    }
    for (int k = 0; k < mdl.m; ++k)
        for (int a = 0; a < mdl.e; ++a)
            for (int xi = 0; xi < mdl.nx; ++xi) {
                SparseVec v = mdl.express(mdl.basis_word(k, a, xi));
                SparseVec expect = {{mdl.basis_index(k, a, xi), LaurentPoly::constant(mdl.ring, 1)}};
                if (v != expect) {
                    rc.fail("basis expansion of z^" + std::to_string(k) + " g0^" +
                            std::to_string(a) + " x" + std::to_string(xi + 1));
                    return rc;
                }
            }
    return rc;
}

}  // namespace hecke
