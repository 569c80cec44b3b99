#pragma once

// The Hecke coset table: rows indexed by Z_j X_j, columns per generator,
// inverse, redundant generator and central element; entries are H'-linear
// combinations of rows.  Filled by deterministic rule-based saturation.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "hpoly.hpp"
#include "word.hpp"

namespace hecke {

class SaturationStall : public std::runtime_error {
public:
    SaturationStall(std::string what, std::vector<std::string> missing)
        : std::runtime_error(std::move(what)), missing_entries(std::move(missing)) {}
    std::vector<std::string> missing_entries;
};

class CosetTable {
public:
    using Combo = std::vector<std::pair<int, HPoly>>;  // sorted by row index

    explicit CosetTable(const GroupSpec& spec)
        : spec_(spec),
          ring_(spec.ring()),
          pctx_(ring_, spec.coeff_names(spec.parabolic_gen)),
          ext_(spec.extended_alphabet()) {
        nletters_ = ext_.size();
        zletter_ = static_cast<int>(nletters_);
        ncols_ = 2 * (nletters_ + 1);
        m_ = spec.center_order;
        nx_ = spec.x_words.size();
        rows_ = static_cast<std::size_t>(m_) * nx_;
        for (const auto& w : spec.x_words) xwords_.push_back(spec.parse(w));
        table_.assign(rows_ * ncols_, std::nullopt);
        buildRelationRules();
    }

    const GroupSpec& spec() const { return spec_; }
    const VarSpec& ring() const { return ring_; }
    const ParabolicContext& parabolic() const { return pctx_; }
    std::size_t row_count() const { return rows_; }
    std::size_t letter_count() const { return nletters_; }
    int z_letter() const { return zletter_; }

    int row_index(int k, int xi) const { return k * static_cast<int>(nx_) + xi; }

    std::string row_name(int r) const {
        int k = r / static_cast<int>(nx_), xi = r % static_cast<int>(nx_);
        std::string s;
        if (k > 0) s = "z^" + std::to_string(k) + " ";
        return s + spec_.x_words[static_cast<std::size_t>(xi)];
    }

    int column(const Letter& l) const { return 2 * l.gen + (l.pow > 0 ? 0 : 1); }

    std::string column_name(int c) const {
        int g = c / 2;
        std::string n = g == zletter_ ? "z" : ext_.name(g);
        if (c % 2) n += "^-1";
        return n;
    }

    const std::optional<Combo>& entry(int row, int col) const {
        return table_[static_cast<std::size_t>(row) * ncols_ + static_cast<std::size_t>(col)];
    }

    // Tree-edge, z-shift and parabolic-absorption entries.
    void seed() {
        for (int k = 0; k < m_; ++k) {
            for (const TreeEdgeSpec& e : spec_.tree) {
                Word lab = spec_.parse(e.label);
                if (lab.size() != 1) throw std::logic_error("tree label must be a single letter");
                set(row_index(k, e.from), column(lab[0]), unit(row_index(k, e.to)));
                set(row_index(k, e.to), column(lab[0].inverse()), unit(row_index(k, e.from)));
            }
            for (int xi = 0; xi < static_cast<int>(nx_); ++xi) {
                if (k + 1 < m_) set(row_index(k, xi), 2 * zletter_, unit(row_index(k + 1, xi)));
                if (k > 0) set(row_index(k, xi), 2 * zletter_ + 1, unit(row_index(k - 1, xi)));
            }
            int r0 = row_index(k, 0);
            set(r0, 2 * spec_.parabolic_gen, {{r0, hp_gen_power(pctx_, 1)}});
            set(r0, 2 * spec_.parabolic_gen + 1, {{r0, hp_gen_inverse(pctx_)}});
        }
    }

    // Fixed-order deduction until the generator and redundant columns close.
    void saturate(int maxPasses = 500) {
        for (int pass = 0; pass < maxPasses; ++pass) {
            bool changed = false;
            for (int r = 0; r < static_cast<int>(rows_); ++r)
                for (int c = 0; c < static_cast<int>(ncols_); ++c) {
                    if (entry(r, c)) continue;
                    if (auto v = derive(r, c)) {
                        set(r, c, std::move(*v));
                        changed = true;
                    }
                }
            if (letter_columns_complete()) return;
            if (!changed && backSolve()) changed = true;
            if (!changed && (resolveBoundaryZ(true) || resolveBoundaryZ(false))) changed = true;
            if (!changed) {
                std::vector<std::string> missing;
                for (int r = 0; r < static_cast<int>(rows_); ++r)
                    for (int c = 0; c < 2 * static_cast<int>(nletters_); ++c)
                        if (!entry(r, c)) missing.push_back(row_name(r) + " . " + column_name(c));
                std::string head = "saturation stalled for " + spec_.name + "; first missing: " +
                                   (missing.empty() ? "?" : missing.front());
                throw SaturationStall(head, std::move(missing));
            }
        }
        throw std::runtime_error("saturation did not converge for " + spec_.name);
    }

    bool letter_columns_complete() const {
        for (int r = 0; r < static_cast<int>(rows_); ++r)
            for (int c = 0; c < 2 * static_cast<int>(nletters_); ++c)
                if (!entry(r, c)) return false;
        return true;
    }

    bool z_columns_complete() const {
        for (int r = 0; r < static_cast<int>(rows_); ++r)
            for (int c : {2 * zletter_, 2 * zletter_ + 1})
                if (!entry(r, c)) return false;
        return true;
    }

    // Complete the z and z^-1 columns through the defining word of z, so the
    // central element acts by a full matrix.
    void fill_z() {
        Word zw = spec_.parse(spec_.z_words.front());
        Word zwInv = inverse(zw);
        for (int r = 0; r < static_cast<int>(rows_); ++r) {
            if (!entry(r, 2 * zletter_)) {
                auto v = applyWord(unit(r), zw);
                if (!v) throw std::runtime_error("fill_z: z chain failed on row " + row_name(r));
                set(r, 2 * zletter_, std::move(*v));
            }
            if (!entry(r, 2 * zletter_ + 1)) {
                auto v = applyWord(unit(r), zwInv);
                if (!v) throw std::runtime_error("fill_z: z^-1 chain failed on row " + row_name(r));
                set(r, 2 * zletter_ + 1, std::move(*v));
            }
        }
    }

    // Apply a word (letters over the extended alphabet plus the z letter) to a
    // combination; nullopt when a required entry is still unknown.
    std::optional<Combo> applyWord(Combo v, const Word& w) const {
        for (const Letter& l : w) {
            std::map<int, HPoly> acc;
            int c = column(l);
            for (const auto& [r, h] : v) {
                const auto& e = entry(r, c);
                if (!e) return std::nullopt;
                for (const auto& [r2, h2] : *e) {
                    auto [it, fresh] = acc.emplace(r2, hp_mul(pctx_, h, h2));
                    if (!fresh) it->second = hp_add(it->second, hp_mul(pctx_, h, h2));
                }
            }
            v.clear();
            for (auto& [r2, h2] : acc)
                if (!h2.is_zero()) v.push_back({r2, std::move(h2)});
        }
        return v;
    }

    Combo unit(int row) const { return {{row, hp_one(pctx_)}}; }

    // Install an externally derived entry; subsequent saturation passes and
    // the final relation check cross-validate it against every rewrite rule.
    void install(int row, int col, Combo v) { set(row, col, std::move(v)); }

    std::vector<std::pair<int, int>> missing_letter_entries() const {
        std::vector<std::pair<int, int>> out;
        for (int r = 0; r < static_cast<int>(rows_); ++r)
            for (int c = 0; c < 2 * static_cast<int>(nletters_); ++c)
                if (!entry(r, c)) out.push_back({r, c});
        return out;
    }

    const std::vector<Word>& rules_for(int col) const { return rules_[static_cast<std::size_t>(col)]; }

private:
    void set(int row, int col, Combo v) {
        auto& slot = table_[static_cast<std::size_t>(row) * ncols_ + static_cast<std::size_t>(col)];
        if (!slot) slot = std::move(v);
    }

    // Deterministic rule list per column: the Hecke power/inverse rule for base
    // generators, the defining-word chain for redundant generators, then the
    // relation-derived rewrite chains.
    std::optional<Combo> derive(int r, int c) const {
        int g = c / 2;
        bool inv = c % 2;
        if (static_cast<std::size_t>(g) < spec_.alphabet.size()) {
            if (auto v = heckeRule(r, g, inv)) return v;
        } else if (g != zletter_) {
            Word def = spec_.parse(spec_.redundant_defs[static_cast<std::size_t>(g) - spec_.alphabet.size()].second);
            if (inv) def = inverse(def);
            if (auto v = applyWord(unit(r), def)) return v;
        }
        for (const Word& rule : rules_[static_cast<std::size_t>(c)])
            if (auto v = applyWord(unit(r), rule)) return v;
        return std::nullopt;
    }

    // g = k_{e-1} + k_{e-2} g^-1 + ... + k_0 g^-(e-1), and its inverse form.
    std::optional<Combo> heckeRule(int r, int g, bool inv) const {
        const unsigned e = spec_.gen_orders[static_cast<std::size_t>(g)];
        std::vector<LaurentPoly> kappa;
        for (const auto& n : spec_.coeff_names(g)) kappa.push_back(LaurentPoly::variable(ring_, n));
        Letter step{g, inv ? 1 : -1};
        std::vector<Combo> chain = {unit(r)};  // chain[j] = r . step^j
        for (unsigned j = 1; j < e; ++j) {
            auto v = applyWord(chain.back(), {step});
            if (!v) return std::nullopt;
            chain.push_back(std::move(*v));
        }
        std::map<int, HPoly> acc;
        auto addScaled = [&](const Combo& v, const LaurentPoly& s) {
            for (const auto& [row, h] : v) {
                HPoly sh = hp_scale(h, s);
                auto [it, fresh] = acc.emplace(row, sh);
                if (!fresh) it->second = hp_add(it->second, sh);
            }
        };
        if (!inv) {
            addScaled(chain[0], kappa[e - 1]);
            for (unsigned k = 0; k + 1 < e; ++k) addScaled(chain[e - 1 - k], kappa[k]);
        } else {
            LaurentPoly inv0 = kappa[0].inverse();
            addScaled(chain[e - 1], inv0);
            for (unsigned k = 1; k < e; ++k) addScaled(chain[k - 1], -(inv0 * kappa[k]));
        }
        Combo out;
        for (auto& [row, h] : acc)
            if (!h.is_zero()) out.push_back({row, std::move(h)});
        return out;
    }

    // A rewrite chain for a known entry that blocks on a single missing entry
    // can be solved for that entry: push the other rows through the rest of
    // the chain, divide out the blocking coefficient exactly, and walk the
    // inverse of the remaining suffix back to the blocked letter.
    bool backSolve() {
        bool filled = false;
        for (int r = 0; r < static_cast<int>(rows_); ++r)
            for (int c = 0; c < static_cast<int>(ncols_); ++c) {
                if (!entry(r, c)) continue;
                for (const Word& rule : rules_[static_cast<std::size_t>(c)])
                    if (backSolveRule(r, c, rule)) filled = true;
            }
        return filled;
    }

    bool backSolveRule(int r, int c, const Word& rule) {
        Combo v = unit(r);
        for (std::size_t i = 0; i < rule.size(); ++i) {
            auto nv = applyWord(v, {rule[i]});
            if (nv) { v = std::move(*nv); continue; }
            const int cl = column(rule[i]);
            int blockRow = -1;
            HPoly blockCoeff;
            for (const auto& [row, h] : v)
                if (!entry(row, cl)) {
                    if (blockRow >= 0) {
                        return false;
                    }
                    blockRow = row;
                    blockCoeff = h;
                }
            const Word suffix(rule.begin() + static_cast<long>(i), rule.end());
            // entry(r,c) = sum_p h_p (p . suffix) over the support of v, so
            // the unknown satisfies  blockCoeff * (blockRow . suffix) = E.
            std::map<int, HPoly> E;
            for (const auto& [row, h] : *entry(r, c)) E[row] = h;
            for (const auto& [row, h] : v) {
                if (row == blockRow) continue;
                auto pv = applyWord(unit(row), suffix);
                if (!pv) {
                    return false;
                }
                std::map<int, HPoly> pm(pv->begin(), pv->end());
                axpyNeg(E, h, pm);
            }
            Combo D;
            for (const auto& [row, h] : E) {
                if (h.is_zero()) continue;
                auto q = hp_try_divide(pctx_, h, blockCoeff);
                if (!q) {
                    return false;
                }
                if (!q->is_zero()) D.push_back({row, *q});
            }
            auto X = applyWord(std::move(D),
                               inverse(Word(rule.begin() + static_cast<long>(i) + 1, rule.end())));
            if (!X) {
                return false;
            }
            set(blockRow, cl, std::move(*X));
            return true;
        }
        return false;
    }

    // a -= s * b on sparse H'-linear combinations keyed by an integer index.
    void axpyNeg(std::map<int, HPoly>& a, const HPoly& s, const std::map<int, HPoly>& b) const {
        for (const auto& [k, h] : b) {
            HPoly sh = hp_mul(pctx_, s, h);
            auto it = a.find(k);
            if (it == a.end())
                a.emplace(k, hp_neg(sh));
            else {
                it->second = hp_add(it->second, hp_neg(sh));
                if (it->second.is_zero()) a.erase(it);
            }
        }
    }

    // Centrality of z forces every entry in a boundary z column: a known pair
    // (z^k0 x_i).c and (z^(m-1) x_i).c with the lower entry's support confined
    // to levels <= k0+1 yields the H'-linear equation
    //   sum_j h_j (z^m x_j) = (z^(m-1) x_i).c - [shifted interior part],
    // and Gaussian elimination with unit pivots solves for the unknown z^m x_j
    // (dually z^-1 x_j for the bottom z^-1 column).
    bool resolveBoundaryZ(bool top) {
        const int kb = top ? m_ - 1 : 0;
        const int zcol = top ? 2 * zletter_ : 2 * zletter_ + 1;
        std::vector<int> unknowns;
        for (int xj = 0; xj < static_cast<int>(nx_); ++xj)
            if (!entry(row_index(kb, xj), zcol)) unknowns.push_back(xj);
        if (unknowns.empty()) return false;

        struct Eq {
            std::map<int, HPoly> lhs;  // keyed by x-index of the boundary unknown
            std::map<int, HPoly> rhs;  // keyed by row index
        };
        // Vertical consistency: applying one word to z^kA x_i and z^kB x_i
        // gives combinations differing by the central shift z^(kB-kA).  Words
        // of length up to two over the letters supply the equations.
        std::vector<Word> pool;
        for (int c = 0; c < 2 * static_cast<int>(nletters_); ++c)
            pool.push_back({Letter{c / 2, c % 2 ? -1 : 1}});
        const std::size_t nsingle = pool.size();
        std::size_t lo = 0, hi = pool.size();
        while (pool.size() < 300 && lo < hi) {
            for (std::size_t i = lo; i < hi && pool.size() < 300; ++i)
                for (std::size_t j = 0; j < nsingle; ++j) {
                    Word w = free_reduce(concat(pool[i], pool[j]));
                    if (w.size() == pool[i].size() + 1) pool.push_back(std::move(w));
                }
            lo = hi;
            hi = pool.size();
        }
        std::vector<std::optional<std::optional<Combo>>> applied(rows_ * pool.size());
        auto appliedAt = [&](int row, std::size_t wi) -> const std::optional<Combo>& {
            auto& slot = applied[static_cast<std::size_t>(row) * pool.size() + wi];
            if (!slot) slot = applyWord(unit(row), pool[wi]);
            return *slot;
        };

        std::vector<Eq> eqs;
        // A known entry b.c together with a rewrite rule for column c whose
        // net z-power crosses the boundary once gives b.c = z^+-1 (b.w) for
        // the letters-only part w of the rule; the boundary rows of b.w enter
        // with the unknown z^m x_j (resp. z^-1 x_j).
        const int need = top ? 1 : -1;
        for (int r = 0; r < static_cast<int>(rows_); ++r)
            for (int c = 0; c < 2 * static_cast<int>(nletters_); ++c) {
                if (!entry(r, c)) continue;
                for (const Word& rule : rules_[static_cast<std::size_t>(c)]) {
                    int net = 0;
                    Word lettersOnly;
                    for (const Letter& l : rule) {
                        if (l.gen == zletter_) net += l.pow;
                        else lettersOnly.push_back(l);
                    }
                    if (net != need || lettersOnly.size() == rule.size()) continue;
                    auto V = applyWord(unit(r), lettersOnly);
                    if (!V) continue;
                    Eq eq;
                    for (const auto& [rr, h] : *entry(r, c)) eq.rhs[rr] = h;
                    bool any = false;
                    for (const auto& [rr, h] : *V) {
                        int k = rr / static_cast<int>(nx_) + need;
                        int xj = rr % static_cast<int>(nx_);
                        if (k >= 0 && k < m_) {
                            axpyNeg(eq.rhs, h, {{row_index(k, xj), hp_one(pctx_)}});
                        } else {
                            const auto& known = entry(row_index(kb, xj), zcol);
                            if (known) {
                                std::map<int, HPoly> kv(known->begin(), known->end());
                                axpyNeg(eq.rhs, h, kv);
                            } else {
                                any = true;
                                auto [it, fresh] = eq.lhs.emplace(xj, hp_neg(h));
                                if (!fresh) it->second = hp_add(it->second, hp_neg(h));
                            }
                        }
                    }
                    if (!any) continue;
                    for (auto it = eq.lhs.begin(); it != eq.lhs.end();) {
                        it->second = hp_neg(it->second);
                        if (it->second.is_zero()) it = eq.lhs.erase(it);
                        else ++it;
                    }
                    if (!eq.lhs.empty()) eqs.push_back(std::move(eq));
                }
            }
        for (int kA = 0; kA + 1 < m_; ++kA)
            for (int kB = kA + 1; kB < m_; ++kB) {
                const int s = top ? kB - kA : kA - kB;  // shift applied to the source entry
                for (int xi = 0; xi < static_cast<int>(nx_); ++xi)
                    for (std::size_t wi = 0; wi < pool.size(); ++wi) {
                        const auto& src = appliedAt(row_index(top ? kA : kB, xi), wi);
                        const auto& tgt = appliedAt(row_index(top ? kB : kA, xi), wi);
                        if (!src || !tgt) continue;
                        bool usable = true, boundary = false;
                        for (const auto& [r, h] : *src) {
                            int k = r / static_cast<int>(nx_) + s;
                            if (k < -1 || k > m_) { usable = false; break; }
                            if (k == -1 || k == m_) boundary = true;
                        }
                        if (!usable || !boundary) continue;
                        Eq eq;
                        for (const auto& [r, h] : *tgt) eq.rhs[r] = h;
                        for (const auto& [r, h] : *src) {
                            int k = r / static_cast<int>(nx_) + s;
                            int xj = r % static_cast<int>(nx_);
                            if (k >= 0 && k < m_) {
                                axpyNeg(eq.rhs, h, {{row_index(k, xj), hp_one(pctx_)}});
                            } else {
                                const auto& known = entry(row_index(kb, xj), zcol);
                                if (known) {
                                    std::map<int, HPoly> kv(known->begin(), known->end());
                                    axpyNeg(eq.rhs, h, kv);
                                } else {
                                    auto [it, fresh] = eq.lhs.emplace(xj, hp_neg(h));
                                    if (!fresh) it->second = hp_add(it->second, hp_neg(h));
                                }
                            }
                        }
                        // rhs currently holds tgt - shifted(src); flip the sign
                        // so the equation reads sum_j h_j Z_j = rhs.
                        for (auto it = eq.lhs.begin(); it != eq.lhs.end();) {
                            it->second = hp_neg(it->second);
                            if (it->second.is_zero()) it = eq.lhs.erase(it);
                            else ++it;
                        }
                        if (!eq.lhs.empty()) eqs.push_back(std::move(eq));
                    }
            }

        // Elimination over H': single-unknown equations are solved by exact
        // division and substituted back; when none is solvable, eliminate one
        // variable across the system (scaling by a unit inverse when the pivot
        // is a unit, fraction-free cross-multiplication otherwise).  The final
        // relation check certifies every entry produced here.
        auto substitute = [&](int xj, const std::map<int, HPoly>& sol) {
            for (auto& eq : eqs) {
                auto it = eq.lhs.find(xj);
                if (it == eq.lhs.end()) continue;
                HPoly f = it->second;
                eq.lhs.erase(it);
                axpyNeg(eq.rhs, f, sol);
            }
        };
        bool filled = false;
        std::set<int> pivoted;
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto& eq : eqs) {
                if (eq.lhs.size() != 1) continue;
                const auto& [xj, h] = *eq.lhs.begin();
                if (entry(row_index(kb, xj), zcol)) continue;
                std::map<int, HPoly> sol;
                bool ok = true;
                for (const auto& [r, v] : eq.rhs) {
                    auto q = hp_try_divide(pctx_, v, h);
                    if (!q) { ok = false; break; }
                    if (!q->is_zero()) sol.emplace(r, *q);
                }
                if (!ok) continue;
                Combo v(sol.begin(), sol.end());
                set(row_index(kb, xj), zcol, std::move(v));
                substitute(xj, sol);
                filled = progress = true;
                break;
            }
            if (progress) continue;
            // No solvable isolated equation: eliminate a variable, unit pivots first.
            for (int unitPass = 1; unitPass >= 0 && !progress; --unitPass)
                for (std::size_t i = 0; i < eqs.size() && !progress; ++i)
                    for (const auto& [xj, h] : eqs[i].lhs) {
                        if (pivoted.count(xj)) continue;
                        auto inv = hp_try_inverse(pctx_, h);
                        if (unitPass && !inv) continue;
                        if (inv) {
                            for (auto& [k, v] : eqs[i].lhs) v = hp_mul(pctx_, *inv, v);
                            for (auto& [k, v] : eqs[i].rhs) v = hp_mul(pctx_, *inv, v);
                        }
                        for (std::size_t j = 0; j < eqs.size(); ++j) {
                            if (j == i) continue;
                            auto it = eqs[j].lhs.find(xj);
                            if (it == eqs[j].lhs.end()) continue;
                            HPoly f = it->second;
                            if (!inv) {
                                // eq_j := h * eq_j - f * eq_i, so the xj terms cancel.
                                for (auto& [k, v] : eqs[j].lhs) v = hp_mul(pctx_, h, v);
                                for (auto& [k, v] : eqs[j].rhs) v = hp_mul(pctx_, h, v);
                            }
                            axpyNeg(eqs[j].lhs, f, eqs[i].lhs);
                            axpyNeg(eqs[j].rhs, f, eqs[i].rhs);
                        }
                        pivoted.insert(xj);
                        progress = true;
                        break;
                    }
        }
        return filled;
    }

    // From every relation w1 = w2 (braid relations, z-defining words, redundant
    // definitions), each letter occurrence yields a rewrite chain for its
    // column and for the inverse column.
    void buildRelationRules() {
        rules_.assign(ncols_, {});
        std::vector<std::pair<Word, Word>> rels;
        for (const auto& [l, r] : spec_.relations) rels.push_back({spec_.parse(l), spec_.parse(r)});
        for (const auto& zw : spec_.z_words) rels.push_back({{{zletter_, 1}}, spec_.parse(zw)});
        for (std::size_t i = 0; i < spec_.redundant_defs.size(); ++i)
            rels.push_back({{{static_cast<int>(spec_.alphabet.size() + i), 1}},
                            spec_.parse(spec_.redundant_defs[i].second)});
        std::vector<std::set<std::string>> seen(ncols_);
        auto addOne = [&](int col, Word w) {
            w = free_reduce(w);
            std::string key;
            for (const Letter& l : w) key += std::to_string(l.gen * 2 + (l.pow < 0)) + ",";
            if (seen[static_cast<std::size_t>(col)].insert(key).second)
                rules_[static_cast<std::size_t>(col)].push_back(std::move(w));
        };
        // z is central, so a rule containing z letters also holds with all of
        // them collected at the front or at the back of the chain.
        auto addRule = [&](int col, const Word& w) {
            addOne(col, w);
            int net = 0;
            Word core;
            for (const Letter& l : w) {
                if (l.gen == zletter_)
                    net += l.pow;
                else
                    core.push_back(l);
            }
            if (net == 0 && core.size() == w.size()) return;
            Word zs(static_cast<std::size_t>(net < 0 ? -net : net), {zletter_, net < 0 ? -1 : 1});
            addOne(col, concat(zs, core));
            addOne(col, concat(core, zs));
        };
        for (const auto& [w1, w2] : rels)
            for (const auto& [A, B] : {std::pair<Word, Word>{w1, w2}, {w2, w1}})
                for (std::size_t p = 0; p < A.size(); ++p) {
                    Word alpha(A.begin(), A.begin() + static_cast<long>(p));
                    Word beta(A.begin() + static_cast<long>(p) + 1, A.end());
                    // A = alpha l beta = B  =>  l = alpha^-1 B beta^-1
                    addRule(column(A[p]), concat(concat(inverse(alpha), B), inverse(beta)));
                    // l^-1 = beta B^-1 alpha
                    addRule(column(A[p].inverse()), concat(concat(beta, inverse(B)), alpha));
                }
    }

    const GroupSpec& spec_;
    VarSpec ring_;
    ParabolicContext pctx_;
    Alphabet ext_;
    std::size_t nletters_ = 0;
    int zletter_ = 0;
    std::size_t ncols_ = 0;
    int m_ = 0;
    std::size_t nx_ = 0;
    std::size_t rows_ = 0;
    std::vector<Word> xwords_;
    std::vector<std::optional<Combo>> table_;
    std::vector<std::vector<Word>> rules_;
};

}  // namespace hecke
