#pragma once

// Finite group engine: Todd-Coxeter coset enumeration over the trivial
// subgroup (regular representation), subgroup closure, centres, and the
// factorization / spanning-tree checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "word.hpp"

namespace hecke {

struct Presentation {
    Alphabet alphabet;
    std::vector<unsigned> orders;                 // order of each generator
    std::vector<std::pair<Word, Word>> relations; // w1 = w2

    std::vector<Word> relators() const {
        std::vector<Word> rs;
        for (std::size_t g = 0; g < orders.size(); ++g)
            rs.push_back(repeat({{static_cast<int>(g), 1}}, orders[g]));
        for (const auto& [w1, w2] : relations) rs.push_back(free_reduce(concat(w1, inverse(w2))));
        return rs;
    }
};

class EnumerationLimit : public std::runtime_error {
public:
    explicit EnumerationLimit(std::size_t cap)
        : std::runtime_error("coset enumeration exceeded cap of " + std::to_string(cap)) {}
};

// Finite group in its regular permutation representation.
class FiniteGroup {
public:
    // HLT-style enumeration over the trivial subgroup.
    static FiniteGroup enumerate(const Presentation& pres, std::size_t cosetCap = 100000) {
        ToddCoxeter tc(pres, cosetCap);
        tc.run();
        return FiniteGroup(pres, tc.compress());
    }

    int order() const { return n_; }
    std::size_t generator_count() const { return genPerm_.size(); }
    const Alphabet& alphabet() const { return pres_.alphabet; }

    // Right action of a generator letter on an element (regular rep).
    int apply(int elem, const Letter& l) const {
        return l.pow > 0 ? genPerm_[static_cast<std::size_t>(l.gen)][static_cast<std::size_t>(elem)]
                         : genPermInv_[static_cast<std::size_t>(l.gen)][static_cast<std::size_t>(elem)];
    }

    int eval(const Word& w, int from = 0) const {
        int c = from;
        for (const Letter& l : w) c = apply(c, l);
        return c;
    }

    int mul(int a, int b) const { return mult_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }

    int element_order(int a) const {
        int x = a, k = 1;
        while (x != 0) { x = mul(x, a); ++k; }
        return k;
    }

    // Closure of a set of elements; returns sorted element ids.
    std::vector<int> closure(const std::vector<int>& gens) const {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<int> frontier = {0}, out = {0};
        seen[0] = 1;
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int e : frontier) {
                for (int g : gens) {
                    int x = mul(e, g);
                    if (!seen[static_cast<std::size_t>(x)]) {
                        seen[static_cast<std::size_t>(x)] = 1;
                        out.push_back(x);
                        next.push_back(x);
                    }
                }
            }
            frontier = std::move(next);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    // Elements of `sub` commuting with every element of `gens`.
    std::vector<int> center_of(const std::vector<int>& sub, const std::vector<int>& gens) const {
        std::vector<int> z;
        for (int e : sub) {
            bool ok = true;
            for (int g : gens)
                if (mul(e, g) != mul(g, e)) { ok = false; break; }
            if (ok) z.push_back(e);
        }
        return z;
    }

    std::vector<int> center() const {
        std::vector<int> gens;
        for (std::size_t g = 0; g < genPerm_.size(); ++g)
            gens.push_back(genPerm_[g][0]);
        std::vector<int> all(static_cast<std::size_t>(n_));
        std::iota(all.begin(), all.end(), 0);
        return center_of(all, gens);
    }

    // Every relator of the presentation evaluates to the identity.
    bool relators_hold() const {
        for (const Word& r : pres_.relators())
            if (eval(r) != 0) return false;
        return true;
    }

private:
    struct ToddCoxeter {
        const Presentation& pres;
        std::size_t cap;
        std::size_t ncols;
        std::vector<std::vector<int>> table;  // [col][coset], -1 undefined
        std::vector<int> rep;                 // union-find
        std::vector<char> dead;
        std::vector<std::vector<int>> relatorCols;
        std::size_t live = 1;

        ToddCoxeter(const Presentation& p, std::size_t c) : pres(p), cap(c) {
            ncols = 2 * p.alphabet.size();
            table.assign(ncols, {});
            newCoset();
            for (const Word& r : p.relators()) {
                std::vector<int> cols;
                for (const Letter& l : r) cols.push_back(col(l));
                relatorCols.push_back(std::move(cols));
            }
        }

        int col(const Letter& l) const { return 2 * l.gen + (l.pow > 0 ? 0 : 1); }
        int invCol(int c) const { return c ^ 1; }

        int newCoset() {
            if (live >= cap) throw EnumerationLimit(cap);
            ++live;
            int id = static_cast<int>(rep.size());
            rep.push_back(id);
            dead.push_back(0);
            for (auto& colv : table) colv.push_back(-1);
            return id;
        }

        int find(int a) {
            while (rep[static_cast<std::size_t>(a)] != a) {
                rep[static_cast<std::size_t>(a)] = rep[static_cast<std::size_t>(rep[static_cast<std::size_t>(a)])];
                a = rep[static_cast<std::size_t>(a)];
            }
            return a;
        }

        void setEntry(int c, int from, int to) {
            table[static_cast<std::size_t>(c)][static_cast<std::size_t>(from)] = to;
            table[static_cast<std::size_t>(invCol(c))][static_cast<std::size_t>(to)] = from;
        }

        void coincide(int a, int b) {
            std::vector<std::pair<int, int>> queue = {{a, b}};
            while (!queue.empty()) {
                auto [x, y] = queue.back();
                queue.pop_back();
                x = find(x);
                y = find(y);
                if (x == y) continue;
                if (x > y) std::swap(x, y);
                rep[static_cast<std::size_t>(y)] = x;
                dead[static_cast<std::size_t>(y)] = 1;
                --live;
                for (std::size_t c = 0; c < ncols; ++c) {
                    int d = table[c][static_cast<std::size_t>(y)];
                    if (d < 0) continue;
                    table[c][static_cast<std::size_t>(y)] = -1;
                    d = find(d);
                    int e = table[c][static_cast<std::size_t>(x)];
                    if (e < 0) {
                        setEntry(static_cast<int>(c), x, d);
                    } else {
                        queue.push_back({find(e), d});
                    }
                }
            }
        }

        void scanAndFill(int alpha, const std::vector<int>& w) {
            while (true) {
                int f = alpha;
                std::size_t i = 0;
                while (i < w.size()) {
                    int nxt = table[static_cast<std::size_t>(w[i])][static_cast<std::size_t>(f)];
                    if (nxt < 0) break;
                    f = find(nxt);
                    ++i;
                }
                if (i == w.size()) {
                    if (f != alpha) coincide(f, alpha);
                    return;
                }
                int b = alpha;
                std::size_t j = w.size();
                while (j > i) {
                    int prv = table[static_cast<std::size_t>(invCol(w[j - 1]))][static_cast<std::size_t>(b)];
                    if (prv < 0) break;
                    b = find(prv);
                    --j;
                }
                if (j == i) {
                    coincide(f, b);
                    return;
                }
                if (j == i + 1) {
                    setEntry(w[i], f, b);
                    return;
                }
                setEntry(w[i], f, newCoset());
            }
        }

        void run() {
            for (std::size_t alpha = 0; alpha < rep.size(); ++alpha) {
                if (dead[alpha] || find(static_cast<int>(alpha)) != static_cast<int>(alpha)) continue;
                for (const auto& w : relatorCols) {
                    if (dead[alpha]) break;
                    scanAndFill(static_cast<int>(alpha), w);
                }
                if (dead[alpha]) continue;
                // ensure full row (order relators normally cover this)
                for (std::size_t c = 0; c < ncols && !dead[alpha]; ++c)
                    if (table[c][alpha] < 0) setEntry(static_cast<int>(c), static_cast<int>(alpha), newCoset());
            }
        }

        // Live cosets renumbered 0..n-1; returns generator permutations.
        std::vector<std::vector<int>> compress() {
            std::vector<int> newId(rep.size(), -1);
            int n = 0;
            for (std::size_t i = 0; i < rep.size(); ++i)
                if (!dead[i] && find(static_cast<int>(i)) == static_cast<int>(i))
                    newId[i] = n++;
            std::vector<std::vector<int>> perms(pres.alphabet.size(),
                                                std::vector<int>(static_cast<std::size_t>(n)));
            for (std::size_t g = 0; g < pres.alphabet.size(); ++g)
                for (std::size_t i = 0; i < rep.size(); ++i) {
                    if (newId[i] < 0) continue;
                    int to = table[2 * g][i];
                    if (to < 0) throw std::logic_error("ToddCoxeter: incomplete table after run");
                    perms[g][static_cast<std::size_t>(newId[i])] =
                        newId[static_cast<std::size_t>(find(to))];
                }
            return perms;
        }
    };

    FiniteGroup(const Presentation& pres, std::vector<std::vector<int>> perms)
        : pres_(pres), genPerm_(std::move(perms)) {
        n_ = genPerm_.empty() ? 1 : static_cast<int>(genPerm_[0].size());
        genPermInv_.resize(genPerm_.size());
        for (std::size_t g = 0; g < genPerm_.size(); ++g) {
            genPermInv_[g].resize(static_cast<std::size_t>(n_));
            for (int i = 0; i < n_; ++i)
                genPermInv_[g][static_cast<std::size_t>(genPerm_[g][static_cast<std::size_t>(i)])] = i;
        }
        buildMult();
    }

    void buildMult() {
        // BFS word for each element, then the regular right-multiplication table.
        std::vector<Word> words(static_cast<std::size_t>(n_));
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        seen[0] = 1;
        std::vector<int> frontier = {0};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int e : frontier) {
                for (std::size_t g = 0; g < genPerm_.size(); ++g) {
                    int x = genPerm_[g][static_cast<std::size_t>(e)];
                    if (!seen[static_cast<std::size_t>(x)]) {
                        seen[static_cast<std::size_t>(x)] = 1;
                        words[static_cast<std::size_t>(x)] = words[static_cast<std::size_t>(e)];
                        words[static_cast<std::size_t>(x)].push_back({static_cast<int>(g), 1});
                        next.push_back(x);
                    }
                }
            }
            frontier = std::move(next);
        }
        mult_.resize(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
        for (int b = 0; b < n_; ++b) {
            const Word& w = words[static_cast<std::size_t>(b)];
            for (int a = 0; a < n_; ++a)
                mult_[static_cast<std::size_t>(a) * n_ + b] = static_cast<uint16_t>(eval(w, a));
        }
        inv_.resize(static_cast<std::size_t>(n_));
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                if (mul(a, b) == 0) { inv_[static_cast<std::size_t>(a)] = b; break; }
    }

    Presentation pres_;
    int n_ = 1;
    std::vector<std::vector<int>> genPerm_, genPermInv_;
    std::vector<uint16_t> mult_;
    std::vector<int> inv_;
};

// True iff the |Z|*|P|*|X| products zvx are pairwise distinct.
// Precondition: |Z|*|P|*|X| equals the target subgroup order.
inline bool verify_factorization(const FiniteGroup& g, const std::vector<int>& Z,
                                 const std::vector<int>& P, const std::vector<int>& X,
                                 std::size_t expectedOrder) {
    if (Z.size() * P.size() * X.size() != expectedOrder)
        throw std::invalid_argument("verify_factorization: size mismatch");
    std::set<int> products;
    for (int z : Z)
        for (int v : P)
            for (int x : X) products.insert(g.mul(g.mul(z, v), x));
    return products.size() == expectedOrder;
}

struct TreeEdge {
    int from = 0;  // vertex indices into X
    int to = 0;
    Word label;    // in the group's own alphabet (may use redundant generators)
};

struct SpanningTree {
    std::vector<TreeEdge> edges;
};

// Each edge relation to-elem == from-elem * label-elem must hold; the tree must
// be connected, acyclic and rooted at the identity vertex 0.
inline bool verify_tree(const FiniteGroup& g, const SpanningTree& t,
                        const std::vector<int>& xElems,
                        const std::vector<int>& labelElems) {
    const std::size_t n = xElems.size();
    if (t.edges.size() + 1 != n) return false;
    if (xElems.empty() || xElems[0] != 0) return false;
    std::set<int> distinct(xElems.begin(), xElems.end());
    if (distinct.size() != n) return false;
    std::vector<char> reached(n, 0);
    reached[0] = 1;
    std::size_t covered = 1;
    bool progress = true;
    while (progress && covered < n) {
        progress = false;
        for (std::size_t i = 0; i < t.edges.size(); ++i) {
            const TreeEdge& e = t.edges[i];
            if (!reached[static_cast<std::size_t>(e.from)] || reached[static_cast<std::size_t>(e.to)])
                continue;
            reached[static_cast<std::size_t>(e.to)] = 1;
            ++covered;
            progress = true;
        }
    }
    if (covered != n) return false;
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        const TreeEdge& e = t.edges[i];
        if (g.mul(xElems[static_cast<std::size_t>(e.from)], labelElems[i]) !=
            xElems[static_cast<std::size_t>(e.to)])
            return false;
    }
    return true;
}

}  // namespace hecke
