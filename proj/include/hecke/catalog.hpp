#pragma once

// Per-group data for G4..G15: presentations, centre words, parabolic
// generators, coset representatives X_j, spanning trees, redundant-generator
// definitions, Hecke parameter classes, specialisation rows and expected
// Gram determinants.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "group.hpp"
#include "laurent.hpp"
#include "word.hpp"

namespace hecke {

struct TreeEdgeSpec {
    int from;
    int to;
    std::string label;  // word over the extended alphabet, e.g. "s", "t^-1", "r"
};

struct GroupSpec {
    int id = 0;                      // 4..15
    std::string name;                // "G4".."G15"
    char family = 't';               // 't' tetrahedral (max G7), 'o' octahedral (max G11)
    int order = 0;
    int ell = 0;                     // index in the family's maximal group
    int center_order = 0;            // m = |Z_j|
    Alphabet alphabet;               // base generators
    std::vector<unsigned> gen_orders;
    std::vector<char> gen_class;     // 'a'|'b'|'c' parameter class per generator
    std::vector<std::pair<std::string, std::string>> relations;  // braid-type w1 = w2
    std::vector<std::string> z_words;  // words equal to z_j, used as rewrite hints
    int parabolic_gen = 0;           // index into alphabet
    std::vector<std::pair<std::string, std::string>> redundant_defs;  // name -> base word
    std::vector<std::string> x_words;  // tree words over the extended alphabet; "1" = identity
    std::vector<TreeEdgeSpec> tree;
    std::vector<std::string> embedding;  // base generator -> word in the maximal group's s,t,u
    std::string expected_det;
    std::optional<std::map<std::string, std::string>> theta;  // maximal coeff -> image in own ring
    bool theta_printed = false;  // specialisation row taken from the explicit table (j=4,5,6)
    int parent_id = 0;                        // completion parent for stalled tables, 0 = none
    std::vector<std::string> parent_words;    // base generator -> word over the parent's alphabet
    std::map<std::string, int> parent_theta;  // parent coefficients pinned for the embedding

    // Extended alphabet: base generators followed by redundant generators.
    Alphabet extended_alphabet() const {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < alphabet.size(); ++i) names.push_back(alphabet.name(static_cast<int>(i)));
        for (const auto& [n, def] : redundant_defs) names.push_back(n);
        return Alphabet(names);
    }

    Word parse(const std::string& text) const {
        if (text == "1") return {};
        return extended_alphabet().word(text);
    }

    // Replace redundant letters by their defining words (base letters only).
    Word expand_redundant(const Word& w) const {
        const std::size_t nbase = alphabet.size();
        Word out;
        for (const Letter& l : w) {
            if (static_cast<std::size_t>(l.gen) < nbase) {
                out.push_back(l);
                continue;
            }
            Word def = alphabet.word(redundant_defs[static_cast<std::size_t>(l.gen) - nbase].second);
            if (l.pow < 0) def = inverse(def);
            out.insert(out.end(), def.begin(), def.end());
        }
        return out;
    }

    // Word over the maximal group's alphabet (s,t,u) for a word over the
    // extended alphabet.
    Word to_maximal(const Word& w, const Alphabet& maxAlphabet) const {
        Word out;
        for (const Letter& l : expand_redundant(w)) {
            Word img = maxAlphabet.word(embedding[static_cast<std::size_t>(l.gen)]);
            if (l.pow < 0) img = inverse(img);
            out.insert(out.end(), img.begin(), img.end());
        }
        return out;
    }

    unsigned parabolic_order() const { return gen_orders[static_cast<std::size_t>(parabolic_gen)]; }

    int basis_size() const { return order; }
    int l() const { return static_cast<int>(parabolic_order()) * static_cast<int>(x_words.size()); }

    // Coefficient ring: one parameter class per conjugacy class of generators,
    // constant terms invertible.
    VarSpec ring() const {
        std::map<char, unsigned> classes;
        for (std::size_t i = 0; i < gen_class.size(); ++i) {
            auto [it, fresh] = classes.emplace(gen_class[i], gen_orders[i]);
            if (!fresh && it->second != gen_orders[i])
                throw std::logic_error("GroupSpec: inconsistent class order");
        }
        std::vector<std::string> names;
        std::vector<bool> inv;
        for (const auto& [c, e] : classes)
            for (unsigned k = 0; k < e; ++k) {
                names.push_back(std::string(1, c) + std::to_string(k));
                inv.push_back(k == 0);
            }
        return VarSpec(names, inv);
    }

    // Hecke coefficient names for one generator, ascending: g^e = sum coeff[k] g^k.
    std::vector<std::string> coeff_names(int gen) const {
        std::vector<std::string> out;
        for (unsigned k = 0; k < gen_orders[static_cast<std::size_t>(gen)]; ++k)
            out.push_back(std::string(1, gen_class[static_cast<std::size_t>(gen)]) + std::to_string(k));
        return out;
    }

    // Deterministic content hash over all transcription data (cache keys).
    std::size_t content_hash() const {
        std::ostringstream os;
        os << name << '|' << order << '|' << ell << '|' << center_order << '|' << parabolic_gen;
        for (std::size_t i = 0; i < alphabet.size(); ++i)
            os << '|' << alphabet.name(static_cast<int>(i)) << gen_orders[i] << gen_class[i];
        for (const auto& [a, b] : relations) os << '|' << a << '=' << b;
        for (const auto& w : z_words) os << '|' << w;
        for (const auto& [n, d] : redundant_defs) os << '|' << n << ":=" << d;
        for (const auto& w : x_words) os << '|' << w;
        for (const auto& e : tree) os << '|' << e.from << '-' << e.label << '-' << e.to;
        for (const auto& w : embedding) os << '|' << w;
        os << '|' << expected_det;
        return std::hash<std::string>{}(os.str());
    }
};

inline Presentation maximal_presentation(char family) {
    Presentation p;
    p.alphabet = Alphabet({"s", "t", "u"});
    p.orders = {2, 3, family == 't' ? 3u : 4u};
    p.relations = {{p.alphabet.word("s t u"), p.alphabet.word("t u s")},
                   {p.alphabet.word("t u s"), p.alphabet.word("u s t")}};
    return p;
}

namespace detail {

inline std::map<std::string, std::string> theta_row(char family,
                                                    const std::string& a0, const std::string& a1,
                                                    const std::string& b0, const std::string& b1,
                                                    const std::string& b2, const std::string& c0,
                                                    const std::string& c1, const std::string& c2,
                                                    const std::string& c3 = "") {
    std::map<std::string, std::string> m = {{"a0", a0}, {"a1", a1}, {"b0", b0}, {"b1", b1},
                                            {"b2", b2}, {"c0", c0}, {"c1", c1}, {"c2", c2}};
    if (family == 'o') m["c3"] = c3;
    return m;
}

inline std::vector<GroupSpec> build_catalog() {
    std::vector<GroupSpec> cat;

    {   // G7 = <s,t,u | s2 = t3 = u3 = 1, stu = tus = ust>, z = stu
        GroupSpec g;
        g.id = 7; g.name = "G7"; g.family = 't';
        g.order = 144; g.ell = 1; g.center_order = 12;
        g.alphabet = Alphabet({"s", "t", "u"});
        g.gen_orders = {2, 3, 3};
        g.gen_class = {'a', 'b', 'c'};
        g.relations = {{"s t u", "t u s"}, {"t u s", "u s t"}};
        g.z_words = {"s t u", "t u s", "u s t"};
        g.parabolic_gen = 2;
        g.x_words = {"1", "s", "s u", "s u s"};
        g.tree = {{0, 1, "s"}, {1, 2, "u"}, {2, 3, "s"}};
        g.embedding = {"s", "t", "u"};
        g.expected_det = "a0^936*b0^528*c0^672";
        cat.push_back(g);
    }
    {   // G6 = <s,u>, z6 = z^3 = sususu = ususus
        GroupSpec g;
        g.id = 6; g.name = "G6"; g.family = 't';
        g.order = 48; g.ell = 3; g.center_order = 4;
        g.alphabet = Alphabet({"s", "u"});
        g.gen_orders = {2, 3};
        g.gen_class = {'a', 'c'};
        g.relations = {{"s u s u s u", "u s u s u s"}};
        g.z_words = {"s u s u s u", "u s u s u s"};
        g.parabolic_gen = 1;
        g.x_words = {"1", "s", "s u", "s u s"};
        g.tree = {{0, 1, "s"}, {1, 2, "u"}, {2, 3, "s"}};
        g.embedding = {"s", "u"};
        g.expected_det = "a0^264*c0^192";
        g.theta = theta_row('t', "a0", "a1", "1", "0", "0", "c0", "c1", "c2");
        g.theta_printed = true;
        cat.push_back(g);
    }
    {   // G5 = <t,u>, z5 = z^2 = tutu = utut; r := tu
        GroupSpec g;
        g.id = 5; g.name = "G5"; g.family = 't';
        g.order = 72; g.ell = 2; g.center_order = 6;
        g.alphabet = Alphabet({"t", "u"});
        g.gen_orders = {3, 3};
        g.gen_class = {'b', 'c'};
        g.relations = {{"t u t u", "u t u t"}};
        g.z_words = {"t u t u", "u t u t", "r r"};
        g.parabolic_gen = 1;
        g.redundant_defs = {{"r", "t u"}};
        g.x_words = {"1", "t u t^-1", "t u", "t u u"};
        g.tree = {{0, 2, "r"}, {2, 1, "t^-1"}, {1, 3, "r"}};
        g.embedding = {"t", "u"};
        g.expected_det = "-b0^264*c0^336";
        g.theta = theta_row('t', "1", "0", "b0", "b1", "b2", "c0", "c1", "c2");
        g.theta_printed = true;
        cat.push_back(g);
    }
    {   // G4 = <u,v>, v = sus; w := z^3 s = uvu = vuv; z4 = z^6 = w^2
        GroupSpec g;
        g.id = 4; g.name = "G4"; g.family = 't';
        g.order = 24; g.ell = 6; g.center_order = 2;
        g.alphabet = Alphabet({"u", "v"});
        g.gen_orders = {3, 3};
        g.gen_class = {'c', 'c'};
        g.relations = {{"u v u", "v u v"}};
        g.z_words = {"u v u v u v", "v u v u v u", "w w"};
        g.parabolic_gen = 0;
        g.redundant_defs = {{"w", "u v u"}};
        g.x_words = {"1", "v", "w", "w u"};
        g.tree = {{0, 1, "v"}, {0, 2, "w"}, {2, 3, "u"}};
        g.embedding = {"u", "s u s"};
        g.expected_det = "-c0^96";
        g.theta = theta_row('t', "1", "0", "1", "0", "0", "c0", "c1", "c2");
        g.theta_printed = true;
        cat.push_back(g);
    }

    {   // G11 = <s,t,u | s2 = t3 = u4 = 1, stu = tus = ust>, z = stu
        GroupSpec g;
        g.id = 11; g.name = "G11"; g.family = 'o';
        g.order = 576; g.ell = 1; g.center_order = 24;
        g.alphabet = Alphabet({"s", "t", "u"});
        g.gen_orders = {2, 3, 4};
        g.gen_class = {'a', 'b', 'c'};
        g.relations = {{"s t u", "t u s"}, {"t u s", "u s t"}};
        g.z_words = {"s t u", "t u s", "u s t"};
        g.parabolic_gen = 2;
        g.x_words = {"1", "s", "s u", "s u s", "s u u", "s u u s"};
        g.tree = {{0, 1, "s"}, {1, 2, "u"}, {2, 3, "s"}, {2, 4, "u"}, {4, 5, "s"}};
        g.embedding = {"s", "t", "u"};
        g.expected_det = "a0^7296*b0^4416*c0^4032";
        cat.push_back(g);
    }
    {   // G9 = <s,u>, z9 = z^3 = sususu = ususus
        GroupSpec g;
        g.id = 9; g.name = "G9"; g.family = 'o';
        g.order = 192; g.ell = 3; g.center_order = 8;
        g.alphabet = Alphabet({"s", "u"});
        g.gen_orders = {2, 4};
        g.gen_class = {'a', 'c'};
        g.relations = {{"s u s u s u", "u s u s u s"}};
        g.z_words = {"s u s u s u", "u s u s u s"};
        g.parabolic_gen = 1;
        g.x_words = {"1", "s", "s u", "s u s", "s u u", "s u u s"};
        g.tree = {{0, 1, "s"}, {1, 2, "u"}, {2, 3, "s"}, {2, 4, "u"}, {4, 5, "s"}};
        g.embedding = {"s", "u"};
        g.expected_det = "a0^2240*c0^1248";
        g.theta = theta_row('o', "a0", "a1", "1", "0", "0", "c0", "c1", "c2", "c3");
        cat.push_back(g);
    }
    {   // G10 = <t,u>, z10 = z^2 = tutu = utut; r := tu
        GroupSpec g;
        g.id = 10; g.name = "G10"; g.family = 'o';
        g.order = 288; g.ell = 2; g.center_order = 12;
        g.alphabet = Alphabet({"t", "u"});
        g.gen_orders = {3, 4};
        g.gen_class = {'b', 'c'};
        g.relations = {{"t u t u", "u t u t"}};
        g.z_words = {"t u t u", "u t u t", "r r"};
        g.parabolic_gen = 1;
        g.redundant_defs = {{"r", "t u"}};
        g.x_words = {"1", "t u t^-1", "t u u t^-1", "t u", "t u u", "t u u u"};
        g.tree = {{0, 3, "r"}, {3, 1, "t^-1"}, {1, 4, "r"}, {4, 2, "t^-1"}, {2, 5, "r"}};
        g.embedding = {"t", "u"};
        g.expected_det = "b0^2208*c0^2016";
        g.theta = theta_row('o', "1", "0", "b0", "b1", "b2", "c0", "c1", "c2", "c3");
        cat.push_back(g);
    }
    {   // G8 = <u,v>, v = sus; w := z^3 s = uvu = vuv; z8 = z^6 = w^2
        GroupSpec g;
        g.id = 8; g.name = "G8"; g.family = 'o';
        g.order = 96; g.ell = 6; g.center_order = 4;
        g.alphabet = Alphabet({"u", "v"});
        g.gen_orders = {4, 4};
        g.gen_class = {'c', 'c'};
        g.relations = {{"u v u", "v u v"}};
        g.z_words = {"u v u v u v", "v u v u v u", "w w"};
        g.parabolic_gen = 0;
        g.redundant_defs = {{"w", "u v u"}};
        g.x_words = {"1", "v", "v v", "w", "w u", "w u u"};
        g.tree = {{0, 1, "v"}, {1, 2, "v"}, {0, 3, "w"}, {3, 4, "u"}, {4, 5, "u"}};
        g.embedding = {"u", "s u s"};
        g.expected_det = "c0^624";
        g.theta = theta_row('o', "1", "0", "1", "0", "0", "c0", "c1", "c2", "c3");
        cat.push_back(g);
    }
    {   // G14 = <s,t>, z14 = z^4 = stststst = tstststs
        GroupSpec g;
        g.id = 14; g.name = "G14"; g.family = 'o';
        g.order = 144; g.ell = 4; g.center_order = 6;
        g.alphabet = Alphabet({"s", "t"});
        g.gen_orders = {2, 3};
        g.gen_class = {'a', 'b'};
        g.relations = {{"s t s t s t s t", "t s t s t s t s"}};
        g.z_words = {"s t s t s t s t", "t s t s t s t s"};
        g.parabolic_gen = 1;
        g.x_words = {"1", "s", "s t", "s t s", "s t s t", "s t s t s", "s t s t t", "s t s t t s"};
        g.tree = {{0, 1, "s"}, {1, 2, "t"}, {2, 3, "s"}, {3, 4, "t"},
                  {4, 5, "s"}, {4, 6, "t"}, {6, 7, "s"}};
        g.embedding = {"s", "t"};
        g.expected_det = "-a0^1692*b0^1200";
        g.theta = theta_row('o', "a0", "a1", "b0", "b1", "b2", "1", "0", "0", "0");
        cat.push_back(g);
    }
    {   // G12 = <s,g,h>, g = tst^-1, h = t^-1st; y := sghs = ghsg = hsgh; z12 = y^3 = (sgh)^4
        GroupSpec g;
        g.id = 12; g.name = "G12"; g.family = 'o';
        g.order = 48; g.ell = 12; g.center_order = 2;
        g.alphabet = Alphabet({"s", "g", "h"});
        g.gen_orders = {2, 2, 2};
        g.gen_class = {'a', 'a', 'a'};
        g.relations = {{"s g h s", "g h s g"}, {"g h s g", "h s g h"}};
        g.z_words = {"s g h s g h s g h s g h", "g h s g h s g h s g h s",
                     "h s g h s g h s g h s g"};
        g.parabolic_gen = 0;
        g.redundant_defs = {{"y", "s g h s"}};
        g.x_words = {"1", "g", "g h", "g h g",
                     "g h s g", "g h s g h", "g h s g h s", "g h s g h s h",
                     "g h s g h s g h", "g h s g h s g h s",
                     "g h s g h s g h s g", "g h s g h s g h s g s"};
        g.tree = {{0, 1, "g"}, {1, 2, "h"}, {2, 3, "g"},
                  {0, 4, "y"}, {4, 8, "y"}, {1, 5, "y"}, {5, 9, "y"},
                  {2, 6, "y"}, {6, 10, "y"}, {3, 7, "y"}, {7, 11, "y"}};
        g.embedding = {"s", "t s t^-1", "t^-1 s t"};
        g.expected_det = "-a0^576";
        g.theta = theta_row('o', "a0", "a1", "1", "0", "0", "1", "0", "0", "0");
        g.parent_id = 14;
        g.parent_words = {"s", "t s t^-1", "t^-1 s t"};
        g.parent_theta = {{"b0", 1}, {"b1", 0}, {"b2", 0}};
        cat.push_back(g);
    }
    {   // G13 = <s,x,e>, x = t^-1st, e = u^2; q := u^-1 z^3 = sxes = xesx; z13 = eq^2 = (sxe)^3
        GroupSpec g;
        g.id = 13; g.name = "G13"; g.family = 'o';
        g.order = 96; g.ell = 6; g.center_order = 4;
        g.alphabet = Alphabet({"s", "x", "e"});
        g.gen_orders = {2, 2, 2};
        g.gen_class = {'a', 'a', 'c'};
        g.relations = {{"s x e s x", "s s x e s"},   // qx = sq
                       {"e s x e s", "s x e s e"}};  // eq = qe
        g.z_words = {"e s x e s s x e s", "s x e s x e s x e", "x e s x e s x e s",
                     "e s x e s x e s x", "e q q", "q e q", "q q e"};
        g.parabolic_gen = 2;
        g.redundant_defs = {{"q", "s x e s"}};
        g.x_words = {"1", "s", "q x^-1 s^-1", "q x^-1", "s e", "s e s",
                     "q", "q s", "s e q", "s e q s", "q s e", "q s e s"};
        g.tree = {{0, 1, "s"}, {0, 6, "q"}, {1, 4, "e"}, {6, 7, "s"}, {4, 5, "s"},
                  {4, 8, "q"}, {6, 3, "x^-1"}, {7, 10, "e"}, {8, 9, "s"},
                  {3, 2, "s^-1"}, {10, 11, "s"}};
        g.embedding = {"s", "t^-1 s t", "u u"};
        g.expected_det = "a0^1120*c0^592";
        cat.push_back(g);
    }
    {   // G15 = <s,t,e>, e = u^2; est = ste; z15 = z^2 = tests = tstes = estst = stest = stste
        GroupSpec g;
        g.id = 15; g.name = "G15"; g.family = 'o';
        g.order = 288; g.ell = 2; g.center_order = 12;
        g.alphabet = Alphabet({"s", "t", "e"});
        g.gen_orders = {2, 3, 2};
        g.gen_class = {'a', 'b', 'c'};
        g.relations = {{"e s t", "s t e"}};
        g.z_words = {"t e s t s", "t s t e s", "e s t s t", "s t e s t", "s t s t e"};
        g.parabolic_gen = 2;
        g.redundant_defs = {{"r", "s t"}, {"p", "s t s t s t^-1 s^-1"}};
        g.x_words = {"1", "s", "s t s t^-1 s^-1", "s t s t^-1", "s e", "s e s",
                     "s t", "s t s", "s t s t s t^-1 s^-1", "s t s t s t^-1",
                     "s t s e", "s t s e s"};
        g.tree = {{0, 1, "s"}, {0, 6, "r"}, {1, 4, "e"}, {6, 7, "s"}, {4, 5, "s"},
                  {0, 8, "p"}, {7, 3, "t^-1"}, {7, 10, "e"}, {8, 9, "s"},
                  {3, 2, "s^-1"}, {10, 11, "s"}};
        g.embedding = {"s", "t", "u u"};
        g.expected_det = "a0^3648*b0^2208*c0^2016";
        cat.push_back(g);
    }

    return cat;
}

}  // namespace detail

inline const std::vector<GroupSpec>& catalog() {
    static const std::vector<GroupSpec> cat = detail::build_catalog();
    return cat;
}

inline const GroupSpec& spec(int id) {
    for (const GroupSpec& g : catalog())
        if (g.id == id) return g;
    throw std::invalid_argument("unknown group id G" + std::to_string(id));
}

inline const GroupSpec& spec(const std::string& id) {
    std::string t = id;
    if (!t.empty() && (t[0] == 'G' || t[0] == 'g')) t = t.substr(1);
    try {
        return spec(std::stoi(t));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("unknown group id " + id);
    }
}

inline std::vector<int> all_group_ids() {
    std::vector<int> ids;
    for (const GroupSpec& g : catalog()) ids.push_back(g.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace hecke
