#pragma once

// Words over a generator alphabet; letters are (generator id, exponent +-1).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

struct Letter {
    int gen = 0;
    int pow = 1;  // +1 or -1

    Letter inverse() const { return {gen, -pow}; }
    bool operator==(const Letter& o) const { return gen == o.gen && pow == o.pow; }
};

using Word = std::vector<Letter>;

inline Word inverse(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(it->inverse());
    return r;
}

inline Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

// Cancel adjacent g g^-1 pairs.
inline Word free_reduce(const Word& w) {
    Word r;
    for (const Letter& l : w) {
        if (!r.empty() && r.back().gen == l.gen && r.back().pow == -l.pow)
            r.pop_back();
        else
            r.push_back(l);
    }
    return r;
}

inline Word repeat(const Word& w, unsigned n) {
    Word r;
    r.reserve(w.size() * n);
    for (unsigned i = 0; i < n; ++i) r.insert(r.end(), w.begin(), w.end());
    return r;
}

// Generator names for one group; provides word parsing/printing.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {}

    std::size_t size() const { return names_.size(); }
    const std::string& name(int g) const { return names_.at(static_cast<std::size_t>(g)); }

    int index(const std::string& n) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return static_cast<int>(i);
        return -1;
    }

    // "s u s^-1 w" -> word; tokens separated by spaces.
    Word word(const std::string& text) const {
        Word w;
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && text[i] == ' ') ++i;
            if (i >= text.size()) break;
            std::size_t j = i;
            while (j < text.size() && text[j] != ' ') ++j;
            std::string tok = text.substr(i, j - i);
            i = j;
            int pow = 1;
            if (auto pos = tok.find("^-1"); pos != std::string::npos) {
                pow = -1;
                tok = tok.substr(0, pos);
            }
            int g = index(tok);
            if (g < 0) throw std::invalid_argument("Alphabet::word: unknown generator " + tok);
            w.push_back({g, pow});
        }
        return w;
    }

    std::string str(const Word& w) const {
        if (w.empty()) return "1";
        std::string out;
        for (const Letter& l : w) {
            if (!out.empty()) out += " ";
            out += name(l.gen);
            if (l.pow < 0) out += "^-1";
        }
        return out;
    }

private:
    std::vector<std::string> names_;
};

}  // namespace hecke
