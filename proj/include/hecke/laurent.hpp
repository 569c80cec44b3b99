#pragma once

// Exact multivariate Laurent polynomial arithmetic over Z, with a designated
// subset of invertible variables, plus evaluation into prime fields.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hecke {

using Int = boost::multiprecision::cpp_int;

// Ordered variable list; only variables flagged invertible may carry negative
// exponents.
class VarSpec {
public:
    VarSpec() = default;
    VarSpec(std::vector<std::string> names, std::vector<bool> invertible) {
        if (names.size() != invertible.size())
            throw std::invalid_argument("VarSpec: names/invertible size mismatch");
        for (std::size_t i = 0; i < names.size(); ++i)
            for (std::size_t j = i + 1; j < names.size(); ++j)
                if (names[i] == names[j])
                    throw std::invalid_argument("VarSpec: duplicate variable " + names[i]);
        d_ = std::make_shared<Data>(Data{std::move(names), std::move(invertible)});
    }

    std::size_t size() const { return d_ ? d_->names.size() : 0; }
    const std::string& name(std::size_t i) const { return d_->names.at(i); }
    bool invertible(std::size_t i) const { return d_->invertible.at(i); }

    int index(const std::string& n) const {
        for (std::size_t i = 0; i < size(); ++i)
            if (d_->names[i] == n) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const VarSpec& o) const {
        if (d_ == o.d_) return true;
        if (!d_ || !o.d_) return false;
        return d_->names == o.d_->names && d_->invertible == o.d_->invertible;
    }
    bool operator!=(const VarSpec& o) const { return !(*this == o); }

private:
    struct Data {
        std::vector<std::string> names;
        std::vector<bool> invertible;
    };
    std::shared_ptr<const Data> d_;
};

using Exponents = std::vector<int16_t>;

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const {
        std::size_t h = 1469598103934665603ull;
        for (int16_t v : e) {
            h ^= static_cast<std::size_t>(static_cast<uint16_t>(v));
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Residue-point in F_p; invertible variables must map to nonzero residues.
struct FieldPoint {
    uint64_t prime = 0;
    std::vector<uint64_t> values;  // aligned with VarSpec

    static FieldPoint random(const VarSpec& spec, uint64_t prime, std::mt19937_64& rng) {
        FieldPoint pt;
        pt.prime = prime;
        pt.values.resize(spec.size());
        std::uniform_int_distribution<uint64_t> nonzero(1, prime - 1);
        std::uniform_int_distribution<uint64_t> any(0, prime - 1);
        for (std::size_t i = 0; i < spec.size(); ++i)
            pt.values[i] = spec.invertible(i) ? nonzero(rng) : any(rng);
        return pt;
    }
};

namespace fp {

inline uint64_t mul(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((__uint128_t)a * b % p);
}
inline uint64_t add(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline uint64_t sub(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
inline uint64_t pow(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mul(r, b, p);
        b = mul(b, b, p);
        e >>= 1;
    }
    return r;
}
inline uint64_t inv(uint64_t a, uint64_t p) {
    if (a % p == 0) throw std::domain_error("fp::inv of zero");
    return pow(a, p - 2, p);
}

}  // namespace fp

// Sparse Laurent polynomial; terms kept in descending lexicographic order on
// exponent vectors, no zero coefficients stored.
class LaurentPoly {
public:
    struct Term {
        Exponents exps;
        Int coeff;
    };

    LaurentPoly() = default;
    explicit LaurentPoly(VarSpec spec) : spec_(std::move(spec)) {}

    static LaurentPoly zero(const VarSpec& spec) { return LaurentPoly(spec); }

    static LaurentPoly constant(const VarSpec& spec, Int c) {
        LaurentPoly p(spec);
        if (c != 0) p.terms_.push_back({Exponents(spec.size(), 0), std::move(c)});
        return p;
    }

    static LaurentPoly monomial(const VarSpec& spec, Exponents exps, Int c) {
        LaurentPoly p(spec);
        if (exps.size() != spec.size())
            throw std::invalid_argument("LaurentPoly::monomial: exponent size mismatch");
        checkExponents(spec, exps);
        if (c != 0) p.terms_.push_back({std::move(exps), std::move(c)});
        return p;
    }

    static LaurentPoly variable(const VarSpec& spec, const std::string& name, int exp = 1) {
        int i = spec.index(name);
        if (i < 0) throw std::invalid_argument("LaurentPoly: unknown variable " + name);
        Exponents e(spec.size(), 0);
        e[static_cast<std::size_t>(i)] = static_cast<int16_t>(exp);
        return monomial(spec, std::move(e), 1);
    }

    const VarSpec& spec() const { return spec_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_[0].coeff == 1 &&
               std::all_of(terms_[0].exps.begin(), terms_[0].exps.end(),
                           [](int16_t e) { return e == 0; });
    }

    // Single term, coefficient +-1, nonzero exponents only on invertible
    // variables.
    bool is_unit() const {
        if (terms_.size() != 1) return false;
        const Term& t = terms_[0];
        if (t.coeff != 1 && t.coeff != -1) return false;
        for (std::size_t i = 0; i < t.exps.size(); ++i)
            if (t.exps[i] != 0 && !spec_.invertible(i)) return false;
        return true;
    }

    bool operator==(const LaurentPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].exps != o.terms_[i].exps || terms_[i].coeff != o.terms_[i].coeff)
                return false;
        return true;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly operator-() const {
        LaurentPoly r(*this);
        for (Term& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        requireSameSpec(o);
        LaurentPoly r(spec_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            if (terms_[i].exps == o.terms_[j].exps) {
                Int c = terms_[i].coeff + o.terms_[j].coeff;
                if (c != 0) r.terms_.push_back({terms_[i].exps, std::move(c)});
                ++i, ++j;
            } else if (lexGreater(terms_[i].exps, o.terms_[j].exps)) {
                r.terms_.push_back(terms_[i++]);
            } else {
                r.terms_.push_back(o.terms_[j++]);
            }
        }
        while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
        while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
        return r;
    }

    LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }

    LaurentPoly operator*(const LaurentPoly& o) const {
        requireSameSpec(o);
        if (is_zero() || o.is_zero()) return zero(spec_);
        std::unordered_map<Exponents, Int, ExponentsHash> acc;
        acc.reserve(terms_.size() * o.terms_.size());
        const std::size_t n = spec_.size();
        Exponents e(n);
        for (const Term& s : terms_) {
            for (const Term& t : o.terms_) {
                for (std::size_t k = 0; k < n; ++k)
                    e[k] = static_cast<int16_t>(s.exps[k] + t.exps[k]);
                acc[e] += s.coeff * t.coeff;
            }
        }
        return fromMap(spec_, acc);
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly operator*(const Int& c) const {
        if (c == 0) return zero(spec_);
        LaurentPoly r(*this);
        for (Term& t : r.terms_) t.coeff *= c;
        return r;
    }

    LaurentPoly pow(unsigned n) const {
        LaurentPoly r = constant(spec_, 1);
        LaurentPoly b = *this;
        while (n) {
            if (n & 1) r = r * b;
            b = n > 1 ? b * b : b;
            n >>= 1;
        }
        return r;
    }

    // Multiplicative inverse; defined only for unit monomials.
    LaurentPoly inverse() const {
        if (terms_.size() != 1 || (terms_[0].coeff != 1 && terms_[0].coeff != -1))
            throw std::domain_error("LaurentPoly::inverse: not a unit monomial");
        Exponents e = terms_[0].exps;
        for (auto& x : e) x = static_cast<int16_t>(-x);
        checkExponents(spec_, e);
        return monomial(spec_, std::move(e), terms_[0].coeff);
    }

    // Ring homomorphism given by an image polynomial per variable; negative
    // exponents require the image to be a unit monomial.
    LaurentPoly substitute(const VarSpec& target, const std::vector<LaurentPoly>& images) const {
        if (images.size() != spec_.size())
            throw std::invalid_argument("substitute: one image per variable required");
        LaurentPoly r = zero(target);
        for (const Term& t : terms_) {
            LaurentPoly term = constant(target, t.coeff);
            for (std::size_t i = 0; i < t.exps.size(); ++i) {
                if (t.exps[i] == 0) continue;
                const LaurentPoly& img = images[i];
                term *= t.exps[i] > 0 ? img.pow(static_cast<unsigned>(t.exps[i]))
                                      : img.inverse().pow(static_cast<unsigned>(-t.exps[i]));
                if (term.is_zero()) break;
            }
            r += term;
        }
        return r;
    }

    // Partial evaluation into another ring: variables listed in `values` are
    // replaced by integer constants, the rest are matched by name in `target`.
    LaurentPoly specialize(const VarSpec& target,
                           const std::map<std::string, Int>& values) const {
        std::vector<int> dest(spec_.size(), -1);   // index in target, or -1
        std::vector<const Int*> subst(spec_.size(), nullptr);
        for (std::size_t i = 0; i < spec_.size(); ++i) {
            auto it = values.find(spec_.name(i));
            if (it != values.end()) {
                subst[i] = &it->second;
            } else {
                dest[i] = target.index(spec_.name(i));
                if (dest[i] < 0)
                    throw std::invalid_argument("specialize: variable " + spec_.name(i) +
                                                " missing from target ring");
            }
        }
        std::unordered_map<Exponents, Int, ExponentsHash> acc;
        for (const Term& t : terms_) {
            Int c = t.coeff;
            Exponents e(target.size(), 0);
            bool dead = false;
            for (std::size_t i = 0; i < t.exps.size() && !dead; ++i) {
                if (t.exps[i] == 0) continue;
                if (subst[i]) {
                    if (*subst[i] == 0) {
                        dead = true;
                    } else if (t.exps[i] > 0) {
                        for (int k = 0; k < t.exps[i]; ++k) c *= *subst[i];
                    } else if (*subst[i] == 1) {
                        // 1^-k = 1
                    } else if (*subst[i] == -1) {
                        if (t.exps[i] % 2 != 0) c = -c;
                    } else {
                        throw std::domain_error(
                            "specialize: negative exponent at non-invertible value");
                    }
                } else {
                    e[static_cast<std::size_t>(dest[i])] = t.exps[i];
                }
            }
            if (!dead) acc[e] += c;
        }
        LaurentPoly r = fromMap(target, acc);
        for (const Term& t : r.terms_) checkExponents(target, t.exps);
        return r;
    }

    uint64_t evaluate(const FieldPoint& pt) const {
        if (pt.values.size() != spec_.size())
            throw std::invalid_argument("evaluate: point/spec size mismatch");
        const uint64_t p = pt.prime;
        uint64_t r = 0;
        for (const Term& t : terms_) {
            Int cm = t.coeff % static_cast<long long>(p);
            if (cm < 0) cm += static_cast<long long>(p);
            uint64_t v = cm.convert_to<uint64_t>();
            for (std::size_t i = 0; i < t.exps.size(); ++i) {
                int16_t e = t.exps[i];
                if (e == 0) continue;
                uint64_t base = pt.values[i] % p;
                if (e < 0) {
                    if (base == 0) throw std::domain_error("evaluate: zero at invertible variable");
                    base = fp::inv(base, p);
                }
                v = fp::mul(v, fp::pow(base, static_cast<uint64_t>(e < 0 ? -e : e), p), p);
            }
            r = fp::add(r, v, p);
        }
        return r;
    }

    int total_degree() const {
        int d = 0;
        for (const Term& t : terms_) {
            int s = 0;
            for (int16_t e : t.exps) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    // "3*a0^2*c1 - a0^-1" style; terms in canonical (descending lex) order.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const Term& t : terms_) {
            Int c = t.coeff;
            if (first) {
                if (c < 0) {
                    out += "-";
                    c = -c;
                }
            } else {
                out += c < 0 ? " - " : " + ";
                if (c < 0) c = -c;
            }
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < t.exps.size(); ++i) {
                if (t.exps[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += spec_.name(i);
                if (t.exps[i] != 1) mono += "^" + std::to_string(t.exps[i]);
            }
            if (mono.empty()) {
                out += c.str();
            } else {
                if (c != 1) out += c.str() + "*";
                out += mono;
            }
        }
        return out;
    }

    static LaurentPoly parse(const VarSpec& spec, const std::string& s);

    // Exact quotient; throws if the division is not exact.
    LaurentPoly divide_exact(const LaurentPoly& d) const {
        requireSameSpec(d);
        if (d.is_zero()) throw std::domain_error("divide_exact: division by zero");
        if (is_zero()) return zero(spec_);
        // Shift both operands to nonnegative exponents, divide, shift back.
        const std::size_t n = spec_.size();
        Exponents shiftN(n, 0), shiftD(n, 0);
        minExponents(terms_, shiftN);
        minExponents(d.terms_, shiftD);
        std::map<Exponents, Int, LexLess> rem;
        for (const Term& t : terms_) rem[shifted(t.exps, shiftN)] = t.coeff;
        std::vector<Term> divisor;
        for (const Term& t : d.terms_) divisor.push_back({shifted(t.exps, shiftD), t.coeff});
        const Term& dlt = divisor.front();  // leading term, descending order
        std::vector<Term> quot;
        Exponents q(n);
        std::size_t steps = 0;
        while (!rem.empty()) {
            if (++steps > 1000000) throw std::domain_error("divide_exact: not divisible");
            auto it = std::prev(rem.end());  // leading term of remainder
            // The quotient exponent may dip below the shifted origin; only the
            // shifted-back result is range-checked.
            for (std::size_t k = 0; k < n; ++k)
                q[k] = static_cast<int16_t>(it->first[k] - dlt.exps[k]);
            if (it->second % dlt.coeff != 0)
                throw std::domain_error("divide_exact: coefficient not divisible");
            Int qc = it->second / dlt.coeff;
            quot.push_back({q, qc});
            for (const Term& t : divisor) {
                Exponents e(n);
                for (std::size_t k = 0; k < n; ++k)
                    e[k] = static_cast<int16_t>(q[k] + t.exps[k]);
                Int& c = rem[e];
                c -= qc * t.coeff;
                if (c == 0) rem.erase(e);
            }
        }
        LaurentPoly r(spec_);
        for (Term& t : quot) {
            for (std::size_t k = 0; k < n; ++k)
                t.exps[k] = static_cast<int16_t>(t.exps[k] + shiftN[k] - shiftD[k]);
            checkExponents(spec_, t.exps);
            r.terms_.push_back(std::move(t));
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return lexGreater(a.exps, b.exps); });
        if (r * d != *this) throw std::domain_error("divide_exact: quotient verification failed");
        return r;
    }

    std::size_t hash() const {
        std::size_t h = terms_.size();
        ExponentsHash eh;
        for (const Term& t : terms_) {
            h = h * 1000003 + eh(t.exps);
            h = h * 1000003 + static_cast<std::size_t>(t.coeff.convert_to<long long>() & 0xffffffff);
        }
        return h;
    }

private:
    struct LexLess {
        bool operator()(const Exponents& a, const Exponents& b) const {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        }
    };

    static bool lexGreater(const Exponents& a, const Exponents& b) {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }

    static void checkExponents(const VarSpec& spec, const Exponents& e) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0 && !spec.invertible(i))
                throw std::domain_error("LaurentPoly: negative exponent on non-invertible variable " +
                                        spec.name(i));
    }

    static void minExponents(const std::vector<Term>& ts, Exponents& out) {
        for (const Term& t : ts)
            for (std::size_t k = 0; k < out.size(); ++k)
                out[k] = std::min(out[k], t.exps[k]);
    }

    static Exponents shifted(const Exponents& e, const Exponents& shift) {
        Exponents r(e.size());
        for (std::size_t k = 0; k < e.size(); ++k)
            r[k] = static_cast<int16_t>(e[k] - shift[k]);
        return r;
    }

    static LaurentPoly fromMap(const VarSpec& spec,
                               std::unordered_map<Exponents, Int, ExponentsHash>& acc) {
        LaurentPoly r(spec);
        r.terms_.reserve(acc.size());
        for (auto& [e, c] : acc) {
            if (c == 0) continue;
            checkExponents(spec, e);
            r.terms_.push_back({e, std::move(c)});
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return lexGreater(a.exps, b.exps); });
        return r;
    }

    void requireSameSpec(const LaurentPoly& o) const {
        if (spec_ != o.spec_) throw std::invalid_argument("LaurentPoly: mismatched VarSpec");
    }

    VarSpec spec_;
    std::vector<Term> terms_;
};

inline LaurentPoly LaurentPoly::parse(const VarSpec& spec, const std::string& s) {
    LaurentPoly result = LaurentPoly::zero(spec);
    std::size_t i = 0;
    auto skipws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
    skipws();
    if (i >= s.size()) return result;
    if (s.compare(i, 1, "0") == 0 && i + 1 == s.size()) return result;
    int sign = 1;
    if (s[i] == '-') { sign = -1; ++i; }
    while (i < s.size()) {
        skipws();
        // term: [coeff][*var[^exp]]*
        Int coeff = 1;
        bool sawCoeff = false;
        if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            coeff = Int(s.substr(i, j - i));
            i = j;
            sawCoeff = true;
        }
        Exponents exps(spec.size(), 0);
        bool sawVar = false;
        while (true) {
            if (i < s.size() && s[i] == '*') ++i;
            else if (sawCoeff || sawVar) break;
            // variable name: letters/digits, longest match against spec
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            if (j == i) break;
            std::string name = s.substr(i, j - i);
            int vi = spec.index(name);
            if (vi < 0) throw std::invalid_argument("LaurentPoly::parse: unknown variable " + name);
            i = j;
            int exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                int esign = 1;
                if (i < s.size() && s[i] == '-') { esign = -1; ++i; }
                std::size_t k = i;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                exp = esign * std::stoi(s.substr(i, k - i));
                i = k;
            }
            exps[static_cast<std::size_t>(vi)] =
                static_cast<int16_t>(exps[static_cast<std::size_t>(vi)] + exp);
            sawVar = true;
        }
        result += LaurentPoly::monomial(spec, std::move(exps), coeff * sign);
        skipws();
        if (i >= s.size()) break;
        if (s[i] == '+') { sign = 1; ++i; }
        else if (s[i] == '-') { sign = -1; ++i; }
        else throw std::invalid_argument("LaurentPoly::parse: unexpected character at " + s.substr(i));
    }
    return result;
}

// Coefficients of the deformed order relation from eigenvalue symbols:
// expanding prod_j (X - u_j) = X^e - sum_k a_k X^k gives
// a_{e-k} = (-1)^(k-1) f_k(u_1,...,u_e) with f_k elementary symmetric.
// Returned in ascending order a_0, ..., a_{e-1}.
inline std::vector<LaurentPoly> coefficients_from_eigenvalues(const VarSpec& spec,
                                                              const std::vector<std::string>& u) {
    const std::size_t e = u.size();
    if (e < 2 || e > 4) throw std::invalid_argument("coefficients_from_eigenvalues: order must be 2..4");
    // f_k via iterative expansion of prod (1 + u_j t)
    std::vector<LaurentPoly> f(e + 1, LaurentPoly::zero(spec));
    f[0] = LaurentPoly::constant(spec, 1);
    for (std::size_t j = 0; j < e; ++j) {
        LaurentPoly uj = LaurentPoly::variable(spec, u[j]);
        for (std::size_t k = std::min(j + 1, e); k >= 1; --k) f[k] += f[k - 1] * uj;
    }
    std::vector<LaurentPoly> a(e, LaurentPoly::zero(spec));
    for (std::size_t k = 1; k <= e; ++k) {
        LaurentPoly v = f[k];
        if (k % 2 == 0) v = -v;  // (-1)^(k-1)
        a[e - k] = v;
    }
    return a;
}

}  // namespace hecke
