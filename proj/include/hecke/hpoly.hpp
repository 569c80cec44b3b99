#pragma once

// Elements of the parabolic subalgebra H': polynomials of degree < e in the
// distinguished generator T_{g0}, reduced by its positive Hecke relation.

#include <optional>
#include <stdexcept>
#include <vector>

#include "laurent.hpp"

namespace hecke {

// Reduction context for one parabolic generator of order e:
// T^e = rel[e-1] T^{e-1} + ... + rel[0].
struct ParabolicContext {
    VarSpec ring;
    unsigned e = 0;
    std::vector<LaurentPoly> rel;

    ParabolicContext() = default;
    ParabolicContext(VarSpec r, const std::vector<std::string>& coeffNames)
        : ring(std::move(r)), e(static_cast<unsigned>(coeffNames.size())) {
        for (const auto& n : coeffNames) rel.push_back(LaurentPoly::variable(ring, n));
    }
};

struct HPoly {
    std::vector<LaurentPoly> c;  // c[k] is the coefficient of T^k, size e

    bool is_zero() const {
        for (const auto& p : c)
            if (!p.is_zero()) return false;
        return true;
    }

    bool operator==(const HPoly& o) const { return c == o.c; }
};

inline HPoly hp_zero(const ParabolicContext& ctx) {
    return {std::vector<LaurentPoly>(ctx.e, LaurentPoly::zero(ctx.ring))};
}

inline HPoly hp_one(const ParabolicContext& ctx) {
    HPoly h = hp_zero(ctx);
    h.c[0] = LaurentPoly::constant(ctx.ring, 1);
    return h;
}

inline HPoly hp_scalar(const ParabolicContext& ctx, const LaurentPoly& s) {
    HPoly h = hp_zero(ctx);
    h.c[0] = s;
    return h;
}

// T^a for 0 <= a < e.
inline HPoly hp_gen_power(const ParabolicContext& ctx, unsigned a) {
    if (a >= ctx.e) throw std::invalid_argument("hp_gen_power: exponent out of range");
    HPoly h = hp_zero(ctx);
    h.c[a] = LaurentPoly::constant(ctx.ring, 1);
    return h;
}

// T^-1 = rel[0]^-1 T^{e-1} - rel[0]^-1 rel[e-1] T^{e-2} - ... - rel[0]^-1 rel[1].
inline HPoly hp_gen_inverse(const ParabolicContext& ctx) {
    HPoly h = hp_zero(ctx);
    LaurentPoly inv0 = ctx.rel[0].inverse();
    h.c[ctx.e - 1] = inv0;
    for (unsigned k = 1; k < ctx.e; ++k) h.c[k - 1] = -(inv0 * ctx.rel[k]);
    return h;
}

inline HPoly hp_add(const HPoly& a, const HPoly& b) {
    HPoly r = a;
    for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] += b.c[k];
    return r;
}

inline HPoly hp_scale(const HPoly& a, const LaurentPoly& s) {
    HPoly r = a;
    for (auto& p : r.c) p = p * s;
    return r;
}

inline HPoly hp_neg(const HPoly& a) {
    HPoly r = a;
    for (auto& p : r.c) p = -p;
    return r;
}

namespace detail {

// Cofactor-expansion determinant; the matrices here are at most e x e.
inline LaurentPoly poly_det(const VarSpec& ring, const std::vector<std::vector<LaurentPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    LaurentPoly d = LaurentPoly::zero(ring);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<LaurentPoly>> minor;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.push_back(std::vector<LaurentPoly>(m[r].begin() + 1, m[r].end()));
        }
        LaurentPoly term = m[i][0] * poly_det(ring, minor);
        d += (i % 2 ? -term : term);
    }
    return d;
}

}  // namespace detail

inline HPoly hp_mul(const ParabolicContext& ctx, const HPoly& a, const HPoly& b);

// Inverse of h in H' when it exists: h is a unit iff the determinant of its
// regular representation (an e x e matrix over the base ring) is a unit, and
// then Cramer's rule gives the inverse coefficients.
inline std::optional<HPoly> hp_try_inverse(const ParabolicContext& ctx, const HPoly& h) {
    const unsigned e = ctx.e;
    std::vector<std::vector<LaurentPoly>> M(e, std::vector<LaurentPoly>(e, LaurentPoly::zero(ctx.ring)));
    for (unsigned j = 0; j < e; ++j) {
        HPoly col = hp_mul(ctx, h, hp_gen_power(ctx, j));
        for (unsigned i = 0; i < e; ++i) M[i][j] = col.c[i];
    }
    LaurentPoly det = detail::poly_det(ctx.ring, M);
    if (!det.is_unit()) return std::nullopt;
    LaurentPoly detInv = det.inverse();
    HPoly inv = hp_zero(ctx);
    for (unsigned i = 0; i < e; ++i) {
        auto Mi = M;
        for (unsigned r = 0; r < e; ++r)
            Mi[r][i] = LaurentPoly::constant(ctx.ring, r == 0 ? 1 : 0);
        inv.c[i] = detail::poly_det(ctx.ring, Mi) * detInv;
    }
    if (!(hp_mul(ctx, h, inv) == hp_one(ctx)))
        throw std::logic_error("hp_try_inverse: verification failed");
    return inv;
}

// Solve den * x = num in H' by Cramer's rule over the regular representation,
// requiring every coefficient division to be exact in the base ring.
inline std::optional<HPoly> hp_try_divide(const ParabolicContext& ctx, const HPoly& num, const HPoly& den) {
    const unsigned e = ctx.e;
    std::vector<std::vector<LaurentPoly>> M(e, std::vector<LaurentPoly>(e, LaurentPoly::zero(ctx.ring)));
    for (unsigned j = 0; j < e; ++j) {
        HPoly col = hp_mul(ctx, den, hp_gen_power(ctx, j));
        for (unsigned i = 0; i < e; ++i) M[i][j] = col.c[i];
    }
    LaurentPoly det = detail::poly_det(ctx.ring, M);
    if (det.is_zero()) return std::nullopt;
    HPoly x = hp_zero(ctx);
    try {
        for (unsigned i = 0; i < e; ++i) {
            auto Mi = M;
            for (unsigned r = 0; r < e; ++r) Mi[r][i] = num.c[r];
            x.c[i] = detail::poly_det(ctx.ring, Mi).divide_exact(det);
        }
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
    if (!(hp_mul(ctx, den, x) == num)) return std::nullopt;
    return x;
}

// Product with eager reduction of degrees >= e through the positive relation.
inline HPoly hp_mul(const ParabolicContext& ctx, const HPoly& a, const HPoly& b) {
    const unsigned e = ctx.e;
    std::vector<LaurentPoly> full(2 * e - 1, LaurentPoly::zero(ctx.ring));
    for (unsigned i = 0; i < e; ++i) {
        if (a.c[i].is_zero()) continue;
        for (unsigned j = 0; j < e; ++j) {
            if (b.c[j].is_zero()) continue;
            full[i + j] += a.c[i] * b.c[j];
        }
    }
    for (unsigned d = 2 * e - 2; d >= e; --d) {
        if (full[d].is_zero()) continue;
        for (unsigned k = 0; k < e; ++k) full[d - e + k] += full[d] * ctx.rel[k];
        full[d] = LaurentPoly::zero(ctx.ring);
    }
    HPoly r;
    r.c.assign(full.begin(), full.begin() + e);
    return r;
}

}  // namespace hecke
