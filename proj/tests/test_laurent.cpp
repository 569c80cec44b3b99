#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hecke/laurent.hpp"

using namespace hecke;

namespace {

VarSpec test_ring() {
    return VarSpec({"a0", "a1", "c0", "c1", "c2"}, {true, false, true, false, false});
}

LaurentPoly random_poly(const VarSpec& spec, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 6);
    std::uniform_int_distribution<int> expo(-3, 3);
    std::uniform_int_distribution<long long> coeff(-9, 9);
    LaurentPoly p = LaurentPoly::zero(spec);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Exponents e(spec.size(), 0);
        for (std::size_t k = 0; k < spec.size(); ++k)
            e[k] = static_cast<int16_t>(spec.invertible(k) ? expo(rng) : std::abs(expo(rng)));
        p += LaurentPoly::monomial(spec, e, coeff(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("ring axioms on random polynomials") {
    VarSpec spec = test_ring();
    std::mt19937_64 rng(12345);
    LaurentPoly one = LaurentPoly::constant(spec, 1);
    LaurentPoly zero = LaurentPoly::zero(spec);
    for (int trial = 0; trial < 300; ++trial) {
        LaurentPoly p = random_poly(spec, rng);
        LaurentPoly q = random_poly(spec, rng);
        LaurentPoly r = random_poly(spec, rng);
        REQUIRE(p + q == q + p);
        REQUIRE((p + q) + r == p + (q + r));
        REQUIRE(p * q == q * p);
        REQUIRE((p * q) * r == p * (q * r));
        REQUIRE(p * (q + r) == p * q + p * r);
        REQUIRE(p + zero == p);
        REQUIRE(p * one == p);
        REQUIRE(p - p == zero);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    VarSpec spec = test_ring();
    std::mt19937_64 rng(777);
    const uint64_t prime = 2147483629ULL;
    for (int trial = 0; trial < 1000; ++trial) {
        LaurentPoly p = random_poly(spec, rng);
        LaurentPoly q = random_poly(spec, rng);
        FieldPoint pt = FieldPoint::random(spec, prime, rng);
        REQUIRE((p + q).evaluate(pt) == fp::add(p.evaluate(pt), q.evaluate(pt), prime));
        REQUIRE((p * q).evaluate(pt) == fp::mul(p.evaluate(pt), q.evaluate(pt), prime));
        REQUIRE((-p).evaluate(pt) == fp::sub(0, p.evaluate(pt), prime));
    }
}

TEST_CASE("negative exponent at a point uses the modular inverse") {
    VarSpec spec = test_ring();
    LaurentPoly p = LaurentPoly::variable(spec, "a0", -1);
    FieldPoint pt{101, {5, 1, 1, 1, 1}};
    REQUIRE(p.evaluate(pt) == 81);  // 5^-1 mod 101
}

TEST_CASE("units are monomials with unit coefficient and invertible support") {
    VarSpec spec = test_ring();
    LaurentPoly u = LaurentPoly::variable(spec, "a0", -2) * LaurentPoly::variable(spec, "c0", 3);
    REQUIRE(u.is_unit());
    REQUIRE((u * u.inverse()).is_one());
    REQUIRE_FALSE(LaurentPoly::variable(spec, "a1").is_unit());
    REQUIRE_FALSE((u + LaurentPoly::constant(spec, 1)).is_unit());
    LaurentPoly v = -u;
    REQUIRE(v.is_unit());
    REQUIRE((v * v.inverse()).is_one());
    REQUIRE_THROWS(LaurentPoly::variable(spec, "a1", -1));
}

TEST_CASE("parse and to_string round trip") {
    VarSpec spec = test_ring();
    LaurentPoly p = LaurentPoly::parse(spec, "3*a0^2*c1 - a0^-1 + 7");
    REQUIRE(LaurentPoly::parse(spec, p.to_string()) == p);
    REQUIRE(LaurentPoly::parse(spec, "-c0^96") ==
            -LaurentPoly::variable(spec, "c0", 96));
    REQUIRE(LaurentPoly::parse(spec, "a0^264*c0^192") ==
            LaurentPoly::variable(spec, "a0", 264) * LaurentPoly::variable(spec, "c0", 192));
}

TEST_CASE("exact division recovers the quotient") {
    VarSpec spec = test_ring();
    std::mt19937_64 rng(424242);
    int done = 0;
    while (done < 100) {
        LaurentPoly p = random_poly(spec, rng);
        LaurentPoly d = random_poly(spec, rng);
        if (d.is_zero()) continue;
        REQUIRE((p * d).divide_exact(d) == p);
        ++done;
    }
}

TEST_CASE("Hecke coefficients from eigenvalues kill the characteristic relation") {
    // With a_k = (-1)^(e-1-k) f_{e-k}(u), each eigenvalue u_i satisfies
    // u^e = sum a_k u^k; equivalently prod (u_i - u_j) over j expands to zero.
    for (unsigned e = 2; e <= 4; ++e) {
        std::vector<std::string> names;
        std::vector<bool> inv;
        for (unsigned j = 0; j < e; ++j) {
            names.push_back("u" + std::to_string(j));
            inv.push_back(true);
        }
        VarSpec spec(names, inv);
        auto a = coefficients_from_eigenvalues(spec, names);
        for (unsigned i = 0; i < e; ++i) {
            LaurentPoly ui = LaurentPoly::variable(spec, names[i]);
            LaurentPoly lhs = ui.pow(e);
            for (unsigned k = 0; k < e; ++k) lhs -= a[k] * ui.pow(k);
            REQUIRE(lhs.is_zero());
        }
        REQUIRE(a[0].is_unit());
    }
}

TEST_CASE("hashes agree on equal polynomials") {
    VarSpec spec = test_ring();
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly p = random_poly(spec, rng);
        LaurentPoly q = random_poly(spec, rng);
        REQUIRE((p + q).hash() == (q + p).hash());
    }
}
