#include "doctest.h"
#include "support.hpp"

#include "skewlie/factor.hpp"

#include <set>

using namespace skewlie;
using namespace testing_support;

namespace {

// Oracle: a polynomial over GF(p) of degree n is irreducible iff no monic
// polynomial of degree 1..n/2 divides it (exhaustive enumeration).
bool brute_irreducible(const Poly<Fp>& f) {
    const int n = f.degree();
    const std::uint32_t p = Fp::modulus();
    for (int d = 1; 2 * d <= n; ++d) {
        std::vector<std::uint32_t> digits(d, 0);
        while (true) {
            std::vector<Fp> c;
            for (auto v : digits) c.push_back(Fp::from_residue(v));
            c.push_back(Fp(1));
            if ((f % Poly<Fp>(c)).is_zero()) return false;
            int pos = 0;
            while (pos < d && ++digits[pos] == p) digits[pos++] = 0;
            if (pos == d) break;
        }
    }
    return n >= 1;
}

}  // namespace

TEST_CASE("field descriptors") {
    CHECK(FieldDescriptor::rationals().characteristic() == 0);
    CHECK(FieldDescriptor::prime_field(101).characteristic() == 101);
    CHECK_THROWS_AS(FieldDescriptor::prime_field(91), std::invalid_argument);
    CHECK(FieldDescriptor::prime_field(7).name() == "GF(7)");
}

TEST_CASE("rational parsing and canonical encoding") {
    CHECK(to_string(parse_scalar<Rational>("6/4")) == "3/2");
    CHECK(to_string(parse_scalar<Rational>("-6/4")) == "-3/2");
    CHECK(to_string(parse_scalar<Rational>(" 12 ")) == "12");
    CHECK(parse_scalar<Rational>("0/5").is_zero());
    CHECK_THROWS_AS(parse_scalar<Rational>("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar<Rational>("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar<Rational>("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scalar<Rational>("1.5"), std::invalid_argument);
    const Rational big = parse_scalar<Rational>("123456789012345678901234567890/7");
    CHECK(to_string(big * Rational(7)) == "123456789012345678901234567890");
}

TEST_CASE("residue arithmetic") {
    FpScope scope(7);
    CHECK(Fp(-1).residue() == 6);
    CHECK((Fp(3) * Fp(5)).residue() == 1);
    CHECK((Fp(1) / Fp(3)).residue() == 5);
    CHECK(parse_scalar<Fp>("1/2").residue() == 4);
    CHECK(parse_scalar<Fp>("-8").residue() == 6);
    CHECK_THROWS_AS(parse_scalar<Fp>("1/7"), std::invalid_argument);
    CHECK_THROWS_AS(Fp(0).inverse(), std::domain_error);
    {
        FpScope inner(5);
        CHECK(Fp::modulus() == 5);
    }
    CHECK(Fp::modulus() == 7);
}

TEST_CASE("square test") {
    CHECK(is_square(Rational(9, 4)));
    CHECK(is_square(Rational(0)));
    CHECK_FALSE(is_square(Rational(-4)));
    CHECK_FALSE(is_square(Rational(2)));
    CHECK_FALSE(is_square(Rational(mpz_class(1), mpz_class(2))));
    FpScope scope(7);
    std::set<std::uint32_t> squares;
    for (std::uint32_t a = 0; a < 7; ++a) squares.insert((a * a) % 7);
    for (std::uint32_t a = 0; a < 7; ++a) CHECK(is_square(Fp::from_residue(a)) == (squares.count(a) == 1));
}

TEST_CASE("polynomial adjoint") {
    using P = Poly<Rational>;
    CHECK(adjoint(poly_of<Rational>({2, 3, 1})) == poly_of<Rational>({1, 3, 2}));
    CHECK(adjoint(P::monomial(Rational(1), 5)) == P::constant(Rational(1)));
    const P a = poly_of<Rational>({1, 1}), b = poly_of<Rational>({2, 1});
    CHECK(adjoint(a * b) == adjoint(a) * adjoint(b));
    CHECK(adjoint(a * b) == poly_of<Rational>({1, 3, 2}));
    CHECK_THROWS_AS(adjoint(P{}), std::invalid_argument);
    // degree drops exactly when p(0) = 0
    CHECK(adjoint(poly_of<Rational>({0, 1, 1})).degree() == 1);
}

TEST_CASE("adjoint is an involution when p(0) != 0") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        Poly<Rational> p = random_poly<Rational>(rng, static_cast<int>(rng.range(0, 8)), 9);
        if (p.coeff(0).is_zero()) continue;
        CHECK(adjoint(adjoint(p)) == p);
    }
}

TEST_CASE("polynomial gcd") {
    CHECK(gcd(poly_of<Rational>({-1, 0, 1}), poly_of<Rational>({-1, 1})) == poly_of<Rational>({-1, 1}));
    CHECK(gcd(poly_of<Rational>({0, 0, 0, 1}), poly_of<Rational>({1, 0, 1})) == poly_of<Rational>({1}));
    const auto p = poly_of<Rational>({4, 0, 2});
    CHECK(gcd(p, p) == monic(p));
    CHECK_THROWS_AS(gcd(Poly<Rational>{}, Poly<Rational>{}), std::invalid_argument);
    CHECK(to_string(poly_of<Rational>({2, -3, 1})) == "X^2 - 3*X + 2");
}

TEST_CASE("gcd(p q, q) ~ q for irreducible q not dividing p over GF(p)") {
    FpScope scope(13);
    Rng rng(5);
    int checked = 0;
    for (int t = 0; t < 300 && checked < 60; ++t) {
        const auto q = random_poly<Fp>(rng, static_cast<int>(rng.range(1, 4)), 12, true);
        const auto p = random_poly<Fp>(rng, static_cast<int>(rng.range(0, 6)), 12);
        if (!is_irreducible(q) || (p % q).is_zero()) continue;
        CHECK(associates(gcd(p * q, q), q));
        ++checked;
    }
    CHECK(checked == 60);
}

TEST_CASE("factor examples") {
    const auto f1 = factor(poly_of<Rational>({-1, 0, 1}));
    REQUIRE(f1.size() == 2);
    CHECK(f1[0].base == poly_of<Rational>({-1, 1}));
    CHECK(f1[1].base == poly_of<Rational>({1, 1}));
    CHECK(f1[0].multiplicity == 1);

    const auto f3 = factor(pow(poly_of<Rational>({-1, 1}), 3));
    REQUIRE(f3.size() == 1);
    CHECK(f3[0].multiplicity == 3);

    CHECK_THROWS_AS(factor(poly_of<Rational>({5})), std::invalid_argument);

    FpScope scope(5);
    // roots of X^2 + 1 mod 5 by exhaustive search
    std::vector<Poly<Fp>> expected;
    for (long r = 0; r < 5; ++r)
        if ((Fp(r) * Fp(r) + Fp(1)).is_zero()) expected.push_back(Poly<Fp>::linear(Fp(r)));
    REQUIRE(expected.size() == 2);
    const auto f2 = factor(poly_of<Fp>({1, 0, 1}));
    REQUIRE(f2.size() == 2);
    std::set<std::string> got{to_string(f2[0].base), to_string(f2[1].base)};
    std::set<std::string> want{to_string(expected[0]), to_string(expected[1])};
    CHECK(got == want);
    CHECK(poly_order(f2[0].base, f2[1].base) < 0);
}

TEST_CASE("factorization over Q: frozen cases") {
    // X^4 + 4 = (X^2 - 2X + 2)(X^2 + 2X + 2)
    auto f = factor(poly_of<Rational>({4, 0, 0, 0, 1}));
    REQUIRE(f.size() == 2);
    CHECK(f[0].base == poly_of<Rational>({2, -2, 1}));
    CHECK(f[1].base == poly_of<Rational>({2, 2, 1}));
    // X^4 + 1 is irreducible over Q but splits modulo every prime
    CHECK(is_irreducible(poly_of<Rational>({1, 0, 0, 0, 1})));
    // X^6 - 1 = (X-1)(X+1)(X^2-X+1)(X^2+X+1)
    f = factor(poly_of<Rational>({-1, 0, 0, 0, 0, 0, 1}));
    REQUIRE(f.size() == 4);
    CHECK(f[2].base == poly_of<Rational>({1, -1, 1}));
    CHECK(f[3].base == poly_of<Rational>({1, 1, 1}));
    // non-monic input, rational root 2/3
    f = factor(poly_of<Rational>({-2, 3}) * poly_of<Rational>({1, 0, 1}));
    REQUIRE(f.size() == 2);
    CHECK(f[0].base == Poly<Rational>::linear(Rational(2) / Rational(3)));
    // Swinnerton-Dyer polynomial for sqrt2, sqrt3: X^4 - 10X^2 + 1
    CHECK(is_irreducible(poly_of<Rational>({1, 0, -10, 0, 1})));
}

TEST_CASE("degree bound on Q factorization") {
    // Cyclotomic Phi_17 has degree 16 and no rational roots.
    std::vector<Rational> c(17, Rational(1));
    CHECK(is_irreducible(Poly<Rational>(c)));
    // Phi_19 has degree 18.
    std::vector<Rational> d(19, Rational(1));
    CHECK_THROWS_AS(factor(Poly<Rational>(d)), Unfactored);
}

TEST_CASE("factorization re-multiplies and factors are irreducible (GF(p))") {
    Rng rng(2024);
    for (std::uint32_t p : {2u, 3u, 5u, 101u, 1009u, 65537u}) {
        FpScope scope(p);
        for (int t = 0; t < 25; ++t) {
            Poly<Fp> f = Poly<Fp>::constant(Fp(1));
            const int parts = static_cast<int>(rng.range(1, 4));
            for (int i = 0; i < parts; ++i)
                f *= pow(random_poly<Fp>(rng, static_cast<int>(rng.range(1, 4)), 1000, true),
                         static_cast<unsigned>(rng.range(1, 3)));
            const auto fs = factor(f);
            CHECK(expand(fs) == monic(f));
            for (std::size_t i = 0; i < fs.size(); ++i) {
                CHECK(fs[i].base.is_monic());
                if (fs[i].base.degree() <= 3 || p <= 5) CHECK(brute_irreducible(fs[i].base));
                CHECK(is_irreducible(fs[i].base));
                if (i > 0) CHECK(poly_order(fs[i - 1].base, fs[i].base) < 0);
            }
        }
    }
}

TEST_CASE("p-th power handling over GF(p)") {
    FpScope scope(3);
    const auto f = pow(poly_of<Fp>({1, 1}), 7) * pow(poly_of<Fp>({1, 0, 1}), 3);
    const auto fs = factor(f);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].base == poly_of<Fp>({1, 1}));
    CHECK(fs[0].multiplicity == 7);
    CHECK(fs[1].multiplicity == 3);
}

TEST_CASE("factorization re-multiplies over Q") {
    Rng rng(77);
    for (int t = 0; t < 60; ++t) {
        Poly<Rational> f = Poly<Rational>::constant(Rational(static_cast<long>(rng.range(1, 5))));
        const int parts = static_cast<int>(rng.range(1, 4));
        for (int i = 0; i < parts; ++i)
            f *= pow(random_poly<Rational>(rng, static_cast<int>(rng.range(1, 4)), 6),
                     static_cast<unsigned>(rng.range(1, 2)));
        const auto fs = factor(f);
        CHECK(expand(fs) == monic(f));
        for (const auto& g : fs) {
            // a factor of degree <= 3 is irreducible iff it has no rational root
            if (g.base.degree() >= 2 && g.base.degree() <= 3) {
                for (long a = -40; a <= 40; ++a)
                    for (long b = 1; b <= 12; ++b) CHECK_FALSE(g.base(Rational(a) / Rational(b)).is_zero());
            }
        }
    }
}

TEST_CASE("factorization agrees with reduction mod p degrees") {
    // Product of two irreducible quartics; Zassenhaus must recombine.
    const auto a = poly_of<Rational>({1, 0, -10, 0, 1});
    const auto b = poly_of<Rational>({1, 0, 0, 0, 1});
    const auto fs = factor(a * b * poly_of<Rational>({3, 1}));
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].base == poly_of<Rational>({3, 1}));
    CHECK(fs[1].base == a);
    CHECK(fs[2].base == b);
}
