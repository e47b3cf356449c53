#include "doctest.h"
#include "support.hpp"

#include "skewlie/bilinear_form.hpp"

#include <algorithm>

using namespace skewlie;
using namespace testing_support;

namespace {

template <ExactScalar K>
struct Planted {
    std::vector<Index> odd, even;
    Mat<K> ndeg;
    Mat<K> gram;
};

// Random direct sum of J blocks and non-degenerate canonical blocks,
// scrambled by a random congruence.
template <ExactScalar K>
Planted<K> plant(Rng& rng, int max_blocks, Index max_size) {
    Planted<K> p;
    p.ndeg = Mat<K>(0, 0);
    Mat<K> c(0, 0);
    const int count = static_cast<int>(rng.range(1, max_blocks));
    for (int i = 0; i < count; ++i) {
        const long kind = rng.range(0, 5);
        const Index n = rng.range(1, max_size);
        if (kind <= 1) {
            (n % 2 == 1 ? p.odd : p.even).push_back(n);
        } else if (kind == 2) {
            p.ndeg = direct_sum(p.ndeg, gram_Gamma<K>(n));
        } else if (kind == 3) {
            long lambda = rng.range(-3, 3);
            if (lambda == 0) lambda = 2;
            const K lam(lambda);
            if (lam.is_zero() || lam == K(n % 2 == 1 ? 1 : -1)) continue;
            p.ndeg = direct_sum(p.ndeg, gram_A<K>(n, lam));
        } else if (kind == 4) {
            p.ndeg = direct_sum(p.ndeg, identity<K>(n));
        } else {
            p.ndeg = direct_sum(p.ndeg, gram_standard_skew<K>(std::max<Index>(1, n / 2)));
        }
    }
    std::sort(p.odd.rbegin(), p.odd.rend());
    std::sort(p.even.rbegin(), p.even.rend());
    for (Index s : p.odd) c = direct_sum(c, gram_J<K>(s));
    for (Index s : p.even) c = direct_sum(c, gram_J<K>(s));
    c = direct_sum(c, p.ndeg);
    if (c.rows() == 0) {
        c = identity<K>(1);
        p.ndeg = identity<K>(1);
    }
    const Mat<K> q = random_invertible<K>(rng, c.rows(), 2);
    p.gram = congruence(c, q);
    return p;
}

}  // namespace

TEST_CASE("radicals") {
    const auto r = radicals(BilinearForm<Rational>(gram_J<Rational>(3)));
    CHECK(r.left.size() == 1);
    CHECK(r.right.size() == 1);
    CHECK(r.radical.empty());
    const auto z = radicals(BilinearForm<Rational>(zeros<Rational>(3, 3)));
    CHECK(z.left.size() == 3);
    CHECK(z.right.size() == 3);
    CHECK(z.radical.size() == 3);
    const auto i = radicals(BilinearForm<Rational>(identity<Rational>(2)));
    CHECK(i.left.empty());
    CHECK(i.radical.empty());
    // right radical is ker S, left radical is ker S'
    const Mat<Rational> s = from_ints<Rational>({{1, 1}, {0, 0}});
    const auto rr = radicals(BilinearForm<Rational>(s));
    REQUIRE(rr.right.size() == 1);
    CHECK(is_zero_matrix(Vec<Rational>(s * rr.right[0])));
    REQUIRE(rr.left.size() == 1);
    CHECK(is_zero_matrix(Vec<Rational>(s.transpose() * rr.left[0])));
}

TEST_CASE("asymmetry examples") {
    CHECK(asymmetry(BilinearForm<Rational>(identity<Rational>(3))) == identity<Rational>(3));
    CHECK(asymmetry(BilinearForm<Rational>(gram_standard_skew<Rational>(1))) == Mat<Rational>(-identity<Rational>(2)));
    CHECK(gram_Gamma<Rational>(2) == from_ints<Rational>({{0, -1}, {1, 1}}));
    CHECK(asymmetry(BilinearForm<Rational>(gram_Gamma<Rational>(2))) == from_ints<Rational>({{-1, 2}, {0, -1}}));
    CHECK_THROWS_AS(asymmetry(BilinearForm<Rational>(gram_J<Rational>(2))), std::invalid_argument);
}

TEST_CASE("canonical Gram matrices") {
    CHECK(gram_Gamma<Rational>(1) == from_ints<Rational>({{1}}));
    CHECK(gram_Gamma<Rational>(3) == from_ints<Rational>({{0, 0, 1}, {0, -1, -1}, {1, 1, 0}}));
    CHECK(gram_Gamma<Rational>(4) == from_ints<Rational>({{0, 0, 0, -1}, {0, 0, 1, 1}, {0, -1, -1, 0}, {1, 1, 0, 0}}));
    CHECK(gram_A<Rational>(1, Rational(5)) == from_ints<Rational>({{0, 1}, {5, 0}}));
    CHECK(gram_J<Rational>(3) == from_ints<Rational>({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
    CHECK_THROWS_AS(gram_A<Rational>(1, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(gram_A<Rational>(2, Rational(-1)), std::invalid_argument);
    CHECK_NOTHROW(gram_A<Rational>(2, Rational(1)));
    std::vector<CanonicalBlock<Rational>> blocks{{CanonicalBlock<Rational>::Kind::identity, 1, {}},
                                                  {CanonicalBlock<Rational>::Kind::standard_skew, 1, {}}};
    CHECK(make_canonical(blocks).rows() == 3);
}

TEST_CASE("asymmetry elementary divisors of canonical blocks") {
    for (Index n = 1; n <= 6; ++n) {
        const auto s = operator_structure(asymmetry(BilinearForm<Rational>(gram_Gamma<Rational>(n))));
        REQUIRE(s.elementary_divisors.size() == 1);
        const Rational eps = n % 2 == 1 ? Rational(1) : Rational(-1);
        CHECK(s.elementary_divisors[0].base == Poly<Rational>::linear(eps));
        CHECK(s.elementary_divisors[0].multiplicity == n);
    }
    for (Index n = 1; n <= 4; ++n)
        for (long l : {2L, -3L, 1L, -1L}) {
            const Rational lam(l);
            if (lam == Rational(n % 2 == 1 ? 1 : -1)) continue;
            const auto s = operator_structure(asymmetry(BilinearForm<Rational>(gram_A<Rational>(n, lam))));
            std::vector<std::pair<Poly<Rational>, int>> got;
            for (const auto& e : s.elementary_divisors) got.emplace_back(e.base, e.multiplicity);
            std::vector<std::pair<Poly<Rational>, int>> want{{Poly<Rational>::linear(lam), static_cast<int>(n)},
                                                             {Poly<Rational>::linear(Rational(1) / lam), static_cast<int>(n)}};
            auto cmp = [](const auto& a, const auto& b) { return poly_order(a.first, b.first) < 0; };
            std::sort(want.begin(), want.end(), cmp);
            CHECK(got == want);
        }
}

TEST_CASE("parts") {
    const auto p = parts(BilinearForm<Rational>(identity<Rational>(2)));
    CHECK(is_zero_matrix(p.minus));
    CHECK(rank(parts(BilinearForm<Rational>(gram_A<Rational>(2, Rational(1)))).plus) == 4);
    CHECK(is_zero_matrix(parts(BilinearForm<Rational>(gram_standard_skew<Rational>(1))).plus));
}

TEST_CASE("mixed operators") {
    const auto s = sigma_pm(BilinearForm<Rational>(gram_A<Rational>(2, Rational(1))));
    const auto st = operator_structure(s);
    REQUIRE(st.elementary_divisors.size() == 2);
    for (const auto& e : st.elementary_divisors) {
        CHECK(e.base == Poly<Rational>::x());
        CHECK(e.multiplicity == 2);
    }
    // A_n(-1): -1 is an eigenvalue of the asymmetry, so f+ is degenerate
    CHECK_THROWS_AS(sigma_pm(BilinearForm<Rational>(gram_A<Rational>(3, Rational(-1)))), PreconditionViolation);
    CHECK(is_zero_matrix(sigma_pm(BilinearForm<Rational>(identity<Rational>(3)))));

    const auto m3 = operator_structure(sigma_mp(BilinearForm<Rational>(gram_A<Rational>(3, Rational(-1)))));
    REQUIRE(m3.elementary_divisors.size() == 2);
    for (const auto& e : m3.elementary_divisors) {
        CHECK(e.base == Poly<Rational>::x());
        CHECK(e.multiplicity == 3);
    }

    // sigma^{+-} lies in L(f^+): X' S+ + S+ X = 0
    const BilinearForm<Rational> f(gram_A<Rational>(2, Rational(1)));
    const Mat<Rational> sp = parts(f).plus;
    CHECK(is_zero_matrix(Mat<Rational>(mul(Mat<Rational>(s.transpose()), sp) + mul(sp, s))));

    try {
        sigma_pm(BilinearForm<Rational>(gram_standard_skew<Rational>(1)));
        CHECK(false);
    } catch (const PreconditionViolation& e) {
        CHECK(e.criterion() == "p_sigma(-1) != 0");
    }
    try {
        sigma_mp(BilinearForm<Rational>(identity<Rational>(2)));
        CHECK(false);
    } catch (const PreconditionViolation& e) {
        CHECK(e.criterion() == "p_sigma(1) != 0");
    }
    CHECK_THROWS_AS(sigma_pm(BilinearForm<Rational>(gram_J<Rational>(2))), PreconditionViolation);
}

TEST_CASE("degenerate structure examples") {
    const auto j3 = degenerate_structure(BilinearForm<Rational>(gram_J<Rational>(3)));
    CHECK(j3.odd_blocks == std::vector<Index>{3});
    CHECK(j3.even_blocks.empty());
    CHECK(j3.ndeg_gram.rows() == 0);

    Rng rng(100);
    const Mat<Rational> c = direct_sum(direct_sum(gram_J<Rational>(2), gram_J<Rational>(1)), identity<Rational>(1));
    const Mat<Rational> g = congruence(c, random_invertible<Rational>(rng, 4, 2));
    const auto d = degenerate_structure(BilinearForm<Rational>(g));
    CHECK(d.odd_blocks == std::vector<Index>{1});
    CHECK(d.even_blocks == std::vector<Index>{2});
    REQUIRE(d.ndeg_gram.rows() == 1);
    CHECK_FALSE(d.ndeg_gram(0, 0).is_zero());
    CHECK(congruence(d.canonical(), d.witness) == g);

    const Mat<Rational> inv = from_ints<Rational>({{1, 2}, {3, 4}});
    const auto e = degenerate_structure(BilinearForm<Rational>(inv));
    CHECK(e.odd_blocks.empty());
    CHECK(e.even_blocks.empty());
    CHECK(e.ndeg_gram == inv);

    const auto z = degenerate_structure(BilinearForm<Rational>(zeros<Rational>(3, 3)));
    CHECK(z.odd_blocks == std::vector<Index>{1, 1, 1});
}

TEST_CASE("planted recovery over Q") {
    Rng rng(2718);
    for (int t = 0; t < 60; ++t) {
        const auto p = plant<Rational>(rng, 4, 4);
        const auto d = degenerate_structure(BilinearForm<Rational>(p.gram));
        CHECK(d.odd_blocks == p.odd);
        CHECK(d.even_blocks == p.even);
        REQUIRE(d.ndeg_gram.rows() == p.ndeg.rows());
        CHECK(congruence(d.canonical(), d.witness) == p.gram);
        if (p.ndeg.rows() > 0) {
            CHECK(is_invertible(d.ndeg_gram));
            CHECK(invariant_factors(asymmetry(BilinearForm<Rational>(d.ndeg_gram))) ==
                  invariant_factors(asymmetry(BilinearForm<Rational>(p.ndeg))));
        }
    }
}

TEST_CASE("planted recovery over GF(p)") {
    for (std::uint32_t prime : {3u, 7u, 101u}) {
        FpScope scope(prime);
        Rng rng(prime);
        for (int t = 0; t < 30; ++t) {
            const auto p = plant<Fp>(rng, 4, 4);
            const auto d = degenerate_structure(BilinearForm<Fp>(p.gram));
            CHECK(d.odd_blocks == p.odd);
            CHECK(d.even_blocks == p.even);
            CHECK(congruence(d.canonical(), d.witness) == p.gram);
            if (p.ndeg.rows() > 0)
                CHECK(invariant_factors(asymmetry(BilinearForm<Fp>(d.ndeg_gram))) ==
                      invariant_factors(asymmetry(BilinearForm<Fp>(p.ndeg))));
        }
    }
}

TEST_CASE("asymmetry laws on random non-degenerate forms") {
    Rng rng(31);
    auto run = [&]<ExactScalar K>() {
        for (int t = 0; t < 25; ++t) {
            const Index n = rng.range(1, 6);
            const Mat<K> s = random_invertible<K>(rng, n, 3);
            const BilinearForm<K> f(s);
            const Mat<K> sigma = asymmetry(f);
            CHECK(congruence(s, sigma) == s);
            CHECK(invariant_factors(sigma) == invariant_factors(inverse(sigma)));
            const Poly<K> ps = characteristic_polynomial(sigma);
            CHECK(associates(adjoint(ps), ps));
        }
    };
    run.template operator()<Rational>();
    FpScope scope(101);
    run.template operator()<Fp>();
}

TEST_CASE("primary orthogonal decomposition") {
    const auto a = primary_orthogonal_decomposition(BilinearForm<Rational>(gram_A<Rational>(1, Rational(2))));
    REQUIRE(a.size() == 1);
    CHECK(a[0].is_pair());
    CHECK(a[0].label[0] == Poly<Rational>::linear(Rational(2)));
    CHECK(a[0].label[1] == Poly<Rational>::linear(Rational(1) / Rational(2)));
    CHECK(a[0].basis.size() == 2);

    const auto b = primary_orthogonal_decomposition(
        BilinearForm<Rational>(direct_sum(identity<Rational>(1), gram_standard_skew<Rational>(1))));
    REQUIRE(b.size() == 2);
    CHECK(b[0].label[0] == Poly<Rational>::linear(Rational(1)));
    CHECK(b[0].basis.size() == 1);
    CHECK(b[1].label[0] == Poly<Rational>::linear(Rational(-1)));
    CHECK(b[1].basis.size() == 2);

    const auto c = primary_orthogonal_decomposition(BilinearForm<Rational>(from_ints<Rational>({{2, 1}, {1, 3}})));
    REQUIRE(c.size() == 1);
    CHECK(c[0].label[0] == Poly<Rational>::linear(Rational(1)));

    Rng rng(55);
    for (int t = 0; t < 25; ++t) {
        const Index n = rng.range(1, 6);
        const BilinearForm<Rational> f(random_invertible<Rational>(rng, n, 3));
        const auto pieces = primary_orthogonal_decomposition(f);
        Index total = 0;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            total += static_cast<Index>(pieces[i].basis.size());
            CHECK(is_invertible(pieces[i].restricted_gram));
            for (std::size_t j = 0; j < pieces.size(); ++j) {
                if (i == j) continue;
                const Mat<Rational> bi = columns(pieces[i].basis, n), bj = columns(pieces[j].basis, n);
                CHECK(is_zero_matrix(Mat<Rational>(mul(Mat<Rational>(bi.transpose()), mul(f.gram(), bj)))));
            }
        }
        CHECK(total == n);
    }
}
