#include "doctest.h"
#include "support.hpp"

#include "skewlie/lie_algebra.hpp"
#include "skewlie/lie_structure.hpp"
#include "skewlie/lie_witness.hpp"

#include <cmath>

using namespace skewlie;
using namespace testing_support;

namespace {

// Brute-force count of X over GF(3) with X'S + SX = 0, for n <= 3.
long count_skew_adjoint_gf3(const Mat<Fp>& s) {
    const Index n = s.rows();
    const long total = static_cast<long>(std::pow(3.0, static_cast<double>(n * n)));
    long count = 0;
    for (long code = 0; code < total; ++code) {
        Mat<Fp> x(n, n);
        long c = code;
        for (Index k = 0; k < n * n; ++k, c /= 3) x(k / n, k % n) = Fp(c % 3);
        if (is_zero_matrix(Mat<Fp>(x.transpose() * s + s * x))) ++count;
    }
    return count;
}

template <ExactScalar K>
K trace(const Mat<K>& m) {
    K t(0);
    for (Index i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

}  // namespace

TEST_CASE("skew-adjoint algebra dimensions on canonical blocks") {
    CHECK(skew_adjoint_algebra(BilinearForm<Rational>(zeros<Rational>(3, 3))).dim() == 9);
    const auto g4 = skew_adjoint_algebra(BilinearForm<Rational>(gram_Gamma<Rational>(4)));
    CHECK(g4.dim() == 2);
    CHECK(is_abelian(g4));
    CHECK(skew_adjoint_algebra(BilinearForm<Rational>(gram_A<Rational>(4, Rational(1)))).dim() == 8);
    const auto j5 = skew_adjoint_algebra(BilinearForm<Rational>(gram_J<Rational>(5)));
    CHECK(j5.dim() == 3);
    CHECK(is_solvable(j5));
    CHECK(derived_subalgebra(j5).dim() >= 1);
}

TEST_CASE("dimension agrees with brute-force enumeration over GF(3)") {
    FpScope scope(3);
    Rng rng(41);
    for (int trial = 0; trial < 12; ++trial) {
        const Index n = rng.range(1, 3);
        const Mat<Fp> s = random_matrix<Fp>(rng, n, n, 2);
        const auto l = skew_adjoint_algebra(BilinearForm<Fp>(s));
        long expected = 1;
        for (Index k = 0; k < l.dim(); ++k) expected *= 3;
        CHECK(count_skew_adjoint_gf3(s) == expected);
        for (const auto& b : l.basis()) CHECK(is_zero_matrix(Mat<Fp>(b.transpose() * s + s * b)));
    }
}

TEST_CASE("reference algebras") {
    CHECK(gl<Rational>(3).dim() == 9);
    CHECK(sl<Rational>(3).dim() == 8);
    CHECK(so<Rational>(4).dim() == 6);
    CHECK(sp<Rational>(2).dim() == 10);

    const auto g = gl<Rational>(2);
    CHECK(center(g).dim() == 1);
    CHECK(derived_subalgebra(g).dim() == 3);
    CHECK(derived_series(g) == std::vector<Index>{4, 3, 3});
    CHECK(lower_central_series(g) == std::vector<Index>{4, 3, 3});
    CHECK_FALSE(is_solvable(g));

    const auto ab = skew_adjoint_algebra(BilinearForm<Rational>(gram_Gamma<Rational>(6)));
    CHECK(derived_series(ab) == std::vector<Index>{3, 0});
    CHECK(is_perfect(sl<Rational>(2)));
}

TEST_CASE("Killing form matches the trace formula on gl(n) and sl(n)") {
    for (Index n : {2, 3}) {
        for (const auto& l : {gl<Rational>(n), sl<Rational>(n)}) {
            const Mat<Rational> kf = killing_form(l);
            for (Index i = 0; i < l.dim(); ++i)
                for (Index j = 0; j < l.dim(); ++j) {
                    const Rational expected = Rational(2 * n) * trace(Mat<Rational>(l.basis(i) * l.basis(j))) -
                                              Rational(2) * trace(l.basis(i)) * trace(l.basis(j));
                    CHECK(kf(i, j) == expected);
                }
        }
    }
    CHECK(rank(killing_form(sl<Rational>(2))) == 3);
    const auto so2 = skew_adjoint_algebra(BilinearForm<Rational>(identity<Rational>(2)));
    CHECK(so2.dim() == 1);
    CHECK(is_zero_matrix(killing_form(so2)));
}

TEST_CASE("Killing form is invariant") {
    const auto l = skew_adjoint_algebra(BilinearForm<Rational>(gram_A<Rational>(3, Rational(-1))));
    const Mat<Rational> kf = killing_form(l);
    const Index d = l.dim();
    auto e = [d](Index i) {
        Vec<Rational> v = Vec<Rational>::Constant(d, Rational(0));
        v(i) = Rational(1);
        return v;
    };
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j)
            for (Index k = 0; k < d; ++k) {
                const Vec<Rational> ij = l.bracket(e(i), e(j));
                const Vec<Rational> jk = l.bracket(e(j), e(k));
                CHECK((ij.transpose() * kf * e(k))(0, 0) == (e(i).transpose() * kf * jk)(0, 0));
            }
}

TEST_CASE("structure constants reproduce commutators and satisfy the axioms") {
    const auto l = skew_adjoint_algebra(BilinearForm<Rational>(gram_J<Rational>(4)));
    CHECK_FALSE(l.check_realization().has_value());
    CHECK_FALSE(l.check_axioms().has_value());
}

TEST_CASE("tampered structure constants fail the Jacobi check") {
    const auto g = gl<Rational>(2);
    const auto bad = g.with_tampered_constant(1, 2, 1, Rational(1));
    const auto msg = bad.check_axioms();
    REQUIRE(msg.has_value());
    CHECK(msg->find("Jacobi") != std::string::npos);
    CHECK(bad.check_realization().has_value());
}

TEST_CASE("centralizer inside an algebra") {
    const auto g = gl<Rational>(3);
    CHECK(centralizer_in_algebra(g, identity<Rational>(3)).dim() == 9);
    CHECK(centralizer_in_algebra(g, zeros<Rational>(3, 3)).dim() == 9);
    CHECK(centralizer_in_algebra(g, lower_jordan<Rational>(3, Rational(0))).dim() == 3);
}

TEST_CASE("skew-adjoint algebra equals the centralizer of the mixed asymmetry") {
    const BilinearForm<Rational> f(gram_A<Rational>(3, Rational(-1)));
    const auto l = skew_adjoint_algebra(f);
    const auto lminus = skew_adjoint_algebra(BilinearForm<Rational>(parts(f).minus));
    const auto c = centralizer_in_algebra(lminus, sigma_mp(f));
    CHECK(ambient_span(c) == ambient_span(l));
    CHECK(l.dim() == 7);
}

namespace {

template <ExactScalar K>
LieAlgebra<K> block_sum(const LieAlgebra<K>& a, const LieAlgebra<K>& b) {
    std::vector<Mat<K>> mats;
    for (const auto& x : a.basis()) mats.push_back(direct_sum(x, zeros<K>(b.ambient(), b.ambient())));
    for (const auto& y : b.basis()) mats.push_back(direct_sum(zeros<K>(a.ambient(), a.ambient()), y));
    return LieAlgebra<K>::span_of(mats, a.ambient() + b.ambient());
}

Mat<Rational> diag(std::initializer_list<long> d) {
    Mat<Rational> m = zeros<Rational>(static_cast<Index>(d.size()), static_cast<Index>(d.size()));
    Index i = 0;
    for (long x : d) m(i, i) = Rational(x), ++i;
    return m;
}

}  // namespace

TEST_CASE("radical in characteristic zero") {
    CHECK(radical_char0(gl<Rational>(3)).dim() == 1);
    CHECK(radical_char0(gl<Rational>(3)) == center(gl<Rational>(3)));
    const Mat<Rational> g = direct_sum(identity<Rational>(3), gram_standard_skew<Rational>(1));
    CHECK(radical_char0(skew_adjoint_algebra(BilinearForm<Rational>(g))).dim() == 0);
    const auto ab = skew_adjoint_algebra(BilinearForm<Rational>(gram_Gamma<Rational>(5)));
    CHECK(radical_char0(ab).dim() == ab.dim());
    {
        FpScope scope(5);
        CHECK_THROWS_AS(radical_char0(gl<Fp>(2)), UnsupportedCharacteristic);
    }
}

TEST_CASE("reductive verdicts on paired blocks") {
    CHECK(is_reductive(skew_adjoint_algebra(BilinearForm<Rational>(gram_A<Rational>(2, Rational(1))))) == Verdict::yes);
    CHECK(is_reductive(skew_adjoint_algebra(BilinearForm<Rational>(gram_A<Rational>(4, Rational(1))))) == Verdict::no);
    CHECK(is_simple(skew_adjoint_algebra(BilinearForm<Rational>(gram_standard_skew<Rational>(2)))) == Verdict::yes);
    CHECK(is_semisimple(gl<Rational>(2)) == Verdict::no);
    CHECK(is_reductive(gl<Rational>(2)) == Verdict::yes);
}

TEST_CASE("centroid dimensions") {
    CHECK(centroid_dimension(sl<Rational>(2)) == 1);
    CHECK(centroid_dimension(block_sum(sl<Rational>(2), sl<Rational>(2))) == 2);
    const auto ab = skew_adjoint_algebra(BilinearForm<Rational>(gram_Gamma<Rational>(6)));
    CHECK(centroid_dimension(ab) == 9);
}

TEST_CASE("so(4) is simple over Q exactly when the discriminant is not a square") {
    const auto split = skew_adjoint_algebra(BilinearForm<Rational>(identity<Rational>(4)));
    CHECK(centroid_dimension(split) == 2);
    CHECK(is_simple(split) == Verdict::no);
    const auto twisted = skew_adjoint_algebra(BilinearForm<Rational>(diag({1, 1, 1, 2})));
    CHECK(centroid_dimension(twisted) == 2);
    CHECK(is_simple(twisted) == Verdict::yes);
}

TEST_CASE("cyclic and direct centroid computations agree") {
    const std::vector<LieAlgebra<Rational>> algebras{
        sl<Rational>(2), sl<Rational>(3), so<Rational>(4), sp<Rational>(2),
        block_sum(sl<Rational>(2), sl<Rational>(2)),
        skew_adjoint_algebra(BilinearForm<Rational>(diag({1, 1, 1, 2}))),
        skew_adjoint_algebra(BilinearForm<Rational>(diag({1, 1, 3})))};
    for (const auto& l : algebras) {
        const auto ads = detail::ad_matrices(l);
        const auto direct = detail::centroid_direct(ads, l.dim());
        const auto cyclic = detail::centroid_cyclic(ads, l.dim());
        REQUIRE(cyclic.has_value());
        CHECK(cyclic->size() == direct.size());
        std::vector<Vec<Rational>> a, b;
        for (const auto& m : direct) a.push_back(flatten(m));
        for (const auto& m : *cyclic) b.push_back(flatten(m));
        CHECK(RowSpace<Rational>::span(a, l.dim() * l.dim()) == RowSpace<Rational>::span(b, l.dim() * l.dim()));
    }
}

TEST_CASE("larger simple algebras go through the cyclic centroid") {
    CHECK(is_simple(so<Rational>(5)) == Verdict::yes);
    CHECK(is_simple(sp<Rational>(3)) == Verdict::yes);
    CHECK(is_simple(block_sum(so<Rational>(3), sp<Rational>(2))) == Verdict::no);
    CHECK(is_semisimple(block_sum(so<Rational>(3), sp<Rational>(2))) == Verdict::yes);
}

TEST_CASE("flag ideals witness non-reductivity in positive characteristic") {
    FpScope scope(7);
    const auto j5 = skew_adjoint_algebra(BilinearForm<Fp>(gram_J<Fp>(5)));
    CHECK(is_reductive(j5) == Verdict::no);

    const BilinearForm<Fp> f(gram_A<Fp>(4, Fp(1)));
    const auto l = skew_adjoint_algebra(f);
    const Mat<Fp> s = sigma_pm(f);
    const auto w = RowSpace<Fp>::span(kernel_basis(mul(s, s)), 8);
    const auto witness = find_noncentral_solvable_ideal(l, {w});
    REQUIRE(witness.has_value());
    CHECK_FALSE(center(l).contains(witness->ideal));
    CHECK(is_ideal(l, witness->ideal));
    CHECK(is_reductive(l, {w}) == Verdict::no);
    CHECK(is_reductive(skew_adjoint_algebra(BilinearForm<Fp>(gram_Gamma<Fp>(4)))) == Verdict::yes);
}

TEST_CASE("truncated current algebra") {
    const auto g1 = truncated_current_gl2<Rational>(1);
    CHECK(g1.dim() == 4);
    CHECK(fingerprint(g1) == fingerprint(gl<Rational>(2)));
    const auto g2 = truncated_current_gl2<Rational>(2);
    CHECK(g2.dim() == 8);
    // [L,L] = sl(2) (x) F[X]/(X^2); the center is the scalar directions.
    CHECK(derived_subalgebra(g2).dim() == 6);
    CHECK(center(g2).dim() == 2);
    for (Index m = 1; m <= 3; ++m) {
        const auto g = truncated_current_gl2<Rational>(m);
        const auto top = g.coordinates(current_element<Rational>(m, identity<Rational>(2), m - 1));
        REQUIRE(top.has_value());
        CHECK(center(g).contains(*top));
    }
}

TEST_CASE("current structure witnesses") {
    for (auto [n, sign] : std::vector<std::pair<Index, int>>{{2, 1}, {4, 1}, {6, 1}, {1, -1}, {3, -1}, {5, -1}}) {
        CAPTURE(n);
        CAPTURE(sign);
        const auto rep = verify_current_structure<Rational>(n, sign);
        for (const auto& f : rep.failures) MESSAGE(f);
        CHECK(rep.passed());
        CHECK(rep.relations);
        CHECK(rep.m_central);
        CHECK(rep.correspondence);
        CHECK(rep.dim == (sign == 1 ? 2 * n : 2 * n + 1));
        CHECK(rep.ideal_checked == (sign == 1 ? n > 2 : n > 1));
    }
    const auto two = skew_adjoint_algebra(BilinearForm<Rational>(gram_A<Rational>(2, Rational(1))));
    CHECK(fingerprint(two) == fingerprint(gl<Rational>(2)));
    CHECK_THROWS_AS(verify_current_structure<Rational>(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_current_structure<Rational>(2, -1), std::invalid_argument);
}

TEST_CASE("current structure witness over a prime field") {
    FpScope scope(11);
    CHECK(verify_current_structure<Fp>(4, 1).passed());
    CHECK(verify_current_structure<Fp>(3, -1).passed());
}

TEST_CASE("centralizer isomorphism examples") {
    const auto j = centralizer_isomorphism(lower_jordan<Rational>(3, Rational(0)));
    CHECK(j.passed());
    CHECK(j.target_dim == 3);
    // A = 0_2 makes T a reordering of J_2 (+) J_2, whose algebra is gl(2).
    const auto w = centralizer_isomorphism(zeros<Rational>(2, 2));
    CHECK(w.passed());
    CHECK(w.target_dim == 4);
    CHECK(degenerate_structure(BilinearForm<Rational>(w.target_gram)).even_blocks == std::vector<Index>{2, 2});
    CHECK(fingerprint(skew_adjoint_algebra(BilinearForm<Rational>(w.target_gram))) == fingerprint(gl<Rational>(2)));
    // Two nilpotent 2-blocks: centralizer dimension sum min(2,2) over four pairs.
    const Mat<Rational> jj = direct_sum(lower_jordan<Rational>(2, Rational(0)), lower_jordan<Rational>(2, Rational(0)));
    const auto w2 = centralizer_isomorphism(jj);
    CHECK(w2.passed());
    CHECK(w2.target_dim == 8);
    const auto d = centralizer_isomorphism(diag({2, 3}));
    CHECK(d.passed());
    CHECK(d.target_dim == 2);
    CHECK_THROWS_AS(centralizer_isomorphism(diag({2, 1})), PreconditionViolation);
    CHECK_THROWS_AS(centralizer_isomorphism(diag({2, 5, 1})), PreconditionViolation);
}

namespace {

template <ExactScalar K>
void check_asymmetry_laws_on_algebra(Rng& rng, int trials, Index max_n) {
    int done = 0;
    while (done < trials) {
        const Index n = rng.range(1, max_n);
        const Mat<K> s = random_matrix<K>(rng, n, n, 3);
        const BilinearForm<K> f(s);
        if (!f.is_nondegenerate()) continue;
        ++done;
        const auto l = skew_adjoint_algebra(f);
        const Mat<K> sigma = asymmetry(f);
        for (const auto& b : l.basis()) CHECK(mul(sigma, b) == mul(b, sigma));
        CHECK(l.contains(Mat<K>(sigma - inverse(sigma))));
        const FormParts<K> p = parts(f);
        if (is_invertible(p.minus)) {
            const auto c = centralizer_in_algebra(skew_adjoint_algebra(BilinearForm<K>(p.minus)), sigma_mp(f));
            CHECK(ambient_span(c) == ambient_span(l));
        }
        if (is_invertible(p.plus)) {
            const auto c = centralizer_in_algebra(skew_adjoint_algebra(BilinearForm<K>(p.plus)), sigma_pm(f));
            CHECK(ambient_span(c) == ambient_span(l));
        }
        Index total = 0;
        for (const auto& piece : primary_orthogonal_decomposition(f))
            total += skew_adjoint_algebra(BilinearForm<K>(piece.restricted_gram)).dim();
        CHECK(total == l.dim());
    }
}

}  // namespace

TEST_CASE("asymmetry commutes with the algebra and the mixed centralizers agree") {
    Rng rng(20261017);
    check_asymmetry_laws_on_algebra<Rational>(rng, 40, 5);
    FpScope scope(101);
    check_asymmetry_laws_on_algebra<Fp>(rng, 40, 5);
}

TEST_CASE("centralizer isomorphism on random matrices") {
    Rng rng(77);
    int done = 0;
    while (done < 25) {
        const Index r = rng.range(1, 4);
        const Mat<Rational> a = random_matrix<Rational>(rng, r, r, 3);
        const Poly<Rational> pa = characteristic_polynomial(a);
        if (gcd(pa, adjoint(pa)).degree() > 0) continue;
        ++done;
        const auto w = centralizer_isomorphism(a);
        CHECK(w.passed());
        // Cyclic A: the centralizer is the polynomials in A, abelian of dim r.
        if (is_cyclic_operator(a)) {
            CHECK(w.target_dim == r);
            CHECK(is_abelian(skew_adjoint_algebra(BilinearForm<Rational>(w.target_gram))));
        }
    }
}
