#pragma once

// Explicit witnesses for isomorphism claims: the truncated current algebra
// gl(2) (x) F[X]/(X^m), its realization inside L(A_n(+-1)), and the map
// Y -> diag(-Y', Y) from a centralizer onto L([[0,A],[I,0]]).

#include "skewlie/bilinear_form.hpp"
#include "skewlie/lie_algebra.hpp"
#include "skewlie/lie_structure.hpp"
#include "skewlie/operator.hpp"

#include <string>
#include <vector>

namespace skewlie {

// a (x) X^i in the block upper-triangular Toeplitz model: a on the i-th
// block superdiagonal of a 2m x 2m matrix.
template <ExactScalar K>
Mat<K> current_element(Index m, const Mat<K>& a, Index i) {
    Mat<K> r = zeros<K>(2 * m, 2 * m);
    for (Index b = 0; b + i < m; ++b) r.block(2 * b, 2 * (b + i), 2, 2) = a;
    return r;
}

template <ExactScalar K>
LieAlgebra<K> truncated_current_gl2(Index m) {
    if (m < 1) throw std::invalid_argument("truncated_current_gl2 needs m >= 1");
    std::vector<Mat<K>> mats;
    for (Index i = 0; i < m; ++i)
        for (Index r = 0; r < 2; ++r)
            for (Index c = 0; c < 2; ++c) mats.push_back(current_element(m, elementary<K>(2, r, c), i));
    return LieAlgebra<K>::span_of(mats, 2 * m, "gl(2) (x) F[X]/(X^" + std::to_string(m) + ")");
}

struct CurrentStructureReport {
    Index n = 0;
    int sign = 1;
    Index dim = 0;
    Index expected_dim = 0;
    Index current_degree = 0;  // m in gl(2) (x) F[X]/(X^m)
    Index count_h = 0, count_e = 0, count_f = 0, count_m = 0;
    bool normal_form = false;     // explicit basis with Gram C and mixed asymmetry Y
    bool membership = false;      // every constructed element lies in L(f)
    bool spans = false;           // constructed elements form a basis of L(f)
    bool relations = false;       // [h,e], [h,f], [e,f] and the abelian relations
    bool m_central = false;       // [M, L] = 0
    bool correspondence = false;  // matches the current algebra (mod its top scalar for sign -1)
    bool ideal_checked = false;
    bool ideal_ok = false;        // non-central abelian ideal K
    Index ideal_dim = 0;
    std::string kernel_used;
    std::vector<std::string> notes;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

namespace detail {

template <ExactScalar K>
Mat<K> block2(const Mat<K>& a, const Mat<K>& b, const Mat<K>& c, const Mat<K>& d) {
    const Index n = a.rows();
    Mat<K> r(2 * n, 2 * n);
    r << a, b, c, d;
    return r;
}

template <ExactScalar K>
Mat<K> model_element(const Mat<K>& p, const Mat<K>& d, const Mat<K>& e) {
    return block2<K>(p, d, e, Mat<K>(-p.transpose()));
}

// P with ones on the k-th subdiagonal.
template <ExactScalar K>
Mat<K> subdiagonal(Index n, Index k) {
    Mat<K> p = zeros<K>(n, n);
    for (Index a = k; a < n; ++a) p(a, a - k) = K(1);
    return p;
}

// (-1)^a at the positions (a, b) with a + b = s.
template <ExactScalar K>
Mat<K> alternating_antidiagonal(Index n, Index s) {
    Mat<K> m = zeros<K>(n, n);
    for (Index a = 0; a < n; ++a) {
        const Index b = s - a;
        if (b >= 0 && b < n) m(a, b) = K(a % 2 == 0 ? 1 : -1);
    }
    return m;
}

}  // namespace detail

template <ExactScalar K>
CurrentStructureReport verify_current_structure(Index n, int sign) {
    if (characteristic<K>() == 2) throw std::invalid_argument("verify_current_structure needs characteristic != 2");
    if (!((sign == 1 && n >= 2 && n % 2 == 0) || (sign == -1 && n >= 1 && n % 2 == 1)))
        throw std::invalid_argument("verify_current_structure needs sign +1 with n even or sign -1 with n odd");

    CurrentStructureReport rep;
    rep.n = n;
    rep.sign = sign;
    auto fail = [&](std::string what) { rep.failures.push_back(std::move(what)); };

    const K sg(sign);
    const BilinearForm<K> f(gram_A<K>(n, sg));
    const LieAlgebra<K> l = skew_adjoint_algebra(f);
    rep.dim = l.dim();
    rep.expected_dim = sign == 1 ? 2 * n : 2 * n + 1;
    if (rep.dim != rep.expected_dim) fail("dim L(f) = " + std::to_string(rep.dim));

    // f^+ with sigma^{+-} for sign +1; f^- with sigma^{-+} for sign -1.
    const FormParts<K> fp = parts(f);
    const Mat<K> g = sign == 1 ? fp.plus : fp.minus;
    const Mat<K> sigma = sign == 1 ? sigma_pm(f) : sigma_mp(f);

    const Mat<K> id = identity<K>(n), zn = zeros<K>(n, n);
    const Mat<K> jn = lower_jordan<K>(n, sg);
    const Mat<K> c = detail::block2<K>(zn, id, Mat<K>(sg * id), zn);
    const Mat<K> z = direct_sum(inverse(Mat<K>(id + sg * jn)), id);
    const Mat<K> t = mul(inverse(z), mul(sigma, z));
    const Mat<K> r1 = t.topLeftCorner(n, n);
    const auto chains = nilpotent_chains(r1);
    Mat<K> q;
    if (chains.size() != 1) {
        fail("restricted mixed asymmetry is not a single nilpotent Jordan block");
    } else {
        const Mat<K> g1 = columns(chains[0], n);
        q = mul(z, direct_sum(g1, inverse(Mat<K>(g1.transpose()))));
    }
    const Mat<K> j0 = lower_jordan<K>(n, K(0));
    const Mat<K> y = direct_sum(j0, Mat<K>(-j0.transpose()));
    rep.normal_form = q.size() > 0 && congruence(g, q) == c && mul(inverse(q), mul(sigma, q)) == y;
    if (!rep.normal_form) {
        fail("could not bring the symmetric or skew part and the mixed asymmetry to normal form");
        return rep;
    }
    const Mat<K> qinv = inverse(q);
    auto to_v = [&](const Mat<K>& nm) { return mul(q, mul(nm, qinv)); };

    std::vector<Mat<K>> h, e, fe, mm;
    for (Index i = 0; 2 * i <= n - 1; ++i) h.push_back(to_v(detail::model_element<K>(detail::subdiagonal<K>(n, 2 * i), zn, zn)));
    for (Index k = 0; 2 * k + 1 <= n - 1; ++k)
        mm.push_back(to_v(detail::model_element<K>(detail::subdiagonal<K>(n, 2 * k + 1), zn, zn)));
    for (Index i = 0; n - 1 + 2 * i <= 2 * n - 2; ++i)
        e.push_back(to_v(detail::model_element<K>(zn, detail::alternating_antidiagonal<K>(n, n - 1 + 2 * i), zn)));
    for (Index i = 0; n - 1 - 2 * i >= 0; ++i)
        fe.push_back(to_v(detail::model_element<K>(zn, zn, detail::alternating_antidiagonal<K>(n, n - 1 - 2 * i))));
    rep.count_h = static_cast<Index>(h.size());
    rep.count_e = static_cast<Index>(e.size());
    rep.count_f = static_cast<Index>(fe.size());
    rep.count_m = static_cast<Index>(mm.size());
    rep.current_degree = rep.count_h;

    // Fix the overall sign of the f_i so that [e_0, f_0] = h_0.
    if (commutator(e[0], fe[0]) == Mat<K>(-h[0])) {
        for (auto& x : fe) x = -x;
        rep.notes.push_back("f_i negated so that [e_0, f_0] = h_0");
    }

    std::vector<Mat<K>> all;
    for (const auto* group : {&h, &e, &fe, &mm})
        for (const auto& x : *group) all.push_back(x);
    rep.membership = true;
    for (const auto& x : all)
        if (!l.contains(x)) rep.membership = false;
    if (!rep.membership) fail("a constructed element is not skew-adjoint");
    {
        std::vector<Vec<K>> flat;
        for (const auto& x : all) flat.push_back(flatten(x));
        rep.spans = static_cast<Index>(all.size()) == l.dim() && RowSpace<K>::span(flat, 4 * n * n).dim() == l.dim();
    }
    if (!rep.spans) fail("constructed elements do not form a basis of L(f)");

    const Index m = rep.current_degree;
    auto pick = [&](const std::vector<Mat<K>>& v, Index i) { return i < static_cast<Index>(v.size()) ? v[i] : zeros<K>(2 * n, 2 * n); };
    rep.relations = true;
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j) {
            const bool ok = commutator(h[i], e[j]) == Mat<K>(K(2) * pick(e, i + j)) &&
                            commutator(h[i], fe[j]) == Mat<K>(K(-2) * pick(fe, i + j)) &&
                            commutator(e[i], fe[j]) == pick(h, i + j) && is_zero_matrix(commutator(h[i], h[j])) &&
                            is_zero_matrix(commutator(e[i], e[j])) && is_zero_matrix(commutator(fe[i], fe[j]));
            if (!ok) rep.relations = false;
        }
    if (!rep.relations) fail("bracket relations among h_i, e_i, f_i fail");
    rep.m_central = true;
    for (const auto& x : mm)
        for (const auto& b : l.basis())
            if (!is_zero_matrix(commutator(x, b))) rep.m_central = false;
    if (!rep.m_central) fail("[M, L] != 0");

    // h_i, e_i, f_i -> (E11 - E22, E12, E21) (x) X^i and M_k -> I (x) X^k,
    // compared modulo I (x) X^{m-1} when sign = -1.
    {
        const Mat<K> hh = elementary<K>(2, 0, 0) - elementary<K>(2, 1, 1);
        std::vector<Mat<K>> img;
        for (Index i = 0; i < m; ++i) img.push_back(current_element<K>(m, hh, i));
        for (Index i = 0; i < m; ++i) img.push_back(current_element<K>(m, elementary<K>(2, 0, 1), i));
        for (Index i = 0; i < m; ++i) img.push_back(current_element<K>(m, elementary<K>(2, 1, 0), i));
        for (Index k = 0; k < rep.count_m; ++k) img.push_back(current_element<K>(m, identity<K>(2), k));
        std::vector<Vec<K>> dom_flat;
        for (const auto& x : all) dom_flat.push_back(flatten(x));
        const Mat<K> dom = columns(dom_flat, 4 * n * n);
        RowSpace<K> quotient(4 * m * m);
        if (sign == -1) quotient.add(flatten(current_element<K>(m, identity<K>(2), m - 1)));
        auto phi = [&](const Mat<K>& x) -> std::optional<Mat<K>> {
            const auto coords = solve(dom, flatten(x));
            if (!coords) return std::nullopt;
            Mat<K> r = zeros<K>(2 * m, 2 * m);
            for (Index k = 0; k < coords->size(); ++k)
                if (!(*coords)(k).is_zero()) r += (*coords)(k) * img[k];
            return r;
        };
        rep.correspondence = true;
        for (std::size_t a = 0; a < all.size() && rep.correspondence; ++a)
            for (std::size_t b = a + 1; b < all.size(); ++b) {
                const auto lhs = phi(commutator(all[a], all[b]));
                if (!lhs || !quotient.contains(flatten(Mat<K>(*lhs - commutator(img[a], img[b]))))) {
                    rep.correspondence = false;
                    break;
                }
            }
        RowSpace<K> image = quotient;
        for (const auto& x : img) image.add(flatten(x));
        if (image.dim() != 4 * m || quotient.dim() + static_cast<Index>(img.size()) != 4 * m) rep.correspondence = false;
        if (sign == -1) {
            const auto cur = truncated_current_gl2<K>(m);
            const auto top = cur.coordinates(current_element<K>(m, identity<K>(2), m - 1));
            if (!top || !center(cur).contains(*top)) rep.correspondence = false;
        }
        if (!rep.correspondence) fail("structure constants do not match the truncated current algebra");
    }

    // Non-central abelian ideal {x : xV <= W, xW = 0} beyond the reductive case.
    const bool beyond = sign == 1 ? n > 2 : n > 1;
    if (beyond) {
        rep.ideal_checked = true;
        const Index dv = 2 * n;
        const RowSpace<K> zero(dv), all_v = RowSpace<K>::span(standard_basis<K>(dv), dv);
        auto test_kernel = [&](const Mat<K>& op) {
            const auto w = RowSpace<K>::span(kernel_basis(op), dv);
            const auto ideal = flag_ideal(l, {zero, w, all_v});
            const bool ok = ideal.dim() > 0 && is_ideal(l, ideal) && bracket_span(l, ideal, ideal).dim() == 0 &&
                            !center(l).contains(ideal);
            return std::pair{ok, ideal.dim()};
        };
        if (sign == 1) {
            rep.kernel_used = "ker (sigma^{+-})^2";
            std::tie(rep.ideal_ok, rep.ideal_dim) = test_kernel(mul(sigma, sigma));
        } else {
            try {
                (void)sigma_pm(f);
                rep.notes.push_back("sigma^{+-} is defined on this form");
            } catch (const PreconditionViolation& ex) {
                rep.notes.push_back(std::string("sigma^{+-} is undefined on A_n(-1) (") + ex.criterion() +
                                    " fails); the kernel is taken of sigma^{-+}");
            }
            rep.kernel_used = "ker sigma^{-+}";
            std::tie(rep.ideal_ok, rep.ideal_dim) = test_kernel(sigma);
            const auto sq = test_kernel(mul(sigma, sigma));
            rep.notes.push_back(std::string("ker (sigma^{-+})^2 ") + (sq.first ? "also yields" : "does not yield") +
                                " a non-central abelian ideal");
        }
        if (!rep.ideal_ok) fail("no non-central abelian ideal from " + rep.kernel_used);
    }
    return rep;
}

template <ExactScalar K>
struct CentralizerIsomorphism {
    Mat<K> target_gram;           // T = [[0, A], [I, 0]]
    std::vector<Mat<K>> domain;   // basis of the centralizer of A
    std::vector<Mat<K>> images;   // diag(-Y', Y)
    Index target_dim = 0;
    bool into = false;            // images are skew-adjoint for T
    bool onto = false;            // images span L(T)
    bool brackets = false;        // phi[Y1,Y2] = [phi Y1, phi Y2] on all basis pairs

    bool passed() const { return into && onto && brackets; }
};

template <ExactScalar K>
CentralizerIsomorphism<K> centralizer_isomorphism(const Mat<K>& a) {
    const Index r = a.rows();
    const Poly<K> pa = characteristic_polynomial(a);
    if (gcd(pa, adjoint(pa)).degree() > 0)
        throw PreconditionViolation("gcd(p_A, p_A*) = 1", "characteristic polynomial shares a factor with its adjoint");
    CentralizerIsomorphism<K> w;
    w.target_gram = detail::block2<K>(zeros<K>(r, r), a, identity<K>(r), zeros<K>(r, r));
    const auto target = skew_adjoint_algebra(BilinearForm<K>(w.target_gram));
    w.target_dim = target.dim();
    w.domain = centralizer_basis(a);
    auto phi = [](const Mat<K>& y) { return direct_sum(Mat<K>(-y.transpose()), y); };
    for (const auto& y : w.domain) w.images.push_back(phi(y));

    w.into = true;
    for (const auto& x : w.images)
        if (!target.contains(x)) w.into = false;
    std::vector<Vec<K>> flat;
    for (const auto& x : w.images) flat.push_back(flatten(x));
    w.onto = w.into && static_cast<Index>(w.images.size()) == target.dim() &&
             RowSpace<K>::span(flat, 4 * r * r).dim() == target.dim();
    w.brackets = true;
    for (std::size_t i = 0; i < w.domain.size(); ++i)
        for (std::size_t j = i + 1; j < w.domain.size(); ++j)
            if (phi(commutator(w.domain[i], w.domain[j])) != commutator(w.images[i], w.images[j])) w.brackets = false;
    return w;
}

}  // namespace skewlie
