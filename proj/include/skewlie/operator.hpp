#pragma once

// Operator-theoretic computations on square matrices: minimal and invariant
// polynomials, elementary divisors, primary components, centralizers and the
// two-sided multiplication operator C -> A C B.

#include "skewlie/factor.hpp"
#include "skewlie/matrix.hpp"
#include "skewlie/poly.hpp"

#include <algorithm>
#include <vector>

namespace skewlie {

template <ExactScalar K>
Mat<K> evaluate(const Poly<K>& p, const Mat<K>& a) {
    const Index n = a.rows();
    Mat<K> acc = zeros<K>(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = mul(acc, a);
        if (!p.coeffs()[i].is_zero())
            for (Index d = 0; d < n; ++d) acc(d, d) += p.coeffs()[i];
    }
    return acc;
}

template <ExactScalar K>
Mat<K> matrix_power(Mat<K> a, unsigned e) {
    Mat<K> r = identity<K>(a.rows());
    while (e > 0) {
        if (e & 1u) r = mul(r, a);
        e >>= 1u;
        if (e > 0) a = mul(a, a);
    }
    return r;
}

// Monic generator of {q : q(A) v = 0}.
template <ExactScalar K>
Poly<K> local_minimal_polynomial(const Mat<K>& a, const Vec<K>& v) {
    const Index n = a.rows();
    if (is_zero_matrix(v)) return Poly<K>::constant(K(1));
    std::vector<Vec<K>> krylov{v};
    RowSpace<K> span(n);
    span.add(v);
    while (true) {
        Vec<K> next = a * krylov.back();
        if (span.contains(next)) {
            const auto c = solve(columns(krylov, n), next);
            std::vector<K> coeffs;
            for (Index i = 0; i < c->size(); ++i) coeffs.push_back(-(*c)(i));
            coeffs.push_back(K(1));
            return Poly<K>(std::move(coeffs));
        }
        span.add(next);
        krylov.push_back(std::move(next));
    }
}

template <ExactScalar K>
Poly<K> minimal_polynomial(const Mat<K>& a) {
    const Index n = a.rows();
    Poly<K> m = Poly<K>::constant(K(1));
    Mat<K> ma = identity<K>(n);
    for (Index i = 0; i < n; ++i) {
        if (is_zero_matrix(ma.col(i))) continue;
        Vec<K> e = Vec<K>::Constant(n, K(0));
        e(i) = K(1);
        m = lcm(m, local_minimal_polynomial(a, e));
        ma = evaluate(m, a);
    }
    return m;
}

// Monic invariant factors of positive degree, each dividing the next, from
// a Smith reduction of X I - A over K[X].
template <ExactScalar K>
std::vector<Poly<K>> invariant_factors(const Mat<K>& a) {
    const Index n = a.rows();
    if (n == 0) return {};
    const Poly<K> mp = minimal_polynomial(a);
    if (mp.degree() == n) return {mp};

    using P = Poly<K>;
    std::vector<std::vector<P>> m(n, std::vector<P>(n));
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) m[i][j] = P::constant(-a(i, j)) + (i == j ? P::x() : P{});

    std::vector<P> diag;
    for (Index t = 0; t < n; ++t) {
        while (true) {
            Index bi = -1, bj = -1;
            for (Index i = t; i < n; ++i)
                for (Index j = t; j < n; ++j)
                    if (!m[i][j].is_zero() && (bi < 0 || m[i][j].degree() < m[bi][bj].degree())) {
                        bi = i;
                        bj = j;
                    }
            if (bi < 0) {
                for (Index k = t; k < n; ++k) diag.push_back(P{});
                t = n;
                break;
            }
            std::swap(m[t], m[bi]);
            for (Index i = 0; i < n; ++i) std::swap(m[i][t], m[i][bj]);

            bool clean = true;
            for (Index i = t + 1; i < n; ++i) {
                if (m[i][t].is_zero()) continue;
                auto [q, r] = divmod(m[i][t], m[t][t]);
                for (Index j = t; j < n; ++j)
                    if (!m[t][j].is_zero()) m[i][j] -= q * m[t][j];
                if (!r.is_zero()) clean = false;
            }
            for (Index j = t + 1; j < n; ++j) {
                if (m[t][j].is_zero()) continue;
                auto [q, r] = divmod(m[t][j], m[t][t]);
                for (Index i = t; i < n; ++i)
                    if (!m[i][t].is_zero()) m[i][j] -= q * m[i][t];
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;

            Index bad = -1;
            for (Index i = t + 1; i < n && bad < 0; ++i)
                for (Index j = t + 1; j < n; ++j)
                    if (!(m[i][j] % m[t][t]).is_zero()) {
                        bad = i;
                        break;
                    }
            if (bad < 0) {
                diag.push_back(monic(m[t][t]));
                break;
            }
            for (Index j = t; j < n; ++j) m[t][j] += m[bad][j];
        }
    }
    std::vector<P> out;
    for (auto& d : diag)
        if (d.degree() > 0) out.push_back(std::move(d));
    std::sort(out.begin(), out.end(), [](const P& x, const P& y) { return x.degree() < y.degree(); });
    return out;
}

template <ExactScalar K>
Poly<K> characteristic_polynomial(const Mat<K>& a) {
    Poly<K> r = Poly<K>::constant(K(1));
    for (const auto& f : invariant_factors(a)) r *= f;
    return r;
}

template <ExactScalar K>
struct OperatorStructure {
    Poly<K> min_poly;
    std::vector<Poly<K>> invariant_factors;
    // One entry per prime-power factor of an invariant factor, sorted by
    // (base, exponent).
    std::vector<FactorPower<K>> elementary_divisors;
    bool unfactored = false;

    Poly<K> characteristic() const {
        Poly<K> r = Poly<K>::constant(K(1));
        for (const auto& f : invariant_factors) r *= f;
        return r;
    }
};

template <ExactScalar K>
OperatorStructure<K> operator_structure(const Mat<K>& a) {
    OperatorStructure<K> s;
    s.invariant_factors = invariant_factors(a);
    s.min_poly = s.invariant_factors.empty() ? Poly<K>::constant(K(1)) : s.invariant_factors.back();
    try {
        for (const auto& f : s.invariant_factors)
            for (auto& fp : factor(f)) s.elementary_divisors.push_back(std::move(fp));
    } catch (const Unfactored&) {
        s.elementary_divisors.clear();
        s.unfactored = true;
    }
    std::sort(s.elementary_divisors.begin(), s.elementary_divisors.end(), [](const auto& x, const auto& y) {
        const auto c = poly_order(x.base, y.base);
        return c != 0 ? c < 0 : x.multiplicity < y.multiplicity;
    });
    return s;
}

template <ExactScalar K>
bool is_cyclic_operator(const Mat<K>& a) {
    return minimal_polynomial(a).degree() == a.rows();
}

template <ExactScalar K>
bool is_semisimple_operator(const Mat<K>& a) {
    const Poly<K> m = minimal_polynomial(a);
    return m.degree() < 1 || gcd(m, derivative(m)).degree() == 0;
}

// Basis of ker p(A)^n.
template <ExactScalar K>
std::vector<Vec<K>> primary_component(const Mat<K>& a, const Poly<K>& p) {
    return kernel_basis(matrix_power(evaluate(p, a), static_cast<unsigned>(a.rows())));
}

// Matrix of C -> A C B on row-major coordinates of m x n matrices.
template <ExactScalar K>
Mat<K> lr_operator(const Mat<K>& a, const Mat<K>& b) {
    const Index m = a.rows(), n = b.rows();
    Mat<K> r = zeros<K>(m * n, m * n);
    for (Index i = 0; i < m; ++i)
        for (Index k = 0; k < m; ++k) {
            if (a(i, k).is_zero()) continue;
            for (Index j = 0; j < n; ++j)
                for (Index l = 0; l < n; ++l)
                    if (!b(l, j).is_zero()) r(i * n + j, k * n + l) = a(i, k) * b(l, j);
        }
    return r;
}

template <ExactScalar K>
std::vector<Mat<K>> centralizer_basis(const Mat<K>& a) {
    const Index n = a.rows();
    const Mat<K> op = lr_operator(identity<K>(n), a) - lr_operator(a, identity<K>(n));
    std::vector<Mat<K>> out;
    for (const auto& v : kernel_basis(op)) out.push_back(unflatten(v, n, n));
    return out;
}

// 1 is an eigenvalue of C -> A C B iff p_A and p_B^* share a factor.
template <ExactScalar K>
bool has_unit_eigenvalue(const Mat<K>& a, const Mat<K>& b) {
    return gcd(characteristic_polynomial(a), adjoint(characteristic_polynomial(b))).degree() > 0;
}

// Chains v, Nv, ..., N^{r-1}v of a nilpotent N. Placing the chains as
// consecutive columns of Q gives Q^{-1} N Q = direct sum of lower Jordan
// blocks (ones on the subdiagonal). Chains are returned longest first.
template <ExactScalar K>
std::vector<std::vector<Vec<K>>> nilpotent_chains(const Mat<K>& nmat) {
    const Index n = nmat.rows();
    std::vector<RowSpace<K>> kernels{RowSpace<K>(n)};
    Mat<K> power = identity<K>(n);
    while (kernels.back().dim() < n) {
        power = mul(power, nmat);
        RowSpace<K> next = RowSpace<K>::span(kernel_basis(power), n);
        if (next.dim() == kernels.back().dim()) throw std::invalid_argument("nilpotent_chains: matrix is not nilpotent");
        kernels.push_back(std::move(next));
    }
    std::vector<std::vector<Vec<K>>> chains;
    for (Index j = static_cast<Index>(kernels.size()) - 1; j >= 1; --j) {
        RowSpace<K> base = kernels[j - 1];
        for (const auto& c : chains) base.add(c[c.size() - j]);
        for (const auto& v : kernels[j].basis()) {
            if (!base.add(v)) continue;
            std::vector<Vec<K>> chain{v};
            for (Index t = 1; t < j; ++t) chain.push_back(nmat * chain.back());
            chains.push_back(std::move(chain));
        }
    }
    return chains;
}

template <ExactScalar K>
Mat<K> lower_jordan(Index n, const K& lambda) {
    Mat<K> j = zeros<K>(n, n);
    for (Index i = 0; i < n; ++i) j(i, i) = lambda;
    for (Index i = 0; i + 1 < n; ++i) j(i + 1, i) = K(1);
    return j;
}

}  // namespace skewlie
