#pragma once

// Bilinear forms given by Gram matrices, f(v, w) = v' S w.

#include "skewlie/factor.hpp"
#include "skewlie/matrix.hpp"
#include "skewlie/operator.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewlie {

// A required non-degeneracy condition failed; criterion names which one.
class PreconditionViolation : public std::invalid_argument {
public:
    PreconditionViolation(std::string criterion, const std::string& what)
        : std::invalid_argument(what), criterion_(std::move(criterion)) {}
    const std::string& criterion() const { return criterion_; }

private:
    std::string criterion_;
};

template <ExactScalar K>
class BilinearForm {
public:
    BilinearForm() = default;
    explicit BilinearForm(Mat<K> gram) : s_(std::move(gram)) {
        if (s_.rows() != s_.cols()) throw std::invalid_argument("Gram matrix must be square");
    }

    const Mat<K>& gram() const { return s_; }
    Index dim() const { return s_.rows(); }
    K operator()(const Vec<K>& v, const Vec<K>& w) const { return (v.transpose() * s_ * w)(0, 0); }
    bool is_nondegenerate() const { return is_invertible(s_); }

private:
    Mat<K> s_;
};

// B' S B: the Gram matrix in the basis given by the columns of B.
template <ExactScalar K>
Mat<K> congruence(const Mat<K>& s, const Mat<K>& b) {
    return mul(Mat<K>(b.transpose()), mul(s, b));
}

template <ExactScalar K>
struct Radicals {
    std::vector<Vec<K>> left;     // f(u, V) = 0
    std::vector<Vec<K>> right;    // f(V, u) = 0
    std::vector<Vec<K>> radical;  // both
};

template <ExactScalar K>
Radicals<K> radicals(const BilinearForm<K>& f) {
    Radicals<K> r;
    r.left = kernel_basis(Mat<K>(f.gram().transpose()));
    r.right = kernel_basis(f.gram());
    r.radical = intersect(RowSpace<K>::span(r.left, f.dim()), RowSpace<K>::span(r.right, f.dim())).basis();
    return r;
}

// sigma with f(w, v) = f(v, sigma w), i.e. S^{-1} S'.
template <ExactScalar K>
Mat<K> asymmetry(const BilinearForm<K>& f) {
    const auto inv = try_inverse(f.gram());
    if (!inv) throw std::invalid_argument("asymmetry requires a non-degenerate form");
    return mul(*inv, Mat<K>(f.gram().transpose()));
}

template <ExactScalar K>
struct FormParts {
    Mat<K> transpose;
    Mat<K> plus;
    Mat<K> minus;
};

template <ExactScalar K>
FormParts<K> parts(const BilinearForm<K>& f) {
    const Mat<K> t = f.gram().transpose();
    return {t, f.gram() + t, f.gram() - t};
}

namespace detail {

// (S + s S')^{-1} (S - s S') for s = +1 (sigma^{+-}) or s = -1 (sigma^{-+}).
template <ExactScalar K>
Mat<K> sigma_mixed(const BilinearForm<K>& f, int s) {
    if (!f.is_nondegenerate())
        throw PreconditionViolation("nondegenerate", "form is degenerate; the asymmetry is undefined");
    const Mat<K> sigma = asymmetry(f);
    const Poly<K> p = characteristic_polynomial(sigma);
    const Mat<K> t = f.gram().transpose();
    const Mat<K> denom = s > 0 ? Mat<K>(f.gram() + t) : Mat<K>(f.gram() - t);
    const Mat<K> numer = s > 0 ? Mat<K>(f.gram() - t) : Mat<K>(f.gram() + t);
    const auto inv = try_inverse(denom);
    // f^+ = f (1 + sigma) is non-degenerate iff p_sigma(-1) != 0; f^- iff p_sigma(1) != 0.
    const bool criterion = !p(K(s > 0 ? -1 : 1)).is_zero();
    if (criterion != inv.has_value()) throw std::logic_error("non-degeneracy criterion disagrees with rank");
    if (!inv) {
        if (s > 0) throw PreconditionViolation("p_sigma(-1) != 0", "symmetric part f+ is degenerate: p_sigma(-1) = 0");
        throw PreconditionViolation("p_sigma(1) != 0", "skew part f- is degenerate: p_sigma(1) = 0");
    }
    return mul(*inv, numer);
}

}  // namespace detail

template <ExactScalar K>
Mat<K> sigma_pm(const BilinearForm<K>& f) {
    return detail::sigma_mixed(f, 1);
}

template <ExactScalar K>
Mat<K> sigma_mp(const BilinearForm<K>& f) {
    return detail::sigma_mixed(f, -1);
}

// Canonical Gram matrices.

template <ExactScalar K>
Mat<K> gram_J(Index n) {
    return lower_jordan<K>(n, K(0));
}

template <ExactScalar K>
Mat<K> gram_Gamma(Index n) {
    if (n < 1) throw std::invalid_argument("Gamma_n needs n >= 1");
    Mat<K> g = zeros<K>(n, n);
    for (Index i = 0; i < n; ++i) {
        const K sign = ((i + n + 1) % 2 == 0) ? K(1) : K(-1);
        g(i, n - 1 - i) = sign;
        if (n - i < n) g(i, n - i) = sign;
    }
    return g;
}

template <ExactScalar K>
Mat<K> gram_A(Index n, const K& lambda) {
    if (n < 1) throw std::invalid_argument("A_n(lambda) needs n >= 1");
    const K excluded = (n % 2 == 1) ? K(1) : K(-1);
    if (lambda == excluded) throw std::invalid_argument("A_n(lambda) requires lambda != (-1)^(n+1)");
    Mat<K> g = zeros<K>(2 * n, 2 * n);
    g.topRightCorner(n, n) = identity<K>(n);
    g.bottomLeftCorner(n, n) = lower_jordan<K>(n, lambda);
    return g;
}

template <ExactScalar K>
Mat<K> gram_standard_skew(Index m) {
    Mat<K> g = zeros<K>(2 * m, 2 * m);
    g.topRightCorner(m, m) = identity<K>(m);
    g.bottomLeftCorner(m, m) = -identity<K>(m);
    return g;
}

template <ExactScalar K>
struct CanonicalBlock {
    enum class Kind { A, Gamma, J, identity, standard_skew, zero };
    Kind kind = Kind::identity;
    Index n = 0;  // A_n, Gamma_n, J_n, I_n, zero_n; standard_skew uses 2n
    K lambda{};   // A_n only
};

template <ExactScalar K>
Mat<K> make_canonical(const CanonicalBlock<K>& b) {
    using Kd = typename CanonicalBlock<K>::Kind;
    switch (b.kind) {
        case Kd::A: return gram_A<K>(b.n, b.lambda);
        case Kd::Gamma: return gram_Gamma<K>(b.n);
        case Kd::J: return gram_J<K>(b.n);
        case Kd::identity: return identity<K>(b.n);
        case Kd::standard_skew: return gram_standard_skew<K>(b.n);
        case Kd::zero: return zeros<K>(b.n, b.n);
    }
    throw std::invalid_argument("unknown canonical block");
}

template <ExactScalar K>
Mat<K> make_canonical(const std::vector<CanonicalBlock<K>>& blocks) {
    Mat<K> g(0, 0);
    for (const auto& b : blocks) g = direct_sum(g, make_canonical(b));
    return g;
}

template <ExactScalar K>
struct DegenerateStructure {
    std::vector<Index> odd_blocks;   // sizes, descending
    std::vector<Index> even_blocks;  // sizes, descending
    Mat<K> ndeg_gram;
    // P with P' C P = S, C = (+) J_odd (+) J_even (+) ndeg_gram in that order.
    Mat<K> witness;

    Mat<K> canonical() const {
        Mat<K> c(0, 0);
        for (Index s : odd_blocks) c = direct_sum(c, gram_J<K>(s));
        for (Index s : even_blocks) c = direct_sum(c, gram_J<K>(s));
        return direct_sum(c, ndeg_gram);
    }
    Index degenerate_dim() const {
        Index d = 0;
        for (Index s : odd_blocks) d += s;
        for (Index s : even_blocks) d += s;
        return d;
    }
};

namespace detail {

// Polynomial vectors x(t) = sum x_k t^k with (S - t S') x(t) = 0, forming a
// minimal basis of the right kernel of the pencil. Each entry lists the
// coefficient vectors x_0..x_m.
template <ExactScalar K>
std::vector<std::vector<Vec<K>>> pencil_kernel_basis(const Mat<K>& s) {
    const Index n = s.rows();
    const Mat<K> st = s.transpose();
    std::vector<std::vector<Vec<K>>> found;
    Index used = 0;
    for (Index d = 0; 2 * d + 1 <= n - used; ++d) {
        // unknowns x_0..x_d; equations S x_0 = 0, S x_k - S' x_{k-1} = 0, S' x_d = 0
        const Index u = (d + 1) * n;
        Mat<K> sys = zeros<K>((d + 2) * n, u);
        for (Index k = 0; k <= d; ++k) {
            sys.block(k * n, k * n, n, n) = s;
            sys.block((k + 1) * n, k * n, n, n) = -st;
        }
        const auto sols = kernel_basis(sys);
        if (sols.empty()) continue;
        // span of t^j shifts of the vectors already found, at degree d
        RowSpace<K> old(u);
        for (const auto& x : found) {
            const Index m = static_cast<Index>(x.size()) - 1;
            for (Index j = 0; j + m <= d; ++j) {
                Vec<K> v = Vec<K>::Constant(u, K(0));
                for (Index k = 0; k <= m; ++k) v.segment((j + k) * n, n) = x[k];
                old.add(v);
            }
        }
        for (const auto& z : sols) {
            if (!old.add(z)) continue;
            std::vector<Vec<K>> x;
            for (Index k = 0; k <= d; ++k) x.push_back(z.segment(k * n, n));
            found.push_back(std::move(x));
            used += 2 * d + 1;
        }
        if (used >= n) break;
    }
    return found;
}

// Limit of U_0 = 0, U_{k+1} = {x : A x in B U_k} on K^n.
template <ExactScalar K>
std::vector<Vec<K>> wong_limit(const Mat<K>& a, const Mat<K>& b) {
    const Index n = a.rows();
    std::vector<Vec<K>> u;
    while (true) {
        const Index r = static_cast<Index>(u.size());
        Mat<K> sys(n, n + r);
        sys.leftCols(n) = a;
        if (r > 0) sys.rightCols(r) = -mul(b, columns(u, n));
        std::vector<Vec<K>> next;
        for (const auto& z : kernel_basis(sys)) next.push_back(z.head(n));
        next = RowSpace<K>::span(next, n).basis();
        if (static_cast<Index>(next.size()) == r) return u;
        u = std::move(next);
    }
}

}  // namespace detail

// Splits f into J_odd blocks, J_even blocks and a non-degenerate part,
// returning a congruence witness. The odd blocks come from a minimal
// polynomial basis of the pencil kernel; the even blocks from the pencil's
// eigenvalue-0 and eigenvalue-infinity deflating subspaces.
template <ExactScalar K>
DegenerateStructure<K> degenerate_structure(const BilinearForm<K>& f) {
    const Mat<K>& s = f.gram();
    const Index n = f.dim();
    DegenerateStructure<K> out;
    if (is_invertible(s)) {
        out.ndeg_gram = s;
        out.witness = identity<K>(n);
        return out;
    }
    auto form = [&](const Vec<K>& v, const Vec<K>& w) { return f(v, w); };

    // Odd part skeleton.
    const auto kern = detail::pencil_kernel_basis(s);
    std::vector<Vec<K>> ve;
    for (const auto& x : kern)
        for (const auto& v : x) ve.push_back(v);
    if (RowSpace<K>::span(ve, n).dim() != static_cast<Index>(ve.size()))
        throw std::logic_error("pencil kernel coefficients are dependent");

    // Ann = {v : f(v, V_E) = 0 = f(V_E, v)}
    std::vector<Vec<K>> ann;
    {
        const Index e = static_cast<Index>(ve.size());
        Mat<K> cons(2 * e, n);
        for (Index i = 0; i < e; ++i) {
            cons.row(i) = (s * ve[i]).transpose();       // f(v, x) = v' S x
            cons.row(e + i) = (ve[i].transpose() * s);   // f(x, v) = x' S v
        }
        ann = e == 0 ? standard_basis<K>(n) : kernel_basis(cons);
    }
    std::vector<Vec<K>> w = complement_in(ve, ann, n);
    std::vector<Vec<K>> ann_full = ve;
    for (const auto& v : w) ann_full.push_back(v);
    std::vector<Vec<K>> o = complement_in(ann_full, standard_basis<K>(n), n);

    const Index no = static_cast<Index>(o.size()), nw = static_cast<Index>(w.size()),
                ne = static_cast<Index>(ve.size());

    // Make O and W mutually orthogonal: o_i += sum_a alpha_ia w_a, w_j += sum_e beta_je x_e.
    if (no > 0 && nw > 0) {
        const Index unknowns = no * nw + nw * ne;
        Mat<K> sys = zeros<K>(2 * no * nw, unknowns);
        Vec<K> rhs(2 * no * nw);
        auto alpha = [&](Index i, Index a) { return i * nw + a; };
        auto beta = [&](Index j, Index e) { return no * nw + j * ne + e; };
        Index row = 0;
        for (Index i = 0; i < no; ++i)
            for (Index j = 0; j < nw; ++j) {
                // f(o_i + a_i, w_j + e_j) = 0
                rhs(row) = -form(o[i], w[j]);
                for (Index a = 0; a < nw; ++a) sys(row, alpha(i, a)) = form(w[a], w[j]);
                for (Index e = 0; e < ne; ++e) sys(row, beta(j, e)) = form(o[i], ve[e]);
                ++row;
                // f(w_j + e_j, o_i + a_i) = 0
                rhs(row) = -form(w[j], o[i]);
                for (Index a = 0; a < nw; ++a) sys(row, alpha(i, a)) = form(w[j], w[a]);
                for (Index e = 0; e < ne; ++e) sys(row, beta(j, e)) = form(ve[e], o[i]);
                ++row;
            }
        const auto sol = solve(sys, rhs);
        if (!sol) throw std::logic_error("no orthogonal splitting of the odd part");
        std::vector<Vec<K>> o2 = o, w2 = w;
        for (Index i = 0; i < no; ++i)
            for (Index a = 0; a < nw; ++a)
                if (!(*sol)(alpha(i, a)).is_zero()) o2[i] += (*sol)(alpha(i, a)) * w[a];
        for (Index j = 0; j < nw; ++j)
            for (Index e = 0; e < ne; ++e)
                if (!(*sol)(beta(j, e)).is_zero()) w2[j] += (*sol)(beta(j, e)) * ve[e];
        o = std::move(o2);
        w = std::move(w2);
    }

    // Make O totally isotropic: o_i += sum_e gamma_ie x_e.
    if (no > 0) {
        Mat<K> sys = zeros<K>(no * no, no * ne);
        Vec<K> rhs(no * no);
        for (Index i = 0; i < no; ++i)
            for (Index k = 0; k < no; ++k) {
                const Index row = i * no + k;
                rhs(row) = -form(o[i], o[k]);
                for (Index e = 0; e < ne; ++e) {
                    sys(row, k * ne + e) += form(o[i], ve[e]);
                    sys(row, i * ne + e) += form(ve[e], o[k]);
                }
            }
        const auto sol = solve(sys, rhs);
        if (!sol) throw std::logic_error("no isotropic complement in the odd part");
        for (Index i = 0; i < no; ++i)
            for (Index e = 0; e < ne; ++e)
                if (!(*sol)(i * ne + e).is_zero()) o[i] += (*sol)(i * ne + e) * ve[e];
    }

    // Dual basis: f(x_k^(b), o_j^(b')) = [b = b'][k = j - 1].
    std::vector<Vec<K>> basis;
    std::vector<Index> odd_sizes;
    {
        std::vector<std::pair<Index, Index>> functionals;  // (block, k)
        for (Index b = 0; b < static_cast<Index>(kern.size()); ++b)
            for (Index k = 0; k + 1 < static_cast<Index>(kern[b].size()); ++k) functionals.emplace_back(b, k);
        std::vector<Vec<K>> dual;
        if (no > 0) {
            Mat<K> g(no, no);
            for (Index r = 0; r < no; ++r)
                for (Index i = 0; i < no; ++i) g(r, i) = form(kern[functionals[r].first][functionals[r].second], o[i]);
            const auto ginv = try_inverse(g);
            if (!ginv) throw std::logic_error("odd part pairing is degenerate");
            const Mat<K> om = mul(columns(o, n), *ginv);
            dual = column_list(om);
        }
        // order blocks by size descending, ties by discovery order
        std::vector<Index> order(kern.size());
        for (Index b = 0; b < static_cast<Index>(kern.size()); ++b) order[b] = b;
        std::stable_sort(order.begin(), order.end(),
                         [&](Index a, Index b) { return kern[a].size() > kern[b].size(); });
        std::vector<Index> first_dual(kern.size(), 0);
        for (Index r = 0, b = 0; b < static_cast<Index>(kern.size()); ++b) {
            first_dual[b] = r;
            r += static_cast<Index>(kern[b].size()) - 1;
        }
        for (Index b : order) {
            const Index m = static_cast<Index>(kern[b].size()) - 1;
            std::vector<Vec<K>> block(2 * m + 1);
            for (Index k = 0; k <= m; ++k) block[2 * m - 2 * k] = kern[b][k];
            for (Index j = 1; j <= m; ++j) block[2 * m - 2 * j + 1] = dual[first_dual[b] + j - 1];
            for (auto& v : block) basis.push_back(std::move(v));
            odd_sizes.push_back(2 * m + 1);
        }
    }

    // Regular part on W.
    std::vector<Index> even_sizes;
    std::vector<Vec<K>> ndeg_basis;
    if (nw > 0) {
        const Mat<K> wb = columns(w, n);
        const Mat<K> t = congruence(s, wb);
        const Mat<K> tt = t.transpose();
        const auto u_inf = detail::wong_limit(tt, t);  // S' x in S U
        const auto u_zero = detail::wong_limit(t, tt);  // S x in S' U
        const Index r = static_cast<Index>(u_zero.size());
        if (static_cast<Index>(u_inf.size()) != r) throw std::logic_error("unbalanced even part");

        // two-sided orthogonal complement of V_even inside W
        {
            std::vector<Vec<K>> ev = u_inf;
            for (const auto& v : u_zero) ev.push_back(v);
            const Index m = static_cast<Index>(ev.size());
            std::vector<Vec<K>> comp;
            if (m == 0) comp = standard_basis<K>(nw);
            else {
                Mat<K> cons(2 * m, nw);
                for (Index i = 0; i < m; ++i) {
                    cons.row(i) = (t * ev[i]).transpose();
                    cons.row(m + i) = ev[i].transpose() * t;
                }
                comp = kernel_basis(cons);
            }
            for (const auto& c : comp) ndeg_basis.push_back(wb * c);
        }

        if (r > 0) {
            Mat<K> u = columns(u_inf, nw), z = columns(u_zero, nw);
            const Mat<K> x = mul(Mat<K>(u.transpose()), mul(t, z));  // f(u_i, w_j)
            const Mat<K> y = mul(Mat<K>(z.transpose()), mul(t, u));  // f(w_i, u_j)
            const auto yinv = try_inverse(y);
            if (!yinv) throw std::logic_error("even part pairing is degenerate");
            const Mat<K> c = yinv->transpose();
            z = mul(z, c);
            const Mat<K> a = mul(x, c);
            const auto chains = nilpotent_chains(a);
            std::vector<Vec<K>> qcols;
            for (const auto& ch : chains)
                for (const auto& v : ch) qcols.push_back(v);
            const Mat<K> q = columns(qcols, r);
            const Mat<K> qinv = inverse(q);
            u = mul(u, Mat<K>(qinv.transpose()));
            z = mul(z, q);
            Index off = 0;
            for (const auto& ch : chains) {
                const Index len = static_cast<Index>(ch.size());
                for (Index i = 0; i < len; ++i) {
                    basis.push_back(wb * u.col(off + i));
                    basis.push_back(wb * z.col(off + i));
                }
                even_sizes.push_back(2 * len);
                off += len;
            }
        }
    }

    for (const auto& v : ndeg_basis) basis.push_back(v);
    const Mat<K> b = columns(basis, n);
    const auto binv = try_inverse(b);
    if (!binv) throw std::logic_error("degenerate decomposition basis is singular");
    out.odd_blocks = std::move(odd_sizes);
    out.even_blocks = std::move(even_sizes);
    out.ndeg_gram = congruence(s, columns(ndeg_basis, n));
    out.witness = *binv;
    if (congruence(out.canonical(), out.witness) != s) throw std::logic_error("degenerate decomposition witness fails");
    return out;
}

template <ExactScalar K>
struct PrimaryPiece {
    // Monic q with q* ~ q, or the unordered pair {p, p*} stored smaller first.
    std::vector<Poly<K>> label;
    std::vector<Vec<K>> basis;
    Mat<K> restricted_gram;

    bool is_pair() const { return label.size() == 2; }
};

class UndeterminedDecomposition : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <ExactScalar K>
Poly<K> monic_adjoint(const Poly<K>& p) {
    return monic(adjoint(p));
}

template <ExactScalar K>
std::vector<PrimaryPiece<K>> primary_orthogonal_decomposition(const BilinearForm<K>& f) {
    const Mat<K> sigma = asymmetry(f);
    const Poly<K> ps = characteristic_polynomial(sigma);
    std::vector<FactorPower<K>> fs;
    try {
        fs = ps.degree() > 0 ? factor(ps) : std::vector<FactorPower<K>>{};
    } catch (const Unfactored& e) {
        throw UndeterminedDecomposition(std::string("undetermined-decomposition: ") + e.what());
    }
    std::vector<PrimaryPiece<K>> pieces;
    std::vector<bool> used(fs.size(), false);
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        const Poly<K>& p = fs[i].base;
        const Poly<K> ps_adj = monic_adjoint(p);
        PrimaryPiece<K> piece;
        piece.basis = primary_component(sigma, p);
        if (ps_adj == p) {
            piece.label = {p};
        } else {
            std::size_t j = i + 1;
            while (j < fs.size() && fs[j].base != ps_adj) ++j;
            if (j == fs.size()) throw std::logic_error("characteristic polynomial of the asymmetry is not self-adjoint");
            used[j] = true;
            piece.label = {p, ps_adj};
            for (auto& v : primary_component(sigma, ps_adj)) piece.basis.push_back(std::move(v));
        }
        piece.restricted_gram = congruence(f.gram(), columns(piece.basis, f.dim()));
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

}  // namespace skewlie
