#pragma once

// Radical, reductive/semisimple/simple verdicts, centroid and fingerprints
// of matrix Lie algebras.

#include "skewlie/factor.hpp"
#include "skewlie/lie_algebra.hpp"
#include "skewlie/operator.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace skewlie {

// {x in L : kappa(x, [L,L]) = 0}, verified to be a solvable ideal.
template <ExactScalar K>
RowSpace<K> radical_char0(const LieAlgebra<K>& l) {
    if (characteristic<K>() != 0)
        throw UnsupportedCharacteristic("radical_char0 requires characteristic 0");
    const Index d = l.dim();
    const RowSpace<K> der = derived_subalgebra(l);
    RowSpace<K> rad;
    if (der.dim() == 0) {
        rad = whole(l);
    } else {
        const Mat<K> sys = mul(Mat<K>(der.rows()), killing_form(l));
        rad = RowSpace<K>::span(kernel_basis(sys), d);
    }
    if (!is_ideal(l, rad) || !is_solvable_subspace(l, rad))
        throw std::logic_error("Killing-orthogonal complement of [L,L] is not a solvable ideal");
    return rad;
}

// Matrices (rows of the echelon form) whose common kernel is u.
template <ExactScalar K>
std::vector<Vec<K>> annihilator(const RowSpace<K>& u) {
    return kernel_basis(Mat<K>(u.rows()));
}

// {x in L : x U_i <= U_{i-1}} for a flag 0 = U_0 < U_1 < ... < U_r = V of
// ambient subspaces. For L-invariant flags this is a nilpotent ideal.
template <ExactScalar K>
RowSpace<K> flag_ideal(const LieAlgebra<K>& l, const std::vector<RowSpace<K>>& flag) {
    const Index d = l.dim();
    std::vector<Vec<K>> rows;
    for (std::size_t i = 1; i < flag.size(); ++i) {
        const auto ann = annihilator(flag[i - 1]);
        if (ann.empty()) continue;
        for (const auto& u : flag[i].basis()) {
            std::vector<Vec<K>> images;
            for (Index k = 0; k < d; ++k) images.push_back(l.basis(k) * u);
            for (const auto& a : ann) {
                Vec<K> r(d);
                for (Index k = 0; k < d; ++k) r(k) = a.dot(images[k]);
                rows.push_back(std::move(r));
            }
        }
    }
    if (rows.empty()) return whole(l);
    Mat<K> sys(static_cast<Index>(rows.size()), d);
    for (std::size_t r = 0; r < rows.size(); ++r) sys.row(static_cast<Index>(r)) = rows[r].transpose();
    return RowSpace<K>::span(kernel_basis(sys), d);
}

template <ExactScalar K>
bool is_invariant_subspace(const LieAlgebra<K>& l, const RowSpace<K>& u) {
    for (const auto& v : u.basis())
        for (const auto& b : l.basis())
            if (!u.contains(Vec<K>(b * v))) return false;
    return true;
}

template <ExactScalar K>
struct IdealWitness {
    RowSpace<K> ideal;   // coordinates in L
    std::string origin;  // how it was found
};

namespace detail {

// LV, L(LV), ... and {v : Lv = 0}, {v : Lv <= previous}, ...
template <ExactScalar K>
std::vector<RowSpace<K>> module_series(const LieAlgebra<K>& l) {
    const Index n = l.ambient();
    std::vector<RowSpace<K>> out;
    RowSpace<K> cur = RowSpace<K>::span(standard_basis<K>(n), n);
    while (true) {
        RowSpace<K> next(n);
        for (const auto& v : cur.basis())
            for (const auto& b : l.basis()) next.add(Vec<K>(b * v));
        if (next.dim() == cur.dim()) break;
        out.push_back(next);
        cur = std::move(next);
        if (cur.dim() == 0) break;
    }
    RowSpace<K> below(n);
    while (below.dim() < n) {
        // {v : b v in below for all b}
        const auto ann = annihilator(below);
        std::vector<Vec<K>> rows;
        for (const auto& b : l.basis())
            for (const auto& a : ann) rows.push_back(Vec<K>(b.transpose() * a));
        RowSpace<K> next = rows.empty() ? RowSpace<K>::span(standard_basis<K>(n), n)
                                        : RowSpace<K>::span(kernel_basis(Mat<K>(columns(rows, n).transpose())), n);
        if (next.dim() == below.dim()) break;
        out.push_back(next);
        below = std::move(next);
    }
    return out;
}

}  // namespace detail

// Searches for a non-central solvable ideal among the solvable terms of the
// derived and lower central series and the nilpotent ideals attached to
// short flags of invariant subspaces. extra_invariant may add subspaces
// known to be invariant from outside (radicals of a form, kernels of
// operators commuting with L); they are checked before use.
template <ExactScalar K>
std::optional<IdealWitness<K>> find_noncentral_solvable_ideal(const LieAlgebra<K>& l,
                                                             const std::vector<RowSpace<K>>& extra_invariant = {}) {
    const Index n = l.ambient();
    const RowSpace<K> z = center(l);
    auto good = [&](const RowSpace<K>& s) { return !z.contains(s) && is_solvable_subspace(l, s); };

    if (is_solvable(l) && !is_abelian(l)) return IdealWitness<K>{whole(l), "L is solvable and not abelian"};
    {
        RowSpace<K> cur = derived_subalgebra(l);
        const RowSpace<K> all = whole(l);
        while (cur.dim() > 0) {
            if (good(cur)) return IdealWitness<K>{cur, "term of the lower central series"};
            RowSpace<K> next = bracket_span(l, all, cur);
            if (next.dim() == cur.dim()) break;
            cur = std::move(next);
        }
    }

    std::vector<RowSpace<K>> subs = detail::module_series(l);
    for (const auto& u : extra_invariant)
        if (is_invariant_subspace(l, u)) subs.push_back(u);
    const RowSpace<K> zero(n), all_v = RowSpace<K>::span(standard_basis<K>(n), n);
    for (const auto& u : subs) {
        if (u.dim() == 0 || u.dim() == n) continue;
        const RowSpace<K> ideal = flag_ideal(l, {zero, u, all_v});
        if (good(ideal)) return IdealWitness<K>{ideal, "maps V into an invariant subspace U and U to zero"};
    }
    for (const auto& u : subs)
        for (const auto& w : subs) {
            if (u.dim() == 0 || w.dim() == n || u.dim() >= w.dim() || !w.contains(u)) continue;
            const RowSpace<K> ideal = flag_ideal(l, {zero, u, w, all_v});
            if (good(ideal)) return IdealWitness<K>{ideal, "lowers an invariant flag 0 < U < W < V"};
        }
    return std::nullopt;
}

namespace detail {

template <ExactScalar K>
std::vector<Mat<K>> ad_matrices(const LieAlgebra<K>& l) {
    std::vector<Mat<K>> out;
    for (const auto& e : standard_basis<K>(l.dim())) out.push_back(l.ad(e));
    return out;
}

// Maps phi commuting with every ad b_k, by solving for all d^2 entries.
template <ExactScalar K>
std::vector<Mat<K>> centroid_direct(const std::vector<Mat<K>>& ads, Index d) {
    const Mat<K> id = identity<K>(d);
    RowSpace<K> eqs(d * d);
    for (const auto& a : ads) {
        const Mat<K> sys = lr_operator(id, a) - lr_operator(a, id);
        for (Index r = 0; r < sys.rows(); ++r) eqs.add(sys.row(r).transpose());
    }
    std::vector<Mat<K>> out;
    for (const auto& v : kernel_basis(Mat<K>(eqs.rows()))) out.push_back(unflatten(v, d, d));
    return out;
}

// When L is generated as an ad-module by one vector x, a centroid element
// is determined by its value y at x. Returns nullopt if no cyclic vector
// turns up among a few seeded candidates.
template <ExactScalar K>
std::optional<std::vector<Mat<K>>> centroid_cyclic(const std::vector<Mat<K>>& ads, Index d) {
    std::mt19937_64 gen(0xc3e7701dULL);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int attempt = 0; attempt < 4; ++attempt) {
        Vec<K> x(d);
        for (Index k = 0; k < d; ++k) x(k) = K(coef(gen));
        if (is_zero_matrix(x)) continue;
        // Words M_t in the ad matrices with u_t = M_t x spanning L.
        std::vector<Mat<K>> words{identity<K>(d)};
        std::vector<Vec<K>> us{x};
        RowSpace<K> span(d);
        span.add(x);
        for (std::size_t t = 0; t < us.size() && span.dim() < d; ++t)
            for (const auto& a : ads) {
                Vec<K> w = a * us[t];
                if (span.add(w)) {
                    words.push_back(mul(a, words[t]));
                    us.push_back(std::move(w));
                }
            }
        if (span.dim() < d) continue;
        const Mat<K> u = columns(us, d);
        const Mat<K> uinv = inverse(u);

        // Gamma(y) = Y(y) U^{-1} with Y(y) = [M_0 y, ..., M_{d-1} y].
        auto gamma = [&](const Vec<K>& y) {
            Mat<K> ym(d, d);
            for (Index t = 0; t < d; ++t) ym.col(t) = words[t] * y;
            return mul(ym, uinv);
        };
        auto commutes = [&](const Mat<K>& g) {
            for (const auto& a : ads)
                if (mul(g, a) != mul(a, g)) return false;
            return true;
        };
        // Equation for the edge (a, t): Gamma(a u_t) = a Gamma(u_t), i.e.
        // (sum_s c_s M_s - a M_t) y = 0 with a u_t = sum_s c_s u_s.
        RowSpace<K> eqs(d);
        std::vector<Mat<K>> result;
        std::size_t edge = 0, next_check = 1;
        for (Index t = 0; t < d; ++t)
            for (const auto& a : ads) {
                const Vec<K> c = uinv * (a * us[t]);
                Mat<K> e = -mul(a, words[t]);
                for (Index s = 0; s < d; ++s)
                    if (!c(s).is_zero()) e += c(s) * words[s];
                for (Index r = 0; r < d; ++r) eqs.add(e.row(r).transpose());
                if (++edge < next_check) continue;
                next_check *= 2;
                std::vector<Mat<K>> cand;
                bool ok = true;
                for (const auto& y : kernel_basis(eqs.dim() == 0 ? zeros<K>(1, d) : Mat<K>(eqs.rows()))) {
                    Mat<K> g = gamma(y);
                    if (!commutes(g)) { ok = false; break; }
                    cand.push_back(std::move(g));
                }
                if (ok) return cand;
            }
        for (const auto& y : kernel_basis(eqs.dim() == 0 ? zeros<K>(1, d) : Mat<K>(eqs.rows()))) result.push_back(gamma(y));
        return result;
    }
    return std::nullopt;
}

}  // namespace detail

inline constexpr Index kDirectCentroidLimit = 12;

// Basis of {phi in End(L) : phi ad x = ad x phi for all x}, or nullopt when
// L is too large for the direct system and has no cyclic vector.
template <ExactScalar K>
std::optional<std::vector<Mat<K>>> centroid_basis(const LieAlgebra<K>& l) {
    const Index d = l.dim();
    const auto ads = detail::ad_matrices(l);
    if (d <= kDirectCentroidLimit) return detail::centroid_direct(ads, d);
    return detail::centroid_cyclic(ads, d);
}

template <ExactScalar K>
std::optional<Index> centroid_dimension(const LieAlgebra<K>& l) {
    const auto c = centroid_basis(l);
    if (!c) return std::nullopt;
    return static_cast<Index>(c->size());
}

// Whether a commutative centroid is a field: a random element with a
// reducible minimal polynomial exhibits zero divisors; one with an
// irreducible minimal polynomial of full degree generates a field.
template <ExactScalar K>
Verdict centroid_is_field(const std::vector<Mat<K>>& cen) {
    if (cen.empty()) return Verdict::no;
    if (cen.size() == 1) return Verdict::yes;
    std::mt19937_64 gen(0xf1e1dULL);
    std::uniform_int_distribution<long> coef(-5, 5);
    const Index c = static_cast<Index>(cen.size());
    for (int attempt = 0; attempt < 6; ++attempt) {
        Mat<K> g = zeros<K>(cen[0].rows(), cen[0].cols());
        for (const auto& m : cen) g += K(coef(gen)) * m;
        const Poly<K> mp = minimal_polynomial(g);
        if (mp.degree() < 1) continue;
        try {
            const auto fs = factor(mp);
            if (fs.size() > 1 || fs[0].multiplicity > 1) return Verdict::no;
            if (mp.degree() == c) return Verdict::yes;
        } catch (const Unfactored&) {
            return Verdict::undetermined;
        }
    }
    return Verdict::undetermined;
}

template <ExactScalar K>
Verdict is_reductive(const LieAlgebra<K>& l, const std::vector<RowSpace<K>>& extra_invariant = {}) {
    if (characteristic<K>() == 0) return center(l).contains(radical_char0(l)) ? Verdict::yes : Verdict::no;
    if (is_abelian(l)) return Verdict::yes;
    return find_noncentral_solvable_ideal(l, extra_invariant) ? Verdict::no : Verdict::undetermined;
}

template <ExactScalar K>
Verdict is_semisimple(const LieAlgebra<K>& l, const std::vector<RowSpace<K>>& extra_invariant = {}) {
    if (characteristic<K>() == 0) return radical_char0(l).dim() == 0 ? Verdict::yes : Verdict::no;
    if (l.dim() == 0) return Verdict::yes;
    if (is_solvable(l) || center(l).dim() > 0) return Verdict::no;
    return find_noncentral_solvable_ideal(l, extra_invariant) ? Verdict::no : Verdict::undetermined;
}

template <ExactScalar K>
Verdict is_simple(const LieAlgebra<K>& l) {
    if (l.dim() == 0 || is_abelian(l)) return Verdict::no;
    if (characteristic<K>() != 0) return is_solvable(l) || center(l).dim() > 0 ? Verdict::no : Verdict::undetermined;
    if (radical_char0(l).dim() != 0) return Verdict::no;
    const auto cen = centroid_basis(l);
    if (!cen) return Verdict::undetermined;
    return centroid_is_field(*cen);
}

template <ExactScalar K>
struct Fingerprint {
    Index dim = 0;
    Index dim_center = 0;
    Index dim_derived = 0;
    std::vector<Index> derived_series_dims;
    std::vector<Index> lower_central_dims;
    Index killing_rank = 0;
    bool is_abelian = false;
    bool is_perfect = false;
    Verdict reductive = Verdict::undetermined;
    Verdict semisimple = Verdict::undetermined;
    Verdict simple = Verdict::undetermined;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

template <ExactScalar K>
Fingerprint<K> fingerprint(const LieAlgebra<K>& l, const std::vector<RowSpace<K>>& extra_invariant = {}) {
    Fingerprint<K> fp;
    fp.dim = l.dim();
    fp.dim_center = center(l).dim();
    fp.dim_derived = derived_subalgebra(l).dim();
    fp.derived_series_dims = derived_series(l);
    fp.lower_central_dims = lower_central_series(l);
    fp.killing_rank = rank(killing_form(l));
    fp.is_abelian = is_abelian(l);
    fp.is_perfect = fp.dim_derived == fp.dim;
    fp.reductive = is_reductive(l, extra_invariant);
    fp.semisimple = is_semisimple(l, extra_invariant);
    fp.simple = is_simple(l);
    return fp;
}

}  // namespace skewlie
