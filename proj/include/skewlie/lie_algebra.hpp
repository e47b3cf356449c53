#pragma once

// Lie algebras of n x n matrices, stored as an echelonized basis of the
// flattened matrices together with sparse structure constants.

#include "skewlie/bilinear_form.hpp"
#include "skewlie/matrix.hpp"
#include "skewlie/scalar.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewlie {

enum class Verdict { yes, no, undetermined };

inline std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::undetermined: return "undetermined";
    }
    return "undetermined";
}

class UnsupportedCharacteristic : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Structure constants are inconsistent with the Lie axioms or with the
// matrices they were computed from.
class StructureViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

template <ExactScalar K>
struct Term {
    Index index;
    K coeff;
};

template <ExactScalar K>
using Sparse = std::vector<Term<K>>;

template <ExactScalar K>
class LieAlgebra {
public:
    // The span of mats, which must be closed under commutators.
    static LieAlgebra span_of(const std::vector<Mat<K>>& mats, Index n, std::string name = {}) {
        std::vector<Vec<K>> flat;
        flat.reserve(mats.size());
        for (const auto& m : mats) {
            if (m.rows() != n || m.cols() != n) throw std::invalid_argument("span_of: matrix size mismatch");
            flat.push_back(flatten(m));
        }
        return LieAlgebra(RowSpace<K>::span(flat, n * n), n, std::move(name));
    }

    Index ambient() const { return n_; }
    Index dim() const { return space_.dim(); }
    const FieldDescriptor& field() const { return field_; }
    const std::string& name() const { return name_; }
    const std::vector<Mat<K>>& basis() const { return basis_; }
    const Mat<K>& basis(Index i) const { return basis_[i]; }

    const Sparse<K>& bracket_terms(Index i, Index j) const { return sc_[i * dim() + j]; }

    K structure_constant(Index i, Index j, Index k) const {
        for (const auto& t : bracket_terms(i, j))
            if (t.index == k) return t.coeff;
        return K(0);
    }

    // Coordinates of [b_i, y].
    Vec<K> bracket_basis(Index i, const Vec<K>& y) const {
        Vec<K> r = Vec<K>::Constant(dim(), K(0));
        for (Index j = 0; j < dim(); ++j) {
            if (y(j).is_zero()) continue;
            for (const auto& t : bracket_terms(i, j)) r(t.index) += y(j) * t.coeff;
        }
        return r;
    }

    Vec<K> bracket(const Vec<K>& x, const Vec<K>& y) const {
        Vec<K> r = Vec<K>::Constant(dim(), K(0));
        for (Index i = 0; i < dim(); ++i) {
            if (x(i).is_zero()) continue;
            for (Index j = 0; j < dim(); ++j) {
                if (y(j).is_zero()) continue;
                const K c = x(i) * y(j);
                for (const auto& t : bracket_terms(i, j)) r(t.index) += c * t.coeff;
            }
        }
        return r;
    }

    Mat<K> element(const Vec<K>& c) const {
        Mat<K> m = zeros<K>(n_, n_);
        for (Index k = 0; k < dim(); ++k)
            if (!c(k).is_zero()) m += c(k) * basis_[k];
        return m;
    }

    std::optional<Vec<K>> coordinates(const Mat<K>& x) const {
        if (x.rows() != n_ || x.cols() != n_) return std::nullopt;
        return coordinates_flat(flatten(x));
    }

    bool contains(const Mat<K>& x) const { return coordinates(x).has_value(); }

    // Column k holds the coordinates of [x, b_k].
    Mat<K> ad(const Vec<K>& x) const {
        Mat<K> a = zeros<K>(dim(), dim());
        for (Index i = 0; i < dim(); ++i) {
            if (x(i).is_zero()) continue;
            for (Index k = 0; k < dim(); ++k)
                for (const auto& t : bracket_terms(i, k)) a(t.index, k) += x(i) * t.coeff;
        }
        return a;
    }

    // First violation of antisymmetry or the Jacobi identity among the
    // stored constants, or nullopt if there is none.
    std::optional<std::string> check_axioms() const {
        const Index d = dim();
        for (Index i = 0; i < d; ++i)
            for (Index j = i; j < d; ++j) {
                Vec<K> s = dense(bracket_terms(i, j));
                if (i != j) s += dense(bracket_terms(j, i));
                if (!is_zero_matrix(s)) {
                    std::ostringstream os;
                    os << "antisymmetry violation at (" << i << "," << j << ")";
                    return os.str();
                }
            }
        Vec<K> acc(d);
        for (Index i = 0; i < d; ++i)
            for (Index j = i + 1; j < d; ++j)
                for (Index k = j + 1; k < d; ++k) {
                    acc.setConstant(K(0));
                    accumulate_double(i, j, k, acc);
                    accumulate_double(j, k, i, acc);
                    accumulate_double(k, i, j, acc);
                    if (!is_zero_matrix(acc)) {
                        std::ostringstream os;
                        os << "Jacobi violation at basis triple (" << i << "," << j << "," << k << ")";
                        return os.str();
                    }
                }
        return std::nullopt;
    }

    // Whether the stored constants reproduce the commutators of the basis.
    std::optional<std::string> check_realization() const {
        for (Index i = 0; i < dim(); ++i)
            for (Index j = 0; j < dim(); ++j) {
                Vec<K> c = dense(bracket_terms(i, j));
                if (element(c) != commutator(basis_[i], basis_[j])) {
                    std::ostringstream os;
                    os << "structure constants do not reproduce [b_" << i << ",b_" << j << "]";
                    return os.str();
                }
            }
        return std::nullopt;
    }

    // Negative-control hook: a copy with c_{ij}^k shifted by delta and
    // c_{ji}^k by -delta, so antisymmetry survives and Jacobi is what breaks.
    LieAlgebra with_tampered_constant(Index i, Index j, Index k, const K& delta) const {
        LieAlgebra copy = *this;
        copy.shift(i, j, k, delta);
        if (i != j) copy.shift(j, i, k, -delta);
        return copy;
    }

private:
    LieAlgebra(RowSpace<K> space, Index n, std::string name)
        : n_(n), field_(current_field<K>()), name_(std::move(name)), space_(std::move(space)) {
        const Index d = space_.dim();
        basis_.reserve(d);
        rows_.resize(d);
        for (Index k = 0; k < d; ++k) {
            const Vec<K> v = space_.vector(k);
            basis_.push_back(unflatten(v, n_, n_));
            for (Index c = 0; c < v.size(); ++c)
                if (!v(c).is_zero()) rows_[k].push_back({c, v(c)});
        }
        sc_.assign(d * d, {});
        for (Index i = 0; i < d; ++i)
            for (Index j = i + 1; j < d; ++j) {
                const auto c = coordinates_flat(flatten(commutator(basis_[i], basis_[j])));
                if (!c) throw StructureViolation("span is not closed under the commutator");
                for (Index k = 0; k < d; ++k)
                    if (!(*c)(k).is_zero()) {
                        sc_[i * d + j].push_back({k, (*c)(k)});
                        sc_[j * d + i].push_back({k, -(*c)(k)});
                    }
            }
        if (auto bad = check_axioms()) throw StructureViolation(*bad);
    }

    // Echelon rows have a unit at their pivot and zeros at the other pivots,
    // so coordinates are read off at the pivots and then confirmed.
    std::optional<Vec<K>> coordinates_flat(const Vec<K>& v) const {
        const Index d = dim();
        Vec<K> c(d);
        Vec<K> rest = v;
        for (Index k = 0; k < d; ++k) {
            c(k) = v(space_.pivots()[k]);
            if (c(k).is_zero()) continue;
            for (const auto& t : rows_[k]) rest(t.index) -= c(k) * t.coeff;
        }
        if (!is_zero_matrix(rest)) return std::nullopt;
        return c;
    }

    Vec<K> dense(const Sparse<K>& s) const {
        Vec<K> v = Vec<K>::Constant(dim(), K(0));
        for (const auto& t : s) v(t.index) += t.coeff;
        return v;
    }

    // acc += [[b_i, b_j], b_k]
    void accumulate_double(Index i, Index j, Index k, Vec<K>& acc) const {
        for (const auto& t : bracket_terms(i, j))
            for (const auto& u : bracket_terms(t.index, k)) acc(u.index) += t.coeff * u.coeff;
    }

    void shift(Index i, Index j, Index k, const K& delta) {
        auto& terms = sc_[i * dim() + j];
        for (auto& t : terms)
            if (t.index == k) {
                t.coeff += delta;
                return;
            }
        terms.push_back({k, delta});
    }

    Index n_ = 0;
    FieldDescriptor field_;
    std::string name_;
    RowSpace<K> space_;
    std::vector<Mat<K>> basis_;
    std::vector<Sparse<K>> rows_;
    std::vector<Sparse<K>> sc_;
};

// {X : X' S + S X = 0}.
template <ExactScalar K>
LieAlgebra<K> skew_adjoint_algebra(const BilinearForm<K>& f) {
    const Index n = f.dim();
    const Mat<K>& s = f.gram();
    // Row (i,j) of the system is entry (i,j) of X'S + SX; unknown (k,l) is X(k,l).
    Mat<K> sys = zeros<K>(n * n, n * n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            for (Index k = 0; k < n; ++k) {
                sys(i * n + j, k * n + i) += s(k, j);
                sys(i * n + j, k * n + j) += s(i, k);
            }
    std::vector<Mat<K>> mats;
    for (const auto& v : kernel_basis(sys)) mats.push_back(unflatten(v, n, n));
    return LieAlgebra<K>::span_of(mats, n, "L(f)");
}

template <ExactScalar K>
Mat<K> elementary(Index n, Index i, Index j) {
    Mat<K> e = zeros<K>(n, n);
    e(i, j) = K(1);
    return e;
}

template <ExactScalar K>
LieAlgebra<K> gl(Index n) {
    std::vector<Mat<K>> mats;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) mats.push_back(elementary<K>(n, i, j));
    return LieAlgebra<K>::span_of(mats, n, "gl(" + std::to_string(n) + ")");
}

template <ExactScalar K>
LieAlgebra<K> sl(Index n) {
    std::vector<Mat<K>> mats;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            if (i != j) mats.push_back(elementary<K>(n, i, j));
    for (Index i = 0; i + 1 < n; ++i) mats.push_back(elementary<K>(n, i, i) - elementary<K>(n, i + 1, i + 1));
    return LieAlgebra<K>::span_of(mats, n, "sl(" + std::to_string(n) + ")");
}

template <ExactScalar K>
LieAlgebra<K> so(Index n) {
    auto l = skew_adjoint_algebra(BilinearForm<K>(identity<K>(n)));
    return LieAlgebra<K>::span_of(l.basis(), n, "so(" + std::to_string(n) + ")");
}

template <ExactScalar K>
LieAlgebra<K> sp(Index m) {
    auto l = skew_adjoint_algebra(BilinearForm<K>(gram_standard_skew<K>(m)));
    return LieAlgebra<K>::span_of(l.basis(), 2 * m, "sp(" + std::to_string(2 * m) + ")");
}

// Subspaces of L are RowSpaces of coordinate vectors in K^dim.

template <ExactScalar K>
RowSpace<K> whole(const LieAlgebra<K>& l) {
    return RowSpace<K>::span(standard_basis<K>(l.dim()), l.dim());
}

template <ExactScalar K>
RowSpace<K> bracket_span(const LieAlgebra<K>& l, const RowSpace<K>& a, const RowSpace<K>& b) {
    RowSpace<K> r(l.dim());
    const auto bb = b.basis();
    for (const auto& x : a.basis())
        for (const auto& y : bb) r.add(l.bracket(x, y));
    return r;
}

template <ExactScalar K>
RowSpace<K> derived_subalgebra(const LieAlgebra<K>& l) {
    RowSpace<K> r(l.dim());
    for (Index i = 0; i < l.dim(); ++i)
        for (Index j = i + 1; j < l.dim(); ++j) {
            if (l.bracket_terms(i, j).empty()) continue;
            Vec<K> v = Vec<K>::Constant(l.dim(), K(0));
            for (const auto& t : l.bracket_terms(i, j)) v(t.index) = t.coeff;
            r.add(v);
        }
    return r;
}

// {x in S : [x, T] = 0}; T defaults to L.
template <ExactScalar K>
RowSpace<K> centralizer_of(const LieAlgebra<K>& l, const RowSpace<K>& s, const RowSpace<K>& t) {
    const Index d = l.dim();
    std::vector<Vec<K>> cur = s.basis();
    for (const auto& y : t.basis()) {
        if (cur.empty()) break;
        Mat<K> img(d, static_cast<Index>(cur.size()));
        for (std::size_t c = 0; c < cur.size(); ++c) img.col(static_cast<Index>(c)) = l.bracket(cur[c], y);
        std::vector<Vec<K>> next;
        for (const auto& k : kernel_basis(img)) {
            Vec<K> v = Vec<K>::Constant(d, K(0));
            for (std::size_t c = 0; c < cur.size(); ++c)
                if (!k(static_cast<Index>(c)).is_zero()) v += k(static_cast<Index>(c)) * cur[c];
            next.push_back(std::move(v));
        }
        cur = std::move(next);
    }
    return RowSpace<K>::span(cur, d);
}

template <ExactScalar K>
RowSpace<K> center(const LieAlgebra<K>& l) {
    const RowSpace<K> all = whole(l);
    return centralizer_of(l, all, all);
}

// Dimensions of L, [L,L], [[L,L],[L,L]], ... up to and including the first
// term equal to its predecessor or zero.
template <ExactScalar K>
std::vector<Index> derived_series(const LieAlgebra<K>& l) {
    std::vector<Index> dims{l.dim()};
    if (l.dim() == 0) return dims;
    RowSpace<K> cur = derived_subalgebra(l);
    while (true) {
        dims.push_back(cur.dim());
        if (cur.dim() == 0 || cur.dim() == dims[dims.size() - 2]) return dims;
        cur = bracket_span(l, cur, cur);
    }
}

// Dimensions of L, [L,L], [L,[L,L]], ... with the same stopping rule.
template <ExactScalar K>
std::vector<Index> lower_central_series(const LieAlgebra<K>& l) {
    std::vector<Index> dims{l.dim()};
    if (l.dim() == 0) return dims;
    const RowSpace<K> all = whole(l);
    RowSpace<K> cur = derived_subalgebra(l);
    while (true) {
        dims.push_back(cur.dim());
        if (cur.dim() == 0 || cur.dim() == dims[dims.size() - 2]) return dims;
        cur = bracket_span(l, all, cur);
    }
}

template <ExactScalar K>
bool is_abelian(const LieAlgebra<K>& l) {
    for (Index i = 0; i < l.dim(); ++i)
        for (Index j = i + 1; j < l.dim(); ++j)
            if (!l.bracket_terms(i, j).empty()) return false;
    return true;
}

template <ExactScalar K>
bool is_solvable(const LieAlgebra<K>& l) {
    return derived_series(l).back() == 0;
}

template <ExactScalar K>
bool is_perfect(const LieAlgebra<K>& l) {
    return derived_subalgebra(l).dim() == l.dim();
}

template <ExactScalar K>
bool is_ideal(const LieAlgebra<K>& l, const RowSpace<K>& s) {
    for (const auto& v : s.basis())
        for (Index i = 0; i < l.dim(); ++i)
            if (!s.contains(l.bracket_basis(i, v))) return false;
    return true;
}

// Solvability of a subalgebra given by a subspace.
template <ExactScalar K>
bool is_solvable_subspace(const LieAlgebra<K>& l, RowSpace<K> s) {
    while (s.dim() > 0) {
        RowSpace<K> next = bracket_span(l, s, s);
        if (next.dim() == s.dim()) return false;
        s = std::move(next);
    }
    return true;
}

template <ExactScalar K>
Mat<K> killing_form(const LieAlgebra<K>& l) {
    const Index d = l.dim();
    // tr(ad b_i ad b_j) = sum_k sum_m c_{ik}^m c_{jm}^k
    Mat<K> kf = zeros<K>(d, d);
    for (Index i = 0; i < d; ++i)
        for (Index j = i; j < d; ++j) {
            K acc(0);
            for (Index k = 0; k < d; ++k)
                for (const auto& t : l.bracket_terms(i, k)) {
                    const K c = l.structure_constant(j, t.index, k);
                    if (!c.is_zero()) acc += t.coeff * c;
                }
            kf(i, j) = acc;
            kf(j, i) = acc;
        }
    return kf;
}

// {y in L : [y, x] = 0} for an ambient matrix x.
template <ExactScalar K>
LieAlgebra<K> centralizer_in_algebra(const LieAlgebra<K>& l, const Mat<K>& x) {
    const Index n = l.ambient();
    if (x.rows() != n || x.cols() != n) throw std::invalid_argument("centralizer_in_algebra: size mismatch");
    Mat<K> sys(n * n, l.dim());
    for (Index i = 0; i < l.dim(); ++i) sys.col(i) = flatten(commutator(l.basis(i), x));
    std::vector<Mat<K>> mats;
    for (const auto& c : kernel_basis(sys)) mats.push_back(l.element(c));
    return LieAlgebra<K>::span_of(mats, n, "centralizer");
}

// The subspace spanned by an algebra's basis, as flattened ambient matrices.
template <ExactScalar K>
RowSpace<K> ambient_span(const LieAlgebra<K>& l) {
    std::vector<Vec<K>> flat;
    for (const auto& b : l.basis()) flat.push_back(flatten(b));
    return RowSpace<K>::span(flat, l.ambient() * l.ambient());
}

}  // namespace skewlie
