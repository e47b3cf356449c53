#pragma once

// Exact dense linear algebra on Eigen containers with an exact scalar.
// Pivoting is structural (first nonzero, leftmost column), so every basis
// produced here is deterministic.

#include "skewlie/scalar.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace skewlie {

template <ExactScalar K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <ExactScalar K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

template <ExactScalar K>
Mat<K> identity(Index n) {
    Mat<K> m = Mat<K>::Constant(n, n, K(0));
    for (Index i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
}

template <ExactScalar K>
Mat<K> zeros(Index r, Index c) {
    return Mat<K>::Constant(r, c, K(0));
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) return false;
    return true;
}

// Product that skips zero entries of the left factor; exact scalars make
// every multiply expensive and the matrices here are mostly sparse.
template <ExactScalar K>
Mat<K> mul(const Mat<K>& a, const Mat<K>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: dimension mismatch");
    Mat<K> r = zeros<K>(a.rows(), b.cols());
    for (Index k = 0; k < a.cols(); ++k) {
        for (Index i = 0; i < a.rows(); ++i) {
            const K& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (Index j = 0; j < b.cols(); ++j) {
                const K& bkj = b(k, j);
                if (!bkj.is_zero()) r(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

template <ExactScalar K>
Mat<K> commutator(const Mat<K>& a, const Mat<K>& b) {
    return mul(a, b) - mul(b, a);
}

template <ExactScalar K>
Mat<K> direct_sum(const Mat<K>& a, const Mat<K>& b) {
    Mat<K> r = zeros<K>(a.rows() + b.rows(), a.cols() + b.cols());
    r.topLeftCorner(a.rows(), a.cols()) = a;
    r.bottomRightCorner(b.rows(), b.cols()) = b;
    return r;
}

template <ExactScalar K>
Mat<K> direct_sum(const std::vector<Mat<K>>& blocks) {
    Mat<K> r(0, 0);
    for (const auto& b : blocks) r = direct_sum(r, b);
    return r;
}

// Row-major flattening, matching the coordinate convention of lr_operator.
template <ExactScalar K>
Vec<K> flatten(const Mat<K>& m) {
    Vec<K> v(m.rows() * m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
    return v;
}

template <ExactScalar K>
Mat<K> unflatten(const Vec<K>& v, Index rows, Index cols) {
    Mat<K> m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
    return m;
}

template <ExactScalar K>
struct Echelon {
    Mat<K> rref;
    std::vector<Index> pivots;  // pivot column of row k
    Index rank() const { return static_cast<Index>(pivots.size()); }
};

// Reduced row echelon form.
template <ExactScalar K>
Echelon<K> echelon(Mat<K> m) {
    const Index rows = m.rows(), cols = m.cols();
    std::vector<Index> pivots;
    Index r = 0;
    std::vector<Index> nz;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index piv = -1;
        for (Index i = r; i < rows; ++i)
            if (!m(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) m.row(piv).swap(m.row(r));
        const K inv = K(1) / m(r, c);
        nz.clear();
        for (Index j = c; j < cols; ++j)
            if (!m(r, j).is_zero()) {
                m(r, j) *= inv;
                nz.push_back(j);
            }
        for (Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const K f = m(i, c);
            for (Index j : nz) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <ExactScalar K>
Index rank(const Mat<K>& m) {
    return echelon(m).rank();
}

// Right null space basis: one vector per free column (ascending), with a 1 in
// that column.
template <ExactScalar K>
std::vector<Vec<K>> kernel_basis(const Mat<K>& m) {
    const Echelon<K> e = echelon(m);
    const Index n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (Index p : e.pivots) is_pivot[p] = true;
    std::vector<Vec<K>> out;
    for (Index f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec<K> v = Vec<K>::Constant(n, K(0));
        v(f) = K(1);
        for (Index k = 0; k < e.rank(); ++k) v(e.pivots[k]) = -e.rref(k, f);
        out.push_back(std::move(v));
    }
    return out;
}

template <ExactScalar K>
Mat<K> columns(const std::vector<Vec<K>>& vs, Index dim) {
    Mat<K> m(dim, static_cast<Index>(vs.size()));
    for (Index j = 0; j < m.cols(); ++j) m.col(j) = vs[j];
    return m;
}

template <ExactScalar K>
std::vector<Vec<K>> column_list(const Mat<K>& m) {
    std::vector<Vec<K>> out;
    for (Index j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
    return out;
}

template <ExactScalar K>
Mat<K> kernel_matrix(const Mat<K>& m) {
    return columns(kernel_basis(m), m.cols());
}

template <ExactScalar K>
std::optional<Mat<K>> try_inverse(const Mat<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const Index n = m.rows();
    Mat<K> aug(n, 2 * n);
    aug.leftCols(n) = m;
    aug.rightCols(n) = identity<K>(n);
    Echelon<K> e = echelon(std::move(aug));
    if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    return Mat<K>(e.rref.rightCols(n));
}

template <ExactScalar K>
Mat<K> inverse(const Mat<K>& m) {
    auto inv = try_inverse(m);
    if (!inv) throw std::invalid_argument("matrix is singular");
    return *inv;
}

template <ExactScalar K>
bool is_invertible(const Mat<K>& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

template <ExactScalar K>
K determinant(Mat<K> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const Index n = m.rows();
    K det(1);
    for (Index c = 0; c < n; ++c) {
        Index piv = -1;
        for (Index i = c; i < n; ++i)
            if (!m(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) return K(0);
        if (piv != c) {
            m.row(piv).swap(m.row(c));
            det = -det;
        }
        det *= m(c, c);
        const K inv = K(1) / m(c, c);
        for (Index i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const K f = m(i, c) * inv;
            for (Index j = c; j < n; ++j)
                if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

// Some x with a x = b, if one exists.
template <ExactScalar K>
std::optional<Vec<K>> solve(const Mat<K>& a, const Vec<K>& b) {
    const Index n = a.cols();
    Mat<K> aug(a.rows(), n + 1);
    aug.leftCols(n) = a;
    aug.col(n) = b;
    const Echelon<K> e = echelon(std::move(aug));
    if (e.rank() > 0 && e.pivots.back() == n) return std::nullopt;
    Vec<K> x = Vec<K>::Constant(n, K(0));
    for (Index k = 0; k < e.rank(); ++k) x(e.pivots[k]) = e.rref(k, n);
    return x;
}

// A subspace of K^n held as a reduced row echelon basis. Coordinates of a
// member with respect to the stored basis are read off the pivot columns.
template <ExactScalar K>
class RowSpace {
public:
    explicit RowSpace(Index ambient = 0) : n_(ambient), rows_(0, ambient) {}

    static RowSpace span(const std::vector<Vec<K>>& vs, Index ambient) {
        RowSpace s(ambient);
        if (vs.empty()) return s;
        Mat<K> m(static_cast<Index>(vs.size()), ambient);
        for (Index i = 0; i < m.rows(); ++i) m.row(i) = vs[i].transpose();
        Echelon<K> e = echelon(std::move(m));
        s.rows_ = e.rref.topRows(e.rank());
        s.pivots_ = std::move(e.pivots);
        return s;
    }

    Index ambient() const { return n_; }
    Index dim() const { return static_cast<Index>(pivots_.size()); }
    const std::vector<Index>& pivots() const { return pivots_; }
    Vec<K> vector(Index k) const { return rows_.row(k).transpose(); }
    std::vector<Vec<K>> basis() const {
        std::vector<Vec<K>> out;
        for (Index k = 0; k < dim(); ++k) out.push_back(vector(k));
        return out;
    }
    const Mat<K>& rows() const { return rows_; }

    // v minus its projection along the echelon basis; zero iff v is a member.
    Vec<K> reduce(Vec<K> v) const {
        for (Index k = 0; k < dim(); ++k) {
            const K c = v(pivots_[k]);
            if (c.is_zero()) continue;
            for (Index j = pivots_[k]; j < n_; ++j)
                if (!rows_(k, j).is_zero()) v(j) -= c * rows_(k, j);
        }
        return v;
    }

    bool contains(const Vec<K>& v) const { return is_zero_matrix(reduce(v)); }

    std::optional<Vec<K>> coordinates(const Vec<K>& v) const {
        Vec<K> c(dim());
        for (Index k = 0; k < dim(); ++k) c(k) = v(pivots_[k]);
        if (!is_zero_matrix(reduce(v))) return std::nullopt;
        return c;
    }

    // Adds v; returns false if it was already a member.
    bool add(const Vec<K>& v) {
        Vec<K> r = reduce(v);
        Index lead = -1;
        for (Index j = 0; j < n_; ++j)
            if (!r(j).is_zero()) { lead = j; break; }
        if (lead < 0) return false;
        const K inv = K(1) / r(lead);
        for (Index j = lead; j < n_; ++j) r(j) *= inv;
        for (Index k = 0; k < dim(); ++k) {
            const K c = rows_(k, lead);
            if (c.is_zero()) continue;
            for (Index j = lead; j < n_; ++j)
                if (!r(j).is_zero()) rows_(k, j) -= c * r(j);
        }
        const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
        Mat<K> grown(dim() + 1, n_);
        grown.topRows(pos) = rows_.topRows(pos);
        grown.row(pos) = r.transpose();
        grown.bottomRows(dim() - pos) = rows_.bottomRows(dim() - pos);
        rows_ = std::move(grown);
        pivots_.insert(pivots_.begin() + pos, lead);
        return true;
    }

    bool contains(const RowSpace& other) const {
        for (Index k = 0; k < other.dim(); ++k)
            if (!contains(other.vector(k))) return false;
        return true;
    }

    friend bool operator==(const RowSpace& a, const RowSpace& b) {
        return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
    }

private:
    Index n_;
    Mat<K> rows_;
    std::vector<Index> pivots_;
};

template <ExactScalar K>
RowSpace<K> intersect(const RowSpace<K>& a, const RowSpace<K>& b) {
    // x = sum a_i u_i = sum b_j w_j; solve [U' | -W'] c = 0.
    const Index n = a.ambient();
    Mat<K> m(n, a.dim() + b.dim());
    for (Index i = 0; i < a.dim(); ++i) m.col(i) = a.vector(i);
    for (Index j = 0; j < b.dim(); ++j) m.col(a.dim() + j) = -b.vector(j);
    std::vector<Vec<K>> out;
    for (const auto& c : kernel_basis(m)) {
        Vec<K> x = Vec<K>::Constant(n, K(0));
        for (Index i = 0; i < a.dim(); ++i)
            if (!c(i).is_zero()) x += c(i) * a.vector(i);
        out.push_back(std::move(x));
    }
    return RowSpace<K>::span(out, n);
}

// Extends the given independent vectors to a basis of span(target), choosing
// extra vectors from target in order.
template <ExactScalar K>
std::vector<Vec<K>> complement_in(const std::vector<Vec<K>>& base, const std::vector<Vec<K>>& target, Index n) {
    RowSpace<K> s = RowSpace<K>::span(base, n);
    std::vector<Vec<K>> extra;
    for (const auto& v : target)
        if (s.add(v)) extra.push_back(v);
    return extra;
}

template <ExactScalar K>
std::vector<Vec<K>> standard_basis(Index n) {
    std::vector<Vec<K>> out;
    for (Index i = 0; i < n; ++i) {
        Vec<K> v = Vec<K>::Constant(n, K(0));
        v(i) = K(1);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace skewlie
