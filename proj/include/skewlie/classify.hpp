#pragma once

// Structural predictions for L(f) read off from the congruence invariants
// of f: the degenerate block sizes and, on the non-degenerate part, the
// elementary divisors of the asymmetry on each primary piece.

#include "skewlie/bilinear_form.hpp"
#include "skewlie/lie_algebra.hpp"
#include "skewlie/lie_structure.hpp"
#include "skewlie/operator.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace skewlie {

struct SummandDescriptor {
    enum class Type { zero, lambda, one, minus_one };
    enum class Algebra { abelian, gl, so, sp };

    Type type = Type::zero;
    std::string lambda;  // Type::lambda only
    char shape = 'A';
    Index m = 0;
    Algebra algebra = Algebra::abelian;
    Index algebra_param = 0;  // abelian dim, gl(m), so(m) or sp(param)

    Index predicted_dim() const {
        switch (algebra) {
            case Algebra::abelian: return algebra_param;
            case Algebra::gl: return algebra_param * algebra_param;
            case Algebra::so: return algebra_param * (algebra_param - 1) / 2;
            case Algebra::sp: return algebra_param * (algebra_param + 1) / 2;
        }
        return 0;
    }
    bool predicted_abelian() const { return algebra == Algebra::abelian; }
    std::string type_name() const;
    std::string algebra_name() const;

    friend bool operator==(const SummandDescriptor&, const SummandDescriptor&) = default;
};

// One orthogonal piece of f as seen by the classification.
struct PieceAnalysis {
    std::string label;
    Index dim = 0;
    std::vector<Index> exponents;  // block sizes or elementary-divisor exponents, descending
    Verdict reductive = Verdict::undetermined;
    std::optional<Index> predicted_dim;
    std::string pattern;  // why the piece is not reductive
    bool split = true;
};

struct SplitResult {
    enum class Status { reductive, f_zero, not_reductive, undetermined, unsupported };

    Status status = Status::undetermined;
    std::vector<SummandDescriptor> summands;
    std::vector<PieceAnalysis> pieces;
    Verdict predicted_reductive = Verdict::undetermined;
    std::optional<Index> predicted_dim;
    std::optional<bool> predicted_abelian;
    std::vector<std::string> notes;
};

std::string to_string(SplitResult::Status s);

struct CriterionResult {
    Verdict verdict = Verdict::undetermined;
    std::vector<std::string> reasons;
};

struct SlMatch {
    enum class Certainty { none, pattern, witnessed };
    std::optional<Index> n;  // sl(n), if matched
    std::string case_label;
    Certainty certainty = Certainty::none;
    std::vector<std::string> notes;
};

std::string to_string(SlMatch::Certainty c);

namespace detail {

// sum over pairs of min(m_i, m_j): centralizer dimension of a nilpotent
// (or primary) operator with these block sizes.
inline Index min_pair_sum(const std::vector<Index>& ms) {
    Index s = 0;
    for (Index a : ms)
        for (Index b : ms) s += std::min(a, b);
    return s;
}

// Centralizer dimension of a nilpotent with Jordan type ms inside the
// orthogonal (sign +1) or symplectic (sign -1) algebra preserving it.
inline Index classical_centralizer_dim(const std::vector<Index>& ms, int sign) {
    Index total = 0, odd = 0;
    const Index top = ms.empty() ? 0 : *std::max_element(ms.begin(), ms.end());
    for (Index k = 1; k <= top; ++k) {
        Index dual = 0;
        for (Index m : ms)
            if (m >= k) ++dual;
        total += dual * dual;
    }
    for (Index m : ms)
        if (m % 2 == 1) ++odd;
    return sign > 0 ? (total - odd) / 2 : (total + odd) / 2;
}

inline std::vector<Index> sorted_desc(std::vector<Index> v) {
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

// Catalogue for the unipotent piece (asymmetry eigenvalue 1). exps are the
// elementary-divisor exponents; even ones come in pairs from A_n(1) blocks,
// odd ones from Gamma blocks (size 1 being the symmetric part).
inline void analyze_plus_one(const std::vector<Index>& exps, PieceAnalysis& piece, std::vector<SummandDescriptor>& out) {
    using S = SummandDescriptor;
    std::vector<Index> odd_big, even;
    Index ones = 0;
    for (Index e : exps) {
        if (e % 2 == 0) even.push_back(e);
        else if (e == 1) ++ones;
        else odd_big.push_back(e);
    }
    const bool big_even = std::any_of(even.begin(), even.end(), [](Index e) { return e > 2; });
    const Index pairs2 = static_cast<Index>(even.size()) / 2;
    piece.reductive = Verdict::no;
    if (big_even) piece.pattern = "paired block A_n(1) with n > 2 even";
    else if (pairs2 >= 2) piece.pattern = "two paired blocks A_2(1)";
    else if (pairs2 == 1 && !odd_big.empty()) piece.pattern = "block Gamma_r with r >= 3 odd next to a paired block A_2(1)";
    else if (pairs2 == 1 && ones > 0) piece.pattern = "symmetric part I_r next to a paired block A_2(1)";
    else if (odd_big.size() >= 2) piece.pattern = "two blocks Gamma_r, Gamma_s with r, s > 1 odd";
    else if (odd_big.size() == 1 && ones >= 2) piece.pattern = "symmetric part I_r with r >= 2 next to a block Gamma_s with s > 1 odd";
    else {
        piece.reductive = Verdict::yes;
        if (pairs2 == 1) out.push_back({S::Type::one, "", 'C', 2, S::Algebra::gl, 2});
        else if (odd_big.size() == 1 && ones == 1)
            out.push_back({S::Type::one, "", 'D', odd_big[0], S::Algebra::abelian, (odd_big[0] + 1) / 2});
        else if (odd_big.size() == 1) out.push_back({S::Type::one, "", 'A', odd_big[0], S::Algebra::abelian, (odd_big[0] - 1) / 2});
        else if (ones == 1) out.push_back({S::Type::one, "", 'A', 1, S::Algebra::abelian, 0});
        else if (ones == 2) out.push_back({S::Type::one, "", 'D', 1, S::Algebra::abelian, 1});
        else out.push_back({S::Type::one, "", 'B', ones, S::Algebra::so, ones});
    }
}

// Catalogue for the piece with asymmetry eigenvalue -1: odd exponents pair
// up from A_n(-1) blocks (size 1 being the skew part), even ones are Gamma blocks.
inline void analyze_minus_one(const std::vector<Index>& exps, PieceAnalysis& piece, std::vector<SummandDescriptor>& out) {
    using S = SummandDescriptor;
    std::vector<Index> even;
    Index ones = 0;
    bool big_odd = false;
    for (Index e : exps) {
        if (e % 2 == 0) even.push_back(e);
        else if (e == 1) ++ones;
        else big_odd = true;
    }
    piece.reductive = Verdict::no;
    if (big_odd) piece.pattern = "paired block A_n(-1) with n > 1 odd";
    else if (even.size() >= 2) piece.pattern = "two blocks Gamma_r, Gamma_s with r, s > 1 even";
    else if (even.size() == 1 && ones > 0) piece.pattern = "skew part next to a block Gamma_r with r even";
    else {
        piece.reductive = Verdict::yes;
        if (even.size() == 1) out.push_back({S::Type::minus_one, "", 'A', even[0], S::Algebra::abelian, even[0] / 2});
        else out.push_back({S::Type::minus_one, "", 'B', ones / 2, S::Algebra::sp, ones});
    }
}

}  // namespace detail

template <ExactScalar K>
SplitResult classify_split(const BilinearForm<K>& f) {
    using S = SummandDescriptor;
    SplitResult res;
    if (characteristic<K>() == 2) {
        res.status = SplitResult::Status::unsupported;
        res.notes.push_back("classification of summands needs characteristic != 2");
        return res;
    }
    const Index n = f.dim();
    if (is_zero_matrix(f.gram())) {
        res.status = SplitResult::Status::f_zero;
        res.predicted_reductive = Verdict::yes;
        res.predicted_dim = n * n;
        res.predicted_abelian = n <= 1;
        res.notes.push_back("f = 0, so L(f) = gl(" + std::to_string(n) + ")");
        return res;
    }

    const DegenerateStructure<K> ds = degenerate_structure(f);
    bool any_no = false, any_open = false;
    // Predicted dims of L on the degenerate-odd, degenerate-even and
    // non-degenerate parts; the total is assembled at the end.
    std::optional<Index> odd_dim, even_dim = 0, ndeg_dim = 0;

    if (!ds.odd_blocks.empty()) {
        PieceAnalysis p;
        p.label = "odd degenerate blocks";
        p.exponents = ds.odd_blocks;
        for (Index s : ds.odd_blocks) p.dim += s;
        p.reductive = Verdict::no;
        p.pattern = "non-zero form with a degenerate block of odd size";
        // Only a single J_{2k+1} on its own has a closed-form dimension, k + 1.
        if (ds.odd_blocks.size() == 1 && ds.degenerate_dim() == n && ds.odd_blocks[0] > 1)
            p.predicted_dim = (ds.odd_blocks[0] - 1) / 2 + 1;
        odd_dim = p.predicted_dim;
        res.pieces.push_back(p);
        any_no = true;
    }

    if (!ds.even_blocks.empty()) {
        PieceAnalysis p;
        p.label = "even degenerate blocks";
        p.exponents = ds.even_blocks;
        std::vector<Index> halves;
        for (Index s : ds.even_blocks) {
            p.dim += s;
            halves.push_back(s / 2);
        }
        p.predicted_dim = detail::min_pair_sum(halves);
        const bool all_two = std::all_of(halves.begin(), halves.end(), [](Index h) { return h == 1; });
        if (halves.size() == 1) {
            p.reductive = Verdict::yes;
            res.summands.push_back({S::Type::zero, "", 'A', halves[0], S::Algebra::abelian, halves[0]});
        } else if (all_two) {
            p.reductive = Verdict::yes;
            const Index m = static_cast<Index>(halves.size());
            res.summands.push_back({S::Type::zero, "", 'B', m, S::Algebra::gl, m});
        } else {
            p.reductive = Verdict::no;
            p.pattern = "even degenerate blocks that are neither a single block nor all of size 2";
            any_no = true;
        }
        even_dim = p.predicted_dim;
        res.pieces.push_back(p);
    }

    if (ds.ndeg_gram.rows() > 0) {
        std::vector<PrimaryPiece<K>> pieces;
        try {
            pieces = primary_orthogonal_decomposition(BilinearForm<K>(ds.ndeg_gram));
        } catch (const UndeterminedDecomposition& e) {
            res.notes.push_back(e.what());
            any_open = true;
            ndeg_dim.reset();
        }
        for (const auto& pc : pieces) {
            PieceAnalysis p;
            p.dim = static_cast<Index>(pc.basis.size());
            const Mat<K> sig = asymmetry(BilinearForm<K>(pc.restricted_gram));
            const auto st = operator_structure(sig);
            const Poly<K>& base = pc.label[0];
            for (const auto& ed : st.elementary_divisors)
                if (ed.base == base) p.exponents.push_back(ed.multiplicity);
            p.exponents = detail::sorted_desc(p.exponents);
            const Index deg = base.degree();
            const bool cyclic = p.exponents.size() == 1;
            const bool semisimple = std::all_of(p.exponents.begin(), p.exponents.end(), [](Index e) { return e == 1; });

            if (!pc.is_pair() && deg == 1) {
                const bool plus = base == Poly<K>::linear(K(1));
                p.label = plus ? "eigenvalue 1" : "eigenvalue -1";
                p.predicted_dim = detail::classical_centralizer_dim(p.exponents, plus ? 1 : -1);
                if (plus) detail::analyze_plus_one(p.exponents, p, res.summands);
                else detail::analyze_minus_one(p.exponents, p, res.summands);
            } else {
                p.label = pc.is_pair() ? "{" + to_string(pc.label[0]) + ", " + to_string(pc.label[1]) + "}" : to_string(base);
                // Over a splitting field this piece is deg/2 (self-adjoint) or
                // deg (paired) copies of a primary piece of the same shape.
                const Index copies = pc.is_pair() ? deg : deg / 2;
                p.predicted_dim = copies * detail::min_pair_sum(p.exponents);
                p.split = pc.is_pair() && deg == 1;
                if (cyclic || semisimple) {
                    p.reductive = Verdict::yes;
                    if (p.split) {
                        const K lambda = -base.coeffs()[0];
                        const Index r = static_cast<Index>(p.exponents.size());
                        if (cyclic)
                            res.summands.push_back({S::Type::lambda, to_string(lambda), 'A', p.exponents[0], S::Algebra::abelian, p.exponents[0]});
                        else
                            res.summands.push_back({S::Type::lambda, to_string(lambda), 'B', r, S::Algebra::gl, r});
                    } else {
                        any_open = true;
                        res.notes.push_back("piece " + p.label + " does not split over the field; summand shape left undetermined");
                    }
                } else {
                    p.reductive = Verdict::no;
                    p.pattern = "asymmetry on this primary piece is neither cyclic nor semisimple";
                }
            }
            if (p.reductive == Verdict::no) any_no = true;
            if (ndeg_dim) *ndeg_dim += *p.predicted_dim;
            res.pieces.push_back(std::move(p));
        }
    }

    const Index m = ds.ndeg_gram.rows();
    const bool only_lines = std::all_of(ds.odd_blocks.begin(), ds.odd_blocks.end(), [](Index b) { return b == 1; });
    if (ds.odd_blocks.empty()) {
        if (even_dim && ndeg_dim) res.predicted_dim = *even_dim + *ndeg_dim;
    } else if (odd_dim) {
        res.predicted_dim = odd_dim;
    } else if (only_lines && ds.even_blocks.empty() && ndeg_dim) {
        // f = 0_k (+) g with g non-degenerate: X = [[A, B], [C, D]] needs C = 0
        // and D in L(g), while A (k x k) and B (k x m) are free.
        const Index k = static_cast<Index>(ds.odd_blocks.size());
        res.predicted_dim = k * k + k * m + *ndeg_dim;
    }
    for (const auto& s : res.summands)
        if (s.shape == 'D' && s.type == S::Type::one)
            res.notes.push_back("shape D read as Gamma_m (+) Gamma_1 with its own algebra abelian of dimension (m+1)/2");
    if (any_no) {
        res.status = SplitResult::Status::not_reductive;
        res.predicted_reductive = Verdict::no;
        res.summands.clear();
    } else if (any_open) {
        res.status = SplitResult::Status::undetermined;
        res.predicted_reductive = Verdict::yes;
        res.summands.clear();
    } else {
        res.status = SplitResult::Status::reductive;
        res.predicted_reductive = Verdict::yes;
        res.predicted_abelian =
            std::all_of(res.summands.begin(), res.summands.end(), [](const S& s) { return s.predicted_abelian(); });
        if (res.predicted_dim) {
            Index total = 0;
            for (const auto& s : res.summands) total += s.predicted_dim();
            if (total != *res.predicted_dim)
                res.notes.push_back("summand dimensions add to " + std::to_string(total) + " but pieces predict " +
                                    std::to_string(*res.predicted_dim));
        }
    }
    return res;
}

namespace detail {

// Dimensions of ker(sigma - 1) and ker(sigma + 1) when sigma^2 = 1, else nullopt.
template <ExactScalar K>
std::optional<std::pair<Index, Index>> involution_split(const Mat<K>& sigma) {
    const Index n = sigma.rows();
    if (mul(sigma, sigma) != identity<K>(n)) return std::nullopt;
    const Index plus = static_cast<Index>(kernel_basis(Mat<K>(sigma - identity<K>(n))).size());
    return std::pair{plus, n - plus};
}

}  // namespace detail

template <ExactScalar K>
CriterionResult semisimple_criterion(const BilinearForm<K>& f) {
    CriterionResult r;
    r.verdict = Verdict::no;
    if (characteristic<K>() == 2) {
        r.reasons.push_back("characteristic 2");
        return r;
    }
    if (!f.is_nondegenerate()) {
        r.reasons.push_back("f is degenerate");
        return r;
    }
    const auto split = detail::involution_split(asymmetry(f));
    if (!split) {
        r.reasons.push_back("asymmetry is not an involution, so f is not a symmetric part orthogonal to a skew part");
        return r;
    }
    r.reasons.push_back("f splits as a symmetric part of dim " + std::to_string(split->first) +
                        " orthogonal to a skew part of dim " + std::to_string(split->second));
    if (split->first == 2) {
        r.reasons.push_back("symmetric part has dimension 2");
        return r;
    }
    r.verdict = Verdict::yes;
    return r;
}

template <ExactScalar K>
CriterionResult simple_criterion(const BilinearForm<K>& f) {
    CriterionResult r;
    r.verdict = Verdict::no;
    if (characteristic<K>() == 2) {
        r.reasons.push_back("characteristic 2");
        return r;
    }
    if (!f.is_nondegenerate()) {
        r.reasons.push_back("f is degenerate");
        return r;
    }
    const Index n = f.dim();
    const auto split = detail::involution_split(asymmetry(f));
    if (!split) {
        r.reasons.push_back("f is not a symmetric part orthogonal to a skew part");
        return r;
    }
    const auto [d1, dm1] = *split;
    if (d1 == 0) {
        r.verdict = Verdict::yes;
        r.reasons.push_back("f is skew-symmetric");
    } else if (dm1 == 0) {
        if (n <= 2) {
            r.reasons.push_back("f is symmetric of dimension <= 2");
        } else if (n == 4 && is_square(determinant(f.gram()))) {
            r.reasons.push_back("f is symmetric of dimension 4 with square discriminant");
        } else {
            r.verdict = Verdict::yes;
            r.reasons.push_back(n == 4 ? "f is symmetric of dimension 4 with non-square discriminant"
                                       : "f is symmetric of dimension > 2");
        }
    } else if (d1 == 1) {
        r.verdict = Verdict::yes;
        r.reasons.push_back("f is a line orthogonal to a non-zero skew part");
    } else {
        r.reasons.push_back("symmetric part of dimension " + std::to_string(d1) + " next to a non-zero skew part");
    }
    return r;
}

template <ExactScalar K>
SlMatch sl_match(const BilinearForm<K>& f) {
    SlMatch r;
    const Index n = f.dim();
    const Mat<K>& s = f.gram();
    auto set_equal_sl2 = [&](const Mat<K>& basis_change) {
        // L(f) restricted through basis_change equals the trace-zero 2 x 2 matrices.
        const auto l = skew_adjoint_algebra(BilinearForm<K>(congruence(s, basis_change)));
        return ambient_span(l) == ambient_span(sl<K>(2));
    };
    if (characteristic<K>() == 2) {
        if (n != 2) {
            r.notes.push_back("no L(f) is sl(n) for n > 2 in characteristic 2; dimension " + std::to_string(n) + " is not 2");
            return r;
        }
        const bool alternating = s(0, 0).is_zero() && s(1, 1).is_zero() && s(0, 1) == -s(1, 0);
        if (!alternating || !f.is_nondegenerate()) {
            r.notes.push_back("a 2-dimensional form gives sl(2) only when non-degenerate and alternating");
            return r;
        }
        const auto l = skew_adjoint_algebra(f);
        if (fingerprint(l) == fingerprint(sl<K>(2)) && set_equal_sl2(identity<K>(2))) {
            r.n = 2;
            r.case_label = "non-degenerate alternating, dimension 2";
            r.certainty = SlMatch::Certainty::witnessed;
            r.notes.push_back("L(f) equals the trace-zero matrices and has the fingerprint of sl(2)");
        }
        return r;
    }
    if (!f.is_nondegenerate()) {
        r.notes.push_back("f is degenerate");
        return r;
    }
    const Mat<K> sigma = asymmetry(f);
    const auto split = detail::involution_split(sigma);
    if (!split) {
        r.notes.push_back("f is not a symmetric part orthogonal to a skew part");
        return r;
    }
    const auto [d1, dm1] = *split;
    if (d1 == 0 && n == 2) {
        r.n = 2;
        r.case_label = "skew-symmetric, dimension 2";
        r.certainty = set_equal_sl2(identity<K>(2)) ? SlMatch::Certainty::witnessed : SlMatch::Certainty::pattern;
    } else if (dm1 == 0 && n == 3) {
        r.n = 2;
        r.case_label = "symmetric, dimension 3";
        r.certainty = SlMatch::Certainty::pattern;
        r.notes.push_back("holds for isotropic forms; not checked over this field");
    } else if (dm1 == 0 && n == 6) {
        r.n = 4;
        r.case_label = "symmetric, dimension 6";
        r.certainty = SlMatch::Certainty::pattern;
        r.notes.push_back("holds for suitable forms such as the split one; not checked over this field");
    } else if (d1 == 1 && dm1 == 2) {
        r.n = 2;
        r.case_label = "line orthogonal to a skew plane";
        // In a basis adapted to V_1 (+) V_-1, L(f) is 0 (+) sl(2).
        const auto v1 = kernel_basis(Mat<K>(sigma - identity<K>(n)));
        const auto vm1 = kernel_basis(Mat<K>(sigma + identity<K>(n)));
        std::vector<Vec<K>> cols = v1;
        cols.insert(cols.end(), vm1.begin(), vm1.end());
        const Mat<K> q = columns(cols, n);
        const auto l = skew_adjoint_algebra(BilinearForm<K>(congruence(s, q)));
        bool block = true;
        std::vector<Mat<K>> lower;
        for (const auto& b : l.basis()) {
            if (!b(0, 0).is_zero() || !b(0, 1).is_zero() || !b(0, 2).is_zero() || !b(1, 0).is_zero() || !b(2, 0).is_zero())
                block = false;
            lower.push_back(b.bottomRightCorner(2, 2));
        }
        const bool same = block && l.dim() == 3 &&
                          ambient_span(LieAlgebra<K>::span_of(lower, 2)) == ambient_span(sl<K>(2));
        r.certainty = same ? SlMatch::Certainty::witnessed : SlMatch::Certainty::pattern;
    } else {
        r.notes.push_back("no case of the sl(n) list applies");
    }
    return r;
}

}  // namespace skewlie
