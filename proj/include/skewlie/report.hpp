#pragma once

// End-to-end analysis of one form: direct computations on L(f), the
// predictions from classify.hpp, and an exact comparison of the two.

#include "skewlie/classify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace skewlie {

struct FingerprintSummary {
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

    friend bool operator==(const FingerprintSummary&, const FingerprintSummary&) = default;
};

template <ExactScalar K>
FingerprintSummary summarize(const Fingerprint<K>& fp) {
    return {fp.dim,        fp.dim_center, fp.dim_derived, fp.derived_series_dims, fp.lower_central_dims, fp.killing_rank,
            fp.is_abelian, fp.is_perfect, fp.reductive,   fp.semisimple,          fp.simple};
}

struct CrossCheckItem {
    std::string name;
    std::string predicted;
    std::string computed;
    bool ok = true;
};

struct Report {
    std::string field;
    Index n = 0;
    std::vector<std::vector<std::string>> gram;

    Index left_radical_dim = 0;
    Index right_radical_dim = 0;
    Index radical_dim = 0;
    std::vector<Index> odd_blocks;
    std::vector<Index> even_blocks;
    std::vector<std::string> asymmetry_invariant_factors;  // of the non-degenerate part

    FingerprintSummary fingerprint;

    Verdict reductive = Verdict::undetermined;
    std::string reductive_witness;
    Verdict semisimple = Verdict::undetermined;
    CriterionResult semisimple_criterion;
    Verdict simple = Verdict::undetermined;
    CriterionResult simple_criterion;
    SlMatch sl;

    std::string classification_status;
    bool summands_applicable = false;
    std::vector<SummandDescriptor> summands;
    std::optional<Index> predicted_dim;
    std::optional<bool> predicted_abelian;
    Verdict predicted_reductive = Verdict::undetermined;
    std::vector<std::string> non_reductive_patterns;

    std::string crosscheck;  // pass | fail | skipped
    std::string crosscheck_reason;
    std::vector<CrossCheckItem> checks;
    std::vector<std::string> notes;

    bool failed() const { return crosscheck == "fail"; }
};

nlohmann::ordered_json to_json(const Report& r);
nlohmann::ordered_json to_json(const SummandDescriptor& s);
nlohmann::ordered_json to_json(const CriterionResult& c);
nlohmann::ordered_json to_json(const SlMatch& m);
std::string render_text(const Report& r);

// Fingerprint comparisons are skipped above this predicted dimension.
inline constexpr Index kFingerprintCompareLimit = 64;

namespace detail {

// Subspaces of V preserved by every element of L(f): the two radicals and,
// for non-degenerate f, kernels of powers of the prime factors of sigma.
template <ExactScalar K>
std::vector<RowSpace<K>> form_invariant_subspaces(const BilinearForm<K>& f) {
    const Index n = f.dim();
    std::vector<RowSpace<K>> out;
    const Radicals<K> rad = radicals(f);
    for (const auto* vs : {&rad.left, &rad.right})
        if (!vs->empty() && static_cast<Index>(vs->size()) < n) out.push_back(RowSpace<K>::span(*vs, n));
    if (!f.is_nondegenerate()) return out;
    const Mat<K> sigma = asymmetry(f);
    const auto st = operator_structure(sigma);
    if (st.unfactored) return out;
    for (const auto& ed : st.elementary_divisors)
        for (int k = 1; k <= ed.multiplicity; ++k) {
            const auto ker = kernel_basis(evaluate(pow(ed.base, static_cast<unsigned>(k)), sigma));
            if (!ker.empty() && static_cast<Index>(ker.size()) < n) out.push_back(RowSpace<K>::span(ker, n));
        }
    return out;
}

// The one classical algebra L(f) should be, if the prediction names one.
template <ExactScalar K>
std::optional<LieAlgebra<K>> predicted_model(const SplitResult& sr, Index n) {
    using A = SummandDescriptor::Algebra;
    if (sr.status == SplitResult::Status::f_zero) return gl<K>(n);
    if (sr.status != SplitResult::Status::reductive || sr.summands.size() != 1) return std::nullopt;
    const auto& s = sr.summands[0];
    switch (s.algebra) {
        case A::gl: return gl<K>(s.algebra_param);
        case A::so: return so<K>(s.algebra_param);
        case A::sp: return sp<K>(s.algebra_param / 2);
        case A::abelian: return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace detail

template <ExactScalar K>
Report crosscheck(const BilinearForm<K>& f) {
    Report r;
    r.field = current_field<K>().name();
    r.n = f.dim();
    const Mat<K>& s = f.gram();
    for (Index i = 0; i < r.n; ++i) {
        r.gram.emplace_back();
        for (Index j = 0; j < r.n; ++j) r.gram.back().push_back(to_string(s(i, j)));
    }
    const Radicals<K> rad = radicals(f);
    r.left_radical_dim = static_cast<Index>(rad.left.size());
    r.right_radical_dim = static_cast<Index>(rad.right.size());
    r.radical_dim = static_cast<Index>(rad.radical.size());

    const DegenerateStructure<K> ds = degenerate_structure(f);
    r.odd_blocks = ds.odd_blocks;
    r.even_blocks = ds.even_blocks;
    if (ds.ndeg_gram.rows() > 0)
        for (const auto& p : invariant_factors(asymmetry(BilinearForm<K>(ds.ndeg_gram))))
            r.asymmetry_invariant_factors.push_back(to_string(p));

    const auto l = skew_adjoint_algebra(f);
    const auto extra = detail::form_invariant_subspaces(f);
    r.fingerprint = summarize(fingerprint(l, extra));
    r.reductive = r.fingerprint.reductive;
    r.semisimple = r.fingerprint.semisimple;
    r.simple = r.fingerprint.simple;
    if (r.reductive == Verdict::no) {
        if (characteristic<K>() == 0) {
            const auto radl = radical_char0(l);
            r.reductive_witness = "solvable radical of dimension " + std::to_string(radl.dim()) +
                                  " is not contained in the center of dimension " + std::to_string(r.fingerprint.dim_center);
        } else if (const auto w = find_noncentral_solvable_ideal(l, extra)) {
            r.reductive_witness = "non-central solvable ideal of dimension " + std::to_string(w->ideal.dim()) + " (" + w->origin + ")";
        }
    } else if (r.reductive == Verdict::undetermined) {
        r.notes.push_back("no non-central solvable ideal found and no decisive certificate for reductivity");
    }

    r.semisimple_criterion = skewlie::semisimple_criterion(f);
    r.simple_criterion = skewlie::simple_criterion(f);
    r.sl = sl_match(f);

    const SplitResult sr = classify_split(f);
    r.classification_status = to_string(sr.status);
    r.summands_applicable = sr.status == SplitResult::Status::reductive;
    r.summands = sr.summands;
    r.predicted_dim = sr.predicted_dim;
    r.predicted_abelian = sr.predicted_abelian;
    r.predicted_reductive = sr.predicted_reductive;
    for (const auto& p : sr.pieces)
        if (!p.pattern.empty()) r.non_reductive_patterns.push_back(p.label + ": " + p.pattern);
    r.notes.insert(r.notes.end(), sr.notes.begin(), sr.notes.end());

    auto check = [&](std::string name, std::string predicted, std::string computed) {
        const bool ok = predicted == computed;
        r.checks.push_back({std::move(name), std::move(predicted), std::move(computed), ok});
    };
    if (sr.predicted_dim) check("dimension", std::to_string(*sr.predicted_dim), std::to_string(l.dim()));
    if (sr.predicted_abelian) check("abelian", *sr.predicted_abelian ? "yes" : "no", r.fingerprint.is_abelian ? "yes" : "no");
    if (sr.predicted_reductive != Verdict::undetermined && r.reductive != Verdict::undetermined)
        check("reductive", std::string(to_string(sr.predicted_reductive)), std::string(to_string(r.reductive)));
    if (characteristic<K>() == 0) {
        // Both criteria are stated for characteristic 0 here; in characteristic
        // p the Lie-side verdicts answer a different question.
        if (r.semisimple != Verdict::undetermined)
            check("semisimple", std::string(to_string(r.semisimple_criterion.verdict)), std::string(to_string(r.semisimple)));
        if (r.simple != Verdict::undetermined)
            check("simple", std::string(to_string(r.simple_criterion.verdict)), std::string(to_string(r.simple)));
    }
    if (ds.odd_blocks.empty() && !ds.even_blocks.empty() && ds.ndeg_gram.rows() > 0) {
        Mat<K> even(0, 0);
        for (Index b : ds.even_blocks) even = direct_sum(even, gram_J<K>(b));
        const Index parts = skew_adjoint_algebra(BilinearForm<K>(even)).dim() +
                            skew_adjoint_algebra(BilinearForm<K>(ds.ndeg_gram)).dim();
        check("degenerate and non-degenerate parts", std::to_string(parts), std::to_string(l.dim()));
    }
    if (sr.predicted_dim.value_or(r.n * r.n) <= kFingerprintCompareLimit) {
        if (const auto model = detail::predicted_model<K>(sr, r.n)) {
            const bool same = summarize(fingerprint(*model)) == r.fingerprint;
            check("fingerprint", model->name(), same ? model->name() : "different fingerprint");
        }
    } else if (sr.status == SplitResult::Status::f_zero || sr.summands.size() == 1) {
        r.notes.push_back("fingerprint comparison skipped above dimension " + std::to_string(kFingerprintCompareLimit));
    }
    if (r.sl.certainty == SlMatch::Certainty::witnessed && r.sl.n) {
        const auto model = sl<K>(*r.sl.n);
        const bool same = summarize(fingerprint(model)) == r.fingerprint;
        check("sl fingerprint", model.name(), same ? model.name() : "different fingerprint");
    }

    if (r.checks.empty()) {
        r.crosscheck = "skipped";
        r.crosscheck_reason = sr.status == SplitResult::Status::unsupported
                                  ? "no prediction in characteristic 2"
                                  : "no quantity has both a prediction and a decided computation";
    } else {
        const bool ok = std::all_of(r.checks.begin(), r.checks.end(), [](const CrossCheckItem& c) { return c.ok; });
        r.crosscheck = ok ? "pass" : "fail";
    }
    return r;
}

}  // namespace skewlie
