#include "skewlie/report.hpp"

#include <sstream>

namespace skewlie {

namespace {

using Json = nlohmann::ordered_json;

std::string verdict(Verdict v) { return std::string(to_string(v)); }

Json fingerprint_json(const FingerprintSummary& fp) {
    Json j;
    j["dim"] = fp.dim;
    j["dim_center"] = fp.dim_center;
    j["dim_derived"] = fp.dim_derived;
    j["derived_series"] = fp.derived_series_dims;
    j["lower_central_series"] = fp.lower_central_dims;
    j["killing_rank"] = fp.killing_rank;
    j["abelian"] = fp.is_abelian;
    j["perfect"] = fp.is_perfect;
    return j;
}

}  // namespace

nlohmann::ordered_json to_json(const SummandDescriptor& s) {
    Json j;
    j["type"] = s.type_name();
    j["shape"] = std::string(1, s.shape);
    j["m"] = s.m;
    if (s.type == SummandDescriptor::Type::lambda) j["lambda"] = s.lambda;
    j["algebra"] = s.algebra_name();
    j["dim"] = s.predicted_dim();
    return j;
}

nlohmann::ordered_json to_json(const CriterionResult& c) {
    return Json{{"verdict", verdict(c.verdict)}, {"reasons", c.reasons}};
}

nlohmann::ordered_json to_json(const SlMatch& m) {
    Json sl;
    sl["matches"] = m.n ? Json("sl(" + std::to_string(*m.n) + ")") : Json("none");
    if (!m.case_label.empty()) sl["case"] = m.case_label;
    sl["certainty"] = to_string(m.certainty);
    sl["notes"] = m.notes;
    return sl;
}

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

std::string join(const std::vector<Index>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return "{" + s + "}";
}

}  // namespace

nlohmann::ordered_json to_json(const Report& r) {
    Json j;
    j["input"] = {{"field", r.field}, {"n", r.n}, {"gram", r.gram}};
    j["radicals"] = {{"left", r.left_radical_dim}, {"right", r.right_radical_dim}, {"radical", r.radical_dim}};
    j["degenerate"] = {{"odd_blocks", r.odd_blocks}, {"even_blocks", r.even_blocks}};
    j["asymmetry_invariant_factors"] = r.asymmetry_invariant_factors;
    j["fingerprint"] = fingerprint_json(r.fingerprint);

    Json v;
    v["reductive"] = {{"computed", verdict(r.reductive)}, {"predicted", verdict(r.predicted_reductive)}};
    if (!r.reductive_witness.empty()) v["reductive"]["witness"] = r.reductive_witness;
    v["semisimple"] = {{"computed", verdict(r.semisimple)},
                       {"criterion", verdict(r.semisimple_criterion.verdict)},
                       {"reasons", r.semisimple_criterion.reasons}};
    v["simple"] = {{"computed", verdict(r.simple)},
                   {"criterion", verdict(r.simple_criterion.verdict)},
                   {"reasons", r.simple_criterion.reasons}};
    v["sl_match"] = to_json(r.sl);
    j["verdicts"] = v;

    Json c;
    c["status"] = r.classification_status;
    c["predicted_dim"] = optional_json(r.predicted_dim);
    c["predicted_abelian"] = optional_json(r.predicted_abelian);
    if (r.summands_applicable) {
        c["summands"] = Json::array();
        for (const auto& s : r.summands) c["summands"].push_back(to_json(s));
    } else {
        c["summands"] = "not-applicable";
    }
    c["non_reductive_patterns"] = r.non_reductive_patterns;
    j["classification"] = c;

    Json x;
    x["status"] = r.crosscheck;
    if (!r.crosscheck_reason.empty()) x["reason"] = r.crosscheck_reason;
    x["checks"] = Json::array();
    for (const auto& item : r.checks)
        x["checks"].push_back({{"name", item.name}, {"predicted", item.predicted}, {"computed", item.computed}, {"ok", item.ok}});
    j["crosscheck"] = x;
    j["notes"] = r.notes;
    return j;
}

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "form of dimension " << r.n << " over " << r.field << "\n";
    os << "radicals: left " << r.left_radical_dim << ", right " << r.right_radical_dim << ", both " << r.radical_dim << "\n";
    if (!r.odd_blocks.empty() || !r.even_blocks.empty())
        os << "degenerate blocks: odd " << join(r.odd_blocks) << ", even " << join(r.even_blocks) << "\n";
    if (!r.asymmetry_invariant_factors.empty()) {
        os << "asymmetry invariant factors:";
        for (const auto& p : r.asymmetry_invariant_factors) os << " [" << p << "]";
        os << "\n";
    }
    const auto& fp = r.fingerprint;
    os << "L(f): dim " << fp.dim << ", center " << fp.dim_center << ", derived " << fp.dim_derived << ", Killing rank "
       << fp.killing_rank << (fp.is_abelian ? ", abelian" : "") << "\n";
    os << "reductive: " << to_string(r.reductive) << " (predicted " << to_string(r.predicted_reductive) << ")\n";
    if (!r.reductive_witness.empty()) os << "  " << r.reductive_witness << "\n";
    os << "semisimple: " << to_string(r.semisimple) << " (criterion " << to_string(r.semisimple_criterion.verdict) << ")\n";
    os << "simple: " << to_string(r.simple) << " (criterion " << to_string(r.simple_criterion.verdict) << ")\n";
    os << "sl match: " << (r.sl.n ? "sl(" + std::to_string(*r.sl.n) + ")" : std::string("none"));
    if (r.sl.n) os << ", " << r.sl.case_label << ", " << to_string(r.sl.certainty);
    os << "\n";
    os << "classification: " << r.classification_status;
    if (r.predicted_dim) os << ", predicted dim " << *r.predicted_dim;
    os << "\n";
    for (const auto& s : r.summands) os << "  " << s.type_name() << " " << s.shape << " (m = " << s.m << ") -> " << s.algebra_name() << "\n";
    for (const auto& p : r.non_reductive_patterns) os << "  not reductive: " << p << "\n";
    os << "crosscheck: " << r.crosscheck;
    if (!r.crosscheck_reason.empty()) os << " (" << r.crosscheck_reason << ")";
    os << "\n";
    for (const auto& c : r.checks)
        os << "  " << (c.ok ? "ok   " : "FAIL ") << c.name << ": predicted " << c.predicted << ", computed " << c.computed << "\n";
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

}  // namespace skewlie
