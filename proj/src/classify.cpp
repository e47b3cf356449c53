#include "skewlie/classify.hpp"

namespace skewlie {

std::string SummandDescriptor::type_name() const {
    std::string t;
    switch (type) {
        case Type::zero: t = "Type 0"; break;
        case Type::lambda: t = "Type " + lambda; break;
        case Type::one: t = "Type 1"; break;
        case Type::minus_one: t = "Type -1"; break;
    }
    return t;
}

std::string SummandDescriptor::algebra_name() const {
    const std::string p = std::to_string(algebra_param);
    switch (algebra) {
        case Algebra::abelian: return "abelian(" + p + ")";
        case Algebra::gl: return "gl(" + p + ")";
        case Algebra::so: return "so(" + p + ")";
        case Algebra::sp: return "sp(" + p + ")";
    }
    return {};
}

std::string to_string(SplitResult::Status s) {
    switch (s) {
        case SplitResult::Status::reductive: return "reductive";
        case SplitResult::Status::f_zero: return "f_zero";
        case SplitResult::Status::not_reductive: return "not_reductive";
        case SplitResult::Status::undetermined: return "undetermined";
        case SplitResult::Status::unsupported: return "unsupported";
    }
    return {};
}

std::string to_string(SlMatch::Certainty c) {
    switch (c) {
        case SlMatch::Certainty::none: return "none";
        case SlMatch::Certainty::pattern: return "pattern";
        case SlMatch::Certainty::witnessed: return "witnessed";
    }
    return {};
}

}  // namespace skewlie
