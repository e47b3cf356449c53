#pragma once

// JSON input documents, planted-instance specs and the seeded generator.
//
// Input:   {"field": {"kind": "Q"} | {"kind": "GF", "p": 7}, "gram": [["0","1"],["-1","0"]]}
// Planted: {"field": ..., "seed": 42, "bound": 2,
//           "blocks": [{"kind": "J", "n": 3}, {"kind": "A", "n": 2, "lambda": "1"}, ...]}
// Block kinds: J, A, Gamma, identity, skew (standard skew of size 2n), zero.

#include "skewlie/bilinear_form.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewlie {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9e3779b97f4a7c15, then
// two xor-shift-multiply rounds. Bounded draws use next() % width.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // Uniform-ish integer in [lo, hi].
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

private:
    std::uint64_t state_;
};

struct InputDocument {
    FieldDescriptor field;
    std::vector<std::vector<std::string>> gram;
};

InputDocument parse_input(const std::string& text);
InputDocument read_input(const std::filesystem::path& path);
nlohmann::ordered_json to_json(const InputDocument& doc);
FieldDescriptor parse_field(const nlohmann::json& j, const std::string& where);

template <ExactScalar K>
BilinearForm<K> to_form(const InputDocument& doc) {
    const Index n = static_cast<Index>(doc.gram.size());
    Mat<K> g(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            try {
                g(i, j) = parse_scalar<K>(doc.gram[i][j]);
            } catch (const std::exception& e) {
                throw InputError("gram[" + std::to_string(i) + "][" + std::to_string(j) + "]: " + e.what());
            }
        }
    return BilinearForm<K>(std::move(g));
}

struct PlantedBlock {
    std::string kind;
    Index n = 0;
    std::string lambda;  // A blocks only
};

struct PlantedSpec {
    FieldDescriptor field;
    std::uint64_t seed = 0;
    long bound = 2;
    std::vector<PlantedBlock> blocks;
};

PlantedSpec parse_planted_spec(const std::string& text);

template <ExactScalar K>
CanonicalBlock<K> to_canonical(const PlantedBlock& b) {
    using Kd = typename CanonicalBlock<K>::Kind;
    CanonicalBlock<K> cb;
    cb.n = b.n;
    if (b.kind == "J") cb.kind = Kd::J;
    else if (b.kind == "zero") cb.kind = Kd::zero;
    else if (b.kind == "Gamma") cb.kind = Kd::Gamma;
    else if (b.kind == "identity") cb.kind = Kd::identity;
    else if (b.kind == "skew") cb.kind = Kd::standard_skew;
    else if (b.kind == "A") {
        cb.kind = Kd::A;
        cb.lambda = parse_scalar<K>(b.lambda);
    } else {
        throw InputError("unknown block kind '" + b.kind + "'");
    }
    return cb;
}

template <ExactScalar K>
Mat<K> planted_gram(const std::vector<PlantedBlock>& blocks) {
    std::vector<CanonicalBlock<K>> cbs;
    for (const auto& b : blocks) cbs.push_back(to_canonical<K>(b));
    return make_canonical(cbs);
}

struct PlantedInstance {
    InputDocument document;
    nlohmann::ordered_json truth;
};

// Gram matrix P' (+blocks) P with P drawn entrywise from [-bound, bound]
// until invertible. The truth sidecar records the blocks, the expected
// degenerate multisets, the non-degenerate dimension and P itself.
PlantedInstance generate(const PlantedSpec& spec);

}  // namespace skewlie
