#pragma once

#include "skewlie/matrix.hpp"
#include "skewlie/poly.hpp"

#include <cstdint>
#include <vector>

namespace testing_support {

using namespace skewlie;

// Small deterministic generator for the hand-rolled property tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

private:
    std::uint64_t s_;
};

template <ExactScalar K>
Poly<K> random_poly(Rng& rng, int degree, long bound, bool monic_lead = false) {
    std::vector<K> c;
    for (int i = 0; i <= degree; ++i) c.push_back(K(rng.range(-bound, bound)));
    if (monic_lead) c.back() = K(1);
    else if (c.back().is_zero()) c.back() = K(1);
    return Poly<K>(std::move(c));
}

template <ExactScalar K>
Mat<K> random_matrix(Rng& rng, Index r, Index c, long bound) {
    Mat<K> m(r, c);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j) m(i, j) = K(rng.range(-bound, bound));
    return m;
}

template <ExactScalar K>
Mat<K> random_invertible(Rng& rng, Index n, long bound) {
    while (true) {
        Mat<K> m = random_matrix<K>(rng, n, n, bound);
        if (is_invertible(m)) return m;
    }
}

template <ExactScalar K>
Mat<K> from_ints(std::initializer_list<std::initializer_list<long>> rows) {
    const Index r = static_cast<Index>(rows.size());
    const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
    Mat<K> m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (long v : row) m(i, j++) = K(v);
        ++i;
    }
    return m;
}

template <ExactScalar K>
Poly<K> poly_of(std::initializer_list<long> coeffs) {
    std::vector<K> c;
    for (long v : coeffs) c.push_back(K(v));
    return Poly<K>(std::move(c));
}

}  // namespace testing_support
