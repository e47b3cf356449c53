#pragma once

// Square-free decomposition and irreducible factorization.
//
// GF(p): Berlekamp. Q: square-free split, rational roots, then Zassenhaus on
// the remaining square-free parts up to degree kMaxZassenhausDegree.

#include "skewlie/poly.hpp"

#include <stdexcept>
#include <vector>

namespace skewlie {

inline constexpr int kMaxZassenhausDegree = 16;

class Unfactored : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <ExactScalar K>
struct FactorPower {
    Poly<K> base;  // monic
    int multiplicity = 0;
    friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

// Pairs (g_i, i) with monic(p) = prod g_i^i, the g_i square-free and coprime.
std::vector<FactorPower<Rational>> square_free_decomposition(const Poly<Rational>& p);
std::vector<FactorPower<Fp>> square_free_decomposition(const Poly<Fp>& p);

// Monic irreducible factors with multiplicities, sorted by poly_order.
// Throws Unfactored when a square-free part over Q exceeds the degree bound,
// std::invalid_argument for constants.
std::vector<FactorPower<Rational>> factor(const Poly<Rational>& p);
std::vector<FactorPower<Fp>> factor(const Poly<Fp>& p);

// Number of distinct irreducible factors of a square-free polynomial over
// GF(p), from the rank of the Berlekamp matrix.
int berlekamp_rank_count(const Poly<Fp>& f);

bool is_irreducible(const Poly<Fp>& f);
bool is_irreducible(const Poly<Rational>& f);

template <ExactScalar K>
Poly<K> square_free_part(const Poly<K>& p) {
    Poly<K> r = Poly<K>::constant(K(1));
    for (const auto& fp : square_free_decomposition(p)) r *= fp.base;
    return r;
}

template <ExactScalar K>
Poly<K> expand(const std::vector<FactorPower<K>>& fs) {
    Poly<K> r = Poly<K>::constant(K(1));
    for (const auto& f : fs) r *= pow(f.base, static_cast<unsigned>(f.multiplicity));
    return r;
}

// p^e mod m.
template <ExactScalar K>
Poly<K> powmod(Poly<K> base, unsigned long long e, const Poly<K>& m) {
    Poly<K> r = Poly<K>::constant(K(1)) % m;
    base = base % m;
    while (e > 0) {
        if (e & 1ull) r = (r * base) % m;
        e >>= 1ull;
        if (e > 0) base = (base * base) % m;
    }
    return r;
}

}  // namespace skewlie
