#pragma once

// Dense univariate polynomials over an exact scalar, constant term first.

#include "skewlie/scalar.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewlie {

template <ExactScalar K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const K& a) { return Poly(std::vector<K>{a}); }
    static Poly monomial(const K& a, std::size_t k) {
        std::vector<K> c(k + 1, K(0));
        c[k] = a;
        return Poly(std::move(c));
    }
    static Poly x() { return monomial(K(1), 1); }
    // X - a
    static Poly linear(const K& a) { return Poly({-a, K(1)}); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const K& lead() const { return c_.back(); }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const std::vector<K>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    K operator()(const K& x) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const K& a) {
        for (auto& v : c_) v *= a;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= K(-1); }
    friend Poly operator*(Poly a, const K& s) { return a *= s; }
    friend Poly operator*(const K& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly&, const Poly&) = default;

    // Quotient and remainder; divisor must be nonzero.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        if (a.degree() < b.degree()) return {Poly{}, a};
        std::vector<K> r = a.c_;
        std::vector<K> q(a.c_.size() - b.c_.size() + 1, K(0));
        const K inv = K(1) / b.lead();
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t k = q.size(); k-- > 0;) {
            const K t = r[k + db] * inv;
            q[k] = t;
            if (t.is_zero()) continue;
            for (std::size_t j = 0; j <= db; ++j) r[k + j] -= t * b.c_[j];
        }
        r.resize(db);
        return {Poly(std::move(q)), Poly(std::move(r))};
    }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

template <ExactScalar K>
Poly<K> monic(Poly<K> p) {
    if (p.is_zero()) return p;
    return p * (K(1) / p.lead());
}

template <ExactScalar K>
Poly<K> derivative(const Poly<K>& p) {
    if (p.degree() < 1) return {};
    std::vector<K> d(p.coeffs().size() - 1, K(0));
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) d[i - 1] = K(static_cast<long long>(i)) * p.coeffs()[i];
    return Poly<K>(std::move(d));
}

template <ExactScalar K>
Poly<K> pow(Poly<K> base, unsigned e) {
    Poly<K> r = Poly<K>::constant(K(1));
    while (e > 0) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return r;
}

// Monic gcd. Both zero is an error.
template <ExactScalar K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

template <ExactScalar K>
Poly<K> lcm(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return monic((a * b) / gcd(a, b));
}

// X^deg(p) p(1/X): the coefficient reversal a_0 X^k + ... + a_k.
template <ExactScalar K>
Poly<K> adjoint(const Poly<K>& p) {
    if (p.is_zero()) throw std::invalid_argument("adjoint of the zero polynomial");
    std::vector<K> c(p.coeffs().rbegin(), p.coeffs().rend());
    return Poly<K>(std::move(c));
}

// p and q are associates (equal up to a nonzero scalar).
template <ExactScalar K>
bool associates(const Poly<K>& p, const Poly<K>& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    return monic(p) == monic(q);
}

// Deterministic total order: degree, then coefficients from the leading term down.
template <ExactScalar K>
std::strong_ordering poly_order(const Poly<K>& a, const Poly<K>& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (int i = a.degree(); i >= 0; --i) {
        const auto& x = a.coeffs()[i];
        const auto& y = b.coeffs()[i];
        if (x == y) continue;
        return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

template <ExactScalar K>
std::string to_string(const Poly<K>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const K& a = p.coeffs()[i];
        if (a.is_zero()) continue;
        std::string s = to_string(a);
        bool negative = false;
        if constexpr (std::same_as<K, Rational>) {
            if (a.sign() < 0) {
                negative = true;
                s = to_string(-a);
            }
        }
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << "-";
        first = false;
        const bool unit = s == "1";
        if (i == 0) os << s;
        else {
            if (!unit) os << s << "*";
            os << "X";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace skewlie
