#pragma once

// Exact scalars: rationals backed by GMP and residues modulo a small prime.
//
// Both types behave as Eigen scalars so dense containers can be written as
// Eigen::Matrix<K, Dynamic, Dynamic>. Residues read their modulus from a
// thread-local context installed by FpScope; every computation over GF(p)
// runs inside exactly one such scope.

#include <Eigen/Core>
#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skewlie {

struct FieldDescriptor {
    enum class Kind { rationals, prime_field };

    Kind kind = Kind::rationals;
    std::uint32_t p = 0;  // meaningful iff kind == prime_field

    static FieldDescriptor rationals() { return {}; }
    static FieldDescriptor prime_field(std::uint32_t p);

    std::uint32_t characteristic() const { return kind == Kind::rationals ? 0 : p; }
    bool is_rationals() const { return kind == Kind::rationals; }
    std::string name() const;

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

// Trial-division primality; moduli are desk scale by contract.
bool is_prime(std::uint64_t n);

class Rational {
public:
    Rational() = default;
    template <std::integral I>
    Rational(I k) : v_(static_cast<long>(k)) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    Rational inverse() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

class Fp {
public:
    Fp() = default;
    template <std::integral I>
    Fp(I k) : v_(reduce(static_cast<long long>(k))) {}

    static Fp from_residue(std::uint32_t r) { Fp x; x.v_ = r; return x; }
    static std::uint32_t modulus();

    std::uint32_t residue() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    Fp inverse() const;

    Fp& operator+=(const Fp& o) {
        const std::uint64_t s = std::uint64_t{v_} + o.v_;
        const std::uint32_t p = modulus();
        v_ = static_cast<std::uint32_t>(s >= p ? s - p : s);
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        const std::uint32_t p = modulus();
        v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + p - o.v_);
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        v_ = static_cast<std::uint32_t>((std::uint64_t{v_} * o.v_) % modulus());
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend Fp operator-(const Fp& a) { return Fp{} -= a; }

    friend bool operator==(const Fp&, const Fp&) = default;
    friend auto operator<=>(const Fp&, const Fp&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.v_; }

private:
    static std::uint32_t reduce(long long k);
    std::uint32_t v_ = 0;
};

// Installs the GF(p) modulus for the current thread; nests by restoring the
// previous modulus on destruction.
class FpScope {
public:
    explicit FpScope(std::uint32_t p);
    ~FpScope();
    FpScope(const FpScope&) = delete;
    FpScope& operator=(const FpScope&) = delete;

private:
    std::uint32_t previous_;
};

template <class K>
concept ExactScalar = std::same_as<K, Rational> || std::same_as<K, Fp>;

// Field-level facts for a scalar type, resolved at the call site.
template <ExactScalar K>
std::uint32_t characteristic() {
    if constexpr (std::same_as<K, Rational>) return 0;
    else return Fp::modulus();
}

template <ExactScalar K>
FieldDescriptor current_field() {
    if constexpr (std::same_as<K, Rational>) return FieldDescriptor::rationals();
    else return FieldDescriptor::prime_field(Fp::modulus());
}

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

// Canonical string encodings: "a" or "a/b" (b > 0) for rationals, "k" with
// 0 <= k < p for residues.
std::string to_string(const Rational& x);
std::string to_string(const Fp& x);

// Parses a scalar string. Residue inputs may also be written as any integer
// or a fraction with invertible denominator; they are reduced mod p.
template <ExactScalar K>
K parse_scalar(std::string_view text);
template <>
Rational parse_scalar<Rational>(std::string_view text);
template <>
Fp parse_scalar<Fp>(std::string_view text);

bool is_square(const Rational& x);
bool is_square(const Fp& x);

// Dispatches a generic body on the runtime field: fn.template operator()<K>().
template <class Fn>
decltype(auto) with_field(const FieldDescriptor& field, Fn&& fn) {
    if (field.is_rationals()) return fn.template operator()<Rational>();
    FpScope scope(field.p);
    return fn.template operator()<Fp>();
}

}  // namespace skewlie

namespace Eigen {

template <>
struct NumTraits<skewlie::Rational> : GenericNumTraits<skewlie::Rational> {
    using Real = skewlie::Rational;
    using NonInteger = skewlie::Rational;
    using Literal = skewlie::Rational;
    using Nested = skewlie::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 32
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

template <>
struct NumTraits<skewlie::Fp> : GenericNumTraits<skewlie::Fp> {
    using Real = skewlie::Fp;
    using NonInteger = skewlie::Fp;
    using Literal = skewlie::Fp;
    using Nested = skewlie::Fp;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen
