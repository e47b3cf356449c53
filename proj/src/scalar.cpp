#include "skewlie/scalar.hpp"

#include <charconv>
#include <sstream>

namespace skewlie {

namespace {
thread_local std::uint32_t g_modulus = 0;

bool parse_integer(std::string_view s, mpz_class& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') return false;
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}
}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldDescriptor FieldDescriptor::prime_field(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    if (p >= (1u << 31)) throw std::invalid_argument("modulus must be below 2^31");
    return {Kind::prime_field, p};
}

std::string FieldDescriptor::name() const {
    return is_rationals() ? std::string("Q") : "GF(" + std::to_string(p) + ")";
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("zero denominator");
    v_.canonicalize();
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << to_string(r); }

std::uint32_t Fp::modulus() {
    if (g_modulus == 0) throw std::logic_error("GF(p) arithmetic outside of an FpScope");
    return g_modulus;
}

std::uint32_t Fp::reduce(long long k) {
    const long long p = modulus();
    long long r = k % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

Fp Fp::inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero");
    // extended Euclid on (v, p)
    long long a = v_, b = modulus(), x0 = 1, x1 = 0;
    while (b != 0) {
        const long long q = a / b;
        a -= q * b;
        std::swap(a, b);
        x0 -= q * x1;
        std::swap(x0, x1);
    }
    return Fp(x0);
}

FpScope::FpScope(std::uint32_t p) : previous_(g_modulus) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    g_modulus = p;
}

FpScope::~FpScope() { g_modulus = previous_; }

std::string to_string(const Rational& x) { return x.value().get_str(10); }

std::string to_string(const Fp& x) { return std::to_string(x.residue()); }

template <>
Rational parse_scalar<Rational>(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    mpz_class num, den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer(s, num)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    } else {
        if (!parse_integer(s.substr(0, slash), num) || !parse_integer(s.substr(slash + 1), den))
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        if (den <= 0) throw std::invalid_argument("denominator must be positive in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

template <>
Fp parse_scalar<Fp>(std::string_view text) {
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    mpz_class num, den = 1;
    const bool ok = slash == std::string_view::npos
                        ? parse_integer(s, num)
                        : parse_integer(s.substr(0, slash), num) && parse_integer(s.substr(slash + 1), den);
    if (!ok) throw std::invalid_argument("malformed residue '" + std::string(text) + "'");
    const mpz_class p = Fp::modulus();
    mpz_class n = num % p, d = den % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw std::invalid_argument("denominator not invertible mod p in '" + std::string(text) + "'");
    return Fp::from_residue(static_cast<std::uint32_t>(n.get_ui())) /
           Fp::from_residue(static_cast<std::uint32_t>(d.get_ui()));
}

bool is_square(const Rational& x) {
    if (x.sign() < 0) return false;
    if (x.is_zero()) return true;
    const mpz_class prod = x.num() * x.den();
    return mpz_perfect_square_p(prod.get_mpz_t()) != 0;
}

bool is_square(const Fp& x) {
    const std::uint32_t p = Fp::modulus();
    if (p == 2 || x.is_zero()) return true;
    // Euler criterion
    std::uint64_t result = 1, base = x.residue(), e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result == 1;
}

}  // namespace skewlie
