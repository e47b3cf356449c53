#include "skewlie/factor.hpp"

#include <algorithm>
#include <numeric>

namespace skewlie {

namespace {

using ZPoly = std::vector<mpz_class>;  // constant term first, trimmed

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    ztrim(a);
    return a;
}

ZPoly zadd_scaled(ZPoly a, const ZPoly& b, const mpz_class& s) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
    ztrim(a);
    return a;
}

mpz_class content(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) g = gcd(g, c);
    return g;
}

ZPoly primitive(ZPoly a) {
    if (a.empty()) return a;
    mpz_class g = content(a);
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
    return a;
}

// Nonnegative residues mod m.
ZPoly zmod(ZPoly a, const mpz_class& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    ztrim(a);
    return a;
}

// Symmetric residues in (-m/2, m/2].
ZPoly zsym(ZPoly a, const mpz_class& m) {
    const mpz_class half = m / 2;
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
        if (c > half) c -= m;
    }
    ztrim(a);
    return a;
}

ZPoly from_rational(const Poly<Rational>& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, c.den());
    ZPoly z;
    for (const auto& c : p.coeffs()) z.push_back(c.num() * (l / c.den()));
    return primitive(z);
}

Poly<Rational> to_rational(const ZPoly& z) {
    std::vector<Rational> c;
    for (const auto& v : z) c.emplace_back(v, mpz_class(1));
    return Poly<Rational>(std::move(c));
}

// Requires an active FpScope.
Poly<Fp> to_fp(const ZPoly& z) {
    const mpz_class p = Fp::modulus();
    std::vector<Fp> c;
    for (const auto& v : z) {
        mpz_class r = v % p;
        if (r < 0) r += p;
        c.push_back(Fp::from_residue(static_cast<std::uint32_t>(r.get_ui())));
    }
    return Poly<Fp>(std::move(c));
}

ZPoly from_fp(const Poly<Fp>& f) {
    ZPoly z;
    for (const auto& c : f.coeffs()) z.emplace_back(static_cast<unsigned long>(c.residue()));
    return z;
}

// s, t with s a + t b = 1 for coprime a, b over GF(p).
std::pair<Poly<Fp>, Poly<Fp>> bezout(const Poly<Fp>& a, const Poly<Fp>& b) {
    Poly<Fp> r0 = a, r1 = b;
    Poly<Fp> s0 = Poly<Fp>::constant(Fp(1)), s1;
    Poly<Fp> t0, t1 = Poly<Fp>::constant(Fp(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<Fp> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const Fp inv = Fp(1) / r0.lead();
    return {s0 * inv, t0 * inv};
}

// Lifts f = g h (mod p) with g monic to f = G H (mod p^k). f is any integer
// representative; the returned G, H are reduced mod p^k.
std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& f, ZPoly g, ZPoly h, std::uint32_t p, int k) {
    Poly<Fp> gp = to_fp(g), hp = to_fp(h);
    const auto [s, t] = bezout(gp, hp);  // s g + t h = 1
    mpz_class pk = p;
    for (int step = 1; step < k; ++step) {
        ZPoly e = zsub(f, zmul(g, h));
        for (auto& c : e) c /= pk;  // exact by construction
        const Poly<Fp> ep = to_fp(e);
        auto [q, dg] = divmod(t * ep, gp);
        const Poly<Fp> dh = s * ep + hp * q;
        g = zadd_scaled(g, from_fp(dg), pk);
        h = zadd_scaled(h, from_fp(dh), pk);
        pk *= p;
        g = zmod(g, pk);
        h = zmod(h, pk);
    }
    return {g, h};
}

// f square-free primitive over Z with f mod p square-free and lc(f) a unit
// mod p; returns monic lifts of the modular irreducible factors mod p^k.
std::vector<ZPoly> multifactor_lift(const ZPoly& f, std::vector<Poly<Fp>> mods, std::uint32_t p, int k) {
    mpz_class pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    std::vector<ZPoly> out;
    ZPoly cur = zmod(f, pk);
    for (std::size_t i = 0; i + 1 < mods.size(); ++i) {
        Poly<Fp> rest = to_fp(ZPoly{cur.back()});
        for (std::size_t j = i + 1; j < mods.size(); ++j) rest *= mods[j];
        auto [g, h] = hensel_pair(cur, from_fp(mods[i]), from_fp(rest), p, k);
        out.push_back(std::move(g));
        cur = std::move(h);
    }
    mpz_class inv;
    mpz_class lc = cur.back();
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
    for (auto& c : cur) c *= inv;
    out.push_back(zmod(cur, pk));
    return out;
}

bool divides(const ZPoly& d, const ZPoly& f) {
    return (to_rational(f) % to_rational(d)).is_zero();
}

// Irreducible factors over Z of a primitive square-free f.
std::vector<ZPoly> zassenhaus(ZPoly f) {
    if (zdeg(f) <= 1) return {f};
    if (zdeg(f) > kMaxZassenhausDegree)
        throw Unfactored("square-free part of degree " + std::to_string(zdeg(f)) + " exceeds the factorization bound");

    std::uint32_t p = 3;
    std::vector<Poly<Fp>> mods;
    for (;; p += 2) {
        if (!is_prime(p) || f.back() % p == 0) continue;
        FpScope scope(p);
        const Poly<Fp> fp = to_fp(f);
        if (gcd(fp, derivative(fp)).degree() > 0) continue;
        mods.clear();
        for (const auto& fac : factor(fp)) mods.push_back(fac.base);
        break;
    }
    if (mods.size() == 1) return {f};

    // Coefficient bound for lc * (any factor): |lc| 2^n ||f||_2.
    mpz_class norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    mpz_class bound = sqrt(norm2) + 1;
    bound *= abs(f.back());
    bound <<= static_cast<mp_bitcnt_t>(zdeg(f));
    int k = 1;
    mpz_class pk = p;
    while (pk <= 2 * bound) {
        pk *= p;
        ++k;
    }

    std::vector<ZPoly> lifted;
    {
        FpScope scope(p);
        lifted = multifactor_lift(f, mods, p, k);
    }

    std::vector<ZPoly> found;
    std::size_t s = 1;
    while (2 * s <= lifted.size()) {
        bool hit = false;
        std::vector<std::size_t> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            ZPoly g{f.back()};
            for (std::size_t i : idx) g = zmod(zmul(g, lifted[i]), pk);
            g = primitive(zsym(g, pk));
            if (divides(g, f)) {
                found.push_back(g);
                f = primitive(from_rational(to_rational(f) / to_rational(g)));
                for (std::size_t j = idx.size(); j-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[j]));
                hit = true;
                break;
            }
            // next combination
            std::size_t pos = s;
            while (pos > 0 && idx[pos - 1] == lifted.size() - s + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!hit) ++s;
    }
    if (zdeg(f) > 0) found.push_back(f);
    return found;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    return out;
}

// Strips rational roots from a primitive square-free f; candidate search is
// skipped when the end coefficients are too large to enumerate divisors.
std::vector<ZPoly> strip_rational_roots(ZPoly& f) {
    std::vector<ZPoly> lin;
    if (!f.empty() && f.front() == 0) {
        lin.push_back({0, 1});
        f.erase(f.begin());
    }
    if (zdeg(f) < 1) return lin;
    static const mpz_class limit("1000000000000");
    if (abs(f.front()) > limit || abs(f.back()) > limit) return lin;
    const auto nums = positive_divisors(f.front());
    const auto dens = positive_divisors(f.back());
    for (const auto& a : nums)
        for (const auto& b : dens) {
            if (gcd(a, b) != 1) continue;
            for (int sgn : {1, -1}) {
                if (zdeg(f) < 1) return lin;
                const ZPoly cand{-sgn * a, b};
                if (divides(cand, f)) {
                    lin.push_back(cand);
                    f = primitive(from_rational(to_rational(f) / to_rational(cand)));
                }
            }
        }
    return lin;
}

}  // namespace

std::vector<FactorPower<Rational>> square_free_decomposition(const Poly<Rational>& p) {
    if (p.is_zero()) throw std::invalid_argument("square-free decomposition of zero");
    std::vector<FactorPower<Rational>> out;
    Poly<Rational> f = monic(p);
    if (f.degree() < 1) return out;
    Poly<Rational> c = gcd(f, derivative(f));
    Poly<Rational> w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        Poly<Rational> y = gcd(w, c);
        Poly<Rational> z = w / y;
        if (z.degree() > 0) out.push_back({monic(z), i});
        ++i;
        w = y;
        c = c / y;
    }
    return out;
}

std::vector<FactorPower<Rational>> factor(const Poly<Rational>& p) {
    if (p.degree() < 1) throw std::invalid_argument("factorization of a constant polynomial");
    std::vector<FactorPower<Rational>> out;
    for (const auto& sf : square_free_decomposition(p)) {
        ZPoly z = from_rational(sf.base);
        std::vector<ZPoly> parts = strip_rational_roots(z);
        if (zdeg(z) > 0)
            for (auto& g : zassenhaus(z)) parts.push_back(std::move(g));
        for (const auto& g : parts) out.push_back({monic(to_rational(g)), sf.multiplicity});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const auto c = poly_order(a.base, b.base);
        return c != 0 ? c < 0 : a.multiplicity < b.multiplicity;
    });
    return out;
}

bool is_irreducible(const Poly<Rational>& f) {
    if (f.degree() < 1) return false;
    const auto fs = factor(f);
    return fs.size() == 1 && fs.front().multiplicity == 1;
}

}  // namespace skewlie
