#include "skewlie/factor.hpp"
#include "skewlie/matrix.hpp"

#include <algorithm>
#include <random>

namespace skewlie {

namespace {

// For f with f' = 0 over GF(p): the g with g^p = f.
Poly<Fp> pth_root(const Poly<Fp>& f) {
    const std::uint32_t p = Fp::modulus();
    std::vector<Fp> c;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
    return Poly<Fp>(std::move(c));
}

void square_free_into(const Poly<Fp>& f, int scale, std::vector<FactorPower<Fp>>& out) {
    if (f.degree() < 1) return;
    const Poly<Fp> d = derivative(f);
    if (d.is_zero()) {
        square_free_into(pth_root(f), scale * static_cast<int>(Fp::modulus()), out);
        return;
    }
    Poly<Fp> c = gcd(f, d);
    Poly<Fp> w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        Poly<Fp> y = gcd(w, c);
        Poly<Fp> z = w / y;
        if (z.degree() > 0) out.push_back({monic(z), i * scale});
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) square_free_into(pth_root(c), scale * static_cast<int>(Fp::modulus()), out);
}

std::vector<Poly<Fp>> berlekamp_basis(const Poly<Fp>& f) {
    const int n = f.degree();
    const std::uint32_t p = Fp::modulus();
    const Poly<Fp> xp = powmod(Poly<Fp>::x(), p, f);
    Mat<Fp> b = zeros<Fp>(n, n);
    Poly<Fp> cur = Poly<Fp>::constant(Fp(1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) b(j, i) = cur.coeff(j);
        cur = (cur * xp) % f;
    }
    b -= identity<Fp>(n);
    std::vector<Poly<Fp>> out;
    for (const auto& v : kernel_basis(b)) out.emplace_back(std::vector<Fp>(v.data(), v.data() + v.size()));
    return out;
}

// Monic irreducible factors of a monic square-free f.
std::vector<Poly<Fp>> berlekamp_split(const Poly<Fp>& f) {
    if (f.degree() <= 1) return {f};
    const auto basis = berlekamp_basis(f);
    const std::size_t r = basis.size();
    std::vector<Poly<Fp>> parts{f};
    if (r == 1) return parts;
    const std::uint32_t p = Fp::modulus();

    if (p <= 1024) {
        for (const auto& v : basis) {
            if (v.degree() < 1) continue;
            std::vector<Poly<Fp>> next;
            for (const auto& h : parts) {
                if (h.degree() <= 1) {
                    next.push_back(h);
                    continue;
                }
                int covered = 0;
                for (std::uint32_t s = 0; s < p && covered < h.degree(); ++s) {
                    Poly<Fp> g = gcd(h, v - Poly<Fp>::constant(Fp::from_residue(s)));
                    if (g.degree() > 0) {
                        next.push_back(g);
                        covered += g.degree();
                    }
                }
            }
            parts = std::move(next);
            if (parts.size() == r) break;
        }
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
        while (parts.size() < r) {
            Poly<Fp> a;
            for (const auto& v : basis) a += v * Fp::from_residue(coef(rng));
            std::vector<Poly<Fp>> next;
            for (const auto& h : parts) {
                if (h.degree() <= 1) {
                    next.push_back(h);
                    continue;
                }
                Poly<Fp> t = powmod(a, (p - 1) / 2, h) - Poly<Fp>::constant(Fp(1));
                Poly<Fp> g = t.is_zero() ? h : gcd(h, t);
                if (g.degree() > 0 && g.degree() < h.degree()) {
                    next.push_back(g);
                    next.push_back(monic(h / g));
                } else {
                    next.push_back(h);
                }
            }
            parts = std::move(next);
        }
    }
    return parts;
}

}  // namespace

std::vector<FactorPower<Fp>> square_free_decomposition(const Poly<Fp>& p) {
    if (p.is_zero()) throw std::invalid_argument("square-free decomposition of zero");
    std::vector<FactorPower<Fp>> out;
    square_free_into(monic(p), 1, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.multiplicity < b.multiplicity; });
    return out;
}

std::vector<FactorPower<Fp>> factor(const Poly<Fp>& p) {
    if (p.degree() < 1) throw std::invalid_argument("factorization of a constant polynomial");
    std::vector<FactorPower<Fp>> out;
    for (const auto& sf : square_free_decomposition(p))
        for (auto& g : berlekamp_split(sf.base)) out.push_back({monic(g), sf.multiplicity});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const auto c = poly_order(a.base, b.base);
        return c != 0 ? c < 0 : a.multiplicity < b.multiplicity;
    });
    return out;
}

int berlekamp_rank_count(const Poly<Fp>& f) {
    if (f.degree() < 1) return 0;
    return static_cast<int>(berlekamp_basis(monic(f)).size());
}

bool is_irreducible(const Poly<Fp>& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    if (gcd(f, derivative(f)).degree() > 0) return false;
    return berlekamp_rank_count(f) == 1;
}

}  // namespace skewlie
