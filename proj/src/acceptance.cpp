#include "skewlie/acceptance.hpp"

#include "skewlie/classify.hpp"
#include "skewlie/lie_witness.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace skewlie {

namespace {

// Thrown inside a criterion to stop at the first failing case.
struct CaseFailure {
    std::string what;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CaseFailure{what};
}

PlantedBlock pb(std::string kind, Index n, std::string lambda = {}) { return {std::move(kind), n, std::move(lambda)}; }

Index total_dim(const std::vector<PlantedBlock>& blocks) {
    Index d = 0;
    for (const auto& b : blocks) d += (b.kind == "A" || b.kind == "skew") ? 2 * b.n : b.n;
    return d;
}

template <ExactScalar K>
BilinearForm<K> form_of(const std::vector<PlantedBlock>& blocks) {
    return BilinearForm<K>(planted_gram<K>(blocks));
}

template <ExactScalar K>
Mat<K> random_matrix(SplitMix64& rng, Index r, Index c, long bound) {
    Mat<K> m(r, c);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j) m(i, j) = K(rng.range(-bound, bound));
    return m;
}

template <ExactScalar K>
Mat<K> random_invertible(SplitMix64& rng, Index n, long bound) {
    while (true) {
        Mat<K> m = random_matrix<K>(rng, n, n, bound);
        if (is_invertible(m)) return m;
    }
}

// P T P^{-1} with T upper triangular carrying the given diagonal.
template <ExactScalar K>
Mat<K> with_spectrum(SplitMix64& rng, const std::vector<K>& eig) {
    const Index n = static_cast<Index>(eig.size());
    Mat<K> t = zeros<K>(n, n);
    for (Index i = 0; i < n; ++i) {
        t(i, i) = eig[static_cast<std::size_t>(i)];
        for (Index j = i + 1; j < n; ++j) t(i, j) = K(rng.range(-2, 2));
    }
    const Mat<K> p = random_invertible<K>(rng, n, 3);
    return mul(mul(p, t), inverse(p));
}

std::string describe(const std::vector<PlantedBlock>& blocks) {
    std::string s;
    for (const auto& b : blocks) {
        if (!s.empty()) s += " + ";
        s += b.kind + "_" + std::to_string(b.n);
        if (b.kind == "A") s += "(" + b.lambda + ")";
    }
    return s;
}

struct Context {
    bool quick;
    bool inject_fault;
    Index cap() const { return quick ? 8 : 12; }
};

// The first tamper (delta 1) that breaks the axioms, if any.
template <ExactScalar K>
std::optional<LieAlgebra<K>> break_axioms(const LieAlgebra<K>& l) {
    for (Index i = 0; i < l.dim(); ++i)
        for (Index j = i + 1; j < l.dim(); ++j)
            for (Index k = 0; k < l.dim(); ++k) {
                auto bad = l.with_tampered_constant(i, j, k, K(1));
                if (bad.check_axioms()) return bad;
            }
    return std::nullopt;
}

// 1. Dimensions of L(f) on canonical families.
std::string dimension_table(const Context& ctx) {
    struct Row {
        std::vector<PlantedBlock> blocks;
        Index expected;
    };
    std::vector<Row> rows;
    for (Index n : {2, 4, 6}) rows.push_back({{pb("A", n, "1")}, 2 * n});
    for (Index n : {1, 3, 5}) rows.push_back({{pb("A", n, "-1")}, 2 * n + 1});
    for (Index n : {2, 4, 6}) rows.push_back({{pb("Gamma", n)}, n / 2});
    for (Index n : {3, 5}) rows.push_back({{pb("Gamma", n)}, (n - 1) / 2});
    for (Index n : {1, 2, 3}) rows.push_back({{pb("J", 2 * n + 1)}, n + 1});
    for (Index n : {2, 3}) rows.push_back({{pb("zero", n)}, n * n});
    for (Index m : {2, 3}) rows.push_back({std::vector<PlantedBlock>(static_cast<std::size_t>(m), pb("J", 2)), m * m});
    int checked = 0;
    for (const auto& row : rows) {
        if (total_dim(row.blocks) > ctx.cap()) continue;
        auto l = skew_adjoint_algebra(form_of<Rational>(row.blocks));
        if (ctx.inject_fault && l.dim() >= 3)
            if (auto bad = break_axioms(l)) l = *bad;
        if (auto msg = l.check_axioms()) require(false, describe(row.blocks) + ": " + *msg);
        if (auto msg = l.check_realization()) require(false, describe(row.blocks) + ": " + *msg);
        const Index d = l.dim();
        require(d == row.expected, describe(row.blocks) + ": dim " + std::to_string(d) + ", expected " + std::to_string(row.expected));
        ++checked;
    }
    // J_2^m additionally matches gl(m) by fingerprint.
    for (Index m : {2, 3}) {
        const auto l = skew_adjoint_algebra(form_of<Rational>(std::vector<PlantedBlock>(static_cast<std::size_t>(m), pb("J", 2))));
        require(fingerprint(l) == fingerprint(gl<Rational>(m)), "J_2^" + std::to_string(m) + " fingerprint differs from gl");
    }
    return std::to_string(checked) + " dimensions exact";
}

// 2. Reductivity verdicts, with a non-central solvable ideal for every "no".
std::string reductivity(const Context& ctx) {
    struct Row {
        std::vector<PlantedBlock> blocks;
        bool reductive;
    };
    const std::vector<Row> rows = {
        {{pb("A", 2, "1")}, true},
        {{pb("A", 4, "1")}, false},
        {{pb("A", 6, "1")}, false},
        {{pb("A", 1, "-1")}, true},
        {{pb("A", 3, "-1")}, false},
        {{pb("A", 5, "-1")}, false},
        {{pb("Gamma", 3), pb("Gamma", 5)}, false},
        {{pb("Gamma", 3), pb("Gamma", 3)}, false},
        {{pb("Gamma", 2), pb("Gamma", 4)}, false},
        {{pb("Gamma", 2), pb("Gamma", 2)}, false},
        {{pb("Gamma", 3), pb("A", 2, "1")}, false},
        {{pb("identity", 3), pb("A", 2, "1")}, false},
        {{pb("identity", 3), pb("Gamma", 3)}, false},
        {{pb("skew", 1), pb("Gamma", 2)}, false},
        {{pb("identity", 1), pb("Gamma", 3)}, true},
    };
    int checked = 0;
    for (const auto& row : rows) {
        if (total_dim(row.blocks) > ctx.cap()) continue;
        const auto f = form_of<Rational>(row.blocks);
        const auto l = skew_adjoint_algebra(f);
        const std::string name = describe(row.blocks);
        const Verdict v = is_reductive(l);
        require(v == (row.reductive ? Verdict::yes : Verdict::no), name + ": computed reductive = " + std::string(to_string(v)));
        require(classify_split(f).predicted_reductive == v, name + ": prediction disagrees");
        if (!row.reductive) {
            const RowSpace<Rational> rad = radical_char0(l);
            const RowSpace<Rational> z = center(l);
            require(is_ideal(l, rad) && is_solvable_subspace(l, rad), name + ": radical is not a solvable ideal");
            require(intersect(rad, z).dim() < rad.dim(), name + ": radical is central");
        }
        ++checked;
    }
    const auto g = skew_adjoint_algebra(form_of<Rational>({pb("identity", 1), pb("Gamma", 3)}));
    require(is_abelian(g) && g.dim() == 2, "I_1 + Gamma_3: not abelian of dimension 2");
    return std::to_string(checked) + " verdicts exact, every non-reductive case has a non-central solvable radical";
}

// 3. Current-algebra bracket witnesses.
std::string bracket_relations(const Context& ctx) {
    const std::vector<std::pair<Index, int>> cases = {{2, 1}, {4, 1}, {6, 1}, {1, -1}, {3, -1}, {5, -1}};
    int checked = 0;
    for (const auto& [n, sign] : cases) {
        if (2 * n > ctx.cap()) continue;
        const auto r = verify_current_structure<Rational>(n, sign);
        const std::string name = "(" + std::to_string(n) + "," + (sign > 0 ? "+" : "-") + ")";
        require(r.passed(), name + ": " + (r.failures.empty() ? std::string("failed") : r.failures.front()));
        require(r.relations > 0, name + ": no relations checked");
        ++checked;
    }
    return std::to_string(checked) + " cases verified";
}

// 4. Spectrum of C -> A C B and the unit-eigenvalue test over GF(101).
std::string eigenvalue_oracle(const Context&) {
    FpScope scope(101);
    SplitMix64 rng(0xe16e);
    for (int t = 0; t < 200; ++t) {
        const Index m = rng.range(1, 3), n = rng.range(1, 3);
        std::vector<Fp> ea, eb;
        for (Index i = 0; i < m; ++i) ea.push_back(Fp(rng.range(0, 100)));
        for (Index i = 0; i < n; ++i) eb.push_back(Fp(rng.range(0, 100)));
        const Mat<Fp> a = with_spectrum(rng, ea), b = with_spectrum(rng, eb);
        Poly<Fp> expected = Poly<Fp>::constant(Fp(1));
        for (const auto& x : ea)
            for (const auto& y : eb) expected *= Poly<Fp>::linear(x * y);
        require(characteristic_polynomial(lr_operator(a, b)) == expected, "pair " + std::to_string(t) + ": spectrum mismatch");
    }
    int singular = 0;
    for (int t = 0; t < 200; ++t) {
        const Index m = rng.range(1, 3), n = rng.range(1, 3);
        Mat<Fp> a, b;
        if (t % 2 == 0) {
            // Plant a reciprocal eigenvalue pair half the time.
            std::vector<Fp> ea, eb;
            for (Index i = 0; i < m; ++i) ea.push_back(Fp(rng.range(1, 100)));
            for (Index i = 0; i < n; ++i) eb.push_back(Fp(rng.range(1, 100)));
            eb[0] = Fp(1) / ea[0];
            a = with_spectrum(rng, ea);
            b = with_spectrum(rng, eb);
        } else {
            a = random_matrix<Fp>(rng, m, m, 50);
            b = random_matrix<Fp>(rng, n, n, 50);
        }
        const bool det_zero = determinant(Mat<Fp>(lr_operator(a, b) - identity<Fp>(m * n))).is_zero();
        require(has_unit_eigenvalue(a, b) == det_zero, "further pair " + std::to_string(t) + ": unit-eigenvalue test disagrees");
        singular += det_zero;
    }
    return "200 spectra exact, 200 unit-eigenvalue tests agree (" + std::to_string(singular) + " singular)";
}

// 5. Centralizer isomorphism on random A with gcd(p_A, p_A*) = 1.
std::string centralizer_isomorphism_check(const Context&) {
    SplitMix64 rng(0xce47);
    int done = 0, tried = 0;
    while (done < 50) {
        ++tried;
        const Index r = rng.range(1, 4);
        const Mat<Rational> a = random_matrix<Rational>(rng, r, r, 3);
        const Poly<Rational> pa = characteristic_polynomial(a);
        if (gcd(pa, adjoint(pa)).degree() > 0) continue;
        const auto w = centralizer_isomorphism(a);
        require(w.passed(), "instance " + std::to_string(done) + " (size " + std::to_string(r) + ") failed");
        ++done;
    }
    return "50 isomorphisms verified on all basis pairs (" + std::to_string(tried) + " draws)";
}

// 6. Planted degenerate decompositions.
std::string planted_recovery(const Context& ctx) {
    SplitMix64 rng(0x91a7);
    const Index cap = std::min<Index>(10, ctx.cap());
    for (int t = 0; t < 100; ++t) {
        std::vector<PlantedBlock> blocks;
        const int count = static_cast<int>(rng.range(1, 4));
        for (int i = 0; i < count; ++i) {
            const long kind = rng.range(0, 5);
            const Index n = rng.range(1, 4);
            PlantedBlock b;
            if (kind <= 1) b = pb("J", n);
            else if (kind == 2) b = pb("Gamma", n);
            else if (kind == 3) {
                long lambda = rng.range(-3, 3);
                if (lambda == 0 || lambda == (n % 2 ? 1 : -1)) lambda = 2;
                b = pb("A", n, std::to_string(lambda));
            } else if (kind == 4) b = pb("identity", n);
            else b = pb("skew", std::max<Index>(1, n / 2));
            if (total_dim(blocks) + total_dim({b}) <= cap) blocks.push_back(b);
        }
        if (blocks.empty()) blocks.push_back(pb("J", 2));
        const auto inst = generate(PlantedSpec{FieldDescriptor::rationals(), rng.next(), 2, blocks});
        const auto f = to_form<Rational>(inst.document);
        const auto d = degenerate_structure(f);
        const std::string name = "instance " + std::to_string(t) + " [" + describe(blocks) + "]";
        require(d.odd_blocks == inst.truth["odd_blocks"].get<std::vector<Index>>(), name + ": odd blocks");
        require(d.even_blocks == inst.truth["even_blocks"].get<std::vector<Index>>(), name + ": even blocks");
        require(d.ndeg_gram.rows() == inst.truth["ndeg_dim"].get<Index>(), name + ": non-degenerate dimension");
        require(congruence(d.canonical(), d.witness) == f.gram(), name + ": witness congruence");
    }
    return "100 planted instances recovered with exact witnesses";
}

}  // namespace

std::vector<CatalogueForm> acceptance_catalogue() {
    return {
        // Type 0
        {"J_2", {pb("J", 2)}},
        {"J_4", {pb("J", 4)}},
        {"J_2 + J_2", {pb("J", 2), pb("J", 2)}},
        {"J_2 + J_2 + J_2", {pb("J", 2), pb("J", 2), pb("J", 2)}},
        // Type lambda
        {"A_1(2)", {pb("A", 1, "2")}},
        {"A_2(2)", {pb("A", 2, "2")}},
        {"A_1(2) + A_1(2)", {pb("A", 1, "2"), pb("A", 1, "2")}},
        {"A_1(3) + A_1(2)", {pb("A", 1, "3"), pb("A", 1, "2")}},
        // Type 1
        {"I_1", {pb("identity", 1)}},
        {"I_2", {pb("identity", 2)}},
        {"I_3", {pb("identity", 3)}},
        {"I_4", {pb("identity", 4)}},
        {"I_5", {pb("identity", 5)}},
        {"Gamma_3", {pb("Gamma", 3)}},
        {"Gamma_5", {pb("Gamma", 5)}},
        {"A_2(1)", {pb("A", 2, "1")}},
        {"Gamma_3 + Gamma_1", {pb("Gamma", 3), pb("Gamma", 1)}},
        // Type -1
        {"Gamma_2", {pb("Gamma", 2)}},
        {"Gamma_4", {pb("Gamma", 4)}},
        {"skew_2", {pb("skew", 1)}},
        {"skew_4", {pb("skew", 2)}},
        {"skew_6", {pb("skew", 3)}},
        {"A_1(-1)", {pb("A", 1, "-1")}},
        // Mixtures
        {"I_1 + skew_2", {pb("identity", 1), pb("skew", 1)}},
        {"I_2 + skew_2", {pb("identity", 2), pb("skew", 1)}},
        {"I_3 + skew_2", {pb("identity", 3), pb("skew", 1)}},
        {"Gamma_3 + skew_2", {pb("Gamma", 3), pb("skew", 1)}},
        {"J_2 + I_2", {pb("J", 2), pb("identity", 2)}},
        {"A_1(2) + I_1", {pb("A", 1, "2"), pb("identity", 1)}},
        // Non-reductive patterns
        {"A_4(1)", {pb("A", 4, "1")}},
        {"A_2(1) + A_2(1)", {pb("A", 2, "1"), pb("A", 2, "1")}},
        {"Gamma_3 + Gamma_5", {pb("Gamma", 3), pb("Gamma", 5)}},
        {"Gamma_3 + A_2(1)", {pb("Gamma", 3), pb("A", 2, "1")}},
        {"I_1 + A_2(1)", {pb("identity", 1), pb("A", 2, "1")}},
        {"I_2 + Gamma_3", {pb("identity", 2), pb("Gamma", 3)}},
        {"A_3(-1)", {pb("A", 3, "-1")}},
        {"Gamma_2 + Gamma_4", {pb("Gamma", 2), pb("Gamma", 4)}},
        {"skew_2 + Gamma_2", {pb("skew", 1), pb("Gamma", 2)}},
        {"A_2(2) + A_1(2)", {pb("A", 2, "2"), pb("A", 1, "2")}},
        {"J_2 + J_4", {pb("J", 2), pb("J", 4)}},
        {"J_3", {pb("J", 3)}},
        {"J_1 + I_1", {pb("J", 1), pb("identity", 1)}},
    };
}

namespace {

// 7. Criteria and predicted dimension against the computed algebra.
std::string biconditionals(const Context& ctx) {
    int checked = 0;
    for (const auto& form : acceptance_catalogue()) {
        if (total_dim(form.blocks) > ctx.cap()) continue;
        const auto f = form_of<Rational>(form.blocks);
        const auto l = skew_adjoint_algebra(f);
        const Verdict ss = is_semisimple(l), si = is_simple(l);
        require(ss != Verdict::undetermined, form.name + ": semisimplicity undecided");
        require(si != Verdict::undetermined, form.name + ": simplicity undecided");
        require((semisimple_criterion(f).verdict == Verdict::yes) == (ss == Verdict::yes),
                form.name + ": semisimple criterion " + std::string(to_string(semisimple_criterion(f).verdict)) + ", algebra " +
                    std::string(to_string(ss)));
        require((simple_criterion(f).verdict == Verdict::yes) == (si == Verdict::yes),
                form.name + ": simple criterion " + std::string(to_string(simple_criterion(f).verdict)) + ", algebra " +
                    std::string(to_string(si)));
        const auto sr = classify_split(f);
        require(sr.predicted_dim.has_value(), form.name + ": no predicted dimension");
        require(*sr.predicted_dim == l.dim(),
                form.name + ": predicted dim " + std::to_string(*sr.predicted_dim) + ", computed " + std::to_string(l.dim()));
        ++checked;
    }
    require(checked >= 30, "catalogue has only " + std::to_string(checked) + " forms at this cap");
    return std::to_string(checked) + " catalogue forms agree";
}

// 8. Characteristic 2.
std::string char_two(const Context& ctx) {
    FpScope scope(2);
    Mat<Fp> h = zeros<Fp>(2, 2);
    h(0, 1) = h(1, 0) = Fp(1);
    const BilinearForm<Fp> f(h);
    const auto l = skew_adjoint_algebra(f);
    require(l.dim() == 3, "[[0,1],[1,0]]: dim " + std::to_string(l.dim()));
    const auto fp = fingerprint(l);
    require(fp == fingerprint(sl<Fp>(2)), "[[0,1],[1,0]]: fingerprint differs from sl(2)");
    // sl(2) in characteristic 2: the derived algebra is the center.
    require(derived_subalgebra(l) == center(l), "[[0,1],[1,0]]: derived algebra is not the center");
    const auto m = sl_match(f);
    require(m.n == 2 && m.certainty == SlMatch::Certainty::witnessed, "[[0,1],[1,0]]: sl_match not witnessed");
    require(skew_adjoint_algebra(BilinearForm<Fp>(gram_J<Fp>(3))).dim() == 2, "J_3: dim is not 2");
    int checked = 0;
    for (const auto& form : acceptance_catalogue()) {
        if (total_dim(form.blocks) > ctx.cap() || total_dim(form.blocks) <= 2) continue;
        std::vector<PlantedBlock> blocks;
        bool valid = true;
        for (auto b : form.blocks) {
            // Reduce A-block eigenvalues mod 2; A_n(1) does not exist there.
            if (b.kind == "A" && parse_scalar<Fp>(b.lambda) == Fp(1)) valid = false;
            blocks.push_back(b);
        }
        if (!valid) continue;
        const auto g = form_of<Fp>(blocks);
        const auto r = sl_match(g);
        require(!r.n && r.certainty == SlMatch::Certainty::none, form.name + ": sl_match over GF(2) is not none");
        // Independently of sl_match, L(f) must differ from sl(n) in dimension or fingerprint.
        const auto lg = skew_adjoint_algebra(g);
        const Index n = g.dim();
        require(lg.dim() != n * n - 1 || !(fingerprint(lg) == fingerprint(sl<Fp>(n))), form.name + ": L(f) looks like sl(n)");
        ++checked;
    }
    return "sl(2) fingerprint witnessed, L(J_3) = 2, " + std::to_string(checked) + " forms of dim > 2 match nothing";
}

// 9. Asymmetry laws on random non-degenerate forms.
template <ExactScalar K>
void asymmetry_laws(SplitMix64& rng, Index max_n, const std::string& field) {
    int done = 0;
    while (done < 100) {
        const Index n = rng.range(1, max_n);
        const Mat<K> s = random_matrix<K>(rng, n, n, 3);
        const BilinearForm<K> f(s);
        if (!f.is_nondegenerate()) continue;
        const std::string name = field + " form " + std::to_string(done);
        const Mat<K> sigma = asymmetry(f);
        require(congruence(s, sigma) == s, name + ": sigma' S sigma != S");
        const auto l = skew_adjoint_algebra(f);
        for (const auto& b : l.basis()) require(mul(sigma, b) == mul(b, sigma), name + ": sigma does not commute with L(f)");
        require(l.contains(Mat<K>(sigma - inverse(sigma))), name + ": sigma - sigma^-1 not in L(f)");
        require(invariant_factors(sigma) == invariant_factors(inverse(sigma)), name + ": invariant factors of sigma^-1 differ");
        const Poly<K> ps = characteristic_polynomial(sigma);
        require(associates(adjoint(ps), ps), name + ": p_sigma* is not a unit multiple of p_sigma");
        const FormParts<K> p = parts(f);
        if (is_invertible(p.minus)) {
            const auto c = centralizer_in_algebra(skew_adjoint_algebra(BilinearForm<K>(p.minus)), sigma_mp(f));
            require(ambient_span(c) == ambient_span(l), name + ": L(f) differs from the centralizer in L(f-)");
        }
        if (is_invertible(p.plus)) {
            const auto c = centralizer_in_algebra(skew_adjoint_algebra(BilinearForm<K>(p.plus)), sigma_pm(f));
            require(ambient_span(c) == ambient_span(l), name + ": L(f) differs from the centralizer in L(f+)");
        }
        ++done;
    }
}

std::string asymmetry_checks(const Context& ctx) {
    SplitMix64 rng(0xa5e7);
    const Index max_n = std::min<Index>(6, ctx.cap());
    asymmetry_laws<Rational>(rng, max_n, "Q");
    FpScope scope(101);
    asymmetry_laws<Fp>(rng, max_n, "GF(101)");
    return "100 forms over Q and 100 over GF(101) satisfy every law";
}

}  // namespace

std::vector<AcceptanceResult> run_acceptance(const AcceptanceOptions& options, std::ostream& out) {
    const Context ctx{options.quick, options.inject_fault};
    const std::vector<std::pair<std::string, std::function<std::string(const Context&)>>> criteria = {
        {"dimension table", dimension_table},
        {"reductivity verdicts", reductivity},
        {"bracket-relation witness", bracket_relations},
        {"eigenvalue oracle", eigenvalue_oracle},
        {"centralizer isomorphism", centralizer_isomorphism_check},
        {"planted decomposition recovery", planted_recovery},
        {"criteria biconditionals", biconditionals},
        {"characteristic 2", char_two},
        {"asymmetry laws", asymmetry_checks},
    };
    std::vector<AcceptanceResult> results;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        AcceptanceResult r;
        r.number = static_cast<int>(i + 1);
        r.title = criteria[i].first;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = criteria[i].second(ctx);
            r.passed = true;
        } catch (const CaseFailure& e) {
            r.detail = e.what;
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.number << " (" << r.title << "): " << r.detail << " ["
             << r.seconds << " s]\n";
        out << line.str() << std::flush;
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace skewlie
