#include "skewlie/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace skewlie {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;

FieldDescriptor parse_field(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InputError(where + ": expected {\"kind\": \"Q\"} or {\"kind\": \"GF\", \"p\": <prime>}");
    const std::string kind = j["kind"];
    if (kind == "Q") return FieldDescriptor::rationals();
    if (kind != "GF") throw InputError(where + ".kind: unknown field kind '" + kind + "'");
    if (!j.contains("p") || !j["p"].is_number_unsigned()) throw InputError(where + ".p: expected a positive integer");
    const auto p = j["p"].get<std::uint64_t>();
    try {
        if (p > UINT32_MAX) throw std::invalid_argument("modulus too large");
        return FieldDescriptor::prime_field(static_cast<std::uint32_t>(p));
    } catch (const std::invalid_argument& e) {
        throw InputError(where + ".p: " + e.what());
    }
}

namespace {

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // e.byte is 1-based; report line and column as well.
        const std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
        const std::size_t upto = std::min(at, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
        const auto nl = text.rfind('\n', upto == 0 ? 0 : upto - 1);
        const std::size_t col = nl == std::string::npos ? upto + 1 : upto - nl;
        throw InputError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                         e.what());
    }
}

void validate_scalars(const InputDocument& doc) {
    with_field(doc.field, [&]<ExactScalar K>() { (void)to_form<K>(doc); });
}

}  // namespace

InputDocument parse_input(const std::string& text) {
    const Json j = parse_json(text);
    if (!j.is_object()) throw InputError("document: expected a JSON object");
    if (!j.contains("field")) throw InputError("document: missing \"field\"");
    if (!j.contains("gram")) throw InputError("document: missing \"gram\"");
    InputDocument doc;
    doc.field = parse_field(j["field"], "field");
    const Json& g = j["gram"];
    if (!g.is_array() || g.empty()) throw InputError("gram: expected a non-empty array of rows");
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::string where = "gram[" + std::to_string(i) + "]";
        if (!g[i].is_array() || g[i].size() != n)
            throw InputError(where + ": expected a row of " + std::to_string(n) + " entries (matrix must be square)");
        doc.gram.emplace_back();
        for (std::size_t k = 0; k < n; ++k) {
            const Json& e = g[i][k];
            if (e.is_string()) doc.gram.back().push_back(e.get<std::string>());
            else if (e.is_number_integer()) doc.gram.back().push_back(e.dump());
            else throw InputError(where + "[" + std::to_string(k) + "]: expected a scalar string such as \"-3/4\"");
        }
    }
    validate_scalars(doc);
    return doc;
}

InputDocument read_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_input(ss.str());
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

OJson to_json(const InputDocument& doc) {
    OJson field = doc.field.is_rationals() ? OJson{{"kind", "Q"}} : OJson{{"kind", "GF"}, {"p", doc.field.p}};
    return OJson{{"field", field}, {"gram", doc.gram}};
}

PlantedSpec parse_planted_spec(const std::string& text) {
    const Json j = parse_json(text);
    if (!j.is_object()) throw InputError("spec: expected a JSON object");
    PlantedSpec spec;
    spec.field = j.contains("field") ? parse_field(j["field"], "field") : FieldDescriptor::rationals();
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw InputError("seed: expected a non-negative integer");
        spec.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("bound")) {
        if (!j["bound"].is_number_integer() || j["bound"].get<long>() < 1) throw InputError("bound: expected an integer >= 1");
        spec.bound = j["bound"].get<long>();
    }
    if (!j.contains("blocks") || !j["blocks"].is_array() || j["blocks"].empty())
        throw InputError("blocks: expected a non-empty array");
    for (std::size_t i = 0; i < j["blocks"].size(); ++i) {
        const Json& b = j["blocks"][i];
        const std::string where = "blocks[" + std::to_string(i) + "]";
        if (!b.is_object() || !b.contains("kind") || !b["kind"].is_string() || !b.contains("n") ||
            !b["n"].is_number_integer() || b["n"].get<long>() < 1)
            throw InputError(where + ": expected {\"kind\": ..., \"n\": <positive integer>}");
        PlantedBlock pb{b["kind"], b["n"].get<Index>(), ""};
        static const std::vector<std::string> kinds = {"J", "A", "Gamma", "identity", "skew", "zero"};
        if (std::find(kinds.begin(), kinds.end(), pb.kind) == kinds.end())
            throw InputError(where + ".kind: unknown block kind '" + pb.kind + "'");
        if (pb.kind == "A") {
            if (!b.contains("lambda") || !b["lambda"].is_string()) throw InputError(where + ".lambda: expected a scalar string");
            pb.lambda = b["lambda"];
        }
        spec.blocks.push_back(pb);
    }
    // Catch bad lambdas (unparseable or excluded) here rather than in generate.
    with_field(spec.field, [&]<ExactScalar K>() {
        for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
            if (spec.blocks[i].kind != "A") continue;
            try {
                (void)gram_A<K>(spec.blocks[i].n, parse_scalar<K>(spec.blocks[i].lambda));
            } catch (const std::exception& e) {
                throw InputError("blocks[" + std::to_string(i) + "].lambda: " + e.what());
            }
        }
    });
    return spec;
}

namespace {

template <ExactScalar K>
PlantedInstance generate_in(const PlantedSpec& spec) {
    std::vector<Index> odd, even;
    Index ndeg = 0;
    OJson planted = OJson::array();
    for (const auto& b : spec.blocks) {
        if (b.kind == "J") (b.n % 2 ? odd : even).push_back(b.n);
        else if (b.kind == "zero") odd.insert(odd.end(), static_cast<std::size_t>(b.n), 1);
        else ndeg += (b.kind == "A" || b.kind == "skew") ? 2 * b.n : b.n;
        OJson pj{{"kind", b.kind}, {"n", b.n}};
        if (b.kind == "A") pj["lambda"] = to_string(parse_scalar<K>(b.lambda));
        planted.push_back(pj);
    }
    std::sort(odd.begin(), odd.end(), std::greater<>());
    std::sort(even.begin(), even.end(), std::greater<>());

    const Mat<K> canonical = planted_gram<K>(spec.blocks);
    const Index n = canonical.rows();
    SplitMix64 rng(spec.seed);
    Mat<K> p(n, n);
    do {
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) p(i, j) = K(rng.range(-spec.bound, spec.bound));
    } while (!is_invertible(p));
    const Mat<K> gram = congruence(canonical, p);

    PlantedInstance out;
    out.document.field = spec.field;
    auto strings = [n](const Mat<K>& m) {
        std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(n));
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)].push_back(to_string(m(i, j)));
        return rows;
    };
    out.document.gram = strings(gram);
    out.truth = OJson{{"seed", spec.seed},
                      {"bound", spec.bound},
                      {"blocks", planted},
                      {"odd_blocks", odd},
                      {"even_blocks", even},
                      {"ndeg_dim", ndeg},
                      {"canonical", strings(canonical)},
                      {"scramble", strings(p)}};
    return out;
}

}  // namespace

PlantedInstance generate(const PlantedSpec& spec) {
    return with_field(spec.field, [&]<ExactScalar K>() { return generate_in<K>(spec); });
}

}  // namespace skewlie
