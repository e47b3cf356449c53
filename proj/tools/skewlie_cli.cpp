// Command-line front end.
//
//   skewlie analyze <file> [--format json|text]
//   skewlie classify <file>
//   skewlie generate --seed N --spec <file> -o <file>
//   skewlie selftest [--quick] [--inject-fault]
//
// Exit codes: 0 success, 1 input error, 2 cross-check or acceptance failure.

#include "skewlie/acceptance.hpp"
#include "skewlie/io.hpp"
#include "skewlie/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace skewlie;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kCheckFailure = 2;

int analyze(const std::string& path, const std::string& format) {
    const InputDocument doc = read_input(path);
    const Report report = with_field(doc.field, [&]<ExactScalar K>() { return crosscheck(to_form<K>(doc)); });
    if (format == "text") std::cout << render_text(report);
    else std::cout << to_json(report).dump(2) << "\n";
    return report.failed() ? kCheckFailure : kOk;
}

int classify(const std::string& path) {
    const InputDocument doc = read_input(path);
    const Json out = with_field(doc.field, [&]<ExactScalar K>() {
        const auto f = to_form<K>(doc);
        const SplitResult sr = classify_split(f);
        Json j;
        j["field"] = doc.field.name();
        j["n"] = f.dim();
        j["status"] = to_string(sr.status);
        if (sr.status == SplitResult::Status::reductive) {
            j["summands"] = Json::array();
            for (const auto& s : sr.summands) j["summands"].push_back(to_json(s));
        } else {
            j["summands"] = "not-applicable";
        }
        j["predicted_reductive"] = std::string(to_string(sr.predicted_reductive));
        j["predicted_dim"] = sr.predicted_dim ? Json(*sr.predicted_dim) : Json(nullptr);
        j["predicted_abelian"] = sr.predicted_abelian ? Json(*sr.predicted_abelian) : Json(nullptr);
        Json patterns = Json::array();
        for (const auto& p : sr.pieces)
            if (!p.pattern.empty()) patterns.push_back(p.label + ": " + p.pattern);
        j["non_reductive_patterns"] = patterns;
        j["semisimple_criterion"] = to_json(semisimple_criterion(f));
        j["simple_criterion"] = to_json(simple_criterion(f));
        j["sl_match"] = to_json(sl_match(f));
        j["notes"] = sr.notes;
        return j;
    });
    std::cout << out.dump(2) << "\n";
    return kOk;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << j.dump(2) << "\n";
}

int generate_cmd(std::uint64_t seed, bool seed_given, const std::string& spec_path, const std::string& out_path) {
    PlantedSpec spec;
    try {
        spec = parse_planted_spec(slurp(spec_path));
    } catch (const InputError& e) {
        throw InputError(spec_path + ": " + e.what());
    }
    if (seed_given) spec.seed = seed;
    const PlantedInstance inst = generate(spec);
    std::filesystem::path out(out_path);
    std::filesystem::path truth = out;
    truth.replace_extension(".truth.json");
    write_file(out, to_json(inst.document));
    write_file(truth, inst.truth);
    std::cout << "wrote " << out.string() << " and " << truth.string() << "\n";
    return kOk;
}

int selftest(bool quick, bool inject_fault) {
    const auto results = run_acceptance({quick, inject_fault}, std::cout);
    int failed = 0;
    for (const auto& r : results)
        if (!r.passed) {
            ++failed;
            std::cout << "failing case: criterion " << r.number << ": " << r.detail << "\n";
        }
    std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? kOk : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lie algebras of skew-adjoint operators of bilinear forms"};
    app.require_subcommand(1);

    std::string path, format = "json";
    auto* an = app.add_subcommand("analyze", "Full report with cross-check of predictions against computation");
    an->add_option("file", path, "Input JSON document")->required();
    an->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    auto* cl = app.add_subcommand("classify", "Summand classification and criteria only");
    cl->add_option("file", path, "Input JSON document")->required();

    std::uint64_t seed = 0;
    std::string spec_path, out_path;
    auto* ge = app.add_subcommand("generate", "Write a scrambled planted instance and its truth sidecar");
    auto* seed_opt = ge->add_option("--seed", seed, "64-bit seed (overrides the spec)");
    ge->add_option("--spec", spec_path, "Planted spec JSON")->required();
    ge->add_option("-o,--out", out_path, "Output path; the sidecar replaces the extension with .truth.json")->required();

    bool quick = false, inject_fault = false;
    auto* st = app.add_subcommand("selftest", "Run the acceptance suite");
    st->add_flag("--quick", quick, "Cap dimensions at 8");
    st->add_flag("--inject-fault", inject_fault, "Tamper structure constants to exercise the failure path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*an) return analyze(path, format);
        if (*cl) return classify(path);
        if (*ge) return generate_cmd(seed, seed_opt->count() > 0, spec_path, out_path);
        if (*st) return selftest(quick, inject_fault);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kCheckFailure;
    }
    return kOk;
}
