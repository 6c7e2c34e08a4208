// qhsing: invariants of quasi-homogeneous isolated hypersurface
// singularities, computed exactly from the graded Jacobi ring.
//
// Subcommands: analyze | lengths | bfunction | spectrum | hamiltonian |
// check. Exit codes: 0 success, 1 parse/usage error, 2 not
// quasi-homogeneous, 3 non-isolated singularity, 4 smooth at origin,
// 5 failed internal identity (check).

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhsing/forms.hpp"
#include "qhsing/grading.hpp"
#include "qhsing/invariants.hpp"
#include "qhsing/parser.hpp"
#include "qhsing/report.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qhsing;

struct Options {
    std::string input;
    std::string vars_csv;
    std::string weights_csv;
    std::string format = "text";
    std::vector<std::string> lambdas;
    std::int64_t degree_bound = -1;  // hamiltonian: default sigma + 1
    std::int64_t max_gb_degree = detail::kDefaultDegreeCap;
};

void add_common_options(CLI::App* cmd, Options& opt, bool with_lambda = false,
                        bool with_bound = false) {
    cmd->add_option("input", opt.input,
                    "polynomial expression, or '-' to read standard input")
        ->required();
    cmd->add_option("--vars", opt.vars_csv,
                    "comma-separated variable names (default: identifiers in the input, sorted)");
    cmd->add_option("--weights", opt.weights_csv,
                    "comma-separated positive integer weights overriding detection");
    cmd->add_option("--format", opt.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--max-gb-degree", opt.max_gb_degree,
                    "hard cap on S-polynomial weighted degree");
    if (with_lambda)
        cmd->add_option("--lambda", opt.lambdas,
                        "exact rational exponent p or p/q; repeatable");
    if (with_bound)
        cmd->add_option("--degree-bound", opt.degree_bound,
                        "weighted degree bound for monomial forms (default: sigma + 1)");
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(csv);
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::string read_input_text(const std::string& arg) {
    if (arg != "-") return arg;
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    std::string text = buf.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.pop_back();
    return text;
}

struct Request {
    std::string text;
    std::vector<std::string> names;
    Polynomial f;
    Grading grading;

    Request() : f(0) {}
};

Request build_request(const Options& opt) {
    Request req;
    req.text = read_input_text(opt.input);
    req.names = opt.vars_csv.empty() ? scan_identifiers(req.text) : split_csv(opt.vars_csv);
    if (req.names.empty())
        throw std::invalid_argument("no variables: give --vars or use an input that names some");
    req.f = parse_polynomial(req.text, req.names);
    if (req.names.size() < 3)
        throw std::invalid_argument("the pipeline needs at least 3 variables (got " +
                                    std::to_string(req.names.size()) + ")");
    if (!opt.weights_csv.empty()) {
        std::vector<std::int64_t> weights;
        for (const auto& part : split_csv(opt.weights_csv)) {
            try {
                std::size_t used = 0;
                const long long w = std::stoll(part, &used);
                if (used != part.size()) throw std::invalid_argument(part);
                weights.push_back(w);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad weight '" + part + "': expected an integer");
            }
        }
        req.grading = grading_from_weights(req.f, weights);
    } else {
        req.grading = find_weights(req.f);
    }
    return req;
}

int cmd_analyze(const Options& opt) {
    Request req = build_request(opt);
    InvariantReport r = analyze(req.f, req.grading, opt.max_gb_degree);
    if (opt.format == "json") {
        std::cout << json_report(r, req.text, req.names).dump(2) << "\n";
    } else {
        std::cout << text_report(r, req.text, req.names);
    }
    return 0;
}

int cmd_lengths(const Options& opt) {
    Request req = build_request(opt);
    InvariantReport r = analyze(req.f, req.grading, opt.max_gb_degree);

    std::vector<std::pair<Rational, std::int64_t>> rows;
    if (opt.lambdas.empty()) {
        rows = r.lengths;
    } else {
        for (const auto& text : opt.lambdas) {
            auto lambda = parse_rational(text);
            if (!lambda)
                throw std::invalid_argument("bad --lambda '" + text +
                                            "': expected an exact rational p or p/q");
            rows.emplace_back(*lambda, length_quotient(*lambda, r.jacobi, r.genus));
        }
    }

    if (opt.format == "json") {
        ordered_json doc;
        doc["tool"] = kToolName;
        doc["version"] = kToolVersion;
        doc["input"] = req.text;
        doc["weights"] = req.grading.weights;
        doc["degree"] = req.grading.degree;
        ordered_json table = ordered_json::array();
        for (const auto& [lambda, len] : rows)
            table.push_back(ordered_json::array(
                {static_cast<std::int64_t>(lambda.get_num().get_si()),
                 static_cast<std::int64_t>(lambda.get_den().get_si()), len}));
        doc["lengths"] = table;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << detail::provenance_text(req.text, req.names, req.grading);
        std::cout << "\nlengths of D f^lambda / D f^(lambda+1):\n";
        for (const auto& [lambda, len] : rows)
            std::cout << "  lambda = " << to_string(lambda) << ": " << len << "\n";
    }
    return 0;
}

int cmd_bfunction(const Options& opt) {
    Request req = build_request(opt);
    InvariantReport r = analyze(req.f, req.grading, opt.max_gb_degree);
    if (opt.format == "json") {
        ordered_json doc;
        doc["tool"] = kToolName;
        doc["version"] = kToolVersion;
        doc["input"] = req.text;
        doc["weights"] = req.grading.weights;
        doc["degree"] = req.grading.degree;
        ordered_json roots = ordered_json::array();
        for (const auto& root : r.bfunction.roots)
            roots.push_back(ordered_json::array(
                {static_cast<std::int64_t>(root.value.get_num().get_si()),
                 static_cast<std::int64_t>(root.value.get_den().get_si()), root.multiplicity}));
        doc["b_roots"] = roots;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << detail::provenance_text(req.text, req.names, req.grading);
        std::cout << "\nb-function: " << bfunction_product_string(r.bfunction) << "\n";
        std::cout << "roots (root, multiplicity):\n";
        for (const auto& root : r.bfunction.roots)
            std::cout << "  " << to_string(root.value) << ", " << root.multiplicity << "\n";
    }
    return 0;
}

int cmd_spectrum(const Options& opt) {
    Request req = build_request(opt);
    InvariantReport r = analyze(req.f, req.grading, opt.max_gb_degree);
    if (opt.format == "json") {
        ordered_json doc;
        doc["tool"] = kToolName;
        doc["version"] = kToolVersion;
        doc["input"] = req.text;
        doc["weights"] = req.grading.weights;
        doc["degree"] = req.grading.degree;
        ordered_json spectrum = ordered_json::array();
        for (const auto& e : r.spectrum) {
            ordered_json entry;
            entry["alpha"] = json_rational(e.alpha);
            entry["beta"] = json_rational(e.beta);
            entry["j"] = e.j;
            entry["dim"] = e.dim;
            spectrum.push_back(entry);
        }
        doc["spectrum"] = spectrum;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << detail::provenance_text(req.text, req.names, req.grading);
        std::cout << "\nsteenbrink spectrum (alpha = j + beta, monodromy eigenvalue "
                     "exp(-2*pi*i*beta)):\n";
        for (const auto& e : r.spectrum)
            std::cout << "  alpha = " << to_string(e.alpha) << ": j = " << e.j
                      << ", beta = " << to_string(e.beta) << ", dim = " << e.dim << "\n";
    }
    return 0;
}

int cmd_hamiltonian(const Options& opt) {
    Request req = build_request(opt);
    const std::int64_t bound =
        opt.degree_bound >= 0 ? opt.degree_bound
                              : std::max<std::int64_t>(0, req.grading.socle_degree() + 1);
    auto gens = mf_generators(req.f, req.grading, bound);
    if (opt.format == "json") {
        ordered_json doc;
        doc["tool"] = kToolName;
        doc["version"] = kToolVersion;
        doc["input"] = req.text;
        doc["weights"] = req.grading.weights;
        doc["degree"] = req.grading.degree;
        doc["degree_bound"] = bound;
        ordered_json list = ordered_json::array();
        for (const auto& g : gens) {
            ordered_json entry;
            if (g.is_f) {
                entry["type"] = "f";
                entry["polynomial"] = to_string(g.poly, req.names);
            } else {
                entry["type"] = "xi";
                std::string label = g.form_monomial.to_string(req.names);
                for (int i : g.form_indices)
                    label += "*d" + req.names.at(static_cast<std::size_t>(i));
                entry["alpha"] = label;
                ordered_json comps = ordered_json::array();
                for (std::size_t i = 0; i < g.field.components.size(); ++i) {
                    if (g.field.components[i].is_zero()) continue;
                    comps.push_back(ordered_json::array(
                        {req.names[i], to_string(g.field.components[i], req.names)}));
                }
                entry["components"] = comps;
            }
            list.push_back(entry);
        }
        doc["generators"] = list;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << detail::provenance_text(req.text, req.names, req.grading);
        std::cout << "# generators of the left ideal presenting M(f), truncated at weighted\n";
        std::cout << "# form degree " << bound
                  << (opt.degree_bound >= 0 ? " (--degree-bound)" : " (default: sigma + 1)")
                  << "; raise --degree-bound to emit more\n";
        std::cout << render_generators(gens, req.names);
    }
    return 0;
}

int cmd_check(const Options& opt) {
    Request req = build_request(opt);
    InvariantReport r = analyze(req.f, req.grading, opt.max_gb_degree);

    std::vector<std::pair<std::string, bool>> checks;

    checks.emplace_back("mu equals the product formula prod (d - m_i)/m_i",
                        Rational(static_cast<long>(r.mu)) == milnor_product(req.grading));

    bool symmetric = true;
    const std::int64_t sigma = req.grading.socle_degree();
    for (const auto& [k, dim] : r.jacobi.hilbert)
        if (dim != r.jacobi.dim_at(sigma - k)) symmetric = false;
    checks.emplace_back("hilbert function is symmetric about sigma/2", symmetric);

    std::int64_t total = 0;
    for (const auto& [lambda, len] : r.lengths) total += len;
    checks.emplace_back("sum of quotient lengths equals 1 + mu", total == 1 + r.mu);

    const std::int64_t genus_degree = req.grading.degree - req.grading.weight_sum();
    const bool genus_agrees =
        r.genus == (genus_degree < 0 ? 0 : r.jacobi.dim_at(genus_degree));
    checks.emplace_back("reduced genus agrees with the jacobi dimension", genus_agrees);

    bool tangent = true;
    for (const auto& g : mf_generators(req.f, req.grading, 6))
        if (!g.is_f && !g.field.apply(req.f).is_zero()) tangent = false;
    checks.emplace_back("hamiltonian fields annihilate f (weighted degree <= 6)", tangent);

    checks.emplace_back("every b-root has a nonzero quotient",
                        check_nonvanishing(r.bfunction, r.lengths));

    bool all_pass = true;
    for (const auto& [name, pass] : checks) all_pass = all_pass && pass;

    if (opt.format == "json") {
        ordered_json doc;
        doc["tool"] = kToolName;
        doc["version"] = kToolVersion;
        doc["input"] = req.text;
        ordered_json list = ordered_json::array();
        for (const auto& [name, pass] : checks)
            list.push_back(ordered_json{{"check", name}, {"pass", pass}});
        doc["checks"] = list;
        doc["all_pass"] = all_pass;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << detail::provenance_text(req.text, req.names, req.grading);
        std::cout << "\n";
        for (const auto& [name, pass] : checks)
            std::cout << (pass ? "ok:   " : "FAIL: ") << name << "\n";
        std::cout << (all_pass ? "all checks passed\n" : "CHECK FAILURE\n");
    }
    return all_pass ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact D-module invariants of quasi-homogeneous isolated singularities"};
    app.require_subcommand(1);

    Options opt;
    auto* analyze_cmd = app.add_subcommand("analyze", "full invariant report");
    add_common_options(analyze_cmd, opt);
    auto* lengths_cmd =
        app.add_subcommand("lengths", "lengths of D f^lambda / D f^(lambda+1)");
    add_common_options(lengths_cmd, opt, /*with_lambda=*/true);
    auto* bfunction_cmd = app.add_subcommand("bfunction", "Bernstein-Sato roots");
    add_common_options(bfunction_cmd, opt);
    auto* spectrum_cmd = app.add_subcommand("spectrum", "steenbrink spectrum table");
    add_common_options(spectrum_cmd, opt);
    auto* hamiltonian_cmd =
        app.add_subcommand("hamiltonian", "generators of the left ideal presenting M(f)");
    add_common_options(hamiltonian_cmd, opt, /*with_lambda=*/false, /*with_bound=*/true);
    auto* check_cmd = app.add_subcommand("check", "self-check identity suite");
    add_common_options(check_cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(opt);
        if (lengths_cmd->parsed()) return cmd_lengths(opt);
        if (bfunction_cmd->parsed()) return cmd_bfunction(opt);
        if (spectrum_cmd->parsed()) return cmd_spectrum(opt);
        if (hamiltonian_cmd->parsed()) return cmd_hamiltonian(opt);
        if (check_cmd->parsed()) return cmd_check(opt);
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: parse error at position " << e.position() << ": " << e.what()
                  << "\n";
        return 1;
    } catch (const NotQuasiHomogeneous& e) {
        std::cerr << "error: not quasi-homogeneous: " << e.what() << "\n";
        return 2;
    } catch (const NonIsolatedSingularity& e) {
        std::cerr << "error: non-isolated singularity: " << e.what() << "\n";
        return 3;
    } catch (const SmoothAtOrigin& e) {
        std::cerr << "error: smooth at origin: " << e.what() << "\n";
        return 4;
    } catch (const InternalCheckFailure& e) {
        std::cerr << "error: internal identity failed: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
