// Deterministic rendering of analysis results: a fixed-layout text report
// and a machine-readable JSON document. Identical requests produce
// byte-identical output; rationals are always exact (p/q in text, [num,
// den] integer pairs in JSON).
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qhsing/forms.hpp"
#include "qhsing/invariants.hpp"

namespace qhsing {

inline constexpr const char* kToolName = "qhsing";
inline constexpr const char* kToolVersion = "0.1.0";

inline std::string bfunction_product_string(const BFunction& bf) {
    std::string out;
    for (const auto& root : bf.roots) {
        if (!out.empty()) out += " * ";
        const Rational neg = -root.value;
        out += "(s ";
        out += (neg < 0) ? "- " : "+ ";
        out += to_string(neg < 0 ? Rational(-neg) : neg);
        out += ")";
        if (root.multiplicity > 1) out += "^" + std::to_string(root.multiplicity);
    }
    return out;
}

namespace detail {

inline std::string join_int64(const std::vector<std::int64_t>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

inline std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
    return out;
}

inline std::string provenance_text(const std::string& input_echo,
                                   const std::vector<std::string>& names, const Grading& g) {
    std::string out;
    out += std::string(kToolName) + " " + kToolVersion + "\n";
    out += "input: " + input_echo + "\n";
    out += "variables: " + join_names(names) + "\n";
    out += "weights: (" + join_int64(g.weights, ", ") + ")\n";
    out += "weighted degree: " + std::to_string(g.degree) + "\n";
    return out;
}

}  // namespace detail

inline std::string text_report(const InvariantReport& r, const std::string& input_echo,
                               const std::vector<std::string>& names) {
    const std::size_t n = names.size();
    std::string out = detail::provenance_text(input_echo, names, r.grading);
    out += "\n";
    out += "milnor number mu: " + std::to_string(r.mu) + "\n";
    out += "reduced genus g: " + std::to_string(r.genus) + "\n";
    out += "h = dim H^" + std::to_string(n - 2) + "(X - 0, C): " + std::to_string(r.h) + "\n";
    out += "\n";
    out += "jacobi ring hilbert function (degree: dimension):\n";
    for (const auto& [k, dim] : r.jacobi.hilbert)
        out += "  " + std::to_string(k) + ": " + std::to_string(dim) + "\n";
    out += "\n";
    out += "b-function: " + bfunction_product_string(r.bfunction) + "\n";
    out += "b-function roots (root, multiplicity):\n";
    for (const auto& root : r.bfunction.roots)
        out += "  " + to_string(root.value) + ", " + std::to_string(root.multiplicity) + "\n";
    out += "\n";
    out += "lengths of D f^lambda / D f^(lambda+1) at the b-roots:\n";
    std::int64_t total = 0;
    for (const auto& [lambda, len] : r.lengths) {
        out += "  lambda = " + to_string(lambda) + ": " + std::to_string(len) + "\n";
        total += len;
    }
    out += "  total: " + std::to_string(total) + " = 1 + mu\n";
    out += "\n";
    out += "length of D[s] f^s / D[s] f^(s+1): " + std::to_string(r.len_ds) + "\n";
    out += "length of M(f): " + std::to_string(r.len_mf) + "\n";
    out += "length of H^1_f(R): " + std::to_string(r.len_h1f) + "\n";
    out += "kernel multiplicities: ker p = " + std::to_string(r.ker_p) +
           ", ker q_(-1) = " + std::to_string(r.ker_q_minus1) +
           ", ker pi = " + std::to_string(r.ker_pi) + "\n";
    out += std::string("R[1/f] generated by 1/f: ") + (r.generated_by_inverse ? "yes" : "no") +
           "\n";
    out += "\n";
    out += "structure of D[s] f^s / D[s] f^(s+1): delta^" +
           std::to_string(r.structure.delta_summand) + " (+) N\n";
    out += "  N filtration, bottom to top: delta^" +
           std::to_string(r.structure.layer_bottom_delta) + " | IC(X) | delta^" +
           std::to_string(r.structure.layer_top_delta) + "\n";
    out += "\n";
    out += "steenbrink spectrum (alpha = j + beta, monodromy eigenvalue exp(-2*pi*i*beta)):\n";
    for (const auto& e : r.spectrum)
        out += "  alpha = " + to_string(e.alpha) + ": j = " + std::to_string(e.j) +
               ", beta = " + to_string(e.beta) + ", dim = " + std::to_string(e.dim) + "\n";
    return out;
}

inline nlohmann::ordered_json json_rational(const Rational& r) {
    return nlohmann::ordered_json::array(
        {static_cast<std::int64_t>(r.get_num().get_si()),
         static_cast<std::int64_t>(r.get_den().get_si())});
}

inline nlohmann::ordered_json json_report(const InvariantReport& r, const std::string& input_echo,
                                          const std::vector<std::string>& names) {
    nlohmann::ordered_json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["input"] = input_echo;
    doc["variables"] = names;
    doc["weights"] = r.grading.weights;
    doc["degree"] = r.grading.degree;
    doc["mu"] = r.mu;
    doc["genus"] = r.genus;
    doc["h"] = r.h;
    nlohmann::ordered_json hilbert = nlohmann::ordered_json::array();
    for (const auto& [k, dim] : r.jacobi.hilbert)
        hilbert.push_back(nlohmann::ordered_json::array({k, dim}));
    doc["hilbert"] = hilbert;
    nlohmann::ordered_json roots = nlohmann::ordered_json::array();
    for (const auto& root : r.bfunction.roots) {
        roots.push_back(nlohmann::ordered_json::array(
            {static_cast<std::int64_t>(root.value.get_num().get_si()),
             static_cast<std::int64_t>(root.value.get_den().get_si()), root.multiplicity}));
    }
    doc["b_roots"] = roots;
    nlohmann::ordered_json lengths = nlohmann::ordered_json::array();
    for (const auto& [lambda, len] : r.lengths) {
        lengths.push_back(nlohmann::ordered_json::array(
            {static_cast<std::int64_t>(lambda.get_num().get_si()),
             static_cast<std::int64_t>(lambda.get_den().get_si()), len}));
    }
    doc["lengths"] = lengths;
    doc["len_ds"] = r.len_ds;
    doc["len_Mf"] = r.len_mf;
    doc["len_H1f"] = r.len_h1f;
    doc["ker_p"] = r.ker_p;
    doc["ker_q_minus_1"] = r.ker_q_minus1;
    doc["ker_pi"] = r.ker_pi;
    doc["generated_by_inverse"] = r.generated_by_inverse;
    doc["structure"] = {{"delta_summand", r.structure.delta_summand},
                        {"N_bottom_delta", r.structure.layer_bottom_delta},
                        {"N_middle", "IC(X)"},
                        {"N_top_delta", r.structure.layer_top_delta}};
    nlohmann::ordered_json spectrum = nlohmann::ordered_json::array();
    for (const auto& e : r.spectrum) {
        nlohmann::ordered_json entry;
        entry["alpha"] = json_rational(e.alpha);
        entry["beta"] = json_rational(e.beta);
        entry["j"] = e.j;
        entry["dim"] = e.dim;
        spectrum.push_back(entry);
    }
    doc["spectrum"] = spectrum;
    return doc;
}

}  // namespace qhsing
