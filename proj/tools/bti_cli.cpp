#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "bti.h"

using json = nlohmann::ordered_json;

namespace {

int dispatch(const std::string& command, const json& request) {
    char* response = nullptr;
    int status = bti_run(command.c_str(), request.dump().c_str(), &response);
    if (response) {
        json out = json::parse(response, nullptr, false);
        if (!out.is_discarded() && out.contains("error"))
            std::cerr << out["error"].get<std::string>() << "\n";
        std::cout << response << "\n";
        bti_string_free(response);
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact stratification data of bubble-tree-compactified "
                 "instanton moduli spaces"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(bti_version()));

    long a = 0, b = 0, m = 0, m_prime = 0, p = 0, q = 0, k = 0;
    long charge = 0, weight = 0, m_out = 0, root_charge = 0, sing = 0;
    long depth_cap = 3, weight_cap = 8, max_total_weight = 6;
    bool balanced = false, literal_terminal = false;
    std::string signature_json, bundle_json, alpha_json, root_weights_json;

    auto add_signature = [&](CLI::App* cmd) {
        cmd->add_option("--signature", signature_json,
                        "orbifold signature as JSON, e.g. "
                        "'{\"alpha\":6,\"b2_plus\":0,\"group\":\"SO3\","
                        "\"singularities\":[{\"a\":2,\"b\":1},{\"a\":3,\"b\":1}]}'")
            ->required();
    };

    auto* cot = app.add_subcommand("cot-sum", "exact cotangent character sum");
    cot->add_option("--a", a)->required();
    cot->add_option("--b", b)->required();
    cot->add_option("--m", m)->required();

    auto* dimo = app.add_subcommand("dim-orbifold",
                                    "invariant moduli dimension for a signature/bundle");
    add_signature(dimo);
    dimo->add_option("--bundle", bundle_json,
                     "bundle type as JSON, e.g. '{\"charge\":2,\"weights\":[1,2]}'")
        ->required();

    auto* dims4 = app.add_subcommand("dim-s4", "invariant moduli dimension on S^4");
    dims4->add_option("--p", p)->required();
    dims4->add_option("--q", q)->required();
    dims4->add_option("--k", k)->required();
    dims4->add_option("--m", m)->required();
    dims4->add_option("--m-prime", m_prime)->required();
    dims4->add_flag("--balanced", balanced, "quotient by the dilation action");

    auto* austin = app.add_subcommand("austin-check",
                                      "existence criteria for invariant instantons");
    austin->add_option("--p", p)->required();
    austin->add_option("--q", q)->required();
    austin->add_option("--k", k)->required();
    austin->add_option("--m", m)->required();
    austin->add_option("--m-prime", m_prime)->required();
    austin->add_flag("--literal-terminal", literal_terminal,
                     "use the literal terminal condition m = m'_n");

    auto* enumt = app.add_subcommand("enumerate-trees",
                                     "bubble trees of total weight k, canonical forms");
    enumt->add_option("--k", k)->required();
    enumt->add_option("--max-total-weight", max_total_weight, "enumeration cap");

    auto* enumo = app.add_subcommand("enumerate-o-trees",
                                     "orbifold bubble trees for a target bundle");
    add_signature(enumo);
    enumo->add_option("--bundle", bundle_json)->required();
    enumo->add_option("--depth-cap", depth_cap, "singular chain length cap");
    enumo->add_option("--weight-cap", weight_cap, "bubbled instanton unit cap");

    auto* glue = app.add_subcommand("gluing-check",
                                    "single-edge gluing dimension consistency");
    add_signature(glue);
    glue->add_option("--root-charge", root_charge)->required();
    glue->add_option("--root-weights", root_weights_json, "JSON array of m_i^0")
        ->required();
    glue->add_option("--sing", sing, "singularity index of the bubble")->required();
    glue->add_option("--weight", weight, "bubble weight")->required();
    glue->add_option("--m-out", m_out, "north pole isotropy weight")->required();

    auto* demo = app.add_subcommand("cp2-demo",
                                    "matrix model pipeline on CP^2: alpha -> jump "
                                    "line -> pair -> phi");
    demo->add_option("--alpha", alpha_json,
                     "2x3 matrix as JSON, entries [\"re\",\"im\"] with rational "
                     "strings (default: the standard example)");
    demo->add_option("--a", a, "classify the pair under the Z_a generator");

    CLI11_PARSE(app, argc, argv);

    try {
        json req = json::object();
        if (cot->parsed()) {
            req["a"] = a;
            req["b"] = b;
            req["m"] = m;
            return dispatch("cot-sum", req);
        }
        if (dimo->parsed()) {
            req["signature"] = json::parse(signature_json);
            req["bundle"] = json::parse(bundle_json);
            return dispatch("dim-orbifold", req);
        }
        if (dims4->parsed() || austin->parsed()) {
            req["p"] = p;
            req["q"] = q;
            req["k"] = k;
            req["m"] = m;
            req["m_prime"] = m_prime;
            if (dims4->parsed()) {
                if (balanced) req["balanced"] = true;
                return dispatch("dim-s4", req);
            }
            if (literal_terminal) req["literal_terminal"] = true;
            return dispatch("austin-check", req);
        }
        if (enumt->parsed()) {
            req["k"] = k;
            req["max_total_weight"] = max_total_weight;
            return dispatch("enumerate-trees", req);
        }
        if (enumo->parsed()) {
            req["signature"] = json::parse(signature_json);
            req["bundle"] = json::parse(bundle_json);
            req["depth_cap"] = depth_cap;
            req["weight_cap"] = weight_cap;
            return dispatch("enumerate-o-trees", req);
        }
        if (glue->parsed()) {
            req["signature"] = json::parse(signature_json);
            req["root_charge"] = root_charge;
            req["root_weights"] = json::parse(root_weights_json);
            req["sing"] = sing;
            req["weight"] = weight;
            req["m_out"] = m_out;
            return dispatch("gluing-check", req);
        }
        if (demo->parsed()) {
            if (!alpha_json.empty()) req["alpha"] = json::parse(alpha_json);
            if (demo->count("--a")) req["a"] = a;
            return dispatch("cp2-demo", req);
        }
    } catch (const json::exception& e) {
        std::cerr << "bad JSON argument: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
