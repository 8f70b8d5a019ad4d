#include "bti/api.hpp"

#include <json.hpp>

#include "bti/bubble_tree.hpp"
#include "bti/cp2.hpp"
#include "bti/cyclotomic.hpp"
#include "bti/equivariant_s4.hpp"
#include "bti/errors.hpp"
#include "bti/index_formulas.hpp"
#include "bti/orbifold.hpp"
#include "bti/strata.hpp"

namespace bti {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

Rational parse_rational(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        Rational r;
        if (r.set_str(j.get<std::string>(), 10) != 0)
            throw validation_error("bad rational literal: " + j.get<std::string>());
        r.canonicalize();
        return r;
    }
    throw validation_error("rational must be an integer or a \"p/q\" string");
}

long require_long(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw validation_error(std::string("missing integer field \"") + key + "\"");
    return j[key].get<long>();
}

long long_or(const json& j, const char* key, long fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number_integer())
        throw validation_error(std::string("field \"") + key + "\" must be an integer");
    return j[key].get<long>();
}

OrbifoldSignature parse_signature(const json& j) {
    if (!j.is_object()) throw validation_error("\"signature\" must be an object");
    OrbifoldSignature sig;
    long alpha = require_long(j, "alpha");
    if (alpha < 1) throw validation_error("alpha must be positive");
    sig.alpha = static_cast<unsigned>(alpha);
    sig.b2_plus = static_cast<unsigned>(long_or(j, "b2_plus", 0));
    std::string g = j.value("group", "SU2");
    if (g == "SU2")
        sig.group = Group::SU2;
    else if (g == "SO3")
        sig.group = Group::SO3;
    else
        throw validation_error("group must be \"SU2\" or \"SO3\"");
    if (j.contains("singularities"))
        for (const auto& s : j["singularities"]) {
            long a = require_long(s, "a");
            if (a < 1) throw validation_error("singularity order a must be positive");
            sig.singularities.push_back(
                {static_cast<unsigned>(a), require_long(s, "b")});
        }
    Validation v = validate_signature(sig);
    if (!v.ok)
        throw validation_error(v.reasons.empty() ? "invalid signature" : v.reasons.front());
    return sig;
}

BundleType parse_bundle(const json& j) {
    if (!j.is_object()) throw validation_error("\"bundle\" must be an object");
    BundleType b;
    b.charge = require_long(j, "charge");
    if (j.contains("w2_label")) {
        b.w2_fixed = true;
        b.w2_label = j["w2_label"].get<std::string>();
    }
    if (j.contains("weights"))
        for (const auto& w : j["weights"]) b.weights.push_back(w.get<long>());
    return b;
}

json signature_json(const OrbifoldSignature& sig) {
    json s;
    s["alpha"] = sig.alpha;
    s["b2_plus"] = sig.b2_plus;
    s["group"] = to_string(sig.group);
    s["singularities"] = json::array();
    for (const auto& x : sig.singularities)
        s["singularities"].push_back(json{{"a", x.a}, {"b", x.b}});
    return s;
}

GaussQ parse_gauss(const json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw validation_error("complex literal must be [re, im]");
        return {parse_rational(j[0]), parse_rational(j[1])};
    }
    return {parse_rational(j), Rational(0)};
}

json gauss_json(const GaussQ& z) {
    return json::array({to_string(z.re), to_string(z.im)});
}

json point_json(const ProjPoint& z) {
    return json::array({gauss_json(z[0]), gauss_json(z[1]), gauss_json(z[2])});
}

json cmd_cot_sum(const json& in) {
    long a = require_long(in, "a");
    if (a < 1) throw validation_error("a must be positive");
    json out;
    out["value"] = to_string(
        cot_sum(static_cast<unsigned>(a), require_long(in, "b"), require_long(in, "m")));
    return out;
}

json cmd_dim_orbifold(const json& in) {
    if (!in.contains("signature")) throw validation_error("missing \"signature\"");
    if (!in.contains("bundle")) throw validation_error("missing \"bundle\"");
    OrbifoldSignature sig = parse_signature(in["signature"]);
    BundleType bundle = parse_bundle(in["bundle"]);
    json out;
    out["dimension"] = dim_invariant_moduli(sig, bundle);
    out["exact"] = to_string(invariant_moduli_rational(sig, bundle));
    return out;
}

json cmd_dim_s4(const json& in) {
    long p = require_long(in, "p");
    if (p < 1) throw validation_error("p must be positive");
    S4Triple triple{require_long(in, "k"), require_long(in, "m"),
                    require_long(in, "m_prime")};
    long q = require_long(in, "q");
    json out;
    bool balanced = in.value("balanced", false);
    out["dimension"] = balanced
                           ? dim_s4_invariant_balanced(static_cast<unsigned>(p), q, triple)
                           : dim_s4_invariant(static_cast<unsigned>(p), q, triple);
    return out;
}

json cmd_austin_check(const json& in) {
    long p = require_long(in, "p");
    if (p < 1) throw validation_error("p must be positive");
    S4Action action{static_cast<unsigned>(p), require_long(in, "q")};
    S4Triple triple{require_long(in, "k"), require_long(in, "m"),
                    require_long(in, "m_prime")};
    json out;
    out["witnesses"] = json::array();
    for (const auto& [a, b] : congruence_witnesses(action, triple))
        out["witnesses"].push_back(json::array({a, b}));
    out["single_level"] = triple.k >= 1 && single_level_admissible(action, triple);
    out["exists"] = triple.k >= 1 &&
                    exists_invariant(action, triple, in.value("literal_terminal", false));
    return out;
}

json cmd_enumerate_trees(const json& in) {
    EnumerationConfig cfg;
    cfg.max_total_weight = long_or(in, "max_total_weight", cfg.max_total_weight);
    auto trees = enumerate_trees(require_long(in, "k"), cfg);
    json out;
    out["count"] = trees.size();
    out["trees"] = trees;
    return out;
}

json cmd_enumerate_o_trees(const json& in) {
    if (!in.contains("signature")) throw validation_error("missing \"signature\"");
    if (!in.contains("bundle")) throw validation_error("missing \"bundle\"");
    OrbifoldSignature sig = parse_signature(in["signature"]);
    BundleType bundle = parse_bundle(in["bundle"]);
    OEnumerationConfig cfg;
    cfg.depth_cap = static_cast<int>(long_or(in, "depth_cap", cfg.depth_cap));
    cfg.weight_cap = long_or(in, "weight_cap", cfg.weight_cap);
    auto trees = enumerate_o_trees(sig, bundle, cfg);
    json out;
    out["count"] = trees.size();
    out["trees"] = json::array();
    for (const auto& t : trees) {
        json rec;
        rec["encoding"] = o_tree_encoding(t);
        rec["total_charge"] = total_charge(t);
        try {
            StratumReport r = stratum_dimension(t);
            if (r.excluded) {
                rec["excluded"] = true;
            } else {
                rec["dimension"] = r.dimension;
                if (r.extrapolated) rec["extrapolated"] = true;
            }
        } catch (const not_realizable& e) {
            rec["not_realizable"] = e.what();
        }
        out["trees"].push_back(std::move(rec));
    }
    return out;
}

json cmd_gluing_check(const json& in) {
    if (!in.contains("signature")) throw validation_error("missing \"signature\"");
    OrbifoldSignature sig = parse_signature(in["signature"]);
    long sing = require_long(in, "sing");
    if (sing < 0 || static_cast<size_t>(sing) >= sig.singularities.size())
        throw validation_error("singularity index out of range");

    OBubbleTree t;
    t.sig = sig;
    t.root_charge = require_long(in, "root_charge");
    if (!in.contains("root_weights"))
        throw validation_error("missing \"root_weights\"");
    for (const auto& w : in["root_weights"]) t.root_weights.push_back(w.get<long>());

    OBubbleTree::Vertex root;
    root.kind = OBubbleTree::Kind::Root;
    t.verts.push_back(root);
    OBubbleTree::Vertex bub;
    bub.kind = OBubbleTree::Kind::Singular;
    bub.attach = OBubbleTree::Attach::ConePoint;
    bub.sing = static_cast<int>(sing);
    bub.weight = require_long(in, "weight");
    bub.m_in = t.root_weights.at(sing);
    bub.m_out = require_long(in, "m_out");
    t.verts.push_back(bub);
    t.verts[0].children.push_back(1);

    GluingCaseReport r = gluing_consistency_check(t);
    json out;
    out["tree"] = o_tree_encoding(t);
    out["case"] = r.parity_case;
    out["dims"] = {{"n_prime", r.n_prime},
                   {"n_double_prime", r.n_double_prime},
                   {"n_triple_prime", r.n_triple_prime},
                   {"gluing_group", r.dim_gluing_group},
                   {"background", to_string(r.dim_background)},
                   {"bubble", to_string(r.dim_bubble)},
                   {"glued", to_string(r.dim_glued)}};
    out["balanced"] = r.balanced;
    return out;
}

json cmd_cp2_demo(const json& in) {
    AlphaMatrix alpha;
    if (in.contains("alpha")) {
        const auto& rows = in["alpha"];
        if (!rows.is_array() || rows.size() != 2 || rows[0].size() != 3 ||
            rows[1].size() != 3)
            throw validation_error("\"alpha\" must be a 2x3 matrix");
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 3; ++c) alpha.rows[r][c] = parse_gauss(rows[r][c]);
    } else {
        alpha.rows[0] = {GaussQ(1), GaussQ(0), GaussQ(0)};
        alpha.rows[1] = {GaussQ(0), GaussQ(1), GaussQ(0)};
    }
    json out;
    out["alpha"] = json::array();
    for (const auto& row : alpha.rows) {
        json jr = json::array();
        for (const auto& e : row) jr.push_back(gauss_json(e));
        out["alpha"].push_back(jr);
    }
    out["rank"] = rank(alpha);
    ProjPoint z = jump_line(alpha);
    out["jump_line"] = point_json(z);
    LinePair pair = second_kind_pair(alpha);
    out["pair"] = json::array({point_json(pair.u), point_json(pair.v)});
    out["intersection_is_jump_line"] = proj_equal(jump_line(phi(pair)), z);
    AlphaMatrix back = phi(pair);
    out["phi"] = json::array();
    for (const auto& row : back.rows) {
        json jr = json::array();
        for (const auto& e : row) jr.push_back(gauss_json(e));
        out["phi"].push_back(jr);
    }
    if (in.contains("a")) {
        long a = require_long(in, "a");
        if (a < 2) throw validation_error("a must be >= 2");
        out["za_fixed"] = to_string(za_fixed(pair, static_cast<unsigned>(a)));
    }
    DimChecksReport d = dim_checks();
    out["dim_checks"] = {{"p1_minus3", d.dim_p1_minus3},
                         {"p1_minus7", d.dim_p1_minus7},
                         {"base_dim", d.base_dim},
                         {"fibre_dim", d.fibre_dim},
                         {"consistent", d.consistent}};
    return out;
}

}  // namespace

const char* api_version() { return "1.0.0"; }

int run_command(const std::string& command, const std::string& request_json,
                std::string& response_json) {
    json out;
    out["schema_version"] = kSchemaVersion;
    int status = kOk;
    try {
        json in = request_json.empty() ? json::object() : json::parse(request_json);
        if (!in.is_object()) throw validation_error("request must be a JSON object");
        if (command == "cot-sum")
            out.update(cmd_cot_sum(in));
        else if (command == "dim-orbifold")
            out.update(cmd_dim_orbifold(in));
        else if (command == "dim-s4")
            out.update(cmd_dim_s4(in));
        else if (command == "austin-check")
            out.update(cmd_austin_check(in));
        else if (command == "enumerate-trees")
            out.update(cmd_enumerate_trees(in));
        else if (command == "enumerate-o-trees")
            out.update(cmd_enumerate_o_trees(in));
        else if (command == "gluing-check")
            out.update(cmd_gluing_check(in));
        else if (command == "cp2-demo")
            out.update(cmd_cp2_demo(in));
        else
            throw validation_error("unknown command: " + command);
    } catch (const json::exception& e) {
        out["error"] = e.what();
        status = kValidationError;
    } catch (const validation_error& e) {
        out["error"] = e.what();
        status = kValidationError;
    } catch (const precondition_failed& e) {
        out["error"] = e.what();
        status = kValidationError;
    } catch (const not_realizable& e) {
        out["error"] = e.what();
        status = kNotRealizable;
    } catch (const resource_limit& e) {
        out["error"] = e.what();
        status = kResourceLimit;
    } catch (const std::exception& e) {
        out["error"] = e.what();
        status = kInternalError;
    }
    response_json = out.dump();
    return status;
}

}  // namespace bti
