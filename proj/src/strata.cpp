#include "bti/strata.hpp"

#include "bti/cyclotomic.hpp"
#include "bti/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace bti {

namespace {

using Kind = OBubbleTree::Kind;
using Attach = OBubbleTree::Attach;

long mod_a(long m, unsigned a) {
    long aa = static_cast<long>(a);
    return ((m % aa) + aa) % aa;
}

// plain total weight of a free subtree
long free_total(const OBubbleTree& t, int v) {
    long sum = t.verts[v].weight;
    for (int c : t.verts[v].children) sum += free_total(t, c);
    return sum;
}

// instanton units of the whole subtree, with per-vertex multiplicity
long units(const OBubbleTree& t, int v) {
    const auto& vert = t.verts[v];
    long mult;
    if (vert.kind == Kind::Singular)
        mult = t.sig.alpha / t.sig.singularities[vert.sing].a;
    else
        mult = t.sig.alpha;
    long sum = (v == 0) ? 0 : mult * vert.weight;
    for (int c : t.verts[v].children) sum += units(t, c);
    return sum;
}

// pullback weight of a chain subtree inside its covering S^4
long chain_pullback_weight(const OBubbleTree& t, int v) {
    const auto& vert = t.verts[v];
    long a = static_cast<long>(t.sig.singularities[vert.sing].a);
    long sum = vert.weight;
    for (int c : t.verts[v].children) {
        if (t.verts[c].kind == Kind::Singular)
            sum += chain_pullback_weight(t, c);
        else
            sum += a * free_total(t, c);
    }
    return sum;
}

}  // namespace

OBubbleTree OBubbleTree::trivial(const OrbifoldSignature& sig, const BundleType& bundle) {
    OBubbleTree t;
    t.sig = sig;
    t.root_charge = bundle.charge;
    t.root_weights = bundle.weights;
    Vertex root;
    root.kind = Kind::Root;
    t.verts.push_back(root);
    return t;
}

Validation validate_o_tree(const OBubbleTree& t) {
    Validation v = validate_signature(t.sig);
    if (!v.ok) return v;
    auto fail = [&](const std::string& r) {
        v.ok = false;
        v.reasons.push_back(r);
    };
    if (t.verts.empty() || t.verts[0].kind != Kind::Root) {
        fail("vertex 0 must be the root");
        return v;
    }
    if (t.root_weights.size() != t.sig.singularities.size()) {
        fail("root weight count does not match singularity count");
        return v;
    }
    for (size_t i = 0; i < t.root_weights.size(); ++i)
        if (t.root_weights[i] < 0 ||
            t.root_weights[i] >= static_cast<long>(t.sig.singularities[i].a))
            fail("root weight " + std::to_string(i) + " out of range");

    // tree structure: every non-root vertex is a child exactly once
    std::vector<int> indeg(t.verts.size(), 0);
    for (const auto& vert : t.verts)
        for (int c : vert.children) {
            if (c <= 0 || static_cast<size_t>(c) >= t.verts.size()) {
                fail("child id out of range");
                return v;
            }
            ++indeg[c];
        }
    for (size_t i = 1; i < t.verts.size(); ++i)
        if (indeg[i] != 1) {
            fail("vertex " + std::to_string(i) + " is not attached exactly once");
            return v;
        }

    for (size_t pi = 0; pi < t.verts.size(); ++pi) {
        const auto& parent = t.verts[pi];
        std::set<int> cone_used;
        for (int c : parent.children) {
            const auto& child = t.verts[c];
            if (child.weight < 0) fail("negative weight at vertex " + std::to_string(c));
            switch (parent.kind) {
                case Kind::Root:
                    if (child.kind == Kind::Singular) {
                        if (child.attach != Attach::ConePoint)
                            fail("chain head must attach at a cone point");
                        if (child.sing < 0 ||
                            static_cast<size_t>(child.sing) >= t.sig.singularities.size()) {
                            fail("bad singularity index at vertex " + std::to_string(c));
                            break;
                        }
                        if (!cone_used.insert(child.sing).second)
                            fail("two chain heads for singularity " +
                                 std::to_string(child.sing));
                        if (child.m_in != t.root_weights[child.sing])
                            fail("chain head m_in does not match root weight m_i^0");
                    } else if (child.attach != Attach::FreePoint) {
                        fail("free bubble on the base must attach at a free point");
                    }
                    break;
                case Kind::Singular:
                    if (child.kind == Kind::Singular) {
                        if (child.sing != parent.sing)
                            fail("chain changes singularity index mid-path");
                        if (child.attach != Attach::NorthPole)
                            fail("chain link must attach at the north pole");
                        if (child.m_in != parent.m_out)
                            fail("chain m_in/m_out mismatch at vertex " + std::to_string(c));
                        if (!cone_used.insert(-1).second)
                            fail("singular vertex has two chain children");
                    } else if (child.attach != Attach::FreePoint) {
                        fail("free bubble on a singular bubble must attach at a free point");
                    }
                    break;
                case Kind::Free:
                    if (child.kind != Kind::Free || child.attach != Attach::FreePoint)
                        fail("children of a free bubble must be free bubbles");
                    break;
            }
        }
    }
    if (!v.ok) return v;

    // residue ranges on singular vertices
    for (size_t i = 1; i < t.verts.size(); ++i) {
        const auto& vert = t.verts[i];
        if (vert.kind != Kind::Singular) continue;
        long a = static_cast<long>(t.sig.singularities[vert.sing].a);
        if (vert.m_in < 0 || vert.m_in >= a || vert.m_out < 0 || vert.m_out >= a)
            fail("isotropy residue out of range at vertex " + std::to_string(i));
    }

    // each chain must bubble a positive pullback weight
    for (int c : t.verts[0].children)
        if (t.verts[c].kind == Kind::Singular && chain_pullback_weight(t, c) <= 0)
            fail("singular chain at singularity " + std::to_string(t.verts[c].sing) +
                 " has zero pullback weight");

    // ghost rules on the pullback bubble tree
    for (size_t i = 1; i < t.verts.size(); ++i) {
        const auto& vert = t.verts[i];
        if (vert.weight != 0) continue;
        if (vert.kind == Kind::Free) {
            if (vert.children.size() < 2) {
                fail("ghost free bubble " + std::to_string(i) + " has fewer than 2 children");
                continue;
            }
            for (int c : vert.children)
                if (free_total(t, c) <= 0)
                    fail("ghost free bubble " + std::to_string(i) +
                         " has a zero-weight child subtree");
        } else {
            long a = static_cast<long>(t.sig.singularities[vert.sing].a);
            long pullback_children = 0;
            for (int c : vert.children) {
                if (t.verts[c].kind == Kind::Singular) {
                    pullback_children += 1;
                    if (chain_pullback_weight(t, c) <= 0)
                        fail("ghost singular bubble " + std::to_string(i) +
                             " has a zero-weight chain tail");
                } else {
                    pullback_children += a;
                }
            }
            if (pullback_children < 2)
                fail("ghost singular bubble " + std::to_string(i) +
                     " pulls back to a ghost with fewer than 2 children");
        }
    }
    return v;
}

long total_charge(const OBubbleTree& t) {
    long bubbled = units(t, 0);
    return t.sig.group == Group::SU2 ? t.root_charge + bubbled
                                     : t.root_charge - 4 * bubbled;
}

BundleType target_bundle(const OBubbleTree& t) {
    BundleType b;
    b.charge = total_charge(t);
    b.weights = t.root_weights;
    for (int c : t.verts[0].children) {
        if (t.verts[c].kind != Kind::Singular) continue;
        int cur = c;
        for (;;) {
            int next = -1;
            for (int cc : t.verts[cur].children)
                if (t.verts[cc].kind == Kind::Singular) next = cc;
            if (next < 0) break;
            cur = next;
        }
        b.weights[t.verts[c].sing] = t.verts[cur].m_out;
    }
    return b;
}

namespace {

std::string encode_vertex(const OBubbleTree& t, int v) {
    const auto& vert = t.verts[v];
    std::vector<std::string> free_kids;
    std::string chain_kid;
    for (int c : vert.children) {
        if (t.verts[c].kind == Kind::Singular)
            chain_kid = encode_vertex(t, c);
        else
            free_kids.push_back(encode_vertex(t, c));
    }
    std::sort(free_kids.begin(), free_kids.end());
    std::string s;
    if (vert.kind == Kind::Singular)
        s = "S" + std::to_string(vert.sing) + ":" + std::to_string(vert.weight) + ":" +
            std::to_string(vert.m_in) + ">" + std::to_string(vert.m_out);
    else
        s = std::to_string(vert.weight);
    s += '[';
    if (!chain_kid.empty()) s += chain_kid + ";";
    for (size_t i = 0; i < free_kids.size(); ++i) {
        if (i) s += ',';
        s += free_kids[i];
    }
    s += ']';
    return s;
}

}  // namespace

std::string o_tree_encoding(const OBubbleTree& t) {
    std::string s = "O{" + std::to_string(t.root_charge) + ";m0=(";
    for (size_t i = 0; i < t.root_weights.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(t.root_weights[i]);
    }
    s += ")};";
    std::vector<std::string> chains;
    std::vector<std::string> free_kids;
    for (int c : t.verts[0].children) {
        if (t.verts[c].kind == Kind::Singular)
            chains.push_back(encode_vertex(t, c));
        else
            free_kids.push_back(encode_vertex(t, c));
    }
    std::sort(chains.begin(), chains.end());
    std::sort(free_kids.begin(), free_kids.end());
    for (const auto& c : chains) s += c + ";";
    s += "free=(";
    for (size_t i = 0; i < free_kids.size(); ++i) {
        if (i) s += ',';
        s += free_kids[i];
    }
    s += ")";
    return s;
}

namespace {

// balanced dimension of a free bubble subtree (generalised instanton
// on S^4, quotient by translations and dilations)
Rational balanced_free_dim(const OBubbleTree& t, int v) {
    Rational d = 8 * t.verts[v].weight - 8;
    for (int c : t.verts[v].children) d += 4 + balanced_free_dim(t, c);
    return d;
}

Rational balanced_link_dim(const OBubbleTree& t, int v) {
    const auto& vert = t.verts[v];
    const auto& s = t.sig.singularities[vert.sing];
    int n2 = (mod_a(vert.m_in, s.a) != 0) + (mod_a(vert.m_out, s.a) != 0);
    Rational d = make_rational(8 * vert.weight, s.a);
    d += n2 - 4;
    d += cot_sum(s.a, s.b, vert.m_out) - cot_sum(s.a, s.b, vert.m_in);
    return d;
}

}  // namespace

StratumReport stratum_dimension(const OBubbleTree& t) {
    Validation v = validate_o_tree(t);
    if (!v.ok) {
        std::string msg = "invalid O-bubble-tree";
        for (const auto& r : v.reasons) msg += "; " + r;
        throw validation_error(msg);
    }
    StratumReport report;
    bool trivial_bg = t.root_charge == 0;
    for (long m : t.root_weights)
        if (m != 0) trivial_bg = false;
    report.excluded = trivial_bg;  // dimension still reported for bookkeeping

    BundleType background;
    background.charge = t.root_charge;
    background.weights = t.root_weights;
    Rational total = invariant_moduli_rational(t.sig, background);

    for (size_t i = 1; i < t.verts.size(); ++i) {
        const auto& vert = t.verts[i];
        if (vert.kind == Kind::Singular) {
            total += balanced_link_dim(t, static_cast<int>(i));
            // chains of length > 1 extrapolate the single-edge theorem
            for (int c : vert.children)
                if (t.verts[c].kind == Kind::Singular) report.extrapolated = true;
        } else if (vert.attach == Attach::FreePoint) {
            int parent = -1;
            for (size_t p = 0; p < t.verts.size(); ++p)
                for (int c : t.verts[p].children)
                    if (c == static_cast<int>(i)) parent = static_cast<int>(p);
            if (t.verts[parent].kind == Kind::Free) continue;  // counted by its top bubble
            total += 4 + balanced_free_dim(t, static_cast<int>(i));
        }
    }
    if (!is_integer(total))
        throw not_realizable("stratum dimension " + to_string(total) + " is not an integer");
    report.dimension = to_long(total);
    return report;
}

int gluing_fibre_dimension(const OBubbleTree& t, int child) {
    if (child <= 0 || static_cast<size_t>(child) >= t.verts.size())
        throw validation_error("gluing_fibre_dimension: vertex id out of range");
    const auto& vert = t.verts[child];
    if (vert.attach == Attach::FreePoint) return 4;  // trivial isotropy
    unsigned a = t.sig.singularities[vert.sing].a;
    return mod_a(vert.m_in, a) == 0 ? 4 : 2;
}

GluingCaseReport gluing_consistency_check(const OBubbleTree& t) {
    Validation v = validate_o_tree(t);
    if (!v.ok) throw validation_error("invalid O-bubble-tree: " +
                                      (v.reasons.empty() ? "" : v.reasons.front()));
    if (t.verts.size() != 2 || t.verts[1].kind != Kind::Singular)
        throw validation_error(
            "gluing_consistency_check expects a single-edge tree with one singular bubble");

    const auto& bubble = t.verts[1];
    const auto& s = t.sig.singularities[bubble.sing];
    const bool m0_zero = mod_a(bubble.m_in, s.a) == 0;
    const bool m_zero = mod_a(bubble.m_out, s.a) == 0;

    GluingCaseReport r;
    r.parity_case = !m0_zero && !m_zero ? 1 : (m0_zero && !m_zero ? 2 : (!m0_zero ? 3 : 4));
    for (size_t i = 0; i < t.root_weights.size(); ++i)
        if (mod_a(t.root_weights[i], t.sig.singularities[i].a) != 0) ++r.n_prime;
    r.n_double_prime = (!m0_zero) + (!m_zero);
    BundleType target = target_bundle(t);
    for (size_t i = 0; i < target.weights.size(); ++i)
        if (mod_a(target.weights[i], t.sig.singularities[i].a) != 0) ++r.n_triple_prime;
    r.dim_gluing_group =
        dimension(gluing_parameter_group(t.sig.group, s.a, bubble.m_in));

    BundleType background;
    background.charge = t.root_charge;
    background.weights = t.root_weights;
    r.dim_background = invariant_moduli_rational(t.sig, background);
    r.dim_bubble = balanced_link_dim(t, 1);
    r.dim_glued = invariant_moduli_rational(t.sig, target);

    bool dims_match =
        r.dim_glued == r.dim_background + r.dim_bubble + r.dim_gluing_group + 1;
    bool counts_match =
        r.n_triple_prime == -4 + r.n_prime + r.n_double_prime + r.dim_gluing_group + 1;
    r.balanced = dims_match && counts_match;
    return r;
}

namespace {

struct ChainVertexChoice {
    long weight;
    long m_out;
    std::vector<const BubbleTree*> free_subtrees;
};

using ChainChoice = std::vector<ChainVertexChoice>;  // head first

// all multisets of free bubble subtrees costing alpha * total <= budget
void free_multisets(unsigned alpha, long budget,
                    std::vector<std::vector<const BubbleTree*>>& out) {
    std::vector<const BubbleTree*> pool;
    std::vector<long> cost;
    for (long tw = 1; tw * static_cast<long>(alpha) <= budget; ++tw)
        for (const auto& s : enumerate_subtrees(tw)) {
            pool.push_back(&s);
            cost.push_back(tw * alpha);
        }
    std::vector<const BubbleTree*> cur;
    std::function<void(size_t, long)> rec = [&](size_t from, long left) {
        out.push_back(cur);
        for (size_t i = from; i < pool.size(); ++i) {
            if (cost[i] > left) continue;
            cur.push_back(pool[i]);
            rec(i, left - cost[i]);
            cur.pop_back();
        }
    };
    rec(0, budget);
}

void append_free_subtree(OBubbleTree& t, int parent, const BubbleTree& sub, int sub_root) {
    OBubbleTree::Vertex v;
    v.kind = Kind::Free;
    v.attach = Attach::FreePoint;
    v.weight = sub.verts[sub_root].weight;
    int id = static_cast<int>(t.verts.size());
    t.verts.push_back(v);
    t.verts[parent].children.push_back(id);
    for (int c : sub.verts[sub_root].children) append_free_subtree(t, id, sub, c);
}

}  // namespace

std::vector<OBubbleTree> enumerate_o_trees(const OrbifoldSignature& sig,
                                           const BundleType& bundle,
                                           const OEnumerationConfig& cfg) {
    if (cfg.depth_cap < 1 || cfg.weight_cap < 0)
        throw validation_error("enumerate_o_trees: caps must be positive");
    Validation bv = validate_bundle(sig, bundle);
    if (!bv.ok) throw validation_error("enumerate_o_trees: invalid target bundle: " +
                                       (bv.reasons.empty() ? "" : bv.reasons.front()));
    const long alpha = static_cast<long>(sig.alpha);
    long unit_cap = cfg.weight_cap;
    if (sig.group == Group::SU2 && bundle.charge < unit_cap) unit_cap = bundle.charge;
    if (unit_cap < 0) unit_cap = 0;
    if (unit_cap > 1000000)
        throw resource_limit("enumerate_o_trees: weight cap too large");

    // chain options per singularity: cost in units, assembled lazily
    struct ChainOption {
        long cost = 0;
        ChainChoice chain;  // empty = no chain
    };
    std::vector<std::vector<ChainOption>> options(sig.singularities.size());
    for (size_t i = 0; i < sig.singularities.size(); ++i) {
        const auto& s = sig.singularities[i];
        const long a = static_cast<long>(s.a);
        const long link_mult = alpha / a;
        options[i].push_back({0, {}});
        // chains of length 1..depth_cap, head first; tail m_out is the
        // target weight m_i
        std::function<void(ChainChoice&, long)> extend = [&](ChainChoice& cur, long cost) {
            if (static_cast<int>(cur.size()) >= cfg.depth_cap) return;
            for (long w = 0; w * link_mult + cost <= unit_cap; ++w) {
                std::vector<std::vector<const BubbleTree*>> frees;
                free_multisets(sig.alpha, unit_cap - cost - w * link_mult, frees);
                for (auto& fs : frees) {
                    long fcost = 0;
                    for (const auto* f : fs) fcost += alpha * f->total_weight(0);
                    long c2 = cost + w * link_mult + fcost;
                    for (long m_out = 0; m_out < a; ++m_out) {
                        cur.push_back({w, m_out, fs});
                        if (m_out == bundle.weights[i])
                            options[i].push_back({c2, cur});
                        extend(cur, c2);
                        cur.pop_back();
                    }
                }
            }
        };
        ChainChoice cur;
        extend(cur, 0);
    }

    std::vector<OBubbleTree> out;
    std::set<std::string> seen;

    // product over chain options, then root free bubbles on the rest
    std::vector<size_t> pick(sig.singularities.size(), 0);
    for (;;) {
        long chain_cost = 0;
        for (size_t i = 0; i < pick.size(); ++i) chain_cost += options[i][pick[i]].cost;
        if (chain_cost <= unit_cap) {
            std::vector<std::vector<const BubbleTree*>> root_frees;
            free_multisets(sig.alpha, unit_cap - chain_cost, root_frees);
            for (auto& fs : root_frees) {
                long fcost = 0;
                for (const auto* f : fs) fcost += alpha * f->total_weight(0);
                long total_units = chain_cost + fcost;
                long root_charge = sig.group == Group::SU2
                                       ? bundle.charge - total_units
                                       : bundle.charge + 4 * total_units;
                if (sig.group == Group::SU2 && root_charge < 0) continue;

                // root weights: chain heads pick m_in freely; without a
                // chain the root weight equals the target weight
                std::vector<size_t> chain_idx;
                for (size_t i = 0; i < pick.size(); ++i)
                    if (!options[i][pick[i]].chain.empty()) chain_idx.push_back(i);
                std::vector<long> head(chain_idx.size(), 0);
                for (;;) {
                    OBubbleTree t;
                    t.sig = sig;
                    t.root_charge = root_charge;
                    t.root_weights = bundle.weights;
                    for (size_t j = 0; j < chain_idx.size(); ++j)
                        t.root_weights[chain_idx[j]] = head[j];
                    OBubbleTree::Vertex root;
                    root.kind = Kind::Root;
                    t.verts.push_back(root);
                    for (size_t i = 0; i < pick.size(); ++i) {
                        const auto& chain = options[i][pick[i]].chain;
                        int parent = 0;
                        long m_in = t.root_weights[i];
                        for (size_t li = 0; li < chain.size(); ++li) {
                            OBubbleTree::Vertex v;
                            v.kind = Kind::Singular;
                            v.attach = li == 0 ? Attach::ConePoint : Attach::NorthPole;
                            v.sing = static_cast<int>(i);
                            v.weight = chain[li].weight;
                            v.m_in = m_in;
                            v.m_out = chain[li].m_out;
                            int id = static_cast<int>(t.verts.size());
                            t.verts.push_back(v);
                            t.verts[parent].children.push_back(id);
                            for (const auto* f : chain[li].free_subtrees)
                                append_free_subtree(t, id, *f, 0);
                            parent = id;
                            m_in = chain[li].m_out;
                        }
                    }
                    for (const auto* f : fs) append_free_subtree(t, 0, *f, 0);

                    BundleType background;
                    background.charge = t.root_charge;
                    background.weights = t.root_weights;
                    if (validate_o_tree(t) && validate_bundle(sig, background) &&
                        target_bundle(t).charge == bundle.charge) {
                        std::string enc = o_tree_encoding(t);
                        if (seen.insert(enc).second) out.push_back(std::move(t));
                    }

                    // odometer over head residues
                    size_t j = 0;
                    for (; j < head.size(); ++j) {
                        long a = static_cast<long>(
                            sig.singularities[chain_idx[j]].a);
                        if (++head[j] < a) break;
                        head[j] = 0;
                    }
                    if (j == head.size()) break;
                    if (head.empty()) break;
                }
            }
        }
        size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < options[i].size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) break;
        if (pick.empty()) break;
    }
    return out;
}

}  // namespace bti
