#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bti/bubble_tree.hpp"
#include "bti/index_formulas.hpp"
#include "bti/orbifold.hpp"

namespace bti {

// Bubble tree enriched with singular-bubble chains and isotropy
// weights, compatible with the cyclic quotient. Vertex 0 is the root
// (the base orbifold); weights are in instanton units upstairs.
struct OBubbleTree {
    enum class Kind { Root, Singular, Free };
    enum class Attach { None, ConePoint, NorthPole, FreePoint };

    struct Vertex {
        Kind kind = Kind::Free;
        Attach attach = Attach::None;
        int sing = -1;       // singularity index, Singular only
        long m_in = 0;       // isotropy weight over the south pole, mod a_i
        long m_out = 0;      // isotropy weight over the north pole, mod a_i
        long weight = 0;     // instanton units
        std::vector<int> children;
    };

    OrbifoldSignature sig;
    long root_charge = 0;            // upstairs c2 (SU2) or p1 (SO3) of the background
    std::vector<long> root_weights;  // m_i^0
    std::vector<Vertex> verts;       // verts[0].kind == Root

    static OBubbleTree trivial(const OrbifoldSignature& sig, const BundleType& bundle);
};

Validation validate_o_tree(const OBubbleTree& t);

// Upstairs charge of the whole configuration: root charge plus
// multiplicity * weight per bubble (alpha/a_i on a singular chain,
// alpha at free points). For SO3 each unit of bubbled charge moves p1
// by -4.
long total_charge(const OBubbleTree& t);

// The target bundle type O reached by this tree (chain tails override
// the root weights).
BundleType target_bundle(const OBubbleTree& t);

// Deterministic encoding for de-duplication and reports.
std::string o_tree_encoding(const OBubbleTree& t);

struct StratumReport {
    bool excluded = false;      // trivial background connection stratum
    bool extrapolated = false;  // singular chain longer than one link
    long dimension = 0;
};

// Recursive stratum dimension: background index, +4 plus balanced
// subtree dimension per free gluing point, balanced invariant S^4
// dimension per singular chain link (cone points carry no positional
// freedom). Pinned by the gluing/contraction consistency invariants,
// not a closed form. Throws not_realizable / precondition_failed.
StratumReport stratum_dimension(const OBubbleTree& t);

// Per-edge fibre dimension of the invariant gluing data: 4 for trivial
// isotropy at the attaching point, 2 otherwise.
int gluing_fibre_dimension(const OBubbleTree& t, int child);

struct GluingCaseReport {
    int parity_case = 0;  // 1: m0!=0,m!=0; 2: m0==0,m!=0; 3: m0!=0,m==0; 4: both 0
    int n_prime = 0;
    int n_double_prime = 0;
    int n_triple_prime = 0;
    int dim_gluing_group = 0;
    Rational dim_background;   // dim(U1), may be non-integral off the image
    Rational dim_bubble;       // dim(U2^b)
    Rational dim_glued;        // dim(M^O)
    bool balanced = false;     // glued == background + bubble + dim(I) + 1
};

// The four-parity-case dimension check for a single-edge tree whose
// only bubble sits on a singular chain.
GluingCaseReport gluing_consistency_check(const OBubbleTree& t);

struct OEnumerationConfig {
    int depth_cap = 3;
    long weight_cap = 8;  // bound on bubbled instanton units upstairs
};

// All valid O-bubble-trees whose target bundle matches `bundle`, within
// the caps, de-duplicated by encoding.
std::vector<OBubbleTree> enumerate_o_trees(const OrbifoldSignature& sig,
                                           const BundleType& bundle,
                                           const OEnumerationConfig& cfg = {});

}  // namespace bti
