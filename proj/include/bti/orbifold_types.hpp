#pragma once

#include <string>
#include <vector>

namespace bti {

enum class Group { SU2, SO3 };

inline const char* to_string(Group g) { return g == Group::SU2 ? "SU2" : "SO3"; }

struct Singularity {
    unsigned a = 1;  // divides alpha
    long b = 1;      // coprime to a; cone is cL(a, b)
};

// (alpha, b2+, {(a_i, b_i)}) of a cyclic-quotient 4-orbifold.
// b2_plus refers to the quotient and is always user-supplied.
struct OrbifoldSignature {
    unsigned alpha = 1;
    unsigned b2_plus = 0;
    Group group = Group::SU2;
    std::vector<Singularity> singularities;
};

// Equivariant bundle type O: charge plus one isotropy weight per
// singular point. w2 is opaque input data, never computed.
struct BundleType {
    long charge = 0;  // c2 for SU2, p1 for SO3
    bool w2_fixed = false;
    std::string w2_label;
    std::vector<long> weights;  // weights[i] is a residue mod a_i
};

enum class GluingGroup { FullGroup, CircleGroup, CenterOnly };

inline int dimension(GluingGroup g) {
    switch (g) {
        case GluingGroup::FullGroup: return 3;
        case GluingGroup::CircleGroup: return 1;
        case GluingGroup::CenterOnly: return 0;
    }
    return 0;
}

inline const char* to_string(GluingGroup g) {
    switch (g) {
        case GluingGroup::FullGroup: return "FullGroup";
        case GluingGroup::CircleGroup: return "CircleGroup";
        case GluingGroup::CenterOnly: return "CenterOnly";
    }
    return "?";
}

}  // namespace bti
