#pragma once

#include <vector>

#include "bti/orbifold_types.hpp"

namespace bti {

struct Validation {
    bool ok = true;
    std::vector<std::string> reasons;
    explicit operator bool() const { return ok; }
};

// Condition 1: each a_i divides alpha, gcd(a_i, b_i) = 1.
Validation validate_signature(const OrbifoldSignature& sig);

// Weight count, residue ranges, and the SU(2) parity rule. The rule is
// applied via lifts mod 2a_i: a weight at an even a_i forces the parity
// of its lift, so the tuple is admissible iff all forced parities agree.
// Weights at odd a_i lift to either parity and are unconstrained.
Validation validate_bundle(const OrbifoldSignature& sig, const BundleType& bundle);

// The index set I = {charge} x Z_{a_1} x ... x Z_{a_n}, with the SU(2)
// parity filter applied when sig.group == SU2.
std::vector<BundleType> enumerate_bundle_types(const OrbifoldSignature& sig, long charge);

// Gl^Gamma: the centralizer of the weight-m isotropy image.
// FullGroup when the image is central (m = 0 mod a), CircleGroup
// otherwise. Cyclic actions never produce CenterOnly.
GluingGroup gluing_parameter_group(Group group, unsigned a, long m);

}  // namespace bti
