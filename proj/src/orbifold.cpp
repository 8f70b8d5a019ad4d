#include "bti/orbifold.hpp"

#include <numeric>

namespace bti {

Validation validate_signature(const OrbifoldSignature& sig) {
    Validation v;
    if (sig.alpha < 1) {
        v.ok = false;
        v.reasons.push_back("alpha must be positive");
        return v;
    }
    for (size_t i = 0; i < sig.singularities.size(); ++i) {
        const auto& s = sig.singularities[i];
        if (s.a < 1) {
            v.ok = false;
            v.reasons.push_back("singularity " + std::to_string(i) + ": a must be positive");
            continue;
        }
        if (sig.alpha % s.a != 0) {
            v.ok = false;
            v.reasons.push_back("singularity " + std::to_string(i) + ": a=" +
                                std::to_string(s.a) + " does not divide alpha=" +
                                std::to_string(sig.alpha));
        }
        long babs = s.b < 0 ? -s.b : s.b;
        if (std::gcd(static_cast<long>(s.a), babs) != 1) {
            v.ok = false;
            v.reasons.push_back("singularity " + std::to_string(i) + ": gcd(a, b) != 1");
        }
    }
    return v;
}

namespace {

// SU(2) parity of the lift mod 2a. Odd a admits lifts of both parities.
// Returns -1 (free), 0 (forced even) or 1 (forced odd).
int forced_parity(unsigned a, long m) {
    if (a % 2 != 0) return -1;
    return static_cast<int>(((m % 2) + 2) % 2);
}

}  // namespace

Validation validate_bundle(const OrbifoldSignature& sig, const BundleType& bundle) {
    Validation v = validate_signature(sig);
    if (!v.ok) return v;
    if (bundle.weights.size() != sig.singularities.size()) {
        v.ok = false;
        v.reasons.push_back("weight count " + std::to_string(bundle.weights.size()) +
                            " does not match singularity count " +
                            std::to_string(sig.singularities.size()));
        return v;
    }
    for (size_t i = 0; i < bundle.weights.size(); ++i) {
        long m = bundle.weights[i];
        long a = static_cast<long>(sig.singularities[i].a);
        if (m < 0 || m >= a) {
            v.ok = false;
            v.reasons.push_back("weight " + std::to_string(i) + " out of range [0, " +
                                std::to_string(a) + ")");
        }
    }
    if (!v.ok) return v;
    if (sig.group == Group::SU2) {
        int parity = -1;
        for (size_t i = 0; i < bundle.weights.size(); ++i) {
            int f = forced_parity(sig.singularities[i].a, bundle.weights[i]);
            if (f < 0) continue;
            if (parity < 0) parity = f;
            else if (parity != f) {
                v.ok = false;
                v.reasons.push_back("SU2 parity rule violated: weights must lift all even "
                                    "or all odd mod 2a_i");
                break;
            }
        }
    }
    return v;
}

std::vector<BundleType> enumerate_bundle_types(const OrbifoldSignature& sig, long charge) {
    std::vector<BundleType> out;
    const size_t n = sig.singularities.size();
    BundleType cur;
    cur.charge = charge;
    cur.weights.assign(n, 0);
    // odometer over the product of Z_{a_i}
    while (true) {
        if (sig.group != Group::SU2 || validate_bundle(sig, cur).ok) out.push_back(cur);
        size_t i = 0;
        for (; i < n; ++i) {
            if (++cur.weights[i] < static_cast<long>(sig.singularities[i].a)) break;
            cur.weights[i] = 0;
        }
        if (i == n) break;
    }
    return out;
}

GluingGroup gluing_parameter_group(Group /*group*/, unsigned a, long m) {
    long mm = ((m % static_cast<long>(a)) + static_cast<long>(a)) % static_cast<long>(a);
    // For SO(3), weight 0 means the isotropy image is trivial; for SU(2)
    // the image lands in {+-1} exactly when m = 0 mod a. Both are central.
    return mm == 0 ? GluingGroup::FullGroup : GluingGroup::CircleGroup;
}

}  // namespace bti
