#include "bti/index_formulas.hpp"

#include "bti/cyclotomic.hpp"
#include "bti/equivariant_s4.hpp"
#include "bti/errors.hpp"
#include "bti/orbifold.hpp"

#include <string>

namespace bti {

long dim_manifold_moduli(const ManifoldData& data) {
    long base = data.group == Group::SU2 ? 8 * data.charge : -2 * data.charge;
    return base - 3 * (1 + static_cast<long>(data.b2_plus));
}

Rational invariant_moduli_rational(const OrbifoldSignature& sig, const BundleType& bundle) {
    Validation v = validate_bundle(sig, bundle);
    if (!v.ok) {
        std::string msg = "invalid bundle for signature";
        for (const auto& r : v.reasons) msg += "; " + r;
        throw validation_error(msg);
    }
    Rational total = sig.group == Group::SU2 ? make_rational(8 * bundle.charge, sig.alpha)
                                             : make_rational(-2 * bundle.charge, sig.alpha);
    total -= 3 * (1 + static_cast<long>(sig.b2_plus));
    for (size_t i = 0; i < sig.singularities.size(); ++i) {
        const auto& s = sig.singularities[i];
        long m = bundle.weights[i];
        if (m % static_cast<long>(s.a) != 0) total += 1;  // n'
        total += cot_sum(s.a, s.b, m);
    }
    return total;
}

long dim_invariant_moduli(const OrbifoldSignature& sig, const BundleType& bundle) {
    Rational total = invariant_moduli_rational(sig, bundle);
    if (!is_integer(total))
        throw not_realizable("signature not realizable: index " + to_string(total) +
                             " is not an integer");
    return to_long(total);
}

Rational s4_dimension_rational(unsigned p, long q, const S4Triple& triple) {
    const long two_p = 2 * static_cast<long>(p);
    auto norm = [two_p](long x) { return ((x % two_p) + two_p) % two_p; };
    long m = norm(triple.m), mp = norm(triple.m_prime);
    int n = 0;  // multiset count of {m, m'} with x != 0, p mod 2p
    for (long x : {m, mp})
        if (x != 0 && x != static_cast<long>(p)) ++n;
    Rational total = make_rational(8 * triple.k, p);
    total += n - 3;
    total += cot_sum(p, q, mp) - cot_sum(p, q, m);
    return total;
}

long dim_s4_invariant(unsigned p, long q, const S4Triple& triple) {
    if (p < 1) throw validation_error("p must be positive");
    if (!exists_invariant(S4Action{p, q}, triple))
        throw precondition_failed("no invariant instanton exists for this triple");
    Rational total = s4_dimension_rational(p, q, triple);
    if (!is_integer(total))
        throw not_realizable("triple not realizable: dimension " + to_string(total) +
                             " is not an integer");
    return to_long(total);
}

long dim_s4_invariant_balanced(unsigned p, long q, const S4Triple& triple) {
    // Nontrivial groups fix the origin, so only the dilation direction
    // survives; the trivial group keeps the full translation+dilation
    // quotient.
    return dim_s4_invariant(p, q, triple) - (p == 1 ? 5 : 1);
}

}  // namespace bti
