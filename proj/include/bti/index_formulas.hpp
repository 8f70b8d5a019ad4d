#pragma once

#include "bti/orbifold_types.hpp"
#include "bti/rational.hpp"

namespace bti {

struct ManifoldData {
    unsigned b2_plus = 0;
    Group group = Group::SU2;
    long charge = 0;  // c2 for SU2, p1 for SO3
};

// 8 c2 - 3(1+b2+) for SU(2), -2 p1 - 3(1+b2+) for SO(3).
long dim_manifold_moduli(const ManifoldData& data);

// Equivariant index: charge term / alpha, -3(1+b2+), + n' + cot sums.
// Throws not_realizable when the exact total is non-integral and
// validation_error when the bundle does not fit the signature.
long dim_invariant_moduli(const OrbifoldSignature& sig, const BundleType& bundle);

// Same value before the integrality check, for consistency reports.
Rational invariant_moduli_rational(const OrbifoldSignature& sig, const BundleType& bundle);

struct S4Triple {
    long k = 0;
    long m = 0;        // residue mod 2p
    long m_prime = 0;  // residue mod 2p
};

// 8k/p - 3 + n + cot_sum(p, q, m') - cot_sum(p, q, m), with
// n = #{x in {m, m'} : x != 0, p mod 2p} counted with multiplicity.
// Precondition: the triple passes the existence theory in equivariant_s4.
long dim_s4_invariant(unsigned p, long q, const S4Triple& triple);

// Same, minus 1: only the dilation action is quotiented out.
long dim_s4_invariant_balanced(unsigned p, long q, const S4Triple& triple);

// Dimension parts without the existence precondition, for internal reuse
// by the strata bookkeeping (which applies the gluing theorem's n'' count).
Rational s4_dimension_rational(unsigned p, long q, const S4Triple& triple);

}  // namespace bti
