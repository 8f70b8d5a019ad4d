#pragma once

#include <utility>
#include <vector>

#include "bti/index_formulas.hpp"

namespace bti {

// Z_p acting on S^4 via (z1, z2) -> (zeta_p z1, zeta_p^q z2).
struct S4Action {
    unsigned p = 1;
    long q = 1;  // gcd(q, p) = 1, checked at use sites
};

// All (a, b) in [0, 2p)^2 with 2aq = m'+m and 2b = m'-m (mod 2p).
// Empty set means condition (1) has no witness.
std::vector<std::pair<long, long>> congruence_witnesses(const S4Action& action,
                                                        const S4Triple& triple);

// True iff some witness additionally satisfies a*b = k mod p.
// Requires k >= 1.
bool single_level_admissible(const S4Action& action, const S4Triple& triple);

// True iff the triple decomposes into a chain of single-level admissible
// triples (k_i > 0, sum k_i = k) with matching residues. The terminal
// condition is m' = m'_n mod 2p; `literal_terminal` switches to the
// theorem's literal reading m = m'_n.
bool exists_invariant(const S4Action& action, const S4Triple& triple,
                      bool literal_terminal = false);

}  // namespace bti
