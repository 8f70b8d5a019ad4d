#include <doctest.h>

#include <numeric>

#include "bti/cyclotomic.hpp"
#include "bti/equivariant_s4.hpp"
#include "bti/errors.hpp"
#include "bti/index_formulas.hpp"
#include "bti/orbifold.hpp"

using namespace bti;

TEST_CASE("manifold dimension formula") {
    CHECK(dim_manifold_moduli({0, Group::SU2, 1}) == 5);
    CHECK(dim_manifold_moduli({1, Group::SO3, -3}) == 0);
    CHECK(dim_manifold_moduli({1, Group::SO3, -7}) == 8);
}

TEST_CASE("invariant moduli with alpha=1 reduces to the manifold formula") {
    for (unsigned b2 = 0; b2 <= 5; ++b2)
        for (long c = -10; c <= 10; ++c)
            for (Group g : {Group::SU2, Group::SO3}) {
                OrbifoldSignature sig{1, b2, g, {}};
                BundleType bundle{c, false, "", {}};
                CHECK(dim_invariant_moduli(sig, bundle) ==
                      dim_manifold_moduli({b2, g, c}));
            }
}

TEST_CASE("invariant moduli validates the bundle") {
    OrbifoldSignature sig{6, 0, Group::SO3, {{2, 1}, {3, 1}}};
    BundleType short_weights{0, false, "", {1}};
    CHECK_THROWS_AS(dim_invariant_moduli(sig, short_weights), validation_error);
}

TEST_CASE("S^4 charge-1 instanton dimension") {
    for (long p = 2; p <= 12; ++p)
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            CHECK(dim_s4_invariant(p, q, {1, q - 1, q + 1}) == 1);
            CHECK(dim_s4_invariant_balanced(p, q, {1, q - 1, q + 1}) == 0);
        }
}

TEST_CASE("trivial group reduces to 8k-3") {
    for (long k = 1; k <= 10; ++k) {
        CHECK(dim_s4_invariant(1, 1, {k, 0, 0}) == 8 * k - 3);
        CHECK(dim_s4_invariant_balanced(1, 1, {k, 0, 0}) == 8 * k - 8);
    }
    CHECK(dim_s4_invariant_balanced(1, 1, {1, 0, 0}) == 0);
}

TEST_CASE("p=2 regression values") {
    // pinned by the 128-bit floating oracle in test_cyclotomic
    CHECK(s4_dimension_rational(2, 1, {1, 0, 2}) == 1);
    CHECK(exists_invariant(S4Action{2, 1}, {1, 0, 2}));
    CHECK(dim_s4_invariant(2, 1, {1, 0, 2}) == 1);
    CHECK(dim_s4_invariant_balanced(2, 1, {1, 0, 2}) == 0);
}

TEST_CASE("antisymmetry identity") {
    for (long p : {2L, 3L, 5L, 7L})
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (long k = 1; k <= 3; ++k)
                for (long m = 0; m < 2 * p; ++m)
                    for (long mp = 0; mp < 2 * p; ++mp) {
                        int n = 0;
                        for (long x : {m, mp})
                            if (x % (2 * p) != 0 && x % (2 * p) != p) ++n;
                        Rational lhs = s4_dimension_rational(p, q, {k, m, mp}) +
                                       s4_dimension_rational(p, q, {k, mp, m});
                        CHECK(lhs == make_rational(16 * k, p) - 6 + 2 * n);
                    }
        }
}

TEST_CASE("existence precondition and integrality surface as errors") {
    CHECK_THROWS_AS(dim_s4_invariant(3, 1, {1, 0, 1}), precondition_failed);
    OrbifoldSignature sig{3, 0, Group::SO3, {{3, 1}}};
    bool saw_not_realizable = false;
    for (long m = 0; m < 3; ++m) {
        BundleType bundle{-2, false, "", {m}};
        try {
            dim_invariant_moduli(sig, bundle);
        } catch (const not_realizable&) {
            saw_not_realizable = true;
        }
    }
    CHECK(saw_not_realizable);
}

TEST_CASE("admissible triples have integer dimensions (small sweep)") {
    for (long p = 1; p <= 8; ++p)
        for (long q = 1; q <= p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            S4Action action{(unsigned)p, q};
            for (long k = 1; k <= 3; ++k)
                for (long m = 0; m < 2 * p; ++m)
                    for (long mp = 0; mp < 2 * p; ++mp) {
                        if (!exists_invariant(action, {k, m, mp})) continue;
                        CHECK(is_integer(s4_dimension_rational(p, q, {k, m, mp})));
                    }
        }
}
