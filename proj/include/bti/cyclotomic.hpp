#pragma once

#include <vector>

#include "bti/rational.hpp"

namespace bti {

// Element of Q(zeta_n), stored as a coefficient vector of length n for
// sum_j c_j zeta_n^j and reduced modulo x^n - 1 during arithmetic.
// Equality and rationality tests reduce modulo the n-th cyclotomic
// polynomial Phi_n, which gives a canonical normal form, so both tests
// are exact.
class Cyclotomic {
  public:
    explicit Cyclotomic(unsigned order);
    static Cyclotomic from_rational(unsigned order, const Rational& value);
    static Cyclotomic root_of_unity(unsigned order, long power);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coeff_; }

    Cyclotomic operator+(const Cyclotomic& rhs) const;
    Cyclotomic operator-(const Cyclotomic& rhs) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& rhs) const;
    Cyclotomic operator*(const Rational& s) const;
    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);

    // Multiplicative inverse in Q(zeta_n) via the extended Euclidean
    // algorithm modulo Phi_n. Throws std::domain_error on zero.
    Cyclotomic inverse() const;

    bool operator==(const Cyclotomic& rhs) const;
    bool is_zero() const;
    bool is_rational() const;
    Rational as_rational() const;  // throws std::domain_error if not rational

    // Coefficients of the canonical representative modulo Phi_n
    // (degree < phi(n)).
    std::vector<Rational> reduced() const;

  private:
    unsigned order_;
    std::vector<Rational> coeff_;
};

// The n-th cyclotomic polynomial, ascending coefficients.
const std::vector<Rational>& cyclotomic_polynomial(unsigned n);

// zeta_n^(j mod n) as an element of Q(zeta_n).
Cyclotomic root_of_unity(unsigned n, long j);

// (2/a) * sum_{j=1}^{a-1} cot(pi j b / a) cot(pi j / a) sin^2(pi j m / a),
// evaluated through exact cyclotomic arithmetic. Requires gcd(a, b) = 1;
// a = 1 yields the empty sum 0. The Galois-stable sum is provably
// rational and the conversion asserts it.
Rational cot_sum(unsigned a, long b, long m);

// sum_{j=1}^{p-1} cos(2 pi j m / p), exact. Computed cyclotomically and
// checked against the closed form: p-1 if m = 0 mod p, else -1.
long cos_sum(unsigned p, long m);

}  // namespace bti
