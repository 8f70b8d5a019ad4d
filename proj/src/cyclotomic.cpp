#include "bti/cyclotomic.hpp"

#include "bti/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace bti {

namespace {

using Poly = std::vector<Rational>;  // ascending coefficients

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// a = q*b + r, deg r < deg b
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    assert(!b.empty());
    Poly q;
    trim(a);
    if (degree(a) >= degree(b)) q.resize(a.size() - b.size() + 1, Rational(0));
    while (degree(a) >= degree(b)) {
        Rational c = a.back() / b.back();
        int shift = degree(a) - degree(b);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    return {q, a};
}

Poly poly_mod(const Poly& a, const Poly& m) { return poly_divmod(a, m).second; }

const Poly& phi_unlocked(std::map<unsigned, Poly>& cache, unsigned n) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    Poly num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = poly_divmod(num, phi_unlocked(cache, d));
        assert(r.empty());
        num = q;
    }
    return cache.emplace(n, std::move(num)).first->second;
}

const Poly& phi(unsigned n) {
    static std::map<unsigned, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return phi_unlocked(cache, n);
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::domain_error("cyclotomic order must be positive");
    return phi(n);
}

Cyclotomic::Cyclotomic(unsigned order) : order_(order), coeff_(order, Rational(0)) {
    if (order == 0) throw std::domain_error("cyclotomic order must be positive");
}

Cyclotomic Cyclotomic::from_rational(unsigned order, const Rational& value) {
    Cyclotomic z(order);
    z.coeff_[0] = value;
    return z;
}

Cyclotomic Cyclotomic::root_of_unity(unsigned order, long power) {
    Cyclotomic z(order);
    long j = power % static_cast<long>(order);
    if (j < 0) j += order;
    z.coeff_[static_cast<size_t>(j)] = 1;
    return z;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
    Cyclotomic r(*this);
    r += rhs;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
    if (order_ != rhs.order_) throw std::domain_error("mismatched cyclotomic orders");
    for (unsigned i = 0; i < order_; ++i) coeff_[i] += rhs.coeff_[i];
    return *this;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const { return *this + (-rhs); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r(order_);
    for (unsigned i = 0; i < order_; ++i) r.coeff_[i] = -coeff_[i];
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
    if (order_ != rhs.order_) throw std::domain_error("mismatched cyclotomic orders");
    Cyclotomic r(order_);
    for (unsigned i = 0; i < order_; ++i) {
        if (coeff_[i] == 0) continue;
        for (unsigned j = 0; j < order_; ++j) {
            if (rhs.coeff_[j] == 0) continue;
            r.coeff_[(i + j) % order_] += coeff_[i] * rhs.coeff_[j];
        }
    }
    return r;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
    *this = *this * rhs;
    return *this;
}

Cyclotomic Cyclotomic::operator*(const Rational& s) const {
    Cyclotomic r(order_);
    for (unsigned i = 0; i < order_; ++i) r.coeff_[i] = coeff_[i] * s;
    return r;
}

std::vector<Rational> Cyclotomic::reduced() const {
    Poly p(coeff_);
    trim(p);
    return poly_mod(p, phi(order_));
}

bool Cyclotomic::is_zero() const { return reduced().empty(); }

bool Cyclotomic::operator==(const Cyclotomic& rhs) const {
    if (order_ != rhs.order_) return false;
    return (*this - rhs).is_zero();
}

bool Cyclotomic::is_rational() const { return reduced().size() <= 1; }

Rational Cyclotomic::as_rational() const {
    auto r = reduced();
    if (r.size() > 1) throw std::domain_error("cyclotomic element is not rational");
    return r.empty() ? Rational(0) : r[0];
}

Cyclotomic Cyclotomic::inverse() const {
    const Poly& m = phi(order_);
    Poly a = reduced();
    if (a.empty()) throw std::domain_error("division by zero in Q(zeta_n)");
    // Extended Euclid: u*a + v*m = gcd. Phi_n is irreducible over Q, so
    // the gcd is a nonzero constant.
    Poly r0 = m, r1 = a;
    Poly u0 = {}, u1 = {Rational(1)};
    while (!r1.empty() && degree(r1) > 0) {
        auto [q, r2] = poly_divmod(r0, r1);
        Poly u2 = poly_sub(u0, poly_mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r1.empty()) throw std::domain_error("non-invertible cyclotomic element");
    Rational c = r1[0];
    Cyclotomic result(order_);
    for (size_t i = 0; i < u1.size(); ++i) result.coeff_[i] = u1[i] / c;
    return result;
}

Cyclotomic root_of_unity(unsigned n, long j) { return Cyclotomic::root_of_unity(n, j); }

namespace {

// scaled inverse: r * 1/(zeta^c - 1) as an integer coefficient vector,
// via 1/(w - 1) = (1/r) sum_{t=1}^{r-1} t w^t for a primitive r-th root
void scaled_inverse(unsigned a, long c, std::vector<long>& out, long& r) {
    long cm = ((c % (long)a) + a) % (long)a;
    r = (long)a / std::gcd((long)a, cm);
    out.assign(a, 0);
    for (long t = 1; t < r; ++t) out[(size_t)((t * cm) % (long)a)] += t;
}

}  // namespace

Rational cot_sum(unsigned a, long b, long m) {
    if (a < 1) throw validation_error("cot_sum: a must be positive");
    if (std::gcd(static_cast<long>(a), b < 0 ? -b : b) != 1)
        throw validation_error("cot_sum: b must be coprime to a (cot pole otherwise)");
    if (a == 1) return Rational(0);

    // cot(x) = i (e^{2ix}+1)/(e^{2ix}-1); the two i's in the cot product
    // contribute -1, so every term lives in Q(zeta_a):
    //   cot(pi j b/a) cot(pi j/a) = -(z^{jb}+1)(z^j+1) / ((z^{jb}-1)(z^j-1))
    //   sin^2(pi j m/a)           = (2 - z^{jm} - z^{-jm})/4
    // with z = zeta_a. The hot loop runs over integer coefficient vectors
    // with the common denominator 4a^2: every scaled coefficient is
    // bounded by ~a^4, far inside int64 range for the supported orders.
    const long n = static_cast<long>(a);
    if (n > 4000) throw resource_limit("cot_sum: order too large");
    auto at = [n](long i) { return (size_t)(((i % n) + n) % n); };
    std::vector<long> acc(a, 0), v1, v2, t1(a), t2(a);
    for (long j = 1; j < n; ++j) {
        if ((j * m) % n == 0) continue;  // sin^2 vanishes
        long r1, r2;
        scaled_inverse(a, j * b, v1, r1);
        scaled_inverse(a, j, v2, r2);
        // sparse part: -(z^{jb}+1)(z^j+1)(2 - z^{jm} - z^{-jm})
        std::fill(t1.begin(), t1.end(), 0L);
        for (long p1 : {j * b, 0L})
            for (long p2 : {j, 0L}) {
                t1[at(p1 + p2)] -= 2;
                t1[at(p1 + p2 + j * m)] += 1;
                t1[at(p1 + p2 - j * m)] += 1;
            }
        // t2 = t1 * v1
        std::fill(t2.begin(), t2.end(), 0L);
        for (long i = 0; i < n; ++i) {
            if (t1[(size_t)i] == 0) continue;
            for (long k = 0; k < n; ++k)
                if (v1[(size_t)k] != 0) t2[at(i + k)] += t1[(size_t)i] * v1[(size_t)k];
        }
        // acc += (t2 * v2) scaled from denominator 4 r1 r2 to 4 a^2
        const long scale = (n / r1) * (n / r2);
        for (long i = 0; i < n; ++i) {
            if (t2[(size_t)i] == 0) continue;
            for (long k = 0; k < n; ++k)
                if (v2[(size_t)k] != 0)
                    acc[at(i + k)] += scale * t2[(size_t)i] * v2[(size_t)k];
        }
    }
    Cyclotomic total(a);
    const Rational denom = make_rational(2, n * 4 * n * n);  // (2/a) / (4 a^2)
    for (unsigned i = 0; i < a; ++i)
        if (acc[i] != 0) total += Cyclotomic::root_of_unity(a, i) * (denom * acc[i]);
    // Galois stability of the full sum over j = 1..a-1 guarantees a
    // rational value; as_rational throws if the reduction disagrees.
    return total.as_rational();
}

long cos_sum(unsigned p, long m) {
    if (p < 1) throw validation_error("cos_sum: p must be positive");
    Cyclotomic acc(p);
    for (long j = 1; j < static_cast<long>(p); ++j) {
        acc += (Cyclotomic::root_of_unity(p, j * m) + Cyclotomic::root_of_unity(p, -j * m)) *
               Rational(1, 2);
    }
    long value = to_long(acc.as_rational());
    long mm = m % static_cast<long>(p);
    long expected = (mm == 0) ? static_cast<long>(p) - 1 : -1;
    if (p == 1) expected = 0;
    if (value != expected)
        throw std::logic_error("cos_sum: cyclotomic evaluation disagrees with closed form");
    return value;
}

}  // namespace bti
