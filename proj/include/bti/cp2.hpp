#pragma once

#include <array>
#include <complex>
#include <string>

#include "bti/index_formulas.hpp"
#include "bti/rational.hpp"

namespace bti {

// Gaussian rational: exact complex scalar re + i*im.
struct GaussQ {
    Rational re, im;

    GaussQ() = default;
    GaussQ(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    GaussQ(long r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussQ conj() const { return {re, -im}; }
    GaussQ inverse() const;

    GaussQ operator+(const GaussQ& o) const { return {re + o.re, im + o.im}; }
    GaussQ operator-(const GaussQ& o) const { return {re - o.re, im - o.im}; }
    GaussQ operator-() const { return {-re, -im}; }
    GaussQ operator*(const GaussQ& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussQ operator/(const GaussQ& o) const { return *this * o.inverse(); }
    bool operator==(const GaussQ& o) const { return re == o.re && im == o.im; }
    bool operator<(const GaussQ& o) const {
        return re != o.re ? re < o.re : im < o.im;
    }
};

std::string to_string(const GaussQ& z);

// Point of CP^2, normalized: first nonzero coordinate scaled to 1.
using ProjPoint = std::array<GaussQ, 3>;

ProjPoint normalize(const ProjPoint& z);
bool proj_equal(const ProjPoint& u, const ProjPoint& v);
std::string to_string(const ProjPoint& z);

// 2x3 matrix over the Gaussian rationals; the P/G representative of a
// stable bundle with c1 = -1, c2 = 2.
struct AlphaMatrix {
    std::array<std::array<GaussQ, 3>, 2> rows;
};

int rank(const AlphaMatrix& alpha);  // 0, 1 or 2

// Unordered pair of distinct projective points, stored normalized with
// the lexicographically smaller point first.
struct LinePair {
    ProjPoint u, v;

    LinePair(const ProjPoint& a, const ProjPoint& b);  // canonicalizes
    bool operator==(const LinePair& o) const {
        return proj_equal(u, o.u) && proj_equal(v, o.v);
    }
};

// Kernel of the rank-2 matrix: the unique z with alpha z = 0.
// Throws validation_error when rank < 2.
ProjPoint jump_line(const AlphaMatrix& alpha);

// The two lines of the second-kind conic det(alpha(z)^t alpha(z)) = 0:
// z' = row1 + i row2, z'' = row1 - i row2. Their intersection is the
// jump line. Throws validation_error when the lines coincide.
LinePair second_kind_pair(const AlphaMatrix& alpha);

// Inverse correspondence {u, v} -> [(u+v)/2 ; (u-v)/(2i)].
// Throws validation_error on u = v.
AlphaMatrix phi(const LinePair& pair);

enum class ZaFixed { FixedPointwise, FixedSwapped, NotFixed };

inline const char* to_string(ZaFixed f) {
    switch (f) {
        case ZaFixed::FixedPointwise: return "FixedPointwise";
        case ZaFixed::FixedSwapped: return "FixedSwapped";
        case ZaFixed::NotFixed: return "NotFixed";
    }
    return "?";
}

// Behaviour of the pair under the generator [z0,z1,z2] -> [zeta_a z0,z1,z2].
// A point is fixed iff z0 = 0 or the point is [1,0,0]; a non-fixed pair
// can only be swapped when a = 2 (g^2 must fix each point projectively).
ZaFixed za_fixed(const LinePair& pair, unsigned a);

struct DimChecksReport {
    long dim_p1_minus3 = 0;
    long dim_p1_minus7 = 0;
    int base_dim = 4;   // CP^2
    int fibre_dim = 4;  // CP^2 minus CP^1
    bool consistent = false;
};

// Bookkeeping: -2 p1 - 3(1 + b2+) at b2+ = 1 against the fibre-bundle
// picture P/G -> CP^2.
DimChecksReport dim_checks();

// epsilon-float variants for random property sweeps only; comparisons
// use kFloatEps. The exact Gaussian-rational path is the reference.
inline constexpr double kFloatEps = 1e-9;

using CF = std::complex<double>;
std::array<CF, 3> jump_line_approx(const std::array<std::array<CF, 3>, 2>& rows);

}  // namespace bti
