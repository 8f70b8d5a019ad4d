#include "bti/cp2.hpp"

#include "bti/errors.hpp"

namespace bti {

GaussQ GaussQ::inverse() const {
    Rational n = re * re + im * im;
    if (n == 0) throw std::domain_error("division by zero Gaussian rational");
    return {re / n, -im / n};
}

std::string to_string(const GaussQ& z) {
    if (z.im == 0) return to_string(z.re);
    if (z.re == 0) return to_string(z.im) + "i";
    std::string s = to_string(z.re);
    if (z.im > 0) s += "+";
    return s + to_string(z.im) + "i";
}

ProjPoint normalize(const ProjPoint& z) {
    for (const auto& c : z) {
        if (c.is_zero()) continue;
        GaussQ inv = c.inverse();
        return {z[0] * inv, z[1] * inv, z[2] * inv};
    }
    throw validation_error("zero vector is not a projective point");
}

bool proj_equal(const ProjPoint& u, const ProjPoint& v) {
    ProjPoint nu = normalize(u), nv = normalize(v);
    return nu[0] == nv[0] && nu[1] == nv[1] && nu[2] == nv[2];
}

std::string to_string(const ProjPoint& z) {
    return "[" + to_string(z[0]) + "," + to_string(z[1]) + "," + to_string(z[2]) + "]";
}

namespace {

bool point_less(const ProjPoint& a, const ProjPoint& b) {
    for (int i = 0; i < 3; ++i) {
        if (a[i] == b[i]) continue;
        return a[i] < b[i];
    }
    return false;
}

GaussQ minor2(const AlphaMatrix& m, int c1, int c2) {
    return m.rows[0][c1] * m.rows[1][c2] - m.rows[0][c2] * m.rows[1][c1];
}

}  // namespace

LinePair::LinePair(const ProjPoint& a, const ProjPoint& b)
    : u(normalize(a)), v(normalize(b)) {
    if (u == v) throw validation_error("degenerate pair: the two points coincide");
    if (point_less(v, u)) std::swap(u, v);
}

int rank(const AlphaMatrix& alpha) {
    if (!minor2(alpha, 0, 1).is_zero() || !minor2(alpha, 0, 2).is_zero() ||
        !minor2(alpha, 1, 2).is_zero())
        return 2;
    for (const auto& row : alpha.rows)
        for (const auto& e : row)
            if (!e.is_zero()) return 1;
    return 0;
}

ProjPoint jump_line(const AlphaMatrix& alpha) {
    if (rank(alpha) != 2) throw validation_error("jump_line: matrix rank < 2");
    // cross product of the two rows spans the kernel
    ProjPoint z = {minor2(alpha, 1, 2), -minor2(alpha, 0, 2), minor2(alpha, 0, 1)};
    return normalize(z);
}

LinePair second_kind_pair(const AlphaMatrix& alpha) {
    if (rank(alpha) != 2) throw validation_error("second_kind_pair: matrix rank < 2");
    const GaussQ i{0, 1};
    ProjPoint zp, zpp;
    for (int c = 0; c < 3; ++c) {
        zp[c] = alpha.rows[0][c] + i * alpha.rows[1][c];
        zpp[c] = alpha.rows[0][c] - i * alpha.rows[1][c];
    }
    return LinePair(zp, zpp);  // throws on coinciding lines
}

AlphaMatrix phi(const LinePair& pair) {
    const GaussQ half{Rational(1, 2)};
    const GaussQ half_over_i{0, Rational(-1, 2)};  // 1/(2i)
    AlphaMatrix m;
    for (int c = 0; c < 3; ++c) {
        m.rows[0][c] = (pair.u[c] + pair.v[c]) * half;
        m.rows[1][c] = (pair.u[c] - pair.v[c]) * half_over_i;
    }
    return m;
}

namespace {

bool point_fixed(const ProjPoint& z) {
    ProjPoint n = normalize(z);
    if (n[0].is_zero()) return true;
    return n[1].is_zero() && n[2].is_zero();  // [1,0,0]
}

}  // namespace

ZaFixed za_fixed(const LinePair& pair, unsigned a) {
    if (a < 2) throw validation_error("za_fixed: a must be >= 2");
    if (point_fixed(pair.u) && point_fixed(pair.v)) return ZaFixed::FixedPointwise;
    if (a == 2) {
        // g scales z0 by -1; check g u ~ v and g v ~ u
        ProjPoint gu = {-pair.u[0], pair.u[1], pair.u[2]};
        ProjPoint gv = {-pair.v[0], pair.v[1], pair.v[2]};
        if (proj_equal(gu, pair.v) && proj_equal(gv, pair.u))
            return ZaFixed::FixedSwapped;
    }
    // for a >= 3 a swapped pair would force g^2 to fix a non-fixed point
    return ZaFixed::NotFixed;
}

DimChecksReport dim_checks() {
    DimChecksReport r;
    r.dim_p1_minus3 = dim_manifold_moduli({1, Group::SO3, -3});
    r.dim_p1_minus7 = dim_manifold_moduli({1, Group::SO3, -7});
    r.consistent = r.dim_p1_minus3 == 0 &&
                   r.dim_p1_minus7 == r.base_dim + r.fibre_dim;
    return r;
}

std::array<CF, 3> jump_line_approx(const std::array<std::array<CF, 3>, 2>& rows) {
    std::array<CF, 3> z = {rows[0][1] * rows[1][2] - rows[0][2] * rows[1][1],
                           rows[0][2] * rows[1][0] - rows[0][0] * rows[1][2],
                           rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]};
    double n = 0;
    for (const auto& c : z) n += std::norm(c);
    if (n < kFloatEps * kFloatEps)
        throw validation_error("jump_line_approx: matrix rank < 2");
    return z;
}

}  // namespace bti
