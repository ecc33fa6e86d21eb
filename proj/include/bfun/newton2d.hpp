#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "bfun/mpoly.hpp"
#include "bfun/resolution.hpp"
#include "bfun/upoly.hpp"

namespace bfun {

using LatticePoint = std::pair<long long, long long>;
using RayVector = std::pair<long long, long long>;

/// Compact (bounded) face of a plane Newton polygon, with its primitive
/// inward normal. Walking from `from` to `to` moves right and down.
struct NewtonFace {
    LatticePoint from;
    LatticePoint to;
    RayVector normal;    // v1, v2 >= 1, gcd 1
    long long min_value; // <normal, m> over the support, attained on the face
};

struct NewtonPolygon2D {
    std::set<LatticePoint> support;
    std::vector<LatticePoint> vertices; // hull vertices by increasing x
    std::vector<NewtonFace> compact_faces;
};

namespace detail {

inline long long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

inline long long dot_ray(const RayVector& v, const LatticePoint& m) {
    return v.first * m.first + v.second * m.second;
}

} // namespace detail

/// Lower-left Newton polygon of a bivariate polynomial vanishing at the origin:
/// hull vertices and the compact faces with primitive inward normals.
inline NewtonPolygon2D newton_polygon(const MPoly& f) {
    if (f.nvars() != 2) throw VariableMismatch("Newton polygon requires two variables");
    if (f.is_zero()) throw ZeroPolynomial("Newton polygon of the zero polynomial");
    if (f.coeff(Exponents{0, 0}) != 0)
        throw NonvanishingAtOrigin("polynomial must vanish at the origin");

    NewtonPolygon2D np;
    for (const auto& [e, c] : f.terms())
        np.support.insert({static_cast<long long>(e[0]), static_cast<long long>(e[1])});

    // lower hull of the support (Andrew chain), then keep the strictly
    // descending part: the compact boundary of support + positive quadrant
    std::vector<LatticePoint> pts(np.support.begin(), np.support.end());
    std::vector<LatticePoint> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 && detail::cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    std::vector<LatticePoint> chain;
    for (const auto& p : hull) {
        if (!chain.empty() && p.second >= chain.back().second) break;
        if (chain.empty() || p.second < chain.back().second) chain.push_back(p);
    }
    np.vertices = chain;

    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        const LatticePoint& a = chain[i];
        const LatticePoint& b = chain[i + 1];
        long long v1 = a.second - b.second; // > 0
        long long v2 = b.first - a.first;   // > 0
        long long g = std::gcd(v1, v2);
        RayVector v{v1 / g, v2 / g};
        np.compact_faces.push_back(NewtonFace{a, b, v, detail::dot_ray(v, a)});
    }
    return np;
}

/// Face polynomial of a compact face as a univariate polynomial in the
/// parameter along the face's monomial curve.
inline UPoly face_polynomial(const MPoly& f, const NewtonFace& face) {
    const RayVector dir{face.normal.second, -face.normal.first};
    const long long steps = (face.to.first - face.from.first) / dir.first;
    UPoly p(static_cast<size_t>(steps) + 1, Rational(0));
    for (long long k = 0; k <= steps; ++k) {
        LatticePoint m{face.from.first + k * dir.first, face.from.second + k * dir.second};
        if (m.first < 0 || m.second < 0) continue;
        Rational c = f.coeff(Exponents{static_cast<unsigned>(m.first),
                                       static_cast<unsigned>(m.second)});
        p[static_cast<size_t>(k)] = c;
    }
    upoly_trim(p);
    return p;
}

/// Newton nondegeneracy: no compact face polynomial has a critical point on
/// the torus. Each face reduces to square-freeness of its univariate face
/// polynomial (its endpoints are vertices, so t = 0 is never a root).
inline bool nondegeneracy_check(const MPoly& f, const NewtonPolygon2D& np) {
    for (const auto& face : np.compact_faces) {
        UPoly p = face_polynomial(f, face);
        UPoly g = upoly_gcd(p, upoly_derivative(p));
        if (upoly_degree(g) > 0) return false;
    }
    return true;
}

namespace detail {

inline long long ray_det(const RayVector& u, const RayVector& w) {
    return u.first * w.second - u.second * w.first;
}

/// Rays subdividing cone(u, w) into unimodular cones, in fan order, u and w
/// excluded. Each step inserts the unique primitive v with det(u, v) = 1
/// closest to u (continued-fraction insertion) and recurses on (v, w).
inline std::vector<RayVector> unimodular_chain(RayVector u, const RayVector& w) {
    std::vector<RayVector> out;
    long long d = ray_det(u, w);
    if (d <= 0) throw Error("internal: fan rays out of order");
    while (d > 1) {
        long long j = 0;
        while (j < d && ((w.first + j * u.first) % d != 0 || (w.second + j * u.second) % d != 0))
            ++j;
        if (j == d) throw Error("internal: no unimodular insertion found");
        RayVector v{(w.first + j * u.first) / d, (w.second + j * u.second) / d};
        out.push_back(v);
        u = v;
        d = ray_det(u, w);
    }
    return out;
}

} // namespace detail

/// Multiplicity of each coordinate axis in f: the minimal exponents over the
/// support.
inline std::pair<long long, long long> axis_multiplicities(const NewtonPolygon2D& np) {
    long long min_x = np.support.begin()->first, min_y = np.support.begin()->second;
    for (const auto& m : np.support) {
        min_x = std::min(min_x, m.first);
        min_y = std::min(min_y, m.second);
    }
    return {min_x, min_y};
}

/// All rays of the regularized positive-quadrant fan through the face
/// normals, in fan order, axes included. A pure monomial divisor supported on
/// both axes gets the origin blow-up ray (1,1): the fan has no interior ray
/// otherwise and the two branches must separate for a smooth strict transform.
inline std::vector<RayVector> quadrant_fan_rays(const NewtonPolygon2D& np) {
    std::vector<RayVector> boundary{{1, 0}};
    for (const auto& face : np.compact_faces) boundary.push_back(face.normal);
    boundary.push_back({0, 1});

    std::vector<RayVector> rays;
    for (size_t i = 0; i + 1 < boundary.size(); ++i) {
        rays.push_back(boundary[i]);
        for (const auto& v : detail::unimodular_chain(boundary[i], boundary[i + 1]))
            rays.push_back(v);
    }
    rays.push_back(boundary.back());

    auto [min_x, min_y] = axis_multiplicities(np);
    if (np.compact_faces.empty() && min_x >= 1 && min_y >= 1)
        rays.insert(rays.begin() + 1, RayVector{1, 1});
    return rays;
}

/// Divisor record of an interior (exceptional) ray: a = support minimum of
/// the pairing, k = v1 + v2 - 1, b = pairing against the monomial g.
inline DivisorRecord interior_ray_record(const NewtonPolygon2D& np, const RayVector& v,
                                         std::pair<unsigned, unsigned> g) {
    long long a = detail::dot_ray(v, *np.support.begin());
    for (const auto& m : np.support) a = std::min(a, detail::dot_ray(v, m));
    DivisorRecord rec;
    rec.label = "ray(" + std::to_string(v.first) + "," + std::to_string(v.second) + ")";
    rec.a = static_cast<unsigned>(a);
    rec.k = static_cast<unsigned>(v.first + v.second - 1);
    rec.b = static_cast<unsigned>(v.first * g.first + v.second * g.second);
    rec.exceptional = true;
    return rec;
}

/// Log-resolution table of a Newton-nondegenerate, square-free bivariate f,
/// twisted by the monomial g = x^{g1} y^{g2}: refine the quadrant fan through
/// the face normals to a regular fan, then read off (a, k, b) per ray. Axis
/// rays become strict transforms of the coordinate divisors they carry; the
/// non-toric branch contributes one reduced smooth strict-transform record.
inline ResolutionData resolution_from_newton(const MPoly& f,
                                             std::pair<unsigned, unsigned> g) {
    NewtonPolygon2D np = newton_polygon(f);
    if (!nondegeneracy_check(f, np))
        throw DegenerateInput("a face polynomial has a torus critical point");
    if (!is_squarefree(f)) throw NonReduced("f is not square-free");

    auto [min_x, min_y] = axis_multiplicities(np);
    std::vector<RayVector> rays = quadrant_fan_rays(np);

    ResolutionData res;
    res.reduced = true;
    res.strict_transform_smooth = true;
    for (const RayVector& v : rays) {
        const bool is_axis = (v == RayVector{1, 0}) || (v == RayVector{0, 1});
        if (!is_axis) {
            res.divisors.push_back(interior_ray_record(np, v, g));
        } else {
            const bool is_x_axis = (v == RayVector{1, 0});
            const unsigned a = static_cast<unsigned>(is_x_axis ? min_x : min_y);
            const unsigned b = is_x_axis ? g.first : g.second;
            if (a == 0 && b == 0) continue;
            DivisorRecord rec;
            rec.label = "ray(" + std::to_string(v.first) + "," +
                        std::to_string(v.second) + ")";
            rec.a = a;
            rec.k = 0;
            rec.b = b;
            rec.exceptional = false;
            res.divisors.push_back(std::move(rec));
        }
    }

    // the branch of f not supported on the axes
    Exponents axis_part{static_cast<unsigned>(min_x), static_cast<unsigned>(min_y)};
    MPoly rest = *try_divide_exact(f, MPoly::monomial(2, axis_part, Rational(1)));
    if (!rest.is_constant()) {
        DivisorRecord rec;
        rec.label = "strict_transform";
        rec.a = 1;
        rec.k = 0;
        rec.b = 0;
        rec.exceptional = false;
        res.divisors.push_back(std::move(rec));
    }
    return res;
}

} // namespace bfun
