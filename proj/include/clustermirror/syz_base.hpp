#pragma once

// Two-dimensional SYZ bases of cluster surfaces: focus-focus singularities
// on the rays of a fan, their monodromy, branch cuts and SVG rendering.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "svg.hpp"
#include "toric_model.hpp"

namespace clustermirror {

enum class Convention { Character, Cocharacter };

inline std::string to_string(Convention c) { return c == Convention::Character ? "character" : "cocharacter"; }

inline Convention parse_convention(const std::string& s) {
    if (s == "character") return Convention::Character;
    if (s == "cocharacter") return Convention::Cocharacter;
    throw ValidationError("convention must be 'character' or 'cocharacter'");
}

/// Orientation sign: M(psi) = A U^kSyzSign A^-1 with U = [[1,1],[0,1]] and
/// monodromy loops taken counterclockwise.
inline constexpr int kSyzSign = -1;

struct AffineSingularity2D {
    RatVec position;
    IntVec direction;
    IntMat monodromy;
    RatVec cut_origin;
    IntVec cut_direction;

    friend bool operator==(const AffineSingularity2D&, const AffineSingularity2D&) = default;
};

struct IntegralAffineBase2D {
    std::vector<AffineSingularity2D> singularities;
    Convention convention = Convention::Character;
    std::vector<IntVec> fan_rays;  // optional overlay

    friend bool operator==(const IntegralAffineBase2D&, const IntegralAffineBase2D&) = default;
};

/// [[1+ab, -a^2], [b^2, 1-ab]] for psi = (a, b).
inline IntMat monodromy_matrix(const IntVec& psi) {
    if (psi.size() != 2) throw ValidationError("monodromy direction must have length 2");
    if (!is_primitive(psi)) throw ValidationError("monodromy direction must be primitive");
    const Int& a = psi[0];
    const Int& b = psi[1];
    return IntMat{{1 + a * b, -a * a}, {b * b, 1 - a * b}};
}

struct ConjugationWitness {
    IntMat A;
    int sign;
};

/// A in SL(2,Z) with A e1 = psi and A U^sign A^-1 = monodromy_matrix(psi).
inline ConjugationWitness conjugation_witness(const IntVec& psi) {
    if (psi.size() != 2 || !is_primitive(psi)) throw ValidationError("witness needs a primitive 2-vector");
    auto [g, x, y] = extended_gcd(psi[0], psi[1]);
    if (g != 1) throw InvariantError("gcd of a primitive vector is not 1");
    IntMat A{{psi[0], -y}, {psi[1], x}};
    return {A, kSyzSign};
}

inline IntMat unipotent_power(int sign) { return IntMat{{1, sign}, {0, 1}}; }

inline bool check_conjugation(const IntVec& psi, const ConjugationWitness& w) {
    return det(w.A) == 1 && w.A * IntVec{1, 0} == psi &&
           w.A * unipotent_power(w.sign) * inverse_unimodular(w.A) == monodromy_matrix(psi);
}

/// One singularity per ray at radius * psi, cut along +psi.
inline IntegralAffineBase2D base_from_fan(const StackyFan1D& fan, const std::vector<Rat>& radii) {
    if (fan.n != 2) throw ValidationError("SYZ bases are built only for rank-2 fans");
    if (!radii.empty() && radii.size() != fan.rays.size())
        throw ValidationError("one radius per ray is required");
    IntegralAffineBase2D base;
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        const Rat r = radii.empty() ? Rat(1) : radii[i];
        if (r <= 0) throw ValidationError("radius must be positive");
        const IntVec& psi = fan.rays[i].psi;
        IntVec dir = primitive_part(psi);
        RatVec pos = {r * Rat(psi[0]), r * Rat(psi[1])};
        base.singularities.push_back({pos, dir, monodromy_matrix(dir), pos, dir});
        base.fan_rays.push_back(psi);
    }
    return base;
}

inline IntegralAffineBase2D base_from_fan(const StackyFan1D& fan) { return base_from_fan(fan, {}); }

/// Flip the convention flag and transpose every monodromy.
inline IntegralAffineBase2D toggle_convention(IntegralAffineBase2D base) {
    base.convention =
        base.convention == Convention::Character ? Convention::Cocharacter : Convention::Character;
    for (auto& s : base.singularities) s.monodromy = s.monodromy.transpose();
    return base;
}

/// Square viewport containing every singularity with a unit margin.
inline svg::Viewport default_viewport(const IntegralAffineBase2D& base) {
    double m = 2;
    for (const auto& s : base.singularities)
        for (const auto& c : s.position) m = std::max(m, std::abs(svg::to_double(c)) + 1);
    return {-m, m, -m, m};
}

inline std::string render_svg(const IntegralAffineBase2D& base, const svg::Viewport& vp) {
    svg::Canvas c(vp);
    c.comment("integral affine base, " + to_string(base.convention) + " convention");
    c.grid();
    for (const auto& ray : base.fan_rays)
        c.ray(0, 0, svg::to_double(ray[0]), svg::to_double(ray[1]), "stroke:#888888;stroke-width:1.5");
    for (const auto& s : base.singularities)
        c.ray(svg::to_double(s.cut_origin[0]), svg::to_double(s.cut_origin[1]), svg::to_double(s.cut_direction[0]),
              svg::to_double(s.cut_direction[1]), "stroke:#000000;stroke-width:1.5;stroke-dasharray:6,4");
    for (const auto& s : base.singularities)
        c.cross(svg::to_double(s.position[0]), svg::to_double(s.position[1]), 5, "#cc0000");
    return c.str();
}

inline std::string render_svg(const IntegralAffineBase2D& base) { return render_svg(base, default_viewport(base)); }

} // namespace clustermirror
