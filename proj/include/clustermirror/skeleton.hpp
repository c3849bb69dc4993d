#pragma once

// Lagrangian skeleta: a torus with cooriented disk handles, the strata of
// the stacky Bondal Lagrangian, Dehn twists and disk surgery.

#include <cstddef>
#include <string>
#include <vector>

#include "toric_model.hpp"

namespace clustermirror {

/// A disk handle: character psi (sign = coorientation), disk cocharacter chi
/// orthogonal to psi, and multiplier d.
struct Handle {
    IntVec psi;
    IntVec chi;
    Int d = 1;

    friend bool operator==(const Handle&, const Handle&) = default;
};

struct Skeleton {
    std::size_t n = 2;
    std::vector<Handle> handles;

    void validate() const {
        if (n < 2) throw ValidationError("skeleton torus rank must be at least 2");
        for (const auto& h : handles) {
            if (h.psi.size() != n || h.chi.size() != n) throw ValidationError("handle vector length differs from rank");
            if (is_zero(h.psi) || !is_primitive(h.psi)) throw ValidationError("handle character must be primitive");
            if (is_zero(h.chi) || !is_primitive(h.chi)) throw ValidationError("handle cocharacter must be primitive");
            if (dot(h.psi, h.chi) != 0) throw ValidationError("handle cocharacter must pair to zero with its character");
            if (h.d < 1) throw ValidationError("multipliers must be positive");
        }
    }

    friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

/// Handles (psi_i, primitive chi_i, d_i) for the unfrozen indices.
inline Skeleton skeleton_from_seed(const Seed& s) {
    const std::vector<IntVec> chi = blowup_characters(s);
    Skeleton sk;
    sk.n = s.n;
    for (std::size_t i = 0; i < s.r; ++i) {
        if (is_zero(chi[i])) throw ValidationError("disk direction undefined");
        sk.handles.push_back({s.psi[i], primitive_part(chi[i]), s.d[i]});
    }
    return sk;
}

struct BondalStratum {
    std::vector<std::size_t> cone;  // ray indices, 0-based
    std::size_t torus_dim = 0;
    Int components = 1;

    friend bool operator==(const BondalStratum&, const BondalStratum&) = default;
};

/// The zero-cone torus plus one stratum per ray with |pi_0| = torsion of N / <d psi>.
inline std::vector<BondalStratum> bondal_strata(const StackyFan1D& fan) {
    std::vector<BondalStratum> out;
    out.push_back({{}, fan.n, 1});
    for (std::size_t i = 0; i < fan.rays.size(); ++i) {
        const auto& ray = fan.rays[i];
        out.push_back({{i}, fan.n - 1, torsion_order({ray.d * ray.psi}, fan.n)});
    }
    return out;
}

/// Oriented intersection number a1 b2 - a2 b1 on the 2-torus.
inline Int intersection_number(const IntVec& a, const IntVec& b) {
    if (a.size() != 2 || b.size() != 2) throw ValidationError("intersection numbers are defined for n = 2 only");
    return a[0] * b[1] - a[1] * b[0];
}

/// Picard-Lefschetz action c + <c, about> about.
inline IntVec dehn_twist(const IntVec& c, const IntVec& about) {
    return c + intersection_number(c, about) * about;
}

/// Circle class R psi with R the rotation [[0,-1],[1,0]].
inline IntVec circle_class(const IntVec& psi) {
    if (psi.size() != 2) throw ValidationError("circle classes are defined for n = 2 only");
    return {-psi[1], psi[0]};
}

/// Inverse of circle_class.
inline IntVec character_of_circle(const IntVec& s) {
    if (s.size() != 2) throw ValidationError("circle classes are defined for n = 2 only");
    return {s[1], -s[0]};
}

/// Flip handle k and twist the handles meeting it positively.
inline Skeleton disk_surgery(const Skeleton& sk, std::size_t k) {
    sk.validate();
    if (k >= sk.handles.size()) throw ValidationError("handle index out of range");
    for (const auto& h : sk.handles)
        if (h.d != 1) throw ValidationError("surgery defined only for skew-symmetric data");

    Skeleton out = sk;
    const Handle& hk = sk.handles[k];
    if (sk.n == 2) {
        const IntVec sk_class = circle_class(hk.psi);
        for (std::size_t j = 0; j < sk.handles.size(); ++j) {
            const Handle& hj = sk.handles[j];
            IntVec s = circle_class(hj.psi);
            // chi_j = sigma R psi_j for a sign sigma, carried through surgery.
            const Int sigma = hj.chi == s ? Int(1) : Int(-1);
            if (j == k) {
                s = -s;
            } else if (intersection_number(s, sk_class) > 0) {
                s = dehn_twist(s, sk_class);
            }
            out.handles[j].psi = character_of_circle(s);
            out.handles[j].chi = sigma * circle_class(out.handles[j].psi);
        }
        return out;
    }

    for (std::size_t j = 0; j < sk.handles.size(); ++j) {
        if (j == k) continue;
        const Int e = positive_part(dot(sk.handles[j].chi, hk.psi));
        if (e == 0) continue;
        Handle& h = out.handles[j];
        h.psi = h.psi + e * hk.psi;
        IntVec chi = h.chi + e * hk.chi;
        if (is_zero(chi)) throw InvariantError("surgery produced a zero cocharacter");
        h.chi = primitive_part(chi);
    }
    out.handles[k].psi = -hk.psi;
    out.handles[k].chi = -hk.chi;
    for (const auto& h : out.handles)
        if (dot(h.psi, h.chi) != 0) throw InvariantError("surgery broke handle orthogonality");
    return out;
}

} // namespace clustermirror
