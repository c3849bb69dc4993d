#pragma once

// Toric models of seeds: stacky fans of rays, blowup characters, symbolic
// blowup loci and local presentations.

#include <cstddef>
#include <string>
#include <vector>

#include "seed.hpp"

namespace clustermirror {

struct StackyRay {
    IntVec psi;
    Int d;

    friend bool operator==(const StackyRay& a, const StackyRay& b) { return a.psi == b.psi && a.d == b.d; }
};

struct StackyFan1D {
    std::size_t n = 0;
    std::vector<StackyRay> rays;
};

struct LocalPresentation {
    std::size_t index = 0;  // 0-based ray index
    std::string x;          // the coordinate vanishing on the ray divisor
    std::string x_prime;
    IntVec chi;
    std::string monomial;   // y^(chi)
    std::string relation;
    bool degenerate = false;     // chi = 0, so the right-hand side is the constant 2
    bool basic_model = false;    // chi is a unit vector: xz = y + 1 in suitable coordinates
};

struct ToricModel {
    StackyFan1D fan;
    std::vector<IntVec> chi;
    std::vector<std::string> loci;
    std::vector<LocalPresentation> presentations;
};

struct MutationReport {
    ToricModel before;
    ToricModel after;
    std::size_t k = 0;
    IntVec ray_before;
    IntVec ray_after;
    std::string moved_locus;
};

namespace detail {

inline std::string vec_text(const IntVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    return out + ")";
}

} // namespace detail

/// Rays (psi_i, d_i) for the unfrozen indices; rejects two rays in one direction.
inline StackyFan1D fan_from_seed(const Seed& s) {
    s.validate();
    StackyFan1D fan;
    fan.n = s.n;
    for (std::size_t i = 0; i < s.r; ++i) {
        IntVec dir = primitive_part(s.psi[i]);
        for (const auto& ray : fan.rays)
            if (primitive_part(ray.psi) == dir) throw ValidationError("fan collision");
        fan.rays.push_back({s.psi[i], s.d[i]});
    }
    return fan;
}

/// chi_i = psi_i^T B as a covector, one per unfrozen index.
inline std::vector<IntVec> blowup_characters(const Seed& s) {
    s.validate();
    std::vector<IntVec> out;
    const IntMat bt = s.B.transpose();
    for (std::size_t i = 0; i < s.r; ++i) {
        IntVec chi = bt * s.psi[i];
        if (dot(chi, s.psi[i]) != 0) throw InvariantError("blowup character does not vanish on its ray");
        out.push_back(chi);
    }
    return out;
}

inline LocalPresentation local_presentation(const Seed& s, std::size_t i) {
    if (i >= s.r) throw ValidationError("presentation only at unfrozen rays");
    const IntVec chi = blowup_characters(s)[i];
    LocalPresentation p;
    p.index = i;
    p.x = "x" + std::to_string(i + 1);
    p.x_prime = p.x + "'";
    p.chi = chi;
    p.monomial = "y^" + detail::vec_text(chi);
    p.degenerate = is_zero(chi);
    if (p.degenerate) {
        p.relation = p.x + " " + p.x_prime + " = 2";
    } else {
        p.relation = p.x + " " + p.x_prime + " = " + p.monomial + " + 1";
        std::size_t nonzero = 0;
        bool units = true;
        for (const auto& c : chi) {
            if (c == 0) continue;
            ++nonzero;
            units = units && (c == 1 || c == -1);
        }
        p.basic_model = nonzero == 1 && units;
    }
    return p;
}

inline ToricModel toric_model(const Seed& s) {
    ToricModel m;
    m.fan = fan_from_seed(s);
    m.chi = blowup_characters(s);
    for (std::size_t i = 0; i < s.r; ++i) {
        m.loci.push_back("{chi_" + std::to_string(i + 1) + " = -1} in D_" + std::to_string(i + 1) +
                         ", chi_" + std::to_string(i + 1) + " = " + detail::vec_text(m.chi[i]));
        m.presentations.push_back(local_presentation(s, i));
    }
    return m;
}

/// Toric models before and after mutation at k (0-based).
inline MutationReport mutate_model(const Seed& s, std::size_t k) {
    MutationReport rep;
    Seed t = mutate(s, k);
    rep.before = toric_model(s);
    rep.after = toric_model(t);
    rep.k = k;
    rep.ray_before = s.psi[k];
    rep.ray_after = t.psi[k];
    rep.moved_locus = "ray " + std::to_string(k + 1) + " reversed " + detail::vec_text(s.psi[k]) + " -> " +
                      detail::vec_text(t.psi[k]) + "; blowup locus moves from the 0-divisor to the infinity-divisor";
    return rep;
}

} // namespace clustermirror
