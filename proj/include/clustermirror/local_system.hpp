#pragma once

// Local systems on the 2-torus given by commuting holonomy matrices, and
// their mutation across a cooriented circle.

#include <cstddef>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "skeleton.hpp"

namespace clustermirror {

/// Holonomies E(e_1), ..., E(e_n) of a rank-r local system on T^n, over a field F.
template <class F>
struct LocalSystemT {
    std::size_t rank = 1;
    std::vector<Matrix<F>> holonomies;

    std::size_t n() const { return holonomies.size(); }

    void validate() const {
        for (const auto& h : holonomies) {
            if (h.rows() != rank || h.cols() != rank) throw ValidationError("holonomy has the wrong size");
            if (field_det(h) == F(0)) throw ValidationError("holonomy is not invertible");
        }
        for (std::size_t i = 0; i < holonomies.size(); ++i)
            for (std::size_t j = i + 1; j < holonomies.size(); ++j)
                if (holonomies[i] * holonomies[j] != holonomies[j] * holonomies[i])
                    throw ValidationError("holonomies do not commute");
    }

    friend bool operator==(const LocalSystemT& a, const LocalSystemT& b) {
        return a.rank == b.rank && a.holonomies == b.holonomies;
    }
};

using LocalSystem = LocalSystemT<Rat>;
using SymbolicLocalSystem = LocalSystemT<RationalFunction>;

/// M^e for a square invertible matrix and any integer e.
template <class F>
Matrix<F> matrix_power(const Matrix<F>& m, const Int& e) {
    Matrix<F> base = e < 0 ? inverse(m) : m;
    Int k = e < 0 ? Int(-e) : e;
    Matrix<F> out = Matrix<F>::identity(m.rows());
    while (k > 0) {
        if ((k & 1) != 0) out = out * base;
        base = base * base;
        k >>= 1;
    }
    return out;
}

/// prod_i E(e_i)^{c_i}, well defined since the holonomies commute.
template <class F>
Matrix<F> holonomy_around(const LocalSystemT<F>& ls, const IntVec& c) {
    if (c.size() != ls.n()) throw ValidationError("loop class length differs from torus rank");
    Matrix<F> out = Matrix<F>::identity(ls.rank);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) out = out * matrix_power(ls.holonomies[i], c[i]);
    return out;
}

/// True iff the holonomy around s does not have 1 as an eigenvalue.
template <class F>
bool is_mutable(const LocalSystemT<F>& ls, const IntVec& s) {
    const Matrix<F> x = holonomy_around(ls, s);
    return field_det(Matrix<F>::identity(ls.rank) - x) != F(0);
}

template <class F>
struct LocalSystemMutation {
    IntVec s;                 // class of the surgery circle
    IntVec gamma1;            // adapted basis: gamma1 = s
    IntVec gamma2;            // <gamma2, s> = -1
    Matrix<F> adapted1;       // E'(gamma1) = E(gamma1)
    Matrix<F> adapted2;       // E'(gamma2) = (I - E(s)) E(gamma2)
    LocalSystemT<F> result;   // standard basis of the mutated torus
};

/// Mutation across the circle of class s (sign = coorientation), n = 2.
/// In the standard basis E'(delta) = E(tau_s delta) (I - E(s))^{-<delta, s>}.
template <class F>
LocalSystemMutation<F> mutate_local_system(const LocalSystemT<F>& ls, const IntVec& s) {
    if (ls.n() != 2) throw ValidationError("local-system mutation is supported for n = 2 only");
    if (s.size() != 2 || is_zero(s) || !is_primitive(s)) throw ValidationError("surgery class must be primitive");
    ls.validate();
    const Matrix<F> I = Matrix<F>::identity(ls.rank);
    const Matrix<F> x = holonomy_around(ls, s);
    const Matrix<F> ix = I - x;
    if (field_det(ix) == F(0))
        throw ValidationError("not mutable: det(I - E_S) = 0; required: E_S does not have 1 as an eigenvalue");

    LocalSystemMutation<F> out;
    out.s = s;
    out.gamma1 = s;
    // <gamma2, s> = g2[0] s[1] - g2[1] s[0] = -1
    auto [g, u, v] = extended_gcd(s[1], -s[0]);
    if (g != 1) throw InvariantError("primitive class has gcd different from 1");
    out.gamma2 = {-u, -v};
    out.adapted1 = holonomy_around(ls, out.gamma1);
    out.adapted2 = ix * holonomy_around(ls, out.gamma2);

    out.result.rank = ls.rank;
    for (std::size_t i = 0; i < 2; ++i) {
        IntVec delta{i == 0 ? 1 : 0, i == 1 ? 1 : 0};
        const Int m = intersection_number(delta, s);
        out.result.holonomies.push_back(holonomy_around(ls, dehn_twist(delta, s)) * matrix_power(ix, -m));
    }
    for (const auto& h : out.result.holonomies)
        if (field_det(h) == F(0)) throw InvariantError("mutated holonomy is singular");
    if (out.result.holonomies[0] * out.result.holonomies[1] != out.result.holonomies[1] * out.result.holonomies[0])
        throw InvariantError("mutated holonomies do not commute");
    return out;
}

/// Double mutation at s then -s multiplies E(tau_s delta) by kLocalSystemSign^{<delta, s>}.
inline constexpr int kLocalSystemSign = -1;

/// The re-identification tau_s^{-1} applied to a mutated-twice system:
/// returns delta -> E''(tau_s^{-1} delta).
template <class F>
LocalSystemT<F> reidentify(const LocalSystemT<F>& twice, const IntVec& s) {
    LocalSystemT<F> out;
    out.rank = twice.rank;
    for (std::size_t i = 0; i < 2; ++i) {
        IntVec delta{i == 0 ? 1 : 0, i == 1 ? 1 : 0};
        IntVec back = delta - intersection_number(delta, s) * s;
        out.holonomies.push_back(holonomy_around(twice, back));
    }
    return out;
}

/// The coherence prediction: delta -> kLocalSystemSign^{<delta, s>} E(delta).
template <class F>
LocalSystemT<F> coherence_prediction(const LocalSystemT<F>& ls, const IntVec& s) {
    LocalSystemT<F> out;
    out.rank = ls.rank;
    for (std::size_t i = 0; i < 2; ++i) {
        IntVec delta{i == 0 ? 1 : 0, i == 1 ? 1 : 0};
        Int m = intersection_number(delta, s);
        F sign = (m % 2 == 0 || kLocalSystemSign == 1) ? F(1) : F(-1);
        out.holonomies.push_back(sign * ls.holonomies[i]);
    }
    return out;
}

/// Rank-1 symbolic local system with holonomies x_1, ..., x_n.
inline SymbolicLocalSystem generic_symbolic_system(std::size_t n) {
    SymbolicLocalSystem ls;
    ls.rank = 1;
    for (std::size_t i = 0; i < n; ++i)
        ls.holonomies.push_back(Matrix<RationalFunction>(1, 1, RationalFunction::variable(n, i)));
    return ls;
}

struct ChartTransition {
    IntVec s;
    RationalFunction first;
    RationalFunction second;
};

/// The birational torus map induced by mutating the generic rank-1 system
/// across the circle of handle k (0-based) of the seed's skeleton.
inline ChartTransition chart_transition(const Seed& seed, std::size_t k) {
    seed.validate();
    if (seed.n != 2) throw ValidationError("chart transitions are defined for 2-dimensional seeds");
    for (const auto& x : seed.d)
        if (x != 1) throw ValidationError("chart transitions need skew-symmetric data (d = 1)");
    const Skeleton sk = skeleton_from_seed(seed);
    if (k >= sk.handles.size()) throw ValidationError("mutation only at unfrozen vectors");
    const IntVec s = circle_class(sk.handles[k].psi);
    auto m = mutate_local_system(generic_symbolic_system(2), s);
    return {s, m.result.holonomies[0](0, 0), m.result.holonomies[1](0, 0)};
}

/// Apply the transition of circle class s to an arbitrary rank-1 symbolic pair.
inline std::pair<RationalFunction, RationalFunction> apply_transition(const RationalFunction& a,
                                                                      const RationalFunction& b,
                                                                      const IntVec& s) {
    SymbolicLocalSystem ls;
    ls.rank = 1;
    ls.holonomies = {Matrix<RationalFunction>(1, 1, a), Matrix<RationalFunction>(1, 1, b)};
    auto m = mutate_local_system(ls, s);
    return {m.result.holonomies[0](0, 0), m.result.holonomies[1](0, 0)};
}

} // namespace clustermirror
