#pragma once

// Randomized cross-verification suites.  Each suite returns a result with the
// first counterexample serialized as JSON.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "random.hpp"

namespace clustermirror {

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string message;
    std::optional<io::json> counterexample;
};

namespace detail {

inline SuiteResult fail(SuiteResult r, const std::string& msg, io::json witness) {
    r.passed = false;
    r.message = msg;
    r.counterexample = std::move(witness);
    return r;
}

} // namespace detail

/// exchange_matrix(mutate(s,k)) agrees with the matrix-mutation oracle, and
/// skew-symmetrizability, B, d and det(psi) = +-1 are preserved.
inline SuiteResult verify_oracle(std::uint64_t prng, std::size_t cases) {
    SuiteResult r{"oracle"};
    Rng rng(prng);
    for (std::size_t c = 0; c < cases; ++c) {
        const Seed s = random_seed(rng);
        const IntMat eps = exchange_matrix(s);
        for (std::size_t k = 0; k < s.r; ++k) {
            const Seed t = mutate(s, k);
            const IntMat mutated = exchange_matrix(t);
            io::json w = {{"seed", io::to_json(s)}, {"k", k + 1}};
            if (mutated != matrix_mutation_oracle(eps, k)) return detail::fail(r, "oracle disagrees with mutate", w);
            if (!is_skew_symmetrizable(mutated, t.d)) return detail::fail(r, "skew-symmetrizability lost", w);
            if (!(t.B == s.B) || t.d != s.d || t.n != s.n || t.r != s.r || !is_unimodular(t.psi_matrix()))
                return detail::fail(r, "mutation changed fixed data", w);
        }
        ++r.cases;
    }
    return r;
}

/// Double mutation restores eps and acts on the basis by the transvection
/// psi_i -> psi_i + eps_ik psi_k.
inline SuiteResult verify_double(std::uint64_t prng, std::size_t cases) {
    SuiteResult r{"double"};
    Rng rng(prng);
    for (std::size_t c = 0; c < cases; ++c) {
        const Seed s = random_seed(rng);
        const IntMat eps = exchange_matrix(s);
        for (std::size_t k = 0; k < s.r; ++k) {
            const Seed t = mutate(mutate(s, k), k);
            io::json w = {{"seed", io::to_json(s)}, {"k", k + 1}};
            if (exchange_matrix(t) != eps) return detail::fail(r, "double mutation changed eps", w);
            for (std::size_t i = 0; i < s.n; ++i) {
                IntVec expected = i == k ? s.psi[k] : s.psi[i] + eps(i, k) * s.psi[k];
                if (t.psi[i] != expected) return detail::fail(r, "double mutation is not the transvection", w);
            }
        }
        ++r.cases;
    }
    return r;
}

/// disk_surgery(skeleton_from_seed(s), k) = skeleton_from_seed(mutate(s, k)).
inline SuiteResult verify_dictionary(std::uint64_t prng, std::size_t cases) {
    SuiteResult r{"dictionary"};
    Rng rng(prng);
    for (std::size_t c = 0; c < cases; ++c) {
        const Seed s = random_dictionary_seed(rng);
        for (std::size_t k = 0; k < s.r; ++k) {
            const Skeleton lhs = disk_surgery(skeleton_from_seed(s), k);
            const Skeleton rhs = skeleton_from_seed(mutate(s, k));
            if (!(lhs == rhs))
                return detail::fail(r, "surgery and mutation disagree",
                                    {{"seed", io::to_json(s)}, {"k", k + 1}, {"surgery", io::to_json(lhs)},
                                     {"mutation", io::to_json(rhs)}});
        }
        ++r.cases;
    }
    return r;
}

/// A standard corner trade whose eigenray points along -psi.
inline AlmostToricBase duality_corner(const IntVec& psi) {
    // W e1 = -psi; A^-1 = W K^-1 with K = [[1,0],[1,1]], so A^-1 (1,1) = -psi.
    const IntMat W = conjugation_witness(-psi).A;
    const IntMat Kinv{{1, 0}, {-1, 1}};
    const IntMat Ainv = W * Kinv;
    Polygon2D poly;
    poly.vertices = {{0, 0}};
    poly.in_ray = Ainv.col(1);
    poly.out_ray = Ainv.col(0);
    NodalTrade t;
    t.vertex = 0;
    return apply_trades(make_polygon(poly), {t});
}

/// A-side monodromies equal transposes of B-side ones ray by ray.
inline SuiteResult verify_duality(std::uint64_t prng, std::size_t cases) {
    SuiteResult r{"duality"};
    Rng rng(prng);
    for (std::size_t c = 0; c < cases; ++c) {
        const IntVec psi = random_primitive2(rng);
        const AlmostToricBase a_side = duality_corner(psi);
        StackyFan1D fan;
        fan.n = 2;
        fan.rays = {{psi, 1}};
        const IntegralAffineBase2D b_side = base_from_fan(fan);
        const IntegralAffineBase2D a_affine = to_affine_base(a_side);
        const IntegralAffineBase2D b_dual = toggle_convention(b_side);
        io::json w = {{"psi", io::to_json(psi)}};
        if (!(a_affine.singularities[0].monodromy == b_dual.singularities[0].monodromy))
            return detail::fail(r, "A-side monodromy is not the transpose of the B-side monodromy", w);
        if (primitive_part(a_affine.singularities[0].direction) != primitive_part(-psi))
            return detail::fail(r, "A-side eigenray is not along the B-side ray", w);
        const RatVec q = {2 * Rat(-psi[0]), 2 * Rat(-psi[1])};
        const Skeleton sk = skeleton_from_base(a_side, q);
        if (sk.handles[0].psi != psi) return detail::fail(r, "skeleton handle is not the ray", w);
        ++r.cases;
    }
    return r;
}

/// Mutating at s and then at -s, and re-identifying loops by tau_s^-1,
/// multiplies E(delta) by kLocalSystemSign^<delta, s>.
inline SuiteResult verify_coherence(std::uint64_t prng, std::size_t cases) {
    SuiteResult r{"coherence"};
    Rng rng(prng);
    for (std::size_t c = 0; c < cases; ++c) {
        const std::size_t rank = c % 2 == 0 ? 1 : 2;
        auto [ls, s] = random_mutable_local_system(rng, rank);
        auto once = mutate_local_system(ls, s);
        io::json w = {{"local_system", io::to_json(ls)}, {"s", io::to_json(s)}};
        if (!(holonomy_around(once.result, s) == holonomy_around(ls, s)))
            return detail::fail(r, "holonomy around the surgery circle changed", w);
        if (!(once.adapted1 == holonomy_around(ls, s)))
            return detail::fail(r, "adapted holonomy along the surgery circle changed", w);
        auto twice = mutate_local_system(once.result, -s);
        if (!(reidentify(twice.result, s) == coherence_prediction(ls, s)))
            return detail::fail(r, "double mutation is not coherent with the global sign", w);
        ++r.cases;
    }
    return r;
}

/// Checks one SYZ base: unimodular, trace 2, fixes its direction, matches
/// the closed formula for its direction.
inline SuiteResult verify_affine_base(const IntegralAffineBase2D& base) {
    SuiteResult r{"monodromy"};
    for (std::size_t i = 0; i < base.singularities.size(); ++i) {
        const auto& s = base.singularities[i];
        IntMat m = base.convention == Convention::Character ? s.monodromy : s.monodromy.transpose();
        io::json w = {{"singularity", i + 1}, {"direction", io::to_json(s.direction)}, {"monodromy", io::to_json(s.monodromy)}};
        if (s.direction.size() != 2 || is_zero(s.direction) || !is_primitive(s.direction))
            return detail::fail(r, "direction is not primitive", w);
        if (det(m) != 1) return detail::fail(r, "monodromy is not unimodular", w);
        if (m(0, 0) + m(1, 1) != 2) return detail::fail(r, "monodromy trace is not 2", w);
        if (!(m == monodromy_matrix(s.direction))) return detail::fail(r, "monodromy differs from its closed formula", w);
        ++r.cases;
    }
    return r;
}

/// The standard fixture plus random primitive directions.
inline SuiteResult verify_monodromy(std::uint64_t prng, std::size_t cases) {
    SuiteResult r{"monodromy"};
    if (!(monodromy_matrix({-1, -1}).transpose() == standard_trade_monodromy()))
        return detail::fail(r, "fixture M(-1,-1)^T differs from [[2,1],[-1,0]]", {{"psi", io::to_json(IntVec{-1, -1})}});
    Rng rng(prng);
    for (std::size_t c = 0; c < cases; ++c) {
        const IntVec psi = random_primitive2(rng);
        const IntMat m = monodromy_matrix(psi);
        io::json w = {{"psi", io::to_json(psi)}};
        if (det(m) != 1 || m(0, 0) + m(1, 1) != 2 || m * psi != psi || !(monodromy_matrix(-psi) == m))
            return detail::fail(r, "monodromy invariants fail", w);
        const auto wit = conjugation_witness(psi);
        if (wit.sign != kSyzSign || !check_conjugation(psi, wit)) return detail::fail(r, "conjugation witness fails", w);
        ++r.cases;
    }
    return r;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"oracle", "double", "dictionary", "duality", "coherence", "monodromy"};
    return names;
}

inline SuiteResult run_suite(const std::string& name, std::uint64_t prng, std::size_t cases) {
    if (name == "oracle") return verify_oracle(prng, cases);
    if (name == "double") return verify_double(prng, cases);
    if (name == "dictionary") return verify_dictionary(prng, cases);
    if (name == "duality") return verify_duality(prng, cases);
    if (name == "coherence") return verify_coherence(prng, cases);
    if (name == "monodromy") return verify_monodromy(prng, cases);
    throw ValidationError("unknown suite '" + name + "'");
}

} // namespace clustermirror
