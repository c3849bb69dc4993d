#pragma once

// Seeded random instances for property suites.  Draws use mt19937_64 with
// rejection sampling, so a seed reproduces the same corpus on every platform.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "local_system.hpp"
#include "seed.hpp"

namespace clustermirror {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        if (hi < lo) throw ValidationError("empty random range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return lo + static_cast<long>(x % span);
    }

    bool coin() { return uniform(0, 1) == 1; }

private:
    std::mt19937_64 engine_;
};

/// Product of random elementary operations; determinant +1 or -1 at random.
inline IntMat random_unimodular(std::size_t n, Rng& rng, int steps = 6, long bound = 1) {
    IntMat m = IntMat::identity(n);
    if (n == 1) {
        if (rng.coin()) m(0, 0) = -1;
        return m;
    }
    for (int s = 0; s < steps; ++s) {
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
        if (j >= i) ++j;
        const Int c = rng.uniform(-bound, bound);
        for (std::size_t col = 0; col < n; ++col) m(i, col) += c * m(j, col);
    }
    if (rng.coin())
        for (std::size_t col = 0; col < n; ++col) m(0, col) = -m(0, col);
    return m;
}

/// Random valid seed of rank 1..max_rank whose exchange matrix has entries
/// bounded by eps_bound.
inline Seed random_seed(Rng& rng, std::size_t max_rank = 6, long eps_bound = 4, long max_d = 3) {
    Seed s;
    s.n = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_rank)));
    s.r = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(s.n)));
    for (std::size_t i = 0; i < s.n; ++i) s.d.push_back(rng.uniform(1, max_d));
    // Skew form in the psi basis, Omega_ij = beta(psi_i, psi_j), with |Omega_ij d_j| <= eps_bound.
    IntMat omega(s.n, s.n);
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t j = i + 1; j < s.n; ++j) {
            long cap = eps_bound / static_cast<long>(std::max(s.d[i], s.d[j]));
            omega(i, j) = rng.uniform(-cap, cap);
            omega(j, i) = -omega(i, j);
        }
    const IntMat P = random_unimodular(s.n, rng);
    for (std::size_t j = 0; j < s.n; ++j) s.psi.push_back(P.col(j));
    const IntMat Pinv = inverse_unimodular(P);
    s.B = Pinv.transpose() * omega * Pinv;
    s.validate();
    return s;
}

/// Rank-2 seed with B = [[0,1],[-1,0]], d = 1, random basis and 1 or 2 unfrozen vectors.
inline Seed random_dictionary_seed(Rng& rng) {
    Seed s;
    s.n = 2;
    s.r = static_cast<std::size_t>(rng.uniform(1, 2));
    const IntMat P = random_unimodular(2, rng, 8, 2);
    s.psi = {P.col(0), P.col(1)};
    s.B = IntMat{{0, 1}, {-1, 0}};
    s.d = {1, 1};
    s.validate();
    return s;
}

inline IntVec random_primitive2(Rng& rng, long bound = 20) {
    for (;;) {
        IntVec v{rng.uniform(-bound, bound), rng.uniform(-bound, bound)};
        if (!is_zero(v) && is_primitive(v)) return v;
    }
}

/// Nonzero rational p/q with |p| <= bound and 1 <= q <= bound.
inline Rat random_nonzero_rational(Rng& rng, long bound = 9) {
    for (;;) {
        long p = rng.uniform(-bound, bound);
        if (p != 0) return Rat(p, rng.uniform(1, bound));
    }
}

/// A rank-r local system on T^2 together with a class s it can be mutated across.
/// Holonomies are a I + b C for one random matrix C, hence commute.
inline std::pair<LocalSystem, IntVec> random_mutable_local_system(Rng& rng, std::size_t rank) {
    for (;;) {
        RatMat C(rank, rank);
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < rank; ++j) C(i, j) = rng.uniform(-3, 3);
        LocalSystem ls;
        ls.rank = rank;
        for (int k = 0; k < 2; ++k) {
            RatMat h = random_nonzero_rational(rng) * RatMat::identity(rank);
            if (rank > 1) h = h + Rat(rng.uniform(-2, 2)) * C;
            ls.holonomies.push_back(h);
        }
        bool ok = true;
        for (const auto& h : ls.holonomies) ok = ok && field_det(h) != 0;
        if (!ok) continue;
        IntVec s = random_primitive2(rng, 3);
        if (is_mutable(ls, s)) return {ls, s};
    }
}

} // namespace clustermirror
