#pragma once

// Cluster seeds, exchange matrices, mutation and exchange graphs.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"

namespace clustermirror {

/// A seed: a basis psi of N = Z^n (first r vectors unfrozen), the skew form
/// B in the reference basis, and positive multipliers d.
struct Seed {
    std::size_t n = 0;
    std::size_t r = 0;
    std::vector<IntVec> psi;
    IntMat B;
    std::vector<Int> d;

    IntMat psi_matrix() const { return IntMat::from_columns(psi, n); }

    /// Throws ValidationError unless all seed invariants hold.
    void validate() const {
        if (n == 0) throw ValidationError("seed rank must be positive");
        if (r > n) throw ValidationError("unfrozen count exceeds rank");
        if (psi.size() != n) throw ValidationError("psi must list exactly rank vectors");
        for (const auto& v : psi)
            if (v.size() != n) throw ValidationError("psi vector length differs from rank");
        if (B.rows() != n || B.cols() != n) throw ValidationError("B must be rank x rank");
        if (!is_skew_symmetric(B)) throw ValidationError("B is not skew-symmetric");
        if (d.size() != n) throw ValidationError("d must list exactly rank multipliers");
        for (const auto& x : d)
            if (x < 1) throw ValidationError("multipliers must be positive");
        if (!is_unimodular(psi_matrix())) throw ValidationError("psi is not a basis of the lattice");
    }

    friend bool operator==(const Seed& a, const Seed& b) {
        return a.n == b.n && a.r == b.r && a.psi == b.psi && a.B == b.B && a.d == b.d;
    }
};

/// The A2 seed: psi = e1, e2, B = [[0,1],[-1,0]], d = (1,1).
inline Seed a2_seed() {
    Seed s;
    s.n = 2;
    s.r = 2;
    s.psi = {{1, 0}, {0, 1}};
    s.B = IntMat{{0, 1}, {-1, 0}};
    s.d = {1, 1};
    return s;
}

inline Int positive_part(const Int& x) { return x > 0 ? x : Int(0); }

/// eps_ij = psi_i^T B psi_j * d_j.
inline IntMat exchange_matrix(const Seed& s) {
    IntMat eps(s.n, s.n);
    for (std::size_t i = 0; i < s.n; ++i) {
        IntVec row = s.B.transpose() * s.psi[i];  // covector psi_i^T B
        for (std::size_t j = 0; j < s.n; ++j) eps(i, j) = dot(row, s.psi[j]) * s.d[j];
    }
    return eps;
}

inline bool is_skew_symmetrizable(const IntMat& eps, const std::vector<Int>& d) {
    for (std::size_t i = 0; i < eps.rows(); ++i)
        for (std::size_t j = 0; j < eps.cols(); ++j)
            if (d[i] * eps(i, j) != -d[j] * eps(j, i)) return false;
    return true;
}

/// Mutation at the unfrozen index k (0-based).
inline Seed mutate(const Seed& s, std::size_t k) {
    if (k >= s.r) throw ValidationError("mutation only at unfrozen vectors");
    const IntMat eps = exchange_matrix(s);
    Seed out = s;
    for (std::size_t i = 0; i < s.n; ++i) {
        if (i == k) {
            out.psi[i] = -s.psi[k];
        } else {
            Int c = positive_part(eps(i, k));
            if (c != 0) out.psi[i] = s.psi[i] + c * s.psi[k];
        }
    }
    return out;
}

/// Apply mutations in order.
inline Seed mutate_sequence(Seed s, const std::vector<std::size_t>& ks) {
    for (std::size_t k : ks) s = mutate(s, k);
    return s;
}

/// Matrix mutation in the Fomin-Zelevinsky form, independent of mutate().
inline IntMat matrix_mutation_oracle(const IntMat& eps, std::size_t k) {
    if (!eps.square()) throw ValidationError("exchange matrix must be square");
    if (k >= eps.rows()) throw ValidationError("mutation index out of range");
    IntMat out = eps;
    for (std::size_t i = 0; i < eps.rows(); ++i)
        for (std::size_t j = 0; j < eps.cols(); ++j) {
            if (i == k || j == k)
                out(i, j) = -eps(i, j);
            else
                out(i, j) = eps(i, j) + positive_part(eps(i, k)) * eps(k, j) +
                            eps(i, k) * positive_part(-eps(k, j));
        }
    return out;
}

namespace detail {

inline std::string vec_key(const IntVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    return out + ")";
}

} // namespace detail

/// A deterministic string describing the seed exactly, in index order.
inline std::string seed_key(const Seed& s) {
    std::string out = std::to_string(s.n) + "|" + std::to_string(s.r) + "|";
    for (std::size_t i = 0; i < s.n; ++i) out += detail::vec_key(s.psi[i]) + ":" + s.d[i].str() + ";";
    out += "|";
    for (std::size_t i = 0; i < s.n; ++i) out += detail::vec_key(s.B.row(i));
    return out;
}

/// Key invariant under permutations of the unfrozen indices.
inline std::string canonical_key(const Seed& s) {
    std::vector<std::pair<IntVec, Int>> unfrozen;
    for (std::size_t i = 0; i < s.r; ++i) unfrozen.emplace_back(s.psi[i], s.d[i]);
    std::sort(unfrozen.begin(), unfrozen.end());
    std::string out = std::to_string(s.n) + "|" + std::to_string(s.r) + "|";
    for (const auto& [v, m] : unfrozen) out += detail::vec_key(v) + ":" + m.str() + ";";
    out += "|";
    for (std::size_t i = s.r; i < s.n; ++i) out += detail::vec_key(s.psi[i]) + ":" + s.d[i].str() + ";";
    out += "|";
    for (std::size_t i = 0; i < s.n; ++i) out += detail::vec_key(s.B.row(i));
    return out;
}

/// True iff the seeds agree up to a permutation of the unfrozen (psi, d) pairs.
inline bool seed_equivalent(const Seed& a, const Seed& b) {
    if (a.n != b.n || a.r != b.r) throw ValidationError("seeds of different shape");
    return canonical_key(a) == canonical_key(b);
}

struct GraphEdge {
    std::size_t source;
    std::size_t target;
    std::size_t index;  // 0-based mutation index
};

struct ExchangeGraph {
    std::vector<Seed> nodes;
    std::vector<GraphEdge> edges;
    bool truncated = false;
};

/// Node budget from CLUSTERMIRROR_BUDGET, default 10000.
inline std::size_t default_node_budget() {
    if (const char* env = std::getenv("CLUSTERMIRROR_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw ValidationError("CLUSTERMIRROR_BUDGET must be a positive integer");
    }
    return 10000;
}

/// Breadth-first closure of mutation up to `depth` steps.  Nodes are seed
/// classes up to unfrozen permutation; new nodes of each level are ordered
/// by their serialized key.
inline ExchangeGraph exchange_graph(const Seed& start, std::size_t depth, std::size_t budget) {
    start.validate();
    ExchangeGraph g;
    std::map<std::string, std::size_t> index;
    g.nodes.push_back(start);
    index.emplace(canonical_key(start), 0);
    std::vector<std::size_t> frontier{0};

    for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
        struct Pending {
            std::size_t source;
            std::size_t k;
            std::string key;
        };
        std::vector<Pending> pending;
        std::map<std::string, Seed> fresh;
        for (std::size_t src : frontier) {
            for (std::size_t k = 0; k < g.nodes[src].r; ++k) {
                Seed child = mutate(g.nodes[src], k);
                std::string key = canonical_key(child);
                if (!index.count(key)) fresh.emplace(key, child);
                pending.push_back({src, k, key});
            }
        }
        std::vector<std::pair<std::string, Seed>> ordered;
        for (auto& [key, seed] : fresh) ordered.emplace_back(seed_key(seed), seed);
        std::sort(ordered.begin(), ordered.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });

        std::vector<std::size_t> next;
        for (auto& [skey, seed] : ordered) {
            if (g.nodes.size() >= budget) {
                g.truncated = true;
                break;
            }
            index.emplace(canonical_key(seed), g.nodes.size());
            next.push_back(g.nodes.size());
            g.nodes.push_back(seed);
        }
        for (const auto& p : pending) {
            auto it = index.find(p.key);
            if (it != index.end()) g.edges.push_back({p.source, it->second, p.k});
        }
        frontier = std::move(next);
        if (g.truncated) break;
    }
    return g;
}

inline ExchangeGraph exchange_graph(const Seed& start, std::size_t depth) {
    return exchange_graph(start, depth, default_node_budget());
}

} // namespace clustermirror
