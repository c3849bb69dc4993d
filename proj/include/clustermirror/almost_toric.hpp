#pragma once

// Almost toric bases: nodal trades at smooth corners of moment polygons and
// at codimension-2 faces of moment polytopes, eigenlines and eigenhyperplanes,
// the common basepoint, skeleton extraction and SVG diagrams.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skeleton.hpp"
#include "svg.hpp"
#include "syz_base.hpp"

namespace clustermirror {

/// normal . x >= offset
struct HalfSpace {
    IntVec normal;
    Rat offset;

    friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Convex polygon listed counterclockwise.  An unbounded polygon carries a
/// ray at its first vertex (in_ray, pointing away from the vertex) and at its
/// last vertex (out_ray); a bounded one has neither.
struct Polygon2D {
    std::vector<RatVec> vertices;
    std::optional<IntVec> in_ray;
    std::optional<IntVec> out_ray;

    friend bool operator==(const Polygon2D&, const Polygon2D&) = default;
};

struct MomentPolytope {
    std::size_t dimension = 2;
    Polygon2D polygon;                  // dimension 2
    std::vector<HalfSpace> inequalities;  // dimension 2 (derived) and higher

    friend bool operator==(const MomentPolytope&, const MomentPolytope&) = default;
};

/// model(x) = A (x - p), identifying a neighbourhood with (R>=0)^2 x R^{n-2}.
struct Chart {
    IntMat A;
    RatVec p;

    RatVec to_model(const RatVec& x) const {
        RatVec d(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - p[i];
        return to_rational(A) * d;
    }
    RatVec from_model(const RatVec& y) const {
        RatVec x = to_rational(inverse_unimodular(A)) * y;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += p[i];
        return x;
    }

    friend bool operator==(const Chart&, const Chart&) = default;
};

struct NodalTrade {
    std::size_t vertex = 0;                              // dimension 2, 0-based
    std::pair<std::size_t, std::size_t> face{0, 0};     // higher dimensions, facet indices
    std::optional<Chart> chart;
    Rat t = 1;
};

struct PlacedTrade {
    NodalTrade request;
    Chart chart;
    RatVec singular_point;   // base point of the singular locus
    IntVec eigen_direction;  // chart^-1 (1,1,0,...)
    IntVec covector;         // A^T (1,-1,0,...): eigenhyperplane normal, fixed by the monodromy
    IntMat monodromy;        // cocharacter convention A^T diag(M0, I) A^-T
    RatVec cut_origin;
    IntVec cut_direction;    // toward the corner
};

struct AlmostToricBase {
    MomentPolytope polytope;
    std::vector<PlacedTrade> trades;
};

/// Monodromy around the standard focus-focus point (cocharacter convention).
inline IntMat standard_trade_monodromy() { return IntMat{{2, 1}, {-1, 0}}; }

namespace detail {

inline IntVec integral_direction(const RatVec& v) {
    Int l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = numerator(Rat(v[i] * l));
    if (is_zero(out)) throw ValidationError("repeated polygon vertex");
    return primitive_part(out);
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline IntVec rotate_ccw(const IntVec& u) { return {-u[1], u[0]}; }

inline Rat eval(const HalfSpace& h, const RatVec& x) { return dot(to_rational(h.normal), x) - h.offset; }

inline std::string pair_text(std::size_t i, std::size_t j) {
    return std::to_string(i + 1) + " and " + std::to_string(j + 1);
}

} // namespace detail

/// Boundary edge directions at a polygon vertex: toward the previous and next vertices (or rays).
struct CornerDirections {
    IntVec u_prev;
    IntVec u_next;
};

inline CornerDirections corner_directions(const Polygon2D& poly, std::size_t i) {
    const auto& v = poly.vertices;
    const std::size_t m = v.size();
    if (i >= m) throw ValidationError("vertex index out of range");
    const bool closed = !poly.in_ray;
    CornerDirections c;
    if (i == 0 && !closed)
        c.u_prev = primitive_part(*poly.in_ray);
    else
        c.u_prev = detail::integral_direction(detail::sub(v[(i + m - 1) % m], v[i]));
    if (i + 1 == m && !closed)
        c.u_next = primitive_part(*poly.out_ray);
    else
        c.u_next = detail::integral_direction(detail::sub(v[(i + 1) % m], v[i]));
    return c;
}

/// Inward half-planes of the polygon's edges, in boundary order.
inline std::vector<HalfSpace> polygon_halfspaces(const Polygon2D& poly) {
    const auto& v = poly.vertices;
    const std::size_t m = v.size();
    std::vector<HalfSpace> out;
    auto add = [&](const IntVec& travel, const RatVec& through) {
        IntVec n = detail::rotate_ccw(travel);
        out.push_back({n, dot(to_rational(n), through)});
    };
    if (poly.in_ray) add(-primitive_part(*poly.in_ray), v[0]);
    const std::size_t edges = poly.in_ray ? m - 1 : m;
    for (std::size_t i = 0; i < edges; ++i)
        add(detail::integral_direction(detail::sub(v[(i + 1) % m], v[i])), v[i]);
    if (poly.out_ray) add(primitive_part(*poly.out_ray), v[m - 1]);
    return out;
}

inline void validate_polygon(const Polygon2D& poly) {
    if (poly.vertices.empty()) throw ValidationError("polygon needs at least one vertex");
    for (const auto& x : poly.vertices)
        if (x.size() != 2) throw ValidationError("polygon vertices must have two coordinates");
    if (poly.in_ray.has_value() != poly.out_ray.has_value())
        throw ValidationError("an unbounded polygon needs both in_ray and out_ray");
    for (const auto* r : {&poly.in_ray, &poly.out_ray})
        if (*r && (r->value().size() != 2 || is_zero(r->value()))) throw ValidationError("polygon rays must be nonzero 2-vectors");
    if (!poly.in_ray && poly.vertices.size() < 3) throw ValidationError("a bounded polygon needs at least three vertices");
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        auto c = corner_directions(poly, i);
        if (cross2(c.u_next, c.u_prev) <= 0) throw ValidationError("polygon is not convex and counterclockwise");
    }
    for (const auto& h : polygon_halfspaces(poly))
        for (const auto& x : poly.vertices)
            if (detail::eval(h, x) < 0) throw ValidationError("polygon is not convex");
}

inline MomentPolytope make_polygon(Polygon2D poly) {
    validate_polygon(poly);
    MomentPolytope p;
    p.dimension = 2;
    p.inequalities = polygon_halfspaces(poly);
    p.polygon = std::move(poly);
    return p;
}

inline MomentPolytope make_polytope(std::size_t n, std::vector<HalfSpace> ineqs) {
    if (n < 2) throw ValidationError("polytope dimension must be at least 2");
    for (const auto& h : ineqs) {
        if (h.normal.size() != n) throw ValidationError("inequality normal length differs from dimension");
        if (is_zero(h.normal)) throw ValidationError("inequality normal must be nonzero");
    }
    MomentPolytope p;
    p.dimension = n;
    p.inequalities = std::move(ineqs);
    return p;
}

/// Chart sending the corner's edge directions to e1 and e2.
inline Chart smoothable_corner_chart(const MomentPolytope& poly, std::size_t vertex) {
    if (poly.dimension != 2) throw ValidationError("corner charts are defined for polygons");
    auto c = corner_directions(poly.polygon, vertex);
    IntMat cols = IntMat::from_columns({c.u_next, c.u_prev}, 2);
    if (det(cols) != 1) throw ValidationError("corner not integral-affine standard");
    return {inverse_unimodular(cols), poly.polygon.vertices[vertex]};
}

/// Chart for the codimension-2 face cut out by facets i and j.
inline Chart face_chart(const MomentPolytope& poly, std::size_t i, std::size_t j) {
    const auto& q = poly.inequalities;
    if (i >= q.size() || j >= q.size() || i == j) throw ValidationError("face must name two distinct facets");
    if (!is_primitive(q[i].normal) || !is_primitive(q[j].normal))
        throw ValidationError("face normals must be primitive");
    IntMat rows = IntMat::from_rows({q[i].normal, q[j].normal}, poly.dimension);
    IntMat A = complete_to_unimodular(rows);
    RatMat eqs = to_rational(rows);
    SolutionSet sol = solve_rational(eqs, {q[i].offset, q[j].offset});
    if (!sol.feasible()) throw ValidationError("facets do not meet");
    return {A, sol.point};
}

namespace detail {

inline RatVec diagonal_model_point(std::size_t n, const Rat& t) {
    RatVec y(n, Rat(0));
    y[0] = t;
    y[1] = t;
    return y;
}

// Closed excised triangles {x, y >= 0, x + y <= 2t} in polygon coordinates.
inline std::vector<RatVec> excised_triangle(const PlacedTrade& tr) {
    const Rat two_t = 2 * tr.request.t;
    return {tr.chart.from_model({0, 0}), tr.chart.from_model({two_t, 0}), tr.chart.from_model({0, two_t})};
}

// Closed convex polygons intersect iff no edge normal separates them.
inline bool convex_polygons_intersect(const std::vector<RatVec>& a, const std::vector<RatVec>& b) {
    auto separated_by = [](const std::vector<RatVec>& p, const std::vector<RatVec>& q) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            const RatVec& u = p[i];
            const RatVec& w = p[(i + 1) % p.size()];
            RatVec n = {-(w[1] - u[1]), w[0] - u[0]};
            Rat pmin = dot(n, p[0]), pmax = pmin, qmin = dot(n, q[0]), qmax = qmin;
            for (const auto& x : p) {
                pmin = std::min(pmin, dot(n, x));
                pmax = std::max(pmax, dot(n, x));
            }
            for (const auto& x : q) {
                qmin = std::min(qmin, dot(n, x));
                qmax = std::max(qmax, dot(n, x));
            }
            if (pmax < qmin || qmax < pmin) return true;
        }
        return false;
    };
    return !separated_by(a, b) && !separated_by(b, a);
}

} // namespace detail

inline PlacedTrade place_trade(const NodalTrade& request, const Chart& chart, std::size_t n) {
    if (request.t <= 0) throw ValidationError("trade parameter t must be positive");
    if (chart.A.rows() != n || chart.A.cols() != n || det(chart.A) != 1)
        throw ValidationError("trade chart must lie in SL(n,Z)");
    PlacedTrade tr;
    tr.request = request;
    tr.request.chart = chart;
    tr.chart = chart;
    const IntMat Ainv = inverse_unimodular(chart.A);
    IntVec ones(n, 0), diff(n, 0);
    ones[0] = ones[1] = 1;
    diff[0] = 1;
    diff[1] = -1;
    tr.singular_point = chart.from_model(detail::diagonal_model_point(n, request.t));
    tr.eigen_direction = Ainv * ones;
    tr.covector = chart.A.transpose() * diff;
    IntMat block = IntMat::identity(n);
    const IntMat m0 = standard_trade_monodromy();
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) block(i, j) = m0(i, j);
    tr.monodromy = chart.A.transpose() * block * Ainv.transpose();
    tr.cut_origin = tr.singular_point;
    tr.cut_direction = -tr.eigen_direction;
    return tr;
}

/// Place a focus-focus singularity (or a codimension-2 family) for each trade.
inline AlmostToricBase apply_trades(const MomentPolytope& poly, const std::vector<NodalTrade>& trades) {
    AlmostToricBase base;
    base.polytope = poly;
    const std::size_t n = poly.dimension;
    for (std::size_t i = 0; i < trades.size(); ++i) {
        const NodalTrade& request = trades[i];
        Chart chart;
        if (n == 2) {
            if (request.vertex >= poly.polygon.vertices.size()) throw ValidationError("trade vertex out of range");
            chart = smoothable_corner_chart(poly, request.vertex);
        } else {
            chart = face_chart(poly, request.face.first, request.face.second);
        }
        if (request.chart) {
            // A supplied chart must carry the same corner or face to the model.
            const Chart& c = *request.chart;
            if (c.A.rows() != n || c.A.cols() != n || c.p.size() != n || det(c.A) != 1)
                throw ValidationError("trade chart must lie in SL(n,Z)");
            for (std::size_t r = 0; r < 2; ++r)
                if (c.A.row(r) != chart.A.row(r)) throw ValidationError("trade chart does not identify the corner");
            if (c.to_model(chart.p)[0] != 0 || c.to_model(chart.p)[1] != 0)
                throw ValidationError("trade chart does not identify the corner");
            chart = c;
        }
        for (std::size_t j = 0; j < i; ++j) {
            const bool same = n == 2 ? trades[j].vertex == request.vertex
                                     : std::minmax(trades[j].face.first, trades[j].face.second) ==
                                           std::minmax(request.face.first, request.face.second);
            if (same) throw ValidationError("trades " + detail::pair_text(j, i) + " target the same corner");
        }
        base.trades.push_back(place_trade(request, chart, n));
    }
    if (n == 2) {
        for (std::size_t i = 0; i < base.trades.size(); ++i)
            for (std::size_t j = i + 1; j < base.trades.size(); ++j)
                if (detail::convex_polygons_intersect(detail::excised_triangle(base.trades[i]),
                                                      detail::excised_triangle(base.trades[j])))
                    throw ValidationError("overlapping trade neighborhoods: trades " + detail::pair_text(i, j));
    }
    return base;
}

/// Per trade: the monodromy carries the incoming boundary direction across
/// the cut onto the outgoing one.
inline std::vector<bool> smoothness_check(const AlmostToricBase& base) {
    std::vector<bool> out;
    const std::size_t n = base.polytope.dimension;
    for (const auto& tr : base.trades) {
        IntVec u_prev, u_next;
        if (n == 2) {
            auto c = corner_directions(base.polytope.polygon, tr.request.vertex);
            u_prev = c.u_prev;
            u_next = c.u_next;
        } else {
            const IntMat Ainv = inverse_unimodular(tr.chart.A);
            u_next = Ainv.col(0);
            u_prev = Ainv.col(1);
        }
        const IntMat tangent = tr.monodromy.transpose();
        out.push_back(tangent * (-u_prev) == u_next && tangent * tr.eigen_direction == tr.eigen_direction &&
                      is_unimodular(tr.monodromy));
    }
    return out;
}

/// True iff x lies strictly inside every facet.
inline bool strictly_interior(const MomentPolytope& poly, const RatVec& x) {
    for (const auto& h : poly.inequalities)
        if (detail::eval(h, x) <= 0) return false;
    return true;
}

inline bool on_singular_locus(const PlacedTrade& tr, const RatVec& x) {
    RatVec y = tr.chart.to_model(x);
    return y[0] == tr.request.t && y[1] == tr.request.t;
}

inline bool on_eigenlocus(const PlacedTrade& tr, const RatVec& x) {
    return dot(to_rational(tr.covector), x) == dot(to_rational(tr.covector), tr.chart.p);
}

struct Basepoint {
    RatVec q;
    SolutionSet solutions;  // every point on all eigenloci
};

/// Point on every eigenline or eigenhyperplane, strictly interior and off
/// the singular loci.  For a positive-dimensional solution set the candidates
/// are particular + sum a_i basis_i over integer a, ordered by |a|_1 then a.
inline Basepoint common_basepoint(const AlmostToricBase& base, std::size_t candidate_cap = 200000) {
    const std::size_t n = base.polytope.dimension;
    const auto& trs = base.trades;
    auto system = [&](const std::vector<std::size_t>& idx) {
        RatMat A(idx.size(), n);
        RatVec b(idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r) {
            for (std::size_t c = 0; c < n; ++c) A(r, c) = Rat(trs[idx[r]].covector[c]);
            b[r] = dot(to_rational(trs[idx[r]].covector), trs[idx[r]].chart.p);
        }
        return solve_rational(A, b);
    };
    std::vector<std::size_t> all(trs.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    SolutionSet sol = system(all);
    if (!sol.feasible()) {
        for (std::size_t i = 0; i < trs.size(); ++i)
            for (std::size_t j = i + 1; j < trs.size(); ++j)
                if (!system({i, j}).feasible())
                    throw InfeasibleError("no common basepoint: eigenloci of trades " + detail::pair_text(i, j) +
                                          " are disjoint");
        throw InfeasibleError("no common basepoint: the eigenloci have no common point");
    }
    auto acceptable = [&](const RatVec& x) {
        if (!strictly_interior(base.polytope, x)) return false;
        for (const auto& tr : trs)
            if (on_singular_locus(tr, x)) return false;
        return true;
    };
    if (sol.basis.empty()) {
        if (!acceptable(sol.point))
            throw InfeasibleError("no common basepoint: the eigenloci meet outside the interior or on a singularity");
        return {sol.point, sol};
    }
    const std::size_t k = sol.basis.size();
    std::size_t tried = 0;
    for (long norm = 0;; ++norm) {
        // All integer vectors with |a|_1 = norm, in lexicographic order.
        std::vector<std::vector<long>> layer;
        std::vector<long> a(k, 0);
        auto rec = [&](auto&& self, std::size_t pos, long remaining) -> void {
            if (pos + 1 == k) {
                if (remaining == 0) {
                    a[pos] = 0;
                    layer.push_back(a);
                } else {
                    a[pos] = -remaining;
                    layer.push_back(a);
                    a[pos] = remaining;
                    layer.push_back(a);
                }
                return;
            }
            for (long v = -remaining; v <= remaining; ++v) {
                a[pos] = v;
                self(self, pos + 1, remaining - (v < 0 ? -v : v));
            }
        };
        rec(rec, 0, norm);
        for (const auto& coeffs : layer) {
            if (++tried > candidate_cap)
                throw InfeasibleError("no common basepoint found within the candidate budget");
            RatVec x = sol.point;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t c = 0; c < n; ++c) x[c] += Rat(coeffs[i]) * sol.basis[i][c];
            if (acceptable(x)) return {x, sol};
        }
    }
}

/// One handle per trade: character along the eigen direction, pointing from
/// q toward the singular locus, and the eigenhyperplane normal as cocharacter.
inline Skeleton skeleton_from_base(const AlmostToricBase& base, const RatVec& q) {
    if (q.size() != base.polytope.dimension) throw ValidationError("basepoint dimension differs from the base");
    Skeleton sk;
    sk.n = base.polytope.dimension;
    for (std::size_t i = 0; i < base.trades.size(); ++i) {
        const PlacedTrade& tr = base.trades[i];
        if (!on_eigenlocus(tr, q))
            throw ValidationError("basepoint is not on the eigenlocus of trade " + std::to_string(i + 1));
        const Rat s = tr.chart.to_model(q)[0];
        if (s == tr.request.t) throw ValidationError("basepoint lies on the singular locus of trade " + std::to_string(i + 1));
        IntVec psi = s > tr.request.t ? IntVec(-tr.eigen_direction) : tr.eigen_direction;
        sk.handles.push_back({psi, primitive_part(tr.covector), 1});
    }
    sk.validate();
    return sk;
}

/// The A-side integral affine base of a 2D almost toric base.
inline IntegralAffineBase2D to_affine_base(const AlmostToricBase& base) {
    if (base.polytope.dimension != 2) throw ValidationError("affine base export needs a 2-dimensional base");
    IntegralAffineBase2D out;
    out.convention = Convention::Cocharacter;
    for (const auto& tr : base.trades)
        out.singularities.push_back({tr.singular_point, tr.eigen_direction, tr.monodromy, tr.cut_origin, tr.cut_direction});
    return out;
}

struct InteractionReport {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // 0-based trade indices
};

namespace detail {

// Feasibility of {a_r . x >= b_r} by Fourier-Motzkin elimination.
inline bool fm_feasible(std::vector<std::pair<RatVec, Rat>> rows, std::size_t n) {
    for (std::size_t var = 0; var < n; ++var) {
        std::vector<std::pair<RatVec, Rat>> pos, neg, next;
        for (auto& r : rows) {
            if (r.first[var] > 0)
                pos.push_back(r);
            else if (r.first[var] < 0)
                neg.push_back(r);
            else
                next.push_back(r);
        }
        for (const auto& p : pos)
            for (const auto& q : neg) {
                const Rat cp = p.first[var], cq = -q.first[var];
                RatVec a(n);
                for (std::size_t c = 0; c < n; ++c) a[c] = cq * p.first[c] + cp * q.first[c];
                next.push_back({a, cq * p.second + cp * q.second});
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rows = std::move(next);
    }
    for (const auto& r : rows)
        if (r.second > 0) return false;
    return true;
}

} // namespace detail

/// Pairs of trade faces whose closures meet inside the polytope.
inline InteractionReport detect_interactions(const AlmostToricBase& base) {
    InteractionReport rep;
    const std::size_t n = base.polytope.dimension;
    if (n == 2) return rep;
    const auto& q = base.polytope.inequalities;
    std::vector<std::pair<RatVec, Rat>> polytope_rows;
    for (const auto& h : q) polytope_rows.push_back({to_rational(h.normal), h.offset});
    auto add_equal = [&](std::vector<std::pair<RatVec, Rat>>& rows, std::size_t f) {
        RatVec neg = to_rational(-q[f].normal);
        rows.push_back({neg, -q[f].offset});
    };
    for (std::size_t i = 0; i < base.trades.size(); ++i)
        for (std::size_t j = i + 1; j < base.trades.size(); ++j) {
            auto rows = polytope_rows;
            for (std::size_t f : {base.trades[i].request.face.first, base.trades[i].request.face.second,
                                  base.trades[j].request.face.first, base.trades[j].request.face.second})
                add_equal(rows, f);
            if (detail::fm_feasible(rows, n)) rep.pairs.emplace_back(i, j);
        }
    return rep;
}

namespace detail {

// Clip a convex polygon (doubles) by a half-plane n . x >= c.
inline std::vector<std::pair<double, double>> clip(const std::vector<std::pair<double, double>>& pts, double nx,
                                                   double ny, double c) {
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        auto [x1, y1] = pts[i];
        auto [x2, y2] = pts[(i + 1) % pts.size()];
        double f1 = nx * x1 + ny * y1 - c, f2 = nx * x2 + ny * y2 - c;
        if (f1 >= 0) out.push_back({x1, y1});
        if ((f1 >= 0) != (f2 >= 0)) {
            double s = f1 / (f1 - f2);
            out.push_back({x1 + s * (x2 - x1), y1 + s * (y2 - y1)});
        }
    }
    return out;
}

} // namespace detail

inline svg::Viewport default_viewport(const AlmostToricBase& base, const std::optional<RatVec>& q) {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    auto add = [&](const RatVec& p) {
        double x = svg::to_double(p[0]), y = svg::to_double(p[1]);
        if (first) {
            xmin = xmax = x;
            ymin = ymax = y;
            first = false;
        }
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    };
    for (const auto& v : base.polytope.polygon.vertices) add(v);
    for (const auto& tr : base.trades) add(tr.singular_point);
    if (q) add(*q);
    const double pad = base.polytope.polygon.in_ray ? 2.0 : 1.0;
    auto lo = [](double v, double p) { return std::floor(v) - p; };
    auto hi = [](double v, double p) { return std::ceil(v) + p; };
    xmin = lo(xmin, 1);
    ymin = lo(ymin, 1);
    xmax = hi(xmax, pad);
    ymax = hi(ymax, pad);
    return {xmin, xmax, ymin, ymax};
}

/// Polygon, singular points, cuts toward the corners, eigenlines, and an
/// optional skeleton projection: segments [q, singular point].
inline std::string render_svg(const AlmostToricBase& base, const std::optional<RatVec>& q, const svg::Viewport& vp) {
    if (base.polytope.dimension != 2) throw ValidationError("rendering is supported for 2-dimensional bases only");
    svg::Canvas c(vp);
    c.comment("almost toric base, " + std::to_string(base.trades.size()) + " nodal trades");
    c.grid();
    std::vector<std::pair<double, double>> region = {
        {vp.xmin, vp.ymin}, {vp.xmax, vp.ymin}, {vp.xmax, vp.ymax}, {vp.xmin, vp.ymax}};
    for (const auto& h : base.polytope.inequalities)
        region = detail::clip(region, svg::to_double(h.normal[0]), svg::to_double(h.normal[1]), svg::to_double(h.offset));
    if (region.size() >= 3) c.polygon(region, "fill:#f2f2f2;stroke:none");

    const Polygon2D& poly = base.polytope.polygon;
    const std::string edge = "stroke:#000000;stroke-width:2";
    auto dx = [](const auto& v, std::size_t i) { return svg::to_double(v[i]); };
    if (poly.in_ray) c.ray(dx(poly.vertices[0], 0), dx(poly.vertices[0], 1), dx(*poly.in_ray, 0), dx(*poly.in_ray, 1), edge);
    const std::size_t m = poly.vertices.size();
    const std::size_t edges = poly.in_ray ? m - 1 : m;
    for (std::size_t i = 0; i < edges; ++i)
        c.line(dx(poly.vertices[i], 0), dx(poly.vertices[i], 1), dx(poly.vertices[(i + 1) % m], 0),
               dx(poly.vertices[(i + 1) % m], 1), edge);
    if (poly.out_ray)
        c.ray(dx(poly.vertices[m - 1], 0), dx(poly.vertices[m - 1], 1), dx(*poly.out_ray, 0), dx(*poly.out_ray, 1), edge);

    for (const auto& tr : base.trades) {
        const double sx = dx(tr.singular_point, 0), sy = dx(tr.singular_point, 1);
        c.ray(sx, sy, dx(tr.eigen_direction, 0), dx(tr.eigen_direction, 1), "stroke:#999999;stroke-width:1;stroke-dasharray:2,3");
        c.line(sx, sy, dx(tr.chart.p, 0), dx(tr.chart.p, 1), "stroke:#000000;stroke-width:1.5;stroke-dasharray:6,4");
    }
    if (q) {
        for (const auto& tr : base.trades)
            c.line(dx(*q, 0), dx(*q, 1), dx(tr.singular_point, 0), dx(tr.singular_point, 1), "stroke:#1f4fd1;stroke-width:2.5");
        c.circle(dx(*q, 0), dx(*q, 1), 3.5, "fill:#1f4fd1");
    }
    for (const auto& tr : base.trades) c.cross(dx(tr.singular_point, 0), dx(tr.singular_point, 1), 5, "#cc0000");
    return c.str();
}

inline std::string render_svg(const AlmostToricBase& base, const std::optional<RatVec>& q = std::nullopt) {
    return render_svg(base, q, default_viewport(base, q));
}

} // namespace clustermirror
