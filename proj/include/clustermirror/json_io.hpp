#pragma once

// JSON (de)serialization.  Integers are JSON numbers when they fit in 64
// bits and decimal strings otherwise; rationals are numbers or "p/q"
// strings.  Indices are 1-based in every document.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "almost_toric.hpp"
#include "local_system.hpp"
#include "syz_base.hpp"

namespace clustermirror::io {

using json = nlohmann::ordered_json;

inline json parse_text(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(source + ": malformed JSON: " + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json read_json(const std::string& path) { return parse_text(read_file(path), path); }

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError(path + ": cannot write file");
    out << text;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Scalars

inline const json& field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw ValidationError("field '" + path + "': expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError("field '" + path + "." + key + "': missing");
    return *it;
}

inline Int parse_int(const json& j, const std::string& path) {
    if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<std::uint64_t>()) : Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) return Int(s);
    }
    throw ValidationError("field '" + path + "': expected an integer");
}

inline Rat parse_rat(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rat(parse_int(j, path));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(parse_int(j, path));
        Int num = parse_int(json(s.substr(0, slash)), path);
        Int den = parse_int(json(s.substr(slash + 1)), path);
        if (den == 0) throw ValidationError("field '" + path + "': zero denominator");
        return Rat(num, den);
    }
    throw ValidationError("field '" + path + "': expected an integer or a \"p/q\" rational");
}

inline std::size_t parse_index(const json& j, const std::string& path) {
    Int v = parse_int(j, path);
    if (v < 1 || v > 1000000) throw ValidationError("field '" + path + "': expected a positive index");
    return static_cast<std::size_t>(v) - 1;
}

inline json to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

inline json to_json(const Rat& v) {
    if (denominator(v) == 1) return to_json(Int(numerator(v)));
    return json(numerator(v).str() + "/" + denominator(v).str());
}

inline json to_json(const IntVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline json to_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline json to_json(const IntMat& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

inline json to_json(const RatMat& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

inline const json& expect_array(const json& j, const std::string& path) {
    if (!j.is_array()) throw ValidationError("field '" + path + "': expected an array");
    return j;
}

inline IntVec parse_int_vec(const json& j, const std::string& path) {
    IntVec out;
    for (std::size_t i = 0; i < expect_array(j, path).size(); ++i)
        out.push_back(parse_int(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline RatVec parse_rat_vec(const json& j, const std::string& path) {
    RatVec out;
    for (std::size_t i = 0; i < expect_array(j, path).size(); ++i)
        out.push_back(parse_rat(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline IntMat parse_int_mat(const json& j, const std::string& path) {
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < expect_array(j, path).size(); ++i)
        rows.push_back(parse_int_vec(j[i], path + "[" + std::to_string(i) + "]"));
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw ValidationError("field '" + path + "': ragged matrix");
    return IntMat::from_rows(rows, cols);
}

inline RatMat parse_rat_mat(const json& j, const std::string& path) {
    std::vector<RatVec> rows;
    for (std::size_t i = 0; i < expect_array(j, path).size(); ++i)
        rows.push_back(parse_rat_vec(j[i], path + "[" + std::to_string(i) + "]"));
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw ValidationError("field '" + path + "': ragged matrix");
    return RatMat::from_rows(rows, cols);
}

inline std::size_t parse_size(const json& j, const std::string& path) {
    Int v = parse_int(j, path);
    if (v < 0 || v > 1000000) throw ValidationError("field '" + path + "': expected a non-negative count");
    return static_cast<std::size_t>(v);
}

// ---------------------------------------------------------------------------
// Seeds and graphs

inline json to_json(const Seed& s) {
    json j;
    j["rank"] = s.n;
    j["unfrozen"] = s.r;
    json psi = json::array();
    for (const auto& v : s.psi) psi.push_back(to_json(v));
    j["psi"] = psi;
    j["B"] = to_json(s.B);
    j["d"] = to_json(IntVec(s.d.begin(), s.d.end()));
    return j;
}

inline Seed seed_from_json(const json& j) {
    Seed s;
    s.n = parse_size(field(j, "rank", "seed"), "seed.rank");
    s.r = parse_size(field(j, "unfrozen", "seed"), "seed.unfrozen");
    const json& psi = expect_array(field(j, "psi", "seed"), "seed.psi");
    for (std::size_t i = 0; i < psi.size(); ++i) s.psi.push_back(parse_int_vec(psi[i], "seed.psi[" + std::to_string(i) + "]"));
    s.B = parse_int_mat(field(j, "B", "seed"), "seed.B");
    if (j.contains("d")) {
        IntVec d = parse_int_vec(j["d"], "seed.d");
        s.d.assign(d.begin(), d.end());
    } else {
        s.d.assign(s.n, Int(1));
    }
    s.validate();
    return s;
}

inline json to_json(const ExchangeGraph& g) {
    json j;
    json nodes = json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        json node;
        node["id"] = i + 1;
        node["seed"] = to_json(g.nodes[i]);
        nodes.push_back(node);
    }
    json edges = json::array();
    for (const auto& e : g.edges) {
        json edge;
        edge["source"] = e.source + 1;
        edge["target"] = e.target + 1;
        edge["index"] = e.index + 1;
        edges.push_back(edge);
    }
    j["nodes"] = nodes;
    j["edges"] = edges;
    j["truncated"] = g.truncated;
    return j;
}

// ---------------------------------------------------------------------------
// Toric models

inline json to_json(const StackyFan1D& fan) {
    json rays = json::array();
    for (const auto& r : fan.rays) {
        json ray;
        ray["psi"] = to_json(r.psi);
        ray["d"] = to_json(r.d);
        rays.push_back(ray);
    }
    json j;
    j["rank"] = fan.n;
    j["rays"] = rays;
    return j;
}

inline json to_json(const LocalPresentation& p) {
    json j;
    j["index"] = p.index + 1;
    j["vars"] = json::array({p.x, p.x_prime, p.monomial});
    j["chi"] = to_json(p.chi);
    j["relation"] = p.relation;
    j["degenerate"] = p.degenerate;
    j["basic_model"] = p.basic_model;
    return j;
}

inline json to_json(const ToricModel& m) {
    json j;
    j["fan"] = to_json(m.fan);
    json chi = json::array();
    for (const auto& c : m.chi) chi.push_back(to_json(c));
    j["chi"] = chi;
    j["loci"] = m.loci;
    json pres = json::array();
    for (const auto& p : m.presentations) pres.push_back(to_json(p));
    j["presentations"] = pres;
    return j;
}

inline json to_json(const MutationReport& r) {
    json j;
    j["index"] = r.k + 1;
    j["before"] = to_json(r.before);
    j["after"] = to_json(r.after);
    j["ray_before"] = to_json(r.ray_before);
    j["ray_after"] = to_json(r.ray_after);
    j["moved_locus"] = r.moved_locus;
    return j;
}

// ---------------------------------------------------------------------------
// Skeleta

inline json to_json(const Skeleton& sk) {
    json j;
    j["rank"] = sk.n;
    json hs = json::array();
    for (const auto& h : sk.handles) {
        json hj;
        hj["psi"] = to_json(h.psi);
        hj["chi"] = to_json(h.chi);
        hj["d"] = to_json(h.d);
        hs.push_back(hj);
    }
    j["handles"] = hs;
    return j;
}

inline Skeleton skeleton_from_json(const json& j) {
    Skeleton sk;
    sk.n = parse_size(field(j, "rank", "skeleton"), "skeleton.rank");
    const json& hs = expect_array(field(j, "handles", "skeleton"), "skeleton.handles");
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const std::string p = "skeleton.handles[" + std::to_string(i) + "]";
        Handle h;
        h.psi = parse_int_vec(field(hs[i], "psi", p), p + ".psi");
        h.chi = parse_int_vec(field(hs[i], "chi", p), p + ".chi");
        h.d = hs[i].contains("d") ? parse_int(hs[i]["d"], p + ".d") : Int(1);
        sk.handles.push_back(h);
    }
    sk.validate();
    return sk;
}

inline json to_json(const std::vector<BondalStratum>& strata) {
    json a = json::array();
    for (const auto& s : strata) {
        json j;
        json cone = json::array();
        for (auto i : s.cone) cone.push_back(i + 1);
        j["cone"] = cone;
        j["torus_dim"] = s.torus_dim;
        j["components"] = to_json(s.components);
        a.push_back(j);
    }
    return a;
}

// ---------------------------------------------------------------------------
// Local systems

inline json to_json(const LocalSystem& ls) {
    json j;
    j["rank"] = ls.rank;
    json hs = json::array();
    for (const auto& h : ls.holonomies) hs.push_back(to_json(h));
    j["holonomies"] = hs;
    return j;
}

inline LocalSystem local_system_from_json(const json& j) {
    LocalSystem ls;
    ls.rank = parse_size(field(j, "rank", "local_system"), "local_system.rank");
    const json& hs = expect_array(field(j, "holonomies", "local_system"), "local_system.holonomies");
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const std::string p = "local_system.holonomies[" + std::to_string(i) + "]";
        // Rank-1 holonomies may be given as bare scalars.
        if (!hs[i].is_array())
            ls.holonomies.push_back(RatMat(1, 1, parse_rat(hs[i], p)));
        else
            ls.holonomies.push_back(parse_rat_mat(hs[i], p));
    }
    ls.validate();
    return ls;
}

// ---------------------------------------------------------------------------
// SYZ bases

inline json to_json(const IntegralAffineBase2D& base) {
    json j;
    j["convention"] = to_string(base.convention);
    json ss = json::array();
    for (const auto& s : base.singularities) {
        json sj;
        sj["position"] = to_json(s.position);
        sj["direction"] = to_json(s.direction);
        sj["monodromy"] = to_json(s.monodromy);
        sj["cut"] = {{"origin", to_json(s.cut_origin)}, {"direction", to_json(s.cut_direction)}};
        ss.push_back(sj);
    }
    j["singularities"] = ss;
    json rays = json::array();
    for (const auto& r : base.fan_rays) rays.push_back(to_json(r));
    j["fan_rays"] = rays;
    return j;
}

inline IntegralAffineBase2D affine_base_from_json(const json& j) {
    IntegralAffineBase2D base;
    base.convention = j.contains("convention") ? parse_convention(j["convention"].get<std::string>())
                                               : Convention::Character;
    const json& ss = expect_array(field(j, "singularities", "base"), "base.singularities");
    for (std::size_t i = 0; i < ss.size(); ++i) {
        const std::string p = "base.singularities[" + std::to_string(i) + "]";
        AffineSingularity2D s;
        s.position = parse_rat_vec(field(ss[i], "position", p), p + ".position");
        s.direction = parse_int_vec(field(ss[i], "direction", p), p + ".direction");
        s.monodromy = parse_int_mat(field(ss[i], "monodromy", p), p + ".monodromy");
        if (ss[i].contains("cut")) {
            s.cut_origin = parse_rat_vec(field(ss[i]["cut"], "origin", p + ".cut"), p + ".cut.origin");
            s.cut_direction = parse_int_vec(field(ss[i]["cut"], "direction", p + ".cut"), p + ".cut.direction");
        } else {
            s.cut_origin = s.position;
            s.cut_direction = s.direction;
        }
        if (s.position.size() != 2 || s.direction.size() != 2 || s.monodromy.rows() != 2 || s.monodromy.cols() != 2)
            throw ValidationError("field '" + p + "': expected 2-dimensional data");
        base.singularities.push_back(s);
    }
    if (j.contains("fan_rays"))
        for (std::size_t i = 0; i < j["fan_rays"].size(); ++i)
            base.fan_rays.push_back(parse_int_vec(j["fan_rays"][i], "base.fan_rays[" + std::to_string(i) + "]"));
    return base;
}

// ---------------------------------------------------------------------------
// Polytopes, trades and almost toric bases

inline MomentPolytope polytope_from_json(const json& j) {
    const std::size_t n = parse_size(field(j, "dimension", "polytope"), "polytope.dimension");
    if (n == 2 && j.contains("vertices")) {
        Polygon2D poly;
        const json& vs = expect_array(j["vertices"], "polytope.vertices");
        for (std::size_t i = 0; i < vs.size(); ++i)
            poly.vertices.push_back(parse_rat_vec(vs[i], "polytope.vertices[" + std::to_string(i) + "]"));
        if (j.contains("in_ray")) poly.in_ray = parse_int_vec(j["in_ray"], "polytope.in_ray");
        if (j.contains("out_ray")) poly.out_ray = parse_int_vec(j["out_ray"], "polytope.out_ray");
        return make_polygon(poly);
    }
    if (n == 2) throw ValidationError("field 'polytope.vertices': 2-dimensional polytopes are given by vertices");
    std::vector<HalfSpace> ineqs;
    const json& qs = expect_array(field(j, "inequalities", "polytope"), "polytope.inequalities");
    for (std::size_t i = 0; i < qs.size(); ++i) {
        const std::string p = "polytope.inequalities[" + std::to_string(i) + "]";
        ineqs.push_back({parse_int_vec(field(qs[i], "normal", p), p + ".normal"),
                         parse_rat(field(qs[i], "offset", p), p + ".offset")});
    }
    return make_polytope(n, ineqs);
}

inline json to_json(const MomentPolytope& poly) {
    json j;
    j["dimension"] = poly.dimension;
    if (poly.dimension == 2) {
        json vs = json::array();
        for (const auto& v : poly.polygon.vertices) vs.push_back(to_json(v));
        j["vertices"] = vs;
        if (poly.polygon.in_ray) j["in_ray"] = to_json(*poly.polygon.in_ray);
        if (poly.polygon.out_ray) j["out_ray"] = to_json(*poly.polygon.out_ray);
    } else {
        json qs = json::array();
        for (const auto& h : poly.inequalities) qs.push_back({{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}});
        j["inequalities"] = qs;
    }
    return j;
}

inline std::vector<NodalTrade> trades_from_json(const json& j, std::size_t dimension) {
    std::vector<NodalTrade> out;
    const json& ts = expect_array(field(j, "trades", "trades"), "trades.trades");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const std::string p = "trades[" + std::to_string(i) + "]";
        NodalTrade t;
        if (dimension == 2) {
            t.vertex = parse_index(field(ts[i], "vertex", p), p + ".vertex");
        } else {
            const json& f = expect_array(field(ts[i], "face", p), p + ".face");
            if (f.size() != 2) throw ValidationError("field '" + p + ".face': expected two facet indices");
            t.face = {parse_index(f[0], p + ".face[0]"), parse_index(f[1], p + ".face[1]")};
        }
        if (ts[i].contains("t")) t.t = parse_rat(ts[i]["t"], p + ".t");
        if (ts[i].contains("chart")) {
            const json& c = ts[i]["chart"];
            t.chart = Chart{parse_int_mat(field(c, "A", p + ".chart"), p + ".chart.A"),
                            parse_rat_vec(field(c, "p", p + ".chart"), p + ".chart.p")};
        }
        out.push_back(t);
    }
    return out;
}

inline json to_json(const AlmostToricBase& base) {
    json j;
    j["polytope"] = to_json(base.polytope);
    json ts = json::array();
    for (const auto& tr : base.trades) {
        json t;
        if (base.polytope.dimension == 2)
            t["vertex"] = tr.request.vertex + 1;
        else
            t["face"] = json::array({tr.request.face.first + 1, tr.request.face.second + 1});
        t["t"] = to_json(tr.request.t);
        t["chart"] = {{"A", to_json(tr.chart.A)}, {"p", to_json(tr.chart.p)}};
        t["singular_point"] = to_json(tr.singular_point);
        t["eigen_direction"] = to_json(tr.eigen_direction);
        t["eigen_covector"] = to_json(tr.covector);
        t["monodromy"] = to_json(tr.monodromy);
        t["cut"] = {{"origin", to_json(tr.cut_origin)}, {"direction", to_json(tr.cut_direction)}};
        ts.push_back(t);
    }
    j["trades"] = ts;
    return j;
}

} // namespace clustermirror::io
