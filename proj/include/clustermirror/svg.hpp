#pragma once

// Minimal deterministic SVG 1.1 writer.  Coordinates are given in the
// mathematical plane (y up) and mapped into pixels with a fixed scale.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"

namespace clustermirror::svg {

struct Viewport {
    double xmin = -3, xmax = 3, ymin = -3, ymax = 3;
};

inline double to_double(const Rat& r) { return static_cast<double>(r); }
inline double to_double(const Int& i) { return static_cast<double>(i); }

inline std::string num(double v) {
    if (std::fabs(v) < 5e-4) v = 0;  // avoid "-0.000"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

/// End point of the ray origin + s*dir (s >= 0) where it leaves the viewport.
inline std::pair<double, double> clip_ray(double ox, double oy, double dx, double dy, const Viewport& vp) {
    double s = std::numeric_limits<double>::infinity();
    if (dx > 0) s = std::min(s, (vp.xmax - ox) / dx);
    if (dx < 0) s = std::min(s, (vp.xmin - ox) / dx);
    if (dy > 0) s = std::min(s, (vp.ymax - oy) / dy);
    if (dy < 0) s = std::min(s, (vp.ymin - oy) / dy);
    if (!std::isfinite(s) || s < 0) s = 0;
    return {ox + s * dx, oy + s * dy};
}

class Canvas {
public:
    explicit Canvas(Viewport vp, double scale = 40.0, double margin = 10.0)
        : vp_(vp), scale_(scale), margin_(margin) {}

    double px(double x) const { return margin_ + (x - vp_.xmin) * scale_; }
    double py(double y) const { return margin_ + (vp_.ymax - y) * scale_; }
    const Viewport& viewport() const { return vp_; }

    void grid(const std::string& color = "#e6e6e6") {
        for (long x = static_cast<long>(std::ceil(vp_.xmin)); x <= static_cast<long>(std::floor(vp_.xmax)); ++x)
            line(x, vp_.ymin, x, vp_.ymax, "stroke:" + color + ";stroke-width:1");
        for (long y = static_cast<long>(std::ceil(vp_.ymin)); y <= static_cast<long>(std::floor(vp_.ymax)); ++y)
            line(vp_.xmin, y, vp_.xmax, y, "stroke:" + color + ";stroke-width:1");
    }

    void line(double x1, double y1, double x2, double y2, const std::string& style) {
        body_ += "  <line x1=\"" + num(px(x1)) + "\" y1=\"" + num(py(y1)) + "\" x2=\"" + num(px(x2)) +
                 "\" y2=\"" + num(py(y2)) + "\" style=\"" + style + "\"/>\n";
    }

    void ray(double ox, double oy, double dx, double dy, const std::string& style) {
        auto [ex, ey] = clip_ray(ox, oy, dx, dy, vp_);
        line(ox, oy, ex, ey, style);
    }

    void circle(double x, double y, double r_px, const std::string& style) {
        body_ += "  <circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) + "\" r=\"" + num(r_px) +
                 "\" style=\"" + style + "\"/>\n";
    }

    void cross(double x, double y, double r_px, const std::string& color) {
        const double cx = px(x), cy = py(y);
        const std::string style = "stroke:" + color + ";stroke-width:2.5";
        body_ += "  <line x1=\"" + num(cx - r_px) + "\" y1=\"" + num(cy - r_px) + "\" x2=\"" + num(cx + r_px) +
                 "\" y2=\"" + num(cy + r_px) + "\" style=\"" + style + "\"/>\n";
        body_ += "  <line x1=\"" + num(cx - r_px) + "\" y1=\"" + num(cy + r_px) + "\" x2=\"" + num(cx + r_px) +
                 "\" y2=\"" + num(cy - r_px) + "\" style=\"" + style + "\"/>\n";
    }

    void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& style) {
        std::string p;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) p += " ";
            p += num(px(pts[i].first)) + "," + num(py(pts[i].second));
        }
        body_ += "  <polygon points=\"" + p + "\" style=\"" + style + "\"/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& style) {
        std::string p;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) p += " ";
            p += num(px(pts[i].first)) + "," + num(py(pts[i].second));
        }
        body_ += "  <polyline points=\"" + p + "\" style=\"" + style + "\"/>\n";
    }

    void comment(const std::string& text) { body_ += "  <!-- " + text + " -->\n"; }

    std::string str() const {
        const double w = 2 * margin_ + (vp_.xmax - vp_.xmin) * scale_;
        const double h = 2 * margin_ + (vp_.ymax - vp_.ymin) * scale_;
        std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(w) + "\" height=\"" +
               num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";
        out += "  <rect x=\"0\" y=\"0\" width=\"" + num(w) + "\" height=\"" + num(h) + "\" style=\"fill:#ffffff\"/>\n";
        out += body_;
        out += "</svg>\n";
        return out;
    }

private:
    Viewport vp_;
    double scale_;
    double margin_;
    std::string body_;
};

} // namespace clustermirror::svg
