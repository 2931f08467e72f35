#include "nullspace/render.hpp"

#include <cstdio>
#include <optional>
#include <sstream>

namespace nullspace {

namespace {

constexpr double canvas_w = 640.0;
constexpr double canvas_h = 420.0;
constexpr double margin = 48.0;

double to_double(const Rational& q) {
    return q.numerator().convert_to<double>() / q.denominator().convert_to<double>();
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape_xml(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

/// Finite m-range of the region's breakpoints, padded so every finite edge
/// sits strictly inside the picture.
void m_window(const Region& a, Rational& lo, Rational& hi) {
    std::optional<Rational> min_m;
    std::optional<Rational> max_m;
    const auto see = [&](const Bound& b) {
        if (!b.v.is_finite()) {
            return;
        }
        const Rational& v = b.v.value();
        if (!min_m || v < *min_m) min_m = v;
        if (!max_m || v > *max_m) max_m = v;
    };
    for (const Band& band : a.bands()) {
        see(band.m.lo);
        see(band.m.hi);
    }
    if (!min_m) {
        lo = Rational(-5);
        hi = Rational(5);
        return;
    }
    Rational pad = half(half(*max_m - *min_m));
    if (pad < Rational(1)) {
        pad = Rational(1);
    }
    lo = *min_m - pad;
    hi = *max_m + pad;
}

struct Mapper {
    double m_lo, m_hi, r_hi;

    double x(double m) const { return margin + (m - m_lo) / (m_hi - m_lo) * (canvas_w - 2 * margin); }
    double y(double r) const { return canvas_h - margin - r / r_hi * (canvas_h - 2 * margin); }
};

void stroke_line(std::ostringstream& out, double x1, double y1, double x2, double y2, bool closed) {
    out << "  <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
        << "\" y2=\"" << fmt(y2) << "\" stroke=\"#1f4e79\" stroke-width=\"1.5\"";
    if (!closed) {
        out << " stroke-dasharray=\"6 4\"";
    }
    out << "/>\n";
}

}  // namespace

std::string render_svg(const Region& a, const Rational& r_max) {
    if (!r_max.is_positive()) {
        throw DomainError("render: r-max must be positive");
    }
    Rational m_lo_q, m_hi_q;
    m_window(a, m_lo_q, m_hi_q);
    const Mapper map{to_double(m_lo_q), to_double(m_hi_q), to_double(r_max)};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(canvas_w)
        << "\" height=\"" << fmt(canvas_h) << "\" viewBox=\"0 0 " << fmt(canvas_w) << " "
        << fmt(canvas_h) << "\">\n";
    out << "  <desc>" << escape_xml(a.str()) << "</desc>\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << fmt(canvas_w) << "\" height=\"" << fmt(canvas_h)
        << "\" fill=\"#ffffff\"/>\n";

    // Axes: the r = 0 baseline and, when visible, the null-set column m = 0.
    out << "  <line x1=\"" << fmt(margin) << "\" y1=\"" << fmt(map.y(0)) << "\" x2=\""
        << fmt(canvas_w - margin) << "\" y2=\"" << fmt(map.y(0))
        << "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    if (m_lo_q <= Rational(0) && Rational(0) <= m_hi_q) {
        out << "  <line x1=\"" << fmt(map.x(0)) << "\" y1=\"" << fmt(margin) << "\" x2=\""
            << fmt(map.x(0)) << "\" y2=\"" << fmt(map.y(0))
            << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    }
    out << "  <text x=\"" << fmt(canvas_w - margin + 8) << "\" y=\"" << fmt(map.y(0) + 4)
        << "\" font-size=\"13\" fill=\"#444444\">m</text>\n";
    out << "  <text x=\"" << fmt(margin - 16) << "\" y=\"" << fmt(margin - 8)
        << "\" font-size=\"13\" fill=\"#444444\">r</text>\n";
    out << "  <text x=\"" << fmt(margin) << "\" y=\"" << fmt(canvas_h - margin + 16)
        << "\" font-size=\"11\" fill=\"#888888\">" << m_lo_q.str() << "</text>\n";
    out << "  <text x=\"" << fmt(canvas_w - margin) << "\" y=\"" << fmt(canvas_h - margin + 16)
        << "\" font-size=\"11\" fill=\"#888888\">" << m_hi_q.str() << "</text>\n";
    out << "  <text x=\"" << fmt(margin - 40) << "\" y=\"" << fmt(margin + 4)
        << "\" font-size=\"11\" fill=\"#888888\">" << r_max.str() << "</text>\n";

    for (const Box& box : a.to_boxes()) {
        // Display-only clipping against the window; bounds beyond it (or
        // infinite) become silent picture edges with no stroke.
        if (box.r.lo.v.is_finite() && box.r.lo.v.value() > r_max) {
            continue;
        }
        const bool left_vis = box.m.lo.v.is_finite();
        const bool right_vis = box.m.hi.v.is_finite();
        const bool top_vis = box.r.hi.v.is_finite() && box.r.hi.v.value() <= r_max;
        const Rational m_lo = left_vis ? box.m.lo.v.value() : m_lo_q;
        const Rational m_hi = right_vis ? box.m.hi.v.value() : m_hi_q;
        const Rational r_lo = box.r.lo.v.value();
        const Rational r_hi = top_vis ? box.r.hi.v.value() : r_max;

        const double x1 = map.x(to_double(m_lo));
        const double x2 = map.x(to_double(m_hi));
        const double y_top = map.y(to_double(r_hi));
        const double y_bot = map.y(to_double(r_lo));

        if (m_lo == m_hi && r_lo == r_hi) {
            out << "  <circle cx=\"" << fmt(x1) << "\" cy=\"" << fmt(y_bot)
                << "\" r=\"3\" fill=\"#1f4e79\"/>\n";
            continue;
        }
        if (x2 > x1 && y_bot > y_top) {
            out << "  <rect x=\"" << fmt(x1) << "\" y=\"" << fmt(y_top) << "\" width=\""
                << fmt(x2 - x1) << "\" height=\"" << fmt(y_bot - y_top)
                << "\" fill=\"#4682b4\" fill-opacity=\"0.35\"/>\n";
        }
        if (left_vis) {
            stroke_line(out, x1, y_bot, x1, y_top, box.m.lo.closed);
        }
        if (right_vis) {
            stroke_line(out, x2, y_bot, x2, y_top, box.m.hi.closed);
        }
        stroke_line(out, x1, y_bot, x2, y_bot, box.r.lo.closed);
        if (top_vis) {
            stroke_line(out, x1, y_top, x2, y_top, box.r.hi.closed);
        }
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace nullspace
