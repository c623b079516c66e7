#include "hagge/figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace hagge {

namespace {

std::string fmt(double v) {
    char buf[40];
    if (std::abs(v) < 5e-4) v = 0;  // avoid "-0.000"
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

struct Stroke {
    const char* colour;
    const char* dash;  // empty: solid
};

// Twelve distinguishable styles, cycled over the drawn circles.
constexpr Stroke kStrokes[12] = {
    {"#555555", ""},      {"#1f77b4", ""},      {"#d62728", ""},
    {"#2ca02c", ""},      {"#9467bd", ""},      {"#ff7f0e", ""},
    {"#17becf", "6 3"},   {"#8c564b", "6 3"},   {"#e377c2", "6 3"},
    {"#bcbd22", "2 2"},   {"#7f7f7f", "2 2"},   {"#000000", "8 3 2 3"},
};

struct CircleGeom {
    XY centre;
    double radius = 0;
    bool degenerate = false;  // embedded points collinear
    XY p0, p1;                // a chord to draw when degenerate
    double max_residual = 0;
};

CircleGeom fit_circle(const XY& p, const XY& q, const XY& r) {
    CircleGeom g;
    double ax = q.x - p.x, ay = q.y - p.y;
    double bx = r.x - p.x, by = r.y - p.y;
    double det = 2.0 * (ax * by - ay * bx);
    double scale = std::max({std::abs(ax), std::abs(ay), std::abs(bx), std::abs(by), 1.0});
    if (std::abs(det) < 1e-12 * scale * scale) {
        g.degenerate = true;
        g.p0 = p;
        g.p1 = r;
        return g;
    }
    double a2 = ax * ax + ay * ay;
    double b2 = bx * bx + by * by;
    g.centre.x = p.x + (by * a2 - ay * b2) / det;
    g.centre.y = p.y + (ax * b2 - bx * a2) / det;
    g.radius = std::hypot(p.x - g.centre.x, p.y - g.centre.y);
    for (const XY* v : {&p, &q, &r}) {
        double d = std::hypot(v->x - g.centre.x, v->y - g.centre.y);
        g.max_residual = std::max(g.max_residual, std::abs(d - g.radius));
    }
    return g;
}

}  // namespace

Embedding Embedding::from_triangle(const Triangle<Rat>& t) {
    double sa = t.sa.to_double(), sb = t.sb.to_double(), sc = t.sc.to_double();
    double a = std::sqrt(sa);
    Embedding e;
    e.b = {0, 0};
    e.c = {a, 0};
    double ax = (sa + sc - sb) / (2 * a);
    double h2 = sc - ax * ax;
    if (h2 <= 0) throw DegenerateError("triangle cannot be embedded: flat");
    e.a = {ax, std::sqrt(h2)};
    return e;
}

XY areal_to_cartesian(const Embedding& e, const Point<Rat>& p) {
    Rat sum = p.x() + p.y() + p.z();
    if (sum.is_zero()) throw DegenerateError("point at infinity cannot be drawn: " + p.str());
    double x = (p.x() / sum).to_double();
    double y = (p.y() / sum).to_double();
    double z = (p.z() / sum).to_double();
    return {x * e.a.x + y * e.b.x + z * e.c.x, x * e.a.y + y * e.b.y + z * e.c.y};
}

RenderResult render(const Construction<Rat>& c, const Embedding& e, const FigureOptions& opt) {
    RenderResult out;
    const double size = opt.size;

    // Canvas transform: triangle height spans 70% of the canvas, centred.
    double min_x = std::min({e.a.x, e.b.x, e.c.x});
    double max_x = std::max({e.a.x, e.b.x, e.c.x});
    double min_y = std::min({e.a.y, e.b.y, e.c.y});
    double max_y = std::max({e.a.y, e.b.y, e.c.y});
    double height = std::max(max_y - min_y, 1e-9);
    double s = 0.7 * size / height;
    double ox = (size - s * (max_x - min_x)) / 2 - s * min_x;
    double oy = 0.15 * size + s * max_y;
    auto tx = [&](const XY& p) -> XY { return {ox + s * p.x, oy - s * p.y}; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.size
        << "\" height=\"" << opt.size << "\" viewBox=\"0 0 " << opt.size << " " << opt.size
        << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    XY A = tx(e.a), B = tx(e.b), C = tx(e.c);
    svg << "<polygon points=\"" << fmt(A.x) << "," << fmt(A.y) << " " << fmt(B.x) << ","
        << fmt(B.y) << " " << fmt(C.x) << "," << fmt(C.y)
        << "\" fill=\"none\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n";

    // Tangent triangle DEF, light, to echo the construction.
    try {
        XY D = tx(areal_to_cartesian(e, c.D));
        XY E = tx(areal_to_cartesian(e, c.E));
        XY F = tx(areal_to_cartesian(e, c.F));
        svg << "<polygon points=\"" << fmt(D.x) << "," << fmt(D.y) << " " << fmt(E.x) << ","
            << fmt(E.y) << " " << fmt(F.x) << "," << fmt(F.y)
            << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\" stroke-dasharray=\"4 4\"/>\n";
    } catch (const DegenerateError&) {
        svg << "<!-- warning: tangent triangle has a vertex at infinity; omitted -->\n";
    }

    // The nine circles: circumcircle, five Hagge circles, BHC, CHA, AHB.
    struct Named {
        const char* name;
        const Point<Rat>* p0;
        const Point<Rat>* p1;
        const Point<Rat>* p2;
        bool present;
        bool is_point;
    };
    Named circles[9] = {
        {"circumcircle", &c.A, &c.B, &c.C, true, false},
        {"hagge(P)", &c.U, &c.V, &c.W, c.hagge_g.has_value(), c.uvw_is_point},
        {"hagge(Q)", &c.Up, &c.Vp, &c.Wp, c.hagge_q.has_value(), !c.hagge_q.has_value()},
        {"hagge(P1)", &c.U, &c.V3, &c.W2, c.hagge_p1.has_value(), !c.hagge_p1.has_value()},
        {"hagge(P2)", &c.U3, &c.V, &c.W1, c.hagge_p2.has_value(), !c.hagge_p2.has_value()},
        {"hagge(P3)", &c.U2, &c.V1, &c.W, c.hagge_p3.has_value(), !c.hagge_p3.has_value()},
        {"BHC", &c.B, &c.H, &c.C, true, false},
        {"CHA", &c.C, &c.H, &c.A, true, false},
        {"AHB", &c.A, &c.H, &c.B, true, false},
    };
    int style = 0;
    for (const Named& n : circles) {
        const Stroke& st = kStrokes[style % 12];
        ++style;
        if (n.is_point) {
            XY p = tx(areal_to_cartesian(e, *n.p0));
            svg << "<!-- warning: circle " << n.name << " degenerates to the point ("
                << fmt(p.x) << ", " << fmt(p.y) << ") -->\n";
            ++out.degenerate_circles;
            continue;
        }
        if (!n.present) {
            svg << "<!-- warning: circle " << n.name << " not constructed -->\n";
            ++out.degenerate_circles;
            continue;
        }
        XY p0, p1, p2;
        try {
            p0 = areal_to_cartesian(e, *n.p0);
            p1 = areal_to_cartesian(e, *n.p1);
            p2 = areal_to_cartesian(e, *n.p2);
        } catch (const DegenerateError&) {
            svg << "<!-- warning: circle " << n.name << " has a defining point at infinity -->\n";
            ++out.degenerate_circles;
            continue;
        }
        CircleGeom g = fit_circle(p0, p1, p2);
        if (g.degenerate) {
            XY q0 = tx(g.p0), q1 = tx(g.p1);
            svg << "<!-- warning: circle " << n.name << " is degenerate; drawn as a line -->\n"
                << "<path d=\"M " << fmt(q0.x) << " " << fmt(q0.y) << " L " << fmt(q1.x) << " "
                << fmt(q1.y) << "\" stroke=\"" << st.colour << "\" fill=\"none\"/>\n";
            ++out.degenerate_circles;
            continue;
        }
        out.max_residual = std::max(out.max_residual, g.max_residual);
        XY ctr = tx(g.centre);
        svg << "<circle cx=\"" << fmt(ctr.x) << "\" cy=\"" << fmt(ctr.y) << "\" r=\""
            << fmt(s * g.radius) << "\" fill=\"none\" stroke=\"" << st.colour
            << "\" stroke-width=\"1.2\"";
        if (st.dash[0] != '\0') svg << " stroke-dasharray=\"" << st.dash << "\"";
        svg << "><title>" << n.name << "</title></circle>\n";
        ++out.circles;
    }

    // The line P1 P2 P3, clipped against the canvas box.
    try {
        XY p1 = areal_to_cartesian(e, c.P1);
        XY p3 = areal_to_cartesian(e, c.P3);
        XY q1 = tx(p1), q3 = tx(p3);
        double dx = q3.x - q1.x, dy = q3.y - q1.y;
        double norm = std::hypot(dx, dy);
        if (norm > 1e-9) {
            dx /= norm;
            dy /= norm;
            double span = 3.0 * size;
            svg << "<line x1=\"" << fmt(q1.x - span * dx) << "\" y1=\"" << fmt(q1.y - span * dy)
                << "\" x2=\"" << fmt(q1.x + span * dx) << "\" y2=\"" << fmt(q1.y + span * dy)
                << "\" stroke=\"#d62728\" stroke-width=\"1\" stroke-dasharray=\"10 4\"/>\n";
            ++out.lines;
        } else {
            svg << "<!-- warning: P1 and P3 coincide on canvas; line omitted -->\n";
        }
    } catch (const DegenerateError&) {
        svg << "<!-- warning: a perspector lies at infinity; line omitted -->\n";
    }

    // Labelled point markers.
    struct Label {
        const char* name;
        const Point<Rat>* p;
    };
    const Label labels[] = {
        {"A", &c.A},    {"B", &c.B},    {"C", &c.C},    {"P", &c.P},    {"H", &c.H},
        {"Q", &c.Q},    {"L", &c.L},    {"M", &c.M},    {"N", &c.N},    {"D", &c.D},
        {"E", &c.E},    {"F", &c.F},    {"L'", &c.Lp},  {"M'", &c.Mp},  {"N'", &c.Np},
        {"P1", &c.P1},  {"P2", &c.P2},  {"P3", &c.P3},  {"U", &c.U},    {"V", &c.V},
        {"W", &c.W},    {"U'", &c.Up},  {"V'", &c.Vp},  {"W'", &c.Wp},  {"U2", &c.U2},
        {"U3", &c.U3},  {"V3", &c.V3},  {"V1", &c.V1},  {"W1", &c.W1},  {"W2", &c.W2},
    };
    for (const Label& l : labels) {
        XY p;
        try {
            p = tx(areal_to_cartesian(e, *l.p));
        } catch (const DegenerateError&) {
            continue;
        }
        svg << "<rect x=\"" << fmt(p.x - 2) << "\" y=\"" << fmt(p.y - 2)
            << "\" width=\"4\" height=\"4\" fill=\"#222222\"/>\n";
        if (opt.labels) {
            svg << "<text x=\"" << fmt(p.x + 5) << "\" y=\"" << fmt(p.y - 5)
                << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#222222\">" << l.name
                << "</text>\n";
            ++out.labels;
        }
    }

    svg << "</svg>\n";
    out.svg = svg.str();
    return out;
}

}  // namespace hagge
