#ifndef HAGGE_FIGURE_HPP
#define HAGGE_FIGURE_HPP

#include <string>

#include "hagge/construct.hpp"
#include "hagge/rational.hpp"

namespace hagge {

// Rendering of a numeric construction as a standalone SVG. This is the only
// module that touches floating point (side lengths need square roots); no
// value computed here flows back into the exact layers.

struct XY {
    double x = 0;
    double y = 0;
};

// Cartesian placement of the reference triangle: B at the origin, C at
// (a, 0), A in the upper half-plane.
struct Embedding {
    XY a, b, c;

    static Embedding from_triangle(const Triangle<Rat>& t);
};

// Normalized barycentric combination (x*A + y*B + z*C)/(x+y+z). A zero
// coordinate sum is a point at infinity and cannot be drawn.
XY areal_to_cartesian(const Embedding& e, const Point<Rat>& p);

struct FigureOptions {
    int size = 800;      // canvas is size x size
    bool labels = true;  // point labels as text elements
};

struct RenderResult {
    std::string svg;
    // Largest |distance - radius| over every defining point of every drawn
    // circle, in embedding units (before canvas scaling).
    double max_residual = 0;
    int circles = 0;
    int lines = 0;
    int labels = 0;
    int degenerate_circles = 0;
};

RenderResult render(const Construction<Rat>& c, const Embedding& e, const FigureOptions& opt = {});

}  // namespace hagge

#endif
