#ifndef HAGGE_CONSTRUCT_HPP
#define HAGGE_CONSTRUCT_HPP

#include <optional>
#include <utility>

#include "hagge/areal.hpp"
#include "hagge/reflect.hpp"

namespace hagge {

// The full pipeline from a starting point P inside the reference triangle:
// cevian second intersections L, M, N; the tangent triangle DEF; the
// concurrence point Q; second intersections L', M', N'; perspectors P1, P2,
// P3; the twelve side reflections; and the eight circles through H plus the
// circumcircle. The orthocentre and symmedian starts degenerate and get
// dedicated entry points.

enum class StartKind { GenericInterior, Centroid, OrthocentreDegenerate, SymmedianDegenerate };

inline const char* start_kind_name(StartKind k) {
    switch (k) {
        case StartKind::Centroid: return "centroid";
        case StartKind::OrthocentreDegenerate: return "orthocentre-degenerate";
        case StartKind::SymmedianDegenerate: return "symmedian-degenerate";
        default: return "generic-interior";
    }
}

// H takes precedence over K: for the equilateral triangle every centre
// coincides and the orthocentre degeneracy is the one that bites first
// (the point circle).
template <class K>
StartKind classify_start(const Triangle<K>& t, const Point<K>& p) {
    if (p == orthocentre(t)) return StartKind::OrthocentreDegenerate;
    if (p == symmedian(t)) return StartKind::SymmedianDegenerate;
    if (p == centroid<K>()) return StartKind::Centroid;
    return StartKind::GenericInterior;
}

template <class K>
struct Construction {
    Triangle<K> tri;
    StartKind kind;
    Point<K> P;
    Point<K> A, B, C;
    Point<K> H;
    Point<K> L, M, N;
    Point<K> D, E, F;
    Point<K> Q;
    Point<K> Lp, Mp, Np;
    Point<K> P1, P2, P3;
    Point<K> U, V, W;
    Point<K> Up, Vp, Wp;
    Point<K> U2, U3, V3, V1, W1, W2;
    Line<K> line_da, line_eb, line_fc;
    Line<K> polar_q;
    // Lines carrying the reflections of L', M', N' together with H.
    Line<K> simson_lp, simson_mp, simson_np;
    // Circle through U, V, W; absent exactly when U = V = W (the orthocentre
    // start), where it shrinks to the point H. The companion circles can
    // collapse the same way when extra symmetry makes their defining points
    // coincide (e.g. the equilateral triangle, where every centre is H), so
    // they are optional too.
    std::optional<Circle<K>> hagge_g;
    std::optional<Circle<K>> hagge_q;   // U' V' W'
    std::optional<Circle<K>> hagge_p1;  // U  V3 W2
    std::optional<Circle<K>> hagge_p2;  // U3 V  W1
    std::optional<Circle<K>> hagge_p3;  // U2 V1 W
    Circle<K> bhc, cha, ahb;
    bool uvw_is_point = false;
};

template <class K>
Construction<K> run_pipeline(const Triangle<K>& t, Point<K> p, StartKind kind) {
    using S = ScalarOps<K>;
    Point<K> A(S::one(), S::zero(), S::zero());
    Point<K> B(S::zero(), S::one(), S::zero());
    Point<K> C(S::zero(), S::zero(), S::one());
    Point<K> H = orthocentre(t);

    Point<K> L = second_intersection(t, A, p);
    Point<K> M = second_intersection(t, B, p);
    Point<K> N = second_intersection(t, C, p);

    Line<K> tl = tangent_at(t, L);
    Line<K> tm = tangent_at(t, M);
    Line<K> tn = tangent_at(t, N);
    Point<K> D = meet(tm, tn);
    Point<K> E = meet(tn, tl);
    Point<K> F = meet(tl, tm);

    Line<K> da = join(D, A);
    Line<K> eb = join(E, B);
    Line<K> fc = join(F, C);
    Point<K> Q = meet(da, eb);

    Point<K> Lp = second_intersection(t, A, D);
    Point<K> Mp = second_intersection(t, B, E);
    Point<K> Np = second_intersection(t, C, F);

    Point<K> P1 = meet(join(A, L), join(B, Np));
    Point<K> P2 = meet(join(B, M), join(C, Lp));
    Point<K> P3 = meet(join(C, N), join(A, Mp));

    Point<K> U = reflect_bc(t, L);
    Point<K> V = reflect_ca(t, M);
    Point<K> W = reflect_ab(t, N);
    Point<K> Up = reflect_bc(t, Lp);
    Point<K> Vp = reflect_ca(t, Mp);
    Point<K> Wp = reflect_ab(t, Np);
    Point<K> U2 = reflect_bc(t, Mp);
    Point<K> U3 = reflect_bc(t, Np);
    Point<K> V3 = reflect_ca(t, Np);
    Point<K> V1 = reflect_ca(t, Lp);
    Point<K> W1 = reflect_ab(t, Lp);
    Point<K> W2 = reflect_ab(t, Mp);

    bool uvw_point = (U == V) && (V == W);
    std::optional<Circle<K>> hagge_g;
    if (!uvw_point) hagge_g = circle_through(t, U, V, W);

    // Three coincident points pin down no circle (the locus collapsed to a
    // point); two coincident points are unexpected here and stay a hard error
    // inside circle_through.
    auto maybe_circle = [&](const Point<K>& x, const Point<K>& y,
                            const Point<K>& z) -> std::optional<Circle<K>> {
        if (x == y && y == z) return std::nullopt;
        return circle_through(t, x, y, z);
    };

    return Construction<K>{
        .tri = t,
        .kind = kind,
        .P = std::move(p),
        .A = A,
        .B = B,
        .C = C,
        .H = H,
        .L = L,
        .M = M,
        .N = N,
        .D = D,
        .E = E,
        .F = F,
        .Q = Q,
        .Lp = Lp,
        .Mp = Mp,
        .Np = Np,
        .P1 = std::move(P1),
        .P2 = std::move(P2),
        .P3 = std::move(P3),
        .U = U,
        .V = V,
        .W = W,
        .Up = Up,
        .Vp = Vp,
        .Wp = Wp,
        .U2 = U2,
        .U3 = U3,
        .V3 = V3,
        .V1 = V1,
        .W1 = W1,
        .W2 = W2,
        .line_da = std::move(da),
        .line_eb = std::move(eb),
        .line_fc = std::move(fc),
        .polar_q = polar(t, Q),
        .simson_lp = join(Up, V1),
        .simson_mp = join(Vp, W2),
        .simson_np = join(Wp, U3),
        .hagge_g = std::move(hagge_g),
        .hagge_q = maybe_circle(Up, Vp, Wp),
        .hagge_p1 = maybe_circle(U, V3, W2),
        .hagge_p2 = maybe_circle(U3, V, W1),
        .hagge_p3 = maybe_circle(U2, V1, W),
        .bhc = circle_through(t, B, H, C),
        .cha = circle_through(t, C, H, A),
        .ahb = circle_through(t, A, H, B),
        .uvw_is_point = uvw_point,
    };
}

struct RunOptions {
    // Probe starting points outside the triangle (nothing is asserted about
    // them; the theorems are only claimed for interior points).
    bool allow_exterior = false;
};

// Generic pipeline; rejects the two degenerate starting points, which have
// their own entry points below.
template <class K>
Construction<K> run(const Triangle<K>& t, const Point<K>& p, RunOptions opt = {}) {
    using S = ScalarOps<K>;
    if (S::is_zero(p.x()) || S::is_zero(p.y()) || S::is_zero(p.z()))
        throw InputError("starting point on a sideline: " + p.str());
    StartKind kind = classify_start(t, p);
    if (kind == StartKind::OrthocentreDegenerate)
        throw InputError("starting point is the orthocentre; run the dedicated degenerate case");
    if (kind == StartKind::SymmedianDegenerate)
        throw InputError("starting point is the symmedian point; run the dedicated degenerate case");
    if (!opt.allow_exterior && !interior(p))
        throw InputError("starting point is not interior: " + p.str());
    return run_pipeline(t, p, kind);
}

template <class K>
Construction<K> run_degenerate_h(const Triangle<K>& t) {
    return run_pipeline(t, orthocentre(t), StartKind::OrthocentreDegenerate);
}

template <class K>
Construction<K> run_degenerate_k(const Triangle<K>& t) {
    return run_pipeline(t, symmedian(t), StartKind::SymmedianDegenerate);
}

}  // namespace hagge

#endif
