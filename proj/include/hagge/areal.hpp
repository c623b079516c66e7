#ifndef HAGGE_AREAL_HPP
#define HAGGE_AREAL_HPP

#include <array>
#include <string>

#include "hagge/error.hpp"
#include "hagge/scalar.hpp"

namespace hagge {

// Areal (barycentric) coordinates relative to a reference triangle ABC with
// squared side lengths sa = a^2 (side BC, opposite A), sb = b^2, sc = c^2.
// Points and lines are homogeneous triples; equality is projective, decided
// by vanishing 2x2 minors, never by normalization. Circles are the pencil
//   sa*y*z + sb*z*x + sc*x*y + (u*x + v*y + w*z)(x + y + z) = 0
// whose (u, v, w) scale is pinned by the circumcircle part, so circle
// equality is plain componentwise equality.

template <class K>
K det3(const std::array<K, 3>& r0, const std::array<K, 3>& r1, const std::array<K, 3>& r2) {
    return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) -
           r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
           r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

template <class K>
std::array<K, 3> cross(const std::array<K, 3>& a, const std::array<K, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class K>
bool proportional(const std::array<K, 3>& a, const std::array<K, 3>& b) {
    using S = ScalarOps<K>;
    return S::is_zero(a[0] * b[1] - a[1] * b[0]) && S::is_zero(a[1] * b[2] - a[2] * b[1]) &&
           S::is_zero(a[0] * b[2] - a[2] * b[0]);
}

template <class K>
bool all_zero(const std::array<K, 3>& a) {
    using S = ScalarOps<K>;
    return S::is_zero(a[0]) && S::is_zero(a[1]) && S::is_zero(a[2]);
}

// Squared side lengths of the reference triangle. Construction validates the
// instance: nonzero area and no right angle (a right angle drops the
// orthocentre onto a vertex, collapsing the vertex circles onto the
// circumcircle). Violations throw InputError, the "bad instance" signal that
// the CLI maps to exit code 2.
template <class K>
struct Triangle {
    K sa, sb, sc;

    Triangle(K sa_, K sb_, K sc_) : sa(std::move(sa_)), sb(std::move(sb_)), sc(std::move(sc_)) {
        using S = ScalarOps<K>;
        if constexpr (S::kOrdered) {
            if (S::sign(sa) <= 0 || S::sign(sb) <= 0 || S::sign(sc) <= 0)
                throw InputError("squared side lengths must be positive");
        }
        K area16 = (sa * sb + sb * sc + sc * sa) * S::from_int(2) - sa * sa - sb * sb - sc * sc;
        if (S::is_zero(area16)) throw InputError("degenerate triangle: zero area");
        if constexpr (S::kOrdered) {
            if (S::sign(area16) < 0) throw InputError("not a triangle: negative 16*Area^2");
        }
        if (S::is_zero(sb + sc - sa) || S::is_zero(sc + sa - sb) || S::is_zero(sa + sb - sc))
            throw InputError("right triangle: the orthocentre falls on a vertex");
    }
};

namespace detail {

template <class K>
std::array<K, 3> canonical_triple(K x, K y, K z, const char* what) {
    std::array<K, 3> t{std::move(x), std::move(y), std::move(z)};
    if (all_zero(t)) throw DegenerateError(std::string(what) + ": zero coordinate triple");
    ScalarOps<K>::canonicalize(t);
    return t;
}

}  // namespace detail

template <class K>
class Point {
public:
    Point(K x, K y, K z) : v_(detail::canonical_triple(std::move(x), std::move(y), std::move(z), "point")) {}

    const K& x() const { return v_[0]; }
    const K& y() const { return v_[1]; }
    const K& z() const { return v_[2]; }
    const std::array<K, 3>& coords() const { return v_; }

    friend bool operator==(const Point& a, const Point& b) { return proportional(a.v_, b.v_); }

    std::string str() const {
        using S = ScalarOps<K>;
        return "(" + S::str(v_[0]) + ", " + S::str(v_[1]) + ", " + S::str(v_[2]) + ")";
    }

private:
    std::array<K, 3> v_;
};

// Coefficient triple (l, m, n); incidence is l*x + m*y + n*z = 0.
template <class K>
class Line {
public:
    Line(K l, K m, K n) : v_(detail::canonical_triple(std::move(l), std::move(m), std::move(n), "line")) {}

    const K& l() const { return v_[0]; }
    const K& m() const { return v_[1]; }
    const K& n() const { return v_[2]; }
    const std::array<K, 3>& coords() const { return v_; }

    friend bool operator==(const Line& a, const Line& b) { return proportional(a.v_, b.v_); }

    std::string str() const {
        using S = ScalarOps<K>;
        return "[" + S::str(v_[0]) + ", " + S::str(v_[1]) + ", " + S::str(v_[2]) + "]";
    }

private:
    std::array<K, 3> v_;
};

template <class K>
struct Circle {
    K u, v, w;

    friend bool operator==(const Circle& a, const Circle& b) {
        using S = ScalarOps<K>;
        return S::is_zero(a.u - b.u) && S::is_zero(a.v - b.v) && S::is_zero(a.w - b.w);
    }

    std::string str() const {
        using S = ScalarOps<K>;
        return "{u=" + S::str(u) + ", v=" + S::str(v) + ", w=" + S::str(w) + "}";
    }
};

template <class K>
K incidence_value(const Point<K>& p, const Line<K>& r) {
    return r.l() * p.x() + r.m() * p.y() + r.n() * p.z();
}

template <class K>
bool incident(const Point<K>& p, const Line<K>& r) {
    return ScalarOps<K>::is_zero(incidence_value(p, r));
}

template <class K>
Line<K> join(const Point<K>& p, const Point<K>& q) {
    auto c = cross(p.coords(), q.coords());
    if (all_zero(c)) throw DegenerateError("join of coincident points " + p.str());
    return Line<K>(std::move(c[0]), std::move(c[1]), std::move(c[2]));
}

template <class K>
Point<K> meet(const Line<K>& r, const Line<K>& s) {
    auto c = cross(r.coords(), s.coords());
    if (all_zero(c)) throw DegenerateError("meet of identical lines " + r.str());
    return Point<K>(std::move(c[0]), std::move(c[1]), std::move(c[2]));
}

template <class K>
K collinearity_det(const Point<K>& p, const Point<K>& q, const Point<K>& r) {
    return det3(p.coords(), q.coords(), r.coords());
}

template <class K>
bool collinear(const Point<K>& p, const Point<K>& q, const Point<K>& r) {
    return ScalarOps<K>::is_zero(collinearity_det(p, q, r));
}

template <class K>
K concurrency_det(const Line<K>& r, const Line<K>& s, const Line<K>& t) {
    return det3(r.coords(), s.coords(), t.coords());
}

template <class K>
bool concurrent(const Line<K>& r, const Line<K>& s, const Line<K>& t) {
    return ScalarOps<K>::is_zero(concurrency_det(r, s, t));
}

// Circumcircle form sa*y*z + sb*z*x + sc*x*y at p.
template <class K>
K circumcircle_value(const Triangle<K>& t, const Point<K>& p) {
    return t.sa * p.y() * p.z() + t.sb * p.z() * p.x() + t.sc * p.x() * p.y();
}

// Polarization of the circumcircle form: value of the symmetric bilinear
// form at (p, q), normalized so that B(p, p) = 2 * circumcircle_value(p).
template <class K>
K circumcircle_bilinear(const Triangle<K>& t, const Point<K>& p, const Point<K>& q) {
    return t.sa * (p.y() * q.z() + q.y() * p.z()) + t.sb * (p.z() * q.x() + q.z() * p.x()) +
           t.sc * (p.x() * q.y() + q.x() * p.y());
}

template <class K>
bool on_circumcircle(const Triangle<K>& t, const Point<K>& p) {
    return ScalarOps<K>::is_zero(circumcircle_value(t, p));
}

// Polar line of p: coefficient triple
//   (sb*f + sc*e, sc*d + sa*f, sa*e + sb*d) for p = (d, e, f).
template <class K>
Line<K> polar(const Triangle<K>& t, const Point<K>& p) {
    const K& d = p.x();
    const K& e = p.y();
    const K& f = p.z();
    return Line<K>(t.sb * f + t.sc * e, t.sc * d + t.sa * f, t.sa * e + t.sb * d);
}

template <class K>
Line<K> tangent_at(const Triangle<K>& t, const Point<K>& p) {
    if (!on_circumcircle(t, p))
        throw NotOnCircleError("tangent requested at " + p.str() + ", not on the circumcircle");
    return polar(t, p);
}

// Second intersection of the line pq with the circumcircle, where p lies on
// it. Parameterizing X = s*p + t*q turns the circle form into
//   t * (s * B(p, q) + t * C(q)) = 0
// with known root (s:t) = (1:0); the other root gives
//   X = C(q) * p - B(p, q) * q.
// If pq is tangent at p the two roots coincide and the result is p itself.
template <class K>
Point<K> second_intersection(const Triangle<K>& t, const Point<K>& p, const Point<K>& q) {
    if (!on_circumcircle(t, p))
        throw NotOnCircleError("chord start " + p.str() + " is not on the circumcircle");
    if (p == q) throw DegenerateError("chord endpoints coincide at " + p.str());
    K cq = circumcircle_value(t, q);
    K b = circumcircle_bilinear(t, p, q);
    return Point<K>(cq * p.x() - b * q.x(), cq * p.y() - b * q.y(), cq * p.z() - b * q.z());
}

// Unique circle of the pencil through three points: each point imposes one
// linear condition on (u, v, w); solved exactly by Cramer's rule.
template <class K>
Circle<K> circle_through(const Triangle<K>& t, const Point<K>& p, const Point<K>& q,
                         const Point<K>& r) {
    using S = ScalarOps<K>;
    std::array<std::array<K, 3>, 3> m{};
    std::array<K, 3> rhs{};
    const Point<K>* pts[3] = {&p, &q, &r};
    for (int i = 0; i < 3; ++i) {
        const Point<K>& pt = *pts[i];
        K s = pt.x() + pt.y() + pt.z();
        m[i] = {pt.x() * s, pt.y() * s, pt.z() * s};
        rhs[i] = S::zero() - circumcircle_value(t, pt);
    }
    K d = det3(m[0], m[1], m[2]);
    if (S::is_zero(d))
        throw DegenerateError("no unique circle through " + p.str() + ", " + q.str() + ", " + r.str());
    auto col = [&](int j, const std::array<K, 3>& c) {
        auto mm = m;
        for (int i = 0; i < 3; ++i) mm[i][static_cast<std::size_t>(j)] = c[i];
        return mm;
    };
    auto mu = col(0, rhs);
    auto mv = col(1, rhs);
    auto mw = col(2, rhs);
    return Circle<K>{det3(mu[0], mu[1], mu[2]) / d, det3(mv[0], mv[1], mv[2]) / d,
                     det3(mw[0], mw[1], mw[2]) / d};
}

template <class K>
K circle_value(const Triangle<K>& t, const Circle<K>& c, const Point<K>& p) {
    return circumcircle_value(t, p) +
           (c.u * p.x() + c.v * p.y() + c.w * p.z()) * (p.x() + p.y() + p.z());
}

template <class K>
bool on_circle(const Triangle<K>& t, const Circle<K>& c, const Point<K>& p) {
    return ScalarOps<K>::is_zero(circle_value(t, c, p));
}

// Full conic coefficients of the circle, ordered (x^2, y^2, z^2, yz, zx, xy).
template <class K>
std::array<K, 6> circle_sixform(const Triangle<K>& t, const Circle<K>& c) {
    return {c.u, c.v, c.w, t.sa + c.v + c.w, t.sb + c.w + c.u, t.sc + c.u + c.v};
}

// Proportionality of six-coefficient conic forms (equality up to one overall
// nonzero scale): all 2x2 minors of the 2x6 matrix vanish.
template <class K>
bool sixform_proportional(const std::array<K, 6>& a, const std::array<K, 6>& b) {
    using S = ScalarOps<K>;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!S::is_zero(a[i] * b[j] - a[j] * b[i])) return false;
    return true;
}

template <class K>
Point<K> orthocentre(const Triangle<K>& t) {
    K da = t.sb + t.sc - t.sa;
    K db = t.sc + t.sa - t.sb;
    K dc = t.sa + t.sb - t.sc;
    return Point<K>(db * dc, da * dc, da * db);
}

template <class K>
Point<K> centroid() {
    using S = ScalarOps<K>;
    return Point<K>(S::one(), S::one(), S::one());
}

template <class K>
Point<K> symmedian(const Triangle<K>& t) {
    return Point<K>(t.sa, t.sb, t.sc);
}

template <class K>
Point<K> isogonal(const Triangle<K>& t, const Point<K>& p) {
    using S = ScalarOps<K>;
    if (S::is_zero(p.x()) || S::is_zero(p.y()) || S::is_zero(p.z()))
        throw OnSidelineError("isogonal conjugate undefined on a sideline: " + p.str());
    return Point<K>(t.sa * p.y() * p.z(), t.sb * p.z() * p.x(), t.sc * p.x() * p.y());
}

template <class K>
Point<K> isotomic(const Point<K>& p) {
    using S = ScalarOps<K>;
    if (S::is_zero(p.x()) || S::is_zero(p.y()) || S::is_zero(p.z()))
        throw OnSidelineError("isotomic conjugate undefined on a sideline: " + p.str());
    return Point<K>(p.y() * p.z(), p.z() * p.x(), p.x() * p.y());
}

// Image of p under the homothety centred at the centroid with ratio -2.
template <class K>
Point<K> anticomplement(const Point<K>& p) {
    return Point<K>(p.y() + p.z() - p.x(), p.z() + p.x() - p.y(), p.x() + p.y() - p.z());
}

// Interior in the ordered realization: all three coordinates of one strict
// sign. Symbolic coordinates carry no sign semantics, so everything passes.
template <class K>
bool interior(const Point<K>& p) {
    using S = ScalarOps<K>;
    if constexpr (S::kOrdered) {
        int a = S::sign(p.x()), b = S::sign(p.y()), c = S::sign(p.z());
        return a != 0 && a == b && b == c;
    } else {
        return true;
    }
}

}  // namespace hagge

#endif
