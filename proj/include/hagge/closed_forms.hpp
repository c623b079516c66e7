#ifndef HAGGE_CLOSED_FORMS_HPP
#define HAGGE_CLOSED_FORMS_HPP

#include <array>

#include "hagge/areal.hpp"

// Reference closed forms for the centroid start, kept independent of the
// construction code: the pipeline must reproduce each of these, projectively
// for points and lines, up to one overall scale for expanded conics. They
// serve as the frozen oracle for the reproduction and regression checks.

namespace hagge::closed {

template <class K>
K sq(const K& x) {
    return x * x;
}

// Second intersections of the medians with the circumcircle.
template <class K>
Point<K> L(const Triangle<K>& t) {
    return Point<K>(-t.sa, t.sb + t.sc, t.sb + t.sc);
}

template <class K>
Point<K> M(const Triangle<K>& t) {
    return Point<K>(t.sc + t.sa, -t.sb, t.sc + t.sa);
}

template <class K>
Point<K> N(const Triangle<K>& t) {
    return Point<K>(t.sa + t.sb, t.sa + t.sb, -t.sc);
}

// Vertices of the tangent triangle: D = tangent(M) ^ tangent(N), etc.
template <class K>
Point<K> D(const Triangle<K>& t) {
    return Point<K>(-(sq(t.sa) + t.sa * (t.sb + t.sc) + K(2) * t.sb * t.sc),
                    t.sb * (t.sa + t.sb - t.sc), t.sc * (t.sc + t.sa - t.sb));
}

template <class K>
Point<K> E(const Triangle<K>& t) {
    return Point<K>(t.sa * (t.sa + t.sb - t.sc),
                    -(sq(t.sb) + t.sb * (t.sc + t.sa) + K(2) * t.sc * t.sa),
                    t.sc * (t.sb + t.sc - t.sa));
}

template <class K>
Point<K> F(const Triangle<K>& t) {
    return Point<K>(t.sa * (t.sc + t.sa - t.sb), t.sb * (t.sb + t.sc - t.sa),
                    -(sq(t.sc) + t.sc * (t.sa + t.sb) + K(2) * t.sa * t.sb));
}

// Tangent lines to the circumcircle at L, M, N.
template <class K>
Line<K> tangent_L(const Triangle<K>& t) {
    return Line<K>(sq(t.sb + t.sc), t.sa * t.sb, t.sc * t.sa);
}

template <class K>
Line<K> tangent_M(const Triangle<K>& t) {
    return Line<K>(t.sa * t.sb, sq(t.sc + t.sa), t.sb * t.sc);
}

template <class K>
Line<K> tangent_N(const Triangle<K>& t) {
    return Line<K>(t.sc * t.sa, t.sb * t.sc, sq(t.sa + t.sb));
}

// The concurrent cevian lines DA, EB, FC of the tangent-triangle vertices.
template <class K>
Line<K> line_DA(const Triangle<K>& t) {
    return Line<K>(K(0), t.sc * (t.sc + t.sa - t.sb), -(t.sb * (t.sa + t.sb - t.sc)));
}

template <class K>
Line<K> line_EB(const Triangle<K>& t) {
    return Line<K>(-(t.sc * (t.sb + t.sc - t.sa)), K(0), t.sa * (t.sa + t.sb - t.sc));
}

template <class K>
Line<K> line_FC(const Triangle<K>& t) {
    return Line<K>(t.sb * (t.sb + t.sc - t.sa), -(t.sa * (t.sc + t.sa - t.sb)), K(0));
}

template <class K>
Point<K> Q(const Triangle<K>& t) {
    return Point<K>(t.sa / (t.sb + t.sc - t.sa), t.sb / (t.sc + t.sa - t.sb),
                    t.sc / (t.sa + t.sb - t.sc));
}

// Second intersections of DA, EB, FC with the circumcircle.
template <class K>
Point<K> Lp(const Triangle<K>& t) {
    return Point<K>(K(-1), K(2) * t.sb / (t.sc + t.sa - t.sb), K(2) * t.sc / (t.sa + t.sb - t.sc));
}

template <class K>
Point<K> Mp(const Triangle<K>& t) {
    return Point<K>(K(2) * t.sa / (t.sb + t.sc - t.sa), K(-1), K(2) * t.sc / (t.sa + t.sb - t.sc));
}

template <class K>
Point<K> Np(const Triangle<K>& t) {
    return Point<K>(K(2) * t.sa / (t.sb + t.sc - t.sa), K(2) * t.sb / (t.sc + t.sa - t.sb), K(-1));
}

template <class K>
Line<K> polar_Q(const Triangle<K>& t) {
    return Line<K>(t.sb + t.sc - t.sa, t.sc + t.sa - t.sb, t.sa + t.sb - t.sc);
}

template <class K>
Point<K> P1(const Triangle<K>& t) {
    return Point<K>(K(2) * t.sa, t.sa - t.sb - t.sc, t.sa - t.sb - t.sc);
}

template <class K>
Point<K> P2(const Triangle<K>& t) {
    return Point<K>(t.sb - t.sc - t.sa, K(2) * t.sb, t.sb - t.sc - t.sa);
}

template <class K>
Point<K> P3(const Triangle<K>& t) {
    return Point<K>(t.sc - t.sa - t.sb, t.sc - t.sa - t.sb, K(2) * t.sc);
}

// Reflections of L, M, N in BC, CA, AB.
template <class K>
Point<K> U(const Triangle<K>& t) {
    return Point<K>(t.sa, K(2) * t.sc - t.sa, K(2) * t.sb - t.sa);
}

template <class K>
Point<K> V(const Triangle<K>& t) {
    return Point<K>(K(2) * t.sc - t.sb, t.sb, K(2) * t.sa - t.sb);
}

template <class K>
Point<K> W(const Triangle<K>& t) {
    return Point<K>(K(2) * t.sb - t.sc, K(2) * t.sa - t.sc, t.sc);
}

// Reflection of L' in BC.
template <class K>
Point<K> Up(const Triangle<K>& t) {
    K num_y = sq(t.sa) - K(2) * t.sa * t.sb - sq(t.sb - t.sc);
    K num_z = sq(t.sa) - K(2) * t.sc * t.sa - sq(t.sb - t.sc);
    return Point<K>(K(1), -(num_y / (t.sa * (t.sc + t.sa - t.sb))),
                    -(num_z / (t.sa * (t.sa + t.sb - t.sc))));
}

// Reflection of L' in CA.
template <class K>
Point<K> V1(const Triangle<K>& t) {
    K x = (t.sa + K(3) * (t.sb - t.sc)) / (t.sc + t.sa - t.sb);
    K y = -(K(2) * t.sb / (t.sc + t.sa - t.sb));
    K z = -(K(2) * (sq(t.sa) - K(3) * t.sa * t.sc - t.sb * (t.sb - t.sc)) /
            ((t.sa + t.sb - t.sc) * (t.sc + t.sa - t.sb)));
    return Point<K>(std::move(x), std::move(y), std::move(z));
}

// Reflection of N' in CA.
template <class K>
Point<K> V3(const Triangle<K>& t) {
    K x = K(2) * (t.sa * (t.sb - K(3) * t.sc) - (t.sb + t.sc) * (t.sb - t.sc)) /
          ((t.sa - t.sb - t.sc) * (t.sc + t.sa - t.sb));
    K y = -(K(2) * t.sb / (t.sc + t.sa - t.sb));
    K z = (K(3) * t.sb + t.sc - K(3) * t.sa) / (t.sc + t.sa - t.sb);
    return Point<K>(std::move(x), std::move(y), std::move(z));
}

// Expanded conic coefficients, ordered (x^2, y^2, z^2, yz, zx, xy) to match
// circle_sixform. Each is the classical equation of the named circle, valid
// up to one overall nonzero scale.

// Hagge circle of the centroid.
template <class K>
std::array<K, 6> hagge_centroid_sixform(const Triangle<K>& t) {
    return {t.sa * (t.sb + t.sc - t.sa),
            t.sb * (t.sc + t.sa - t.sb),
            t.sc * (t.sa + t.sb - t.sc),
            -(sq(t.sa) + sq(t.sb - t.sc)),
            -(sq(t.sb) + sq(t.sc - t.sa)),
            -(sq(t.sc) + sq(t.sa - t.sb))};
}

// Hagge circle of Q.
template <class K>
std::array<K, 6> hagge_q_sixform(const Triangle<K>& t) {
    return {sq(t.sb + t.sc - t.sa),
            sq(t.sc + t.sa - t.sb),
            sq(t.sa + t.sb - t.sc),
            sq(t.sa) - t.sa * (t.sb + t.sc) + K(2) * sq(t.sb - t.sc),
            sq(t.sb) - t.sb * (t.sc + t.sa) + K(2) * sq(t.sc - t.sa),
            sq(t.sc) - t.sc * (t.sa + t.sb) + K(2) * sq(t.sa - t.sb)};
}

// Circle CHA.
template <class K>
std::array<K, 6> circle_cha_sixform(const Triangle<K>& t) {
    return {K(0), t.sc + t.sa - t.sb, K(0), t.sc - t.sb, -t.sb, t.sa - t.sb};
}

}  // namespace hagge::closed

#endif
