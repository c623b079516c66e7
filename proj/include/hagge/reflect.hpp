#ifndef HAGGE_REFLECT_HPP
#define HAGGE_REFLECT_HPP

#include <array>

#include "hagge/areal.hpp"

namespace hagge {

// Reflection of a point in a side of the reference triangle, via the closed
// forms for areal coordinates. The raw variants return the formula triple
// verbatim, which preserves the coordinate sum of the input exactly; the
// Point variants canonicalize like every other constructed point.

template <class K>
std::array<K, 3> reflect_bc_raw(const Triangle<K>& t, const std::array<K, 3>& p) {
    const K& d = p[0];
    const K& e = p[1];
    const K& f = p[2];
    return {-d, e + d * (t.sa + t.sb - t.sc) / t.sa, f + d * (t.sc + t.sa - t.sb) / t.sa};
}

template <class K>
std::array<K, 3> reflect_ca_raw(const Triangle<K>& t, const std::array<K, 3>& p) {
    const K& d = p[0];
    const K& e = p[1];
    const K& f = p[2];
    return {d + e * (t.sa + t.sb - t.sc) / t.sb, -e, f + e * (t.sb + t.sc - t.sa) / t.sb};
}

template <class K>
std::array<K, 3> reflect_ab_raw(const Triangle<K>& t, const std::array<K, 3>& p) {
    const K& d = p[0];
    const K& e = p[1];
    const K& f = p[2];
    return {d + f * (t.sc + t.sa - t.sb) / t.sc, e + f * (t.sb + t.sc - t.sa) / t.sc, -f};
}

template <class K>
Point<K> reflect_bc(const Triangle<K>& t, const Point<K>& p) {
    auto r = reflect_bc_raw(t, p.coords());
    return Point<K>(std::move(r[0]), std::move(r[1]), std::move(r[2]));
}

template <class K>
Point<K> reflect_ca(const Triangle<K>& t, const Point<K>& p) {
    auto r = reflect_ca_raw(t, p.coords());
    return Point<K>(std::move(r[0]), std::move(r[1]), std::move(r[2]));
}

template <class K>
Point<K> reflect_ab(const Triangle<K>& t, const Point<K>& p) {
    auto r = reflect_ab_raw(t, p.coords());
    return Point<K>(std::move(r[0]), std::move(r[1]), std::move(r[2]));
}

}  // namespace hagge

#endif
