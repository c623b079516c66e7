#ifndef HAGGE_TESTS_PROPERTIES_HPP
#define HAGGE_TESTS_PROPERTIES_HPP

#include <functional>
#include <random>
#include <string>

#include "hagge/areal.hpp"
#include "hagge/rational.hpp"
#include "hagge/reflect.hpp"

// Randomized algebraic properties over exact rationals. Shared between the
// standalone property runner and the acceptance gate so both execute the
// identical predicates. Every trial is exact: a single failure is a
// counterexample, not noise.

namespace hagge::props {

struct Result {
    int trials = 0;
    int failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        ++failures;
        if (first_failure.empty()) first_failure = what;
    }
    bool ok() const { return failures == 0 && trials > 0; }
};

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    Rat coord(long long max = 40) { return Rat(static_cast<long long>(1 + rng_() % max)); }

    Rat signed_coord(long long max = 20) {
        long long v = static_cast<long long>(rng_() % (2 * max + 1)) - max;
        return Rat(v);
    }

    Triangle<Rat> triangle() {
        for (;;) {
            try {
                return Triangle<Rat>(coord(), coord(), coord());
            } catch (const InputError&) {
                continue;
            }
        }
    }

    Point<Rat> interior_point() { return Point<Rat>(coord(), coord(), coord()); }

    // Arbitrary point, biased to have nonzero coordinates; may be exterior.
    Point<Rat> any_point() {
        for (;;) {
            Rat x = signed_coord(), y = signed_coord(), z = signed_coord();
            if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
            return Point<Rat>(x, y, z);
        }
    }

    // A random point of the circumcircle: second intersection of a random
    // interior cevian.
    Point<Rat> circle_point(const Triangle<Rat>& t) {
        const Point<Rat> vertices[3] = {Point<Rat>(Rat(1), Rat(0), Rat(0)),
                                        Point<Rat>(Rat(0), Rat(1), Rat(0)),
                                        Point<Rat>(Rat(0), Rat(0), Rat(1))};
        return second_intersection(t, vertices[rng_() % 3], interior_point());
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline Result reflection_involution(std::uint64_t seed, int trials) {
    Sampler s(seed);
    Result r;
    for (int i = 0; i < trials; ++i) {
        ++r.trials;
        Triangle<Rat> t = s.triangle();
        Point<Rat> p = s.any_point();
        if (!(reflect_bc(t, reflect_bc(t, p)) == p) || !(reflect_ca(t, reflect_ca(t, p)) == p) ||
            !(reflect_ab(t, reflect_ab(t, p)) == p))
            r.fail("double reflection moved " + p.str());
    }
    return r;
}

inline Result midpoint_on_mirror(std::uint64_t seed, int trials) {
    Sampler s(seed);
    Result r;
    for (int i = 0; i < trials; ++i) {
        ++r.trials;
        Triangle<Rat> t = s.triangle();
        Point<Rat> p = s.any_point();
        Rat sp = p.x() + p.y() + p.z();
        if (sp.is_zero()) {  // reflections of infinite points have no midpoint
            --r.trials;
            --i;
            continue;
        }
        struct Side {
            Point<Rat> (*refl)(const Triangle<Rat>&, const Point<Rat>&);
            int zero_coord;
        };
        const Side sides[3] = {{&reflect_bc, 0}, {&reflect_ca, 1}, {&reflect_ab, 2}};
        for (const Side& side : sides) {
            Point<Rat> q = side.refl(t, p);
            Rat sq = q.x() + q.y() + q.z();
            // the closed forms preserve coordinate sums, so sq never vanishes here
            std::array<Rat, 3> mid{p.x() / sp + q.x() / sq, p.y() / sp + q.y() / sq,
                                   p.z() / sp + q.z() / sq};
            if (!mid[static_cast<std::size_t>(side.zero_coord)].is_zero())
                r.fail("midpoint off mirror for " + p.str());
        }
    }
    return r;
}

inline Result join_meet_duality(std::uint64_t seed, int trials) {
    Sampler s(seed);
    Result r;
    for (int i = 0; i < trials; ++i) {
        ++r.trials;
        Point<Rat> p = s.any_point(), q = s.any_point(), u = s.any_point();
        if (p == q || p == u || collinear(p, q, u)) {
            --r.trials;
            --i;
            continue;
        }
        if (!(meet(join(p, q), join(p, u)) == p))
            r.fail("meet(join(p,q), join(p,u)) missed p = " + p.str());
        if (!incident(q, join(p, q))) r.fail("q off join(p,q) for q = " + q.str());
    }
    return r;
}

inline Result second_intersection_round_trip(std::uint64_t seed, int trials) {
    Sampler s(seed);
    Result r;
    for (int i = 0; i < trials; ++i) {
        ++r.trials;
        Triangle<Rat> t = s.triangle();
        Point<Rat> a(Rat(1), Rat(0), Rat(0));
        Point<Rat> p = s.interior_point();
        Point<Rat> l = second_intersection(t, a, p);
        if (!on_circumcircle(t, l)) {
            r.fail("second intersection left the circle at " + l.str());
            continue;
        }
        if (!incident(l, join(a, p))) {
            r.fail("second intersection left the chord at " + l.str());
            continue;
        }
        if (l == a) {  // the chord was tangent at A; round trip is trivial
            continue;
        }
        if (!(second_intersection(t, l, p) == a))
            r.fail("round trip from " + l.str() + " missed the start");
    }
    return r;
}

inline Result tangent_double_root(std::uint64_t seed, int trials) {
    Sampler s(seed);
    Result r;
    for (int i = 0; i < trials; ++i) {
        ++r.trials;
        Triangle<Rat> t = s.triangle();
        Point<Rat> l = s.circle_point(t);
        Line<Rat> tang = tangent_at(t, l);
        // a second point of the tangent: cut it with a sideline missing l
        // (a tangent meets the circle once, a sideline twice, so they differ,
        // and at most two sidelines pass through l)
        const Line<Rat> sidelines[3] = {Line<Rat>(Rat(1), Rat(0), Rat(0)),
                                        Line<Rat>(Rat(0), Rat(1), Rat(0)),
                                        Line<Rat>(Rat(0), Rat(0), Rat(1))};
        bool tested = false;
        for (const Line<Rat>& sl : sidelines) {
            Point<Rat> y = meet(tang, sl);
            if (y == l) continue;
            if (!(second_intersection(t, l, y) == l))
                r.fail("tangent at " + l.str() + " met the circle twice");
            tested = true;
            break;
        }
        if (!tested) r.fail("no second point found on the tangent at " + l.str());
    }
    return r;
}

inline Result circle_through_membership(std::uint64_t seed, int trials) {
    Sampler s(seed);
    Result r;
    for (int i = 0; i < trials; ++i) {
        ++r.trials;
        Triangle<Rat> t = s.triangle();
        Point<Rat> p = s.any_point(), q = s.any_point(), u = s.any_point();
        if (p == q || q == u || p == u || collinear(p, q, u) ||
            (p.x() + p.y() + p.z()).is_zero() || (q.x() + q.y() + q.z()).is_zero() ||
            (u.x() + u.y() + u.z()).is_zero()) {
            --r.trials;
            --i;
            continue;
        }
        Circle<Rat> c = circle_through(t, p, q, u);
        if (!on_circle(t, c, p) || !on_circle(t, c, q) || !on_circle(t, c, u))
            r.fail("fitted circle misses an input point, e.g. " + p.str());
    }
    return r;
}

}  // namespace hagge::props

#endif
