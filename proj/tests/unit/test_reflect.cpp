#include <doctest.h>

#include "hagge/closed_forms.hpp"
#include "hagge/ratfunc.hpp"
#include "hagge/reflect.hpp"

using namespace hagge;

namespace {
using P = Point<Rat>;
const Triangle<Rat> T456{Rat(4), Rat(5), Rat(6)};

Triangle<RatFunc> symbolic_triangle() {
    return {RatFunc::variable(0), RatFunc::variable(1), RatFunc::variable(2)};
}
}  // namespace

TEST_CASE("side reflections reproduce the worked values") {
    CHECK(reflect_bc(T456, P(Rat(-4), Rat(11), Rat(11))) == P(Rat(2), Rat(4), Rat(3)));
    CHECK(reflect_ca(T456, P(Rat(-1), Rat(2), Rat(4))) == P(Rat(1), Rat(-10), Rat(34)));
}

TEST_CASE("points of the mirror side are fixed") {
    P on_bc(Rat(0), Rat(3), Rat(5));
    CHECK(reflect_bc(T456, on_bc) == on_bc);
    P on_ca(Rat(2), Rat(0), Rat(9));
    CHECK(reflect_ca(T456, on_ca) == on_ca);
    P on_ab(Rat(4), Rat(1), Rat(0));
    CHECK(reflect_ab(T456, on_ab) == on_ab);
}

TEST_CASE("reflection is an involution, numerically and symbolically") {
    P p(Rat(3), Rat(-2), Rat(7));
    CHECK(reflect_bc(T456, reflect_bc(T456, p)) == p);
    CHECK(reflect_ca(T456, reflect_ca(T456, p)) == p);
    CHECK(reflect_ab(T456, reflect_ab(T456, p)) == p);

    Triangle<RatFunc> ts = symbolic_triangle();
    Point<RatFunc> q(RatFunc::variable(3), RatFunc::variable(4), RatFunc::variable(5));
    CHECK(reflect_bc(ts, reflect_bc(ts, q)) == q);
    CHECK(reflect_ca(ts, reflect_ca(ts, q)) == q);
    CHECK(reflect_ab(ts, reflect_ab(ts, q)) == q);
}

TEST_CASE("the raw formulas preserve the coordinate sum exactly") {
    Triangle<RatFunc> ts = symbolic_triangle();
    std::array<RatFunc, 3> p{RatFunc::variable(3), RatFunc::variable(4), RatFunc::variable(5)};
    for (auto* f : {&reflect_bc_raw<RatFunc>, &reflect_ca_raw<RatFunc>, &reflect_ab_raw<RatFunc>}) {
        auto r = (*f)(ts, p);
        CHECK((r[0] + r[1] + r[2] - (p[0] + p[1] + p[2])).is_zero());
    }
}

TEST_CASE("midpoint of a point and its reflection lies on the mirror") {
    auto midpoint_coord = [](const Triangle<Rat>& t, const P& p,
                             P (*refl)(const Triangle<Rat>&, const P&), int coord) {
        P q = refl(t, p);
        Rat sp = p.x() + p.y() + p.z();
        Rat sq = q.x() + q.y() + q.z();
        std::array<Rat, 3> mid{p.x() / sp + q.x() / sq, p.y() / sp + q.y() / sq,
                               p.z() / sp + q.z() / sq};
        return mid[static_cast<std::size_t>(coord)];
    };
    P p(Rat(3), Rat(2), Rat(7));
    CHECK(midpoint_coord(T456, p, &reflect_bc, 0).is_zero());
    CHECK(midpoint_coord(T456, p, &reflect_ca, 1).is_zero());
    CHECK(midpoint_coord(T456, p, &reflect_ab, 2).is_zero());
}

TEST_CASE("closed forms match the construction at a worked instance") {
    CHECK(closed::L(T456) == P(Rat(-4), Rat(11), Rat(11)));
    CHECK(closed::D(T456) == P(Rat(-8), Rat(1), Rat(2)));
    CHECK(closed::Q(T456) == P(Rat(4), Rat(7), Rat(14)));
    CHECK(closed::Lp(T456) == P(Rat(-1), Rat(2), Rat(4)));
    CHECK(closed::P1(T456) == P(Rat(8), Rat(-7), Rat(-7)));
    CHECK(closed::U(T456) == P(Rat(2), Rat(4), Rat(3)));
    CHECK(closed::V1(T456) == P(Rat(1), Rat(-10), Rat(34)));
    // U' and V3 from the printed fractions, cleared at (4, 5, 6)
    CHECK(closed::Up(T456) == reflect_bc(T456, closed::Lp(T456)));
    CHECK(closed::V3(T456) == reflect_ca(T456, closed::Np(T456)));
}

TEST_CASE("closed forms match the reflections symbolically") {
    Triangle<RatFunc> ts = symbolic_triangle();
    CHECK(reflect_bc(ts, closed::L(ts)) == closed::U(ts));
    CHECK(reflect_ca(ts, closed::M(ts)) == closed::V(ts));
    CHECK(reflect_ab(ts, closed::N(ts)) == closed::W(ts));
    CHECK(reflect_bc(ts, closed::Lp(ts)) == closed::Up(ts));
    CHECK(reflect_ca(ts, closed::Lp(ts)) == closed::V1(ts));
    CHECK(reflect_ca(ts, closed::Np(ts)) == closed::V3(ts));
}
