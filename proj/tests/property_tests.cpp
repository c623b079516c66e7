#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properties.hpp"

using hagge::props::Result;

namespace {
void require_clean(const Result& r, int expected_trials) {
    CHECK(r.trials >= expected_trials);
    CHECK(r.failures == 0);
    if (r.failures) MESSAGE("first counterexample: ", r.first_failure);
}
}  // namespace

TEST_CASE("property: reflection is an involution") {
    require_clean(hagge::props::reflection_involution(101, 200), 200);
}

TEST_CASE("property: midpoint of point and mirror image lies on the mirror") {
    require_clean(hagge::props::midpoint_on_mirror(102, 200), 200);
}

TEST_CASE("property: join and meet are dual") {
    require_clean(hagge::props::join_meet_duality(103, 200), 200);
}

TEST_CASE("property: chord second intersection round-trips") {
    require_clean(hagge::props::second_intersection_round_trip(104, 200), 200);
}

TEST_CASE("property: tangents touch the circle exactly once") {
    require_clean(hagge::props::tangent_double_root(105, 200), 200);
}

TEST_CASE("property: the fitted circle contains its three defining points") {
    require_clean(hagge::props::circle_through_membership(106, 200), 200);
}
