// Acceptance gate: one line per criterion, exit 0 only if every criterion
// holds. Each criterion is exact at heart; timing limits are generous upper
// bounds, not tolerances.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include <json.hpp>

#include "hagge/closed_forms.hpp"
#include "hagge/construct.hpp"
#include "hagge/driver.hpp"
#include "hagge/ratfunc.hpp"
#include "hagge/verify.hpp"
#include "properties.hpp"

using namespace hagge;
using nlohmann::json;

namespace {

int g_failures = 0;

void report(const char* id, bool ok, const std::string& detail) {
    std::printf("%s %s: %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f s", s);
    return buf;
}

// C1: the symbolic suite proves T1-T15 plus the five expanded equations for
// every triangle, within the runtime allowance.
void criterion_1() {
    auto start = std::chrono::steady_clock::now();
    VerifyArgs args;
    args.symbolic = true;
    CommandResult res = cmd_verify(args);
    double secs = seconds_since(start);
    json j = json::parse(res.json);
    bool ok = res.exit_code == 0 && j["summary"]["fail"] == 0 && j["summary"]["pass"] == 20 &&
              secs < 60.0;
    report("C1", ok,
           "symbolic centroid proof: " + std::to_string(int(j["summary"]["pass"])) +
               " checks pass in " + fmt_seconds(secs) + " (limit 60 s)");
}

// C2: the symbolic construction reproduces the printed coordinate triples.
void criterion_2() {
    Triangle<RatFunc> t(RatFunc::variable(0), RatFunc::variable(1), RatFunc::variable(2));
    auto c = run(t, Point<RatFunc>(RatFunc(1), RatFunc(1), RatFunc(1)));
    int matched = 0, total = 0;
    std::string misses;
    auto expect = [&](const char* name, const Point<RatFunc>& got, const Point<RatFunc>& want) {
        ++total;
        if (got == want) {
            ++matched;
        } else {
            misses += std::string(" ") + name;
        }
    };
    expect("Q", c.Q, closed::Q(t));
    expect("L'", c.Lp, closed::Lp(t));
    expect("P1", c.P1, closed::P1(t));
    expect("D", c.D, closed::D(t));
    expect("U", c.U, closed::U(t));
    expect("H", c.H, orthocentre(t));
    bool ok = matched == total;
    report("C2", ok,
           "printed coordinate reproduction: " + std::to_string(matched) + "/" +
               std::to_string(total) + " triples match projectively" +
               (ok ? "" : " (missing:" + misses + ")"));
}

// C3: the generalization fuzz over 500 seeded random instances.
void criterion_3() {
    auto start = std::chrono::steady_clock::now();
    FuzzArgs args;
    args.count = 500;
    args.seed = 42;
    args.max_coord = 40;
    CommandResult res = cmd_fuzz(args);
    double secs = seconds_since(start);
    json j = json::parse(res.json);
    int passed = j["summary"]["passed"];
    bool ok = res.exit_code == 0 && passed == 500 && secs < 300.0;
    report("C3", ok,
           "fuzz --count 500 --seed 42 --max-coord 40: " + std::to_string(passed) +
               "/500 instances pass in " + fmt_seconds(secs) + " (limit 300 s)");
}

// C4: degenerate starts at the two named instances plus ten fuzzed triangles.
void criterion_4() {
    int ok_count = 0, total = 0;
    std::string misses;
    auto check_both = [&](const Triangle<Rat>& t, const std::string& label) {
        ++total;
        CheckReport h = check_orthocentre_start(run_degenerate_h(t));
        CheckReport k = check_symmedian_start(run_degenerate_k(t));
        if (h.all_ok() && h.count(CheckStatus::Pass) == 1 && k.all_ok() &&
            k.count(CheckStatus::Pass) == 2) {
            ++ok_count;
        } else {
            misses += " " + label;
        }
    };
    check_both(Triangle<Rat>(Rat(4), Rat(5), Rat(6)), "(4,5,6)");
    check_both(Triangle<Rat>(Rat(169), Rat(196), Rat(225)), "(169,196,225)");
    props::Sampler sampler(4242);
    for (int i = 0; i < 10; ++i) {
        Triangle<Rat> t = sampler.triangle();
        check_both(t, "fuzzed#" + std::to_string(i));
    }
    bool ok = ok_count == total;
    report("C4", ok,
           "degenerate starts (T16 orthocentre, T17+T18 symmedian): " + std::to_string(ok_count) +
               "/" + std::to_string(total) + " triangles pass" +
               (ok ? "" : " (failing:" + misses + ")"));
}

// C5: the worked-instance regression values.
void criterion_5() {
    Triangle<Rat> t(Rat(4), Rat(5), Rat(6));
    auto c = run(t, Point<Rat>(Rat(1), Rat(1), Rat(1)));
    int matched = 0, total = 0;
    std::string misses;
    auto expect = [&](const char* name, bool cond) {
        ++total;
        if (cond) {
            ++matched;
        } else {
            misses += std::string(" ") + name;
        }
    };
    using P = Point<Rat>;
    expect("Q", c.Q == P(Rat(4), Rat(7), Rat(14)));
    expect("L", c.L == P(Rat(-4), Rat(11), Rat(11)));
    expect("L'", c.Lp == P(Rat(-1), Rat(2), Rat(4)));
    expect("D", c.D == P(Rat(-8), Rat(1), Rat(2)));
    expect("P1", c.P1 == P(Rat(8), Rat(-7), Rat(-7)));
    expect("U", c.U == P(Rat(2), Rat(4), Rat(3)));
    expect("V1", c.V1 == P(Rat(1), Rat(-10), Rat(34)));
    expect("H", c.H == P(Rat(15), Rat(21), Rat(35)));
    expect("BHC", c.bhc.u == Rat(-7) && c.bhc.v == Rat(0) && c.bhc.w == Rat(0));
    bool ok = matched == total;
    report("C5", ok,
           "worked-instance regression at (4,5,6) with the centroid: " + std::to_string(matched) +
               "/" + std::to_string(total) + " values reproduce" +
               (ok ? "" : " (missing:" + misses + ")"));
}

// C6: the standalone property suites, each over at least 200 random inputs.
void criterion_6() {
    struct Suite {
        const char* name;
        props::Result (*run)(std::uint64_t, int);
        std::uint64_t seed;
    };
    const Suite suites[] = {
        {"reflection involution", &props::reflection_involution, 101},
        {"midpoint on mirror", &props::midpoint_on_mirror, 102},
        {"join/meet duality", &props::join_meet_duality, 103},
        {"second-intersection round-trip", &props::second_intersection_round_trip, 104},
        {"tangent double root", &props::tangent_double_root, 105},
        {"circle-through membership", &props::circle_through_membership, 106},
    };
    int ok_count = 0;
    std::string misses;
    for (const Suite& s : suites) {
        props::Result r = s.run(s.seed, 200);
        if (r.ok() && r.trials >= 200) {
            ++ok_count;
        } else {
            misses += std::string(" ") + s.name + " (" + r.first_failure + ")";
        }
    }
    bool ok = ok_count == 6;
    report("C6", ok,
           "property suites over 200 random inputs each: " + std::to_string(ok_count) +
               "/6 suites clean" + (ok ? "" : ";" + misses));
}

// C7: the rendered figure has the advertised shape and residuals.
void criterion_7() {
    FigureArgs args;
    args.out = "/tmp/hagge_acceptance_fig.svg";
    CommandResult res = cmd_figure(args);
    json j = json::parse(res.json);
    double resid = j["max_residual"];
    bool ok = res.exit_code == 0 && j["circles"] == 9 && j["lines"] == 1 && j["labels"] >= 22 &&
              resid < 1e-6;
    char resid_s[32];
    std::snprintf(resid_s, sizeof(resid_s), "%.2e", resid);
    report("C7", ok,
           "figure at (4,5,6) with the centroid: " + std::to_string(int(j["circles"])) +
               " circles, " + std::to_string(int(j["lines"])) + " line, " +
               std::to_string(int(j["labels"])) + " labels, max residual " + resid_s);
    std::remove(args.out.c_str());
}

// C8 (non-blocking by design, but it must never report a false residue):
// the fully generic symbolic run either completes clean or stops at its
// budget with every theorem check skipped.
void criterion_8() {
    auto start = std::chrono::steady_clock::now();
    VerifyArgs args;
    args.symbolic = true;
    args.generic_point = true;
    CommandResult res = cmd_verify(args);
    double secs = seconds_since(start);
    json j = json::parse(res.json);
    int fails = j["summary"]["fail"];
    int passes = j["summary"]["pass"];
    bool completed = passes > 0;
    bool budget_stop = !completed;
    std::string t1_detail;
    for (const auto& c : j["checks"])
        if (c["id"] == "T1") t1_detail = c["detail"];
    bool ok = res.exit_code == 0 && fails == 0 &&
              (completed || t1_detail.find("resource limit") != std::string::npos);
    report("C8", ok,
           std::string("fully generic symbolic run: ") +
               (completed ? "completed with all-zero residues"
                          : (budget_stop ? "stopped at the work budget (" + t1_detail + ")"
                                         : "unexpected state")) +
               " in " + fmt_seconds(secs));
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (g_failures) {
        std::printf("acceptance: %d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("acceptance: all 8 criteria hold\n");
    return 0;
}
