#include "hagge/driver.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "hagge/construct.hpp"
#include "hagge/figure.hpp"
#include "hagge/ratfunc.hpp"
#include "hagge/scalar.hpp"
#include "hagge/verify.hpp"

namespace hagge {

namespace {

using nlohmann::json;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

json report_json(const CheckReport& rep) {
    json checks = json::array();
    for (const CheckRecord& r : rep.checks)
        checks.push_back({{"id", r.id},
                          {"name", r.name},
                          {"status", status_name(r.status)},
                          {"detail", r.detail}});
    return json{{"instance",
                 {{"sa", rep.sa},
                  {"sb", rep.sb},
                  {"sc", rep.sc},
                  {"point", rep.point},
                  {"realization", rep.realization}}},
                {"checks", checks},
                {"summary",
                 {{"pass", rep.count(CheckStatus::Pass)},
                  {"fail", rep.count(CheckStatus::Fail)},
                  {"skipped", rep.count(CheckStatus::Skipped)}}}};
}

std::string report_human(const CheckReport& rep) {
    std::ostringstream os;
    os << "triangle (" << rep.sa << ", " << rep.sb << ", " << rep.sc << "), point (" << rep.point
       << "), " << rep.realization << "\n";
    for (const CheckRecord& r : rep.checks) {
        os << "  " << r.id << " " << status_name(r.status) << "  " << r.name;
        if (!r.detail.empty()) os << "  [" << r.detail << "]";
        os << "\n";
    }
    os << "summary: " << rep.count(CheckStatus::Pass) << " pass, " << rep.count(CheckStatus::Fail)
       << " fail, " << rep.count(CheckStatus::Skipped) << " skipped\n";
    return os.str();
}

CommandResult result_from_report(const CheckReport& rep) {
    CommandResult res;
    res.exit_code = rep.all_ok() ? 0 : 1;
    res.json = report_json(rep).dump(2) + "\n";
    res.human = report_human(rep);
    return res;
}

// Check names, mirrored from the verify module so a budget-stopped symbolic
// run can still emit a complete, correctly-labelled report.
struct IdName {
    const char* id;
    const char* name;
};
constexpr IdName kTheoremChecks[] = {
    {"T1", "DA, EB, FC concurrent at Q"},
    {"T2", "P1, P2, P3 collinear on the polar of Q"},
    {"T3", "Hagge circle UVW contains H"},
    {"T4", "Hagge circle U'V'W' contains H"},
    {"T5", "Hagge circle UV3W2 contains H"},
    {"T6", "Hagge circle U3VW1 contains H"},
    {"T7", "Hagge circle U2V1W contains H"},
    {"T8", "circle BHC contains U, U', U2, U3"},
    {"T9", "circle CHA contains V, V', V3, V1"},
    {"T10", "circle AHB contains W, W', W1, W2"},
    {"T11", "U', V1, W1, H collinear"},
    {"T12", "V', W2, U2, H collinear"},
    {"T13", "W', U3, V3, H collinear"},
    {"T14", "ABC in perspective with LMN, L'M'N', LN'M', N'ML', M'L'N"},
    {"T15",
     "isogonal of Q is the anticomplement of the isogonal of P "
     "(the isotomic of H for the centroid start)"},
};
constexpr IdName kEquationChecks[] = {
    {"E1", "Hagge circle of the centroid matches its classical expanded equation"},
    {"E2", "Hagge circle of Q matches its classical expanded equation"},
    {"E3", "circle CHA matches its classical expanded equation"},
    {"E4", "V1 matches its classical closed form"},
    {"E5", "V3 matches its classical closed form"},
};

CheckReport budget_stopped_report(const std::string& point, bool generic_point,
                                  const std::string& why) {
    CheckReport rep;
    rep.sa = "sa";
    rep.sb = "sb";
    rep.sc = "sc";
    rep.point = point;
    rep.realization = "symbolic";
    std::string note = "resource limit: " + why;
    for (const IdName& c : kTheoremChecks)
        rep.checks.push_back(verify_detail::skipped(c.id, c.name, note));
    rep.checks.push_back(verify_detail::skipped("T16", "orthocentre-start degeneracies",
                                                "requires the orthocentre start"));
    rep.checks.push_back(verify_detail::skipped("T17", "symmedian-start degeneracies",
                                                "requires the symmedian start"));
    rep.checks.push_back(verify_detail::skipped("T18", "symmedian-start polar incidences",
                                                "requires the symmedian start"));
    for (const IdName& c : kEquationChecks)
        rep.checks.push_back(verify_detail::skipped(
            c.id, c.name, generic_point ? "requires the centroid start" : note));
    return rep;
}

RatFunc lift(const Rat& q) {
    return RatFunc(Poly::constant(q.numerator()), Poly::constant(q.denominator()));
}

CommandResult verify_symbolic(const VerifyArgs& args) {
    Triangle<RatFunc> t(RatFunc::variable(0), RatFunc::variable(1), RatFunc::variable(2));
    std::string point_desc;
    Point<RatFunc> p = [&] {
        if (args.generic_point) {
            point_desc = "l,m,n";
            return Point<RatFunc>(RatFunc::variable(3), RatFunc::variable(4),
                                  RatFunc::variable(5));
        }
        Point<Rat> q = (args.point == "g") ? Point<Rat>(Rat(1), Rat(1), Rat(1))
                                           : parse_point(args.point);
        point_desc = q.x().json_str() + "," + q.y().json_str() + "," + q.z().json_str();
        return Point<RatFunc>(lift(q.x()), lift(q.y()), lift(q.z()));
    }();

    WorkBudgetScope scope(static_cast<std::uint64_t>(args.budget < 0 ? 0 : args.budget));
    try {
        auto c = run(t, p, RunOptions{args.allow_exterior});
        CheckReport rep = check_all(c);
        for (CheckRecord& r : check_equation_reproduction(c)) rep.checks.push_back(std::move(r));
        return result_from_report(rep);
    } catch (const BudgetError& e) {
        // The run itself can exhaust the budget before any check evaluates;
        // that is still a clean skip, never a hang and never a false residue.
        return result_from_report(budget_stopped_report(point_desc, args.generic_point, e.what()));
    }
}

CommandResult verify_numeric(const VerifyArgs& args) {
    Triangle<Rat> t = parse_triangle(args.triangle, args.sides);
    if (args.point == "h" || args.point == "k")
        throw InputError("the " + args.point +
                         " start degenerates; use the special command for it");
    Point<Rat> p = (args.point == "g") ? Point<Rat>(Rat(1), Rat(1), Rat(1))
                                       : parse_point(args.point);
    auto c = run(t, p, RunOptions{args.allow_exterior});
    CheckReport rep = check_all(c);
    return result_from_report(rep);
}

}  // namespace

Triangle<Rat> parse_triangle(const std::string& csv, bool sides) {
    auto parts = split_csv(csv);
    if (parts.size() != 3)
        throw InputError("triangle wants three comma-separated rationals, got '" + csv + "'");
    Rat sa = Rat::parse(parts[0]);
    Rat sb = Rat::parse(parts[1]);
    Rat sc = Rat::parse(parts[2]);
    if (sides) {
        sa *= sa;
        sb *= sb;
        sc *= sc;
    }
    return Triangle<Rat>(sa, sb, sc);
}

Point<Rat> parse_point(const std::string& csv) {
    auto parts = split_csv(csv);
    if (parts.size() != 3)
        throw InputError("point wants three comma-separated rationals, got '" + csv + "'");
    return Point<Rat>(Rat::parse(parts[0]), Rat::parse(parts[1]), Rat::parse(parts[2]));
}

CommandResult cmd_verify(const VerifyArgs& args) {
    return args.symbolic ? verify_symbolic(args) : verify_numeric(args);
}

CommandResult cmd_fuzz(const FuzzArgs& args) {
    if (args.count < 1) throw InputError("count must be at least 1");
    if (args.max_coord < 1) throw InputError("max-coord must be at least 1");
    const std::uint64_t m = static_cast<std::uint64_t>(args.max_coord);

    // mt19937_64 with modular reduction keeps the stream identical across
    // platforms (the distribution adapters in <random> are not portable).
    std::mt19937_64 rng(args.seed);
    auto draw = [&] { return Rat(static_cast<long long>(1 + rng() % m)); };

    json instances = json::array();
    int failed = 0;
    std::ostringstream human;
    for (int index = 0; index < args.count; ++index) {
        int attempts = 0;
        auto next_attempt = [&] {
            if (++attempts > 10000)
                throw InputError("rejection sampling exceeded 10000 attempts at instance " +
                                 std::to_string(index) + "; max-coord " +
                                 std::to_string(args.max_coord) + " leaves no valid inputs");
        };
        CheckReport rep;
        for (;;) {
            next_attempt();
            Rat sa = draw(), sb = draw(), sc = draw();
            try {
                Triangle<Rat> t(sa, sb, sc);
                Point<Rat> p(draw(), draw(), draw());
                StartKind kind = classify_start(t, p);
                if (kind == StartKind::OrthocentreDegenerate ||
                    kind == StartKind::SymmedianDegenerate)
                    continue;  // the degenerate starts have their own command
                rep = check_all(run_pipeline(t, p, kind));
                break;
            } catch (const InputError&) {
                continue;  // not a triangle (or right-angled): resample
            }
        }
        bool ok = rep.all_ok();
        if (!ok) ++failed;
        json inst{{"index", index},
                  {"sa", rep.sa},
                  {"sb", rep.sb},
                  {"sc", rep.sc},
                  {"point", rep.point},
                  {"pass", rep.count(CheckStatus::Pass)},
                  {"fail", rep.count(CheckStatus::Fail)},
                  {"skipped", rep.count(CheckStatus::Skipped)}};
        if (!ok) {
            json failures = json::array();
            for (const CheckRecord& r : rep.checks)
                if (r.status == CheckStatus::Fail)
                    failures.push_back({{"id", r.id}, {"name", r.name}, {"detail", r.detail}});
            inst["failures"] = failures;
            human << "instance " << index << " FAILED: (" << rep.sa << ", " << rep.sb << ", "
                  << rep.sc << "), point (" << rep.point << ")\n";
        }
        instances.push_back(std::move(inst));
    }

    json j{{"count", args.count},
           {"seed", args.seed},
           {"max_coord", args.max_coord},
           {"instances", std::move(instances)},
           {"summary", {{"instances", args.count}, {"passed", args.count - failed},
                        {"failed", failed}}}};
    CommandResult res;
    res.exit_code = failed ? 1 : 0;
    res.json = j.dump(2) + "\n";
    human << "fuzz: " << (args.count - failed) << "/" << args.count << " instances pass (seed "
          << args.seed << ", max coordinate " << args.max_coord << ")\n";
    res.human = human.str();
    return res;
}

CommandResult cmd_special(const SpecialArgs& args) {
    Triangle<Rat> t = parse_triangle(args.triangle, args.sides);
    CheckReport rep;
    if (args.which == "h") {
        rep = check_orthocentre_start(run_degenerate_h(t));
    } else if (args.which == "k") {
        if (symmedian(t) == orthocentre(t))
            throw InputError(
                "the symmedian point coincides with the orthocentre for this "
                "triangle (equilateral); use case h");
        rep = check_symmedian_start(run_degenerate_k(t));
    } else {
        throw InputError("case must be h or k, got '" + args.which + "'");
    }
    return result_from_report(rep);
}

CommandResult cmd_figure(const FigureArgs& args) {
    Triangle<Rat> t = parse_triangle(args.triangle, args.sides);
    if (args.size < 100 || args.size > 100000)
        throw InputError("size must be between 100 and 100000");

    Construction<Rat> c = [&] {
        if (args.point == "h") return run_degenerate_h(t);
        if (args.point == "k")
            return symmedian(t) == orthocentre(t) ? run_degenerate_h(t) : run_degenerate_k(t);
        Point<Rat> p = (args.point == "g") ? Point<Rat>(Rat(1), Rat(1), Rat(1))
                                           : parse_point(args.point);
        // A numeric point that happens to hit a degenerate centre still
        // deserves a picture; dispatch it to the matching pipeline.
        switch (classify_start(t, p)) {
            case StartKind::OrthocentreDegenerate: return run_degenerate_h(t);
            case StartKind::SymmedianDegenerate: return run_degenerate_k(t);
            default: return run(t, p);
        }
    }();

    Embedding e = Embedding::from_triangle(t);
    FigureOptions opt;
    opt.size = args.size;
    opt.labels = args.labels;
    RenderResult r = render(c, e, opt);

    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw InputError("cannot open output file '" + args.out + "'");
    out << r.svg;
    out.close();
    if (!out) throw InputError("failed writing output file '" + args.out + "'");

    json j{{"out", args.out},
           {"start", start_kind_name(c.kind)},
           {"circles", r.circles},
           {"lines", r.lines},
           {"labels", r.labels},
           {"degenerate_circles", r.degenerate_circles},
           {"max_residual", r.max_residual}};
    CommandResult res;
    res.json = j.dump(2) + "\n";
    std::ostringstream human;
    human << "wrote " << args.out << ": " << r.circles << " circle(s), " << r.lines
          << " line(s), " << r.labels << " label(s)";
    if (r.degenerate_circles) human << ", " << r.degenerate_circles << " degenerate";
    human << ", max residual " << r.max_residual << "\n";
    res.human = human.str();
    return res;
}

}  // namespace hagge
