#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hagge/driver.hpp"
#include "hagge/error.hpp"

namespace {

void emit(const hagge::CommandResult& res, bool verbose) {
    std::cout << res.json;
    if (verbose) std::cerr << res.human;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact areal-coordinate verifier for the eight-circle orthocentre construction"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("--verbose", verbose, "human-readable summary on standard error");

    hagge::VerifyArgs vargs;
    CLI::App* verify = app.add_subcommand(
        "verify", "run the checklist on one instance (exact rational or symbolic)");
    verify->fallthrough();
    verify->add_option("--triangle", vargs.triangle, "squared side lengths sa,sb,sc")
        ->capture_default_str();
    verify->add_option("--point", vargs.point, "starting point x,y,z or the named point g")
        ->capture_default_str();
    verify->add_flag("--sides", vargs.sides, "triangle given as side lengths, squared internally");
    verify->add_flag("--symbolic", vargs.symbolic,
                     "prove over the function field in sa, sb, sc instead of one instance");
    verify->add_flag("--generic-point", vargs.generic_point,
                     "with --symbolic: leave the starting point as indeterminates l,m,n");
    verify->add_option("--budget", vargs.budget,
                       "symbolic work budget in monomial operations; 0 for unlimited")
        ->capture_default_str();
    verify->add_flag("--allow-exterior", vargs.allow_exterior,
                     "probe a starting point outside the triangle (nothing is claimed there)");

    hagge::FuzzArgs fargs;
    CLI::App* fuzz = app.add_subcommand("fuzz", "verify randomly sampled instances");
    fuzz->fallthrough();
    fuzz->add_option("--count", fargs.count, "number of instances")->capture_default_str();
    fuzz->add_option("--seed", fargs.seed, "random seed")->capture_default_str();
    fuzz->add_option("--max-coord", fargs.max_coord, "coordinates sampled from [1, max]")
        ->capture_default_str();

    hagge::SpecialArgs sargs;
    CLI::App* special = app.add_subcommand("special", "degenerate starting points");
    special->fallthrough();
    special->add_option("--case", sargs.which, "h (orthocentre) or k (symmedian point)")
        ->capture_default_str();
    special->add_option("--triangle", sargs.triangle, "squared side lengths sa,sb,sc")
        ->capture_default_str();
    special->add_flag("--sides", sargs.sides, "triangle given as side lengths");

    hagge::FigureArgs gargs;
    std::string labels = "on";
    CLI::App* figure = app.add_subcommand("figure", "render the construction as an SVG");
    figure->fallthrough();
    figure->add_option("--triangle", gargs.triangle, "squared side lengths sa,sb,sc")
        ->capture_default_str();
    figure->add_option("--point", gargs.point, "starting point x,y,z or named g|k|h")
        ->capture_default_str();
    figure->add_option("--out", gargs.out, "output file")->capture_default_str();
    figure->add_option("--size", gargs.size, "canvas size in pixels")->capture_default_str();
    figure->add_option("--labels", labels, "point labels: on or off")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    figure->add_flag("--sides", gargs.sides, "triangle given as side lengths");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems are input errors
    }

    try {
        if (*verify) {
            hagge::CommandResult res = hagge::cmd_verify(vargs);
            emit(res, verbose);
            return res.exit_code;
        }
        if (*fuzz) {
            hagge::CommandResult res = hagge::cmd_fuzz(fargs);
            emit(res, verbose);
            return res.exit_code;
        }
        if (*special) {
            hagge::CommandResult res = hagge::cmd_special(sargs);
            emit(res, verbose);
            return res.exit_code;
        }
        if (*figure) {
            gargs.labels = (labels == "on");
            hagge::CommandResult res = hagge::cmd_figure(gargs);
            emit(res, verbose);
            return res.exit_code;
        }
    } catch (const hagge::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const hagge::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
