#ifndef HAGGE_DRIVER_HPP
#define HAGGE_DRIVER_HPP

#include <cstdint>
#include <string>

#include "hagge/areal.hpp"
#include "hagge/rational.hpp"

namespace hagge {

// Command implementations shared by the command-line tool and the language
// bindings. Each command returns its machine-readable JSON document, a short
// human-readable summary, and the process exit code: 0 all good, 1 at least
// one check failed, 2 invalid input (InputError propagates to the caller for
// that case).

struct CommandResult {
    int exit_code = 0;
    std::string json;
    std::string human;
};

struct VerifyArgs {
    std::string triangle = "4,5,6";  // squared side lengths, comma-separated
    std::string point = "1,1,1";     // areal coordinates, or a named point g
    bool sides = false;              // triangle given as side lengths instead
    bool symbolic = false;           // prove over the function field in sa, sb, sc
    bool generic_point = false;      // symbolic starting point (l, m, n) as well
    long long budget = 1000000;      // symbolic work budget; 0 = unlimited
    bool allow_exterior = false;     // probe starting points outside the triangle
};

struct FuzzArgs {
    int count = 100;
    std::uint64_t seed = 0;
    long long max_coord = 40;
};

struct SpecialArgs {
    std::string which = "h";  // h | k
    std::string triangle = "4,5,6";
    bool sides = false;
};

struct FigureArgs {
    std::string triangle = "4,5,6";
    std::string point = "1,1,1";  // numeric or named g | k | h
    std::string out = "fig.svg";
    int size = 800;
    bool labels = true;
    bool sides = false;
};

// Parses "sa,sb,sc" as positive rationals (squared side lengths); with
// sides=true the three values are side lengths and are squared first.
// Throws InputError on malformed input or an invalid triangle.
Triangle<Rat> parse_triangle(const std::string& csv, bool sides);

// Parses "x,y,z" as a rational areal triple. Throws InputError.
Point<Rat> parse_point(const std::string& csv);

CommandResult cmd_verify(const VerifyArgs& args);
CommandResult cmd_fuzz(const FuzzArgs& args);
CommandResult cmd_special(const SpecialArgs& args);
CommandResult cmd_figure(const FigureArgs& args);

}  // namespace hagge

#endif
