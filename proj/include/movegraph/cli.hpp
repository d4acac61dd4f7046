#pragma once

#include <iosfwd>
#include <string>

#include "movegraph/mover.hpp"
#include "movegraph/square.hpp"

namespace mg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalError = 3;

int cmd_replay(const std::string& scene_path, const std::string& events_path,
               const std::string& out_path, std::ostream& err);

/// Prints `none` or `entry=<i> kind=<node|connection> id=<n>`.
int cmd_hit(const std::string& scene_path, Pt p, MouseButton button, std::ostream& out,
            std::ostream& err);

/// Fraction of strictly interior integer points of a size x size square at the
/// origin that a press would catch.
double coverage_fraction(SquareObj::Kind kind, int size);
int cmd_coverage(SquareObj::Kind kind, int size, std::ostream& out, std::ostream& err);

/// One `seg x1 y1 x2 y2` line per connection and one
/// `node x y <square|circle> <size> <clear|fill>` line per visible node,
/// entries in painting order.
int cmd_contours(const std::string& scene_path, std::ostream& out, std::ostream& err);

/// Entry point shared by the executable and tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mg::cli
