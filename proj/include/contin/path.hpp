#pragma once

#include <variant>
#include <vector>

#include "contin/types.hpp"

namespace contin {

struct LineSegment {
    Cx from;
    Cx to;
};

struct ArcSegment {
    Cx center;
    double radius = 0.0;
    double from_angle = 0.0;
    double to_angle = 0.0;
};

using PathSegment = std::variant<LineSegment, ArcSegment>;

struct PathSpec {
    std::vector<PathSegment> segments;
};

Cx path_start(const PathSpec& p);
Cx path_end(const PathSpec& p);
bool path_closed(const PathSpec& p, double tol = 1e-12);

// Validates segment contiguity (1e-12) and flattens to a polyline.  Lines
// contribute their endpoints; arcs are sampled at angle increments <= 0.05.
std::vector<Cx> sample_path(const PathSpec& p);

// "line:a,b:c,d" or "arc:cx,cy,r,a0,a1", segments joined with ';'
PathSpec parse_path_string(const std::string& text);

// stem from `center` to the circle, `turns` times around, stem back.  For a
// center already on the unit circle the stems vanish and it is a plain arc.
PathSpec unit_circle_loop(Cx center, int turns, bool counterclockwise = true);

}  // namespace contin
