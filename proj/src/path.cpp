#include "contin/path.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace contin {

namespace {

Cx segment_start(const PathSegment& s) {
    if (auto* l = std::get_if<LineSegment>(&s)) return l->from;
    const auto& a = std::get<ArcSegment>(s);
    return a.center + a.radius * std::polar(1.0, a.from_angle);
}

Cx segment_end(const PathSegment& s) {
    if (auto* l = std::get_if<LineSegment>(&s)) return l->to;
    const auto& a = std::get<ArcSegment>(s);
    return a.center + a.radius * std::polar(1.0, a.to_angle);
}

}  // namespace

Cx path_start(const PathSpec& p) {
    if (p.segments.empty())
        throw Error(ErrorCode::InvariantViolation, "empty path");
    return segment_start(p.segments.front());
}

Cx path_end(const PathSpec& p) {
    if (p.segments.empty())
        throw Error(ErrorCode::InvariantViolation, "empty path");
    return segment_end(p.segments.back());
}

bool path_closed(const PathSpec& p, double tol) {
    return std::abs(path_end(p) - path_start(p)) <= tol;
}

std::vector<Cx> sample_path(const PathSpec& p) {
    if (p.segments.empty())
        throw Error(ErrorCode::InvariantViolation, "empty path");
    std::vector<Cx> out;
    out.push_back(path_start(p));
    Cx cursor = out.front();
    for (const PathSegment& seg : p.segments) {
        if (std::abs(segment_start(seg) - cursor) > 1e-12)
            throw Error(ErrorCode::InvariantViolation,
                        "path segments are not contiguous");
        if (auto* l = std::get_if<LineSegment>(&seg)) {
            out.push_back(l->to);
        } else {
            const auto& a = std::get<ArcSegment>(seg);
            double sweep = a.to_angle - a.from_angle;
            int n = std::max(1, static_cast<int>(std::ceil(std::abs(sweep) / 0.05)));
            for (int k = 1; k <= n; ++k) {
                double ang = a.from_angle + sweep * k / n;
                out.push_back(a.center + a.radius * std::polar(1.0, ang));
            }
        }
        cursor = segment_end(seg);
    }
    return out;
}

namespace {

std::vector<double> parse_numbers(const std::string& body, std::size_t want,
                                  const std::string& what) {
    std::vector<double> vals;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        double v = std::strtod(item.c_str(), &end);
        if (end == item.c_str() || *end != '\0')
            throw Error(ErrorCode::DomainViolation,
                        "bad number '" + item + "' in " + what);
        vals.push_back(v);
    }
    if (vals.size() != want)
        throw Error(ErrorCode::DomainViolation,
                    what + " expects " + std::to_string(want) + " numbers");
    return vals;
}

}  // namespace

PathSpec parse_path_string(const std::string& text) {
    PathSpec p;
    std::stringstream ss(text);
    std::string seg;
    while (std::getline(ss, seg, ';')) {
        if (seg.empty()) continue;
        auto colon = seg.find(':');
        std::string kind = seg.substr(0, colon);
        std::string body = colon == std::string::npos ? "" : seg.substr(colon + 1);
        for (char& ch : body)
            if (ch == ':') ch = ',';
        if (kind == "line") {
            auto v = parse_numbers(body, 4, "line segment");
            p.segments.push_back(LineSegment{{v[0], v[1]}, {v[2], v[3]}});
        } else if (kind == "arc") {
            auto v = parse_numbers(body, 5, "arc segment");
            p.segments.push_back(ArcSegment{{v[0], v[1]}, v[2], v[3], v[4]});
        } else {
            throw Error(ErrorCode::DomainViolation,
                        "unknown path segment kind '" + kind + "'");
        }
    }
    if (p.segments.empty())
        throw Error(ErrorCode::DomainViolation, "empty path string");
    return p;
}

PathSpec unit_circle_loop(Cx center, int turns, bool counterclockwise) {
    if (turns < 1)
        throw Error(ErrorCode::DomainViolation, "turns must be >= 1");
    PathSpec p;
    Cx anchor = std::abs(center) > 0.0 ? center / std::abs(center) : Cx(1.0);
    double a0 = std::arg(anchor);
    double sweep = 2.0 * kPi * turns * (counterclockwise ? 1.0 : -1.0);
    bool on_circle = std::abs(std::abs(center) - 1.0) <= 1e-12;
    if (!on_circle) p.segments.push_back(LineSegment{center, anchor});
    p.segments.push_back(ArcSegment{0.0, 1.0, a0, a0 + sweep});
    if (!on_circle) p.segments.push_back(LineSegment{anchor, center});
    return p;
}

}  // namespace contin
