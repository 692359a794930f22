#include "contin/io_json.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace contin {

std::string format_double(double v) {
    if (std::isnan(v)) return "null";
    if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void JsonWriter::comma() {
    if (!need_comma_.empty() && need_comma_.back() && !after_key_)
        out_ += ',';
    if (!need_comma_.empty() && !after_key_) need_comma_.back() = true;
    after_key_ = false;
}

void JsonWriter::begin_object() {
    comma();
    out_ += '{';
    need_comma_.push_back(false);
}

void JsonWriter::end_object() {
    out_ += '}';
    need_comma_.pop_back();
}

void JsonWriter::begin_array() {
    comma();
    out_ += '[';
    need_comma_.push_back(false);
}

void JsonWriter::end_array() {
    out_ += ']';
    need_comma_.pop_back();
}

void JsonWriter::key(const std::string& k) {
    comma();
    out_ += '"';
    out_ += k;
    out_ += "\":";
    after_key_ = true;
}

void JsonWriter::value_number(double v) {
    comma();
    out_ += format_double(v);
}

void JsonWriter::value_int(long long v) {
    comma();
    out_ += std::to_string(v);
}

void JsonWriter::value_string(const std::string& s) {
    comma();
    out_ += '"';
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out_ += '\\';
        out_ += ch;
    }
    out_ += '"';
}

void JsonWriter::value_bool(bool b) {
    comma();
    out_ += b ? "true" : "false";
}

void JsonWriter::value_null() {
    comma();
    out_ += "null";
}

void JsonWriter::value_complex(Cx v) {
    begin_array();
    value_number(v.real());
    value_number(v.imag());
    end_array();
}

namespace {

using nlohmann::json;

Cx complex_from(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
        !j[1].is_number())
        throw Error(ErrorCode::DomainViolation,
                    std::string(what) + " must be a [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw Error(ErrorCode::DomainViolation, "malformed JSON input");
    return j;
}

void write_germ(JsonWriter& w, const Germ& g) {
    w.begin_object();
    w.key("center");
    w.value_complex(g.center);
    w.key("coeffs");
    w.begin_array();
    for (Cx c : g.coeffs) w.value_complex(c);
    w.end_array();
    w.key("radius_hint");
    if (g.radius_hint)
        w.value_number(*g.radius_hint);
    else
        w.value_null();
    w.end_object();
}

}  // namespace

std::string germ_to_json(const Germ& g) {
    JsonWriter w;
    write_germ(w, g);
    return w.take();
}

Germ germ_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("center") || !j.contains("coeffs"))
        throw Error(ErrorCode::DomainViolation,
                    "germ JSON needs center and coeffs");
    Germ g;
    g.center = complex_from(j["center"], "center");
    for (const auto& c : j["coeffs"]) g.coeffs.push_back(complex_from(c, "coeff"));
    if (g.coeffs.empty())
        throw Error(ErrorCode::DomainViolation, "germ JSON has no coefficients");
    if (j.contains("radius_hint") && !j["radius_hint"].is_null()) {
        if (!j["radius_hint"].is_number())
            throw Error(ErrorCode::DomainViolation, "radius_hint must be a number");
        g.radius_hint = j["radius_hint"].get<double>();
    }
    return g;
}

std::string path_to_json(const PathSpec& p) {
    JsonWriter w;
    w.begin_object();
    w.key("segments");
    w.begin_array();
    for (const PathSegment& seg : p.segments) {
        w.begin_object();
        if (auto* l = std::get_if<LineSegment>(&seg)) {
            w.key("line");
            w.begin_object();
            w.key("from");
            w.value_complex(l->from);
            w.key("to");
            w.value_complex(l->to);
            w.end_object();
        } else {
            const auto& a = std::get<ArcSegment>(seg);
            w.key("arc");
            w.begin_object();
            w.key("center");
            w.value_complex(a.center);
            w.key("radius");
            w.value_number(a.radius);
            w.key("from_angle");
            w.value_number(a.from_angle);
            w.key("to_angle");
            w.value_number(a.to_angle);
            w.end_object();
        }
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.take();
}

PathSpec path_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("segments") || !j["segments"].is_array())
        throw Error(ErrorCode::DomainViolation, "path JSON needs segments");
    PathSpec p;
    for (const auto& seg : j["segments"]) {
        if (seg.contains("line")) {
            const auto& l = seg["line"];
            p.segments.push_back(LineSegment{complex_from(l["from"], "from"),
                                             complex_from(l["to"], "to")});
        } else if (seg.contains("arc")) {
            const auto& a = seg["arc"];
            for (const char* f : {"radius", "from_angle", "to_angle"})
                if (!a.contains(f) || !a[f].is_number())
                    throw Error(ErrorCode::DomainViolation,
                                std::string("arc needs numeric ") + f);
            p.segments.push_back(ArcSegment{complex_from(a["center"], "center"),
                                            a["radius"].get<double>(),
                                            a["from_angle"].get<double>(),
                                            a["to_angle"].get<double>()});
        } else {
            throw Error(ErrorCode::DomainViolation,
                        "path segment must be line or arc");
        }
    }
    if (p.segments.empty())
        throw Error(ErrorCode::DomainViolation, "path JSON has no segments");
    return p;
}

namespace {

void write_trace(JsonWriter& w, const ContinuationTrace& t) {
    w.begin_object();
    w.key("status");
    w.value_string(t.status == TraceStatus::Completed ? "completed" : "stalled");
    w.key("stall_point");
    if (t.stall_point)
        w.value_complex(*t.stall_point);
    else
        w.value_null();
    w.key("step_points");
    w.begin_array();
    for (Cx p : t.step_points) w.value_complex(p);
    w.end_array();
    w.key("germs");
    w.begin_array();
    for (const Germ& g : t.germs) write_germ(w, g);
    w.end_array();
    w.end_object();
}

}  // namespace

std::string trace_to_json(const ContinuationTrace& t) {
    JsonWriter w;
    write_trace(w, t);
    return w.take();
}

std::string monodromy_to_json(const MonodromyReport& r) {
    JsonWriter w;
    w.begin_object();
    w.key("classification");
    w.value_string(r.classification);
    w.key("distance_to_initial");
    w.value_number(r.distance_to_initial);
    w.key("distance_to_negated_initial");
    w.value_number(r.distance_to_negated_initial);
    w.key("trace");
    write_trace(w, r.trace);
    w.end_object();
    return w.take();
}

}  // namespace contin
