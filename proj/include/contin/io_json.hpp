#pragma once

#include <string>
#include <vector>

#include "contin/continuation.hpp"
#include "contin/germ.hpp"
#include "contin/path.hpp"

namespace contin {

// Minimal JSON writer emitting floats as %.17g so output is byte-stable and
// round-trips exactly.  (General-purpose writers pick shortest-roundtrip
// formatting, which is not the fixed format the output contract wants.)
class JsonWriter {
  public:
    std::string take() { return std::move(out_); }

    void begin_object();
    void end_object();
    void begin_array();
    void end_array();
    void key(const std::string& k);
    void value_number(double v);
    void value_int(long long v);
    void value_string(const std::string& s);
    void value_bool(bool b);
    void value_null();
    void value_complex(Cx v); // [re, im]

  private:
    void comma();
    std::string out_;
    std::vector<bool> need_comma_;
    bool after_key_ = false;
};

std::string format_double(double v); // %.17g

std::string germ_to_json(const Germ& g);
Germ germ_from_json(const std::string& text);

std::string path_to_json(const PathSpec& p);
PathSpec path_from_json(const std::string& text);

std::string trace_to_json(const ContinuationTrace& t);
std::string monodromy_to_json(const MonodromyReport& r);

}  // namespace contin
