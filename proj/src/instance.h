#pragma once

#include "polygon.h"

#include <stdexcept>
#include <string>

namespace rp {

struct Instance {
    std::string name;
    Polygon polygon;
    Point source;  // s
    Point target;  // t
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, size_t line, size_t column)
        : std::runtime_error(msg), line(line), column(column) {}
    size_t line, column;
};

class InvalidInstance : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Throws ParseError for malformed text, InvalidInstance when the polygon or
// endpoints violate the instance invariants.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

// polygon validity plus s,t in the closure and s != t
ValidationReport validate_instance(const Instance& inst);

}  // namespace rp
