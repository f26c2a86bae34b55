#pragma once

#include "instance.h"

#include <string>

namespace rp::test {

inline Instance fixture(const std::string& name)
{
    return load_instance(std::string(REFLECTPATH_FIXTURE_DIR) + "/" + name + ".poly.json");
}

inline Point P(const char* x, const char* y) { return Point(parse_scalar(x), parse_scalar(y)); }

}  // namespace rp::test
