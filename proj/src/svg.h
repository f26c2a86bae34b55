#pragma once

#include "path.h"

#include <optional>
#include <string>

namespace rp {

// polygon, SP(s,t) with eaves highlighted, one group per mirror layer, and
// the path if there is one
std::string render_svg(const Region& region, const MirrorSystem& sys, const std::optional<ReflectionPath>& path);

}  // namespace rp
