#pragma once

#include <string>
#include <vector>

#include "twobridge/pretzel.hpp"
#include "twobridge/surface.hpp"
#include "twobridge/tree.hpp"

namespace twobridge {

/// Pretty-printed JSON, newline-terminated, with stable field names and
/// deterministic (sorted) key order.
std::string surface_to_json(const Surface& s);
std::string surfaces_to_json(const std::vector<Surface>& list);
std::string tree_to_json(const BasicTree& t);
std::string pretzel_table_to_json(const std::vector<PretzelSurfaceRecord>& table);
std::string crosscheck_to_json(const CrosscheckReport& report);

}  // namespace twobridge
