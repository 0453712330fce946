#pragma once

#include <string>
#include <string_view>

#include "geodetic/graph.hpp"

namespace geodetic {

struct Graph6Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Standard graph6: 6-bit groups biased by 63, upper triangle column by
// column. Short form for n <= 62, the '~'-prefixed long form up to 258047.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

}  // namespace geodetic
