#pragma once

#include <vector>

#include "maxcross/maxcross.hpp"
#include "oracles.hpp"

namespace support {

inline std::vector<oracle::Pair> pairs(const maxcross::RegularGraph& g) {
  std::vector<oracle::Pair> out;
  for (const maxcross::Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

// Integer coordinates of a drawing whose points are all integral.
inline std::vector<oracle::IPoint> ipoints(const maxcross::GeometricDrawing& drawing) {
  std::vector<oracle::IPoint> out;
  for (const maxcross::Point& p : drawing.positions)
    out.push_back({static_cast<std::int64_t>(boost::multiprecision::numerator(p.x)),
                   static_cast<std::int64_t>(boost::multiprecision::numerator(p.y))});
  return out;
}

inline std::int64_t oracle_crossings(const maxcross::GeometricDrawing& drawing) {
  return oracle::integer_crossings(ipoints(drawing), pairs(drawing.graph));
}

}  // namespace support
