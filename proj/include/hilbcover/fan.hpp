#pragma once

#include <vector>

#include "hilbcover/geometry.hpp"

namespace hilbcover {

// A centrally symmetric family of unit directions with exact antipode pairing:
// dirs[opposite[i]] == -dirs[i] bit for bit.
struct DirectionFan {
  int dim = 0;
  std::vector<Vec> dirs;
  std::vector<int> opposite;

  int size() const { return static_cast<int>(dirs.size()); }
};

// 1D: {e1,-e1}. 2D: n_dir equally spaced (rounded up to even). 3D: geodesic
// sphere (subdivided icosahedron face centers), rounded up to the nearest
// 20*4^k >= n_dir.
DirectionFan make_fan(int dim, int n_dir);

}  // namespace hilbcover
