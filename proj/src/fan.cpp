#include "hilbcover/fan.hpp"

#include <cmath>
#include <limits>

namespace hilbcover {

namespace {

struct TriFace {
  Vec a, b, c;
};

std::vector<TriFace> icosahedron_faces() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec> v;
  for (double s1 : {-1.0, 1.0})
    for (double s2 : {-phi, phi}) {
      v.push_back(Vec(0, s1, s2).normalized());
      v.push_back(Vec(s1, s2, 0).normalized());
      v.push_back(Vec(s2, 0, s1).normalized());
    }
  // faces = triples of mutually nearest vertices (edge length is the minimum
  // pairwise distance)
  double edge = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) edge = std::min(edge, (v[i] - v[j]).norm());
  std::vector<TriFace> faces;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      for (size_t k = j + 1; k < v.size(); ++k) {
        if ((v[i] - v[j]).norm() < edge * 1.1 && (v[j] - v[k]).norm() < edge * 1.1 &&
            (v[i] - v[k]).norm() < edge * 1.1)
          faces.push_back({v[i], v[j], v[k]});
      }
  return faces;  // 20 faces
}

void subdivide(std::vector<TriFace>& faces) {
  std::vector<TriFace> out;
  out.reserve(faces.size() * 4);
  for (const TriFace& f : faces) {
    Vec ab = (0.5 * (f.a + f.b)).normalized();
    Vec bc = (0.5 * (f.b + f.c)).normalized();
    Vec ca = (0.5 * (f.c + f.a)).normalized();
    out.push_back({f.a, ab, ca});
    out.push_back({ab, f.b, bc});
    out.push_back({ca, bc, f.c});
    out.push_back({ab, bc, ca});
  }
  faces.swap(out);
}

bool lex_positive(const Vec& v) {
  if (v.x() != 0) return v.x() > 0;
  if (v.y() != 0) return v.y() > 0;
  return v.z() > 0;
}

}  // namespace

DirectionFan make_fan(int dim, int n_dir) {
  DirectionFan fan;
  fan.dim = dim;
  if (dim == 1) {
    fan.dirs = {Vec(1, 0, 0), Vec(-1, 0, 0)};
    fan.opposite = {1, 0};
    return fan;
  }
  if (dim == 2) {
    int n = std::max(4, n_dir);
    if (n % 2) ++n;
    int half = n / 2;
    fan.dirs.resize(n);
    fan.opposite.resize(n);
    for (int k = 0; k < half; ++k) {
      double a = M_PI * k / half;
      fan.dirs[k] = Vec(std::cos(a), std::sin(a), 0);
      fan.dirs[k + half] = -fan.dirs[k];
      fan.opposite[k] = k + half;
      fan.opposite[k + half] = k;
    }
    return fan;
  }
  // 3D geodesic fan from face centers; keep one of each antipodal pair and
  // emit exact negations.
  std::vector<TriFace> faces = icosahedron_faces();
  int count = 20;
  while (count < n_dir) {
    subdivide(faces);
    count *= 4;
  }
  std::vector<Vec> half;
  for (const TriFace& f : faces) {
    Vec c = ((f.a + f.b + f.c) / 3.0).normalized();
    if (lex_positive(c)) half.push_back(c);
  }
  int h = static_cast<int>(half.size());
  fan.dirs.resize(2 * h);
  fan.opposite.resize(2 * h);
  for (int i = 0; i < h; ++i) {
    fan.dirs[i] = half[i];
    fan.dirs[i + h] = -half[i];
    fan.opposite[i] = i + h;
    fan.opposite[i + h] = i;
  }
  return fan;
}

}  // namespace hilbcover
