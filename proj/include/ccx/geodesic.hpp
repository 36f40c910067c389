#pragma once

#include "ccx/cube_complex.hpp"

#include <string>
#include <vector>

namespace ccx {

/// A combinatorial geodesic segment b(0..T) starting at the basepoint.
/// Step i crosses exactly one hyperplane, and no hyperplane is crossed twice.
class GeodesicPath {
 public:
  static GeodesicPath make(const CubeComplex& cc, std::vector<VertexId> vertices,
                           std::string name = "b");

  const CubeComplex& complex() const { return *cc_; }
  const std::string& name() const { return name_; }
  int length() const { return static_cast<int>(vertices_.size()) - 1; }
  VertexId at(int t) const { return vertices_[static_cast<std::size_t>(t)]; }
  const std::vector<VertexId>& vertices() const { return vertices_; }

  /// Wall crossed between b(i) and b(i+1).
  HyperplaneId crossed(int i) const { return crossed_[static_cast<std::size_t>(i)]; }
  const std::vector<HyperplaneId>& crossed_hyperplanes() const { return crossed_; }

  /// Crossing parameter of step i: the index of the vertex just past the
  /// wall, i + 1.
  int crossing_param(int i) const { return i + 1; }

 private:
  GeodesicPath(const CubeComplex& cc, std::vector<VertexId> vertices,
               std::vector<HyperplaneId> crossed, std::string name)
      : cc_(&cc), vertices_(std::move(vertices)), crossed_(std::move(crossed)),
        name_(std::move(name)) {}

  const CubeComplex* cc_;
  std::vector<VertexId> vertices_;
  std::vector<HyperplaneId> crossed_;
  std::string name_;
};

/// Distances from every path vertex, plus per-vertex nearest-point data.
/// Shared by the contraction and hyperspace analyses.
class PathContext {
 public:
  PathContext(const CubeComplex& cc, const GeodesicPath& b);

  const GeodesicPath& path() const { return *b_; }
  int dist(int param, VertexId v) const {
    return table_[static_cast<std::size_t>(param) * nv_ + static_cast<std::size_t>(v)];
  }
  int dist_to_path(VertexId v) const { return dmin_[v]; }
  int proj_min(VertexId v) const { return pmin_[v]; }
  int proj_max(VertexId v) const { return pmax_[v]; }

  std::vector<int> projection_params(VertexId v) const;

 private:
  const GeodesicPath* b_;
  std::size_t nv_;
  std::vector<int> table_;
  std::vector<int> dmin_, pmin_, pmax_;
};

struct Projection {
  int param_min;
  int param_max;
  std::vector<VertexId> vertices;
  int diameter() const { return param_max - param_min; }
};

/// All path vertices at minimal distance from x with their parameter range.
Projection project_to_path(const CubeComplex& cc, const GeodesicPath& b, VertexId x);

}  // namespace ccx
