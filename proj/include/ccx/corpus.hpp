#pragma once

#include "ccx/cube_complex.hpp"
#include "ccx/geodesic.hpp"

#include <map>
#include <string>
#include <vector>

namespace ccx {

/// A complex plus its distinguished geodesics, as stored on disk.
struct NamedComplex {
  std::string name;
  CubeComplex complex;
  std::map<std::string, std::vector<VertexId>> paths;

  GeodesicPath geodesic(const std::string& path_name) const;
};

/// Quadrant grid [0,N]^2 with "diagonal" (staircase) and "axis" geodesics.
NamedComplex gen_grid(int n);

/// Rooted tree, root of the given valence, depth D, with the "radial" geodesic
/// from the root to the first deepest leaf. Valence 4 is the F2 Cayley ball.
NamedComplex gen_tree_ball(int valence, int depth);

/// Product of the valence-4 tree ball of radius D with a segment of length L,
/// with the "vertical" geodesic over the root.
NamedComplex gen_ball_times_segment(int d, int l);

/// Union of bands (binary tree of depth n) x (segment of length 2^n) for
/// n = 0..N, consecutive bands glued along tree inclusions, with the bottom
/// geodesic "b" of length 2^(N+1)-1.
NamedComplex gen_example42(int n);

NamedComplex load_complex(const std::string& path);
void save_complex(const NamedComplex& nc, const std::string& path);

std::string complex_to_json(const NamedComplex& nc);
NamedComplex complex_from_json(const std::string& text);

}  // namespace ccx
