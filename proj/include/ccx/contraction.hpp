#pragma once

#include "ccx/geodesic.hpp"
#include "ccx/kappa.hpp"
#include "ccx/separation.hpp"

#include <limits>
#include <optional>
#include <vector>

namespace ccx {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct ProfileOptions {
  std::size_t sample_budget = 2000;  // x samples when the complex is large
  std::uint64_t seed = 9001;
  std::size_t exhaustive_limit = 2000;  // all vertices at or below this size
};

struct ContractionSample {
  VertexId x;
  int norm_x;         // d(basepoint, x)
  int dist_to_path;   // d(x, b)
  int proj_diameter;  // max over admissible y of diam(proj(x) ∪ proj(y))
  double ratio_norm;  // proj_diameter / kappa(norm_x)
  double ratio_proj;  // proj_diameter / kappa(min proj param of x)
};

struct ContractionProfile {
  std::vector<ContractionSample> samples;
  std::size_t skipped_on_path = 0;
  double constant_norm = 0.0;  // max ratio_norm
  double constant_proj = 0.0;  // max ratio_proj
};

/// Empirical contraction constants: for sampled x and every y with
/// d(x,y) <= d(x,b), the diameter of proj(x) ∪ proj(y) against the gauge.
/// The y side is exhausted for each sampled x.
ContractionProfile contraction_profile(const CubeComplex& cc, const GeodesicPath& b,
                                       const KappaFunction& kappa,
                                       const ProfileOptions& options = {});

struct SlimnessSample {
  VertexId x;
  int param;       // path parameter entering the kappa argument
  int raw;         // distance to the relevant interval(s)
  double ratio;
};

struct SlimnessProfile {
  int condition;
  std::vector<SlimnessSample> samples;
  double constant = 0.0;
};

/// Empirical constant for one of the four slimness conditions (1..4).
/// Projection points are replaced by the full nearest set: distances from it
/// are maximized over the set, kappa arguments use its minimum parameter.
SlimnessProfile slimness_profile(const CubeComplex& cc, const GeodesicPath& b,
                                 const KappaFunction& kappa, int condition,
                                 const ProfileOptions& options = {});

struct DivergenceRow {
  int t;
  int radius;    // ceil(r * kappa(t))
  double rho;    // detour length or infinity
  double ratio;  // rho / kappa(t)
};

struct DivergenceCurve {
  double r;
  std::vector<DivergenceRow> rows;
  std::size_t admissible = 0;
  double divergence = kInf;  // min ratio over admissible t; inf when none finite
};

/// Lengths of shortest detours around the open ball of radius ceil(r*kappa(t))
/// at b(t), for every admissible integer t.
DivergenceCurve lower_divergence(const CubeComplex& cc, const GeodesicPath& b, double r,
                                 const KappaFunction& kappa);

/// Walls crossed by b on [s,t] whose carrier projects entirely inside [s,t].
std::vector<HyperplaneId> hyperplanes_projecting_inside(const CubeComplex& cc,
                                                        const GeodesicPath& b, int s, int t);

struct ExcursionLink {
  int step;      // index into the crossed-wall list
  int param;     // crossing parameter
  HyperplaneId hyperplane;
};

struct ExcursionResult {
  bool feasible = false;
  bool exact = true;  // false when a well-separation budget ran out on a needed pair
  std::vector<ExcursionLink> witness;  // fewest-links chain when feasible
};

/// Chain search for the excursion conditions at constant c: consecutive
/// crossing parameters within c*kappa(t_next) and consecutive pairs
/// c*kappa(t_next)-well-separated, anchored near both ends of the segment.
ExcursionResult excursion_detect(const CubeComplex& cc, const GeodesicPath& b,
                                 const KappaFunction& kappa, double c, SeparationContext& ctx);

struct ExcursionConstant {
  std::optional<double> c;  // smallest feasible grid value
  bool exact = true;
  std::vector<ExcursionLink> witness;
  double grid_max = 0.0;
};

ExcursionConstant excursion_constant(const CubeComplex& cc, const GeodesicPath& b,
                                     const KappaFunction& kappa, const std::vector<double>& c_grid,
                                     SeparationContext& ctx);

}  // namespace ccx
