#pragma once

#include <cstdint>

#include "segdepth/points.hpp"

namespace segdepth {

enum class GenKind {
  random_planar,       // uniform integer points in a square
  lifted_random,       // paraboloid lift of random_planar
  sphere_convex,       // rational sphere points rounded to a grid
  paper_construction,  // the four-arc extremal configuration
};

const char* gen_kind_name(GenKind k);
GenKind gen_kind_from_name(const std::string& name);

/// Everything that determines a generated set; equal specs give
/// bit-for-bit identical output.
struct GenSpec {
  GenKind kind = GenKind::random_planar;
  int count = 0;  // n, except for the construction where it is m (n = 4m)
  std::uint64_t seed = 0;
  std::int64_t grid = 1'000'000;         // coordinate bound / grid denominator
  std::int64_t perturb_den = 1'000'000;  // construction grid denominator
};

PointSet generate(const GenSpec& spec);

/// n distinct integer points in [-grid, grid]^2, redrawn point by point until
/// no three are collinear and no four cocircular. grid must leave collision
/// headroom (>= 8n).
PointSet gen_random_planar(int n, std::uint64_t seed, std::int64_t grid);

enum class ConvexMode { lifted, sphere };

/// n points in convex position: either the lift of a random planar set or
/// rational near-sphere points on a 1/grid grid, retried whole until both
/// general and convex position verify.
PointSet gen_convex_3d(int n, std::uint64_t seed, ConvexMode mode,
                       std::int64_t grid = 1'000'000);

/// The four-arc configuration with n = 4m points: three 45-degree-tilted
/// copies of a short circular arc spaced 120 degrees apart plus one polar
/// arc, snapped to a 1/den grid and jittered by seeded noise below the grid
/// step. The hull must keep the arcs' chain structure; if the approximation
/// loses it the error says to raise den.
PointSet gen_paper_construction(int m, std::uint64_t seed,
                                std::int64_t den = 1'000'000);

namespace detail {
/// splitmix64 step, used to derive per-attempt sub-seeds
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);
}  // namespace detail

}  // namespace segdepth
