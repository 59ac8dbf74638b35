#include "segdepth/generators.hpp"

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "segdepth/errors.hpp"
#include "segdepth/hull.hpp"
#include "segdepth/lift.hpp"
#include "segdepth/predicates.hpp"

namespace segdepth {

namespace detail {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + salt * 0x9e3779b97f4a7c15ULL + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

namespace {

// mt19937_64 raw draws with hand-rolled rejection keep the bounded values
// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t k) {
    const std::uint64_t limit = k * (UINT64_MAX / k);
    for (;;) {
      std::uint64_t raw = eng_();
      if (raw < limit) return raw % k;
    }
  }

  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 eng_;
};

struct IntPoint {
  std::int64_t x = 0, y = 0;
};

PlanarPoint to_planar(const IntPoint& p) {
  return {rat_from_long(p.x), rat_from_long(p.y)};
}

// one candidate against the accepted prefix: distinct, no collinear triple,
// no cocircular quadruple
bool keeps_general(const std::vector<IntPoint>& pts, const IntPoint& c) {
  const int k = static_cast<int>(pts.size());
  for (const auto& p : pts) {
    if (p.x == c.x && p.y == c.y) return false;
  }
  const PlanarPoint pc = to_planar(c);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (orient2d(to_planar(pts[i]), to_planar(pts[j]), pc) == 0) return false;
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      for (int l = j + 1; l < k; ++l) {
        if (incircle(to_planar(pts[i]), to_planar(pts[j]), to_planar(pts[l]),
                     pc) == 0) {
          return false;
        }
      }
    }
  }
  return true;
}

constexpr int kPointRetries = 256;
constexpr int kSetRetries = 16;

PointSet sphere_attempt(int n, std::uint64_t seed, std::int64_t den) {
  // stereographic rational sphere points from integer parameters, snapped to
  // the 1/den grid
  constexpr std::int64_t q = 100;
  constexpr std::int64_t span = 3 * q;
  Rng rng(seed);
  std::vector<std::pair<std::int64_t, std::int64_t>> params;
  while (static_cast<int>(params.size()) < n) {
    std::pair<std::int64_t, std::int64_t> ij = {rng.in_range(-span, span),
                                                rng.in_range(-span, span)};
    bool dup = false;
    for (const auto& seen : params) dup |= seen == ij;
    if (!dup) params.push_back(ij);
  }
  const Int d(den);
  std::vector<Rat> coords;
  coords.reserve(3 * n);
  for (const auto& [i, j] : params) {
    const Int s = Int(i) * i + Int(j) * j + Int(q) * q;
    const Rat x = make_rat(Int(2 * i * q), s);
    const Rat y = make_rat(Int(2 * j * q), s);
    const Rat z = make_rat(Int(i) * i + Int(j) * j - Int(q) * q, s);
    coords.push_back(make_rat(round_scaled(x, d), d));
    coords.push_back(make_rat(round_scaled(y, d), d));
    coords.push_back(make_rat(round_scaled(z, d), d));
  }
  return PointSet::from_coords(3, std::move(coords));
}

struct ArcPoints {
  std::vector<Rat> coords;  // row-major 3D, 4m points: C_p, C_q, C_r, C_s
};

// the four arcs, exact before grid snapping
ArcPoints construction_arcs(int m) {
  // circle parameter t = tan(theta/2): (cos, sin) = ((1-t^2), 2t)/(1+t^2);
  // the x > 0.99 window is |t| < 1/sqrt(199) ~ 0.0709, points sit evenly at
  // t = (7/100)(2k+1-m)/(m+1)
  std::vector<Rat> ts;
  for (int k = 0; k < m; ++k) {
    ts.push_back(make_rat(Int(7) * (2 * k + 1 - m), Int(100) * (m + 1)));
  }
  const Int approx_den("1000000000");
  // 1/sqrt(2), used for both cos 45 and sin 45
  const Rat r45 = make_rat(isqrt_floor(approx_den * approx_den / 2), approx_den);
  // sqrt(3)/2 = sin 120
  const Rat s120 =
      make_rat(isqrt_floor(Int(3) * approx_den * approx_den), 2 * approx_den);
  const Rat half = make_rat(Int(1), Int(2));

  ArcPoints out;
  auto push = [&out](const Rat& x, const Rat& y, const Rat& z) {
    out.coords.push_back(x);
    out.coords.push_back(y);
    out.coords.push_back(z);
  };

  std::vector<SpatialPoint> cp;
  for (const Rat& t : ts) {
    const Rat den = Rat(1) + t * t;
    const Rat c = (Rat(1) - t * t) / den;  // cos
    const Rat s = (Rat(2) * t) / den;      // sin
    // arc at x ~ 1 in the xz-plane, tilted 45 degrees about the x axis
    cp.push_back({c, -s * r45, s * r45});
  }
  for (const auto& p : cp) push(p.x, p.y, p.z);
  for (const auto& p : cp) {  // 120 degrees about z
    push(-p.x * half - p.y * s120, p.x * s120 - p.y * half, p.z);
  }
  for (const auto& p : cp) {  // 240 degrees about z
    push(-p.x * half + p.y * s120, -p.x * s120 - p.y * half, p.z);
  }
  for (const Rat& t : ts) {  // polar arc at z ~ 1 in the xz-plane
    const Rat den = Rat(1) + t * t;
    push((Rat(2) * t) / den, Rat(0), (Rat(1) - t * t) / den);
  }
  return out;
}

// The hull must show each arc as a chain with its ends stitched to the
// neighbouring arcs. The full pattern (verified for m = 1..6 and forced to
// persist): each chain is a path; the first point of each tilted arc sees
// the whole next tilted arc cyclically (P0-allQ, Q0-allR, R0-allP); both
// tilted-arc far ends see the whole polar arc (Q_last-allS, R_last-allS);
// and the polar arc's ends close the figure (S0-allQ, S_last-allP,
// S_last-allR). That is exactly 12m-6 = 3n-6 edges, the full budget of a
// convex hull, so any deviation is a genuine structure loss.
std::set<std::pair<int, int>> predicted_structure(int m) {
  const int P = 0 * m, Q = 1 * m, R = 2 * m, S = 3 * m;
  std::set<std::pair<int, int>> e;
  auto add = [&e](int a, int b) { e.insert({std::min(a, b), std::max(a, b)}); };
  for (int c = 0; c < 4; ++c) {
    for (int k = 0; k + 1 < m; ++k) add(c * m + k, c * m + k + 1);
  }
  for (int k = 0; k < m; ++k) {
    add(P + 0, Q + k);
    add(Q + 0, R + k);
    add(R + 0, P + k);
    add(Q + m - 1, S + k);
    add(R + m - 1, S + k);
    add(S + 0, Q + k);
    add(S + m - 1, P + k);
    add(S + m - 1, R + k);
  }
  return e;
}

bool structure_matches(const HullGraph& h, int m) {
  std::set<std::pair<int, int>> edges;
  for (const auto& e : h.edges) edges.insert({e.u, e.v});
  return edges == predicted_structure(m);
}

PointSet construction_attempt(int m, std::uint64_t seed, std::int64_t den) {
  ArcPoints arcs = construction_arcs(m);
  const Int d(den);
  constexpr std::int64_t noise_span = 1 << 16;
  const Int full_den = d * (4 * noise_span);
  Rng rng(seed);
  std::vector<Rat> coords;
  coords.reserve(arcs.coords.size());
  for (const Rat& c : arcs.coords) {
    const Int snapped = round_scaled(c, d);
    const std::int64_t noise = rng.in_range(-noise_span, noise_span);
    coords.push_back(make_rat(snapped * (4 * noise_span) + noise, full_den));
  }
  return PointSet::from_coords(3, std::move(coords));
}

}  // namespace

const char* gen_kind_name(GenKind k) {
  switch (k) {
    case GenKind::random_planar:
      return "random-planar";
    case GenKind::lifted_random:
      return "lifted-random";
    case GenKind::sphere_convex:
      return "sphere-convex";
    case GenKind::paper_construction:
      return "paper-construction";
  }
  return "?";
}

GenKind gen_kind_from_name(const std::string& name) {
  for (GenKind k : {GenKind::random_planar, GenKind::lifted_random,
                    GenKind::sphere_convex, GenKind::paper_construction}) {
    if (name == gen_kind_name(k)) return k;
  }
  throw GeomError(ErrCode::bad_input, "unknown generator kind: " + name);
}

PointSet gen_random_planar(int n, std::uint64_t seed, std::int64_t grid) {
  if (n < 3) throw GeomError(ErrCode::bad_input, "planar generation needs n >= 3");
  if (grid < 8 * static_cast<std::int64_t>(n)) {
    throw GeomError(ErrCode::bad_input,
                    "grid too small for collision headroom (need >= 8n)");
  }
  Rng rng(seed);
  std::vector<IntPoint> pts;
  pts.reserve(n);
  while (static_cast<int>(pts.size()) < n) {
    bool placed = false;
    for (int attempt = 0; attempt < kPointRetries; ++attempt) {
      IntPoint c{rng.in_range(-grid, grid), rng.in_range(-grid, grid)};
      if (keeps_general(pts, c)) {
        pts.push_back(c);
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw GeomError(ErrCode::generation_exhausted,
                      "could not place point " + std::to_string(pts.size()) +
                          " in general position; enlarge the grid");
    }
  }
  std::vector<PlanarPoint> out;
  out.reserve(n);
  for (const auto& p : pts) out.push_back(to_planar(p));
  PointSet set = PointSet::planar(std::move(out));
  set.require_general_position();  // belt and braces: the draw was checked
  return set;
}

PointSet gen_convex_3d(int n, std::uint64_t seed, ConvexMode mode,
                       std::int64_t grid) {
  if (n < 4) throw GeomError(ErrCode::bad_input, "convex generation needs n >= 4");
  if (mode == ConvexMode::lifted) {
    PointSet flat = gen_random_planar(n, seed, grid);
    PointSet set = lift_set(flat).lifted;
    set.require_general_position();
    if (!check_convex_position(set).convex) {
      throw GeomError(ErrCode::generation_exhausted,
                      "lifted set left convex position");  // unreachable by convexity of the lift
    }
    return set;
  }
  for (int attempt = 0; attempt < kSetRetries; ++attempt) {
    try {
      PointSet set = sphere_attempt(n, detail::mix_seed(seed, attempt), grid);
      if (!check_general_position(set).general) continue;
      if (!check_convex_position(set).convex) continue;
      return set;
    } catch (const GeomError& e) {
      if (e.code() != ErrCode::bad_input) throw;  // duplicates after snapping
    }
  }
  throw GeomError(ErrCode::generation_exhausted,
                  "sphere points would not settle into convex position; "
                  "raise the grid denominator");
}

PointSet gen_paper_construction(int m, std::uint64_t seed, std::int64_t den) {
  if (m < 1) throw GeomError(ErrCode::bad_input, "construction needs m >= 1");
  if (den < 1000) {
    throw GeomError(ErrCode::bad_input, "construction grid denominator too coarse");
  }
  for (int attempt = 0; attempt < 8; ++attempt) {
    PointSet set = [&] {
      try {
        return construction_attempt(m, detail::mix_seed(seed, attempt), den);
      } catch (const GeomError&) {
        return PointSet::spatial({});  // marker, rejected below
      }
    }();
    if (set.size() != 4 * m) continue;
    if (!check_general_position(set).general) continue;
    if (!check_convex_position(set).convex) continue;
    HullGraph h = convex_hull_3d(set);
    if (!structure_matches(h, m)) continue;
    return set;
  }
  throw GeomError(ErrCode::structure_lost,
                  "the grid approximation lost the arc-chain hull structure; "
                  "raise the denominator");
}

PointSet generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::random_planar:
      return gen_random_planar(spec.count, spec.seed, spec.grid);
    case GenKind::lifted_random:
      return gen_convex_3d(spec.count, spec.seed, ConvexMode::lifted, spec.grid);
    case GenKind::sphere_convex:
      return gen_convex_3d(spec.count, spec.seed, ConvexMode::sphere, spec.grid);
    case GenKind::paper_construction:
      return gen_paper_construction(spec.count, spec.seed, spec.perturb_den);
  }
  throw GeomError(ErrCode::bad_input, "unknown generator kind");
}

}  // namespace segdepth
