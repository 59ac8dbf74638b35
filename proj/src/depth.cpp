#include "segdepth/depth.hpp"

#include <algorithm>
#include <cassert>
#include <exception>
#include <utility>

#include "detail.hpp"
#include "segdepth/errors.hpp"
#include "segdepth/lift.hpp"
#include "segdepth/predicates.hpp"

namespace segdepth {

namespace {

void require_pairable(const PointSet& set, int dim) {
  if (set.dimension() != dim) {
    throw GeomError(ErrCode::bad_input,
                    dim == 3 ? "segment depth needs a 3d set"
                             : "circular depth needs a planar set");
  }
  if (set.size() < 3) {
    throw GeomError(ErrCode::bad_input, "depth needs at least three points");
  }
}

bool collinear3(const PointSet& s, int p, int q, int t) {
  const Int ux = s.scaled(q, 0) - s.scaled(p, 0);
  const Int uy = s.scaled(q, 1) - s.scaled(p, 1);
  const Int uz = s.scaled(q, 2) - s.scaled(p, 2);
  const Int vx = s.scaled(t, 0) - s.scaled(p, 0);
  const Int vy = s.scaled(t, 1) - s.scaled(p, 1);
  const Int vz = s.scaled(t, 2) - s.scaled(p, 2);
  return uy * vz == uz * vy && uz * vx == ux * vz && ux * vy == uy * vx;
}

[[noreturn]] void throw_axis_degeneracy(const PointSet& set, int p, int q, int a,
                                        int b) {
  // a zero sign around the axis pq: either some point sits on the line pq
  // itself, or the quadruple is honestly coplanar
  for (int t : {a, b}) {
    if (collinear3(set, p, q, t)) {
      throw GeomError(ErrCode::collinear_with_axis,
                      "point on the segment's line", {p, q, t});
    }
  }
  throw GeomError(ErrCode::degenerate_position, "coplanar quadruple", {p, q, a, b});
}

}  // namespace

std::int64_t DepthHistogram::total() const { return S.empty() ? 0 : S.back(); }

const DepthRecord& AllDepths::at(int p, int q) const {
  const int n = hist.n;
  if (p > q) std::swap(p, q);
  const std::size_t idx =
      static_cast<std::size_t>(p) * (2 * n - p - 1) / 2 + (q - p - 1);
  return records[idx];
}

DepthRecord segment_depth_bruteforce(const PointSet& set, int p, int q) {
  require_pairable(set, 3);
  detail::check_indices(set, {p, q});
  const int n = set.size();
  DepthRecord rec;
  rec.p = p;
  rec.q = q;
  rec.depth = n;  // above any possible value
  for (int r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    int pos = 0, neg = 0;
    for (int s = 0; s < n; ++s) {
      if (s == p || s == q || s == r) continue;
      const int o = orient3d(set, p, q, r, s);
      if (o == 0) throw_axis_degeneracy(set, p, q, r, s);
      (o > 0 ? pos : neg)++;
    }
    const int side = std::min(pos, neg);
    if (side < rec.depth) {
      rec.depth = side;
      rec.witness = r;
    }
  }
  return rec;
}

DepthRecord segment_depth_sweep(const PointSet& set, int p, int q) {
  require_pairable(set, 3);
  detail::check_indices(set, {p, q});
  const int n = set.size();
  const int m = n - 2;

  std::vector<int> others;
  others.reserve(m);
  for (int t = 0; t < n; ++t) {
    if (t != p && t != q) others.push_back(t);
  }
  const int r0 = others[0];

  // sign of each point against the reference plane (p,q,r0)
  std::vector<int> c0(n, 0);
  for (int t : others) {
    if (t == r0) continue;
    c0[t] = orient3d(set, p, q, r0, t);
    if (c0[t] == 0) throw_axis_degeneracy(set, p, q, r0, t);
  }

  // two events per point: its direction around the axis and the antipode
  struct Event {
    int t;
    int eps;  // +1 the point's own direction, -1 the antipode
  };
  std::vector<Event> ev;
  ev.reserve(2 * m);
  for (int t : others) {
    ev.push_back({t, +1});
    ev.push_back({t, -1});
  }

  auto half_of = [&](const Event& e) {
    if (e.t == r0) return e.eps > 0 ? 0 : 1;
    return e.eps * c0[e.t] > 0 ? 0 : 1;
  };
  std::sort(ev.begin(), ev.end(), [&](const Event& a, const Event& b) {
    const int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    if (a.t == b.t) return false;  // +t and -t always land in opposite halves
    const int sigma = a.eps * b.eps * orient3d(set, p, q, a.t, b.t);
    if (sigma == 0) throw_axis_degeneracy(set, p, q, a.t, b.t);
    return sigma > 0;
  });

  // Start just before the first event (the direction of r0, angle zero):
  // the open half-plane interval (0, pi) holds the strictly-positive points
  // plus r0 itself.
  int L = 1;
  for (int t : others) L += c0[t] > 0;
  const int start_L = L;

  DepthRecord rec;
  rec.p = p;
  rec.q = q;
  rec.depth = n;
  for (const Event& e : ev) {
    int on_plane_left;
    if (e.eps > 0) {
      on_plane_left = --L;  // the point leaves the left side as it is crossed
    } else {
      on_plane_left = L;  // the antipode: the point joins the left side after
      ++L;
    }
    const int side = std::min(on_plane_left, m - 1 - on_plane_left);
    if (side < rec.depth) {
      rec.depth = side;
      rec.witness = e.t;
    }
  }
  assert(L == start_L);  // each point leaves the left side once and rejoins once
  (void)start_L;
  return rec;
}

namespace {

DepthHistogram histogram_of(int n, const std::vector<DepthRecord>& records) {
  DepthHistogram h;
  h.n = n;
  h.s.assign((n - 2) / 2 + 1, 0);
  for (const auto& r : records) h.s[r.depth]++;
  h.S.resize(h.s.size());
  std::int64_t run = 0;
  for (std::size_t j = 0; j < h.s.size(); ++j) {
    run += h.s[j];
    h.S[j] = run;
  }
  return h;
}

std::size_t pair_slot(int n, int p, int q) {
  return static_cast<std::size_t>(p) * (2 * n - p - 1) / 2 + (q - p - 1);
}

}  // namespace

AllDepths all_segment_depths(const PointSet& set) {
  require_pairable(set, 3);
  const int n = set.size();
  AllDepths out;
  out.records.resize(static_cast<std::size_t>(n) * (n - 1) / 2);
  std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(dynamic, 1)
  for (int p = 0; p < n - 1; ++p) {
    bool skip = false;
#pragma omp critical(depth_failure)
    skip = failure != nullptr;
    if (skip) continue;
    try {
      for (int q = p + 1; q < n; ++q) {
        out.records[pair_slot(n, p, q)] = segment_depth_sweep(set, p, q);
      }
    } catch (...) {
#pragma omp critical(depth_failure)
      if (!failure) failure = std::current_exception();
    }
  }

  if (failure) std::rethrow_exception(failure);
  out.hist = histogram_of(n, out.records);
  return out;
}

AllDepths all_segment_depths_serial(const PointSet& set) {
  require_pairable(set, 3);
  const int n = set.size();
  AllDepths out;
  out.records.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n; ++q) {
      out.records.push_back(segment_depth_sweep(set, p, q));
    }
  }
  out.hist = histogram_of(n, out.records);
  return out;
}

DepthRecord max_depth_pair(const PointSet& set) {
  AllDepths all = all_segment_depths(set);
  const DepthRecord* best = &all.records.front();
  for (const auto& r : all.records) {
    if (r.depth > best->depth) best = &r;  // records are pair-lexicographic
  }
  return *best;
}

DepthRecord planar_pair_depth(const PointSet& set, int p, int q) {
  require_pairable(set, 2);
  detail::check_indices(set, {p, q});
  const int n = set.size();
  DepthRecord rec;
  rec.p = p;
  rec.q = q;
  rec.depth = n;
  for (int r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const SideCounts c = circle_side_counts(set, p, q, r);
    const int side = std::min(c.inside, c.outside);
    if (side < rec.depth) {
      rec.depth = side;
      rec.witness = r;
    }
  }
  return rec;
}

}  // namespace segdepth
