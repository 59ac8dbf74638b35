#include "segdepth/hull.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <sstream>
#include <utility>

#include "segdepth/depth.hpp"
#include "segdepth/errors.hpp"
#include "segdepth/predicates.hpp"

namespace segdepth {

namespace {

struct Builder {
  const PointSet& set;
  std::vector<HullFacet> facets;
  std::vector<char> alive;
  // per-insertion scratch, indexed by vertex
  std::vector<int> start_of, end_at;

  explicit Builder(const PointSet& s) : set(s) {
    start_of.assign(s.size(), -1);
    end_at.assign(s.size(), -1);
  }

  int side(const HullFacet& f, int x) const {
    const int o = orient3d(set, f.a, f.b, f.c, x);
    if (o == 0) {
      throw GeomError(ErrCode::degenerate_position, "coplanar quadruple",
                      {f.a, f.b, f.c, x});
    }
    return o;
  }

  // initial tetrahedron on four points, all facets oriented outward
  void seed(int p0, int p1, int p2, int p3) {
    const int quad[4] = {p0, p1, p2, p3};
    for (int omit = 0; omit < 4; ++omit) {
      int t[3], k = 0;
      for (int i = 0; i < 4; ++i) {
        if (i != omit) t[k++] = quad[i];
      }
      const int o = orient3d(set, t[0], t[1], t[2], quad[omit]);
      if (o == 0) {
        throw GeomError(ErrCode::degenerate_position, "coplanar quadruple",
                        {t[0], t[1], t[2], quad[omit]});
      }
      if (o > 0) std::swap(t[1], t[2]);
      facets.push_back({t[0], t[1], t[2], {-1, -1, -1}});
      alive.push_back(1);
    }
    // wire neighbors by matching reversed directed edges
    for (int i = 0; i < 4; ++i) {
      const int ev[3][2] = {{facets[i].a, facets[i].b},
                            {facets[i].b, facets[i].c},
                            {facets[i].c, facets[i].a}};
      for (int e = 0; e < 3; ++e) {
        for (int j = 0; j < 4 && facets[i].nbr[e] < 0; ++j) {
          if (j == i) continue;
          const int fv[3][2] = {{facets[j].a, facets[j].b},
                                {facets[j].b, facets[j].c},
                                {facets[j].c, facets[j].a}};
          for (int d = 0; d < 3; ++d) {
            if (fv[d][0] == ev[e][1] && fv[d][1] == ev[e][0]) {
              facets[i].nbr[e] = j;
              break;
            }
          }
        }
      }
    }
  }

  void insert(int x) {
    std::vector<int> visible;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (alive[f] && side(facets[f], x) > 0) visible.push_back(static_cast<int>(f));
    }
    if (visible.empty()) return;  // x is inside the current hull

    std::vector<char> vis(facets.size(), 0);
    for (int f : visible) vis[f] = 1;

    // horizon: directed edges of visible facets whose neighbor survives
    struct Horizon {
      int u, v, outside;
    };
    std::vector<Horizon> rim;
    for (int f : visible) {
      const HullFacet& fc = facets[f];
      const int ev[3][2] = {{fc.a, fc.b}, {fc.b, fc.c}, {fc.c, fc.a}};
      for (int e = 0; e < 3; ++e) {
        if (!vis[fc.nbr[e]]) rim.push_back({ev[e][0], ev[e][1], fc.nbr[e]});
      }
      alive[f] = 0;
    }

    std::vector<int> touched;
    touched.reserve(rim.size());
    for (const Horizon& h : rim) {
      const int id = static_cast<int>(facets.size());
      facets.push_back({h.u, h.v, x, {h.outside, -1, -1}});
      alive.push_back(1);
      vis.push_back(0);
      // the surviving neighbor now borders the new facet across (v,u)
      HullFacet& g = facets[h.outside];
      const int gv[3][2] = {{g.a, g.b}, {g.b, g.c}, {g.c, g.a}};
      for (int d = 0; d < 3; ++d) {
        if (gv[d][0] == h.v && gv[d][1] == h.u) {
          g.nbr[d] = id;
          break;
        }
      }
      start_of[h.u] = id;
      end_at[h.v] = id;
      touched.push_back(h.u);
      touched.push_back(h.v);
    }
    // the rim is a closed cycle: wire the side edges (v,x) and (x,u)
    for (const Horizon& h : rim) {
      HullFacet& f = facets[start_of[h.u]];
      f.nbr[1] = start_of[h.v];
      f.nbr[2] = end_at[h.u];
    }
    for (int t : touched) start_of[t] = end_at[t] = -1;
  }

  HullGraph finish(int n) {
    HullGraph g;
    g.n = n;
    std::vector<int> remap(facets.size(), -1);
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (!alive[f]) continue;
      remap[f] = static_cast<int>(g.facets.size());
      g.facets.push_back(facets[f]);
    }
    for (HullFacet& f : g.facets) {
      for (int e = 0; e < 3; ++e) f.nbr[e] = remap[f.nbr[e]];
    }
    std::map<std::pair<int, int>, std::pair<int, int>> edge_map;
    for (std::size_t f = 0; f < g.facets.size(); ++f) {
      const HullFacet& fc = g.facets[f];
      const int ev[3][2] = {{fc.a, fc.b}, {fc.b, fc.c}, {fc.c, fc.a}};
      for (int e = 0; e < 3; ++e) {
        const auto key = std::minmax(ev[e][0], ev[e][1]);
        auto [it, fresh] = edge_map.try_emplace(key, static_cast<int>(f), -1);
        if (!fresh) it->second.second = static_cast<int>(f);
      }
    }
    g.degree.assign(n, 0);
    for (const auto& [key, fs] : edge_map) {
      g.edges.push_back({key.first, key.second, fs.first, fs.second});
      g.degree[key.first]++;
      g.degree[key.second]++;
    }
    for (int i = 0; i < n; ++i) {
      if (g.degree[i] > 0) g.vertices.push_back(i);
    }
    return g;
  }
};

HullGraph hull_of(const PointSet& set, const std::vector<int>& active) {
  if (set.dimension() != 3) {
    throw GeomError(ErrCode::bad_input, "hulls are built over 3d sets");
  }
  if (active.size() < 4) {
    throw GeomError(ErrCode::bad_input, "a hull needs at least four points");
  }
  for (std::size_t i = 1; i < active.size(); ++i) {
    if (active[i] <= active[i - 1]) {
      throw GeomError(ErrCode::bad_input, "hull subset must be strictly increasing");
    }
  }
  if (active.front() < 0 || active.back() >= set.size()) {
    throw GeomError(ErrCode::out_of_range, "hull subset index outside the set");
  }
  Builder b(set);
  b.seed(active[0], active[1], active[2], active[3]);
  for (std::size_t i = 4; i < active.size(); ++i) b.insert(active[i]);
  return b.finish(set.size());
}

}  // namespace

std::string HullGraph::to_text() const {
  std::ostringstream out;
  out << "hull n=" << n << " vertices=" << vertices.size()
      << " facets=" << facets.size() << " edges=" << edges.size() << "\n";
  out << "vertices:";
  for (int v : vertices) out << " " << v << "(deg " << degree[v] << ")";
  out << "\n";
  for (const auto& f : facets) {
    out << "facet " << f.a << " " << f.b << " " << f.c << "\n";
  }
  for (const auto& e : edges) {
    out << "edge " << e.u << " " << e.v << "\n";
  }
  return out.str();
}

HullGraph convex_hull_3d(const PointSet& set) {
  std::vector<int> all(set.size());
  for (int i = 0; i < set.size(); ++i) all[i] = i;
  return hull_of(set, all);
}

HullGraph convex_hull_3d(const PointSet& set, const std::vector<int>& active) {
  return hull_of(set, active);
}

ConvexCheck check_convex_position(const PointSet& set) {
  HullGraph h = convex_hull_3d(set);
  ConvexCheck c;
  c.convex = static_cast<int>(h.vertices.size()) == set.size();
  if (!c.convex) {
    for (int i = 0; i < set.size(); ++i) {
      if (!h.is_vertex(i)) {
        c.witness = i;
        break;
      }
    }
  }
  return c;
}

namespace {

void require_convex(const PointSet& set) {
  const ConvexCheck c = check_convex_position(set);
  if (!c.convex) {
    throw GeomError(ErrCode::not_convex_position,
                    "point " + std::to_string(c.witness) + " is not a hull vertex",
                    {c.witness});
  }
}

std::vector<std::pair<int, int>> edge_pairs(const HullGraph& g) {
  std::vector<std::pair<int, int>> e;
  e.reserve(g.edges.size());
  for (const auto& he : g.edges) e.emplace_back(he.u, he.v);
  return e;  // already lexicographic
}

}  // namespace

std::vector<GeneratedSegment> depth_one_segments(const PointSet& set) {
  require_convex(set);
  const int n = set.size();
  if (n < 5) return {};  // deleting from a simplex leaves no hull

  const auto base_edges = edge_pairs(convex_hull_3d(set));
  auto is_base_edge = [&](std::pair<int, int> e) {
    return std::binary_search(base_edges.begin(), base_edges.end(), e);
  };

  // deletion hulls are independent; collect new edges per deleted point
  std::vector<std::vector<std::pair<int, int>>> fresh(n);
  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic, 1)
  for (int p = 0; p < n; ++p) {
    try {
      std::vector<int> rest;
      rest.reserve(n - 1);
      for (int i = 0; i < n; ++i) {
        if (i != p) rest.push_back(i);
      }
      for (const auto& e : edge_pairs(convex_hull_3d(set, rest))) {
        if (!is_base_edge(e)) fresh[p].push_back(e);
      }
    } catch (...) {
#pragma omp critical(hull_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::map<std::pair<int, int>, std::vector<int>> gens;
  for (int p = 0; p < n; ++p) {
    for (const auto& e : fresh[p]) gens[e].push_back(p);
  }
  std::vector<GeneratedSegment> out;
  out.reserve(gens.size());
  for (auto& [e, g] : gens) out.push_back({e.first, e.second, std::move(g)});
  return out;
}

BoundReport s1_bound_report(const PointSet& set) {
  return s1_bound_report(set, all_segment_depths(set));
}

BoundReport s1_bound_report(const PointSet& set, const AllDepths& depths) {
  require_convex(set);
  const int n = set.size();
  const HullGraph hull = convex_hull_3d(set);
  std::int64_t surplus = 0;
  for (int v : hull.vertices) surplus += hull.degree[v] - 3;

  const std::int64_t s1 = depths.hist.s.size() > 1 ? depths.hist.s[1] : 0;

  const auto generated = depth_one_segments(set);
  std::int64_t doubly = 0;
  std::int64_t multiply = 0;
  std::int64_t excess = 0;  // sum over segments of (#generators - 1)
  for (const auto& g : generated) {
    doubly += g.generators.size() == 2;
    multiply += g.generators.size() >= 2;
    excess += static_cast<std::int64_t>(g.generators.size()) - 1;
  }

  BoundReport r;
  r.subject = "depth-one census";
  r.n = n;
  const std::int64_t ceiling = 3LL * n - 12;
  r.entries.push_back(eq_entry("degree surplus", -1, surplus, ceiling));
  r.entries.push_back(le_entry("s_1 ceiling", 1, s1, ceiling));
  r.entries.push_back(
      eq_entry("one-deletion segments are the depth-one segments", -1,
               static_cast<std::int64_t>(generated.size()), s1));
  // Counting each deletion's new edges with multiplicity gives
  // s_1 + sum(#generators - 1) = sum(delta(p) - 3) exactly.  For n >= 6 no
  // segment has more than two generators, so the excess equals the number of
  // doubly-generated segments; n = 5 is the one exception (the single
  // off-hull segment is an edge of all three deletion tetrahedra).
  r.entries.push_back(eq_entry("s_1 plus regeneration excess", -1, s1 + excess, ceiling));
  r.entries.push_back(le_entry("doubly-generated segments", -1, doubly, multiply));
  return r;
}

}  // namespace segdepth
