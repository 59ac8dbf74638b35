#include "segdepth/facets.hpp"

#include <atomic>
#include <utility>

#include "detail.hpp"
#include "segdepth/errors.hpp"
#include "segdepth/predicates.hpp"

namespace segdepth {

namespace {

void require_3d(const PointSet& set) {
  if (set.dimension() != 3) {
    throw GeomError(ErrCode::bad_input, "facets are defined for 3d sets");
  }
  if (set.size() < 3) {
    throw GeomError(ErrCode::bad_input, "facet enumeration needs at least 3 points");
  }
}

int count_positive(const PointSet& set, int p, int q, int r) {
  int c = 0;
  for (int s = 0; s < set.size(); ++s) {
    if (s == p || s == q || s == r) continue;
    const int o = orient3d(set, p, q, r, s);
    if (o == 0) {
      throw GeomError(ErrCode::degenerate_position, "coplanar quadruple", {p, q, r, s});
    }
    c += o > 0;
  }
  return c;
}

FacetHistogram finish(int n, std::vector<std::int64_t> e) {
  FacetHistogram h;
  h.n = n;
  h.E.resize(e.size());
  std::int64_t run = 0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    run += e[j];
    h.E[j] = run;
  }
  h.e = std::move(e);
  return h;
}

}  // namespace

std::int64_t FacetHistogram::total() const { return E.empty() ? 0 : E.back(); }

int facet_j(const PointSet& set, int p, int q, int r) {
  require_3d(set);
  detail::check_indices(set, {p, q, r});
  return count_positive(set, p, q, r);
}

FacetHistogram build_facet_histogram_serial(const PointSet& set) {
  require_3d(set);
  const int n = set.size();
  std::vector<std::int64_t> e(n - 2, 0);
  for (int i = 0; i < n - 2; ++i) {
    for (int j = i + 1; j < n - 1; ++j) {
      for (int k = j + 1; k < n; ++k) {
        e[count_positive(set, i, j, k)]++;
        e[count_positive(set, i, k, j)]++;
      }
    }
  }
  return finish(n, std::move(e));
}

FacetHistogram build_facet_histogram(const PointSet& set) {
  require_3d(set);
  const int n = set.size();
  std::vector<std::int64_t> e(n - 2, 0);
  std::atomic<bool> degenerate{false};
  int witness[4] = {0, 0, 0, 0};

#pragma omp parallel
  {
    std::vector<std::int64_t> local(n - 2, 0);
#pragma omp for schedule(dynamic, 1) nowait
    for (int i = 0; i < n - 2; ++i) {
      if (degenerate.load(std::memory_order_relaxed)) continue;
      for (int j = i + 1; j < n - 1; ++j) {
        for (int k = j + 1; k < n; ++k) {
          int c = 0;
          int zero_at = -1;
          for (int s = 0; s < n; ++s) {
            if (s == i || s == j || s == k) continue;
            const int o = orient3d(set, i, j, k, s);
            if (o == 0) {
              zero_at = s;
              break;
            }
            c += o > 0;
          }
          if (zero_at >= 0) {
#pragma omp critical
            if (!degenerate.load(std::memory_order_relaxed)) {
              witness[0] = i, witness[1] = j, witness[2] = k, witness[3] = zero_at;
              degenerate.store(true, std::memory_order_relaxed);
            }
            continue;
          }
          // the reversed orientation of (i,j,k) sees the other n-3-c points
          local[c]++;
          local[n - 3 - c]++;
        }
      }
    }
#pragma omp critical
    for (std::size_t t = 0; t < local.size(); ++t) e[t] += local[t];
  }

  if (degenerate.load()) {
    throw GeomError(ErrCode::degenerate_position, "coplanar quadruple",
                    {witness[0], witness[1], witness[2], witness[3]});
  }
  return finish(n, std::move(e));
}

std::int64_t welzl_bound(int j, int n) {
  if (j < 0 || 2 * j > n - 4) {
    throw GeomError(ErrCode::out_of_range,
                    "facet ceiling needs 0 <= 2j <= n-4, got j=" + std::to_string(j) +
                        ", n=" + std::to_string(n));
  }
  const std::int64_t c2 = static_cast<std::int64_t>(j + 1) * (j + 2) / 2;
  const std::int64_t c3 = static_cast<std::int64_t>(j + 1) * (j + 2) * (j + 3) / 6;
  return 2 * (c2 * n - 2 * c3);
}

std::int64_t corollary_ej(int j, int n) {
  if (j < 0 || 2 * j > n - 4) {
    throw GeomError(ErrCode::out_of_range,
                    "convex e_j formula needs 0 <= 2j <= n-4, got j=" +
                        std::to_string(j) + ", n=" + std::to_string(n));
  }
  return 2LL * (j + 1) * n - 2LL * (j + 1) * (j + 2);
}

BoundReport check_welzl(const FacetHistogram& h) {
  BoundReport r;
  r.subject = "facet-count ceiling";
  r.n = h.n;
  for (int j = 0; 2 * j <= h.n - 4; ++j) {
    r.entries.push_back(le_entry("E_j tightness", j, h.E[j], welzl_bound(j, h.n)));
  }
  return r;
}

BoundReport check_welzl(const PointSet& set) {
  return check_welzl(build_facet_histogram(set));
}

}  // namespace segdepth
