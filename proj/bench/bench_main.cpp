// Timings for the parallel kernels against their serial references, and the
// rotating sweep against the brute-force oracle. Wall time only; the point is
// the ratio, not the absolute numbers. The references are also more literal
// (the facet reference evaluates both orientations of each triple instead of
// deriving one from the other), so their ratios fold in more than threading.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "segdepth/depth.hpp"
#include "segdepth/facets.hpp"
#include "segdepth/generators.hpp"

using namespace segdepth;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

template <typename F>
double timed(F&& f) {
  const auto t0 = clock_type::now();
  f();
  return seconds_since(t0);
}

void bench_set(const char* label, const PointSet& set) {
  const int n = set.size();
  std::printf("%s  n=%d\n", label, n);

  std::int64_t sink = 0;

  const double facets_par = timed([&] { sink += build_facet_histogram(set).total(); });
  const double facets_ser =
      timed([&] { sink += build_facet_histogram_serial(set).total(); });
  std::printf("  facet histogram   parallel %7.3fs   serial %7.3fs   speedup %.2fx\n",
              facets_par, facets_ser, facets_ser / facets_par);

  const double depths_par = timed([&] { sink += all_segment_depths(set).hist.total(); });
  const double depths_ser =
      timed([&] { sink += all_segment_depths_serial(set).hist.total(); });
  std::printf("  all-pairs depth   parallel %7.3fs   serial %7.3fs   speedup %.2fx\n",
              depths_par, depths_ser, depths_ser / depths_par);

  // oracle comparison on a fixed pair: the sweep is O(n log n) signs, the
  // brute force O(n^2), so the gap widens with n
  const double sweep = timed([&] {
    for (int q = 1; q < n; ++q) sink += segment_depth_sweep(set, 0, q).depth;
  });
  const double brute = timed([&] {
    for (int q = 1; q < n; ++q) sink += segment_depth_bruteforce(set, 0, q).depth;
  });
  std::printf("  depth from p=0    sweep    %7.3fs   brute  %7.3fs   speedup %.2fx\n",
              sweep, brute, brute / sweep);
  std::printf("  checksum %lld\n", static_cast<long long>(sink));
}

}  // namespace

int main(int argc, char** argv) {
  // sizes chosen so the whole run stays in the minutes even single-threaded;
  // pass a max n to extend
  int max_n = argc > 1 ? std::atoi(argv[1]) : 160;
  for (int n = 40; n <= max_n; n *= 2) {
    bench_set("convex (sphere)", gen_convex_3d(n, 7, ConvexMode::sphere));
    bench_set("convex (lifted)", gen_convex_3d(n, 7, ConvexMode::lifted, 200'000));
  }
  return 0;
}
