#include "segdepth/bounds.hpp"

#include "segdepth/errors.hpp"
#include "segdepth/facets.hpp"
#include "segdepth/hull.hpp"
#include "segdepth/predicates.hpp"

namespace segdepth {

namespace {

std::int64_t pairs_of(int n) { return static_cast<std::int64_t>(n) * (n - 1) / 2; }

int ceil_quarter(int n) { return (n + 3) / 4; }

}  // namespace

std::int64_t prop_Sj_bound(int j, int n) {
  if (j < 0 || 2 * j > n - 4) {
    throw GeomError(ErrCode::out_of_range,
                    "depth ceiling needs 0 <= 2j <= n-4", {j, n});
  }
  return 3LL * (j + 1) * (n - j - 2);
}

int DepthGuarantee::compare_jstar(const Rat& t) const {
  const Rat d = jstar_base - t;  // jstar - t = d - sqrt(radicand)
  if (sign_of(jstar_radicand) == 0) return sign_of(d);
  if (sign_of(d) <= 0) return -1;
  return sign_of(d * d - jstar_radicand);
}

DepthGuarantee depth_guarantee(int n) {
  if (n < 4) throw GeomError(ErrCode::bad_input, "depth guarantee needs n >= 4");
  DepthGuarantee g;
  g.n = n;
  g.jstar_base = make_rat(Int(n - 3), Int(2));
  g.jstar_radicand = make_rat(Int(n - 2) * Int(n - 2) - 1, Int(12));
  // S_j <= 3(j+1)(n-j-2) is concave in j, so the js it keeps below C(n,2)
  // form a prefix of the valid range; the first one it fails at ends it.
  const std::int64_t all = pairs_of(n);
  for (int j = 0; 2 * j <= n - 4; ++j) {
    if (prop_Sj_bound(j, n) >= all) break;
    g.floor_value = j + 1;
  }
  return g;
}

std::int64_t conj2_bound(int j, int n) {
  if (j < 0 || j > ceil_quarter(n) - 1) {
    throw GeomError(ErrCode::out_of_range,
                    "conjectured ceiling needs 0 <= j <= ceil(n/4)-1", {j, n});
  }
  return 3LL * n - 8LL * j - 6;
}

Conj3Threshold conj3_threshold(int n) {
  if (n < 4) throw GeomError(ErrCode::bad_input, "threshold needs n >= 4");
  Conj3Threshold t;
  t.pair_count = n + 2;
  t.depth_threshold = n / 4 - 1;
  t.derivation_lhs = 0;
  for (int j = 0; j < t.depth_threshold; ++j) {
    t.derivation_lhs += Int(conj2_bound(j, n));
  }
  t.derivation_rhs = Int(pairs_of(n)) - Int(n + 2);
  t.derivation_holds = t.derivation_lhs <= t.derivation_rhs;
  return t;
}

BoundReport verify_set(const PointSet& set) {
  if (set.dimension() != 3) {
    throw GeomError(ErrCode::bad_input, "bound audit expects a 3D set");
  }
  const int n = set.size();
  if (n < 4) throw GeomError(ErrCode::bad_input, "bound audit needs n >= 4");
  set.require_general_position();

  const FacetHistogram facets = build_facet_histogram(set);
  const AllDepths depths = all_segment_depths(set);
  const ConvexCheck convex = check_convex_position(set);

  BoundReport r;
  r.subject = "bound audit";
  r.n = n;

  r.append(check_welzl(facets));

  for (int j = 0; 2 * j <= n - 4; ++j) {
    r.entries.push_back(
        le_entry("S_j ceiling", j, depths.hist.S[j], prop_Sj_bound(j, n)));
    r.entries.push_back(le_entry("2S_j within 3e_j", j, 2 * depths.hist.S[j],
                                 3 * facets.e[j]));
  }

  std::int64_t max_depth = 0;
  for (std::size_t j = 0; j < depths.hist.s.size(); ++j) {
    if (depths.hist.s[j] > 0) max_depth = static_cast<std::int64_t>(j);
  }
  r.entries.push_back(ge_entry("max depth meets the forcing floor", -1, max_depth,
                               depth_guarantee(n).floor_value));

  if (convex.convex) {
    for (int j = 0; 2 * j <= n - 4; ++j) {
      r.entries.push_back(
          eq_entry("e_j exact count", j, facets.e[j], corollary_ej(j, n)));
    }
    r.append(s1_bound_report(set, depths));
    for (int j = 0; j <= ceil_quarter(n) - 1; ++j) {
      r.entries.push_back(as_conjecture(
          le_entry("s_j conjectured ceiling", j, depths.hist.s[j], conj2_bound(j, n))));
    }
    const Conj3Threshold t3 = conj3_threshold(n);
    const std::int64_t shallow =
        t3.depth_threshold > 0 ? depths.hist.S[t3.depth_threshold - 1] : 0;
    r.entries.push_back(as_conjecture(ge_entry(
        "deep-pair supply", -1, pairs_of(n) - shallow, t3.pair_count)));
  }
  return r;
}

}  // namespace segdepth
