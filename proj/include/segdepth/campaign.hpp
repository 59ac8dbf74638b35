#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "segdepth/generators.hpp"
#include "segdepth/report.hpp"

namespace segdepth {

/// A falsification sweep: `trials` generated sets, each audited end to end.
/// Trial i draws its size from [n_lo, n_hi] and its seed from base_seed,
/// both by deterministic mixing, so a spec names its outcomes exactly.
/// For the four-arc construction the size range is in m (n = 4m).
struct CampaignSpec {
  GenKind kind = GenKind::lifted_random;
  int trials = 0;
  int n_lo = 8;
  int n_hi = 24;  // inclusive
  std::uint64_t base_seed = 0;
  std::int64_t grid = 1'000'000;
  std::int64_t perturb_den = 1'000'000;
  std::string journal_path;  // empty: run without a journal
  std::string out_dir;       // empty: violation instances not written
  bool stop_on_finding = false;
};

/// The exact generator parameters of trial `index`.
GenSpec trial_genspec(const CampaignSpec& spec, int index);

/// Hex fingerprint of everything that fixes the campaign's trial sequence
/// (kind, size range, base seed, grids). Journal lines carry it so a journal
/// cannot silently resume a different campaign.
std::string campaign_id(const CampaignSpec& spec);

/// Worst case of one check across all trials. The margin is the slack left
/// in the check's direction (bound - observed for ceilings, observed - bound
/// for floors, -|difference| for identities): 0 means tight, negative means
/// violated. min_trial is the smallest trial index attaining min_margin.
struct MarginStat {
  std::string label;
  int j = -1;
  bool conjecture = false;
  std::int64_t min_margin = 0;
  int min_trial = -1;
  std::int64_t samples = 0;
};

struct CampaignResult {
  CampaignSpec spec;
  int trials_requested = 0;
  int trials_run = 0;      // executed by this invocation
  int trials_resumed = 0;  // taken as complete from the journal
  int theorem_violations = 0;
  int conjecture_violations = 0;
  std::vector<MarginStat> margins;           // sorted by (label, j)
  std::vector<std::string> violation_files;  // instance files, trial order
  double wall_seconds = 0.0;                 // informational, not in to_text

  /// Deterministic summary: identical spec ⟹ identical text.
  std::string to_text() const;
};

/// Runs the campaign. Completed trials found in the journal are not re-run
/// but still feed the summary, which is therefore identical to the
/// uninterrupted run's. A terminated journal line that fails its checksum
/// throws GeomError(journal_corrupt); an unterminated tail is a torn write
/// and is dropped. Any trial whose report shows a conjecture violation has
/// its full instance written to out_dir for independent re-verification;
/// with stop_on_finding set, no new trials start after one is seen.
CampaignResult run_campaign(const CampaignSpec& spec);

}  // namespace segdepth
