#include "segdepth/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "json_util.hpp"
#include "segdepth/bounds.hpp"
#include "segdepth/io.hpp"

namespace segdepth {

namespace {

namespace fs = std::filesystem;
using jsonio::json;

struct TrialOutcome {
  int index = -1;
  bool theorem_violation = false;
  bool conjecture_violation = false;
  std::vector<BoundEntry> entries;
};

void validate(const CampaignSpec& spec) {
  if (spec.trials < 1) throw GeomError(ErrCode::bad_input, "campaign needs at least one trial");
  if (spec.n_lo < 1 || spec.n_lo > spec.n_hi)
    throw GeomError(ErrCode::bad_input, "campaign size range is empty");
  if (spec.kind == GenKind::random_planar)
    throw GeomError(ErrCode::bad_input,
                    "campaigns audit 3D sets; lift planar input instead");
}

/// Slack left in the entry's direction: 0 tight, negative violated.
std::int64_t margin_of(const BoundEntry& e) {
  switch (e.relation) {
    case Relation::le:
      return e.bound - e.observed;
    case Relation::ge:
      return e.observed - e.bound;
    case Relation::eq:
      return e.observed > e.bound ? e.bound - e.observed : e.observed - e.bound;
  }
  return 0;
}

json trial_to_json(const std::string& id, const TrialOutcome& t, const GenSpec& g,
                   const std::string& hash, int n) {
  json entries = json::array();
  for (const BoundEntry& e : t.entries) entries.push_back(jsonio::entry_to_json(e));
  return json{{"campaign", id},
              {"trial", t.index},
              {"n", n},
              {"gen", jsonio::genspec_to_json(g)},
              {"set_hash", hash},
              {"theorem_violation", t.theorem_violation},
              {"conjecture_violation", t.conjecture_violation},
              {"entries", std::move(entries)}};
}

TrialOutcome trial_from_json(const json& obj) {
  TrialOutcome t;
  t.index = jsonio::field(obj, "trial").get<int>();
  t.theorem_violation = jsonio::field(obj, "theorem_violation").get<bool>();
  t.conjecture_violation = jsonio::field(obj, "conjecture_violation").get<bool>();
  for (const json& e : jsonio::field(obj, "entries"))
    t.entries.push_back(jsonio::entry_from_json(e));
  return t;
}

struct JournalState {
  std::map<int, TrialOutcome> done;  // keyed by trial index, first line wins
  std::vector<std::string> lines;    // every intact line, original order
  bool torn_tail = false;
};

JournalState load_journal(const CampaignSpec& spec) {
  JournalState state;
  if (spec.journal_path.empty() || !fs::exists(spec.journal_path)) return state;
  const std::string text = read_text_file(spec.journal_path);
  const std::string id = campaign_id(spec);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) {
      // no terminator: a write died mid-line; drop the fragment
      state.torn_tail = true;
      break;
    }
    const std::string line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.empty()) continue;
    json obj = json::parse(open_journal_line(line));
    if (jsonio::field(obj, "campaign").get<std::string>() != id)
      throw GeomError(ErrCode::bad_input,
                      spec.journal_path + " was written by a different campaign");
    TrialOutcome t = trial_from_json(obj);
    if (t.index < 0) throw GeomError(ErrCode::journal_corrupt, "negative trial index");
    if (state.done.emplace(t.index, std::move(t)).second) state.lines.push_back(line);
  }
  return state;
}

void fold_margins(std::map<std::pair<std::string, int>, MarginStat>& acc,
                  const TrialOutcome& t) {
  for (const BoundEntry& e : t.entries) {
    MarginStat& s = acc[{e.label, e.j}];
    const std::int64_t m = margin_of(e);
    if (s.samples == 0) {
      s.label = e.label;
      s.j = e.j;
      s.conjecture = e.conjecture;
      s.min_margin = m;
      s.min_trial = t.index;
    } else if (m < s.min_margin || (m == s.min_margin && t.index < s.min_trial)) {
      s.min_margin = m;
      s.min_trial = t.index;
    }
    ++s.samples;
  }
}

}  // namespace

GenSpec trial_genspec(const CampaignSpec& spec, int index) {
  if (index < 0) throw GeomError(ErrCode::out_of_range, "trial index must be >= 0");
  const std::uint64_t i = static_cast<std::uint64_t>(index);
  GenSpec g;
  g.kind = spec.kind;
  const std::uint64_t span = static_cast<std::uint64_t>(spec.n_hi - spec.n_lo + 1);
  g.count = spec.n_lo + static_cast<int>(detail::mix_seed(spec.base_seed, 2 * i) % span);
  g.seed = detail::mix_seed(spec.base_seed, 2 * i + 1);
  g.grid = spec.grid;
  g.perturb_den = spec.perturb_den;
  return g;
}

std::string campaign_id(const CampaignSpec& spec) {
  std::string text = std::string(gen_kind_name(spec.kind)) + ";" +
                     std::to_string(spec.n_lo) + ";" + std::to_string(spec.n_hi) + ";" +
                     std::to_string(spec.base_seed) + ";" + std::to_string(spec.grid) +
                     ";" + std::to_string(spec.perturb_den);
  return jsonio::hex64(jsonio::fnv1a64(text));
}

CampaignResult run_campaign(const CampaignSpec& spec) {
  validate(spec);
  const auto t0 = std::chrono::steady_clock::now();
  const std::string id = campaign_id(spec);

  JournalState state = load_journal(spec);
  std::ofstream journal;
  if (!spec.journal_path.empty()) {
    if (fs::path parent = fs::path(spec.journal_path).parent_path(); !parent.empty())
      fs::create_directories(parent);
    if (state.torn_tail) {
      // rewrite intact lines so the coming appends don't graft onto the fragment
      std::string clean;
      for (const std::string& l : state.lines) clean += l + "\n";
      write_text_file(spec.journal_path, clean);
    }
    journal.open(spec.journal_path, std::ios::binary | std::ios::app);
    if (!journal)
      throw GeomError(ErrCode::bad_input, "cannot open journal " + spec.journal_path);
  }

  std::vector<int> todo;
  for (int i = 0; i < spec.trials; ++i)
    if (!state.done.count(i)) todo.push_back(i);

  std::vector<TrialOutcome> fresh(todo.size());
  std::vector<char> ran(todo.size(), 0);
  bool stop = false;
  if (spec.stop_on_finding) {
    for (const auto& [index, t] : state.done)
      if (index < spec.trials && t.conjecture_violation) stop = true;
  }
  std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t k = 0; k < todo.size(); ++k) {
    bool skip = false;
#pragma omp critical(campaign_state)
    skip = stop || failure != nullptr;
    if (skip) continue;
    try {
      const int index = todo[k];
      const GenSpec g = trial_genspec(spec, index);
      const PointSet set = generate(g);
      BoundReport report = verify_set(set);
      report.set_hash = set_hash(set);
      TrialOutcome t;
      t.index = index;
      t.theorem_violation = report.any_theorem_violation();
      t.conjecture_violation = report.any_conjecture_violation();
      t.entries = std::move(report.entries);
#pragma omp critical(campaign_journal)
      if (journal.is_open()) {
        journal << seal_journal_line(
                       trial_to_json(id, t, g, report.set_hash, report.n).dump())
                << '\n';
        journal.flush();
      }
      if (t.conjecture_violation && spec.stop_on_finding) {
#pragma omp critical(campaign_state)
        stop = true;
      }
      fresh[k] = std::move(t);
      ran[k] = 1;
    } catch (...) {
#pragma omp critical(campaign_state)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  CampaignResult result;
  result.spec = spec;
  result.trials_requested = spec.trials;

  std::map<std::pair<std::string, int>, MarginStat> acc;
  std::vector<const TrialOutcome*> violating;
  auto absorb = [&](const TrialOutcome& t) {
    fold_margins(acc, t);
    if (t.theorem_violation) ++result.theorem_violations;
    if (t.conjecture_violation) ++result.conjecture_violations;
    if (t.theorem_violation || t.conjecture_violation) violating.push_back(&t);
  };
  for (const auto& [index, t] : state.done) {
    if (index >= spec.trials) continue;
    ++result.trials_resumed;
    absorb(t);
  }
  for (std::size_t k = 0; k < todo.size(); ++k) {
    if (!ran[k]) continue;
    ++result.trials_run;
    absorb(fresh[k]);
  }

  for (auto& [key, stat] : acc) result.margins.push_back(std::move(stat));

  // a violating trial regenerates deterministically, so its instance can be
  // serialized whether the trial ran now or in the journaled past
  if (!spec.out_dir.empty() && !violating.empty()) {
    fs::create_directories(spec.out_dir);
    std::sort(violating.begin(), violating.end(),
              [](const TrialOutcome* a, const TrialOutcome* b) { return a->index < b->index; });
    for (const TrialOutcome* t : violating) {
      const GenSpec g = trial_genspec(spec, t->index);
      const fs::path file =
          fs::path(spec.out_dir) / ("violation-trial-" + std::to_string(t->index) + ".json");
      write_point_set(file.string(), generate(g), g);
      result.violation_files.push_back(file.string());
    }
  }

  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

std::string CampaignResult::to_text() const {
  std::ostringstream out;
  out << "campaign " << gen_kind_name(spec.kind) << " sizes [" << spec.n_lo << ", "
      << spec.n_hi << "] base seed " << spec.base_seed << "\n";
  // run/resumed split deliberately absent: a resumed campaign must summarize
  // identically to an uninterrupted one
  out << "trials completed: " << trials_run + trials_resumed << " of "
      << trials_requested << "\n";
  out << "theorem violations: " << theorem_violations << "\n";
  out << "conjecture violations: " << conjecture_violations << "\n";
  std::size_t width = 0;
  for (const MarginStat& m : margins) width = std::max(width, m.label.size());
  out << "worst margins (0 = tight, negative = violated):\n";
  for (const MarginStat& m : margins) {
    out << "  " << std::left << std::setw(static_cast<int>(width) + 2) << m.label
        << std::right;
    if (m.j >= 0)
      out << " j=" << std::setw(2) << m.j;
    else
      out << "     ";
    out << "  min " << std::setw(6) << m.min_margin << "  at trial " << std::setw(4)
        << m.min_trial << "  over " << std::setw(5) << m.samples << " samples";
    if (m.conjecture) out << "  (conjecture)";
    out << "\n";
  }
  for (const std::string& f : violation_files) out << "violation instance: " << f << "\n";
  return out.str();
}

}  // namespace segdepth
