#include "segdepth/report.hpp"

#include <sstream>

namespace segdepth {

const char* relation_name(Relation r) {
  switch (r) {
    case Relation::le:
      return "le";
    case Relation::eq:
      return "eq";
    case Relation::ge:
      return "ge";
  }
  return "?";
}

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::equal:
      return "equal";
    case CheckStatus::below:
      return "below";
    case CheckStatus::violation:
      return "VIOLATION";
  }
  return "?";
}

BoundEntry le_entry(std::string label, int j, std::int64_t observed,
                    std::int64_t bound) {
  BoundEntry e;
  e.label = std::move(label);
  e.j = j;
  e.observed = observed;
  e.bound = bound;
  e.relation = Relation::le;
  e.status = observed < bound    ? CheckStatus::below
             : observed == bound ? CheckStatus::equal
                                 : CheckStatus::violation;
  return e;
}

BoundEntry eq_entry(std::string label, int j, std::int64_t observed,
                    std::int64_t expected) {
  BoundEntry e;
  e.label = std::move(label);
  e.j = j;
  e.observed = observed;
  e.bound = expected;
  e.relation = Relation::eq;
  e.status = observed == expected ? CheckStatus::equal : CheckStatus::violation;
  return e;
}

BoundEntry ge_entry(std::string label, int j, std::int64_t observed,
                    std::int64_t bound) {
  BoundEntry e;
  e.label = std::move(label);
  e.j = j;
  e.observed = observed;
  e.bound = bound;
  e.relation = Relation::ge;
  e.status = observed > bound    ? CheckStatus::below  // strictly inside the bound
             : observed == bound ? CheckStatus::equal
                                 : CheckStatus::violation;
  return e;
}

BoundEntry as_conjecture(BoundEntry e) {
  e.conjecture = true;
  return e;
}

bool BoundReport::any_violation() const {
  for (const auto& e : entries) {
    if (e.status == CheckStatus::violation) return true;
  }
  return false;
}

bool BoundReport::any_theorem_violation() const {
  for (const auto& e : entries) {
    if (e.status == CheckStatus::violation && !e.conjecture) return true;
  }
  return false;
}

bool BoundReport::any_conjecture_violation() const {
  for (const auto& e : entries) {
    if (e.status == CheckStatus::violation && e.conjecture) return true;
  }
  return false;
}

void BoundReport::append(const BoundReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

std::string BoundReport::to_text() const {
  std::ostringstream out;
  out << subject << " (n=" << n << ")";
  if (!set_hash.empty()) out << " [" << set_hash << "]";
  out << "\n";
  for (const auto& e : entries) {
    out << "  " << e.label;
    if (e.j >= 0) out << " [j=" << e.j << "]";
    const char* rel = e.relation == Relation::eq   ? " == "
                      : e.relation == Relation::ge ? " >= "
                                                   : " <= ";
    out << ": " << e.observed << rel << e.bound << " -> "
        << check_status_name(e.status);
    if (e.conjecture) out << " (conjecture)";
    out << "\n";
  }
  return out.str();
}

}  // namespace segdepth
