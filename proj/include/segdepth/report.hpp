#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace segdepth {

/// Outcome of comparing an observed quantity against a bound or an exact
/// identity. `violation` on a proven statement indicates a software bug; on
/// an entry marked as a conjecture it is a genuine finding.
enum class CheckStatus { equal, below, violation };

const char* check_status_name(CheckStatus s);

/// How the observed value is expected to relate to the reference value.
enum class Relation { le, eq, ge };

const char* relation_name(Relation r);

struct BoundEntry {
  std::string label;
  int j = -1;  // parameter when applicable, -1 otherwise
  std::int64_t observed = 0;
  std::int64_t bound = 0;
  Relation relation = Relation::le;
  bool conjecture = false;  // violation is a finding, not a bug
  CheckStatus status = CheckStatus::equal;
};

/// observed <= bound expected.
BoundEntry le_entry(std::string label, int j, std::int64_t observed, std::int64_t bound);
/// observed == expected required.
BoundEntry eq_entry(std::string label, int j, std::int64_t observed,
                    std::int64_t expected);
/// observed >= bound expected.
BoundEntry ge_entry(std::string label, int j, std::int64_t observed, std::int64_t bound);
/// marks an entry as conjectural and passes it through
BoundEntry as_conjecture(BoundEntry e);

struct BoundReport {
  std::string subject;
  int n = 0;
  std::string set_hash;  // filled when the set came through the io layer
  std::vector<BoundEntry> entries;

  bool any_violation() const;
  bool any_theorem_violation() const;
  bool any_conjecture_violation() const;
  void append(const BoundReport& other);  // keeps other's entries, same n
  std::string to_text() const;
};

}  // namespace segdepth
