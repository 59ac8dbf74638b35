#pragma once

#include <optional>
#include <string>

#include "segdepth/depth.hpp"
#include "segdepth/facets.hpp"
#include "segdepth/generators.hpp"
#include "segdepth/points.hpp"
#include "segdepth/report.hpp"

namespace segdepth {

/// Bumped when a persisted layout changes incompatibly.
inline constexpr int kSchemaVersion = 1;

/// FNV-1a-64 of the canonical coordinate text ("<dim>;<n>;" then every
/// coordinate as num/den in row order); 16 hex digits. Stable across
/// serialization round-trips because the coordinates are exact.
std::string set_hash(const PointSet& set);

/// Point-set document: schema + version, dimension, n, one [num, den] pair
/// per coordinate, and the generator spec when the set came from one.
/// Integers that fit in 64 bits are stored as JSON numbers, wider ones as
/// decimal strings; no floats anywhere.
std::string point_set_to_json(const PointSet& set,
                              const std::optional<GenSpec>& provenance = {});

struct LoadedSet {
  PointSet set;
  std::optional<GenSpec> provenance;
};

/// Inverse of point_set_to_json. Throws GeomError(bad_input) with a specific
/// message on malformed text, wrong schema, or a version from the future.
LoadedSet point_set_from_json(const std::string& text);

void write_point_set(const std::string& path, const PointSet& set,
                     const std::optional<GenSpec>& provenance = {});
LoadedSet read_point_set(const std::string& path);

/// Report document: subject, n, set hash, one object per entry, and the two
/// rolled-up violation flags.
std::string report_to_json(const BoundReport& report);

// CSV emitters, header row first, '\n' line ends.
std::string depth_records_csv(const AllDepths& depths);
std::string depth_histogram_csv(const DepthHistogram& hist);
std::string facet_histogram_csv(const FacetHistogram& hist);

/// Adds "crc" (FNV-1a-64 hex of the canonical dump without it) to a one-line
/// JSON object and returns the sealed compact line.
std::string seal_journal_line(const std::string& object_text);
/// Verifies and strips the crc; returns the canonical object text without it.
/// Throws GeomError(journal_corrupt) on parse failure, a missing crc, or a
/// mismatch.
std::string open_journal_line(const std::string& line);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace segdepth
