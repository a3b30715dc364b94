#pragma once

#include <optional>
#include <string>
#include <vector>

#include "golomb/ranging.hpp"
#include "golomb/rulers.hpp"

namespace golomb::io {

// Ruler files are JSON lines: one object per ruler with absolute marks,
//   {"marks":[...], "group":"label-or-null", "grouping":"ERQ"|"FRA"|null}
// Non-ruler lines (e.g. trailing stats objects) carry no "marks" key and
// are skipped by readers.
struct RulerRecord {
  Ruler ruler;
  std::optional<std::string> group;
  std::optional<Grouping> grouping;
};

std::vector<RulerRecord> read_ruler_file(const std::string& path);
std::string ruler_line(const RulerRecord& record);

/// Deterministic float formatting used by every CSV writer.
std::string format_double(double value);

void write_measurements_csv(const std::string& path,
                            const ranging::MeasurementSet& samples);

}  // namespace golomb::io
