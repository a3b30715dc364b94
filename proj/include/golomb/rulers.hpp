#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace golomb {

// Integer mark set. Marks are stored zero-based (first mark 0) with an
// explicit offset, so translated rulers round-trip losslessly while all
// difference-based quantities stay translation-invariant.
class Ruler {
 public:
  /// Builds from absolute marks; throws std::invalid_argument unless the
  /// marks are non-negative, strictly ascending and at least two.
  static Ruler from_marks(std::span<const int> absolute_marks);

  const std::vector<int>& marks() const { return marks_; }  // zero-based
  std::vector<int> absolute_marks() const;

  int order() const { return static_cast<int>(marks_.size()); }
  int length() const { return marks_.back(); }
  int offset() const { return offset_; }

  Ruler translated(int new_offset) const;

  bool operator==(const Ruler&) const = default;

 private:
  std::vector<int> marks_;
  int offset_ = 0;
};

// Multiset of pairwise mark differences, stored as sorted (value, count)
// pairs so the repetition count is an O(1) read in the GA hot loop.
struct MeasureSet {
  std::vector<std::pair<int, int>> counts;  // ascending by value
  long long multiset_size = 0;              // always K(K-1)/2
  int distinct = 0;                         // M
  long long repetitions = 0;                // R_p = multiset_size - M

  std::vector<int> distinct_values() const;
};

MeasureSet measure_set(const Ruler& ruler);

/// True iff all pairwise differences are distinct (R_p == 0).
bool is_golomb(const Ruler& ruler);

// Set of admissible marks. Membership is O(1) over the dense range
// [lo, hi]; ranges in this problem are at most a few hundred.
class MarkConstraint {
 public:
  static MarkConstraint range(int lo, int hi);
  static MarkConstraint from_set(std::vector<int> values);

  /// Copy with the given marks removed.
  MarkConstraint without(std::span<const int> marks) const;

  bool contains(int mark) const;
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int size() const { return admissible_count_; }
  bool contiguous() const { return contiguous_; }
  std::vector<int> values() const;

 private:
  int lo_ = 0;
  int hi_ = 0;
  int admissible_count_ = 0;
  bool contiguous_ = false;
  std::vector<char> inside_;  // membership over [lo_, hi_]
};

struct ForbiddenCount {
  long long count = 0;  // F_p at the best shift
  int shift = 0;        // absolute position of the first mark
  bool oversized = false;
};

// Minimum number of marks outside the constraint over all integer
// translations that keep the ruler inside [lo, hi]; exact enumeration of
// every feasible shift. If the ruler does not fit in the range at all, the
// best clamped shift is reported and the result is flagged oversized.
ForbiddenCount forbidden_count(const Ruler& ruler, const MarkConstraint& constraint);

enum class Grouping { kErq, kFra };

std::string to_string(Grouping grouping);
std::optional<Grouping> grouping_from_string(const std::string& name);

struct RulerGroup {
  std::vector<Ruler> rulers;
  Grouping grouping = Grouping::kFra;

  int span() const;  // largest absolute mark
};

struct GroupReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

// Verifies pairwise mark disjointness plus the grouping equality
// constraint (equal length for ERQ, equal order for FRA). Violations are
// reported, not thrown.
GroupReport check_group(const RulerGroup& group);

}  // namespace golomb
