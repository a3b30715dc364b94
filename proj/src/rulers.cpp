#include "golomb/rulers.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace golomb {

Ruler Ruler::from_marks(std::span<const int> absolute_marks) {
  if (absolute_marks.size() < 2)
    throw std::invalid_argument("ruler: at least two marks required");
  if (absolute_marks.front() < 0)
    throw std::invalid_argument("ruler: marks must be non-negative");
  for (std::size_t i = 1; i < absolute_marks.size(); ++i) {
    if (absolute_marks[i] <= absolute_marks[i - 1])
      throw std::invalid_argument("ruler: marks must be strictly ascending");
  }
  Ruler r;
  r.offset_ = absolute_marks.front();
  r.marks_.reserve(absolute_marks.size());
  for (int m : absolute_marks) r.marks_.push_back(m - r.offset_);
  return r;
}

std::vector<int> Ruler::absolute_marks() const {
  std::vector<int> out(marks_);
  for (int& m : out) m += offset_;
  return out;
}

Ruler Ruler::translated(int new_offset) const {
  if (new_offset < 0) throw std::invalid_argument("ruler: negative translation");
  Ruler r(*this);
  r.offset_ = new_offset;
  return r;
}

MeasureSet measure_set(const Ruler& ruler) {
  const auto& marks = ruler.marks();
  const int order = ruler.order();
  std::vector<int> diffs;
  diffs.reserve(static_cast<std::size_t>(order) * (order - 1) / 2);
  for (int k = 1; k < order; ++k)
    for (int l = 0; l < k; ++l) diffs.push_back(marks[k] - marks[l]);
  std::sort(diffs.begin(), diffs.end());

  MeasureSet ms;
  ms.multiset_size = static_cast<long long>(diffs.size());
  for (std::size_t i = 0; i < diffs.size();) {
    std::size_t j = i;
    while (j < diffs.size() && diffs[j] == diffs[i]) ++j;
    ms.counts.emplace_back(diffs[i], static_cast<int>(j - i));
    i = j;
  }
  ms.distinct = static_cast<int>(ms.counts.size());
  ms.repetitions = ms.multiset_size - ms.distinct;
  return ms;
}

std::vector<int> MeasureSet::distinct_values() const {
  std::vector<int> out;
  out.reserve(counts.size());
  for (const auto& [value, count] : counts) out.push_back(value);
  return out;
}

bool is_golomb(const Ruler& ruler) { return measure_set(ruler).repetitions == 0; }

MarkConstraint MarkConstraint::range(int lo, int hi) {
  if (lo > hi || lo < 0) throw std::invalid_argument("constraint: bad range");
  MarkConstraint c;
  c.lo_ = lo;
  c.hi_ = hi;
  c.admissible_count_ = hi - lo + 1;
  c.contiguous_ = true;
  c.inside_.assign(static_cast<std::size_t>(hi - lo + 1), 1);
  return c;
}

MarkConstraint MarkConstraint::from_set(std::vector<int> values) {
  if (values.empty()) throw std::invalid_argument("constraint: empty set");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.front() < 0)
    throw std::invalid_argument("constraint: marks must be non-negative");
  MarkConstraint c;
  c.lo_ = values.front();
  c.hi_ = values.back();
  c.admissible_count_ = static_cast<int>(values.size());
  c.contiguous_ = (c.admissible_count_ == c.hi_ - c.lo_ + 1);
  c.inside_.assign(static_cast<std::size_t>(c.hi_ - c.lo_ + 1), 0);
  for (int v : values) c.inside_[static_cast<std::size_t>(v - c.lo_)] = 1;
  return c;
}

MarkConstraint MarkConstraint::without(std::span<const int> marks) const {
  MarkConstraint c(*this);
  for (int m : marks) {
    if (m >= lo_ && m <= hi_ && c.inside_[static_cast<std::size_t>(m - lo_)]) {
      c.inside_[static_cast<std::size_t>(m - lo_)] = 0;
      --c.admissible_count_;
    }
  }
  if (c.admissible_count_ == 0) throw std::invalid_argument("constraint: empty set");
  c.contiguous_ = (c.admissible_count_ == c.hi_ - c.lo_ + 1);
  return c;
}

bool MarkConstraint::contains(int mark) const {
  return mark >= lo_ && mark <= hi_ && inside_[static_cast<std::size_t>(mark - lo_)];
}

std::vector<int> MarkConstraint::values() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(admissible_count_));
  for (int v = lo_; v <= hi_; ++v)
    if (inside_[static_cast<std::size_t>(v - lo_)]) out.push_back(v);
  return out;
}

ForbiddenCount forbidden_count(const Ruler& ruler, const MarkConstraint& constraint) {
  const auto& marks = ruler.marks();  // zero-based
  const int length = ruler.length();
  ForbiddenCount best;
  best.count = std::numeric_limits<long long>::max();

  if (length <= constraint.hi() - constraint.lo()) {
    // Contiguous admissible ranges admit every in-range shift unchanged.
    if (constraint.contiguous()) return {0, constraint.lo(), false};
    for (int t = constraint.lo(); t + length <= constraint.hi(); ++t) {
      long long miss = 0;
      for (int m : marks) {
        if (!constraint.contains(t + m) && ++miss >= best.count) break;
      }
      if (miss < best.count) {
        best.count = miss;
        best.shift = t;
        if (miss == 0) break;
      }
    }
    best.oversized = false;
    return best;
  }

  // Ruler longer than the range: marks pushed outside [lo, hi] are always
  // forbidden; report the best clamped placement.
  for (int t = constraint.lo() - length; t <= constraint.hi(); ++t) {
    long long miss = 0;
    for (int m : marks) {
      if (!constraint.contains(t + m) && ++miss >= best.count) break;
    }
    if (miss < best.count) {
      best.count = miss;
      best.shift = t;
    }
  }
  best.oversized = true;
  return best;
}

std::string to_string(Grouping grouping) {
  return grouping == Grouping::kErq ? "ERQ" : "FRA";
}

std::optional<Grouping> grouping_from_string(const std::string& name) {
  if (name == "ERQ" || name == "erq") return Grouping::kErq;
  if (name == "FRA" || name == "fra") return Grouping::kFra;
  return std::nullopt;
}

int RulerGroup::span() const {
  int s = 0;
  for (const auto& r : rulers) s = std::max(s, r.offset() + r.length());
  return s;
}

GroupReport check_group(const RulerGroup& group) {
  GroupReport report;
  if (group.rulers.size() < 2) {
    report.violations.push_back("group must contain at least two rulers");
    return report;
  }
  std::unordered_set<int> seen;
  for (std::size_t i = 0; i < group.rulers.size(); ++i) {
    for (int m : group.rulers[i].absolute_marks()) {
      if (!seen.insert(m).second) {
        report.violations.push_back("shared mark " + std::to_string(m) +
                                    " in ruler " + std::to_string(i + 1));
      }
    }
  }
  if (group.grouping == Grouping::kErq) {
    const int length = group.rulers.front().length();
    for (std::size_t i = 1; i < group.rulers.size(); ++i) {
      if (group.rulers[i].length() != length) {
        report.violations.push_back("ruler " + std::to_string(i + 1) + " length " +
                                    std::to_string(group.rulers[i].length()) +
                                    " != " + std::to_string(length));
      }
    }
  } else {
    const int order = group.rulers.front().order();
    for (std::size_t i = 1; i < group.rulers.size(); ++i) {
      if (group.rulers[i].order() != order) {
        report.violations.push_back("ruler " + std::to_string(i + 1) + " order " +
                                    std::to_string(group.rulers[i].order()) +
                                    " != " + std::to_string(order));
      }
    }
  }
  return report;
}

}  // namespace golomb
