#include "golomb/ga.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace golomb::ga {
namespace {

// Known optimal lengths for orders 2..15.
constexpr int kOptimalLength[] = {1, 3, 6, 11, 17, 25, 34, 44, 55, 72, 85, 106, 127, 151};

struct Scored {
  SegmentSeq seq;
  long long fit = 0;
  long long repetitions = 0;
  long long forbidden = 0;
  int length = 0;
};

// Fitness evaluator with reusable scratch; semantics identical to the free
// fitness() functions below.
class Evaluator {
 public:
  Evaluator(const MarkConstraint& constraint, int target_length)
      : constraint_(constraint), target_(target_length) {}

  Scored score(SegmentSeq seq) {
    Scored s;
    s.length = std::accumulate(seq.segments.begin(), seq.segments.end(), 0);

    marks_.clear();
    marks_.push_back(0);
    int acc = 0;
    for (int seg : seq.segments) {
      acc += seg;
      marks_.push_back(acc);
    }
    diffs_.clear();
    for (std::size_t k = 1; k < marks_.size(); ++k)
      for (std::size_t l = 0; l < k; ++l) diffs_.push_back(marks_[k] - marks_[l]);
    std::sort(diffs_.begin(), diffs_.end());
    s.repetitions = 0;
    for (std::size_t i = 1; i < diffs_.size(); ++i)
      if (diffs_[i] == diffs_[i - 1]) ++s.repetitions;

    s.forbidden = forbidden_count(Ruler::from_marks(marks_), constraint_).count;

    const long long reach =
        target_ > 0 ? s.length + std::abs(s.length - target_) : s.length;
    s.fit = reach * (s.repetitions + s.forbidden + 1);
    s.seq = std::move(seq);
    return s;
  }

 private:
  const MarkConstraint& constraint_;
  int target_;
  std::vector<int> marks_;
  std::vector<int> diffs_;
};

long long count_distinct_truncations(int s_max, int order) {
  // s_max * (s_max-1) * ... over K-1 factors, saturating.
  long long count = 1;
  for (int i = 0; i < order - 1; ++i) {
    count *= (s_max - i);
    if (count > (1LL << 40)) return 1LL << 40;
  }
  return count;
}

bool feasible(const Scored& s, int target_length) {
  if (s.repetitions != 0 || s.forbidden != 0) return false;
  return target_length == 0 || s.length == target_length;
}

}  // namespace

Ruler SegmentSeq::to_ruler() const {
  std::vector<int> marks{0};
  int acc = 0;
  for (int seg : segments) {
    acc += seg;
    marks.push_back(acc);
  }
  return Ruler::from_marks(marks);
}

int SegmentSeq::length() const {
  return std::accumulate(segments.begin(), segments.end(), 0);
}

int optimal_length(int order) {
  if (order < 2 || order > 15) return 0;
  return kOptimalLength[order - 2];
}

long long fitness(const SegmentSeq& candidate, const MarkConstraint& constraint) {
  return fitness(candidate, constraint, 0);
}

long long fitness(const SegmentSeq& candidate, const MarkConstraint& constraint,
                  int target_length) {
  for (int seg : candidate.segments)
    if (seg < 1) throw std::invalid_argument("segments must be >= 1");
  Evaluator eval(constraint, target_length);
  return eval.score(candidate).fit;
}

Population init_population(int order, int s_max, int population, RandomStream& rng) {
  if (order < 2) throw std::invalid_argument("order must be >= 2");
  if (s_max < order - 1) throw std::invalid_argument("s_max must be >= order - 1");
  if (population < 1) throw std::invalid_argument("population must be >= 1");
  if (population > count_distinct_truncations(s_max, order))
    throw std::invalid_argument("population exceeds distinct truncations");

  Population pop;
  std::set<std::vector<int>> seen;
  while (static_cast<int>(pop.candidates.size()) < population) {
    const std::vector<int> perm = rng.permutation(s_max);
    SegmentSeq seq;
    seq.segments.reserve(order - 1);
    for (int i = 0; i < order - 1; ++i) seq.segments.push_back(perm[i] + 1);
    if (seen.insert(seq.segments).second) pop.candidates.push_back(std::move(seq));
  }
  return pop;
}

SegmentSeq transmuted(const SegmentSeq& candidate, std::size_t pos, int value) {
  if (pos >= candidate.segments.size())
    throw std::invalid_argument("transmuted: position out of range");
  if (value < 2) throw std::invalid_argument("transmuted: value must be >= 2");
  if (candidate.segments[pos] == 1)
    throw std::invalid_argument("transmuted: unit segments are protected");
  SegmentSeq out(candidate);
  out.segments[pos] = value;
  return out;
}

SegmentSeq swapped(const SegmentSeq& candidate, std::size_t i, std::size_t j) {
  if (i >= candidate.segments.size() || j >= candidate.segments.size())
    throw std::invalid_argument("swapped: position out of range");
  SegmentSeq out(candidate);
  std::swap(out.segments[i], out.segments[j]);
  return out;
}

SegmentSeq mutate(const SegmentSeq& candidate, int s_max, RandomStream& rng) {
  const int n = static_cast<int>(candidate.segments.size());
  std::vector<int> mutable_pos;
  for (int i = 0; i < n; ++i)
    if (candidate.segments[i] != 1) mutable_pos.push_back(i);

  const bool transmute = rng.uniform01() < 0.5;
  if (transmute && !mutable_pos.empty() && s_max >= 2) {
    const int pos = mutable_pos[rng.uniform_int(0, static_cast<int>(mutable_pos.size()) - 1)];
    const int current = candidate.segments[pos];
    // Draw from {2..s_max} excluding the current value when possible.
    if (current >= 2 && current <= s_max && s_max == 2) {
      // Only candidate value equals the current one; fall through to swap.
    } else {
      int value;
      do {
        value = rng.uniform_int(2, s_max);
      } while (value == current);
      return transmuted(candidate, static_cast<std::size_t>(pos), value);
    }
  }
  if (n < 2) return candidate;  // single segment: no distinct swap exists
  const int i = rng.uniform_int(0, n - 1);
  int j;
  do {
    j = rng.uniform_int(0, n - 1);
  } while (j == i);
  return swapped(candidate, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

SegmentSeq crossover_block(const SegmentSeq& male, const SegmentSeq& female,
                           std::size_t i, std::size_t j) {
  if (male.segments.size() != female.segments.size())
    throw std::invalid_argument("crossover: length mismatch");
  if (i > j || j >= male.segments.size())
    throw std::invalid_argument("crossover: bad block");
  SegmentSeq child(male);
  for (std::size_t k = i; k <= j; ++k) child.segments[k] = female.segments[k];
  return child;
}

SegmentSeq crossover(const SegmentSeq& male, const SegmentSeq& female,
                     RandomStream& rng) {
  const int n = static_cast<int>(male.segments.size());
  const int i = rng.uniform_int(0, n - 1);
  const int j = rng.uniform_int(i, n - 1);
  return crossover_block(male, female, static_cast<std::size_t>(i),
                         static_cast<std::size_t>(j));
}

SynthesisResult synthesize_ruler(int order, const MarkConstraint& constraint,
                                 const GaConfig& config, RandomStream& rng) {
  if (order < 2) throw std::invalid_argument("order must be >= 2");

  const int mutations = config.max_mutations > 0 ? config.max_mutations : 200 * order;
  const int generations = config.max_generations;
  const int escalation_cap =
      config.max_escalations > 0 ? config.max_escalations : 2 * order;
  const int target = config.target_length;
  const long long perfect = static_cast<long long>(order) * (order - 1) / 2;
  const long long stop_length =
      target > 0 ? target
                 : std::max<long long>(perfect, config.stop_at_length);

  int s_max = std::max(config.initial_s_max, order - 1);
  if (target > 0) {
    // Initial truncations must be able to straddle the target length.
    s_max = std::max(s_max, 2 * target / std::max(1, order - 1) + 1);
  }

  Evaluator eval(constraint, target);
  SynthesisResult result;
  result.final_s_max = s_max;

  std::optional<Scored> best;  // best feasible
  std::optional<Scored> best_any;
  auto consider = [&](const Scored& s) {
    if (!best_any || s.fit < best_any->fit) best_any = s;
    if (feasible(s, target) && (!best || s.length < best->length ||
                                (s.length == best->length && s.fit < best->fit)))
      best = s;
  };
  auto done = [&]() { return best && best->length <= stop_length; };

  int escalations = 0;
  int restarts = 0;
  while (restarts < config.max_restarts && !done()) {
    ++restarts;
    const int pop_size = static_cast<int>(
        std::min<long long>(config.population, count_distinct_truncations(s_max, order)));
    Population raw = init_population(order, s_max, pop_size, rng);

    std::vector<Scored> pop;
    pop.reserve(raw.candidates.size());
    for (auto& seq : raw.candidates) pop.push_back(eval.score(std::move(seq)));

    // Mutation stage: hill-climb each candidate with up to C elementary
    // mutations, applied only while repetitions remain.
    for (auto& cand : pop) {
      for (int c = 0; c < mutations && cand.repetitions > 0; ++c) {
        Scored trial = eval.score(mutate(cand.seq, s_max, rng));
        if (trial.fit < cand.fit) cand = std::move(trial);
      }
      consider(cand);
    }

    const bool any_golomb =
        std::any_of(pop.begin(), pop.end(), [](const Scored& s) { return s.repetitions == 0; });
    if (!any_golomb) {
      if (escalations < escalation_cap) {
        ++s_max;
        ++escalations;
      }
      result.final_s_max = s_max;
      continue;
    }

    // Selection: lowest-fitness repetition-free candidate leads; ties go to
    // the lowest index. Everything else is female.
    std::size_t male = pop.size();
    for (std::size_t p = 0; p < pop.size(); ++p) {
      if (pop[p].repetitions == 0 && (male == pop.size() || pop[p].fit < pop[male].fit))
        male = p;
    }
    Scored dominant = pop[male];
    std::vector<Scored> females;
    for (std::size_t p = 0; p < pop.size(); ++p)
      if (p != male) females.push_back(pop[p]);

    consider(dominant);
    if (config.trace) result.male_fitness_trace.push_back(dominant.fit);

    for (int gen = 0; gen < generations && !done(); ++gen) {
      ++result.generations;
      std::vector<Scored> children;
      children.reserve(females.size());
      for (const auto& female : females)
        children.push_back(eval.score(crossover(dominant.seq, female.seq, rng)));

      // Best repetition-free child beats the male if strictly fitter.
      std::size_t heir = children.size();
      for (std::size_t i = 0; i < children.size(); ++i) {
        const auto& child = children[i];
        if (child.repetitions != 0 || child.fit >= dominant.fit) continue;
        if (config.male_requires_feasible && child.forbidden != 0) continue;
        if (heir == children.size() || child.fit < children[heir].fit) heir = i;
      }

      std::vector<Scored> pool;
      pool.reserve(females.size() + children.size() + 1);
      if (heir != children.size()) {
        pool.push_back(dominant);  // displaced male rejoins the females
        dominant = children[heir];
        consider(dominant);
      }
      for (auto& f : females) pool.push_back(std::move(f));
      for (std::size_t i = 0; i < children.size(); ++i)
        if (i != heir) pool.push_back(std::move(children[i]));

      // Keep the best P-1 distinct sequences (stable on ties), never
      // duplicating the male.
      std::stable_sort(pool.begin(), pool.end(),
                       [](const Scored& a, const Scored& b) { return a.fit < b.fit; });
      females.clear();
      std::set<std::vector<int>> seen{dominant.seq.segments};
      for (auto& entry : pool) {
        if (static_cast<int>(females.size()) >= pop_size - 1) break;
        if (seen.insert(entry.seq.segments).second) females.push_back(std::move(entry));
      }

      if (config.trace) result.male_fitness_trace.push_back(dominant.fit);
      if (females.empty()) break;
    }

    if (!best && escalations < escalation_cap) {
      // No feasible ruler yet: widen the primary segment set before the
      // next cycle.
      ++s_max;
      ++escalations;
    }
    result.final_s_max = s_max;
  }

  result.restarts = restarts;
  result.escalations = escalations;

  const Scored* chosen = best ? &*best : (best_any ? &*best_any : nullptr);
  if (chosen == nullptr) throw std::logic_error("synthesize_ruler: empty search");
  result.feasible = best.has_value();
  result.fitness = chosen->fit;

  Ruler ruler = chosen->seq.to_ruler();
  const ForbiddenCount fc = forbidden_count(ruler, constraint);
  result.ruler = ruler.translated(std::max(fc.shift, 0));

  if (const int n_opt = optimal_length(order); n_opt > 0) {
    GaBenchmark bench;
    bench.length = ruler.length();
    bench.optimal_length = n_opt;
    bench.relative_error = static_cast<double>(bench.length - n_opt) / n_opt;
    result.benchmark = bench;
  }
  return result;
}

GroupResult synthesize_group(const std::vector<int>& orders, Grouping grouping,
                             const MarkConstraint& constraint,
                             const GaConfig& config, RandomStream& rng) {
  if (orders.empty()) throw std::invalid_argument("group: at least one order");
  if (grouping == Grouping::kFra) {
    for (int k : orders)
      if (k != orders.front())
        throw std::invalid_argument("FRA grouping requires equal orders");
  }

  GroupResult out;
  out.group.grouping = grouping;
  MarkConstraint remaining = constraint;
  int target = grouping == Grouping::kErq ? config.target_length : 0;

  for (int order : orders) {
    GaConfig cfg = config;
    cfg.target_length = grouping == Grouping::kErq ? target : 0;
    SynthesisResult res = synthesize_ruler(order, remaining, cfg, rng);
    out.runs.push_back(res);
    if (!res.feasible) return out;  // partial group, complete stays false

    if (grouping == Grouping::kErq && target == 0) target = res.ruler.length();
    out.group.rulers.push_back(res.ruler);
    const std::vector<int> used = res.ruler.absolute_marks();
    if (remaining.size() <= static_cast<int>(used.size())) return out;
    remaining = remaining.without(used);
  }
  out.complete = true;
  return out;
}

}  // namespace golomb::ga
