#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "golomb/random.hpp"
#include "golomb/rulers.hpp"

namespace golomb::ga {

// Consecutive-mark differences; the genome used by the genetic algorithm.
// Marks are recovered as prefix sums starting at zero.
struct SegmentSeq {
  std::vector<int> segments;  // all >= 1

  Ruler to_ruler() const;
  int length() const;  // sum of segments
  bool operator==(const SegmentSeq&) const = default;
};

struct GaConfig {
  int population = 4;        // P
  int max_mutations = 0;     // C; 0 selects 200 * order
  int max_generations = 500; // G
  int initial_s_max = 0;     // 0 selects order - 1
  int max_escalations = 0;   // 0 selects 2 * order
  int max_restarts = 240;    // full init/mutate/evolve cycles, keeping the best
  int target_length = 0;     // > 0: require this exact length (ERQ grouping)
  int stop_at_length = 0;    // > 0: stop as soon as a feasible ruler reaches it
  bool male_requires_feasible = false;  // stricter male replacement rule
  bool trace = false;        // record per-generation male fitness
};

struct Population {
  std::vector<SegmentSeq> candidates;      // pairwise distinct
  std::vector<long long> fitness;          // cache, parallel to candidates
  std::optional<std::size_t> dominant_male;
};

struct GaBenchmark {
  int length = 0;
  int optimal_length = 0;
  double relative_error = 0.0;  // (length - optimal) / optimal
};

struct SynthesisResult {
  Ruler ruler;          // shifted to the minimizing translation
  bool feasible = false;
  long long fitness = 0;
  int generations = 0;
  int restarts = 0;
  int escalations = 0;
  int final_s_max = 0;
  std::optional<GaBenchmark> benchmark;
  std::vector<long long> male_fitness_trace;  // filled when config.trace
};

/// Known optimal Golomb ruler lengths for orders 2..15; 0 when unknown.
int optimal_length(int order);

/// f(S) = N * (R + F + 1).
long long fitness(const SegmentSeq& candidate, const MarkConstraint& constraint);

// ERQ variant: the length factor becomes N + |N - target| so the minimum is
// attained only at the target length.
long long fitness(const SegmentSeq& candidate, const MarkConstraint& constraint,
                  int target_length);

// P distinct sequences, each the (K-1)-truncation of a uniform random
// permutation of {1, ..., s_max}; duplicates are redrawn. Throws when more
// distinct sequences are requested than exist.
Population init_population(int order, int s_max, int population, RandomStream& rng);

// Deterministic elementary moves (randomized wrappers below draw their
// arguments from the stream).
SegmentSeq transmuted(const SegmentSeq& candidate, std::size_t pos, int value);
SegmentSeq swapped(const SegmentSeq& candidate, std::size_t i, std::size_t j);

// One elementary mutation: an even coin picks transmutation (a segment
// other than 1 redrawn from {2..s_max}, excluding its current value) or
// permutation (two positions swapped). All-ones sequences fall back to
// permutation.
SegmentSeq mutate(const SegmentSeq& candidate, int s_max, RandomStream& rng);

/// Child = male with the block [i, j] replaced by the female's block.
SegmentSeq crossover_block(const SegmentSeq& male, const SegmentSeq& female,
                           std::size_t i, std::size_t j);
SegmentSeq crossover(const SegmentSeq& male, const SegmentSeq& female,
                     RandomStream& rng);

// Full synthesis: init -> bounded mutation passes -> dominant-male selection
// -> crossover evolution, escalating s_max and restarting when no
// repetition-free candidate appears, keeping the best feasible ruler seen.
SynthesisResult synthesize_ruler(int order, const MarkConstraint& constraint,
                                 const GaConfig& config, RandomStream& rng);

struct GroupResult {
  RulerGroup group;
  std::vector<SynthesisResult> runs;
  bool complete = false;
};

// Sequential synthesis of mutually orthogonal rulers: after each success the
// accepted marks are removed from the constraint. ERQ locks every ruler to
// the target length (the first ruler's length when no target is given); FRA
// requires equal orders.
GroupResult synthesize_group(const std::vector<int>& orders, Grouping grouping,
                             const MarkConstraint& constraint,
                             const GaConfig& config, RandomStream& rng);

}  // namespace golomb::ga
