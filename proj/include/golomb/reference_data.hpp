#pragma once

#include <vector>

#include "golomb/rulers.hpp"

namespace golomb::reference {

// Bundled orthogonal ruler groups over the span {0..99}: five rulers of
// equal length 87 (ERQ) and five rulers of order 10 (FRA). Used by the
// demo experiments and the verification suites.
RulerGroup erq_group();
RulerGroup fra_group();

// Published mean relative errors (%) for the literature GA baselines,
// indexed by order 5..15: Soliday's algorithm and the pride-style GA with
// population 2 and 4.
struct BaselineEta {
  double soliday = 0.0;
  double proposed_p2 = 0.0;
  double proposed_p4 = 0.0;
};

BaselineEta baseline_eta(int order);

}  // namespace golomb::reference
