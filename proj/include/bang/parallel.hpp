#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bang/redex.hpp"
#include "bang/term.hpp"

namespace bang {

// Parallel !beta-reduction (operators pass through pointwise, their redexes
// are never fired). Each reachable target carries the set of
// (levelIndex, countIndex) pairs achievable by some derivation:
//   levelIndex — the n of the level-indexed relation: every fired redex sits
//     at level >= n; infinity iff nothing fires (identity derivation).
//   countIndex — the n of the count-indexed relation: 0 on the identity and
//     n1 + occurrences(x in T') * n2 + 1 at a fired root redex.
struct ParallelTarget {
  TermPtr to;
  std::set<std::pair<std::size_t, std::size_t>> indices;

  std::size_t maxLevelIndex() const;
  std::size_t minCountIndex() const;
};

// Keyed by canonical form of the target; always contains the identity step.
// Refuses terms with more than 16 !beta-redexes.
std::map<std::string, ParallelTarget> parallelSuccessors(const TermPtr& t);

inline constexpr std::size_t kMaxParallelRedexes = 16;

// Summary view: one step per distinct target with the aggregated indices
// (maximal levelIndex, minimal countIndex over derivations).
struct ParallelStep {
  TermPtr from, to;
  std::size_t levelIndex;
  std::size_t countIndex;
};
std::vector<ParallelStep> parallelSteps(const TermPtr& t);

// The internal parallel reduction: targets S with t => S at levelIndex n
// where n is infinite or exceeds the least level of t.
std::vector<TermPtr> internalParallelSuccessors(const TermPtr& t,
                                                const Profile& p = Profile::bang());

}  // namespace bang
