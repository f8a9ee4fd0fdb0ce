#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bang/redex.hpp"
#include "bang/term.hpp"

namespace bang {

// One contraction. Classification is relative to the source term:
// leastLevel iff the redex level equals ll(from), internal iff it exceeds it,
// surface iff the level is 0.
struct StepRecord {
  TermPtr from, to;
  Redex redex;
  std::size_t alt = 0;  // contraction alternative for operator rules
  bool leastLevel = false;
  bool internal = false;
  bool surface = false;
};

struct StepFilter {
  enum class K { All, LeastLevel, Internal, Surface, AtLevel, LeftmostOutermost, Rule, DOnly };
  K k = K::All;
  std::size_t level = 0;
  std::optional<RuleId> rule;

  static StepFilter all() { return {}; }
  static StepFilter leastLevel() { return {K::LeastLevel, 0, {}}; }
  static StepFilter internal() { return {K::Internal, 0, {}}; }
  static StepFilter surface() { return {K::Surface, 0, {}}; }
  static StepFilter atLevel(std::size_t l) { return {K::AtLevel, l, {}}; }
  static StepFilter leftmostOutermost() { return {K::LeftmostOutermost, 0, {}}; }
  static StepFilter ruleOnly(RuleId r) { return {K::Rule, 0, std::move(r)}; }
  static StepFilter dOnly() { return {K::DOnly, 0, {}}; }
};

// All one-step reducts matching the filter, in document order of their
// redexes; an oplus redex contributes one record per contraction.
// LeftmostOutermost is defined only for CbN/CbV profiles.
std::vector<StepRecord> successors(const TermPtr& t, const Profile& p,
                                   const StepFilter& f = StepFilter::all());

bool isNormal(const TermPtr& t, const Profile& p);

// Exhaustive leftmost-outermost contraction of der-redexes (\x.x)!T -> T.
TermPtr dNormalize(const TermPtr& t);

enum class StrategyId { LeastLevelDeterministic, LeftmostOutermost, SurfaceFirst, FullLeftmost };
std::string strategyName(StrategyId s);

struct ReduceOutcome {
  bool normalForm = false;  // false: fuel exhausted (or cycle detected)
  TermPtr term;
  std::vector<StepRecord> trace;
  bool cycleDetected = false;
  std::size_t distinctStates = 0;
};

// Iterate single steps until normal or out of fuel. Deterministic strategies
// take the leftmost redex of their class and project-left on operator rules;
// a seed switches operator contraction choice to seeded-uniform. Without a
// seed, revisiting a state ends the run with cycleDetected set.
ReduceOutcome reduce(const TermPtr& t, const Profile& p, StrategyId strategy, std::size_t fuel,
                     std::optional<std::uint64_t> seed = std::nullopt);

inline constexpr std::size_t kDefaultGraphCap = 10000;

struct GraphEdge {
  std::size_t from, to;
  StepRecord step;
};

struct ReductionGraph {
  std::vector<TermPtr> nodes;  // discovery (BFS) order; node 0 is the root
  std::unordered_map<std::string, std::size_t> index;  // canonical key -> node
  std::vector<GraphEdge> edges;
  std::vector<std::vector<std::size_t>> out;  // edge ids leaving each node
  bool truncated = false;
};

// Breadth-first closure of All-successors up to depth `fuel` and `cap` nodes,
// deduplicated by canonical form.
ReductionGraph reachableGraph(const TermPtr& t, const Profile& p, std::size_t fuel,
                              std::size_t cap = kDefaultGraphCap);

// Trace text: `<index>: <term> --<rule>@<level>[,ll][,int][,surf]--> <term>`.
std::string formatStep(const StepRecord& s, std::size_t index);
std::string formatTrace(const std::vector<StepRecord>& trace);

std::string toDot(const ReductionGraph& g);

}  // namespace bang
