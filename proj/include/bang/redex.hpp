#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bang/term.hpp"

namespace bang {

// Position of a subterm: the sequence of steps from the root.
enum class Dir { AbsBody, AppLeft, AppRight, BangBody, OpArg };

struct PathStep {
  Dir dir;
  std::size_t arg = 0;  // OpArg index
  bool operator==(const PathStep& o) const { return dir == o.dir && arg == o.arg; }
};
using Path = std::vector<PathStep>;

std::string pathToString(const Path& p);  // "root" for the empty path
TermPtr subtermAt(const TermPtr& t, const Path& p);
TermPtr replaceAt(const TermPtr& t, const Path& p, const TermPtr& s);
// Path of the unique hole of a context.
Path holePath(const TermPtr& ctx);

struct RuleId {
  enum class K { Beta, Betav, BangBeta, Op } k = K::BangBeta;
  std::string op;  // operator id when k == Op

  static RuleId beta() { return {K::Beta, ""}; }
  static RuleId betav() { return {K::Betav, ""}; }
  static RuleId bangBeta() { return {K::BangBeta, ""}; }
  static RuleId opRule(std::string name) { return {K::Op, std::move(name)}; }

  std::string name() const;
  bool operator==(const RuleId& o) const { return k == o.k && op == o.op; }
};

// A redex occurrence: position, matched rule, level under the active
// calculus' level function. der marks !beta-redexes whose function part is
// (alpha-equal to) \x.x.
struct Redex {
  Path path;
  RuleId rule;
  std::size_t level = 0;
  bool der = false;
};

inline constexpr std::size_t kInfLevel = std::numeric_limits<std::size_t>::max();

struct LeastLevel {
  std::size_t value = kInfLevel;
  bool infinite() const { return value == kInfLevel; }
  bool operator==(const LeastLevel& o) const { return value == o.value; }
};
std::string levelToString(std::size_t level);

// Level of the hole reached by `path` in `enclosing`, per the profile's level
// function. Bang counts bang/operator nesting; CbN argument/operator nesting;
// CbV operator nesting plus unapplied abstractions (an abstraction that is
// the immediate left child of an application adds nothing).
std::size_t levelOfPath(const Path& path, const Profile& p, const TermPtr& enclosing);

// All redex occurrences of the profile's rule set, in document order
// (outside-in, left-to-right), each with its level.
std::vector<Redex> enumerateRedexes(const TermPtr& t, const Profile& p);

LeastLevel leastLevel(const TermPtr& t, const Profile& p);

// Direct recursive computation of the least level; independent oracle for
// leastLevel. Bang profiles only.
LeastLevel leastLevelInductive(const TermPtr& t, const Profile& p);

}  // namespace bang
