#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bang/reduce.hpp"
#include "bang/term.hpp"

namespace bang {

// Term generation for the check suites. Exhaustive mode enumerates every
// alpha-class once (terms are produced in canonical form: binder names are
// fixed by depth); random mode is reproducible from the seed.
struct GenSpec {
  enum class Mode { Exhaustive, Random };
  Mode mode = Mode::Exhaustive;
  std::size_t maxSize = 6;
  std::size_t count = 0;  // Random only
  std::uint64_t seed = 0;
  Profile profile = Profile::bang();
  std::size_t freeVarPool = 2;
  bool includeOps = false;

  static GenSpec exhaustive(std::size_t maxSize, Profile p, bool ops = false,
                            std::size_t pool = 2);
  static GenSpec random(std::size_t count, std::size_t maxSize, std::uint64_t seed, Profile p,
                        bool ops = false, std::size_t pool = 2);
  std::string label() const;
};

std::vector<TermPtr> genTerms(const GenSpec& spec);

enum class Suite {
  Factorization,
  Completeness,
  GoodLeastLevel,
  QuasiDiamond,       // least-level steps of the active profile
  QuasiDiamondLlLo,   // union of least-level and leftmost-outermost (CbN)
  SimulationCbN,
  SimulationCbV,
  NormalFormPreservation,
  LevelPreservation,
  LLStepPreservation,
  ModularTest,        // substitutivity + root linear swap + Roots, for oplus
  StrongPostponement, // internal-oplus strongly postpones after ll-oplus
  MergeSplit,
  SurfaceInLL,
  ShapePreservation,
  LLInductiveAgreement,
  TranslationInverses,
};

std::string suiteName(Suite s);
std::optional<Suite> suiteFromName(const std::string& name);
std::vector<Suite> allSuites();

struct Failure {
  TermPtr input;
  std::string detail;
  std::string trace;  // witness traces, in the trace text format where applicable
};

struct CheckReport {
  Suite suite;
  std::string suiteLabel;  // suite name + profile + corpus
  std::size_t casesRun = 0;
  std::size_t inconclusive = 0;  // fuel/cap-exhausted cases, never failures
  std::vector<Failure> failures;
  double wallMs = 0;

  bool passed() const { return failures.empty(); }
};

CheckReport runSuite(Suite s, const GenSpec& spec, std::size_t fuel, std::size_t cap);

// Machine-readable report; timing is excluded so output is reproducible
// bit-for-bit for a given (suite, spec, fuel, cap).
std::string formatReport(const CheckReport& r, bool includeTiming = false);

enum class WitnessStatus { Found, NotFound, Inconclusive };

struct FactorizationWitness {
  WitnessStatus status = WitnessStatus::Inconclusive;
  std::vector<StepRecord> llPrefix;
  std::vector<StepRecord> internalSuffix;
};

// Search a two-phase path t -ll->* . -int->* u inside the bounded reachable
// graph of t. NotFound is only reported when the graph is complete, i.e. the
// absence is a genuine counterexample.
FactorizationWitness factorizationWitness(const TermPtr& t, const TermPtr& u, const Profile& p,
                                          std::size_t fuel, std::size_t cap = kDefaultGraphCap);

}  // namespace bang
