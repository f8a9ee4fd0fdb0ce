#include "bang/props.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "bang/parallel.hpp"
#include "bang/parse.hpp"
#include "bang/translate.hpp"

namespace bang {

// ---------------------------------------------------------------------------
// Generation

GenSpec GenSpec::exhaustive(std::size_t maxSize, Profile p, bool ops, std::size_t pool) {
  GenSpec s;
  s.mode = Mode::Exhaustive;
  s.maxSize = maxSize;
  s.profile = std::move(p);
  s.includeOps = ops;
  s.freeVarPool = pool;
  return s;
}

GenSpec GenSpec::random(std::size_t count, std::size_t maxSize, std::uint64_t seed, Profile p,
                        bool ops, std::size_t pool) {
  GenSpec s;
  s.mode = Mode::Random;
  s.maxSize = maxSize;
  s.count = count;
  s.seed = seed;
  s.profile = std::move(p);
  s.includeOps = ops;
  s.freeVarPool = pool;
  return s;
}

std::string GenSpec::label() const {
  std::ostringstream os;
  if (mode == Mode::Exhaustive) {
    os << "exhaustive(size<=" << maxSize << ")";
  } else {
    os << "random(count=" << count << ",size<=" << maxSize << ",seed=" << seed << ")";
  }
  os << " " << profile.label() << " pool=" << freeVarPool << (includeOps ? " ops" : "");
  return os.str();
}

namespace {

const char* kPoolNames[] = {"x", "y", "z", "w", "v", "u"};

std::string poolName(std::size_t i) {
  if (i < 6) return kPoolNames[i];
  return "fv" + std::to_string(i);
}

std::string binderName(std::size_t depth) {
  if (depth < 20) return std::string(1, static_cast<char>('a' + depth));
  return "bv" + std::to_string(depth);
}

struct Generator {
  const GenSpec& spec;
  std::vector<const OperatorSig*> ops;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<TermPtr>> memo;

  explicit Generator(const GenSpec& s) : spec(s) {
    if (s.includeOps) {
      for (const auto& name : s.profile.ops) {
        if (const OperatorSig* sig = s.profile.registry->find(name)) ops.push_back(sig);
      }
    }
  }

  bool allowBang() const { return spec.profile.calc == Calc::Bang; }

  // All canonical terms of exactly `size` under `depth` enclosing binders.
  const std::vector<TermPtr>& exact(std::size_t size, std::size_t depth) {
    auto key = std::make_pair(size, depth);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<TermPtr> out;
    if (size == 1) {
      for (std::size_t i = 0; i < spec.freeVarPool; ++i) out.push_back(mkVar(poolName(i)));
      for (std::size_t d = 0; d < depth; ++d) out.push_back(mkVar(binderName(d)));
    } else if (size >= 2) {
      for (const auto& b : exact(size - 1, depth + 1)) out.push_back(mkAbs(binderName(depth), b));
      if (allowBang()) {
        for (const auto& b : exact(size - 1, depth)) out.push_back(mkBang(b));
      }
      for (std::size_t i = 1; i + 1 < size; ++i) {
        for (const auto& f : exact(i, depth)) {
          for (const auto& a : exact(size - 1 - i, depth)) out.push_back(mkApp(f, a));
        }
      }
      for (const OperatorSig* sig : ops) {
        if (sig->arity == 0) continue;
        appendOpTerms(*sig, size - 1, depth, out);
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  }

  void appendOpTerms(const OperatorSig& sig, std::size_t budget, std::size_t depth,
                     std::vector<TermPtr>& out) {
    std::vector<TermPtr> partial;
    buildArgs(sig, 0, budget, depth, partial, out);
  }

  void buildArgs(const OperatorSig& sig, std::size_t i, std::size_t budget, std::size_t depth,
                 std::vector<TermPtr>& partial, std::vector<TermPtr>& out) {
    std::size_t remaining = sig.arity - i;
    if (remaining == 0) {
      if (budget == 0) out.push_back(mkOp(sig.name, partial));
      return;
    }
    // each remaining argument needs at least size 1
    for (std::size_t sz = 1; sz + (remaining - 1) <= budget; ++sz) {
      for (const auto& a : exact(sz, depth)) {
        partial.push_back(a);
        buildArgs(sig, i + 1, budget - sz, depth, partial, out);
        partial.pop_back();
      }
    }
  }

  TermPtr randomTerm(std::size_t budget, std::size_t depth, std::mt19937_64& rng) {
    if (budget <= 1) {
      std::size_t n = spec.freeVarPool + depth;
      std::size_t i = rng() % n;
      return i < spec.freeVarPool ? mkVar(poolName(i)) : mkVar(binderName(i - spec.freeVarPool));
    }
    // weighted constructor choice; 'r' builds a redex-shaped application so
    // random corpora actually exercise reduction
    struct Choice { char tag; const OperatorSig* op; };
    std::vector<Choice> choices;
    auto addN = [&](char tag, int w, const OperatorSig* op = nullptr) {
      for (int i = 0; i < w; ++i) choices.push_back({tag, op});
    };
    addN('v', 1);
    addN('L', 3);
    if (allowBang()) addN('!', 2);
    if (budget >= 3) addN('@', 2);
    if (budget >= (allowBang() ? 5u : 4u)) addN('r', 4);
    for (const OperatorSig* sig : ops) {
      if (budget >= 1 + sig->arity) addN('o', 2, sig);
    }
    Choice c = choices[rng() % choices.size()];
    switch (c.tag) {
      case 'v':
        return randomTerm(1, depth, rng);
      case 'L':
        return mkAbs(binderName(depth), randomTerm(budget - 1, depth + 1, rng));
      case '!':
        return mkBang(randomTerm(budget - 1, depth, rng));
      case '@': {
        std::size_t left = 1 + rng() % (budget - 2);
        TermPtr f = randomTerm(left, depth, rng);
        TermPtr a = randomTerm(budget - 1 - left, depth, rng);
        return mkApp(f, a);
      }
      case 'r': {
        if (allowBang()) {
          // (\x.body) !boxed
          std::size_t bodySz = 1 + rng() % (budget - 4);
          TermPtr body = randomTerm(bodySz, depth + 1, rng);
          TermPtr boxed = randomTerm(budget - 3 - bodySz, depth, rng);
          return mkApp(mkAbs(binderName(depth), body), mkBang(boxed));
        }
        // (\x.body) arg, with the argument biased toward values so the
        // shape is also a betav-redex most of the time
        std::size_t bodySz = 1 + rng() % (budget - 3);
        TermPtr body = randomTerm(bodySz, depth + 1, rng);
        std::size_t argSz = budget - 2 - bodySz;
        TermPtr arg = (argSz >= 2 && rng() % 2 == 0)
                          ? mkAbs(binderName(depth), randomTerm(argSz - 1, depth + 1, rng))
                          : randomTerm(argSz, depth, rng);
        return mkApp(mkAbs(binderName(depth), body), arg);
      }
      case 'o': {
        std::size_t rest = budget - 1;
        std::vector<TermPtr> as;
        for (std::size_t i = 0; i < c.op->arity; ++i) {
          std::size_t slots = c.op->arity - i - 1;
          std::size_t sz = slots ? 1 + rng() % (rest - slots) : rest;
          as.push_back(randomTerm(sz, depth, rng));
          rest -= sz;
        }
        return mkOp(c.op->name, std::move(as));
      }
    }
    return mkVar(poolName(0));
  }
};

}  // namespace

std::vector<TermPtr> genTerms(const GenSpec& spec) {
  Generator gen(spec);
  std::vector<TermPtr> out;
  if (spec.mode == GenSpec::Mode::Exhaustive) {
    for (std::size_t sz = 1; sz <= spec.maxSize; ++sz) {
      const auto& v = gen.exact(sz, 0);
      out.insert(out.end(), v.begin(), v.end());
    }
  } else {
    std::mt19937_64 rng(spec.seed);
    out.reserve(spec.count);
    for (std::size_t i = 0; i < spec.count; ++i) {
      out.push_back(gen.randomTerm(spec.maxSize, 0, rng));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Suite bookkeeping

std::string suiteName(Suite s) {
  switch (s) {
    case Suite::Factorization: return "factorization";
    case Suite::Completeness: return "completeness";
    case Suite::GoodLeastLevel: return "good-ll";
    case Suite::QuasiDiamond: return "quasi-diamond";
    case Suite::QuasiDiamondLlLo: return "quasi-diamond-ll-lo";
    case Suite::SimulationCbN: return "simulation-cbn";
    case Suite::SimulationCbV: return "simulation-cbv";
    case Suite::NormalFormPreservation: return "nf-preservation";
    case Suite::LevelPreservation: return "level-preservation";
    case Suite::LLStepPreservation: return "ll-step-preservation";
    case Suite::ModularTest: return "modular-test";
    case Suite::StrongPostponement: return "strong-postponement";
    case Suite::MergeSplit: return "merge-split";
    case Suite::SurfaceInLL: return "surface-in-ll";
    case Suite::ShapePreservation: return "shape-preservation";
    case Suite::LLInductiveAgreement: return "ll-inductive-agreement";
    case Suite::TranslationInverses: return "translation-inverses";
  }
  return "?";
}

std::vector<Suite> allSuites() {
  return {Suite::Factorization,       Suite::Completeness,
          Suite::GoodLeastLevel,      Suite::QuasiDiamond,
          Suite::QuasiDiamondLlLo,    Suite::SimulationCbN,
          Suite::SimulationCbV,       Suite::NormalFormPreservation,
          Suite::LevelPreservation,   Suite::LLStepPreservation,
          Suite::ModularTest,         Suite::StrongPostponement,
          Suite::MergeSplit,          Suite::SurfaceInLL,
          Suite::ShapePreservation,   Suite::LLInductiveAgreement,
          Suite::TranslationInverses};
}

std::optional<Suite> suiteFromName(const std::string& name) {
  for (Suite s : allSuites()) {
    if (suiteName(s) == name) return s;
  }
  return std::nullopt;
}

namespace {

[[noreturn]] void incompatible(Suite s, const Profile& p) {
  throw std::invalid_argument("suite " + suiteName(s) + " is incompatible with profile " +
                              p.label());
}

struct SuiteCtx {
  CheckReport& report;
  std::size_t fuel;
  std::size_t cap;

  void fail(const TermPtr& input, std::string detail, std::string trace = "") {
    report.failures.push_back({input, std::move(detail), std::move(trace)});
  }
};

// Nodes reachable from node 0 via a least-level prefix followed by an
// internal suffix. Returns per-node flags (reachedInE, reachedInI).
struct TwoPhase {
  std::vector<char> e, i;
  bool decided(std::size_t n) const { return e[n] || i[n]; }
};

TwoPhase twoPhaseReach(const ReductionGraph& g) {
  TwoPhase tp{std::vector<char>(g.nodes.size(), 0), std::vector<char>(g.nodes.size(), 0)};
  std::deque<std::pair<std::size_t, bool>> queue;  // (node, inPhaseE)
  tp.e[0] = 1;
  queue.push_back({0, true});
  while (!queue.empty()) {
    auto [v, phaseE] = queue.front();
    queue.pop_front();
    if (phaseE && !tp.i[v]) {  // switch phases at any point
      tp.i[v] = 1;
      queue.push_back({v, false});
    }
    for (std::size_t eid : g.out[v]) {
      const GraphEdge& edge = g.edges[eid];
      if (phaseE && edge.step.leastLevel && !tp.e[edge.to]) {
        tp.e[edge.to] = 1;
        queue.push_back({edge.to, true});
      }
      if (!phaseE && edge.step.internal && !tp.i[edge.to]) {
        tp.i[edge.to] = 1;
        queue.push_back({edge.to, false});
      }
    }
  }
  return tp;
}

// Nodes reachable from node 0 using only edges accepted by `keep`.
std::vector<char> reachVia(const ReductionGraph& g,
                           const std::function<bool(const StepRecord&)>& keep) {
  std::vector<char> vis(g.nodes.size(), 0);
  std::deque<std::size_t> queue{0};
  vis[0] = 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t eid : g.out[v]) {
      const GraphEdge& edge = g.edges[eid];
      if (!vis[edge.to] && keep(edge.step)) {
        vis[edge.to] = 1;
        queue.push_back(edge.to);
      }
    }
  }
  return vis;
}

// Any path node0 -> target as a trace (BFS tree).
std::vector<StepRecord> anyPath(const ReductionGraph& g, std::size_t target) {
  std::vector<std::ptrdiff_t> parentEdge(g.nodes.size(), -1);
  std::vector<char> vis(g.nodes.size(), 0);
  std::deque<std::size_t> queue{0};
  vis[0] = 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    if (v == target) break;
    for (std::size_t eid : g.out[v]) {
      const GraphEdge& edge = g.edges[eid];
      if (!vis[edge.to]) {
        vis[edge.to] = 1;
        parentEdge[edge.to] = static_cast<std::ptrdiff_t>(eid);
        queue.push_back(edge.to);
      }
    }
  }
  std::vector<StepRecord> steps;
  for (std::size_t v = target; parentEdge[v] >= 0;) {
    const GraphEdge& edge = g.edges[static_cast<std::size_t>(parentEdge[v])];
    steps.push_back(edge.step);
    v = edge.from;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

using KeyMultiset = std::multiset<std::string>;

std::string multisetDiff(const KeyMultiset& lhs, const KeyMultiset& rhs) {
  std::ostringstream os;
  os << "lhs={";
  for (const auto& k : lhs) os << k << "; ";
  os << "} rhs={";
  for (const auto& k : rhs) os << k << "; ";
  os << "}";
  return os.str();
}

std::string simClass(const RuleId& r) {
  switch (r.k) {
    case RuleId::K::Beta:
    case RuleId::K::Betav:
    case RuleId::K::BangBeta:
      return "!beta";
    case RuleId::K::Op:
      return r.op;
  }
  return "?";
}

// Performs the at-most-one d-step tail of the CbV simulation: the unique
// der-redex created by the previous step, if any.
struct DTail {
  TermPtr result;
  bool used = false;
  bool ok = true;
  std::string err;
  std::size_t dLevel = 0;
  bool dLeast = false, dInternal = false;
};

DTail dTail(const TermPtr& s0, const Profile& bangProfile) {
  DTail out;
  auto ders = successors(s0, bangProfile, StepFilter::dOnly());
  if (ders.empty()) {
    out.result = s0;
    return out;
  }
  if (ders.size() > 1) {
    out.ok = false;
    out.err = "more than one der-redex after a single step";
    out.result = s0;
    return out;
  }
  out.used = true;
  out.result = ders.front().to;
  out.dLevel = ders.front().redex.level;
  out.dLeast = ders.front().leastLevel;
  out.dInternal = ders.front().internal;
  if (!successors(out.result, bangProfile, StepFilter::dOnly()).empty()) {
    out.ok = false;
    out.err = "target not d-normal after one d-step";
  }
  return out;
}

bool isTranslationImage(const TermPtr& x) {
  if (!inImage(x).cbv) return false;
  return alphaEq(cbvTranslate(forgetful(x)), x);
}

// All subterm positions of t in document order (including the root).
void collectPaths(const TermPtr& t, Path& cur, std::vector<Path>& out) {
  out.push_back(cur);
  switch (t->kind) {
    case Kind::Var:
    case Kind::Hole:
      return;
    case Kind::Abs:
      cur.push_back({Dir::AbsBody});
      collectPaths(t->sub0, cur, out);
      cur.pop_back();
      return;
    case Kind::App:
      cur.push_back({Dir::AppLeft});
      collectPaths(t->sub0, cur, out);
      cur.back() = {Dir::AppRight};
      collectPaths(t->sub1, cur, out);
      cur.pop_back();
      return;
    case Kind::Bang:
      cur.push_back({Dir::BangBody});
      collectPaths(t->sub0, cur, out);
      cur.pop_back();
      return;
    case Kind::Op:
      for (std::size_t i = 0; i < t->args.size(); ++i) {
        cur.push_back({Dir::OpArg, i});
        collectPaths(t->args[i], cur, out);
        cur.pop_back();
      }
      return;
  }
}

std::vector<Path> allPaths(const TermPtr& t) {
  std::vector<Path> out;
  Path cur;
  collectPaths(t, cur, out);
  return out;
}

bool ruleNormal(const TermPtr& t, const Profile& p, const RuleId& rule) {
  for (const auto& r : enumerateRedexes(t, p)) {
    if (r.rule == rule) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Suite bodies

void runFactorization(SuiteCtx& ctx, const std::vector<TermPtr>& corpus, const Profile& p) {
  for (const auto& t : corpus) {
    ReductionGraph g = reachableGraph(t, p, ctx.fuel, ctx.cap);
    TwoPhase tp = twoPhaseReach(g);
    for (std::size_t u = 0; u < g.nodes.size(); ++u) {
      ++ctx.report.casesRun;
      if (tp.decided(u)) continue;
      if (g.truncated) {
        ++ctx.report.inconclusive;
      } else {
        ctx.fail(t, "no ll*-then-internal* path to " + print(g.nodes[u]),
                 formatTrace(anyPath(g, u)));
      }
    }
  }
}

void runCompleteness(SuiteCtx& ctx, const std::vector<TermPtr>& corpus, const Profile& p) {
  for (const auto& t : corpus) {
    ReductionGraph g = reachableGraph(t, p, ctx.fuel, ctx.cap);
    auto llVis = reachVia(g, [](const StepRecord& s) { return s.leastLevel; });
    for (std::size_t u = 0; u < g.nodes.size(); ++u) {
      if (!isNormal(g.nodes[u], p)) continue;
      ++ctx.report.casesRun;
      if (llVis[u]) continue;
      if (g.truncated) {
        ++ctx.report.inconclusive;
      } else {
        ctx.fail(t, "normal form " + print(g.nodes[u]) + " not reachable by least-level steps",
                 formatTrace(anyPath(g, u)));
      }
    }
  }
}

void runGoodLeastLevel(SuiteCtx& ctx, const std::vector<TermPtr>& corpus, const Profile& p) {
  for (const auto& t : corpus) {
    ReductionGraph g = reachableGraph(t, p, ctx.fuel, ctx.cap);
    for (const auto& e : g.edges) {
      ++ctx.report.casesRun;
      std::size_t llFrom = leastLevel(g.nodes[e.from], p).value;
      std::size_t llTo = leastLevel(g.nodes[e.to], p).value;
      if (llFrom != kInfLevel && (llTo == kInfLevel ? false : llTo < llFrom)) {
        ctx.fail(g.nodes[e.from],
                 "monotonicity: ll dropped from " + levelToString(llFrom) + " to " +
                     levelToString(llTo),
                 formatStep(e.step, 0));
      }
      if (e.step.internal && llFrom != llTo) {
        ctx.fail(g.nodes[e.from],
                 "internal invariance: ll changed from " + levelToString(llFrom) + " to " +
                     levelToString(llTo),
                 formatStep(e.step, 0));
      }
      if (e.step.internal && isNormal(g.nodes[e.to], p)) {
        ctx.fail(g.nodes[e.from], "persistence: internal step reached a normal form",
                 formatStep(e.step, 0));
      }
    }
  }
}

void runQuasiDiamond(SuiteCtx& ctx, const std::vector<TermPtr>& corpus, const Profile& p,
                     bool unionWithLo) {
  auto relSucc = [&](const TermPtr& t) {
    std::map<std::string, TermPtr> out;
    for (const auto& s : successors(t, p, StepFilter::leastLevel())) {
      out.emplace(canonicalKey(s.to), s.to);
    }
    if (unionWithLo) {
      for (const auto& s : successors(t, p, StepFilter::leftmostOutermost())) {
        out.emplace(canonicalKey(s.to), s.to);
      }
    }
    return out;
  };
  for (const auto& t : corpus) {
    auto peaks = relSucc(t);
    std::vector<std::pair<std::string, TermPtr>> succ(peaks.begin(), peaks.end());
    for (std::size_t i = 0; i < succ.size(); ++i) {
      for (std::size_t j = i + 1; j < succ.size(); ++j) {
        ++ctx.report.casesRun;
        auto s1 = relSucc(succ[i].second);
        auto s2 = relSucc(succ[j].second);
        bool joined = false;
        for (const auto& [k, v] : s1) {
          if (s2.count(k)) {
            joined = true;
            break;
          }
        }
        if (!joined) {
          ctx.fail(t, "peak does not join in one step: " + print(succ[i].second) + "  vs  " +
                          print(succ[j].second));
        }
      }
    }
  }
}

void runSimulationCbN(SuiteCtx& ctx, const std::vector<TermPtr>& corpus, const Profile& p) {
  Profile bp = Profile::bang(p.ops);
  for (const auto& t : corpus) {
    ++ctx.report.casesRun;
    TermPtr tn = cbnTranslate(t);
    KeyMultiset lhs, rhs;
    for (const auto& s : successors(t, p, StepFilter::all())) {
      lhs.insert(simClass(s.redex.rule) + "|" + canonicalKey(cbnTranslate(s.to)));
    }
    for (const auto& s : successors(tn, bp, StepFilter::all())) {
      rhs.insert(simClass(s.redex.rule) + "|" + canonicalKey(s.to));
    }
    if (lhs != rhs) {
      ctx.fail(t, "CbN simulation mismatch on " + print(tn) + ": " + multisetDiff(lhs, rhs));
    }
  }
}

void runSimulationCbV(SuiteCtx& ctx, const std::vector<TermPtr>& corpus, const Profile& p) {
  Profile bp = Profile::bang(p.ops);
  for (const auto& t : corpus) {
    ++ctx.report.casesRun;
    TermPtr tv = cbvTranslate(t);
    if (!successors(tv, bp, StepFilter::dOnly()).empty()) {
      ctx.fail(t, "translation " + print(tv) + " is not d-normal");
      continue;
    }
    KeyMultiset lhs, rhs;
    bool bad = false;
    for (const auto& s : successors(t, p, StepFilter::all())) {
      lhs.insert(simClass(s.redex.rule) + "|" + canonicalKey(cbvTranslate(s.to)));
    }
    for (const auto& s : successors(tv, bp, StepFilter::all())) {
      DTail d = dTail(s.to, bp);
      if (!d.ok) {
        ctx.fail(t, "CbV simulation: " + d.err + " after " + formatStep(s, 0));
        bad = true;
        break;
      }
      rhs.insert(simClass(s.redex.rule) + "|" + canonicalKey(d.result));
    }
    if (!bad && lhs != rhs) {
      ctx.fail(t, "CbV simulation mismatch on " + print(tv) + ": " + multisetDiff(lhs, rhs));
    }
  }
}

void runNormalFormPreservation(SuiteCtx& ctx, const std::vector<TermPtr>& corpus,
                               const Profile& p) {
  Profile bp = Profile::bang(p.ops);
  Profile cbnP = Profile::cbn(p.ops);
  Profile cbvP = Profile::cbv(p.ops);
  for (const auto& t : corpus) {
    ++ctx.report.casesRun;
    TermPtr tn = cbnTranslate(t);
    TermPtr tv = cbvTranslate(t);
    if (ruleNormal(t, cbnP, RuleId::beta()) != ruleNormal(tn, bp, RuleId::bangBeta())) {
      ctx.fail(t, "beta-normality not preserved by CbN translation: " + print(tn));
    }
    if (ruleNormal(t, cbvP, RuleId::betav()) != ruleNormal(tv, bp, RuleId::bangBeta())) {
      ctx.fail(t, "betav-normality not preserved by CbV translation: " + print(tv));
    }
    for (const auto& o : p.ops) {
      RuleId rule = RuleId::opRule(o);
      if (ruleNormal(t, cbnP, rule) != ruleNormal(tn, bp, rule)) {
        ctx.fail(t, o + "-normality not preserved by CbN translation: " + print(tn));
      }
      if (ruleNormal(t, cbvP, rule) != ruleNormal(tv, bp, rule)) {
        ctx.fail(t, o + "-normality not preserved by CbV translation: " + print(tv));
      }
    }
  }
}

void runLevelPreservation(SuiteCtx& ctx, const std::vector<TermPtr>& corpus, const Profile& p) {
  Profile bp = Profile::bang(p.ops);
  Profile cbnP = Profile::cbn(p.ops);
  Profile cbvP = Profile::cbv(p.ops);
  for (const auto& t : corpus) {
    ++ctx.report.casesRun;

    // context levels: lev^n(c) = lev(c^n) and lev^v(c) = lev(c^v)
    for (const auto& pos : allPaths(t)) {
      TermPtr c = replaceAt(t, pos, mkHole());
      TermPtr cn = cbnTranslate(c);
      TermPtr cv = cbvTranslate(c);
      std::size_t ln = levelOfPath(holePath(cn), bp, cn);
      std::size_t lv = levelOfPath(holePath(cv), bp, cv);
      if (levelOfPath(pos, cbnP, t) != ln) {
        ctx.fail(t, "CbN context level mismatch at " + pathToString(pos) + ": cbn " +
                        std::to_string(levelOfPath(pos, cbnP, t)) + " vs bang " +
                        std::to_string(ln));
      }
      if (levelOfPath(pos, cbvP, t) != lv) {
        ctx.fail(t, "CbV context level mismatch at " + pathToString(pos) + ": cbv " +
                        std::to_string(levelOfPath(pos, cbvP, t)) + " vs bang " +
                        std::to_string(lv));
      }
    }

    // step levels, CbN: t ->beta@k t'  iff  t^n ->!beta@k t'^n (op analog)
    TermPtr tn = cbnTranslate(t);
    KeyMultiset lhs, rhs;
    for (const auto& s : successors(t, cbnP, StepFilter::all())) {
      lhs.insert(simClass(s.redex.rule) + "@" + std::to_string(s.redex.level) + "|" +
                 canonicalKey(cbnTranslate(s.to)));
    }
    for (const auto& s : successors(tn, bp, StepFilter::all())) {
      rhs.insert(simClass(s.redex.rule) + "@" + std::to_string(s.redex.level) + "|" +
                 canonicalKey(s.to));
    }
    if (lhs != rhs) {
      ctx.fail(t, "CbN step-level mismatch: " + multisetDiff(lhs, rhs));
    }

    // step levels, CbV: t ->betav@k t'  iff  t^v ->!beta@k ->d@k^= t'^v
    TermPtr tv = cbvTranslate(t);
    KeyMultiset lhsV, rhsV;
    for (const auto& s : successors(t, cbvP, StepFilter::all())) {
      lhsV.insert(simClass(s.redex.rule) + "@" + std::to_string(s.redex.level) + "|" +
                  canonicalKey(cbvTranslate(s.to)));
    }
    bool bad = false;
    for (const auto& s : successors(tv, bp, StepFilter::all())) {
      DTail d = dTail(s.to, bp);
      if (!d.ok) {
        ctx.fail(t, "CbV level preservation: " + d.err);
        bad = true;
        break;
      }
      if (d.used && d.dLevel != s.redex.level) {
        ctx.fail(t, "CbV level preservation: d-step at level " + std::to_string(d.dLevel) +
                        " after step at level " + std::to_string(s.redex.level));
        bad = true;
        break;
      }
      rhsV.insert(simClass(s.redex.rule) + "@" + std::to_string(s.redex.level) + "|" +
                  canonicalKey(d.result));
    }
    if (!bad && lhsV != rhsV) {
      ctx.fail(t, "CbV step-level mismatch: " + multisetDiff(lhsV, rhsV));
    }

    // least levels
    if (!(leastLevel(t, cbnP) == leastLevel(tn, bp))) {
      ctx.fail(t, "ll^n(t) = " + levelToString(leastLevel(t, cbnP).value) + " but ll(t^n) = " +
                      levelToString(leastLevel(tn, bp).value));
    }
    if (!(leastLevel(t, cbvP) == leastLevel(tv, bp))) {
      ctx.fail(t, "ll^v(t) = " + levelToString(leastLevel(t, cbvP).value) + " but ll(t^v) = " +
                      levelToString(leastLevel(tv, bp).value));
    }
  }
}

void runLLStepPreservation(SuiteCtx& ctx, const std::vector<TermPtr>& corpus, const Profile& p) {
  Profile bp = Profile::bang(p.ops);
  Profile cbnP = Profile::cbn(p.ops);
  Profile cbvP = Profile::cbv(p.ops);
  for (const auto& t : corpus) {
    ++ctx.report.casesRun;
    TermPtr tn = cbnTranslate(t);
    TermPtr tv = cbvTranslate(t);

    // CbN least-level and internal steps map one-to-one through cbn
    for (bool wantLl : {true, false}) {
      KeyMultiset lhs, rhs;
      for (const auto& s : successors(t, cbnP, StepFilter::all())) {
        if ((wantLl && s.leastLevel) || (!wantLl && s.internal)) {
          lhs.insert(simClass(s.redex.rule) + "|" + canonicalKey(cbnTranslate(s.to)));
        }
      }
      for (const auto& s : successors(tn, bp, StepFilter::all())) {
        if ((wantLl && s.leastLevel) || (!wantLl && s.internal)) {
          rhs.insert(simClass(s.redex.rule) + "|" + canonicalKey(s.to));
        }
      }
      if (lhs != rhs) {
        ctx.fail(t, std::string("CbN ") + (wantLl ? "least-level" : "internal") +
                        " steps not preserved: " + multisetDiff(lhs, rhs));
      }
    }

    // CbV: the d-tail must carry the same classification, and the compound
    // only relates translation images
    for (bool wantLl : {true, false}) {
      KeyMultiset lhs, rhs;
      for (const auto& s : successors(t, cbvP, StepFilter::all())) {
        if ((wantLl && s.leastLevel) || (!wantLl && s.internal)) {
          lhs.insert(simClass(s.redex.rule) + "|" + canonicalKey(cbvTranslate(s.to)));
        }
      }
      bool bad = false;
      for (const auto& s : successors(tv, bp, StepFilter::all())) {
        if (!((wantLl && s.leastLevel) || (!wantLl && s.internal))) continue;
        DTail d = dTail(s.to, bp);
        if (!d.ok) {
          ctx.fail(t, "CbV ll-step preservation: " + d.err);
          bad = true;
          break;
        }
        if (d.used && ((wantLl && !d.dLeast) || (!wantLl && !d.dInternal))) continue;
        if (!isTranslationImage(d.result)) continue;
        rhs.insert(simClass(s.redex.rule) + "|" + canonicalKey(d.result));
      }
      if (!bad && lhs != rhs) {
        ctx.fail(t, std::string("CbV ") + (wantLl ? "least-level" : "internal") +
                        " steps not preserved: " + multisetDiff(lhs, rhs));
      }
    }
  }
}

std::vector<TermPtr> opRootContractions(const TermPtr& t, const Profile& p) {
  std::vector<TermPtr> out;
  if (t->kind != Kind::Op || !p.opActive(t->name)) return out;
  const OperatorSig* sig = p.registry->find(t->name);
  if (!sig || sig->arity != t->args.size()) return out;
  for (const auto& c : sig->contractions) out.push_back(c(t->args));
  return out;
}

void runModularTest(SuiteCtx& ctx, const std::vector<TermPtr>& corpus, const Profile& p,
                    const GenSpec& spec) {
  // substitution targets: small exhaustive pool in the same syntax
  GenSpec qSpec = spec;
  qSpec.mode = GenSpec::Mode::Exhaustive;
  qSpec.maxSize = 3;
  std::vector<TermPtr> qPool = genTerms(qSpec);

  for (const auto& t : corpus) {
    // substitutivity of the oplus root rule
    auto roots = opRootContractions(t, p);
    for (std::size_t alt = 0; alt < roots.size(); ++alt) {
      for (std::size_t i = 0; i < spec.freeVarPool; ++i) {
        std::string x = poolName(i);
        for (const auto& q : qPool) {
          ++ctx.report.casesRun;
          TermPtr lhs = substitute(t, x, q);
          auto lhsRoots = opRootContractions(lhs, p);
          TermPtr expect = substitute(roots[alt], x, q);
          if (alt >= lhsRoots.size() || !alphaEq(lhsRoots[alt], expect)) {
            ctx.fail(t, "oplus root rule not substitutive for {" + print(q) + "/" + x + "}");
          }
        }
      }
    }

    // root linear swap and Roots lemma premises: internal step into a root
    // oplus-redex
    for (const auto& s : successors(t, p, StepFilter::internal())) {
      auto mids = opRootContractions(s.to, p);
      if (mids.empty()) continue;
      bool gammaIsBang = s.redex.rule.k == RuleId::K::BangBeta;
      for (const auto& target : mids) {
        // Roots lemma: T |->oplus . ->gamma^= S, gamma the rule of the
        // internal step
        ++ctx.report.casesRun;
        auto tRoots = opRootContractions(t, p);
        bool found = false;
        for (const auto& t0 : tRoots) {
          if (alphaEq(t0, target)) {
            found = true;
            break;
          }
          for (const auto& nxt : successors(t0, p, StepFilter::ruleOnly(s.redex.rule))) {
            if (alphaEq(nxt.to, target)) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (!found) {
          ctx.fail(t, "Roots lemma failed: internal " + s.redex.rule.name() +
                          " step then root oplus cannot be swapped; target " + print(target),
                   formatStep(s, 0));
        }

        // root linear swap (gamma = oplus against internal !beta):
        // T |->oplus . ->!beta* S
        if (!gammaIsBang) continue;
        ++ctx.report.casesRun;
        bool swapped = false;
        bool truncated = false;
        for (const auto& t0 : tRoots) {
          // bounded BFS over !beta steps only
          std::map<std::string, TermPtr> vis{{canonicalKey(t0), t0}};
          std::deque<TermPtr> queue{t0};
          std::string wanted = canonicalKey(target);
          std::size_t expanded = 0;
          while (!queue.empty() && !swapped) {
            TermPtr v = queue.front();
            queue.pop_front();
            if (canonicalKey(v) == wanted) {
              swapped = true;
              break;
            }
            if (++expanded > ctx.cap) {
              truncated = true;
              break;
            }
            for (const auto& nxt : successors(v, p, StepFilter::ruleOnly(RuleId::bangBeta()))) {
              if (vis.emplace(canonicalKey(nxt.to), nxt.to).second) queue.push_back(nxt.to);
            }
          }
          if (swapped) break;
        }
        if (!swapped) {
          if (truncated) {
            ++ctx.report.inconclusive;
          } else {
            ctx.fail(t, "root linear swap failed: internal !beta then root oplus; target " +
                            print(target),
                     formatStep(s, 0));
          }
        }
      }
    }
  }
}

void runStrongPostponement(SuiteCtx& ctx, const std::vector<TermPtr>& corpus, const Profile& p) {
  auto opRule = [&](const StepRecord& s) { return s.redex.rule.k == RuleId::K::Op; };
  for (const auto& t : corpus) {
    for (const auto& i : successors(t, p, StepFilter::internal())) {
      if (!opRule(i)) continue;
      for (const auto& e : successors(i.to, p, StepFilter::leastLevel())) {
        if (!opRule(e)) continue;
        ++ctx.report.casesRun;
        // want: t (ll-op)* . (internal-op)^= e.to
        std::string wanted = canonicalKey(e.to);
        std::map<std::string, TermPtr> vis{{canonicalKey(t), t}};
        std::deque<TermPtr> queue{t};
        bool found = false, truncated = false;
        std::size_t expanded = 0;
        while (!queue.empty() && !found) {
          TermPtr v = queue.front();
          queue.pop_front();
          if (canonicalKey(v) == wanted) {
            found = true;
            break;
          }
          for (const auto& nxt : successors(v, p, StepFilter::internal())) {
            if (opRule(nxt) && canonicalKey(nxt.to) == wanted) {
              found = true;
              break;
            }
          }
          if (found) break;
          if (++expanded > ctx.cap) {
            truncated = true;
            break;
          }
          for (const auto& nxt : successors(v, p, StepFilter::leastLevel())) {
            if (!opRule(nxt)) continue;
            if (vis.emplace(canonicalKey(nxt.to), nxt.to).second) queue.push_back(nxt.to);
          }
        }
        if (!found) {
          if (truncated) {
            ++ctx.report.inconclusive;
          } else {
            ctx.fail(t, "internal-oplus does not strongly postpone after ll-oplus; peak " +
                            print(i.to) + " -> " + print(e.to));
          }
        }
      }
    }
  }
}

void runMergeSplit(SuiteCtx& ctx, const std::vector<TermPtr>& corpus, const Profile& p) {
  std::unordered_map<std::string, std::map<std::string, ParallelTarget>> parCache;
  auto par = [&](const TermPtr& t) -> const std::map<std::string, ParallelTarget>& {
    std::string key = canonicalKey(t);
    auto it = parCache.find(key);
    if (it != parCache.end()) return it->second;
    return parCache.emplace(std::move(key), parallelSuccessors(t)).first->second;
  };
  auto ipsOf = [&](const TermPtr& t) {
    std::set<std::string> out;
    std::size_t ll = leastLevel(t, p).value;
    for (const auto& [key, tgt] : par(t)) {
      for (const auto& [l, c] : tgt.indices) {
        if (l == kInfLevel || (ll != kInfLevel && l > ll)) {
          out.insert(key);
          break;
        }
      }
    }
    return out;
  };

  for (const auto& t : corpus) {
    const auto& P = par(t);
    auto ips = ipsOf(t);
    auto singles = successors(t, p, StepFilter::all());

    // sandwich: ->!beta  subset  =>  subset  ->!beta*
    for (const auto& s : singles) {
      ++ctx.report.casesRun;
      if (!P.count(canonicalKey(s.to))) {
        ctx.fail(t, "single step not contained in parallel step", formatStep(s, 0));
      }
    }
    ReductionGraph g = reachableGraph(t, p, ctx.fuel, ctx.cap);
    for (const auto& [key, tgt] : P) {
      ++ctx.report.casesRun;
      if (g.index.count(key)) continue;
      if (g.truncated) {
        ++ctx.report.inconclusive;
      } else {
        ctx.fail(t, "parallel target not reachable by single steps: " + print(tgt.to));
      }
    }

    // macro: internal subset internal-parallel subset internal*
    auto internalVis = reachVia(g, [](const StepRecord& s) { return s.internal; });
    for (const auto& s : singles) {
      if (!s.internal) continue;
      ++ctx.report.casesRun;
      if (!ips.count(canonicalKey(s.to))) {
        ctx.fail(t, "internal step not contained in internal-parallel step", formatStep(s, 0));
      }
    }
    for (const auto& q : ips) {
      ++ctx.report.casesRun;
      auto it = g.index.find(q);
      if (it != g.index.end() && internalVis[it->second]) continue;
      if (g.truncated) {
        ++ctx.report.inconclusive;
      } else {
        ctx.fail(t, "internal-parallel target not reachable by internal steps: " + q);
      }
    }

    // merge by level: t =>@n r ->@m s with n > m implies t => s
    for (const auto& [rKey, rTgt] : P) {
      std::set<std::size_t> levels;
      for (const auto& [l, c] : rTgt.indices) levels.insert(l);
      auto rSingles = successors(rTgt.to, p, StepFilter::all());
      for (std::size_t n : levels) {
        for (const auto& s : rSingles) {
          if (!(n == kInfLevel || n > s.redex.level)) continue;
          ++ctx.report.casesRun;
          if (!P.count(canonicalKey(s.to))) {
            ctx.fail(t, "merge by level failed via " + print(rTgt.to) + " (n=" +
                            levelToString(n) + ")",
                     formatStep(s, 0));
          }
        }
      }
    }

    // merge for least-level: t =>not-ll r -ll-> s implies t => s
    for (const auto& rKey : ips) {
      const auto& r = P.at(rKey).to;
      for (const auto& s : successors(r, p, StepFilter::leastLevel())) {
        ++ctx.report.casesRun;
        if (!P.count(canonicalKey(s.to))) {
          ctx.fail(t, "merge for least-level failed via " + print(r), formatStep(s, 0));
        }
      }
    }

    // indexed split: t =>^n s implies t =>not-ll s, or n>0 and t -ll-> . =>^(n-1) s
    auto llSingles = successors(t, p, StepFilter::leastLevel());
    for (const auto& [sKey, sTgt] : P) {
      std::set<std::size_t> counts;
      for (const auto& [l, c] : sTgt.indices) counts.insert(c);
      for (std::size_t n : counts) {
        ++ctx.report.casesRun;
        if (ips.count(sKey)) continue;
        bool found = false;
        if (n > 0) {
          for (const auto& q : llSingles) {
            const auto& PQ = par(q.to);
            auto it = PQ.find(sKey);
            if (it == PQ.end()) continue;
            for (const auto& [l, c] : it->second.indices) {
              if (c == n - 1) {
                found = true;
                break;
              }
            }
            if (found) break;
          }
        }
        if (!found) {
          ctx.fail(t, "indexed split failed for target " + print(sTgt.to) + " at count " +
                          std::to_string(n));
        }
      }
    }

    // split for least-level: t => s implies t -ll->* . =>not-ll s
    for (const auto& [sKey, sTgt] : P) {
      ++ctx.report.casesRun;
      std::map<std::string, TermPtr> vis{{canonicalKey(t), t}};
      std::deque<TermPtr> queue{t};
      bool found = false, truncated = false;
      std::size_t expanded = 0;
      while (!queue.empty() && !found) {
        TermPtr v = queue.front();
        queue.pop_front();
        if (ipsOf(v).count(sKey)) {
          found = true;
          break;
        }
        if (++expanded > ctx.cap) {
          truncated = true;
          break;
        }
        for (const auto& nxt : successors(v, p, StepFilter::leastLevel())) {
          if (vis.emplace(canonicalKey(nxt.to), nxt.to).second) queue.push_back(nxt.to);
        }
      }
      if (!found) {
        if (truncated) {
          ++ctx.report.inconclusive;
        } else {
          ctx.fail(t, "split for least-level failed for target " + print(sTgt.to));
        }
      }
    }
  }
}

void runSurfaceInLL(SuiteCtx& ctx, const std::vector<TermPtr>& corpus, const Profile& p) {
  for (const auto& t : corpus) {
    for (const auto& s : successors(t, p, StepFilter::all())) {
      ++ctx.report.casesRun;
      if (s.surface && !s.leastLevel) {
        ctx.fail(t, "surface step not least-level although a level-0 redex exists",
                 formatStep(s, 0));
      }
      if (s.surface && s.internal) {
        ctx.fail(t, "step classified both surface and internal", formatStep(s, 0));
      }
    }
  }
}

void runShapePreservation(SuiteCtx& ctx, const std::vector<TermPtr>& corpus, const Profile& p) {
  for (const auto& t : corpus) {
    for (const auto& s : successors(t, p, StepFilter::all())) {
      if (s.redex.path.empty()) continue;  // root steps may change the shape
      ++ctx.report.casesRun;
      if (s.from->kind != s.to->kind) {
        ctx.fail(t, "non-root step changed the top constructor", formatStep(s, 0));
      }
    }
  }
}

void runLLInductiveAgreement(SuiteCtx& ctx, const std::vector<TermPtr>& corpus, const Profile& p) {
  for (const auto& t : corpus) {
    ++ctx.report.casesRun;
    LeastLevel a = leastLevel(t, p);
    LeastLevel b = leastLevelInductive(t, p);
    if (!(a == b)) {
      ctx.fail(t, "inductive least level " + levelToString(b.value) +
                      " disagrees with enumeration " + levelToString(a.value));
    }
  }
}

void runTranslationInverses(SuiteCtx& ctx, const std::vector<TermPtr>& corpus, const Profile& p) {
  (void)p;
  Profile bp = Profile::bang();
  for (const auto& t : corpus) {
    ++ctx.report.casesRun;
    TermPtr tn = cbnTranslate(t);
    TermPtr tv = cbvTranslate(t);
    if (!inImage(tn).cbn) ctx.fail(t, "CbN translation left its image grammar: " + print(tn));
    if (!inImage(tv).cbv) ctx.fail(t, "CbV translation left its image grammar: " + print(tv));
    if (!alphaEq(cbnInverse(tn), t)) ctx.fail(t, "cbnInverse is not a left inverse");
    if (!alphaEq(forgetful(tv), t)) ctx.fail(t, "forgetful is not a left inverse");
    if (!successors(tv, bp, StepFilter::dOnly()).empty()) {
      ctx.fail(t, "CbV translation has a der-redex: " + print(tv));
    }
  }
}

}  // namespace

CheckReport runSuite(Suite s, const GenSpec& spec, std::size_t fuel, std::size_t cap) {
  CheckReport report;
  report.suite = s;
  report.suiteLabel = suiteName(s) + " " + spec.label() + " fuel=" + std::to_string(fuel) +
                      " cap=" + std::to_string(cap);
  const Profile& p = spec.profile;

  switch (s) {
    case Suite::SimulationCbN:
    case Suite::SimulationCbV:
    case Suite::NormalFormPreservation:
    case Suite::LevelPreservation:
    case Suite::LLStepPreservation:
    case Suite::TranslationInverses:
      if (p.calc == Calc::Bang) incompatible(s, p);
      break;
    case Suite::QuasiDiamondLlLo:
      if (p.calc != Calc::CbN) incompatible(s, p);
      break;
    case Suite::MergeSplit:
    case Suite::LLInductiveAgreement:
      if (p.calc != Calc::Bang) incompatible(s, p);
      break;
    case Suite::ModularTest:
    case Suite::StrongPostponement:
      if (p.ops.empty()) incompatible(s, p);
      break;
    default:
      break;
  }

  auto start = std::chrono::steady_clock::now();
  std::vector<TermPtr> corpus = genTerms(spec);
  SuiteCtx ctx{report, fuel, cap};

  switch (s) {
    case Suite::Factorization: runFactorization(ctx, corpus, p); break;
    case Suite::Completeness: runCompleteness(ctx, corpus, p); break;
    case Suite::GoodLeastLevel: runGoodLeastLevel(ctx, corpus, p); break;
    case Suite::QuasiDiamond: runQuasiDiamond(ctx, corpus, p, false); break;
    case Suite::QuasiDiamondLlLo: runQuasiDiamond(ctx, corpus, p, true); break;
    case Suite::SimulationCbN: runSimulationCbN(ctx, corpus, p); break;
    case Suite::SimulationCbV: runSimulationCbV(ctx, corpus, p); break;
    case Suite::NormalFormPreservation: runNormalFormPreservation(ctx, corpus, p); break;
    case Suite::LevelPreservation: runLevelPreservation(ctx, corpus, p); break;
    case Suite::LLStepPreservation: runLLStepPreservation(ctx, corpus, p); break;
    case Suite::ModularTest: runModularTest(ctx, corpus, p, spec); break;
    case Suite::StrongPostponement: runStrongPostponement(ctx, corpus, p); break;
    case Suite::MergeSplit: runMergeSplit(ctx, corpus, p); break;
    case Suite::SurfaceInLL: runSurfaceInLL(ctx, corpus, p); break;
    case Suite::ShapePreservation: runShapePreservation(ctx, corpus, p); break;
    case Suite::LLInductiveAgreement: runLLInductiveAgreement(ctx, corpus, p); break;
    case Suite::TranslationInverses: runTranslationInverses(ctx, corpus, p); break;
  }

  report.wallMs = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string formatReport(const CheckReport& r, bool includeTiming) {
  std::ostringstream os;
  os << "[suite] " << r.suiteLabel << " cases=" << r.casesRun
     << " failures=" << r.failures.size() << " inconclusive=" << r.inconclusive;
  if (includeTiming) os << " wall_ms=" << static_cast<long long>(r.wallMs);
  os << "\n";
  for (const auto& f : r.failures) {
    os << "[failure] input=" << print(f.input) << " detail=" << f.detail << "\n";
    if (!f.trace.empty()) {
      std::istringstream lines(f.trace);
      std::string line;
      while (std::getline(lines, line)) os << "  " << line << "\n";
    }
  }
  return os.str();
}

FactorizationWitness factorizationWitness(const TermPtr& t, const TermPtr& u, const Profile& p,
                                          std::size_t fuel, std::size_t cap) {
  FactorizationWitness w;
  ReductionGraph g = reachableGraph(t, p, fuel, cap);
  auto it = g.index.find(canonicalKey(u));
  if (it == g.index.end()) {
    w.status = g.truncated ? WitnessStatus::Inconclusive : WitnessStatus::NotFound;
    return w;
  }
  std::size_t target = it->second;

  // product BFS with parents: state = node * phase (0 = ll prefix, 1 = suffix)
  std::size_t n = g.nodes.size();
  std::vector<std::ptrdiff_t> parent(2 * n, -2);  // -2 unvisited, -1 root, else edge id * 2 + phase
  auto stateId = [n](std::size_t node, bool phaseI) { return node + (phaseI ? n : 0); };
  std::deque<std::size_t> queue;
  parent[stateId(0, false)] = -1;
  queue.push_back(stateId(0, false));
  while (!queue.empty()) {
    std::size_t st = queue.front();
    queue.pop_front();
    bool phaseI = st >= n;
    std::size_t v = phaseI ? st - n : st;
    if (!phaseI && parent[stateId(v, true)] == -2) {  // free phase switch
      parent[stateId(v, true)] = static_cast<std::ptrdiff_t>(-3 - static_cast<std::ptrdiff_t>(v));
      queue.push_back(stateId(v, true));
    }
    for (std::size_t eid : g.out[v]) {
      const GraphEdge& edge = g.edges[eid];
      bool usable = phaseI ? edge.step.internal : edge.step.leastLevel;
      if (!usable) continue;
      std::size_t nxt = stateId(edge.to, phaseI);
      if (parent[nxt] == -2) {
        parent[nxt] = static_cast<std::ptrdiff_t>(eid);
        queue.push_back(nxt);
      }
    }
  }

  std::size_t endState;
  if (parent[stateId(target, false)] != -2) {
    endState = stateId(target, false);
  } else if (parent[stateId(target, true)] != -2) {
    endState = stateId(target, true);
  } else {
    w.status = g.truncated ? WitnessStatus::Inconclusive : WitnessStatus::NotFound;
    return w;
  }

  std::vector<std::pair<StepRecord, bool>> rev;  // (step, wasInternalPhase)
  std::size_t st = endState;
  while (parent[st] != -1) {
    std::ptrdiff_t pe = parent[st];
    bool phaseI = st >= n;
    if (pe <= -3) {  // phase switch from (v, E) to (v, I)
      st = stateId(static_cast<std::size_t>(-3 - pe), false);
      continue;
    }
    const GraphEdge& edge = g.edges[static_cast<std::size_t>(pe)];
    rev.push_back({edge.step, phaseI});
    st = stateId(edge.from, phaseI);
  }
  std::reverse(rev.begin(), rev.end());
  for (auto& [step, phaseI] : rev) {
    (phaseI ? w.internalSuffix : w.llPrefix).push_back(step);
  }
  w.status = WitnessStatus::Found;
  return w;
}

}  // namespace bang
