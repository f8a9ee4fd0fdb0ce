#include "bang/reduce.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>
#include <unordered_set>

#include "bang/parse.hpp"

namespace bang {

namespace {

std::vector<TermPtr> contractions(const TermPtr& redexTerm, const Redex& r, const Profile& p) {
  switch (r.rule.k) {
    case RuleId::K::Beta:
    case RuleId::K::Betav:
      return {substitute(redexTerm->sub0->sub0, redexTerm->sub0->name, redexTerm->sub1)};
    case RuleId::K::BangBeta:
      return {substitute(redexTerm->sub0->sub0, redexTerm->sub0->name, redexTerm->sub1->sub0)};
    case RuleId::K::Op: {
      const OperatorSig* sig = p.registry->find(r.rule.op);
      std::vector<TermPtr> out;
      out.reserve(sig->contractions.size());
      for (const auto& c : sig->contractions) out.push_back(c(redexTerm->args));
      return out;
    }
  }
  return {};
}

}  // namespace

std::vector<StepRecord> successors(const TermPtr& t, const Profile& p, const StepFilter& f) {
  if (f.k == StepFilter::K::LeftmostOutermost && p.calc == Calc::Bang) {
    throw std::invalid_argument("leftmost-outermost is not defined for the bang calculus");
  }
  std::vector<Redex> redexes = enumerateRedexes(t, p);
  std::size_t ll = kInfLevel;
  for (const auto& r : redexes) ll = std::min(ll, r.level);

  std::vector<Redex> selected;
  if (f.k == StepFilter::K::LeftmostOutermost) {
    if (!redexes.empty()) selected.push_back(redexes.front());
  } else {
    for (const auto& r : redexes) {
      bool keep = false;
      switch (f.k) {
        case StepFilter::K::All: keep = true; break;
        case StepFilter::K::LeastLevel: keep = r.level == ll; break;
        case StepFilter::K::Internal: keep = r.level > ll; break;
        case StepFilter::K::Surface: keep = r.level == 0; break;
        case StepFilter::K::AtLevel: keep = r.level == f.level; break;
        case StepFilter::K::Rule: keep = r.rule == *f.rule; break;
        case StepFilter::K::DOnly: keep = r.der; break;
        case StepFilter::K::LeftmostOutermost: break;
      }
      if (keep) selected.push_back(r);
    }
  }

  std::vector<StepRecord> out;
  for (const auto& r : selected) {
    TermPtr sub = subtermAt(t, r.path);
    auto reducts = contractions(sub, r, p);
    for (std::size_t i = 0; i < reducts.size(); ++i) {
      StepRecord s;
      s.from = t;
      s.to = replaceAt(t, r.path, reducts[i]);
      s.redex = r;
      s.alt = i;
      s.leastLevel = r.level == ll;
      s.internal = r.level > ll;
      s.surface = r.level == 0;
      out.push_back(std::move(s));
    }
  }
  return out;
}

bool isNormal(const TermPtr& t, const Profile& p) { return enumerateRedexes(t, p).empty(); }

TermPtr dNormalize(const TermPtr& t) {
  Profile p = Profile::bang();
  TermPtr cur = t;
  for (;;) {
    auto redexes = enumerateRedexes(cur, p);
    auto it = std::find_if(redexes.begin(), redexes.end(), [](const Redex& r) { return r.der; });
    if (it == redexes.end()) return cur;
    TermPtr sub = subtermAt(cur, it->path);
    cur = replaceAt(cur, it->path, sub->sub1->sub0);
  }
}

std::string strategyName(StrategyId s) {
  switch (s) {
    case StrategyId::LeastLevelDeterministic: return "least-level";
    case StrategyId::LeftmostOutermost: return "leftmost-outermost";
    case StrategyId::SurfaceFirst: return "surface-first";
    case StrategyId::FullLeftmost: return "full-leftmost";
  }
  return "?";
}

namespace {

// Deterministic pick: leftmost redex of the strategy's class.
std::optional<Redex> pickRedex(const TermPtr& t, const Profile& p, StrategyId strategy) {
  auto redexes = enumerateRedexes(t, p);
  if (redexes.empty()) return std::nullopt;
  switch (strategy) {
    case StrategyId::LeftmostOutermost:
      if (p.calc == Calc::Bang) {
        throw std::invalid_argument("leftmost-outermost is not defined for the bang calculus");
      }
      return redexes.front();
    case StrategyId::FullLeftmost:
      return redexes.front();
    case StrategyId::SurfaceFirst:
      for (const auto& r : redexes) {
        if (r.level == 0) return r;
      }
      [[fallthrough]];  // no surface redex: fall back to least level
    case StrategyId::LeastLevelDeterministic: {
      std::size_t ll = kInfLevel;
      for (const auto& r : redexes) ll = std::min(ll, r.level);
      for (const auto& r : redexes) {
        if (r.level == ll) return r;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

ReduceOutcome reduce(const TermPtr& t, const Profile& p, StrategyId strategy, std::size_t fuel,
                     std::optional<std::uint64_t> seed) {
  if (strategy == StrategyId::LeftmostOutermost && p.calc == Calc::Bang) {
    throw std::invalid_argument("leftmost-outermost is not defined for the bang calculus");
  }
  ReduceOutcome out;
  std::mt19937_64 rng(seed.value_or(0));
  std::unordered_set<std::string> seen;
  TermPtr cur = t;
  seen.insert(canonicalKey(cur));

  for (std::size_t step = 0; step < fuel; ++step) {
    auto picked = pickRedex(cur, p, strategy);
    if (!picked) {
      out.normalForm = true;
      break;
    }
    TermPtr sub = subtermAt(cur, picked->path);
    auto reducts = contractions(sub, *picked, p);
    std::size_t alt = 0;
    if (reducts.size() > 1 && seed) alt = static_cast<std::size_t>(rng() % reducts.size());

    std::size_t ll = leastLevel(cur, p).value;
    StepRecord s;
    s.from = cur;
    s.to = replaceAt(cur, picked->path, reducts[alt]);
    s.redex = *picked;
    s.alt = alt;
    s.leastLevel = picked->level == ll;
    s.internal = picked->level > ll;
    s.surface = picked->level == 0;
    cur = s.to;
    out.trace.push_back(std::move(s));

    bool fresh = seen.insert(canonicalKey(cur)).second;
    if (!fresh) {
      out.cycleDetected = true;
      // Without randomness the run can only repeat itself from here.
      if (!seed) break;
    }
  }

  if (!out.normalForm && isNormal(cur, p)) out.normalForm = true;
  out.term = cur;
  out.distinctStates = seen.size();
  return out;
}

ReductionGraph reachableGraph(const TermPtr& t, const Profile& p, std::size_t fuel,
                              std::size_t cap) {
  ReductionGraph g;
  std::vector<std::size_t> depth;
  // Returns (node id or nullopt when capped, freshly added).
  auto addNode = [&](const TermPtr& term) -> std::pair<std::optional<std::size_t>, bool> {
    std::string key = canonicalKey(term);
    auto it = g.index.find(key);
    if (it != g.index.end()) return {it->second, false};
    if (g.nodes.size() >= cap) {
      g.truncated = true;
      return {std::nullopt, false};
    }
    std::size_t id = g.nodes.size();
    g.nodes.push_back(term);
    g.out.emplace_back();
    depth.push_back(0);
    g.index.emplace(std::move(key), id);
    return {id, true};
  };

  std::deque<std::size_t> queue;
  if (addNode(t).first) queue.push_back(0);
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    auto steps = successors(g.nodes[v], p, StepFilter::all());
    if (depth[v] >= fuel) {
      if (!steps.empty()) g.truncated = true;
      continue;
    }
    for (auto& s : steps) {
      auto [w, fresh] = addNode(s.to);
      if (!w) continue;
      g.edges.push_back({v, *w, std::move(s)});
      g.out[v].push_back(g.edges.size() - 1);
      if (fresh) {
        depth[*w] = depth[v] + 1;
        queue.push_back(*w);
      }
    }
  }
  return g;
}

std::string formatStep(const StepRecord& s, std::size_t index) {
  std::string out = std::to_string(index) + ": " + print(s.from) + " --" + s.redex.rule.name() +
                    "@" + std::to_string(s.redex.level);
  if (s.leastLevel) out += ",ll";
  if (s.internal) out += ",int";
  if (s.surface) out += ",surf";
  out += "--> " + print(s.to);
  return out;
}

std::string formatTrace(const std::vector<StepRecord>& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i > 0 && !alphaEq(trace[i - 1].to, trace[i].from)) {
      throw std::invalid_argument("inconsistent trace: step " + std::to_string(i) +
                                  " does not start where the previous step ended");
    }
    out += formatStep(trace[i], i);
    out += '\n';
  }
  return out;
}

std::string toDot(const ReductionGraph& g) {
  std::ostringstream os;
  os << "digraph reduction {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << print(toCanonical(g.nodes[i]).term) << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.step.redex.rule.name() << "@"
       << e.step.redex.level << "\"];\n";
  }
  if (g.truncated) os << "  truncated [shape=plaintext, label=\"(truncated)\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace bang
