#include "bang/parallel.hpp"

#include <algorithm>
#include <tuple>

#include "bang/parse.hpp"

namespace bang {

std::size_t ParallelTarget::maxLevelIndex() const {
  std::size_t m = 0;
  for (const auto& [l, c] : indices) m = std::max(m, l);
  return m;
}

std::size_t ParallelTarget::minCountIndex() const {
  std::size_t m = kInfLevel;
  for (const auto& [l, c] : indices) m = std::min(m, c);
  return m;
}

namespace {

std::size_t levPlus1(std::size_t l) { return l == kInfLevel ? kInfLevel : l + 1; }

struct Entry {
  TermPtr to;
  std::size_t level, count;
};

using Derivs = std::vector<Entry>;

void push(Derivs& out, std::set<std::tuple<std::string, std::size_t, std::size_t>>& seen,
          TermPtr to, std::size_t level, std::size_t count) {
  auto key = std::make_tuple(canonicalKey(to), level, count);
  if (seen.insert(key).second) out.push_back({std::move(to), level, count});
}

Derivs derive(const TermPtr& t, std::map<std::string, Derivs>& memo) {
  std::string key = canonicalKey(t);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  Derivs out;
  std::set<std::tuple<std::string, std::size_t, std::size_t>> seen;
  switch (t->kind) {
    case Kind::Var:
      push(out, seen, t, kInfLevel, 0);
      break;
    case Kind::Abs:
      for (const auto& e : derive(t->sub0, memo)) {
        push(out, seen, mkAbs(t->name, e.to), e.level, e.count);
      }
      break;
    case Kind::Bang:
      for (const auto& e : derive(t->sub0, memo)) {
        push(out, seen, mkBang(e.to), levPlus1(e.level), e.count);
      }
      break;
    case Kind::Op: {
      Derivs acc{{mkOp(t->name, {}), kInfLevel, 0}};
      for (const auto& arg : t->args) {
        Derivs next;
        Derivs argDerivs = derive(arg, memo);
        for (const auto& partial : acc) {
          for (const auto& e : argDerivs) {
            std::vector<TermPtr> as = partial.to->args;
            as.push_back(e.to);
            next.push_back({mkOp(t->name, std::move(as)),
                            std::min(partial.level, e.level), partial.count + e.count});
          }
        }
        acc = std::move(next);
      }
      for (auto& e : acc) push(out, seen, e.to, levPlus1(e.level), e.count);
      break;
    }
    case Kind::App: {
      Derivs fd = derive(t->sub0, memo);
      Derivs ad = derive(t->sub1, memo);
      for (const auto& f : fd) {
        for (const auto& a : ad) {
          push(out, seen, mkApp(f.to, a.to), std::min(f.level, a.level), f.count + a.count);
        }
      }
      // fired root redex (\x.B)!A: level 0, count cB + |B'|_x * cA + 1
      if (t->sub0->kind == Kind::Abs && t->sub1->kind == Kind::Bang) {
        const std::string& x = t->sub0->name;
        Derivs bd = derive(t->sub0->sub0, memo);
        Derivs cd = derive(t->sub1->sub0, memo);
        for (const auto& b : bd) {
          for (const auto& c : cd) {
            std::size_t n = b.count + freeOccurrences(b.to, x) * c.count + 1;
            push(out, seen, substitute(b.to, x, c.to), 0, n);
          }
        }
      }
      break;
    }
    case Kind::Hole:
      throw std::invalid_argument("parallel reduction is defined on plain terms");
  }

  memo.emplace(std::move(key), out);
  return out;
}

}  // namespace

std::map<std::string, ParallelTarget> parallelSuccessors(const TermPtr& t) {
  std::size_t bangRedexes = 0;
  for (const auto& r : enumerateRedexes(t, Profile::bang())) {
    if (r.rule.k == RuleId::K::BangBeta) ++bangRedexes;
  }
  if (bangRedexes > kMaxParallelRedexes) {
    throw std::invalid_argument("term has more than " + std::to_string(kMaxParallelRedexes) +
                                " redexes: " + print(t));
  }
  std::map<std::string, Derivs> memo;
  std::map<std::string, ParallelTarget> out;
  for (const auto& e : derive(t, memo)) {
    auto& tgt = out[canonicalKey(e.to)];
    tgt.to = e.to;
    tgt.indices.insert({e.level, e.count});
  }
  return out;
}

std::vector<ParallelStep> parallelSteps(const TermPtr& t) {
  std::vector<ParallelStep> out;
  for (const auto& [key, tgt] : parallelSuccessors(t)) {
    out.push_back({t, tgt.to, tgt.maxLevelIndex(), tgt.minCountIndex()});
  }
  return out;
}

std::vector<TermPtr> internalParallelSuccessors(const TermPtr& t, const Profile& p) {
  std::size_t ll = leastLevel(t, p).value;
  std::vector<TermPtr> out;
  for (const auto& [key, tgt] : parallelSuccessors(t)) {
    for (const auto& [l, c] : tgt.indices) {
      if (l == kInfLevel || (ll != kInfLevel && l > ll)) {
        out.push_back(tgt.to);
        break;
      }
    }
  }
  return out;
}

}  // namespace bang
