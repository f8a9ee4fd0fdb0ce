#include "bang/redex.hpp"

#include <algorithm>

namespace bang {

std::string pathToString(const Path& p) {
  if (p.empty()) return "root";
  std::string out;
  for (const auto& s : p) {
    if (!out.empty()) out += '.';
    switch (s.dir) {
      case Dir::AbsBody: out += "abs"; break;
      case Dir::AppLeft: out += "fun"; break;
      case Dir::AppRight: out += "arg"; break;
      case Dir::BangBody: out += "bang"; break;
      case Dir::OpArg: out += "arg" + std::to_string(s.arg); break;
    }
  }
  return out;
}

namespace {

[[noreturn]] void badPath() { throw std::invalid_argument("invalid path for term"); }

TermPtr childAt(const TermPtr& t, const PathStep& s) {
  switch (s.dir) {
    case Dir::AbsBody:
      if (t->kind != Kind::Abs) badPath();
      return t->sub0;
    case Dir::AppLeft:
      if (t->kind != Kind::App) badPath();
      return t->sub0;
    case Dir::AppRight:
      if (t->kind != Kind::App) badPath();
      return t->sub1;
    case Dir::BangBody:
      if (t->kind != Kind::Bang) badPath();
      return t->sub0;
    case Dir::OpArg:
      if (t->kind != Kind::Op || s.arg >= t->args.size()) badPath();
      return t->args[s.arg];
  }
  badPath();
}

}  // namespace

TermPtr subtermAt(const TermPtr& t, const Path& p) {
  TermPtr cur = t;
  for (const auto& s : p) cur = childAt(cur, s);
  return cur;
}

TermPtr replaceAt(const TermPtr& t, const Path& p, const TermPtr& s) {
  if (p.empty()) return s;
  const PathStep& head = p.front();
  Path rest(p.begin() + 1, p.end());
  switch (head.dir) {
    case Dir::AbsBody:
      if (t->kind != Kind::Abs) badPath();
      return mkAbs(t->name, replaceAt(t->sub0, rest, s));
    case Dir::AppLeft:
      if (t->kind != Kind::App) badPath();
      return mkApp(replaceAt(t->sub0, rest, s), t->sub1);
    case Dir::AppRight:
      if (t->kind != Kind::App) badPath();
      return mkApp(t->sub0, replaceAt(t->sub1, rest, s));
    case Dir::BangBody:
      if (t->kind != Kind::Bang) badPath();
      return mkBang(replaceAt(t->sub0, rest, s));
    case Dir::OpArg: {
      if (t->kind != Kind::Op || head.arg >= t->args.size()) badPath();
      std::vector<TermPtr> as = t->args;
      as[head.arg] = replaceAt(as[head.arg], rest, s);
      return mkOp(t->name, std::move(as));
    }
  }
  badPath();
}

namespace {

bool findHole(const TermPtr& t, Path& acc) {
  switch (t->kind) {
    case Kind::Hole:
      return true;
    case Kind::Var:
      return false;
    case Kind::Abs:
      acc.push_back({Dir::AbsBody});
      if (findHole(t->sub0, acc)) return true;
      acc.pop_back();
      return false;
    case Kind::App:
      acc.push_back({Dir::AppLeft});
      if (findHole(t->sub0, acc)) return true;
      acc.back() = {Dir::AppRight};
      if (findHole(t->sub1, acc)) return true;
      acc.pop_back();
      return false;
    case Kind::Bang:
      acc.push_back({Dir::BangBody});
      if (findHole(t->sub0, acc)) return true;
      acc.pop_back();
      return false;
    case Kind::Op:
      for (std::size_t i = 0; i < t->args.size(); ++i) {
        acc.push_back({Dir::OpArg, i});
        if (findHole(t->args[i], acc)) return true;
        acc.pop_back();
      }
      return false;
  }
  return false;
}

}  // namespace

Path holePath(const TermPtr& ctx) {
  if (ctx->holes != 1) throw std::invalid_argument("context must have exactly one hole");
  Path p;
  findHole(ctx, p);
  return p;
}

std::string RuleId::name() const {
  switch (k) {
    case K::Beta: return "beta";
    case K::Betav: return "betav";
    case K::BangBeta: return "!beta";
    case K::Op: return op;
  }
  return "?";
}

std::string levelToString(std::size_t level) {
  return level == kInfLevel ? "inf" : std::to_string(level);
}

std::size_t levelOfPath(const Path& path, const Profile& p, const TermPtr& enclosing) {
  std::size_t level = 0;
  TermPtr cur = enclosing;
  bool cameFromAppLeft = false;
  for (const auto& s : path) {
    switch (s.dir) {
      case Dir::AbsBody:
        if (cur->kind != Kind::Abs) badPath();
        if (p.calc == Calc::CbV && !cameFromAppLeft) ++level;
        cur = cur->sub0;
        break;
      case Dir::AppLeft:
        if (cur->kind != Kind::App) badPath();
        cur = cur->sub0;
        break;
      case Dir::AppRight:
        if (cur->kind != Kind::App) badPath();
        if (p.calc == Calc::CbN) ++level;
        cur = cur->sub1;
        break;
      case Dir::BangBody:
        if (cur->kind != Kind::Bang) badPath();
        if (p.calc == Calc::Bang) ++level;
        cur = cur->sub0;
        break;
      case Dir::OpArg:
        if (cur->kind != Kind::Op || s.arg >= cur->args.size()) badPath();
        ++level;
        cur = cur->args[s.arg];
        break;
    }
    cameFromAppLeft = (s.dir == Dir::AppLeft);
  }
  return level;
}

namespace {

bool isIdentityAbs(const TermPtr& t) {
  return t->kind == Kind::Abs && t->sub0->kind == Kind::Var && t->sub0->name == t->name;
}

std::optional<Redex> matchRoot(const TermPtr& t, const Profile& p) {
  switch (p.calc) {
    case Calc::Bang:
      if (t->kind == Kind::App && t->sub0->kind == Kind::Abs && t->sub1->kind == Kind::Bang) {
        Redex r;
        r.rule = RuleId::bangBeta();
        r.der = isIdentityAbs(t->sub0);
        return r;
      }
      break;
    case Calc::CbN:
      if (t->kind == Kind::App && t->sub0->kind == Kind::Abs) {
        Redex r;
        r.rule = RuleId::beta();
        return r;
      }
      break;
    case Calc::CbV:
      if (t->kind == Kind::App && t->sub0->kind == Kind::Abs &&
          (t->sub1->kind == Kind::Var || t->sub1->kind == Kind::Abs)) {
        Redex r;
        r.rule = RuleId::betav();
        return r;
      }
      break;
  }
  if (t->kind == Kind::Op && p.opActive(t->name)) {
    const OperatorSig* sig = p.registry->find(t->name);
    if (sig && sig->arity == t->args.size() && !sig->contractions.empty()) {
      Redex r;
      r.rule = RuleId::opRule(t->name);
      return r;
    }
  }
  return std::nullopt;
}

void walk(const TermPtr& t, const Profile& p, Path& path, std::size_t level,
          bool cameFromAppLeft, std::vector<Redex>& out) {
  if (auto r = matchRoot(t, p)) {
    r->path = path;
    r->level = level;
    out.push_back(std::move(*r));
  }
  switch (t->kind) {
    case Kind::Var:
    case Kind::Hole:
      return;
    case Kind::Abs: {
      std::size_t l = level + (p.calc == Calc::CbV && !cameFromAppLeft ? 1 : 0);
      path.push_back({Dir::AbsBody});
      walk(t->sub0, p, path, l, false, out);
      path.pop_back();
      return;
    }
    case Kind::App: {
      path.push_back({Dir::AppLeft});
      walk(t->sub0, p, path, level, true, out);
      path.back() = {Dir::AppRight};
      walk(t->sub1, p, path, level + (p.calc == Calc::CbN ? 1 : 0), false, out);
      path.pop_back();
      return;
    }
    case Kind::Bang: {
      path.push_back({Dir::BangBody});
      walk(t->sub0, p, path, level + (p.calc == Calc::Bang ? 1 : 0), false, out);
      path.pop_back();
      return;
    }
    case Kind::Op: {
      for (std::size_t i = 0; i < t->args.size(); ++i) {
        path.push_back({Dir::OpArg, i});
        walk(t->args[i], p, path, level + 1, false, out);
        path.pop_back();
      }
      return;
    }
  }
}

}  // namespace

std::vector<Redex> enumerateRedexes(const TermPtr& t, const Profile& p) {
  auto violations = validate(t, p);
  if (!violations.empty()) {
    throw std::invalid_argument("invalid term for " + p.label() + ": " + violations[0].path +
                                ": " + violations[0].message);
  }
  std::vector<Redex> out;
  Path path;
  walk(t, p, path, 0, false, out);
  return out;
}

LeastLevel leastLevel(const TermPtr& t, const Profile& p) {
  LeastLevel ll;
  for (const auto& r : enumerateRedexes(t, p)) ll.value = std::min(ll.value, r.level);
  return ll;
}

namespace {

std::size_t llInd(const TermPtr& t, const Profile& p) {
  if (matchRoot(t, p)) return 0;
  switch (t->kind) {
    case Kind::Var:
    case Kind::Hole:
      return kInfLevel;
    case Kind::Abs:
      return llInd(t->sub0, p);
    case Kind::Bang: {
      std::size_t b = llInd(t->sub0, p);
      return b == kInfLevel ? kInfLevel : b + 1;
    }
    case Kind::App:
      return std::min(llInd(t->sub0, p), llInd(t->sub1, p));
    case Kind::Op: {
      // non-redex operator node (rule inactive or no contractions)
      std::size_t m = kInfLevel;
      for (const auto& a : t->args) m = std::min(m, llInd(a, p));
      return m == kInfLevel ? kInfLevel : m + 1;
    }
  }
  return kInfLevel;
}

}  // namespace

LeastLevel leastLevelInductive(const TermPtr& t, const Profile& p) {
  if (p.calc != Calc::Bang) {
    throw std::invalid_argument("leastLevelInductive is defined for bang profiles only");
  }
  return LeastLevel{llInd(t, p)};
}

}  // namespace bang
