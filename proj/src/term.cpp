#include "bang/term.hpp"

#include <algorithm>
#include <sstream>

namespace bang {

Term::Term(Kind k, std::string n, TermPtr a, TermPtr b, std::vector<TermPtr> as)
    : kind(k), name(std::move(n)), sub0(std::move(a)), sub1(std::move(b)), args(std::move(as)) {
  switch (kind) {
    case Kind::Var:
      break;
    case Kind::Abs:
    case Kind::Bang:
      size += sub0->size;
      holes += sub0->holes;
      break;
    case Kind::App:
      size += sub0->size + sub1->size;
      holes += sub0->holes + sub1->holes;
      break;
    case Kind::Op:
      for (const auto& arg : args) {
        size += arg->size;
        holes += arg->holes;
      }
      break;
    case Kind::Hole:
      holes = 1;
      break;
  }
}

TermPtr mkVar(std::string name) {
  return std::make_shared<Term>(Kind::Var, std::move(name), nullptr, nullptr, std::vector<TermPtr>{});
}
TermPtr mkAbs(std::string binder, TermPtr body) {
  return std::make_shared<Term>(Kind::Abs, std::move(binder), std::move(body), nullptr,
                                std::vector<TermPtr>{});
}
TermPtr mkApp(TermPtr fun, TermPtr arg) {
  return std::make_shared<Term>(Kind::App, "", std::move(fun), std::move(arg),
                                std::vector<TermPtr>{});
}
TermPtr mkBang(TermPtr body) {
  return std::make_shared<Term>(Kind::Bang, "", std::move(body), nullptr, std::vector<TermPtr>{});
}
TermPtr mkOp(std::string op, std::vector<TermPtr> args) {
  return std::make_shared<Term>(Kind::Op, std::move(op), nullptr, nullptr, std::move(args));
}
TermPtr mkHole() {
  return std::make_shared<Term>(Kind::Hole, "", nullptr, nullptr, std::vector<TermPtr>{});
}

namespace {

void collectFree(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind) {
    case Kind::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      break;
    case Kind::Abs: {
      bool fresh = bound.insert(t->name).second;
      collectFree(t->sub0, bound, out);
      if (fresh) bound.erase(t->name);
      break;
    }
    case Kind::App:
      collectFree(t->sub0, bound, out);
      collectFree(t->sub1, bound, out);
      break;
    case Kind::Bang:
      collectFree(t->sub0, bound, out);
      break;
    case Kind::Op:
      for (const auto& a : t->args) collectFree(a, bound, out);
      break;
    case Kind::Hole:
      break;
  }
}

}  // namespace

std::set<std::string> freeVars(const TermPtr& t) {
  std::set<std::string> bound, out;
  collectFree(t, bound, out);
  return out;
}

std::size_t freeOccurrences(const TermPtr& t, const std::string& x) {
  switch (t->kind) {
    case Kind::Var:
      return t->name == x ? 1 : 0;
    case Kind::Abs:
      return t->name == x ? 0 : freeOccurrences(t->sub0, x);
    case Kind::App:
      return freeOccurrences(t->sub0, x) + freeOccurrences(t->sub1, x);
    case Kind::Bang:
      return freeOccurrences(t->sub0, x);
    case Kind::Op: {
      std::size_t n = 0;
      for (const auto& a : t->args) n += freeOccurrences(a, x);
      return n;
    }
    case Kind::Hole:
      return 0;
  }
  return 0;
}

namespace {

std::string freshName(const std::string& base, const std::set<std::string>& avoid) {
  for (std::size_t k = 1;; ++k) {
    std::string cand = base + "_" + std::to_string(k);
    if (!avoid.count(cand)) return cand;
  }
}

}  // namespace

TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& s) {
  switch (t->kind) {
    case Kind::Var:
      return t->name == x ? s : t;
    case Kind::Abs: {
      if (t->name == x) return t;  // shadowed
      if (freeOccurrences(t->sub0, x) == 0) return t;
      if (freeVars(s).count(t->name)) {
        std::set<std::string> avoid = freeVars(t->sub0);
        auto fvS = freeVars(s);
        avoid.insert(fvS.begin(), fvS.end());
        avoid.insert(x);
        std::string y = freshName(t->name, avoid);
        TermPtr renamed = substitute(t->sub0, t->name, mkVar(y));
        return mkAbs(y, substitute(renamed, x, s));
      }
      return mkAbs(t->name, substitute(t->sub0, x, s));
    }
    case Kind::App:
      return mkApp(substitute(t->sub0, x, s), substitute(t->sub1, x, s));
    case Kind::Bang:
      return mkBang(substitute(t->sub0, x, s));
    case Kind::Op: {
      std::vector<TermPtr> as;
      as.reserve(t->args.size());
      for (const auto& a : t->args) as.push_back(substitute(a, x, s));
      return mkOp(t->name, std::move(as));
    }
    case Kind::Hole:
      return t;
  }
  return t;
}

TermPtr plug(const TermPtr& ctx, const TermPtr& t) {
  switch (ctx->kind) {
    case Kind::Hole:
      return t;
    case Kind::Var:
      return ctx;
    case Kind::Abs:
      return ctx->holes ? mkAbs(ctx->name, plug(ctx->sub0, t)) : ctx;
    case Kind::App:
      if (!ctx->holes) return ctx;
      return mkApp(plug(ctx->sub0, t), plug(ctx->sub1, t));
    case Kind::Bang:
      return ctx->holes ? mkBang(plug(ctx->sub0, t)) : ctx;
    case Kind::Op: {
      if (!ctx->holes) return ctx;
      std::vector<TermPtr> as;
      as.reserve(ctx->args.size());
      for (const auto& a : ctx->args) as.push_back(plug(a, t));
      return mkOp(ctx->name, std::move(as));
    }
  }
  return ctx;
}

namespace {

TermPtr canonize(const TermPtr& t, std::vector<std::string>& binders) {
  switch (t->kind) {
    case Kind::Var: {
      for (std::size_t i = binders.size(); i-- > 0;) {
        if (binders[i] == t->name) return mkVar("_" + std::to_string(i));
      }
      return t;  // free variables keep their names
    }
    case Kind::Abs: {
      std::string canon = "_" + std::to_string(binders.size());
      binders.push_back(t->name);
      TermPtr body = canonize(t->sub0, binders);
      binders.pop_back();
      return mkAbs(canon, body);
    }
    case Kind::App: {
      TermPtr f = canonize(t->sub0, binders);
      TermPtr a = canonize(t->sub1, binders);
      return mkApp(f, a);
    }
    case Kind::Bang:
      return mkBang(canonize(t->sub0, binders));
    case Kind::Op: {
      std::vector<TermPtr> as;
      as.reserve(t->args.size());
      for (const auto& a : t->args) as.push_back(canonize(a, binders));
      return mkOp(t->name, std::move(as));
    }
    case Kind::Hole:
      return t;
  }
  return t;
}

void writeKey(const TermPtr& t, std::string& out) {
  switch (t->kind) {
    case Kind::Var:
      out += 'v';
      out += t->name;
      out += ';';
      break;
    case Kind::Abs:
      out += 'L';
      writeKey(t->sub0, out);
      break;
    case Kind::App:
      out += '@';
      writeKey(t->sub0, out);
      writeKey(t->sub1, out);
      break;
    case Kind::Bang:
      out += '!';
      writeKey(t->sub0, out);
      break;
    case Kind::Op:
      out += 'o';
      out += t->name;
      out += '/';
      out += std::to_string(t->args.size());
      out += ';';
      for (const auto& a : t->args) writeKey(a, out);
      break;
    case Kind::Hole:
      out += '_';
      break;
  }
}

}  // namespace

CanonicalTerm toCanonical(const TermPtr& t) {
  std::vector<std::string> binders;
  TermPtr canon = canonize(t, binders);
  std::string key;
  key.reserve(canon->size * 3);
  writeKey(canon, key);
  return CanonicalTerm{canon, std::move(key)};
}

TermPtr fromCanonical(const CanonicalTerm& c) { return c.term; }

std::string canonicalKey(const TermPtr& t) { return toCanonical(t).key; }

bool alphaEq(const TermPtr& t, const TermPtr& s) {
  if (t == s) return true;
  if (t->size != s->size || t->kind != s->kind) return false;
  return canonicalKey(t) == canonicalKey(s);
}

// ---------------------------------------------------------------------------

void OperatorRegistry::add(OperatorSig sig) {
  auto name = sig.name;
  table_[name] = std::move(sig);
}

const OperatorSig* OperatorRegistry::find(const std::string& name) const {
  auto it = table_.find(name);
  return it == table_.end() ? nullptr : &it->second;
}

std::vector<std::string> OperatorRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(table_.size());
  for (const auto& [k, v] : table_) out.push_back(k);
  return out;
}

const OperatorRegistry& OperatorRegistry::standard() {
  static const OperatorRegistry reg = [] {
    OperatorRegistry r;
    OperatorSig oplus;
    oplus.name = "oplus";
    oplus.arity = 2;
    oplus.contractions = {
        [](const std::vector<TermPtr>& as) { return as[0]; },
        [](const std::vector<TermPtr>& as) { return as[1]; },
    };
    r.add(std::move(oplus));
    return r;
  }();
  return reg;
}

std::string calcName(Calc c) {
  switch (c) {
    case Calc::CbN: return "cbn";
    case Calc::CbV: return "cbv";
    case Calc::Bang: return "bang";
  }
  return "?";
}

Profile Profile::bang(std::vector<std::string> ops) {
  Profile p;
  p.calc = Calc::Bang;
  p.ops = std::move(ops);
  return p;
}
Profile Profile::cbn(std::vector<std::string> ops) {
  Profile p;
  p.calc = Calc::CbN;
  p.ops = std::move(ops);
  return p;
}
Profile Profile::cbv(std::vector<std::string> ops) {
  Profile p;
  p.calc = Calc::CbV;
  p.ops = std::move(ops);
  return p;
}

bool Profile::opActive(const std::string& name) const {
  return std::find(ops.begin(), ops.end(), name) != ops.end();
}

std::string Profile::label() const {
  std::string s = calcName(calc);
  for (const auto& o : ops) s += "+" + o;
  return s;
}

namespace {

void checkTerm(const TermPtr& t, const Profile& p, const std::string& path,
               std::vector<Violation>& out, bool allowHole) {
  auto sub = [&](const char* step) { return path.empty() ? std::string(step) : path + "." + step; };
  switch (t->kind) {
    case Kind::Var:
      break;
    case Kind::Abs:
      checkTerm(t->sub0, p, sub("abs"), out, allowHole);
      break;
    case Kind::App:
      checkTerm(t->sub0, p, sub("fun"), out, allowHole);
      checkTerm(t->sub1, p, sub("arg"), out, allowHole);
      break;
    case Kind::Bang:
      if (p.calc != Calc::Bang) {
        out.push_back({path.empty() ? "root" : path, "Bang in lambda-calculus term"});
      }
      checkTerm(t->sub0, p, sub("bang"), out, allowHole);
      break;
    case Kind::Op: {
      const OperatorSig* sig = p.registry->find(t->name);
      if (!sig) {
        out.push_back({path.empty() ? "root" : path, "unknown operator: " + t->name});
      } else if (sig->arity != t->args.size()) {
        out.push_back({path.empty() ? "root" : path, "arity mismatch"});
      }
      for (std::size_t i = 0; i < t->args.size(); ++i) {
        checkTerm(t->args[i], p, sub(("arg" + std::to_string(i)).c_str()), out, allowHole);
      }
      break;
    }
    case Kind::Hole:
      if (!allowHole) out.push_back({path.empty() ? "root" : path, "hole in plain term"});
      break;
  }
}

}  // namespace

std::vector<Violation> validate(const TermPtr& t, const Profile& p) {
  std::vector<Violation> out;
  checkTerm(t, p, "", out, /*allowHole=*/false);
  return out;
}

std::vector<Violation> validateContext(const TermPtr& c, const Profile& p) {
  std::vector<Violation> out;
  if (c->holes != 1) {
    out.push_back({"root", "expected exactly one hole, found " + std::to_string(c->holes)});
  }
  checkTerm(c, p, "", out, /*allowHole=*/true);
  return out;
}

}  // namespace bang
