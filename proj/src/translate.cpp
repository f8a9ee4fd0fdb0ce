#include "bang/translate.hpp"

#include "bang/parse.hpp"

namespace bang {

namespace {

[[noreturn]] void reject(const char* what, const TermPtr& t) {
  throw std::invalid_argument(std::string(what) + ": " + print(t));
}

TermPtr derOf(TermPtr m) { return mkApp(mkAbs("x", mkVar("x")), std::move(m)); }

TermPtr cbn(const TermPtr& t) {
  switch (t->kind) {
    case Kind::Var:
    case Kind::Hole:
      return t;
    case Kind::Abs:
      return mkAbs(t->name, cbn(t->sub0));
    case Kind::App:
      return mkApp(cbn(t->sub0), mkBang(cbn(t->sub1)));
    case Kind::Op: {
      std::vector<TermPtr> as;
      as.reserve(t->args.size());
      for (const auto& a : t->args) as.push_back(cbn(a));
      return mkOp(t->name, std::move(as));
    }
    case Kind::Bang:
      reject("bang constructor in CbN translation input", t);
  }
  reject("bad term", t);
}

TermPtr cbv(const TermPtr& t) {
  switch (t->kind) {
    case Kind::Var:
      return mkBang(t);
    case Kind::Hole:
      return t;
    case Kind::Abs:
      return mkBang(mkAbs(t->name, cbv(t->sub0)));
    case Kind::App: {
      TermPtr f = cbv(t->sub0);
      TermPtr a = cbv(t->sub1);
      if (f->kind == Kind::Bang) return mkApp(f->sub0, a);
      return mkApp(derOf(f), a);
    }
    case Kind::Op: {
      std::vector<TermPtr> as;
      as.reserve(t->args.size());
      for (const auto& a : t->args) as.push_back(cbv(a));
      return mkOp(t->name, std::move(as));
    }
    case Kind::Bang:
      reject("bang constructor in CbV translation input", t);
  }
  reject("bad term", t);
}

}  // namespace

TermPtr cbnTranslate(const TermPtr& t) { return cbn(t); }
TermPtr cbvTranslate(const TermPtr& t) { return cbv(t); }

TermPtr translateContext(const TermPtr& c, Calc mode) {
  if (c->holes != 1) throw std::invalid_argument("context must have exactly one hole");
  TermPtr result = mode == Calc::CbN ? cbn(c) : cbv(c);
  return result;
}

namespace {

bool isDerTerm(const TermPtr& t) {
  return t->kind == Kind::Abs && t->sub0->kind == Kind::Var && t->sub0->name == t->name;
}

bool inCbnImage(const TermPtr& t) {
  switch (t->kind) {
    case Kind::Var:
      return true;
    case Kind::Abs:
      return inCbnImage(t->sub0);
    case Kind::App:
      return t->sub1->kind == Kind::Bang && inCbnImage(t->sub0) && inCbnImage(t->sub1->sub0);
    case Kind::Op:
      for (const auto& a : t->args) {
        if (!inCbnImage(a)) return false;
      }
      return true;
    default:
      return false;
  }
}

bool inCbvImage(const TermPtr& t);

bool inCbvValueImage(const TermPtr& t) {
  if (t->kind == Kind::Var) return true;
  if (t->kind == Kind::Abs) return inCbvImage(t->sub0);
  return false;
}

bool inCbvImage(const TermPtr& t) {
  switch (t->kind) {
    case Kind::Bang:
      return inCbvValueImage(t->sub0);
    case Kind::App: {
      const TermPtr& f = t->sub0;
      // (der M) N — der is literally \x.x and is not itself in the grammars
      if (f->kind == Kind::App && isDerTerm(f->sub0)) {
        return inCbvImage(f->sub1) && inCbvImage(t->sub1);
      }
      return inCbvValueImage(f) && inCbvImage(t->sub1);
    }
    case Kind::Op:
      for (const auto& a : t->args) {
        if (!inCbvImage(a)) return false;
      }
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string imageTagName(Image::Tag t) {
  switch (t) {
    case Image::Tag::CbnImage: return "cbn-image";
    case Image::Tag::CbvImage: return "cbv-image";
    case Image::Tag::CbvValueImage: return "cbv-value-image";
    case Image::Tag::Outside: return "outside";
  }
  return "?";
}

Image inImage(const TermPtr& t) {
  Image img;
  img.cbn = inCbnImage(t);
  img.cbv = inCbvImage(t);
  img.cbvValue = inCbvValueImage(t);
  return img;
}

TermPtr cbnInverse(const TermPtr& t) {
  switch (t->kind) {
    case Kind::Var:
      return t;
    case Kind::Abs:
      return mkAbs(t->name, cbnInverse(t->sub0));
    case Kind::App:
      if (t->sub1->kind != Kind::Bang) reject("not in the CbN image", t);
      return mkApp(cbnInverse(t->sub0), cbnInverse(t->sub1->sub0));
    case Kind::Op: {
      std::vector<TermPtr> as;
      as.reserve(t->args.size());
      for (const auto& a : t->args) as.push_back(cbnInverse(a));
      return mkOp(t->name, std::move(as));
    }
    default:
      reject("not in the CbN image", t);
  }
}

namespace {

TermPtr forgetM(const TermPtr& t);

TermPtr forgetU(const TermPtr& t) {
  if (t->kind == Kind::Var) return t;
  if (t->kind == Kind::Abs && inCbvImage(t->sub0)) return mkAbs(t->name, forgetM(t->sub0));
  reject("outside the CbV value image", t);
}

TermPtr forgetM(const TermPtr& t) {
  switch (t->kind) {
    case Kind::Bang:
      return forgetU(t->sub0);
    case Kind::App: {
      const TermPtr& f = t->sub0;
      if (f->kind == Kind::App && isDerTerm(f->sub0) && inCbvImage(f->sub1)) {
        return mkApp(forgetM(f->sub1), forgetM(t->sub1));
      }
      return mkApp(forgetU(f), forgetM(t->sub1));
    }
    case Kind::Op: {
      std::vector<TermPtr> as;
      as.reserve(t->args.size());
      for (const auto& a : t->args) as.push_back(forgetM(a));
      return mkOp(t->name, std::move(as));
    }
    default:
      reject("outside the CbV image", t);
  }
}

}  // namespace

TermPtr forgetful(const TermPtr& t) {
  Image img = inImage(t);
  if (img.cbv) return forgetM(t);
  if (img.cbvValue) return forgetU(t);
  reject("outside the CbV image", t);
}

}  // namespace bang
