#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bang {

// Unified syntax tree for lambda-terms and bang-terms. Bang is a dedicated
// constructor (not an operator node) so that level functions and der-redex
// recognition stay structural. A term with Hole nodes is a context; plain
// terms contain none.
enum class Kind { Var, Abs, App, Bang, Op, Hole };

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
  Kind kind;
  std::string name;           // Var: name, Abs: binder, Op: operator id
  TermPtr sub0, sub1;         // Abs: body / App: fun, arg / Bang: body
  std::vector<TermPtr> args;  // Op arguments
  std::size_t size = 1;       // constructor count
  std::size_t holes = 0;      // Hole occurrences below (inclusive)

  Term(Kind k, std::string n, TermPtr a, TermPtr b, std::vector<TermPtr> as);
};

TermPtr mkVar(std::string name);
TermPtr mkAbs(std::string binder, TermPtr body);
TermPtr mkApp(TermPtr fun, TermPtr arg);
TermPtr mkBang(TermPtr body);
TermPtr mkOp(std::string op, std::vector<TermPtr> args);
TermPtr mkHole();

inline bool isHoleFree(const TermPtr& t) { return t->holes == 0; }

std::set<std::string> freeVars(const TermPtr& t);
std::size_t freeOccurrences(const TermPtr& t, const std::string& x);

// Capture-avoiding substitution t{s/x}. Binder renaming is deterministic
// (smallest unused "base_k" suffix), so equal inputs give identical output.
TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& s);

// Plug a term into the hole of a context. Plain replacement: plugging may
// capture free variables, as contextual closure requires.
TermPtr plug(const TermPtr& ctx, const TermPtr& t);

// Alpha-equivalence, decided on canonical forms.
bool alphaEq(const TermPtr& t, const TermPtr& s);

// Nameless canonical form: binders renamed to _0, _1, ... by depth.
// Two terms are alpha-equivalent iff their keys coincide.
struct CanonicalTerm {
  TermPtr term;
  std::string key;
};
CanonicalTerm toCanonical(const TermPtr& t);
TermPtr fromCanonical(const CanonicalTerm& c);
std::string canonicalKey(const TermPtr& t);

// ---------------------------------------------------------------------------
// Operators and calculus profiles

using Contraction = std::function<TermPtr(const std::vector<TermPtr>&)>;

struct OperatorSig {
  std::string name;
  std::size_t arity = 0;
  std::vector<Contraction> contractions;  // rewrite alternatives at the root
};

class OperatorRegistry {
public:
  void add(OperatorSig sig);
  const OperatorSig* find(const std::string& name) const;
  std::vector<std::string> names() const;

  // Registry with the shipped operators: oplus/2 with project-left and
  // project-right contractions.
  static const OperatorRegistry& standard();

private:
  std::map<std::string, OperatorSig> table_;
};

enum class Calc { CbN, CbV, Bang };

std::string calcName(Calc c);

// Rule set + level function + validity predicate. CbN/CbV reject the Bang
// constructor; the rule for the base calculus (beta, betav or !beta) is
// always active, operator rules only when listed in `ops`.
struct Profile {
  Calc calc = Calc::Bang;
  std::vector<std::string> ops;
  const OperatorRegistry* registry = &OperatorRegistry::standard();

  static Profile bang(std::vector<std::string> ops = {});
  static Profile cbn(std::vector<std::string> ops = {});
  static Profile cbv(std::vector<std::string> ops = {});

  bool opActive(const std::string& name) const;
  std::string label() const;  // e.g. "bang+oplus"
};

struct Violation {
  std::string path;  // location of the offending subterm
  std::string message;
};

// Grammar membership for plain terms: no holes, no bang outside the bang
// calculus, operators registered with matching arity.
std::vector<Violation> validate(const TermPtr& t, const Profile& p);
// Same checks for a context: exactly one hole.
std::vector<Violation> validateContext(const TermPtr& c, const Profile& p);

}  // namespace bang
