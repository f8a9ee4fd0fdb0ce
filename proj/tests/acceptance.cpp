// Acceptance suite: runs every property check at its pinned corpus size,
// fuel and cap, and prints one pass/fail line per criterion.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bang/parse.hpp"
#include "bang/props.hpp"
#include "bang/redex.hpp"
#include "bang/reduce.hpp"
#include "bang/translate.hpp"

using namespace bang;

namespace {

int failures = 0;

void report(int index, const std::string& what, bool pass, const std::string& detail = "") {
  std::printf("[%2d] %-58s %s\n", index, what.c_str(), pass ? "PASS" : "FAIL");
  if (!pass) {
    ++failures;
    if (!detail.empty()) std::printf("%s\n", detail.c_str());
  }
}

bool suitePasses(Suite s, const GenSpec& spec, std::size_t fuel, std::size_t cap,
                 std::string& detail, std::size_t* inconclusive = nullptr) {
  CheckReport r = runSuite(s, spec, fuel, cap);
  if (inconclusive) *inconclusive = r.inconclusive;
  if (!r.failures.empty()) {
    std::ostringstream os;
    os << formatReport(r);
    detail = os.str();
    return false;
  }
  return true;
}

TermPtr T(const char* s) { return parse(s); }

bool expectTrace(const ReduceOutcome& o, const std::string& want, std::string& detail) {
  std::string got = formatTrace(o.trace);
  if (got != want) {
    detail = "expected trace:\n" + want + "got:\n" + got;
    return false;
  }
  return true;
}

}  // namespace

int main() {
  std::string detail;

  // 1. least-level factorization of !beta, pure bang calculus
  {
    GenSpec spec = GenSpec::exhaustive(7, Profile::bang());
    bool ok = suitePasses(Suite::Factorization, spec, 25, 500, detail);
    report(1, "factorization bang pure, size<=7, fuel=25, cap=500", ok, detail);
  }

  // 2. factorization with oplus, in the bang calculus and via translation
  {
    bool ok = true;
    std::string all;
    for (const Profile& p :
         {Profile::bang({"oplus"}), Profile::cbn({"oplus"}), Profile::cbv({"oplus"})}) {
      GenSpec spec = GenSpec::exhaustive(6, p, true);
      std::string d;
      if (!suitePasses(Suite::Factorization, spec, 25, 500, d)) {
        ok = false;
        all += d;
      }
    }
    report(2, "factorization bang+oplus, cbn+oplus, cbv+oplus, size<=6", ok, all);
  }

  // 3. simulation, exhaustive size<=6 plus 5000 random terms of size<=12
  {
    bool ok = true;
    std::string all;
    for (Suite s : {Suite::SimulationCbN, Suite::SimulationCbV}) {
      Profile p = s == Suite::SimulationCbN ? Profile::cbn() : Profile::cbv();
      std::string d;
      if (!suitePasses(s, GenSpec::exhaustive(6, p), 10, 200, d)) {
        ok = false;
        all += d;
      }
      if (!suitePasses(s, GenSpec::random(5000, 12, 42, p), 10, 200, d)) {
        ok = false;
        all += d;
      }
    }
    report(3, "simulation CbN/CbV, size<=6 exhaustive + 5000 random", ok, all);
  }

  // 4. normal-form and level preservation on the same corpora
  {
    bool ok = true;
    std::string all;
    for (Suite s : {Suite::NormalFormPreservation, Suite::LevelPreservation}) {
      std::string d;
      if (!suitePasses(s, GenSpec::exhaustive(6, Profile::cbn()), 10, 200, d)) {
        ok = false;
        all += d;
      }
      if (!suitePasses(s, GenSpec::random(5000, 12, 42, Profile::cbn()), 10, 200, d)) {
        ok = false;
        all += d;
      }
    }
    report(4, "normal-form and level preservation, same corpora", ok, all);
  }

  // 5. good least-level: monotonicity, internal invariance, persistence
  {
    bool ok = true;
    std::string all;
    std::string d;
    if (!suitePasses(Suite::GoodLeastLevel, GenSpec::exhaustive(7, Profile::bang()), 25, 500,
                     d)) {
      ok = false;
      all += d;
    }
    for (const Profile& p :
         {Profile::bang({"oplus"}), Profile::cbn({"oplus"}), Profile::cbv({"oplus"})}) {
      if (!suitePasses(Suite::GoodLeastLevel, GenSpec::exhaustive(7, p, true), 25, 500, d)) {
        ok = false;
        all += d;
      }
    }
    report(5, "good least-level for !b, !b+oplus, b+oplus, bv+oplus", ok, all);
  }

  // 6. quasi-diamond of least-level !beta, and of ll union lo for CbN beta
  {
    bool ok = true;
    std::string all;
    std::string d;
    if (!suitePasses(Suite::QuasiDiamond, GenSpec::exhaustive(7, Profile::bang()), 10, 200, d)) {
      ok = false;
      all += d;
    }
    if (!suitePasses(Suite::QuasiDiamondLlLo, GenSpec::exhaustive(7, Profile::cbn()), 10, 200,
                     d)) {
      ok = false;
      all += d;
    }
    report(6, "quasi-diamond: ll(!beta) and ll-union-lo (CbN beta)", ok, all);
  }

  // 7. modular test for oplus: substitutivity, root linear swap, Roots
  {
    GenSpec spec = GenSpec::exhaustive(6, Profile::bang({"oplus"}), true);
    bool ok = suitePasses(Suite::ModularTest, spec, 25, 500, detail);
    report(7, "modular test for oplus, size<=6", ok, detail);
  }

  // 8. merge/split lemmas and the macro sandwich
  {
    GenSpec spec = GenSpec::exhaustive(6, Profile::bang());
    bool ok = suitePasses(Suite::MergeSplit, spec, 25, 500, detail);
    report(8, "merge/split and macro sandwich, bang size<=6", ok, detail);
  }

  // 9. golden traces, bit-exact
  {
    bool ok = true;
    std::string all;

    // CbN: ((\z.z)x)y translates and reduces to x !y in one !beta step
    TermPtr t = T("((\\z.z) x) y");
    TermPtr tn = cbnTranslate(t);
    ok &= print(tn) == "(\\z.z) !x !y";
    ReduceOutcome on = reduce(tn, Profile::bang(), StrategyId::LeastLevelDeterministic, 10);
    std::string d;
    if (!expectTrace(on, "0: (\\z.z) !x !y --!beta@0,ll,surf--> x !y\n", d)) {
      ok = false;
      all += d;
    }
    ok &= on.normalForm && on.trace.size() == 1;
    ok &= print(cbnInverse(on.term)) == "x y";

    // CbV route: one !beta step then one d step
    TermPtr tv = cbvTranslate(t);
    ok &= print(tv) == "(\\x.x) ((\\z.!z) !x) !y";
    ReduceOutcome ov = reduce(tv, Profile::bang(), StrategyId::LeastLevelDeterministic, 10);
    if (!expectTrace(ov,
                     "0: (\\x.x) ((\\z.!z) !x) !y --!beta@0,ll,surf--> (\\x.x) !x !y\n"
                     "1: (\\x.x) !x !y --!beta@0,ll,surf--> x !y\n",
                     d)) {
      ok = false;
      all += d;
    }
    ok &= ov.normalForm && ov.trace.size() == 2;

    // divergence of Delta !Delta with exactly one distinct state
    ReduceOutcome od = reduce(T("(\\x.x !x) !(\\x.x !x)"), Profile::bang(),
                              StrategyId::LeastLevelDeterministic, 50);
    ok &= !od.normalForm && od.cycleDetected && od.distinctStates == 1;
    if (!expectTrace(od,
                     "0: (\\x.x !x) !(\\x.x !x) --!beta@0,ll,surf--> (\\x.x !x) !(\\x.x !x)\n",
                     d)) {
      ok = false;
      all += d;
    }

    // least levels of the worked example: x!R, R!R, oplus(x,y)!R
    ok &= leastLevel(T("x !((\\x.x) !z)"), Profile::bang()).value == 1;
    ok &= leastLevel(T("((\\x.x) !z) !((\\x.x) !z)"), Profile::bang()).value == 0;
    ok &= leastLevel(T("#oplus(x, y) !((\\x.x) !z)"), Profile::bang({"oplus"})).value == 0;

    // leftmost-outermost asymmetry: (x oplus y)(II) fires oplus under
    // beta+oplus but II under beta alone
    TermPtr asym = T("#oplus(x, y) ((\\x.x) (\\x.x))");
    auto withOp = successors(asym, Profile::cbn({"oplus"}), StepFilter::leftmostOutermost());
    ok &= withOp.size() == 2 && alphaEq(withOp[0].to, T("x ((\\x.x) (\\x.x))")) &&
          alphaEq(withOp[1].to, T("y ((\\x.x) (\\x.x))"));
    auto pure = successors(asym, Profile::cbn(), StepFilter::leftmostOutermost());
    ok &= pure.size() == 1 && alphaEq(pure[0].to, T("#oplus(x, y) (\\x.x)"));

    report(9, "golden traces and examples, bit-exact", ok, all);
  }

  // 10. oracle agreement: inductive least level; translation left inverses
  {
    bool ok = true;
    std::string all;
    std::string d;
    if (!suitePasses(Suite::LLInductiveAgreement, GenSpec::exhaustive(7, Profile::bang()), 10,
                     200, d)) {
      ok = false;
      all += d;
    }
    if (!suitePasses(Suite::LLInductiveAgreement,
                     GenSpec::exhaustive(6, Profile::bang({"oplus"}), true), 10, 200, d)) {
      ok = false;
      all += d;
    }
    if (!suitePasses(Suite::TranslationInverses, GenSpec::exhaustive(6, Profile::cbn()), 10, 200,
                     d)) {
      ok = false;
      all += d;
    }
    if (!suitePasses(Suite::TranslationInverses, GenSpec::random(5000, 12, 42, Profile::cbn()),
                     10, 200, d)) {
      ok = false;
      all += d;
    }
    report(10, "oracle agreement: ll-inductive, cbn/cbv left inverses", ok, all);
  }

  if (failures) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
