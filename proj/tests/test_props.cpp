#include <doctest.h>

#include "bang/parse.hpp"
#include "bang/props.hpp"
#include "bang/translate.hpp"

using namespace bang;

namespace {
TermPtr T(const char* s) { return parse(s); }
}  // namespace

TEST_CASE("exhaustive generation covers the documented size-2 corpus") {
  GenSpec spec = GenSpec::exhaustive(2, Profile::bang(), false, 1);
  auto ts = genTerms(spec);
  std::set<std::string> got;
  for (const auto& t : ts) got.insert(canonicalKey(t));
  std::set<std::string> want{canonicalKey(T("x")), canonicalKey(T("!x")),
                             canonicalKey(T("\\a.a")), canonicalKey(T("\\a.x"))};
  CHECK(got == want);
  CHECK(ts.size() == 4);
}

TEST_CASE("exhaustive generation is duplicate-free and size-bounded") {
  GenSpec spec = GenSpec::exhaustive(5, Profile::bang({"oplus"}), true);
  auto ts = genTerms(spec);
  std::set<std::string> keys;
  for (const auto& t : ts) {
    CHECK(t->size <= 5);
    CHECK(validate(t, spec.profile).empty());
    CHECK(keys.insert(canonicalKey(t)).second);
  }
  // lambda profiles contain no bang nodes
  for (const auto& t : genTerms(GenSpec::exhaustive(5, Profile::cbn({"oplus"}), true))) {
    CHECK(validate(t, Profile::cbn({"oplus"})).empty());
  }
}

TEST_CASE("size-1 exhaustive corpus is exactly the pool") {
  auto ts = genTerms(GenSpec::exhaustive(1, Profile::bang(), false, 2));
  REQUIRE(ts.size() == 2);
  CHECK(print(ts[0]) == "x");
  CHECK(print(ts[1]) == "y");
}

TEST_CASE("random generation is reproducible") {
  GenSpec spec = GenSpec::random(100, 8, 42, Profile::bang({"oplus"}), true);
  auto a = genTerms(spec);
  auto b = genTerms(spec);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(print(a[i]) == print(b[i]));
  GenSpec other = spec;
  other.seed = 43;
  auto c = genTerms(other);
  bool different = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (print(a[i]) != print(c[i])) different = true;
  }
  CHECK(different);
}

TEST_CASE("factorization witness on known cases") {
  Profile p = Profile::bang();
  // single least-level step, empty suffix
  auto w1 = factorizationWitness(T("x !((\\x.x) !z)"), T("x !z"), p, 10);
  CHECK(w1.status == WitnessStatus::Found);
  CHECK(w1.llPrefix.size() == 1);
  CHECK(w1.internalSuffix.empty());
  // trivial witness
  auto w2 = factorizationWitness(T("x"), T("x"), p, 10);
  CHECK(w2.status == WitnessStatus::Found);
  CHECK(w2.llPrefix.empty());
  CHECK(w2.internalSuffix.empty());
  // (\z.R)!R -> (\z.z)!z: the target is alpha-equal to R itself, reached by
  // a two-step ll prefix with an empty internal suffix
  TermPtr peak = T("(\\z.(\\x.x) !z) !((\\x.x) !z)");
  auto w3 = factorizationWitness(peak, T("(\\z.z) !z"), p, 10);
  CHECK(w3.status == WitnessStatus::Found);
  CHECK(w3.llPrefix.size() == 2);
  CHECK(w3.internalSuffix.empty());
  // a target only reachable inside the box: empty prefix, one internal step
  auto w3b = factorizationWitness(peak, T("(\\z.(\\x.x) !z) !z"), p, 10);
  CHECK(w3b.status == WitnessStatus::Found);
  CHECK(w3b.llPrefix.empty());
  REQUIRE(w3b.internalSuffix.size() == 1);
  CHECK(w3b.internalSuffix[0].internal);
  // unreachable target in a complete graph
  auto w4 = factorizationWitness(T("x"), T("y"), p, 10);
  CHECK(w4.status == WitnessStatus::NotFound);
}

TEST_CASE("factorization suite on a small pure corpus") {
  GenSpec spec = GenSpec::exhaustive(5, Profile::bang());
  CheckReport r = runSuite(Suite::Factorization, spec, 25, 500);
  CHECK(r.failures.empty());
  CHECK(r.casesRun > 0);
  CHECK(r.inconclusive == 0);
}

TEST_CASE("completeness suite on a small corpus") {
  CheckReport r = runSuite(Suite::Completeness, GenSpec::exhaustive(5, Profile::bang()), 25, 500);
  CHECK(r.failures.empty());
}

TEST_CASE("good least-level suite on a small oplus corpus") {
  CheckReport r = runSuite(Suite::GoodLeastLevel,
                           GenSpec::exhaustive(5, Profile::bang({"oplus"}), true), 10, 200);
  CHECK(r.failures.empty());
}

TEST_CASE("simulation suites on small corpora") {
  CheckReport n = runSuite(Suite::SimulationCbN,
                           GenSpec::exhaustive(5, Profile::cbn({"oplus"}), true), 10, 200);
  CHECK(n.failures.empty());
  CheckReport v = runSuite(Suite::SimulationCbV,
                           GenSpec::exhaustive(5, Profile::cbv({"oplus"}), true), 10, 200);
  CHECK(v.failures.empty());
}

TEST_CASE("merge-split suite on a small corpus") {
  CheckReport r = runSuite(Suite::MergeSplit, GenSpec::exhaustive(4, Profile::bang()), 25, 500);
  CHECK(r.failures.empty());
}

TEST_CASE("suite/profile compatibility is enforced") {
  CHECK_THROWS_AS(runSuite(Suite::SimulationCbN, GenSpec::exhaustive(3, Profile::bang()), 5, 50),
                  std::invalid_argument);
  CHECK_THROWS_AS(runSuite(Suite::MergeSplit, GenSpec::exhaustive(3, Profile::cbn()), 5, 50),
                  std::invalid_argument);
  CHECK_THROWS_AS(runSuite(Suite::ModularTest, GenSpec::exhaustive(3, Profile::bang()), 5, 50),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      runSuite(Suite::QuasiDiamondLlLo, GenSpec::exhaustive(3, Profile::cbv()), 5, 50),
      std::invalid_argument);
}

TEST_CASE("reports are reproducible and machine-readable") {
  GenSpec spec = GenSpec::exhaustive(4, Profile::bang());
  CheckReport a = runSuite(Suite::QuasiDiamond, spec, 10, 100);
  CheckReport b = runSuite(Suite::QuasiDiamond, spec, 10, 100);
  CHECK(formatReport(a) == formatReport(b));
  CHECK(formatReport(a).rfind("[suite] quasi-diamond", 0) == 0);
}

TEST_CASE("suites hold on deep random corpora") {
  // size <= 12 reaches duplication and divergence patterns that the
  // exhaustive sizes cannot fit
  CheckReport f = runSuite(Suite::Factorization,
                           GenSpec::random(1500, 16, 1, Profile::bang()), 25, 500);
  CHECK(f.failures.empty());
  CHECK(f.casesRun > 2000);
  CheckReport g = runSuite(Suite::GoodLeastLevel,
                           GenSpec::random(1500, 14, 2, Profile::bang({"oplus"}), true), 15, 300);
  CHECK(g.failures.empty());
  // exhaustive terms of size <= 7 cannot hold two least-level redexes, so the
  // random corpora are what give the diamond checks real peaks
  CheckReport q = runSuite(Suite::QuasiDiamond,
                           GenSpec::random(1500, 14, 3, Profile::bang()), 10, 200);
  CHECK(q.failures.empty());
  CHECK(q.casesRun > 100);
  CheckReport u = runSuite(Suite::QuasiDiamondLlLo,
                           GenSpec::random(1500, 14, 4, Profile::cbn()), 10, 200);
  CHECK(u.failures.empty());
  CHECK(u.casesRun > 100);
  CheckReport m = runSuite(Suite::MergeSplit,
                           GenSpec::random(800, 12, 5, Profile::bang()), 25, 500);
  CHECK(m.failures.empty());
}

TEST_CASE("factorization witnesses for the paper's deep terms") {
  Profile p = Profile::bang();
  // every reachable target of (\z.R)!R factorizes
  TermPtr t = T("(\\z.(\\x.x) !z) !((\\x.x) !z)");
  ReductionGraph g = reachableGraph(t, p, 25, 500);
  REQUIRE(!g.truncated);
  CHECK(g.nodes.size() >= 5);
  for (const auto& u : g.nodes) {
    CAPTURE(print(u));
    CHECK(factorizationWitness(t, u, p, 25).status == WitnessStatus::Found);
  }
  // Delta !Delta reaches only itself, trivially factorized
  TermPtr omega = T("(\\x.x !x) !(\\x.x !x)");
  CHECK(factorizationWitness(omega, omega, p, 25).status == WitnessStatus::Found);
  // an unreachable target under exhausted fuel is inconclusive, not refuted
  TermPtr deep = T("(\\x.x !x) !((\\y.y !y) !(\\z.z))");
  auto w = factorizationWitness(deep, T("x"), p, 1, 2);
  CHECK(w.status == WitnessStatus::Inconclusive);
}

TEST_CASE("quasi-diamond peak of (\\z.R)!R joins in one step") {
  Profile p = Profile::bang();
  TermPtr t = T("(\\z.(\\x.x) !z) !((\\x.x) !z)");
  auto ll = successors(t, p, StepFilter::leastLevel());
  REQUIRE(ll.size() == 2);
  bool joined = false;
  for (const auto& a : successors(ll[0].to, p, StepFilter::leastLevel())) {
    for (const auto& b : successors(ll[1].to, p, StepFilter::leastLevel())) {
      if (alphaEq(a.to, b.to)) joined = true;
    }
  }
  CHECK(joined);
}

TEST_CASE("failure records carry the witness trace") {
  // fabricate a failing suite by checking quasi-diamond of full reduction via
  // a report with a seeded failure: instead, check the formatting path using
  // an actual failure object
  CheckReport r;
  r.suite = Suite::Factorization;
  r.suiteLabel = "demo";
  r.failures.push_back({T("x"), "detail text", "0: a --!beta@0--> b\n"});
  std::string text = formatReport(r);
  CHECK(text.find("[failure] input=x detail=detail text") != std::string::npos);
  CHECK(text.find("  0: a") != std::string::npos);
}
